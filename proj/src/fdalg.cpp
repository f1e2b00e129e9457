#include "fbl/fdalg.hpp"

#include <algorithm>
#include <string>

#include "fbl/rng.hpp"

namespace fbl {

Vec FdCStar::mul(const Vec& a, const Vec& b) const {
  Vec out = Vec::Zero(dim);
  for (int i = 0; i < dim; ++i) {
    if (a(i) == cd(0.0)) continue;
    for (int j = 0; j < dim; ++j) {
      if (b(j) == cd(0.0)) continue;
      out += a(i) * b(j) * mul_tensor[i][j];
    }
  }
  return out;
}

Vec FdCStar::star(const Vec& a) const { return star_mat * a.conjugate(); }

Mat FdCStar::left_mult(const Vec& a) const {
  Mat l = Mat::Zero(dim, dim);
  for (int j = 0; j < dim; ++j)
    for (int i = 0; i < dim; ++i)
      if (a(i) != cd(0.0)) l.col(j) += a(i) * mul_tensor[i][j];
  return l;
}

bool FdCStar::is_hermitian(const Vec& a, double tol) const {
  return dim == 0 || (a - star(a)).cwiseAbs().maxCoeff() <= tol * (1.0 + a.cwiseAbs().maxCoeff());
}

bool FdCStar::is_positive(const Vec& a, double tol) const {
  if (dim == 0) return true;
  if (!is_hermitian(a, 1e-8)) return false;
  Mat r = rep(a);
  Mat h = (r + r.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  double lo = es.eigenvalues().minCoeff();
  double hi = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
  return lo >= -tol * hi;
}

FdCStar build_algebra(const std::vector<std::vector<Vec>>& mul_tensor, const Mat& star_mat,
                      const Tolerances& tol) {
  FdCStar a;
  a.dim = static_cast<int>(mul_tensor.size());
  const int d = a.dim;
  if (static_cast<int>(star_mat.rows()) != d || static_cast<int>(star_mat.cols()) != d)
    throw Error(errc::parse_error, "star matrix has wrong shape");
  for (const auto& row : mul_tensor) {
    if (static_cast<int>(row.size()) != d)
      throw Error(errc::parse_error, "multiplication tensor has wrong shape");
    for (const Vec& v : row)
      if (static_cast<int>(v.size()) != d)
        throw Error(errc::parse_error, "multiplication tensor has wrong shape");
  }
  a.mul_tensor = mul_tensor;
  a.star_mat = star_mat;

  if (d == 0) {
    a.unit = Vec(0);
    a.phi = RVec(0);
    a.gram = Mat(0, 0);
    a.onb = Mat(0, 0);
    a.onb_inv = Mat(0, 0);
    return a;
  }

  const double scale = [&] {
    double m = 1.0;
    for (const auto& row : mul_tensor)
      for (const Vec& v : row) m = std::max(m, v.cwiseAbs().maxCoeff());
    return m;
  }();
  const double eps = tol.identity * scale * scale * d;

  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        Vec lhs = a.mul(a.mul(a.basis_vec(i), a.basis_vec(j)), a.basis_vec(k));
        Vec rhs = a.mul(a.basis_vec(i), a.mul(a.basis_vec(j), a.basis_vec(k)));
        if ((lhs - rhs).cwiseAbs().maxCoeff() > eps)
          throw Error(errc::not_associative,
                      "witness basis triple (" + std::to_string(i) + "," + std::to_string(j) +
                          "," + std::to_string(k) + ")");
      }

  // involutive
  Mat inv_check = star_mat * star_mat.conjugate();
  if ((inv_check - Mat::Identity(d, d)).cwiseAbs().maxCoeff() > eps)
    throw Error(errc::bad_involution, "star is not involutive");
  // anti-homomorphism on basis pairs
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Vec lhs = a.star(a.mul(a.basis_vec(i), a.basis_vec(j)));
      Vec rhs = a.mul(a.star(a.basis_vec(j)), a.star(a.basis_vec(i)));
      if ((lhs - rhs).cwiseAbs().maxCoeff() > eps)
        throw Error(errc::bad_involution,
                    "star not anti-multiplicative, witness (" + std::to_string(i) + "," +
                        std::to_string(j) + ")");
    }

  // unit: solve u e_j = e_j and e_j u = e_j as one least-squares system
  Mat sys(2 * d * d, d);
  Vec rhs(2 * d * d);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) {
      for (int i = 0; i < d; ++i) {
        sys(j * d + k, i) = a.mul_tensor[i][j](k);
        sys(d * d + j * d + k, i) = a.mul_tensor[j][i](k);
      }
      rhs(j * d + k) = (j == k) ? 1.0 : 0.0;
      rhs(d * d + j * d + k) = (j == k) ? 1.0 : 0.0;
    }
  double res = 0.0;
  a.unit = lstsq(sys, rhs, &res);
  if (res > 1e-7 * std::sqrt(static_cast<double>(d)))
    throw Error(errc::no_unit, "identity equations are inconsistent, residual " +
                                   std::to_string(res));

  // trace form
  a.phi = RVec(d);
  for (int i = 0; i < d; ++i) a.phi(i) = a.left_mult(a.basis_vec(i)).trace();
  a.gram = Mat(d, d);
  for (int i = 0; i < d; ++i) {
    Vec si = a.star(a.basis_vec(i));
    for (int j = 0; j < d; ++j) a.gram(i, j) = a.phi * a.mul(si, a.basis_vec(j));
  }
  if ((a.gram - a.gram.adjoint()).cwiseAbs().maxCoeff() > 1e-8 * (1.0 + a.gram.cwiseAbs().maxCoeff()))
    throw Error(errc::not_cstar, "trace form is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Mat> es((a.gram + a.gram.adjoint()) / 2.0);
  double lo = es.eigenvalues().minCoeff();
  double hi = es.eigenvalues().maxCoeff();
  if (!(hi > 0.0) || lo <= tol.rank * hi)
    throw Error(errc::not_cstar,
                "trace form is not positive definite (eigenvalue " + std::to_string(lo) + ")");
  a.onb = gram_onb(a.gram, tol.rank);
  a.onb_inv = a.onb.inverse();

  // C*-identity spot check on a small deterministic sample
  {
    Rng rng(1);
    for (int trial = 0; trial < 8; ++trial) {
      Vec x = rng.cgaussian_vector(d);
      double n2 = a.norm(a.mul(a.star(x), x));
      double n = a.norm(x);
      if (std::abs(n2 - n * n) > 1e-8 * (1.0 + n * n))
        throw Error(errc::not_cstar, "C*-identity fails on sampled element");
    }
  }
  return a;
}

namespace {

Mat saturate(const FdCStar& a, const Mat& gens, double rtol) {
  Mat basis = orth(gens, rtol);
  for (;;) {
    std::vector<Vec> next;
    for (int c = 0; c < basis.cols(); ++c) {
      Vec b = basis.col(c);
      next.push_back(a.star(b));
      for (int i = 0; i < a.dim; ++i) {
        next.push_back(a.mul(a.basis_vec(i), b));
        next.push_back(a.mul(b, a.basis_vec(i)));
      }
    }
    Mat cand(a.dim, basis.cols() + static_cast<int>(next.size()));
    cand.leftCols(basis.cols()) = basis;
    for (size_t k = 0; k < next.size(); ++k) cand.col(basis.cols() + static_cast<int>(k)) = next[k];
    Mat bigger = orth(cand, rtol);
    if (bigger.cols() == basis.cols()) return basis;
    basis = bigger;
  }
}

}  // namespace

AlgIdeal ideal_generated(const FdCStar& a, const Mat& gens, const Tolerances& tol) {
  AlgIdeal ideal;
  ideal.basis = saturate(a, gens, tol.rank);
  if (ideal.basis.cols() == 0) {
    ideal.support = Vec::Zero(a.dim);
    return ideal;
  }
  // h = sum_i b_i* b_i is positive with range equal to the ideal; the support
  // projection is the spectral projection onto that range.
  Vec h = Vec::Zero(a.dim);
  for (int c = 0; c < ideal.basis.cols(); ++c) {
    Vec b = ideal.basis.col(c);
    h += a.mul(a.star(b), b);
  }
  Mat hrep = a.rep(h);
  Eigen::SelfAdjointEigenSolver<Mat> es((hrep + hrep.adjoint()) / 2.0);
  Eigen::VectorXd vals = es.eigenvalues();
  double vmax = vals.cwiseAbs().maxCoeff();
  Mat qrep = Mat::Zero(a.dim, a.dim);
  for (int i = 0; i < vals.size(); ++i)
    if (vals(i) > tol.rank * vmax)
      qrep += es.eigenvectors().col(i) * es.eigenvectors().col(i).adjoint();
  // recover the coordinates of q from its representing matrix
  Mat sys(a.dim * a.dim, a.dim);
  for (int i = 0; i < a.dim; ++i)
    sys.col(i) = a.rep(a.basis_vec(i)).reshaped();
  double res = 0.0;
  ideal.support = lstsq(sys, Vec(qrep.reshaped()), &res);
  if (res > 1e-7 * a.dim)
    throw Error(errc::degenerate_gram, "support projection does not lie in the algebra");
  return ideal;
}

double quotient_norm(const FdCStar& a, const Vec& x, const AlgIdeal& ideal) {
  if (a.dim == 0) return 0.0;
  Vec rest = x - a.mul(x, ideal.support);
  return a.norm(rest);
}

FdCStar pointwise_algebra(int n) {
  std::vector<std::vector<Vec>> mul(n, std::vector<Vec>(n, Vec::Zero(n)));
  for (int i = 0; i < n; ++i) mul[i][i](i) = 1.0;
  return build_algebra(mul, Mat::Identity(n, n));
}

FdCStar full_matrix_algebra(int n) {
  const int d = n * n;
  auto idx = [n](int p, int q) { return p * n + q; };
  std::vector<std::vector<Vec>> mul(d, std::vector<Vec>(d, Vec::Zero(d)));
  Mat star = Mat::Zero(d, d);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s)
          if (q == r) mul[idx(p, q)][idx(r, s)](idx(p, s)) = 1.0;
      star(idx(q, p), idx(p, q)) = 1.0;
    }
  return build_algebra(mul, star);
}

}  // namespace fbl
