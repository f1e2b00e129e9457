#pragma once

#include <Eigen/Dense>
#include <algorithm>

#include "fbl/common.hpp"

namespace fbl {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RVec = Eigen::RowVectorXcd;

// Largest singular value; 0 for empty matrices.
inline double operator_norm(const Mat& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  return m.jacobiSvd().singularValues()(0);
}

inline int svd_rank(const Mat& m, double rtol) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::JacobiSVD<Mat> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) <= 0.0) return 0;
  int r = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > rtol * sv(0)) ++r;
  return r;
}

// Orthonormal basis of the column space.
inline Mat orth(const Mat& m, double rtol) {
  if (m.rows() == 0 || m.cols() == 0) return Mat(m.rows(), 0);
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  int r = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(0) > 0.0 && sv(i) > rtol * sv(0)) ++r;
  return svd.matrixU().leftCols(r);
}

// Orthonormal basis of the (right) null space.
inline Mat nullspace(const Mat& m, double rtol) {
  if (m.cols() == 0) return Mat(0, 0);
  if (m.rows() == 0) return Mat::Identity(m.cols(), m.cols());
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  int r = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(0) > 0.0 && sv(i) > rtol * sv(0)) ++r;
  return svd.matrixV().rightCols(m.cols() - r);
}

// Least-squares solve; optionally reports the residual norm.
inline Vec lstsq(const Mat& a, const Vec& b, double* residual = nullptr) {
  if (a.cols() == 0) {
    if (residual) *residual = b.norm();
    return Vec(0);
  }
  Vec x = a.completeOrthogonalDecomposition().solve(b);
  if (residual) *residual = (a * x - b).norm();
  return x;
}

inline bool in_span(const Mat& basis, const Vec& x, double rtol) {
  double res = 0.0;
  lstsq(basis, x, &res);
  return res <= rtol * std::max(1.0, x.norm());
}

inline bool span_subset(const Mat& a, const Mat& b, double rtol) {
  for (int c = 0; c < a.cols(); ++c)
    if (!in_span(b, a.col(c), rtol)) return false;
  return true;
}

inline bool span_equal(const Mat& a, const Mat& b, double rtol) {
  return svd_rank(a, rtol) == svd_rank(b, rtol) && span_subset(a, b, rtol) &&
         span_subset(b, a, rtol);
}

// Factor a Hermitian positive definite Gram matrix as G = R^H R using a
// pivoted Cholesky (LDLT). Coordinates v of a vector map to orthonormal
// coordinates R v. Throws degenerate_gram when G is not positive definite.
inline Mat gram_onb(const Mat& g, double rtol) {
  const int n = static_cast<int>(g.rows());
  if (n == 0) return Mat(0, 0);
  if ((g - g.adjoint()).cwiseAbs().maxCoeff() > 1e-8 * (1.0 + g.cwiseAbs().maxCoeff()))
    throw Error(errc::degenerate_gram, "gram matrix is not Hermitian");
  Eigen::LDLT<Mat> ldlt(g);
  Eigen::VectorXd d = ldlt.vectorD().real();
  double dmax = d.maxCoeff();
  if (!(dmax > 0.0) || d.minCoeff() <= rtol * dmax)
    throw Error(errc::degenerate_gram, "gram matrix is not positive definite");
  Mat l = ldlt.matrixL();
  Mat r = d.cwiseSqrt().asDiagonal() * l.adjoint();
  // undo the pivoting: G = P^T L D L^H P
  r = r * ldlt.transpositionsP();
  return r;
}

inline Mat hstack(const Mat& a, const Mat& b) {
  if (a.cols() == 0) return b;
  if (b.cols() == 0) return a;
  Mat out(a.rows(), a.cols() + b.cols());
  out << a, b;
  return out;
}

}  // namespace fbl
