#pragma once

#include <vector>

#include "fbl/linalg.hpp"

namespace fbl {

// Finite-dimensional C*-algebra given by structure constants. The faithful
// representation used for norms is left multiplication on the algebra itself,
// orthonormalized for the trace form phi(a) = trace of left multiplication;
// this is isometric for the unique C*-norm.
//
// Conventions: mul_tensor[i][j] are the coordinates of e_i e_j. The
// involution acts as star(x) = star_mat * conj(x). The scalar product is
// <a,b> = phi(b* a), linear in the first argument, and gram(i,j) =
// phi(e_i* e_j), so <a,b> = b^H gram a.
struct FdCStar {
  int dim = 0;
  std::vector<std::vector<Vec>> mul_tensor;
  Mat star_mat;
  Vec unit;
  RVec phi;          // trace form as a functional on coordinates
  Mat gram;          // phi(e_i* e_j)
  Mat onb, onb_inv;  // gram = onb^H onb

  Vec mul(const Vec& a, const Vec& b) const;
  Vec star(const Vec& a) const;
  Mat left_mult(const Vec& a) const;
  // Matrix of left multiplication in the orthonormal basis of the trace
  // form; a *-representation, so adjoints are matrix adjoints.
  Mat rep(const Vec& a) const { return onb * left_mult(a) * onb_inv; }

  double norm(const Vec& a) const { return operator_norm(rep(a)); }
  bool is_hermitian(const Vec& a, double tol) const;
  bool is_positive(const Vec& a, double tol = 1e-9) const;

  Vec basis_vec(int i) const {
    Vec v = Vec::Zero(dim);
    v(i) = 1.0;
    return v;
  }
};

// Validates the structure constants and derives unit, trace form and
// orthonormalization. Throws Error with code not_associative, bad_involution,
// no_unit or not_cstar (each with a witness in the message).
FdCStar build_algebra(const std::vector<std::vector<Vec>>& mul_tensor, const Mat& star_mat,
                      const Tolerances& tol = {});

// *-closed two-sided ideal, stored as an orthonormal coordinate basis
// together with its support projection (the unit of the ideal, a central
// projection of the ambient algebra).
struct AlgIdeal {
  Mat basis;    // dim x r, orthonormal columns
  Vec support;  // coordinates of q

  int rank() const { return static_cast<int>(basis.cols()); }
};

// Smallest *-closed two-sided ideal containing the columns of gens, computed
// by saturating under multiplication by basis elements and star.
AlgIdeal ideal_generated(const FdCStar& a, const Mat& gens, const Tolerances& tol = {});

// C*-norm of a + I, computed as ||a (1 - q)|| with q the support projection.
double quotient_norm(const FdCStar& a, const Vec& x, const AlgIdeal& ideal);

// Ready-made algebras.
FdCStar pointwise_algebra(int n);              // C^n with pointwise product
FdCStar full_matrix_algebra(int n);            // M_n(C), basis e_{pq} row-major

}  // namespace fbl
