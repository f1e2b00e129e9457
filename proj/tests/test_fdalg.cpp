#include "doctest.h"
#include "fbl/fdalg.hpp"
#include "fbl/rng.hpp"

using namespace fbl;

namespace {

Vec coords(std::initializer_list<cd> xs) {
  Vec v(static_cast<int>(xs.size()));
  int i = 0;
  for (cd x : xs) v(i++) = x;
  return v;
}

// C[x]/(x^2) with x* = x: basis {1, x}
FdCStar::Vec dummy();  // silence unused warnings on some compilers

std::vector<std::vector<Vec>> nilpotent_mul() {
  std::vector<std::vector<Vec>> mul(2, std::vector<Vec>(2, Vec::Zero(2)));
  mul[0][0] = coords({1.0, 0.0});
  mul[0][1] = coords({0.0, 1.0});
  mul[1][0] = coords({0.0, 1.0});
  mul[1][1] = coords({0.0, 0.0});
  return mul;
}

}  // namespace

TEST_CASE("pointwise algebra C^2") {
  auto a = pointwise_algebra(2);
  CHECK(a.dim == 2);
  CHECK((a.unit - coords({1.0, 1.0})).norm() < 1e-12);
  CHECK(a.norm(coords({3.0, -1.0})) == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(a.is_positive(coords({1.0, 0.0})));
  CHECK(!a.is_positive(coords({1.0, -1.0})));
}

TEST_CASE("full matrix algebra M_2") {
  auto a = full_matrix_algebra(2);
  CHECK(a.dim == 4);
  // unit is the identity matrix e00 + e11
  CHECK((a.unit - coords({1.0, 0.0, 0.0, 1.0})).norm() < 1e-12);
  // [[0,2],[0,0]] has norm 2
  CHECK(a.norm(coords({0.0, 2.0, 0.0, 0.0})) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("nilpotent *-algebra is not C*") {
  bool threw = false;
  try {
    build_algebra(nilpotent_mul(), Mat::Identity(2, 2));
  } catch (const Error& e) {
    threw = true;
    CHECK(e.code() == errc::not_cstar);
  }
  CHECK(threw);
}

TEST_CASE("C*-identity and positivity on random elements") {
  auto m2 = full_matrix_algebra(2);
  auto c2 = pointwise_algebra(2);
  Rng rng(7);
  for (int t = 0; t < 100; ++t) {
    for (const FdCStar* a : {&m2, &c2}) {
      Vec x = rng.cgaussian_vector(a->dim);
      double n = a->norm(x);
      CHECK(std::abs(a->norm(a->mul(a->star(x), x)) - n * n) < 1e-10 * (1.0 + n * n));
      CHECK(a->is_positive(a->mul(a->star(x), x)));
    }
  }
}

TEST_CASE("norm is submultiplicative") {
  auto a = full_matrix_algebra(3);
  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    Vec x = rng.cgaussian_vector(a.dim);
    Vec y = rng.cgaussian_vector(a.dim);
    CHECK(a.norm(a.mul(x, y)) <= a.norm(x) * a.norm(y) + 1e-10);
  }
}

TEST_CASE("ideals and support projections") {
  SUBCASE("coordinate ideal of C^2") {
    auto a = pointwise_algebra(2);
    Mat gens(2, 1);
    gens.col(0) = coords({1.0, 0.0});
    auto ideal = ideal_generated(a, gens);
    CHECK(ideal.rank() == 1);
    CHECK((ideal.support - coords({1.0, 0.0})).norm() < 1e-10);
    CHECK(quotient_norm(a, coords({3.0, 1.0}), ideal) == doctest::Approx(1.0));
  }
  SUBCASE("M_2 is simple") {
    auto a = full_matrix_algebra(2);
    Mat gens(4, 1);
    gens.col(0) = coords({0.0, 1.0, 0.0, 0.0});
    auto ideal = ideal_generated(a, gens);
    CHECK(ideal.rank() == 4);
    CHECK((ideal.support - a.unit).norm() < 1e-9);
    CHECK(quotient_norm(a, coords({1.0, 0.0, 0.0, 0.0}), ideal) == doctest::Approx(0.0));
  }
  SUBCASE("zero generators give the zero ideal") {
    auto a = pointwise_algebra(3);
    auto ideal = ideal_generated(a, Mat::Zero(3, 1));
    CHECK(ideal.rank() == 0);
    CHECK(ideal.support.norm() < 1e-12);
    Vec x = coords({1.0, 2.0, -1.0});
    CHECK(quotient_norm(a, x, ideal) == doctest::Approx(a.norm(x)));
  }
  SUBCASE("support projection is central and acts as the ideal unit") {
    auto a = pointwise_algebra(4);
    Mat gens(4, 2);
    gens.col(0) = coords({1.0, 0.0, 0.0, 0.0});
    gens.col(1) = coords({0.0, cd(0.0, 1.0), 0.0, 0.0});
    auto ideal = ideal_generated(a, gens);
    CHECK(ideal.rank() == 2);
    for (int i = 0; i < a.dim; ++i) {
      Vec c = a.basis_vec(i);
      CHECK((a.mul(ideal.support, c) - a.mul(c, ideal.support)).norm() < 1e-10);
    }
    for (int c = 0; c < ideal.basis.cols(); ++c) {
      Vec b = ideal.basis.col(c);
      CHECK((a.mul(ideal.support, b) - b).norm() < 1e-9);
    }
  }
  SUBCASE("membership iff quotient norm vanishes") {
    auto a = full_matrix_algebra(2);
    Rng rng(3);
    Mat gens(4, 1);
    gens.col(0) = a.unit;
    auto full = ideal_generated(a, gens);
    for (int t = 0; t < 20; ++t) {
      Vec x = rng.cgaussian_vector(4);
      CHECK(quotient_norm(a, x, full) < 1e-10);
    }
  }
}

TEST_CASE("single structure-constant mutations of M_2 are detected") {
  auto base = full_matrix_algebra(2);
  Rng rng(0);
  int detected = 0;
  for (int t = 0; t < 20; ++t) {
    auto mul = base.mul_tensor;
    int i = rng.below(4), j = rng.below(4), k = rng.below(4);
    mul[i][j](k) += 0.1;
    try {
      build_algebra(mul, base.star_mat);
    } catch (const Error&) {
      ++detected;
    }
  }
  CHECK(detected == 20);
}
