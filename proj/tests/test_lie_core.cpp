#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sublab/lie.hpp"
#include "sublab/types.hpp"

using namespace sublab;

TEST_CASE("E basis indexing is lexicographic and round-trips") {
  std::size_t n = 5;
  CHECK(so_dim(n) == 10);
  std::size_t running = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      CHECK(e_index(n, i, j) == running);
      ++running;
      RationalMatrix e = e_matrix(n, i, j);
      CHECK(e.at(i, j) == 1);
      CHECK(e.at(j, i) == -1);
      RVec flat = flatten_skew(e);
      CHECK(flat[e_index(n, i, j)] == 1);
      CHECK(unflatten_skew(n, flat) == e);
    }
  CHECK(running == so_dim(n));
}

TEST_CASE("bracket is the matrix commutator with its identities") {
  std::size_t n = 4;
  RationalMatrix a = e_matrix(n, 0, 1);
  RationalMatrix b = e_matrix(n, 1, 2);
  RationalMatrix c = e_matrix(n, 0, 2);
  CHECK(bracket(a, b) == c);
  CHECK(bracket(b, a) == c * Rational(-1));
  CHECK(bracket(a, a).is_zero());

  // disjoint index pairs commute
  CHECK(bracket(e_matrix(n, 0, 1), e_matrix(n, 2, 3)).is_zero());

  // Jacobi on every basis triple of so(4) and so(5)
  for (std::size_t m : {4u, 5u}) {
    std::vector<RationalMatrix> basis;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) basis.push_back(e_matrix(m, i, j));
    for (std::size_t x = 0; x < basis.size(); ++x)
      for (std::size_t y = x + 1; y < basis.size(); ++y)
        for (std::size_t z = y + 1; z < basis.size(); ++z) {
          RationalMatrix jac = bracket(basis[x], bracket(basis[y], basis[z])) +
                               bracket(basis[y], bracket(basis[z], basis[x])) +
                               bracket(basis[z], bracket(basis[x], basis[y]));
          CHECK(jac.is_zero());
        }
  }
}

TEST_CASE("the bilinear form makes the E basis orthonormal") {
  std::size_t n = 6;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l) {
          Rational q = form_q(e_matrix(n, i, j), e_matrix(n, k, l));
          CHECK(q == ((i == k && j == l) ? Rational(1) : Rational(0)));
        }

  // form equals the dot product of flattened coordinates
  RationalMatrix x = e_matrix(n, 0, 1) * Rational(2) + e_matrix(n, 2, 5);
  RationalMatrix y = e_matrix(n, 0, 1) * Rational(1, 3) + e_matrix(n, 2, 5);
  CHECK(form_q(x, y) == dot(flatten_skew(x), flatten_skew(y)));
  CHECK(form_q(x, y) == Rational(5, 3));
}

TEST_CASE("form is invariant under the adjoint action") {
  std::size_t n = 5;
  std::vector<RationalMatrix> basis;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) basis.push_back(e_matrix(n, i, j));
  for (std::size_t x = 0; x < basis.size(); ++x)
    for (std::size_t y = 0; y < basis.size(); ++y)
      for (std::size_t z = y; z < basis.size(); ++z) {
        Rational lhs = form_q(bracket(basis[x], basis[y]), basis[z]);
        Rational rhs = form_q(basis[y], bracket(basis[x], basis[z]));
        CHECK(lhs + rhs == 0);
      }
}

TEST_CASE("constructed algebra dimensions match the classical formulas") {
  for (std::size_t n : {2u, 3u, 5u}) {
    CHECK(build_so(n + 2).dim() == (n + 2) * (n + 1) / 2);
    CHECK(build_u(n).dim() == n * n);
    CHECK(build_su(n).dim() == n * n - 1);
    CHECK(build_sp(n).dim() == n * (2 * n + 1));
    CHECK(build_sp_sp1(n).dim() == n * (2 * n + 1) + 3);
  }
  CHECK(build_u(3).ambient == 6);
  CHECK(build_sp(2).ambient == 8);
}

TEST_CASE("quaternion multiplication operators compose correctly") {
  RationalMatrix one = quaternion_left(0);
  CHECK(one == RationalMatrix::identity(4));
  RationalMatrix li = quaternion_left(1), lj = quaternion_left(2),
                 lk = quaternion_left(3);
  RationalMatrix ri = quaternion_right(1), rj = quaternion_right(2),
                 rk = quaternion_right(3);

  // left multiplications compose as quaternions: L_i L_j = L_k
  CHECK(li * lj == lk);
  CHECK(lj * li == lk * Rational(-1));
  CHECK(li * li == one * Rational(-1));

  // right multiplications reverse: R_i R_j = R_{ji} = -R_k
  CHECK(ri * rj == rk * Rational(-1));
  CHECK(rj * ri == rk);

  // left and right multiplications commute
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      CHECK(quaternion_left(a) * quaternion_right(b) ==
            quaternion_right(b) * quaternion_left(a));
}

TEST_CASE("realified generators carry the expected form norms") {
  // a single quaternion slot: left and right units have norm squared 2
  for (int u = 1; u <= 3; ++u) {
    CHECK(form_q(quaternion_left(u), quaternion_left(u)) == Rational(2));
    CHECK(form_q(quaternion_right(u), quaternion_right(u)) == Rational(2));
  }

  // the sp(1) factor of sp(n)+sp(1) acts on all n slots: norm squared 2n
  for (std::size_t n : {2u, 3u, 4u}) {
    LieAlgebraBasis g = build_sp_sp1(n);
    for (std::size_t t = g.dim() - 3; t < g.dim(); ++t)
      CHECK(form_q(g.basis[t], g.basis[t]) == Rational(2 * n));
  }

  // u(1) realified: multiplication by i on one complex slot has norm 1
  LieAlgebraBasis u1 = build_u(1);
  REQUIRE(u1.dim() == 1);
  CHECK(form_q(u1.basis[0], u1.basis[0]) == Rational(1));
}

TEST_CASE("constructed algebras are closed under brackets") {
  for (const LieAlgebraBasis& g :
       {build_u(3), build_su(3), build_sp(2), build_sp_sp1(2)}) {
    Subspace span = g.span();
    REQUIRE(span.dim() == g.dim());
    for (std::size_t i = 0; i < g.dim(); ++i)
      for (std::size_t j = i + 1; j < g.dim(); ++j)
        CHECK(span.contains(flatten_skew(bracket(g.basis[i], g.basis[j]))));
  }
}

TEST_CASE("ad_operator reproduces brackets and rejects leaky spans") {
  LieAlgebraBasis g = build_so(4);
  std::vector<RVec> coords = g.coords();
  RationalMatrix ad = ad_operator(g.basis[0], coords, g.ambient);
  for (std::size_t j = 0; j < coords.size(); ++j) {
    RVec expected = flatten_skew(bracket(g.basis[0], g.basis[j]));
    CHECK(ad.col(j) == expected);
  }

  // a single E generator does not normalize a one-line span it moves
  std::vector<RVec> line = {flatten_skew(e_matrix(4, 1, 2))};
  CHECK_THROWS_AS(ad_operator(e_matrix(4, 0, 1), line, 4), ComputeError);
}
