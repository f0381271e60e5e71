#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sublab/linalg.hpp"
#include "sublab/types.hpp"

using namespace sublab;

namespace {

RationalMatrix random_matrix(std::mt19937& gen, std::size_t rows,
                             std::size_t cols) {
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<long> den(1, 4);
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m.at(i, j) = Rational(num(gen), den(gen));
  return m;
}

}  // namespace

TEST_CASE("rref produces identity pivots and exact rank") {
  RationalMatrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  CHECK(rank(m) == 2);
  auto pivots = rref_inplace(m);
  REQUIRE(pivots.size() == 2);
  CHECK(pivots[0] == 0);
  CHECK(pivots[1] == 1);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    CHECK(m.at(r, pivots[r]) == 1);
    for (std::size_t r2 = 0; r2 < m.rows(); ++r2)
      if (r2 != r) CHECK(m.at(r2, pivots[r]) == 0);
  }
}

TEST_CASE("kernel columns solve exactly and match rank-nullity") {
  RationalMatrix m{{1, 2, 3, 0}, {0, 1, 1, 1}};
  RationalMatrix k = kernel(m);
  CHECK(k.cols() == 4 - rank(m));
  RationalMatrix prod = m * k;
  CHECK(prod.is_zero());

  std::mt19937 gen(7);
  for (int trial = 0; trial < 20; ++trial) {
    RationalMatrix a = random_matrix(gen, 4, 6);
    CHECK(rank(a) + kernel(a).cols() == a.cols());
    CHECK(rank(a) == rank(a.transpose()));
    CHECK((a * kernel(a)).is_zero());
  }
}

TEST_CASE("solve returns a particular solution or nothing") {
  RationalMatrix m{{2, 0}, {0, 3}};
  RVec b{Rational(1), Rational(1)};
  auto x = solve(m, b);
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Rational(1, 2));
  CHECK((*x)[1] == Rational(1, 3));

  RationalMatrix sing{{1, 1}, {1, 1}};
  RVec bad{Rational(0), Rational(1)};
  CHECK_FALSE(solve(sing, bad).has_value());
  RVec good{Rational(2), Rational(2)};
  auto y = solve(sing, good);
  REQUIRE(y.has_value());
  CHECK((*y)[0] + (*y)[1] == Rational(2));
}

TEST_CASE("coordinates_in reconstructs members and rejects outsiders") {
  std::vector<RVec> span = {{Rational(1), Rational(0), Rational(1)},
                            {Rational(0), Rational(1), Rational(1)}};
  RVec inside{Rational(2), Rational(3), Rational(5)};
  auto c = coordinates_in(span, inside);
  REQUIRE(c.has_value());
  CHECK((*c)[0] == Rational(2));
  CHECK((*c)[1] == Rational(3));
  RVec outside{Rational(1), Rational(0), Rational(0)};
  CHECK_FALSE(coordinates_in(span, outside).has_value());
}

TEST_CASE("Subspace holds a canonical basis independent of generators") {
  std::vector<RVec> gens_a = {{Rational(1), Rational(1), Rational(0)},
                              {Rational(0), Rational(2), Rational(2)}};
  std::vector<RVec> gens_b = {{Rational(1), Rational(3), Rational(2)},
                              {Rational(2), Rational(2), Rational(0)},
                              {Rational(1), Rational(-1), Rational(-2)}};
  Subspace a(3, gens_a), b(3, gens_b);
  CHECK(a.dim() == 2);
  CHECK(a == b);
  CHECK(a.contains_all(gens_b));
  CHECK(a.pivots() == std::vector<std::size_t>{0, 1});

  Subspace grown(3);
  CHECK(grown.add(gens_a[0]));
  CHECK_FALSE(grown.add(gens_a[0]));
  CHECK(grown.add(gens_a[1]));
  CHECK(grown == a);
  CHECK(is_zero_vec(a.reduce(gens_b[0])));
}

TEST_CASE("intersect_spans finds the exact common subspace") {
  std::vector<RVec> a = {{Rational(1), Rational(0), Rational(0)},
                         {Rational(0), Rational(1), Rational(0)}};
  std::vector<RVec> b = {{Rational(0), Rational(1), Rational(0)},
                         {Rational(0), Rational(0), Rational(1)}};
  auto meet = intersect_spans(a, b);
  REQUIRE(meet.size() == 1);
  Subspace sa(3, a), sb(3, b);
  CHECK(sa.contains(meet[0]));
  CHECK(sb.contains(meet[0]));

  std::mt19937 gen(11);
  for (int trial = 0; trial < 10; ++trial) {
    RationalMatrix ma = random_matrix(gen, 3, 6);
    RationalMatrix mb = random_matrix(gen, 3, 6);
    std::vector<RVec> ra, rb;
    for (std::size_t i = 0; i < 3; ++i) {
      ra.push_back(ma.row(i));
      rb.push_back(mb.row(i));
    }
    auto m2 = intersect_spans(ra, rb);
    Subspace spa(6, ra), spb(6, rb);
    for (const auto& v : m2) {
      CHECK(spa.contains(v));
      CHECK(spb.contains(v));
    }
    Subspace joined(6, ra);
    for (const auto& v : rb) joined.add(v);
    CHECK(spa.dim() + spb.dim() == joined.dim() + m2.size());
  }
}

TEST_CASE("perp_within complements orthogonally and involutes") {
  std::vector<RVec> big = {{Rational(1), Rational(0), Rational(0), Rational(0)},
                           {Rational(0), Rational(1), Rational(0), Rational(0)},
                           {Rational(0), Rational(0), Rational(1), Rational(0)}};
  std::vector<RVec> small = {{Rational(1), Rational(1), Rational(0), Rational(0)}};
  auto perp = perp_within(big, small);
  CHECK(perp.size() == 2);
  for (const auto& w : perp)
    for (const auto& s : small) CHECK(dot(w, s) == 0);
  auto back = perp_within(big, perp);
  Subspace orig(4, small), rec(4, back);
  CHECK(orig == rec);
}

TEST_CASE("gram matrix positive definiteness is decided exactly") {
  std::vector<RVec> indep = {{Rational(1), Rational(1)},
                             {Rational(0), Rational(1, 3)}};
  CHECK(is_positive_definite(gram_matrix(indep)));

  std::vector<RVec> dep = {{Rational(1), Rational(2)},
                           {Rational(2), Rational(4)}};
  CHECK_FALSE(is_positive_definite(gram_matrix(dep)));

  RationalMatrix neg{{1, 2}, {2, 1}};
  CHECK_FALSE(is_positive_definite(neg));
  RationalMatrix semi{{1, 1}, {1, 1}};
  CHECK_FALSE(is_positive_definite(semi));
}

TEST_CASE("Projector is an exact idempotent symmetric projection") {
  std::vector<RVec> basis = {{Rational(1), Rational(1), Rational(0)},
                             {Rational(0), Rational(0), Rational(2)}};
  Projector p(3, basis);
  const RationalMatrix& m = p.matrix();
  CHECK(m * m == m);
  CHECK(m.transpose() == m);
  for (const auto& b : basis) CHECK(p.apply(b) == b);
  RVec perp{Rational(1), Rational(-1), Rational(0)};
  CHECK(is_zero_vec(p.apply(perp)));

  std::vector<RVec> dep = {{Rational(1), Rational(0), Rational(0)},
                           {Rational(2), Rational(0), Rational(0)}};
  CHECK_THROWS_AS(Projector(3, dep), ComputeError);
}

TEST_CASE("symmetric_eigensplit separates exact eigenvalues") {
  RationalMatrix s{{2, 1}, {1, 2}};
  auto split = symmetric_eigensplit(s);
  REQUIRE(split.clusters.size() == 2);
  CHECK(split.clusters[0].value == doctest::Approx(1.0));
  CHECK(split.clusters[1].value == doctest::Approx(3.0));
  CHECK(split.dims() == std::vector<std::size_t>{1, 1});

  RationalMatrix rep{{5, 0, 0}, {0, 5, 0}, {0, 0, 7}};
  auto split2 = symmetric_eigensplit(rep);
  REQUIRE(split2.clusters.size() == 2);
  CHECK(split2.dims() == std::vector<std::size_t>{2, 1});

  RationalMatrix notsym{{0, 1}, {2, 0}};
  CHECK_THROWS_AS(symmetric_eigensplit(notsym), ComputeError);
}

TEST_CASE("float_span_residual vanishes on invariant spans") {
  RationalMatrix op{{0, -1}, {1, 0}};
  std::vector<std::vector<double>> whole = {{1.0, 0.0}, {0.0, 1.0}};
  CHECK(float_span_residual(whole, {op}) < 1e-12);
  std::vector<std::vector<double>> line = {{1.0, 0.0}};
  CHECK(float_span_residual(line, {op}) > 0.5);
}

TEST_CASE("eigensplit_in_gram respects a non-euclidean frame") {
  RationalMatrix gram{{2, 0}, {0, 1}};
  RationalMatrix op{{3, 0}, {0, 5}};
  auto split = eigensplit_in_gram(op, gram);
  REQUIRE(split.clusters.size() == 2);
  CHECK(split.clusters[0].value == doctest::Approx(3.0));
  CHECK(split.clusters[1].value == doctest::Approx(5.0));
}
