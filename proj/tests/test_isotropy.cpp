#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "sublab/catalog.hpp"
#include "sublab/isotropy.hpp"
#include "sublab/lie.hpp"
#include "sublab/linalg.hpp"

using namespace sublab;

namespace {

std::string data_path(const char* file) {
  return std::string(SUBLAB_TEST_DATA_DIR) + "/" + file;
}

const std::vector<CatalogEntry>& catalog() {
  static std::vector<CatalogEntry> rows = load_catalog(data_path("onishchik.catalog"));
  return rows;
}

const CatalogEntry& row(std::size_t index) {
  for (const auto& r : catalog())
    if (r.index == index) return r;
  throw InputError("missing catalog row");
}

}  // namespace

TEST_CASE("reductive complement is orthogonal and exhaustive") {
  ChainScenario sc = build_scenario(row(6), 3, "");
  // m_total is k2 minus h computed by the builder; recompute and compare
  auto m = reductive_complement(sc.k2.coords(), sc.h.coords());
  CHECK(m.size() == sc.k2.dim() - sc.h.dim());
  Subspace a(m.empty() ? 0 : m[0].size(), m), b(sc.m_total[0].size(), sc.m_total);
  CHECK(a == b);
  for (const auto& v : m)
    for (const auto& h : sc.h.coords()) CHECK(dot(v, h) == 0);

  // complement of a space not inside the big span is rejected
  CHECK_THROWS_AS(
      reductive_complement(sc.h.coords(), sc.k2.coords()), ComputeError);
}

TEST_CASE("two-summand sphere decomposition splits exactly") {
  for (std::size_t n : {3u, 4u, 5u}) {
    ChainScenario sc = build_scenario(row(6), n, "");
    Decomposition dec = irreducible_decomposition(sc.h_act, sc.m_total);
    REQUIRE(dec.summands.size() == 2);
    std::vector<std::size_t> expected = {(n - 1) * (n - 2), 2 * (n - 1)};
    CHECK(dec.dims() == expected);
    CHECK(dec.classes == std::vector<std::vector<std::size_t>>{{0}, {1}});
    CHECK(dec.fully_certified);
    for (const auto& s : dec.summands) {
      CHECK(s.type == "unitary");
      CHECK(s.certified);
      CHECK_FALSE(s.trivial);
    }
    CHECK(dec.commutant_dim == 4);
    CHECK(dec.commutant_sym_dim == 2);
    CHECK(dec.float_check.ran);
  }
}

TEST_CASE("three-summand decomposition orders canonically") {
  for (std::size_t n : {3u, 4u}) {
    ChainScenario sc = build_scenario(row(15), n, "");
    Decomposition dec = irreducible_decomposition(sc.h_act, sc.m_total);
    REQUIRE(dec.summands.size() == 3);
    std::vector<std::size_t> expected = {(2 * n - 1) * (n - 2), 1, 4 * n - 4};
    CHECK(dec.dims() == expected);
    CHECK(dec.summands[0].type == "orthogonal");
    CHECK(dec.summands[1].type == "orthogonal");
    CHECK(dec.summands[1].trivial);
    CHECK(dec.summands[2].type == "symplectic");
    CHECK(dec.classes.size() == 3);
  }
}

TEST_CASE("seven-summand decomposition with two isotypic families") {
  ChainScenario sc = build_scenario(row(18), 3, "");
  Decomposition dec = irreducible_decomposition(sc.h_act, sc.m_total);
  std::vector<std::size_t> expected = {15, 8, 8, 8, 1, 1, 1};
  CHECK(dec.dims() == expected);
  CHECK(dec.classes ==
        std::vector<std::vector<std::size_t>>{{0}, {1, 2, 3}, {4, 5, 6}});
  for (const auto& s : dec.summands) CHECK(s.type == "orthogonal");
  CHECK(dec.commutant_dim == 19);
  CHECK(dec.commutant_sym_dim == 13);
}

TEST_CASE("summands are invariant, orthogonal, and complete") {
  ChainScenario sc = build_scenario(row(15), 3, "");
  Decomposition dec = irreducible_decomposition(sc.h_act, sc.m_total);
  std::size_t total = 0;
  Subspace joint(sc.m_total[0].size());
  for (const auto& s : dec.summands) {
    total += s.dim();
    Subspace span(sc.m_total[0].size(), s.basis);
    for (std::size_t op = 0; op < sc.h_act.ops.size(); ++op)
      for (const auto& v : s.basis)
        CHECK(span.contains(sc.h_act.apply(op, v)));
    for (const auto& v : s.basis) joint.add(v);
  }
  CHECK(total == sc.m_total.size());
  CHECK(joint.dim() == sc.m_total.size());
  // distinct summands stay Q-orthogonal
  for (std::size_t i = 0; i < dec.summands.size(); ++i)
    for (std::size_t j = i + 1; j < dec.summands.size(); ++j)
      for (const auto& u : dec.summands[i].basis)
        for (const auto& v : dec.summands[j].basis) CHECK(dot(u, v) == 0);
}

TEST_CASE("hom dimensions separate the isotypic families") {
  ChainScenario sc = build_scenario(row(18), 3, "");
  Decomposition dec = irreducible_decomposition(sc.h_act, sc.m_total);
  const auto& s = dec.summands;
  // within the 8-dimensional family
  CHECK(hom_dimension(sc.h_act, s[1].basis, s[2].basis) == 1);
  CHECK(hom_dimension(sc.h_act, s[1].basis, s[3].basis) == 1);
  // across families
  CHECK(hom_dimension(sc.h_act, s[0].basis, s[1].basis) == 0);
  CHECK(hom_dimension(sc.h_act, s[1].basis, s[4].basis) == 0);
  // trivial summands are all equivalent
  CHECK(hom_dimension(sc.h_act, s[4].basis, s[5].basis) == 1);
  // self-hom equals type dimension
  CHECK(hom_dimension(sc.h_act, s[1].basis, s[1].basis) == 1);
}

TEST_CASE("summand types by commutant dimension") {
  ChainScenario sc = build_scenario(row(15), 3, "");
  Decomposition dec = irreducible_decomposition(sc.h_act, sc.m_total);
  CHECK(summand_type(sc.h_act, dec.summands[0].basis) == "orthogonal");
  CHECK(summand_type(sc.h_act, dec.summands[2].basis) == "symplectic");
  ChainScenario sc6 = build_scenario(row(6), 3, "");
  Decomposition dec6 = irreducible_decomposition(sc6.h_act, sc6.m_total);
  CHECK(summand_type(sc6.h_act, dec6.summands[0].basis) == "unitary");
}

TEST_CASE("commutant bases commute with the action and have the counted size") {
  ChainScenario sc = build_scenario(row(6), 3, "");
  auto com = commutant(sc.h_act, sc.m_total);
  CHECK(com.size() == 4);
  auto ops = restricted_ops(sc.h_act, sc.m_total);
  for (const auto& c : com)
    for (const auto& op : ops) CHECK((c * op - op * c).is_zero());
}

TEST_CASE("base-space commutant splits as two matrix algebras") {
  // the 27-dimensional base: three equivalent 8-dim pieces + three trivial
  // lines give 3x3 + 3x3 matrix algebras, full dim 18, symmetric dim 12
  ChainScenario sc = build_scenario(row(18), 3, "so(4n-4)");
  REQUIRE(sc.m2.size() == 27);
  auto com = commutant(sc.h_act, sc.m2);
  CHECK(com.size() == 18);

  Decomposition dec = irreducible_decomposition(sc.h_act, sc.m2);
  CHECK(dec.commutant_dim == 18);
  CHECK(dec.commutant_sym_dim == 12);
  std::vector<std::size_t> dims = dec.dims();
  std::multiset<std::size_t> bag(dims.begin(), dims.end());
  CHECK(bag == std::multiset<std::size_t>{1, 1, 1, 8, 8, 8});
}

TEST_CASE("a generic symmetric commutant element has six clusters") {
  // the two independent symmetric 3x3 blocks have disjoint generic spectra:
  // three 8-dim clusters and three 1-dim clusters
  ChainScenario sc = build_scenario(row(18), 3, "so(4n-4)");
  DecomposeOptions opt;
  for (unsigned seed : {1u, 5u, 9u}) {
    opt.seed = seed;
    Decomposition dec = irreducible_decomposition(sc.h_act, sc.m2, opt);
    REQUIRE(dec.float_check.ran);
    CHECK(dec.float_check.cluster_dims.size() == 6);
    std::multiset<std::size_t> bag(dec.float_check.cluster_dims.begin(),
                                   dec.float_check.cluster_dims.end());
    CHECK(bag == std::multiset<std::size_t>{1, 1, 1, 8, 8, 8});
    CHECK(dec.float_check.residual < 1e-7);
  }
}

TEST_CASE("decompositions are identical across seeds") {
  ChainScenario sc = build_scenario(row(15), 3, "");
  DecomposeOptions opt;
  opt.seed = 0;
  Decomposition base = irreducible_decomposition(sc.h_act, sc.m_total, opt);
  for (unsigned seed : {1u, 2u, 3u, 4u}) {
    opt.seed = seed;
    Decomposition again = irreducible_decomposition(sc.h_act, sc.m_total, opt);
    CHECK(again.dims() == base.dims());
    CHECK(again.classes == base.classes);
    for (std::size_t i = 0; i < base.summands.size(); ++i) {
      CHECK(again.summands[i].type == base.summands[i].type);
      CHECK(again.summands[i].basis == base.summands[i].basis);
    }
  }
}

TEST_CASE("single-summand spaces pass the degenerate float path") {
  // the fiber of the sphere chain is a single irreducible piece
  ChainScenario sc = build_scenario(row(6), 3, "so(2n-2)");
  Decomposition dec = irreducible_decomposition(sc.l_act, sc.m2);
  REQUIRE(dec.summands.size() == 1);
  CHECK(dec.float_check.ran);
  CHECK(dec.float_check.cluster_dims == std::vector<std::size_t>{dec.dims()[0]});
  CHECK(dec.float_check.residual < 1e-7);
}
