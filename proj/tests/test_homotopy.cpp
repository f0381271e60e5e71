#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sublab/homotopy.hpp"

using namespace sublab;

TEST_CASE("abelian group values compare structurally") {
  CHECK(AbGroup::zero().is_zero());
  CHECK_FALSE(AbGroup::unknown().known);
  CHECK_FALSE(AbGroup::unknown().is_zero());
  CHECK(AbGroup::free(1).str() == "Z");
  CHECK(AbGroup::free(2).str() == "Z^2");
  CHECK(AbGroup::cyclic(2).str() == "Z_2");
  CHECK(AbGroup::zero().str() == "0");
  CHECK(AbGroup::unknown().str() == "unknown");
  CHECK(AbGroup::free(1) == AbGroup::free(1));
  CHECK_FALSE(AbGroup::free(1) == AbGroup::cyclic(2));
}

TEST_CASE("group table answers the classical low groups") {
  CHECK(pi_of_group("so", 2, 1) == AbGroup::free(1));
  CHECK(pi_of_group("so", 3, 1) == AbGroup::cyclic(2));
  CHECK(pi_of_group("so", 12, 1) == AbGroup::cyclic(2));
  CHECK(pi_of_group("su", 4, 1) == AbGroup::zero());
  CHECK(pi_of_group("sp", 2, 1) == AbGroup::zero());

  CHECK(pi_of_group("so", 3, 3) == AbGroup::free(1));
  CHECK(pi_of_group("so", 4, 3) == AbGroup::free(2));
  CHECK(pi_of_group("so", 6, 3) == AbGroup::free(1));
  CHECK(pi_of_group("su", 2, 3) == AbGroup::free(1));
  CHECK(pi_of_group("sp", 3, 3) == AbGroup::free(1));

  // stable range answers, honest unknowns below it
  CHECK(pi_of_group("so", 7, 5) == AbGroup::zero());
  CHECK_FALSE(pi_of_group("so", 6, 5).known);
  CHECK(pi_of_group("su", 3, 5) == AbGroup::free(1));
  CHECK(pi_of_group("sp", 1, 5) == AbGroup::cyclic(2));
  CHECK(pi_of_group("sp", 2, 5) == AbGroup::cyclic(2));
}

TEST_CASE("space descriptors know their dimensions and names") {
  CHECK(SpaceDescriptor::sphere(8).dim() == 8);
  CHECK(SpaceDescriptor::sphere(8).str() == "S^8");
  SpaceDescriptor v = SpaceDescriptor::stiefel(3, 11);
  CHECK(v.dim() == 27);
  CHECK(v.str() == "V_3(R^11)");
  SpaceDescriptor cq = SpaceDescriptor::circle_quotient(v);
  CHECK(cq.dim() == 26);
  CHECK(SpaceDescriptor::group("so", 12).dim() == 66);
  CHECK(SpaceDescriptor::group("su", 4).dim() == 15);
  CHECK(SpaceDescriptor::group("sp", 3).dim() == 21);
}

TEST_CASE("sphere homotopy below the dimension vanishes") {
  SpaceDescriptor s6 = SpaceDescriptor::sphere(6);
  for (std::size_t j = 1; j < 6; ++j) CHECK(pi_of_space(s6, j).is_zero());
  CHECK(pi_of_space(s6, 6) == AbGroup::free(1));
  CHECK_FALSE(pi_of_space(s6, 7).known);
}

TEST_CASE("frame manifolds are connected up to their connectivity") {
  SpaceDescriptor v = SpaceDescriptor::stiefel(3, 11);
  for (std::size_t j = 1; j <= 7; ++j) CHECK(pi_of_space(v, j).is_zero());
  CHECK_FALSE(pi_of_space(v, 8).known);
  SpaceDescriptor v2 = SpaceDescriptor::stiefel(2, 11);
  for (std::size_t j = 1; j <= 8; ++j) CHECK(pi_of_space(v2, j).is_zero());
}

TEST_CASE("circle quotient shifts the second homotopy group") {
  SpaceDescriptor v = SpaceDescriptor::stiefel(3, 11);
  SpaceDescriptor cq = SpaceDescriptor::circle_quotient(v);
  CHECK(pi_of_space(cq, 1).is_zero());
  CHECK(pi_of_space(cq, 2) == AbGroup::free(1));
  for (std::size_t j = 3; j <= 5; ++j) CHECK(pi_of_space(cq, j).is_zero());
}

TEST_CASE("fiber transfer pinches through highly connected bases") {
  SpaceDescriptor so12 = SpaceDescriptor::group("so", 12);
  SpaceDescriptor v = SpaceDescriptor::stiefel(3, 11);
  CHECK(les_transfer(so12, v, 1) == AbGroup::cyclic(2));
  CHECK(les_transfer(so12, v, 3) == AbGroup::free(1));
  CHECK(les_transfer(so12, v, 5) == AbGroup::zero());

  // a low-connectivity base blocks the pinch
  SpaceDescriptor so4 = SpaceDescriptor::group("so", 4);
  SpaceDescriptor s2 = SpaceDescriptor::sphere(2);
  CHECK_FALSE(les_transfer(so4, s2, 1).known);
  CHECK_FALSE(les_transfer(so4, s2, 3).known);
}

TEST_CASE("group structure from the first and third homotopy groups") {
  auto st = structure_from_pi(AbGroup::cyclic(2), AbGroup::free(1));
  CHECK(st.first == 0);
  CHECK(st.second == 1);
  auto st2 = structure_from_pi(AbGroup{true, 1, {2}}, AbGroup::free(2));
  CHECK(st2.first == 1);
  CHECK(st2.second == 2);
  auto st3 = structure_from_pi(AbGroup::zero(), AbGroup::free(1));
  CHECK(st3.first == 0);
  CHECK(st3.second == 1);
}

TEST_CASE("simple dimension list has one entry per isomorphism class") {
  auto cands = simple_group_dims(30);
  std::vector<long> dims;
  for (const auto& c : cands) dims.push_back(c.dim);
  CHECK(dims == std::vector<long>{3, 8, 10, 14, 15, 21, 21, 24, 28});

  // coincidences appear once: so(3)=su(2)=sp(1), so(5)=sp(2), so(6)=su(4)
  int dim3 = 0, dim10 = 0, dim15 = 0;
  for (const auto& c : cands) {
    if (c.dim == 3) ++dim3;
    if (c.dim == 10) ++dim10;
    if (c.dim == 15) ++dim15;
  }
  CHECK(dim3 == 1);
  CHECK(dim10 == 1);
  CHECK(dim15 == 1);

  // the gaps that drive the certificates
  for (long missing : {22L, 39L, 47L, 56L, 112L}) {
    bool found = false;
    for (const auto& c : simple_group_dims(missing))
      if (c.dim == missing) found = true;
    CHECK_FALSE(found);
  }
}

TEST_CASE("degree lookup certificate for the largest sphere quotient") {
  ObstructionResult r = obstruct_quotient(SpaceDescriptor::group("so", 16),
                                          SpaceDescriptor::sphere(8));
  CHECK(r.verdict == "certificate");
  CHECK(r.raw_gap == 112);
  CHECK(r.required_dim == 112);
  CHECK(r.torus_rank == 0);
  CHECK(r.simple_factors == 1);
  CHECK(r.survivors.empty());
  CHECK_FALSE(r.steps.empty());
}

TEST_CASE("sphere certificates across the even-dimensional family") {
  // dimension gap 2n^2 - 3n + 3 never hits a simple dimension for n >= 4
  for (std::size_t n : {4u, 5u, 7u, 50u, 200u}) {
    ObstructionResult r =
        obstruct_quotient(SpaceDescriptor::group("so", 2 * n),
                          SpaceDescriptor::sphere(2 * n - 2));
    INFO("n = " << n);
    CHECK(r.verdict == "certificate");
    CHECK(r.survivors.empty());
  }
  // the first case sits at dimension 22
  ObstructionResult r8 = obstruct_quotient(SpaceDescriptor::group("so", 8),
                                           SpaceDescriptor::sphere(6));
  CHECK(r8.required_dim == 22);
}

TEST_CASE("frame and circle quotient certificates") {
  ObstructionResult rv =
      obstruct_quotient(SpaceDescriptor::group("so", 12),
                        SpaceDescriptor::stiefel(3, 11));
  CHECK(rv.verdict == "certificate");
  CHECK(rv.required_dim == 39);
  CHECK(rv.torus_rank == 0);

  ObstructionResult rc = obstruct_quotient(
      SpaceDescriptor::group("so", 12),
      SpaceDescriptor::circle_quotient(SpaceDescriptor::stiefel(3, 11)));
  CHECK(rc.verdict == "certificate");
  CHECK(rc.torus_rank == 1);
  CHECK(rc.raw_gap == 40);
  CHECK(rc.required_dim == 39);

  ObstructionResult rt =
      obstruct_quotient(SpaceDescriptor::group("so", 12),
                        SpaceDescriptor::stiefel(2, 11));
  CHECK(rt.verdict == "certificate");
  CHECK(rt.required_dim == 47);

  ObstructionResult rs = obstruct_quotient(SpaceDescriptor::group("so", 12),
                                           SpaceDescriptor::sphere(10));
  CHECK(rs.verdict == "certificate");
  CHECK(rs.required_dim == 56);
}

TEST_CASE("soundness: low spheres stay inconclusive") {
  for (std::size_t n : {2u, 3u}) {
    ObstructionResult r =
        obstruct_quotient(SpaceDescriptor::group("so", 2 * n),
                          SpaceDescriptor::sphere(2 * n - 2));
    INFO("n = " << n);
    CHECK(r.verdict == "inconclusive");
    CHECK_FALSE(r.reasons.empty());
  }
}

TEST_CASE("soundness: a genuine quotient survives the filter") {
  // the odd sphere really is a quotient of the special unitary group by a
  // symplectic subgroup, so the pipeline must not certify nonexistence
  ObstructionResult r = obstruct_quotient(SpaceDescriptor::group("su", 4),
                                          SpaceDescriptor::sphere(5));
  CHECK(r.verdict == "inconclusive");
  REQUIRE(r.survivors.size() == 1);
  CHECK(r.survivors[0].dim == 10);
}

TEST_CASE("audit steps carry rules and anchors") {
  ObstructionResult r = obstruct_quotient(SpaceDescriptor::group("so", 16),
                                          SpaceDescriptor::sphere(8));
  REQUIRE_FALSE(r.steps.empty());
  for (const auto& s : r.steps) {
    CHECK_FALSE(s.rule.empty());
    CHECK_FALSE(s.anchor.empty());
  }
  bool has_dimension_rule = false;
  for (const auto& s : r.steps)
    if (s.rule == "dimension_count") has_dimension_rule = true;
  CHECK(has_dimension_rule);
}
