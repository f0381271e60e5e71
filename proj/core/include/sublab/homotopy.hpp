#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sublab/types.hpp"

namespace sublab {

/// Finitely generated abelian group, or an explicit unknown. Torsion is
/// kept as a divisibility chain so equality is structural.
struct AbGroup {
  bool known = false;
  std::size_t rank = 0;
  std::vector<unsigned> torsion;

  static AbGroup unknown() { return {}; }
  static AbGroup zero() { return {true, 0, {}}; }
  static AbGroup free(std::size_t r) { return {true, r, {}}; }
  static AbGroup cyclic(unsigned m) { return {true, 0, {m}}; }

  bool is_zero() const { return known && rank == 0 && torsion.empty(); }
  bool operator==(const AbGroup& o) const {
    return known == o.known && rank == o.rank && torsion == o.torsion;
  }
  std::string str() const;
};

/// Homogeneous space shapes the obstruction pipeline understands.
struct SpaceDescriptor {
  enum class Kind { sphere, stiefel, circle_quotient, group };
  Kind kind = Kind::sphere;
  std::size_t m = 0;                       ///< sphere dim / stiefel m / group size
  std::size_t k = 0;                       ///< stiefel k
  std::string family;                      ///< group family: so, su, sp
  std::shared_ptr<const SpaceDescriptor> inner;  ///< circle quotient base

  static SpaceDescriptor sphere(std::size_t m);
  static SpaceDescriptor stiefel(std::size_t k, std::size_t m);
  static SpaceDescriptor circle_quotient(SpaceDescriptor inner);
  static SpaceDescriptor group(const std::string& family, std::size_t m);

  long dim() const;
  std::string str() const;
};

/// Table lookup of pi_j for the classical compact groups; only encoded
/// ranges answer, everything else is unknown.
AbGroup pi_of_group(const std::string& family, std::size_t m, std::size_t j);

/// pi_j of a descriptor: spheres and Stiefel manifolds below or at
/// connectivity, circle quotients through the bundle sequence, groups via
/// the table.
AbGroup pi_of_space(const SpaceDescriptor& space, std::size_t j);

/// pi_j of the fiber of total -> base when pi_j(base) and pi_{j+1}(base)
/// are both known zero; unknown otherwise.
AbGroup les_transfer(const SpaceDescriptor& total, const SpaceDescriptor& base,
                     std::size_t j);

/// torus rank and simple factor count of a compact group with these
/// fundamental and third homotopy groups.
std::pair<std::size_t, std::size_t> structure_from_pi(const AbGroup& pi1,
                                                      const AbGroup& pi3);

struct CandidateGroup {
  std::string name;
  long dim = 0;
  std::string family;
  AbGroup pi5;
};

/// All simple compact Lie algebra dimensions up to max_dim, one entry per
/// abstract isomorphism class, with stable pi_5 tags where the table
/// answers.
std::vector<CandidateGroup> simple_group_dims(long max_dim);

struct ObstructionStep {
  std::string rule;
  std::string input;
  std::string output;
  std::string anchor;  ///< the mathematical fact the rule relies on
};

/// Outcome of the nonexistence pipeline for a free action of a compact
/// group on the total space with the given quotient.
struct ObstructionResult {
  std::string verdict;  ///< "certificate" | "inconclusive"
  std::vector<std::string> reasons;
  long raw_gap = 0;        ///< dim(total) - dim(base)
  long required_dim = 0;   ///< raw gap minus torus rank
  std::size_t torus_rank = 0;
  std::size_t simple_factors = 0;
  AbGroup pi1, pi3, pi5;
  std::vector<CandidateGroup> survivors;
  std::vector<ObstructionStep> steps;
};

ObstructionResult obstruct_quotient(const SpaceDescriptor& total,
                                    const SpaceDescriptor& base);

}  // namespace sublab
