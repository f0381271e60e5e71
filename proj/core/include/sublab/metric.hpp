#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sublab/isotropy.hpp"
#include "sublab/linalg.hpp"

namespace sublab {

/// Inner product <U,V> = Q(U,V) - Q(P1 U, P1 V) on ambient coordinates,
/// where P1 projects orthogonally onto a fixed subalgebra. Positive
/// definite exactly on complements of that subalgebra.
struct InducedMetric {
  Projector onto_k1;

  Rational value(const RVec& u, const RVec& v) const;
};

InducedMetric induced_metric(std::size_t coord_dim,
                             const std::vector<RVec>& k1_rows);

/// Gram matrix of the induced metric on the given rows.
RationalMatrix metric_gram(const InducedMetric& m,
                           const std::vector<RVec>& rows);

/// Exact determinant by Gaussian elimination.
Rational gram_determinant(RationalMatrix g);

/// Scaling constant of one summand: the metric restricted there equals
/// lambda times the bi-invariant form.
struct SummandConstant {
  std::size_t dim = 0;
  Rational lambda;
  Rational ratio;  ///< lambda over the first summand's lambda
};

/// First basis pair on which a summand restriction fails to be a scalar
/// multiple of the bi-invariant form.
struct ConstantMixWitness {
  std::size_t summand = 0;
  std::size_t i = 0, j = 0;
  Rational got;
  Rational expected;
};

struct MetricConstants {
  std::vector<SummandConstant> constants;
  bool all_proportional = true;
  std::optional<ConstantMixWitness> witness;
};

MetricConstants metric_constants(const InducedMetric& m,
                                 const Decomposition& dec);

struct OrthogonalityWitness {
  std::size_t left = 0;   ///< index into the first basis list
  std::size_t right = 0;  ///< index into the second basis list
  Rational value;
};

/// Scans pairs in order; empty when the spans are orthogonal under m.
std::optional<OrthogonalityWitness> first_nonorthogonal_pair(
    const InducedMetric& m, const std::vector<RVec>& a,
    const std::vector<RVec>& b);

/// Exact check of m([x,u],v) + m(u,[x,v]) = 0 for all generators x and all
/// pairs u, v from rows.
bool is_ad_invariant(const InducedMetric& m, const AdAction& act,
                     const std::vector<RVec>& rows);

/// One ordered pair of base summands and its equivariant-map dimensions
/// under the two subalgebras.
struct PairConsistency {
  std::size_t i = 0, j = 0;
  std::size_t hom_h = 0, hom_l = 0;
  bool consistent = true;
};

/// Verdict data for the three submersion conditions on a chain
/// h < l < k2: the fiber span is l minus h, the base span m2 is k2 minus
/// l, and q_j are the l-irreducible summands of m2.
struct SubmersionConditions {
  bool holds = false;
  bool isotypic_match = false;    ///< every q_j stays irreducible under h
  bool fiber_clean = false;       ///< no fiber piece is equivalent to any q_j
  bool pairwise_consistent = false;

  std::vector<std::size_t> q_dims;
  std::vector<std::string> q_l_types;
  std::vector<std::vector<std::size_t>> q_h_split;
  std::vector<std::optional<std::string>> q_h_types;  ///< empty if reducible
  std::vector<std::size_t> fiber_dims;
  std::vector<std::vector<std::size_t>> fiber_hom;  ///< [fiber piece][q]
  std::vector<PairConsistency> pairs;  ///< interacting base pairs only
  std::vector<std::string> witnesses;  ///< failure notes in scan order
};

/// Checks the three conditions and, when all hold, verifies exactly that
/// fiber and base are orthogonal under the induced metric (throws
/// ComputeError otherwise: the conditions imply it).
SubmersionConditions check_submersion_conditions(
    const AdAction& h_act, const AdAction& l_act,
    const std::vector<RVec>& fiber, const std::vector<RVec>& m2,
    const InducedMetric& metric, const DecomposeOptions& opt = {});

}  // namespace sublab
