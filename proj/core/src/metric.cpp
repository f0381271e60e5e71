#include "sublab/metric.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace sublab {

Rational InducedMetric::value(const RVec& u, const RVec& v) const {
  return dot(u, v) - dot(onto_k1.apply(u), onto_k1.apply(v));
}

InducedMetric induced_metric(std::size_t coord_dim,
                             const std::vector<RVec>& k1_rows) {
  return {Projector(coord_dim, k1_rows)};
}

RationalMatrix metric_gram(const InducedMetric& m,
                           const std::vector<RVec>& rows) {
  std::vector<RVec> projected;
  projected.reserve(rows.size());
  for (const auto& r : rows) projected.push_back(m.onto_k1.apply(r));
  RationalMatrix g(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i; j < rows.size(); ++j) {
      g.at(i, j) = dot(rows[i], rows[j]) - dot(projected[i], projected[j]);
      g.at(j, i) = g.at(i, j);
    }
  return g;
}

Rational gram_determinant(RationalMatrix g) {
  if (g.rows() != g.cols()) throw ComputeError("determinant of a non-square");
  const std::size_t n = g.rows();
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && g.at(p, c) == 0) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(g.at(p, j), g.at(c, j));
      det = -det;
    }
    det *= g.at(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (g.at(r, c) == 0) continue;
      const Rational f = g.at(r, c) / g.at(c, c);
      for (std::size_t j = c; j < n; ++j) g.at(r, j) -= f * g.at(c, j);
    }
  }
  return det;
}

MetricConstants metric_constants(const InducedMetric& m,
                                 const Decomposition& dec) {
  MetricConstants out;
  for (std::size_t s = 0; s < dec.summands.size(); ++s) {
    const auto& rows = dec.summands[s].basis;
    const Rational q00 = dot(rows[0], rows[0]);
    if (q00 == 0) throw ComputeError("degenerate bi-invariant form");
    const Rational lambda = m.value(rows[0], rows[0]) / q00;
    for (std::size_t i = 0; i < rows.size() && out.all_proportional; ++i)
      for (std::size_t j = i; j < rows.size(); ++j) {
        const Rational got = m.value(rows[i], rows[j]);
        const Rational expected = lambda * dot(rows[i], rows[j]);
        if (got != expected) {
          out.all_proportional = false;
          out.witness = ConstantMixWitness{s, i, j, got, expected};
          break;
        }
      }
    const Rational base =
        out.constants.empty() ? lambda : out.constants[0].lambda;
    if (base == 0) throw ComputeError("vanishing leading scaling constant");
    out.constants.push_back({rows.size(), lambda, lambda / base});
  }
  return out;
}

std::optional<OrthogonalityWitness> first_nonorthogonal_pair(
    const InducedMetric& m, const std::vector<RVec>& a,
    const std::vector<RVec>& b) {
  std::vector<RVec> pa, pb;
  pa.reserve(a.size());
  pb.reserve(b.size());
  for (const auto& r : a) pa.push_back(m.onto_k1.apply(r));
  for (const auto& r : b) pb.push_back(m.onto_k1.apply(r));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      const Rational v = dot(a[i], b[j]) - dot(pa[i], pb[j]);
      if (v != 0) return OrthogonalityWitness{i, j, v};
    }
  return std::nullopt;
}

bool is_ad_invariant(const InducedMetric& m, const AdAction& act,
                     const std::vector<RVec>& rows) {
  std::vector<RVec> proj;
  proj.reserve(rows.size());
  for (const auto& r : rows) proj.push_back(m.onto_k1.apply(r));
  for (std::size_t op = 0; op < act.ops.size(); ++op) {
    std::vector<RVec> img, pimg;
    img.reserve(rows.size());
    for (const auto& r : rows) img.push_back(act.apply(op, r));
    pimg.reserve(rows.size());
    for (const auto& r : img) pimg.push_back(m.onto_k1.apply(r));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < rows.size(); ++j) {
        const Rational lhs = dot(img[i], rows[j]) - dot(pimg[i], proj[j]);
        const Rational rhs = dot(rows[i], img[j]) - dot(proj[i], pimg[j]);
        if (lhs + rhs != 0) return false;
      }
  }
  return true;
}

namespace {

std::string join_dims(const std::vector<std::size_t>& dims) {
  std::ostringstream os;
  for (std::size_t i = 0; i < dims.size(); ++i)
    os << (i ? "+" : "") << dims[i];
  return os.str();
}

}  // namespace

SubmersionConditions check_submersion_conditions(
    const AdAction& h_act, const AdAction& l_act,
    const std::vector<RVec>& fiber, const std::vector<RVec>& m2,
    const InducedMetric& metric, const DecomposeOptions& opt) {
  SubmersionConditions out;

  const Decomposition base = irreducible_decomposition(l_act, m2, opt);
  const Decomposition fib = irreducible_decomposition(h_act, fiber, opt);
  for (const auto& s : fib.summands) out.fiber_dims.push_back(s.dim());

  // (i) every l-summand stays h-irreducible, so the two decompositions of
  // the base span share one dimension multiset
  out.isotypic_match = true;
  std::vector<Decomposition> q_under_h;
  for (std::size_t j = 0; j < base.summands.size(); ++j) {
    const auto& q = base.summands[j];
    out.q_dims.push_back(q.dim());
    out.q_l_types.push_back(q.type);
    Decomposition split =
        irreducible_decomposition(h_act, q.basis, opt);
    out.q_h_split.push_back(split.dims());
    if (split.summands.size() == 1) {
      out.q_h_types.push_back(split.summands[0].type);
    } else {
      out.q_h_types.push_back(std::nullopt);
      out.isotypic_match = false;
      std::ostringstream os;
      os << "base summand " << j + 1 << " of dimension " << q.dim()
         << " splits into " << join_dims(split.dims())
         << " under the smaller subalgebra";
      out.witnesses.push_back(os.str());
    }
    q_under_h.push_back(std::move(split));
  }

  // (ii) no fiber piece is equivalent to any base summand
  out.fiber_clean = true;
  for (std::size_t i = 0; i < fib.summands.size(); ++i) {
    std::vector<std::size_t> row;
    for (std::size_t j = 0; j < base.summands.size(); ++j) {
      const std::size_t hom = hom_dimension(h_act, fib.summands[i].basis,
                                            base.summands[j].basis);
      row.push_back(hom);
      if (hom > 0) {
        out.fiber_clean = false;
        std::ostringstream os;
        os << "fiber piece " << i + 1 << " (dim "
           << fib.summands[i].dim() << ") admits " << hom
           << " independent equivariant maps into base summand " << j + 1
           << " (dim " << base.summands[j].dim() << ")";
        out.witnesses.push_back(os.str());
      }
    }
    out.fiber_hom.push_back(std::move(row));
  }

  // (iii) equivalent base pairs must match in multiplicity and type under
  // both subalgebras
  out.pairwise_consistent = true;
  for (std::size_t i = 0; i < base.summands.size(); ++i) {
    for (std::size_t j = i + 1; j < base.summands.size(); ++j) {
      const std::size_t hom_h = hom_dimension(
          h_act, base.summands[i].basis, base.summands[j].basis);
      const std::size_t hom_l =
          base.summands[i].dim() == base.summands[j].dim()
              ? hom_dimension(l_act, base.summands[i].basis,
                              base.summands[j].basis)
              : 0;
      if (hom_h == 0 && hom_l == 0) continue;
      PairConsistency pc{i, j, hom_h, hom_l, true};
      std::ostringstream os;
      if (hom_h != hom_l) {
        pc.consistent = false;
        os << "base summands " << i + 1 << " and " << j + 1 << " admit "
           << hom_h << " equivariant maps under the smaller subalgebra but "
           << hom_l << " under the larger";
      } else {
        const auto& ti = out.q_h_types[i];
        const auto& tj = out.q_h_types[j];
        if (!ti || !tj || *ti != *tj || out.q_l_types[i] != *ti ||
            out.q_l_types[j] != *ti) {
          pc.consistent = false;
          os << "equivalent base summands " << i + 1 << " and " << j + 1
             << " carry mismatched intertwiner types";
        }
      }
      if (!pc.consistent) {
        out.pairwise_consistent = false;
        out.witnesses.push_back(os.str());
      }
      out.pairs.push_back(pc);
    }
  }

  out.holds =
      out.isotypic_match && out.fiber_clean && out.pairwise_consistent;

  if (out.holds) {
    const auto bad = first_nonorthogonal_pair(metric, fiber, m2);
    if (bad)
      throw ComputeError(
          "conditions hold but fiber and base pair non-orthogonally at (" +
          std::to_string(bad->left) + "," + std::to_string(bad->right) +
          ") with value " + to_fraction_string(bad->value));
  }
  return out;
}

}  // namespace sublab
