#include "sublab/homotopy.hpp"

#include <algorithm>
#include <sstream>

namespace sublab {

namespace {

std::string join_names(const std::vector<CandidateGroup>& cs) {
  if (cs.empty()) return "none";
  std::ostringstream out;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (i) out << ", ";
    out << cs[i].name;
  }
  return out.str();
}

}  // namespace

std::string AbGroup::str() const {
  if (!known) return "unknown";
  if (rank == 0 && torsion.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  if (rank == 1) {
    out << "Z";
    first = false;
  } else if (rank > 1) {
    out << "Z^" << rank;
    first = false;
  }
  for (unsigned t : torsion) {
    if (!first) out << " + ";
    out << "Z_" << t;
    first = false;
  }
  return out.str();
}

SpaceDescriptor SpaceDescriptor::sphere(std::size_t m) {
  if (m == 0) throw InputError("sphere dimension must be positive");
  SpaceDescriptor d;
  d.kind = Kind::sphere;
  d.m = m;
  return d;
}

SpaceDescriptor SpaceDescriptor::stiefel(std::size_t k, std::size_t m) {
  if (k == 0 || k >= m)
    throw InputError("stiefel descriptor needs 0 < k < m");
  SpaceDescriptor d;
  d.kind = Kind::stiefel;
  d.k = k;
  d.m = m;
  return d;
}

SpaceDescriptor SpaceDescriptor::circle_quotient(SpaceDescriptor in) {
  if (in.kind == Kind::circle_quotient)
    throw InputError("nested circle quotients are not supported");
  SpaceDescriptor d;
  d.kind = Kind::circle_quotient;
  d.inner = std::make_shared<SpaceDescriptor>(std::move(in));
  return d;
}

SpaceDescriptor SpaceDescriptor::group(const std::string& family,
                                       std::size_t m) {
  if (family != "so" && family != "su" && family != "sp")
    throw InputError("unknown group family: " + family);
  if (m == 0) throw InputError("group size must be positive");
  SpaceDescriptor d;
  d.kind = Kind::group;
  d.family = family;
  d.m = m;
  return d;
}

long SpaceDescriptor::dim() const {
  switch (kind) {
    case Kind::sphere:
      return static_cast<long>(m);
    case Kind::stiefel:
      return static_cast<long>(k * m - k * (k + 1) / 2);
    case Kind::circle_quotient:
      return inner->dim() - 1;
    case Kind::group:
      if (family == "so") return static_cast<long>(m * (m - 1) / 2);
      if (family == "su") return static_cast<long>(m * m - 1);
      return static_cast<long>(m * (2 * m + 1));
  }
  throw ComputeError("unhandled descriptor kind");
}

std::string SpaceDescriptor::str() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::sphere:
      out << "S^" << m;
      break;
    case Kind::stiefel:
      out << "V_" << k << "(R^" << m << ")";
      break;
    case Kind::circle_quotient:
      out << "S^1\\" << inner->str();
      break;
    case Kind::group:
      if (family == "so") out << "SO(" << m << ")";
      if (family == "su") out << "SU(" << m << ")";
      if (family == "sp") out << "Sp(" << m << ")";
      break;
  }
  return out.str();
}

AbGroup pi_of_group(const std::string& family, std::size_t m, std::size_t j) {
  if (m == 0) throw InputError("group size must be positive");
  if (family == "so") {
    if (j == 1) {
      if (m >= 3) return AbGroup::cyclic(2);
      if (m == 2) return AbGroup::free(1);
      return AbGroup::zero();
    }
    if (j == 2) return AbGroup::zero();
    if (j == 3) {
      if (m >= 5) return AbGroup::free(1);
      if (m == 4) return AbGroup::free(2);
      if (m == 3) return AbGroup::free(1);
      return AbGroup::zero();
    }
    if (j == 5) {
      if (m >= 7) return AbGroup::zero();
      return AbGroup::unknown();
    }
    return AbGroup::unknown();
  }
  if (family == "su") {
    if (j == 1 || j == 2) return AbGroup::zero();
    if (j == 3) return m >= 2 ? AbGroup::free(1) : AbGroup::zero();
    if (j == 5) return m >= 3 ? AbGroup::free(1) : AbGroup::unknown();
    return AbGroup::unknown();
  }
  if (family == "sp") {
    if (j == 1 || j == 2) return AbGroup::zero();
    if (j == 3) return AbGroup::free(1);
    if (j == 5) return AbGroup::cyclic(2);
    return AbGroup::unknown();
  }
  throw InputError("unknown group family: " + family);
}

AbGroup pi_of_space(const SpaceDescriptor& space, std::size_t j) {
  if (j == 0) throw InputError("homotopy degree must be positive");
  switch (space.kind) {
    case SpaceDescriptor::Kind::sphere:
      if (j < space.m) return AbGroup::zero();
      if (j == space.m) return AbGroup::free(1);
      return AbGroup::unknown();
    case SpaceDescriptor::Kind::stiefel:
      if (j + space.k + 1 <= space.m) return AbGroup::zero();
      return AbGroup::unknown();
    case SpaceDescriptor::Kind::circle_quotient: {
      const SpaceDescriptor& in = *space.inner;
      if (j == 1) {
        if (pi_of_space(in, 1).is_zero()) return AbGroup::zero();
        return AbGroup::unknown();
      }
      if (j == 2) {
        if (pi_of_space(in, 1).is_zero() && pi_of_space(in, 2).is_zero())
          return AbGroup::free(1);
        return AbGroup::unknown();
      }
      return pi_of_space(in, j);
    }
    case SpaceDescriptor::Kind::group:
      return pi_of_group(space.family, space.m, j);
  }
  throw ComputeError("unhandled descriptor kind");
}

AbGroup les_transfer(const SpaceDescriptor& total, const SpaceDescriptor& base,
                     std::size_t j) {
  if (!pi_of_space(base, j).is_zero()) return AbGroup::unknown();
  if (!pi_of_space(base, j + 1).is_zero()) return AbGroup::unknown();
  return pi_of_space(total, j);
}

std::pair<std::size_t, std::size_t> structure_from_pi(const AbGroup& pi1,
                                                      const AbGroup& pi3) {
  if (!pi1.known || !pi3.known)
    throw InputError("structure split needs known pi_1 and pi_3");
  return {pi1.rank, pi3.rank};
}

std::vector<CandidateGroup> simple_group_dims(long max_dim) {
  std::vector<CandidateGroup> out;
  auto push = [&](std::string name, long dim, std::string family,
                  AbGroup pi5) {
    if (dim <= max_dim)
      out.push_back({std::move(name), dim, std::move(family), std::move(pi5)});
  };
  // one entry per abstract isomorphism class: su(2)=sp(1)=so(3),
  // so(5)=sp(2), so(6)=su(4), so(4) is not simple
  push("su(2)", 3, "su", AbGroup::cyclic(2));
  for (long r = 2;; ++r) {
    long d = r * (r + 2);
    if (d > max_dim) break;
    push("su(" + std::to_string(r + 1) + ")", d, "su", AbGroup::free(1));
  }
  push("so(5)", 10, "so", AbGroup::cyclic(2));
  for (long r = 3;; ++r) {
    long d = r * (2 * r + 1);
    if (d > max_dim) break;
    push("so(" + std::to_string(2 * r + 1) + ")", d, "so", AbGroup::zero());
    push("sp(" + std::to_string(r) + ")", d, "sp", AbGroup::cyclic(2));
  }
  for (long r = 4;; ++r) {
    long d = r * (2 * r - 1);
    if (d > max_dim) break;
    push("so(" + std::to_string(2 * r) + ")", d, "so", AbGroup::zero());
  }
  push("g2", 14, "exceptional", AbGroup::unknown());
  push("f4", 52, "exceptional", AbGroup::unknown());
  push("e6", 78, "exceptional", AbGroup::unknown());
  push("e7", 133, "exceptional", AbGroup::unknown());
  push("e8", 248, "exceptional", AbGroup::unknown());
  std::sort(out.begin(), out.end(),
            [](const CandidateGroup& a, const CandidateGroup& b) {
              if (a.dim != b.dim) return a.dim < b.dim;
              return a.name < b.name;
            });
  return out;
}

ObstructionResult obstruct_quotient(const SpaceDescriptor& total,
                                    const SpaceDescriptor& base) {
  if (total.kind != SpaceDescriptor::Kind::group)
    throw InputError("total space must be a compact group descriptor");
  ObstructionResult res;
  res.raw_gap = total.dim() - base.dim();
  if (res.raw_gap <= 0)
    throw InputError("base dimension must be smaller than the total dimension");
  res.steps.push_back({"dimension_count", total.str() + " -> " + base.str(),
                       "gap " + std::to_string(res.raw_gap),
                       "dimension of a homogeneous quotient"});

  bool extension_rule =
      base.kind == SpaceDescriptor::Kind::circle_quotient &&
      pi_of_space(*base.inner, 1).is_zero() &&
      pi_of_space(*base.inner, 2).is_zero() &&
      pi_of_space(total, 2).is_zero() && pi_of_space(total, 1).known;
  if (extension_rule) {
    res.pi1 = AbGroup::free(pi_of_space(total, 1).rank + 1);
    res.steps.push_back(
        {"circle_quotient_extension",
         "pi_1 of the group acting on " + total.str() + " over " + base.str(),
         "rank " + std::to_string(res.pi1.rank) + " (torsion not resolved)",
         "fundamental group of a free circle quotient"});
  } else {
    res.pi1 = les_transfer(total, base, 1);
    res.steps.push_back(
        {"les_pinch", "pi_1 through " + base.str(), res.pi1.str(),
         "exact sequence of a fibration with vanishing adjacent base groups"});
  }

  res.pi3 = les_transfer(total, base, 3);
  res.steps.push_back(
      {"les_pinch", "pi_3 through " + base.str(), res.pi3.str(),
       "exact sequence of a fibration with vanishing adjacent base groups"});

  res.pi5 = les_transfer(total, base, 5);
  res.steps.push_back(
      {"les_pinch", "pi_5 through " + base.str(),
       res.pi5.known ? res.pi5.str() : "unconstrained",
       "exact sequence of a fibration with vanishing adjacent base groups"});

  if (!res.pi1.known)
    res.reasons.push_back(
        "the fundamental group of the acting group could not be determined");
  if (!res.pi3.known)
    res.reasons.push_back(
        "the third homotopy group of the acting group could not be determined");
  if (!res.reasons.empty()) {
    res.verdict = "inconclusive";
    return res;
  }

  auto [torus, simple] = structure_from_pi(res.pi1, res.pi3);
  res.torus_rank = torus;
  res.simple_factors = simple;
  res.steps.push_back(
      {"group_structure",
       "pi_1 rank " + std::to_string(res.pi1.rank) + ", pi_3 rank " +
           std::to_string(res.pi3.rank),
       "torus rank " + std::to_string(torus) + ", simple factors " +
           std::to_string(simple),
       "compact groups are finitely covered by a torus times simple factors"});

  res.required_dim = res.raw_gap - static_cast<long>(torus);
  res.steps.push_back({"torus_deduction",
                       "gap " + std::to_string(res.raw_gap) + " minus torus rank " +
                           std::to_string(torus),
                       "required simple dimension " +
                           std::to_string(res.required_dim),
                       "dimension of a homogeneous quotient"});

  if (res.required_dim < 0) {
    res.verdict = "inconclusive";
    res.reasons.push_back("torus rank exceeds the dimension gap");
    return res;
  }
  if (simple == 0) {
    if (res.required_dim == 0) {
      res.verdict = "inconclusive";
      res.reasons.push_back("a torus alone fills the dimension gap");
      return res;
    }
    res.steps.push_back({"dimension_filter",
                         "no simple factor allowed, residual dimension " +
                             std::to_string(res.required_dim),
                         "none",
                         "classification of simple compact Lie algebras"});
    res.verdict = "certificate";
    return res;
  }
  if (simple != 1) {
    res.verdict = "inconclusive";
    res.reasons.push_back("the pipeline handles exactly one simple factor, found " +
                          std::to_string(simple));
    return res;
  }

  std::vector<CandidateGroup> by_dim;
  for (const auto& c : simple_group_dims(res.required_dim))
    if (c.dim == res.required_dim) by_dim.push_back(c);
  res.steps.push_back({"dimension_filter",
                       "simple dimensions equal to " +
                           std::to_string(res.required_dim),
                       join_names(by_dim),
                       "classification of simple compact Lie algebras"});

  if (res.pi5.known) {
    std::vector<CandidateGroup> kept;
    for (const auto& c : by_dim) {
      if (c.pi5.known && !(c.pi5 == res.pi5)) continue;
      kept.push_back(c);
    }
    res.steps.push_back({"pi5_filter", "pi_5 must be " + res.pi5.str(),
                         join_names(kept),
                         "stable range homotopy of classical groups"});
    res.survivors = std::move(kept);
  } else {
    res.survivors = std::move(by_dim);
  }

  for (const auto& c : res.survivors)
    res.reasons.push_back("surviving candidate: " + c.name + " (dimension " +
                          std::to_string(c.dim) + ")");
  res.verdict = res.reasons.empty() ? "certificate" : "inconclusive";
  return res;
}

}  // namespace sublab
