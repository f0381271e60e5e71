#include "sublab/isotropy.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <utility>

#include "sublab/linalg.hpp"

namespace sublab {

namespace {

int small_int(std::mt19937& gen, int lo, int hi) {
  return lo + static_cast<int>(gen() % static_cast<unsigned>(hi - lo + 1));
}

std::vector<std::size_t> pivot_sequence(const std::vector<RVec>& rows) {
  std::vector<std::size_t> p;
  p.reserve(rows.size());
  for (const auto& r : rows) {
    std::size_t j = 0;
    while (j < r.size() && r[j] == 0) ++j;
    p.push_back(j);
  }
  return p;
}

/// Coordinates of v against mutually reduced echelon rows, read off the
/// pivot columns; empty when v is outside the span.
std::optional<RVec> echelon_coords(const std::vector<RVec>& rows,
                                   const std::vector<std::size_t>& pivots,
                                   const RVec& v) {
  RVec coords(rows.size(), Rational(0));
  RVec rest = v;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Rational c = rest[pivots[i]];
    if (c != 0) {
      axpy_inplace(rest, -c, rows[i]);
      coords[i] = c;
    }
  }
  if (!is_zero_vec(rest)) return std::nullopt;
  return coords;
}

std::vector<RationalMatrix> restricted_ops_checked(
    const AdAction& h, const std::vector<RVec>& rows,
    const std::vector<std::size_t>& pivots) {
  std::vector<RationalMatrix> out;
  out.reserve(h.ops.size());
  const std::size_t d = rows.size();
  for (std::size_t m = 0; m < h.ops.size(); ++m) {
    RationalMatrix a(d, d);
    for (std::size_t j = 0; j < d; ++j) {
      auto c = echelon_coords(rows, pivots, h.apply(m, rows[j]));
      if (!c)
        throw ComputeError("subspace is not invariant under generator " +
                           std::to_string(m));
      for (std::size_t i = 0; i < d; ++i) a.at(i, j) = (*c)[i];
    }
    out.push_back(std::move(a));
  }
  return out;
}

Subspace cyclic_closure(const AdAction& h, const RVec& seed) {
  Subspace s(seed.size());
  s.add(seed);
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<RVec> snapshot = s.basis();
    for (const auto& row : snapshot)
      for (std::size_t m = 0; m < h.ops.size(); ++m)
        if (s.add(h.apply(m, row))) grew = true;
  }
  return s;
}

bool is_scalar_matrix(const RationalMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j ? m.at(i, j) != 0 : m.at(i, j) != m.at(0, 0)) return false;
  return true;
}

RationalMatrix inverse_of(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  const auto piv = rref_inplace(aug);
  if (piv.size() != n || piv.back() != n - 1)
    throw ComputeError("matrix is singular");
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

/// Equivariant maps from the cyclic module generated by a_rows[0] into a
/// module with restricted generator matrices b_ops. Every map is pinned by
/// the image w of the generator; closure dependencies become linear
/// constraints on w. a_rows must be a reduced echelon basis whose first row
/// generates the whole span.
struct TrackedHom {
  std::size_t dim = 0;
  std::vector<RationalMatrix> basis;  ///< codomain coords by domain coords
};

TrackedHom tracked_hom(const AdAction& h, const std::vector<RVec>& a_rows,
                       const std::vector<std::size_t>& a_pivots,
                       const std::vector<RationalMatrix>& b_ops,
                       std::size_t db, std::size_t known_min_dim,
                       bool with_basis) {
  if (h.ops.empty()) throw ComputeError("action has no generators");
  std::vector<RVec> rows;
  std::vector<std::size_t> pivots;
  std::vector<RationalMatrix> maps;  // maps[i] * w = image coords of rows[i]
  Subspace constraints(db);

  rows.push_back(a_rows[0]);
  pivots.push_back(a_pivots[0]);
  maps.push_back(RationalMatrix::identity(db));

  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t m = 0; m < h.ops.size(); ++m) {
      RVec v = h.apply(m, rows[i]);
      RationalMatrix t = b_ops[m] * maps[i];
      for (std::size_t r = 0; r < rows.size(); ++r) {
        const Rational c = v[pivots[r]];
        if (c != 0) {
          axpy_inplace(v, -c, rows[r]);
          t = t - maps[r] * c;
        }
      }
      if (is_zero_vec(v)) {
        if (constraints.dim() + known_min_dim < db)
          for (std::size_t r = 0; r < db; ++r) constraints.add(t.row(r));
        continue;
      }
      std::size_t p = 0;
      while (v[p] == 0) ++p;
      const Rational lead = v[p];
      for (auto& x : v) x /= lead;
      t = t * (Rational(1) / lead);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        const Rational c = rows[r][p];
        if (c != 0) {
          axpy_inplace(rows[r], -c, v);
          maps[r] = maps[r] - t * c;
        }
      }
      rows.push_back(std::move(v));
      pivots.push_back(p);
      maps.push_back(std::move(t));
    }
  }

  if (rows.size() != a_rows.size())
    throw ComputeError("module is not cyclic from its first basis row");

  TrackedHom out;
  out.dim = db - constraints.dim();
  if (!with_basis || out.dim == 0) return out;

  RationalMatrix ker =
      constraints.dim() == 0
          ? RationalMatrix::identity(db)
          : kernel(RationalMatrix::from_rows(constraints.basis()));
  // tracked rows end as the canonical echelon basis; align by pivot
  std::vector<std::size_t> by_pivot(a_rows.size());
  for (std::size_t i = 0; i < a_rows.size(); ++i) {
    const auto it = std::find(pivots.begin(), pivots.end(), a_pivots[i]);
    if (it == pivots.end())
      throw ComputeError("cyclic closure lost a pivot column");
    by_pivot[i] = static_cast<std::size_t>(it - pivots.begin());
  }
  for (std::size_t s = 0; s < ker.cols(); ++s) {
    const RVec w = ker.col(s);
    RationalMatrix phi(db, a_rows.size());
    for (std::size_t j = 0; j < a_rows.size(); ++j)
      phi.set_col(j, maps[by_pivot[j]].apply(w));
    out.basis.push_back(std::move(phi));
  }
  return out;
}

/// G-self-adjoint combinations of an endomorphism basis.
std::vector<RationalMatrix> symmetric_part(
    const std::vector<RationalMatrix>& end_basis, const RationalMatrix& gram) {
  if (end_basis.empty()) return {};
  const std::size_t d = gram.rows();
  const std::size_t e = end_basis.size();
  RationalMatrix sys(d * d, e);
  for (std::size_t s = 0; s < e; ++s) {
    const RationalMatrix gphi = gram * end_basis[s];
    const RationalMatrix skew = gphi - gphi.transpose();
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) sys.at(i * d + j, s) = skew.at(i, j);
  }
  const RationalMatrix ker = kernel(sys);
  std::vector<RationalMatrix> combos;
  for (std::size_t c = 0; c < ker.cols(); ++c) {
    RationalMatrix phi(d, d);
    for (std::size_t s = 0; s < e; ++s)
      if (ker.at(s, c) != 0) phi = phi + end_basis[s] * ker.at(s, c);
    combos.push_back(std::move(phi));
  }
  return combos;
}

/// Nearest rational with bounded denominator, by continued fractions.
std::optional<Rational> rationalize(double x, long max_den) {
  if (!std::isfinite(x)) return std::nullopt;
  const double scale = std::max(1.0, std::fabs(x));
  long long p0 = 1, q0 = 0, p1 = 0, q1 = 1;  // convergents p1/q1 trail x
  double v = x;
  for (int iter = 0; iter < 48; ++iter) {
    const double fl = std::floor(v);
    if (std::fabs(fl) > 1e15) return std::nullopt;
    const long long a = static_cast<long long>(fl);
    const long long p = a * p0 + p1;
    const long long q = a * q0 + q1;
    if (q > max_den || q < 0) return std::nullopt;
    if (std::fabs(x - static_cast<double>(p) / static_cast<double>(q)) <
        1e-8 * scale) {
      Rational r(static_cast<long>(p), static_cast<long>(q));
      r.canonicalize();
      return r;
    }
    p1 = p0;
    q1 = q0;
    p0 = p;
    q0 = q;
    const double frac = v - fl;
    if (frac < 1e-14) return std::nullopt;
    v = 1.0 / frac;
  }
  return std::nullopt;
}

std::string type_from_end_dim(std::size_t e) {
  if (e == 1) return "orthogonal";
  if (e == 2) return "unitary";
  if (e == 4) return "symplectic";
  throw ComputeError("endomorphism algebra has unexpected dimension " +
                     std::to_string(e));
}

std::vector<Summand> split_module(const AdAction& h,
                                  const std::vector<RVec>& rows,
                                  const std::vector<std::size_t>& pivots,
                                  const DecomposeOptions& opt, unsigned salt) {
  const std::size_t d = rows.size();
  if (d == 0) return {};
  const auto ops = restricted_ops_checked(h, rows, pivots);

  bool all_zero = true;
  for (const auto& a : ops) all_zero = all_zero && a.is_zero();
  if (all_zero) {
    std::vector<Summand> out;
    for (const auto& r : rows) out.push_back({{r}, "orthogonal", true, true});
    return out;
  }

  if (d > opt.certify_max_dim) return {{rows, "module", false, false}};

  const Subspace closure = cyclic_closure(h, rows[0]);
  if (closure.dim() < d) {
    auto first = split_module(h, closure.basis(), closure.pivots(), opt,
                              salt * 2 + 1);
    const Subspace rest(rows[0].size(), perp_within(rows, closure.basis()));
    if (closure.dim() + rest.dim() != d)
      throw ComputeError("orthogonal complement has the wrong dimension");
    auto second =
        split_module(h, rest.basis(), rest.pivots(), opt, salt * 2 + 2);
    first.insert(first.end(), std::make_move_iterator(second.begin()),
                 std::make_move_iterator(second.end()));
    return first;
  }

  const TrackedHom end = tracked_hom(h, rows, pivots, ops, d, 1, true);
  const RationalMatrix gram = gram_matrix(rows);
  const auto syms = symmetric_part(end.basis, gram);
  if (syms.empty()) throw ComputeError("endomorphism algebra lost identity");
  if (syms.size() == 1)
    return {{rows, type_from_end_dim(end.dim), false, true}};

  // reducible: split along rational eigenspaces of a self-adjoint
  // equivariant operator
  std::vector<RationalMatrix> candidates;
  for (const auto& s : syms)
    if (!is_scalar_matrix(s)) candidates.push_back(s);
  std::mt19937 gen(opt.seed * 2654435761u + salt * 40503u + 1u);
  for (int t = 0; t < 32; ++t) {
    RationalMatrix combo(d, d);
    for (const auto& s : syms)
      combo = combo + s * Rational(small_int(gen, -3, 3));
    if (!is_scalar_matrix(combo)) candidates.push_back(std::move(combo));
  }

  for (const auto& phi : candidates) {
    EigenSplitResult es;
    try {
      es = eigensplit_in_gram(phi, gram, opt.tol);
    } catch (const ComputeError&) {
      continue;
    }
    if (es.clusters.size() < 2) continue;

    std::vector<Rational> values;
    bool ok = true;
    for (const auto& c : es.clusters) {
      auto q = rationalize(c.value, 1000000L);
      if (!q) {
        ok = false;
        break;
      }
      values.push_back(*q);
    }
    if (!ok) continue;

    std::vector<std::vector<RVec>> pieces;
    std::size_t total = 0;
    for (std::size_t c = 0; c < values.size() && ok; ++c) {
      RationalMatrix shifted = phi;
      for (std::size_t i = 0; i < d; ++i) shifted.at(i, i) -= values[c];
      const RationalMatrix ker = kernel(shifted);
      if (ker.cols() != es.clusters[c].basis.size()) {
        ok = false;
        break;
      }
      std::vector<RVec> piece;
      for (std::size_t k = 0; k < ker.cols(); ++k) {
        RVec v(rows[0].size(), Rational(0));
        for (std::size_t i = 0; i < d; ++i)
          if (ker.at(i, k) != 0) axpy_inplace(v, ker.at(i, k), rows[i]);
        piece.push_back(std::move(v));
      }
      total += piece.size();
      pieces.push_back(std::move(piece));
    }
    if (!ok || total != d) continue;

    std::vector<Summand> out;
    for (std::size_t c = 0; c < pieces.size(); ++c) {
      const Subspace ps(rows[0].size(), pieces[c]);
      auto part = split_module(h, ps.basis(), ps.pivots(), opt,
                               salt * 8 + 3 + static_cast<unsigned>(c));
      out.insert(out.end(), std::make_move_iterator(part.begin()),
                 std::make_move_iterator(part.end()));
    }
    return out;
  }
  throw ComputeError("invariant subspace did not split over the rationals");
}

bool canonical_before(const Summand& a, const Summand& b) {
  const auto pa = pivot_sequence(a.basis);
  const auto pb = pivot_sequence(b.basis);
  const std::size_t k = std::min(pa.size(), pb.size());
  for (std::size_t i = 0; i < k; ++i)
    if (pa[i] != pb[i]) return pa[i] < pb[i];
  if (pa.size() != pb.size()) return pa.size() > pb.size();
  for (std::size_t i = 0; i < a.basis.size(); ++i)
    for (std::size_t j = 0; j < a.basis[i].size(); ++j)
      if (a.basis[i][j] != b.basis[i][j]) return a.basis[i][j] < b.basis[i][j];
  return false;
}

struct ClassInfo {
  std::size_t mult = 0;
  std::string type;
  std::size_t end_dim = 0;
};

std::size_t sym_params(const std::string& type, std::size_t s) {
  if (type == "orthogonal") return s * (s + 1) / 2;
  if (type == "unitary") return s * s;
  if (type == "symplectic") return s * (2 * s - 1);
  throw ComputeError("unknown summand type " + type);
}

std::size_t end_dim_of(const std::string& type) {
  if (type == "orthogonal") return 1;
  if (type == "unitary") return 2;
  if (type == "symplectic") return 4;
  throw ComputeError("unknown summand type " + type);
}

/// Basis of all equivariant operators, as matrices over the concatenation
/// of the summand bases.
std::vector<RationalMatrix> assemble_commutant(
    const AdAction& h, const std::vector<Summand>& summands,
    const std::vector<std::vector<std::size_t>>& classes) {
  std::vector<std::size_t> offset(summands.size() + 1, 0);
  for (std::size_t i = 0; i < summands.size(); ++i)
    offset[i + 1] = offset[i] + summands[i].dim();
  const std::size_t total = offset.back();

  std::vector<std::vector<std::size_t>> s_pivots;
  std::vector<std::vector<RationalMatrix>> s_ops;
  for (const auto& s : summands) {
    s_pivots.push_back(pivot_sequence(s.basis));
    s_ops.push_back(restricted_ops_checked(h, s.basis, s_pivots.back()));
  }

  std::vector<RationalMatrix> out;
  for (const auto& members : classes) {
    for (const std::size_t a : members) {
      for (const std::size_t b : members) {
        const TrackedHom maps =
            tracked_hom(h, summands[a].basis, s_pivots[a], s_ops[b],
                        summands[b].dim(), 0, true);
        for (const auto& phi : maps.basis) {
          RationalMatrix big(total, total);
          for (std::size_t i = 0; i < phi.rows(); ++i)
            for (std::size_t j = 0; j < phi.cols(); ++j)
              big.at(offset[b] + i, offset[a] + j) = phi.at(i, j);
          out.push_back(std::move(big));
        }
      }
    }
  }
  return out;
}

std::vector<std::vector<double>> to_float_rows(const std::vector<RVec>& rows) {
  std::vector<std::vector<double>> out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    std::vector<double> f;
    f.reserve(r.size());
    for (const auto& x : r) f.push_back(to_double(x));
    out.push_back(std::move(f));
  }
  return out;
}

/// Gram-Schmidt in floats; returns orthonormal spanning vectors.
std::vector<std::vector<double>> float_orthonormalize(
    const std::vector<std::vector<double>>& rows) {
  std::vector<std::vector<double>> basis;
  for (auto v : rows) {
    for (const auto& u : basis) {
      double c = 0;
      for (std::size_t k = 0; k < v.size(); ++k) c += v[k] * u[k];
      for (std::size_t k = 0; k < v.size(); ++k) v[k] -= c * u[k];
    }
    double n2 = 0;
    for (const double x : v) n2 += x * x;
    if (n2 > 1e-18) {
      const double inv = 1.0 / std::sqrt(n2);
      for (auto& x : v) x *= inv;
      basis.push_back(std::move(v));
    }
  }
  return basis;
}

double residual_against(const std::vector<double>& v,
                        const std::vector<std::vector<double>>& ortho) {
  std::vector<double> rest = v;
  for (const auto& u : ortho) {
    double c = 0;
    for (std::size_t k = 0; k < rest.size(); ++k) c += rest[k] * u[k];
    for (std::size_t k = 0; k < rest.size(); ++k) rest[k] -= c * u[k];
  }
  double n2 = 0;
  for (const double x : rest) n2 += x * x;
  return std::sqrt(n2);
}

/// Matrices of each generator acting on the flattened ambient coordinates.
std::vector<RationalMatrix> ambient_ad_matrices(const AdAction& h) {
  const std::size_t dc = so_dim(h.ambient);
  std::vector<RationalMatrix> out;
  out.reserve(h.ops.size());
  for (std::size_t m = 0; m < h.ops.size(); ++m) {
    RationalMatrix a(dc, dc);
    RVec e(dc, Rational(0));
    for (std::size_t c = 0; c < dc; ++c) {
      e[c] = 1;
      a.set_col(c, h.apply(m, e));
      e[c] = 0;
    }
    out.push_back(std::move(a));
  }
  return out;
}

void run_float_check(const AdAction& h, Decomposition& dec,
                     const DecomposeOptions& opt) {
  std::vector<RVec> cat_rows;
  std::vector<std::size_t> summand_dims;
  for (const auto& s : dec.summands) {
    cat_rows.insert(cat_rows.end(), s.basis.begin(), s.basis.end());
    summand_dims.push_back(s.dim());
  }
  std::vector<std::size_t> sorted_dims = summand_dims;
  std::sort(sorted_dims.begin(), sorted_dims.end());

  const auto basis_ops = assemble_commutant(h, dec.summands, dec.classes);
  if (basis_ops.size() != dec.commutant_dim)
    throw ComputeError("assembled commutant has dimension " +
                       std::to_string(basis_ops.size()) + ", expected " +
                       std::to_string(dec.commutant_dim));

  const RationalMatrix gram = gram_matrix(cat_rows);
  const RationalMatrix gram_inv = inverse_of(gram);
  const auto ad_mats = ambient_ad_matrices(h);
  const auto cat_float = to_float_rows(cat_rows);

  // a single summand leaves only scalar self-adjoint commutant elements,
  // so no spectral split exists; cross-check invariance alone
  if (dec.summands.size() == 1) {
    const auto frame = float_orthonormalize(cat_float);
    const double res = float_span_residual(frame, ad_mats);
    if (res > 1e-7)
      throw ComputeError(
          "numerical invariance check failed on a single summand");
    dec.float_check.ran = true;
    dec.float_check.seed = opt.seed;
    dec.float_check.reseeds = 0;
    dec.float_check.residual = res;
    dec.float_check.cluster_dims = {cat_rows.size()};
    return;
  }

  // per-class orthonormal float frames and offsets into cat_rows
  std::vector<std::size_t> offset(dec.summands.size() + 1, 0);
  for (std::size_t i = 0; i < dec.summands.size(); ++i)
    offset[i + 1] = offset[i] + dec.summands[i].dim();
  std::vector<std::vector<std::vector<double>>> class_frames;
  std::vector<std::size_t> class_dims;
  for (const auto& members : dec.classes) {
    std::vector<std::vector<double>> rows;
    std::size_t cd = 0;
    for (const std::size_t s : members) {
      for (std::size_t i = 0; i < dec.summands[s].dim(); ++i)
        rows.push_back(cat_float[offset[s] + i]);
      cd += dec.summands[s].dim();
    }
    class_frames.push_back(float_orthonormalize(rows));
    class_dims.push_back(cd);
  }

  const std::size_t total = cat_rows.size();
  for (unsigned attempt = 0; attempt <= opt.max_reseeds; ++attempt) {
    std::mt19937 gen(opt.seed + attempt * 7919u + 17u);
    RationalMatrix raw(total, total);
    for (const auto& op : basis_ops)
      raw = raw + op * Rational(small_int(gen, -4, 4));
    RationalMatrix phi = raw + gram_inv * raw.transpose() * gram;
    if (is_scalar_matrix(phi)) continue;

    EigenSplitResult es;
    try {
      es = eigensplit_in_gram(phi, gram, opt.tol);
    } catch (const ComputeError&) {
      continue;
    }
    std::vector<std::size_t> got = es.dims();
    std::sort(got.begin(), got.end());
    if (got != sorted_dims) continue;

    double worst = 0.0;
    std::vector<std::size_t> class_fill(dec.classes.size(), 0);
    bool ok = true;
    for (const auto& cluster : es.clusters) {
      std::vector<std::vector<double>> amb;
      for (const auto& coords : cluster.basis) {
        std::vector<double> v(cat_float[0].size(), 0.0);
        for (std::size_t i = 0; i < total; ++i)
          for (std::size_t k = 0; k < v.size(); ++k)
            v[k] += coords[i] * cat_float[i][k];
        amb.push_back(std::move(v));
      }
      worst = std::max(worst, float_span_residual(amb, ad_mats));
      std::size_t best = class_frames.size();
      double best_res = 1e9;
      for (std::size_t c = 0; c < class_frames.size(); ++c) {
        double res = 0.0;
        for (const auto& v : amb)
          res = std::max(res, residual_against(v, class_frames[c]));
        if (res < best_res) {
          best_res = res;
          best = c;
        }
      }
      if (best == class_frames.size() || best_res > 1e-7) {
        ok = false;
        break;
      }
      worst = std::max(worst, best_res);
      class_fill[best] += cluster.basis.size();
    }
    if (!ok || worst > 1e-7) continue;
    if (class_fill != class_dims) continue;

    dec.float_check.ran = true;
    dec.float_check.seed = opt.seed + attempt * 7919u + 17u;
    dec.float_check.reseeds = attempt;
    dec.float_check.residual = worst;
    dec.float_check.cluster_dims = es.dims();
    return;
  }
  throw ComputeError(
      "numerical spectral check disagrees with the exact decomposition");
}

}  // namespace

RVec AdAction::apply(std::size_t op, const RVec& v) const {
  return flatten_skew(bracket(ops[op], unflatten_skew(ambient, v)));
}

std::vector<std::size_t> Decomposition::dims() const {
  std::vector<std::size_t> d;
  d.reserve(summands.size());
  for (const auto& s : summands) d.push_back(s.dim());
  return d;
}

std::vector<RVec> reductive_complement(const std::vector<RVec>& big,
                                       const std::vector<RVec>& small) {
  if (big.empty()) {
    if (!small.empty()) throw ComputeError("complement inside empty space");
    return {};
  }
  const Subspace bs(big[0].size(), big);
  for (const auto& s : small)
    if (!bs.contains(s))
      throw ComputeError("smaller space is not contained in the larger");
  auto perp = perp_within(big, small);
  if (perp.size() + Subspace(big[0].size(), small).dim() != bs.dim())
    throw ComputeError("orthogonal complement has the wrong dimension");
  return perp;
}

Decomposition irreducible_decomposition(const AdAction& h,
                                        const std::vector<RVec>& space,
                                        const DecomposeOptions& opt) {
  Decomposition dec;
  if (space.empty()) {
    dec.fully_certified = true;
    return dec;
  }
  const Subspace sp(space[0].size(), space);
  if (sp.dim() != space.size())
    throw ComputeError("spanning rows are linearly dependent");

  dec.summands = split_module(h, sp.basis(), sp.pivots(), opt, 0);
  std::sort(dec.summands.begin(), dec.summands.end(), canonical_before);

  // group pairwise-equivalent certified summands
  const std::size_t n = dec.summands.size();
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  const auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::vector<std::size_t>> s_pivots(n);
  std::vector<std::vector<RationalMatrix>> s_ops(n);
  for (std::size_t i = 0; i < n; ++i) {
    s_pivots[i] = pivot_sequence(dec.summands[i].basis);
    if (dec.summands[i].certified)
      s_ops[i] = restricted_ops_checked(h, dec.summands[i].basis, s_pivots[i]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& a = dec.summands[i];
      const auto& b = dec.summands[j];
      if (!a.certified || !b.certified || a.dim() != b.dim()) continue;
      if (a.trivial != b.trivial) continue;
      if (find(i) == find(j)) continue;
      const std::size_t hom =
          a.trivial ? 1
                    : tracked_hom(h, a.basis, s_pivots[i], s_ops[j], b.dim(),
                                  0, false)
                          .dim;
      if (hom > 0) parent[find(j)] = find(i);
    }
  }
  std::vector<std::vector<std::size_t>> groups(n);
  for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);
  for (auto& g : groups)
    if (!g.empty()) dec.classes.push_back(std::move(g));

  dec.fully_certified = true;
  for (const auto& s : dec.summands)
    dec.fully_certified = dec.fully_certified && s.certified;

  if (dec.fully_certified) {
    for (const auto& members : dec.classes) {
      const std::string& type = dec.summands[members[0]].type;
      for (const std::size_t m : members)
        if (dec.summands[m].type != type)
          throw ComputeError("equivalent summands disagree on type");
      const std::size_t s = members.size();
      dec.commutant_dim += end_dim_of(type) * s * s;
      dec.commutant_sym_dim += sym_params(type, s);
    }
    if (opt.float_check) run_float_check(h, dec, opt);
  }
  return dec;
}

std::size_t hom_dimension(const AdAction& h, const std::vector<RVec>& a,
                          const std::vector<RVec>& b) {
  if (a.empty() || b.empty()) return 0;
  const Subspace bsp(b[0].size(), b);
  const auto b_ops = restricted_ops_checked(h, bsp.basis(), bsp.pivots());

  const Subspace asp(a[0].size(), a);
  Subspace remaining = asp;
  std::size_t total = 0;
  while (remaining.dim() > 0) {
    const Subspace piece = cyclic_closure(h, remaining.basis()[0]);
    if (!asp.contains_all(piece.basis()))
      throw ComputeError("domain is not an invariant subspace");
    total += tracked_hom(h, piece.basis(), piece.pivots(), b_ops, bsp.dim(), 0,
                         false)
                 .dim;
    remaining = Subspace(a[0].size(),
                         perp_within(remaining.basis(), piece.basis()));
  }
  return total;
}

std::string summand_type(const AdAction& h, const std::vector<RVec>& s) {
  if (s.empty()) throw ComputeError("empty subspace has no type");
  const Subspace sp(s[0].size(), s);
  const auto ops = restricted_ops_checked(h, sp.basis(), sp.pivots());
  bool all_zero = true;
  for (const auto& a : ops) all_zero = all_zero && a.is_zero();
  if (all_zero) {
    if (sp.dim() != 1) throw ComputeError("subspace is not irreducible");
    return "orthogonal";
  }
  if (cyclic_closure(h, sp.basis()[0]).dim() != sp.dim())
    throw ComputeError("subspace is not irreducible");
  const TrackedHom end =
      tracked_hom(h, sp.basis(), sp.pivots(), ops, sp.dim(), 1, true);
  const auto syms = symmetric_part(end.basis, gram_matrix(sp.basis()));
  if (syms.size() != 1) throw ComputeError("subspace is not irreducible");
  return type_from_end_dim(end.dim);
}

std::vector<RationalMatrix> commutant(const AdAction& h,
                                      const std::vector<RVec>& space) {
  if (space.empty()) return {};
  DecomposeOptions opt;
  opt.float_check = false;
  const Decomposition dec = irreducible_decomposition(h, space, opt);
  if (!dec.fully_certified)
    throw ComputeError("commutant needs a fully certified decomposition");
  const auto cat_ops = assemble_commutant(h, dec.summands, dec.classes);

  std::vector<RVec> cat_rows;
  for (const auto& s : dec.summands)
    cat_rows.insert(cat_rows.end(), s.basis.begin(), s.basis.end());
  const Subspace sp(space[0].size(), space);
  RationalMatrix change(sp.dim(), sp.dim());
  for (std::size_t j = 0; j < cat_rows.size(); ++j) {
    const auto c = echelon_coords(sp.basis(), sp.pivots(), cat_rows[j]);
    if (!c) throw ComputeError("summand basis escaped the input span");
    change.set_col(j, *c);
  }
  const RationalMatrix back = inverse_of(change);
  std::vector<RationalMatrix> out;
  out.reserve(cat_ops.size());
  for (const auto& op : cat_ops) out.push_back(change * op * back);
  return out;
}

std::vector<RationalMatrix> restricted_ops(const AdAction& h,
                                           const std::vector<RVec>& rows) {
  if (rows.empty()) return {};
  const Subspace sp(rows[0].size(), rows);
  if (sp.basis() != rows)
    throw ComputeError("rows must form a reduced echelon basis");
  return restricted_ops_checked(h, sp.basis(), sp.pivots());
}

}  // namespace sublab
