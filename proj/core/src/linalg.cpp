#include "sublab/linalg.hpp"

#include <algorithm>

namespace sublab {

std::vector<std::size_t> rref_inplace(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t sel = m.rows();
    for (std::size_t i = r; i < m.rows(); ++i)
      if (m.at(i, c) != 0) {
        sel = i;
        break;
      }
    if (sel == m.rows()) continue;
    if (sel != r)
      for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m.at(sel, j), m.at(r, j));
    Rational inv = 1 / m.at(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Rational f = m.at(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(RationalMatrix m) { return rref_inplace(m).size(); }

RationalMatrix kernel(const RationalMatrix& m) {
  RationalMatrix r = m;
  std::vector<std::size_t> pivots = rref_inplace(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  RationalMatrix k(m.cols(), free_cols.size());
  for (std::size_t fi = 0; fi < free_cols.size(); ++fi) {
    std::size_t f = free_cols[fi];
    k.at(f, fi) = 1;
    for (std::size_t pr = 0; pr < pivots.size(); ++pr)
      k.at(pivots[pr], fi) = -r.at(pr, f);
  }
  return k;
}

std::optional<RVec> solve(const RationalMatrix& m, const RVec& b) {
  if (b.size() != m.rows()) throw InputError("solve size mismatch");
  RationalMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  std::vector<std::size_t> pivots = rref_inplace(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  RVec x(m.cols(), Rational(0));
  for (std::size_t pr = 0; pr < pivots.size(); ++pr)
    x[pivots[pr]] = aug.at(pr, m.cols());
  return x;
}

std::optional<RVec> coordinates_in(const std::vector<RVec>& span,
                                   const RVec& v) {
  return solve(RationalMatrix::from_columns(span), v);
}

Subspace::Subspace(std::size_t ambient_dim, const std::vector<RVec>& gens)
    : ambient_(ambient_dim) {
  for (const auto& g : gens) add(g);
}

RVec Subspace::reduce(const RVec& v) const {
  if (v.size() != ambient_) throw InputError("subspace ambient mismatch");
  RVec r = v;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rational& c = r[pivots_[k]];
    if (c != 0) axpy_inplace(r, -c, rows_[k]);
  }
  return r;
}

bool Subspace::add(const RVec& v) {
  RVec r = reduce(v);
  std::size_t p = ambient_;
  for (std::size_t j = 0; j < ambient_; ++j)
    if (r[j] != 0) {
      p = j;
      break;
    }
  if (p == ambient_) return false;
  Rational inv = 1 / r[p];
  for (auto& x : r) x *= inv;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rational& c = rows_[k][p];
    if (c != 0) axpy_inplace(rows_[k], -c, r);
  }
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(r));
  pivots_.insert(pivots_.begin() + pos, p);
  return true;
}

bool Subspace::contains_all(const std::vector<RVec>& vs) const {
  for (const auto& v : vs)
    if (!contains(v)) return false;
  return true;
}

std::vector<RVec> intersect_spans(const std::vector<RVec>& a,
                                  const std::vector<RVec>& b) {
  if (a.empty() || b.empty()) return {};
  std::size_t n = a[0].size();
  RationalMatrix m(n, a.size() + b.size());
  for (std::size_t j = 0; j < a.size(); ++j) m.set_col(j, a[j]);
  for (std::size_t j = 0; j < b.size(); ++j) {
    RVec neg = b[j];
    for (auto& x : neg) x = -x;
    m.set_col(a.size() + j, neg);
  }
  RationalMatrix k = kernel(m);
  Subspace out(n);
  for (std::size_t c = 0; c < k.cols(); ++c) {
    RVec v(n, Rational(0));
    for (std::size_t j = 0; j < a.size(); ++j)
      if (k.at(j, c) != 0) axpy_inplace(v, k.at(j, c), a[j]);
    out.add(v);
  }
  return out.basis();
}

std::vector<RVec> perp_within(const std::vector<RVec>& big,
                              const std::vector<RVec>& small) {
  if (big.empty()) return {};
  if (small.empty()) return big;
  RationalMatrix m(small.size(), big.size());
  for (std::size_t i = 0; i < small.size(); ++i)
    for (std::size_t j = 0; j < big.size(); ++j)
      m.at(i, j) = dot(small[i], big[j]);
  RationalMatrix k = kernel(m);
  std::size_t n = big[0].size();
  Subspace out(n);
  for (std::size_t c = 0; c < k.cols(); ++c) {
    RVec v(n, Rational(0));
    for (std::size_t j = 0; j < big.size(); ++j)
      if (k.at(j, c) != 0) axpy_inplace(v, k.at(j, c), big[j]);
    out.add(v);
  }
  return out.basis();
}

RationalMatrix gram_matrix(const std::vector<RVec>& vecs) {
  RationalMatrix g(vecs.size(), vecs.size());
  for (std::size_t i = 0; i < vecs.size(); ++i)
    for (std::size_t j = i; j < vecs.size(); ++j) {
      g.at(i, j) = dot(vecs[i], vecs[j]);
      g.at(j, i) = g.at(i, j);
    }
  return g;
}

bool is_positive_definite(RationalMatrix g) {
  if (g.rows() != g.cols()) throw InputError("pd check needs square matrix");
  std::size_t n = g.rows();
  for (std::size_t k = 0; k < n; ++k) {
    if (g.at(k, k) <= 0) return false;
    Rational inv = 1 / g.at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (g.at(i, k) == 0) continue;
      Rational f = g.at(i, k) * inv;
      for (std::size_t j = k; j < n; ++j) g.at(i, j) -= f * g.at(k, j);
    }
  }
  return true;
}

Projector::Projector(std::size_t ambient_dim, const std::vector<RVec>& basis) {
  if (basis.empty()) {
    matrix_ = RationalMatrix(ambient_dim, ambient_dim);
    return;
  }
  RationalMatrix B = RationalMatrix::from_columns(basis);
  RationalMatrix Bt = B.transpose();
  RationalMatrix G = Bt * B;
  // Solve G X = Bt column by column, then P = B X.
  std::size_t k = basis.size();
  RationalMatrix aug(k, k + ambient_dim);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug.at(i, j) = G.at(i, j);
    for (std::size_t j = 0; j < ambient_dim; ++j)
      aug.at(i, k + j) = Bt.at(i, j);
  }
  std::vector<std::size_t> pivots = rref_inplace(aug);
  if (pivots.size() != k || pivots[k - 1] != k - 1)
    throw ComputeError("projector basis is linearly dependent");
  RationalMatrix X(k, ambient_dim);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < ambient_dim; ++j) X.at(i, j) = aug.at(i, k + j);
  matrix_ = B * X;
}

double to_double(const Rational& r) { return r.get_d(); }

}  // namespace sublab
