#include "sublab/lie.hpp"

#include <stdexcept>

namespace sublab {

std::size_t so_dim(std::size_t n) { return n * (n - 1) / 2; }

std::size_t e_index(std::size_t n, std::size_t i, std::size_t j) {
  if (i >= j || j >= n) throw InputError("e_index: need i < j < n");
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

RationalMatrix e_matrix(std::size_t n, std::size_t i, std::size_t j) {
  if (i >= j || j >= n) throw InputError("e_matrix: need i < j < n");
  RationalMatrix m(n, n);
  m.at(i, j) = 1;
  m.at(j, i) = -1;
  return m;
}

RVec flatten_skew(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw InputError("flatten_skew: matrix not square");
  RVec v(so_dim(n), Rational(0));
  std::size_t idx = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (m.at(i, j) != -m.at(j, i))
        throw InputError("flatten_skew: matrix not skew-symmetric");
      v[idx++] = m.at(i, j);
    }
  return v;
}

RationalMatrix unflatten_skew(std::size_t n, const RVec& v) {
  if (v.size() != so_dim(n)) throw InputError("unflatten_skew: bad coordinate length");
  RationalMatrix m(n, n);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      m.at(i, j) = v[idx];
      m.at(j, i) = -v[idx];
      ++idx;
    }
  return m;
}

RationalMatrix bracket(const RationalMatrix& x, const RationalMatrix& y) {
  return x * y - y * x;
}

Rational form_q(const RationalMatrix& x, const RationalMatrix& y) {
  const std::size_t n = x.rows();
  if (x.cols() != n || y.rows() != n || y.cols() != n)
    throw InputError("form_q: shape mismatch");
  Rational tr(0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (x.at(i, k) != 0 && y.at(k, i) != 0) tr += x.at(i, k) * y.at(k, i);
  return Rational(-1, 2) * tr;
}

std::vector<RVec> LieAlgebraBasis::coords() const {
  std::vector<RVec> rows;
  rows.reserve(basis.size());
  for (const auto& b : basis) rows.push_back(flatten_skew(b));
  return rows;
}

Subspace LieAlgebraBasis::span() const {
  Subspace s(so_dim(ambient));
  for (const auto& b : basis) s.add(flatten_skew(b));
  if (s.dim() != basis.size())
    throw ComputeError("algebra basis for " + label + " is linearly dependent");
  return s;
}

LieAlgebraBasis build_so(std::size_t n) {
  if (n < 2) throw InputError("build_so: need n >= 2");
  LieAlgebraBasis g;
  g.label = "so(" + std::to_string(n) + ")";
  g.ambient = n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.basis.push_back(e_matrix(n, i, j));
  return g;
}

namespace {

// Complex entry a+bi at slot (p,q) of an n x n complex matrix, realified:
// 2x2 block [[a,-b],[b,a]] at rows (2p, 2p+1), cols (2q, 2q+1), 0-based.
void put_complex(RationalMatrix& m, std::size_t p, std::size_t q, const Rational& a,
                 const Rational& b) {
  m.at(2 * p, 2 * q) = a;
  m.at(2 * p, 2 * q + 1) = -b;
  m.at(2 * p + 1, 2 * q) = b;
  m.at(2 * p + 1, 2 * q + 1) = a;
}

}  // namespace

LieAlgebraBasis build_u(std::size_t n) {
  if (n < 1) throw InputError("build_u: need n >= 1");
  LieAlgebraBasis g;
  g.label = "u(" + std::to_string(n) + ")";
  g.ambient = 2 * n;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) {
      RationalMatrix x(2 * n, 2 * n);
      put_complex(x, p, q, 1, 0);
      put_complex(x, q, p, -1, 0);
      g.basis.push_back(x);
      RationalMatrix y(2 * n, 2 * n);
      put_complex(y, p, q, 0, 1);
      put_complex(y, q, p, 0, 1);
      g.basis.push_back(y);
    }
  for (std::size_t p = 0; p < n; ++p) {
    RationalMatrix d(2 * n, 2 * n);
    put_complex(d, p, p, 0, 1);
    g.basis.push_back(d);
  }
  return g;
}

LieAlgebraBasis build_su(std::size_t n) {
  if (n < 1) throw InputError("build_su: need n >= 1");
  LieAlgebraBasis g;
  g.label = "su(" + std::to_string(n) + ")";
  g.ambient = 2 * n;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) {
      RationalMatrix x(2 * n, 2 * n);
      put_complex(x, p, q, 1, 0);
      put_complex(x, q, p, -1, 0);
      g.basis.push_back(x);
      RationalMatrix y(2 * n, 2 * n);
      put_complex(y, p, q, 0, 1);
      put_complex(y, q, p, 0, 1);
      g.basis.push_back(y);
    }
  for (std::size_t p = 0; p + 1 < n; ++p) {
    RationalMatrix d(2 * n, 2 * n);
    put_complex(d, p, p, 0, 1);
    put_complex(d, p + 1, p + 1, 0, -1);
    g.basis.push_back(d);
  }
  return g;
}

RationalMatrix quaternion_left(int u) {
  RationalMatrix m(4, 4);
  switch (u) {
    case 0:
      for (std::size_t r = 0; r < 4; ++r) m.at(r, r) = 1;
      break;
    case 1:  // i q: (a,b,c,d) -> (-b, a, -d, c)
      m.at(0, 1) = -1; m.at(1, 0) = 1; m.at(2, 3) = -1; m.at(3, 2) = 1;
      break;
    case 2:  // j q: (a,b,c,d) -> (-c, d, a, -b)
      m.at(0, 2) = -1; m.at(1, 3) = 1; m.at(2, 0) = 1; m.at(3, 1) = -1;
      break;
    case 3:  // k q: (a,b,c,d) -> (-d, -c, b, a)
      m.at(0, 3) = -1; m.at(1, 2) = -1; m.at(2, 1) = 1; m.at(3, 0) = 1;
      break;
    default:
      throw InputError("quaternion_left: unit index out of range");
  }
  return m;
}

RationalMatrix quaternion_right(int u) {
  RationalMatrix m(4, 4);
  switch (u) {
    case 0:
      for (std::size_t r = 0; r < 4; ++r) m.at(r, r) = 1;
      break;
    case 1:  // q i: (a,b,c,d) -> (-b, a, d, -c)
      m.at(0, 1) = -1; m.at(1, 0) = 1; m.at(2, 3) = 1; m.at(3, 2) = -1;
      break;
    case 2:  // q j: (a,b,c,d) -> (-c, -d, a, b)
      m.at(0, 2) = -1; m.at(1, 3) = -1; m.at(2, 0) = 1; m.at(3, 1) = 1;
      break;
    case 3:  // q k: (a,b,c,d) -> (-d, c, -b, a)
      m.at(0, 3) = -1; m.at(1, 2) = 1; m.at(2, 1) = -1; m.at(3, 0) = 1;
      break;
    default:
      throw InputError("quaternion_right: unit index out of range");
  }
  return m;
}

namespace {

// Copies the 4x4 block into rows 4p.., cols 4q.. of m.
void put_quaternion_block(RationalMatrix& m, std::size_t p, std::size_t q,
                          const RationalMatrix& block, bool negate_transpose) {
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      if (block.at(r, c) == 0) continue;
      if (negate_transpose)
        m.at(4 * p + c, 4 * q + r) = -block.at(r, c);
      else
        m.at(4 * p + r, 4 * q + c) = block.at(r, c);
    }
}

}  // namespace

LieAlgebraBasis build_sp(std::size_t n) {
  if (n < 1) throw InputError("build_sp: need n >= 1");
  LieAlgebraBasis g;
  g.label = "sp(" + std::to_string(n) + ")";
  g.ambient = 4 * n;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q)
      for (int u = 0; u < 4; ++u) {
        RationalMatrix m(4 * n, 4 * n);
        const RationalMatrix block = quaternion_left(u);
        put_quaternion_block(m, p, q, block, false);
        put_quaternion_block(m, q, p, block, true);
        g.basis.push_back(m);
      }
  for (std::size_t p = 0; p < n; ++p)
    for (int u = 1; u < 4; ++u) {
      RationalMatrix m(4 * n, 4 * n);
      put_quaternion_block(m, p, p, quaternion_left(u), false);
      g.basis.push_back(m);
    }
  return g;
}

LieAlgebraBasis build_sp_sp1(std::size_t n) {
  LieAlgebraBasis g = build_sp(n);
  g.label = "sp(" + std::to_string(n) + ")sp(1)";
  for (int u = 1; u < 4; ++u) {
    RationalMatrix m(4 * n, 4 * n);
    const RationalMatrix block = quaternion_right(u);
    for (std::size_t p = 0; p < n; ++p) put_quaternion_block(m, p, p, block, false);
    g.basis.push_back(m);
  }
  return g;
}

RationalMatrix ad_operator(const RationalMatrix& x, const std::vector<RVec>& on,
                           std::size_t ambient) {
  if (on.empty()) return RationalMatrix(0, 0);
  RationalMatrix result(on.size(), on.size());
  for (std::size_t j = 0; j < on.size(); ++j) {
    const RVec image = flatten_skew(bracket(x, unflatten_skew(ambient, on[j])));
    auto coords = coordinates_in(on, image);
    if (!coords)
      throw ComputeError("ad_operator: bracket leaves the span at basis element " +
                         std::to_string(j));
    for (std::size_t i = 0; i < on.size(); ++i) result.at(i, j) = (*coords)[i];
  }
  return result;
}

}  // namespace sublab
