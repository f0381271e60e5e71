#include "sublab/embedding.hpp"

namespace sublab {

std::vector<RVec> Embedding::coords() const {
  std::vector<RVec> rows;
  rows.reserve(image.size());
  for (const auto& m : image) rows.push_back(flatten_skew(m));
  return rows;
}

LieAlgebraBasis Embedding::algebra() const {
  LieAlgebraBasis g;
  g.label = label;
  g.ambient = ambient;
  g.basis = image;
  return g;
}

namespace {

RationalMatrix pad(const RationalMatrix& m, std::size_t n) {
  if (m.rows() > n) throw InputError("embedding does not fit the ambient space");
  RationalMatrix out(n, n);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0) out.at(i, j) = m.at(i, j);
  return out;
}

Embedding from_algebra(const LieAlgebraBasis& g, std::size_t m) {
  Embedding e;
  e.label = g.label + " < so(" + std::to_string(m) + ")";
  e.ambient = m;
  e.leading_block = true;
  e.block = g.ambient;
  e.image.reserve(g.basis.size());
  for (const auto& b : g.basis) e.image.push_back(pad(b, m));
  return e;
}

}  // namespace

Embedding embed_so_block(std::size_t k, std::size_t m) {
  if (k > m) throw InputError("embed_so_block: k exceeds m");
  return from_algebra(build_so(k), m);
}

Embedding embed_u_in_so(std::size_t k, std::size_t m) {
  if (2 * k > m) throw InputError("embed_u_in_so: need 2k <= m");
  return from_algebra(build_u(k), m);
}

Embedding embed_su_in_so(std::size_t k, std::size_t m) {
  if (2 * k > m) throw InputError("embed_su_in_so: need 2k <= m");
  return from_algebra(build_su(k), m);
}

Embedding embed_sp_in_so(std::size_t k, std::size_t m) {
  if (4 * k > m) throw InputError("embed_sp_in_so: need 4k <= m");
  return from_algebra(build_sp(k), m);
}

Embedding embed_spsp1_in_so(std::size_t k, std::size_t m) {
  if (4 * k > m) throw InputError("embed_spsp1_in_so: need 4k <= m");
  return from_algebra(build_sp_sp1(k), m);
}

Embedding embed_diag_circle(std::size_t m) {
  if (m < 3 || m % 2 == 0) throw InputError("embed_diag_circle: need odd m >= 3");
  RationalMatrix z(m, m);
  for (std::size_t i = 0; i + 1 < m; i += 2) {
    z.at(i, i + 1) = 1;
    z.at(i + 1, i) = -1;
  }
  Embedding e;
  e.label = "circle < so(" + std::to_string(m) + ")";
  e.ambient = m;
  e.leading_block = true;
  e.block = m - 1;
  e.image.push_back(std::move(z));
  return e;
}

namespace {

/// Complex n x n matrices as a rational pair (re, im); realified with
/// complex slot c on real coordinates (2c-1, 2c).
struct ComplexMatrix {
  RationalMatrix re, im;
  explicit ComplexMatrix(std::size_t n) : re(n, n), im(n, n) {}
};

RationalMatrix realify(const ComplexMatrix& c) {
  const std::size_t n = c.re.rows();
  RationalMatrix out(2 * n, 2 * n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      const Rational& a = c.re.at(p, q);
      const Rational& b = c.im.at(p, q);
      if (a == 0 && b == 0) continue;
      out.at(2 * p, 2 * q) = a;
      out.at(2 * p, 2 * q + 1) = -b;
      out.at(2 * p + 1, 2 * q) = b;
      out.at(2 * p + 1, 2 * q + 1) = a;
    }
  return out;
}

/// 2x2 complex blocks of the quaternion units on a (z, w) slot pair,
/// u in {0:1, 1:i, 2:j, 3:k}; entries (re, im) per position.
void put_unit_block(ComplexMatrix& m, std::size_t p, std::size_t q, int u,
                    bool negate_adjoint) {
  // Block rows 2p..2p+1, cols 2q..2q+1 get M(u); when negate_adjoint the
  // mirror block (q, p) gets -M(u)^dagger.
  auto set = [&](std::size_t r, std::size_t c, long re, long im) {
    m.re.at(2 * p + r, 2 * q + c) += re;
    m.im.at(2 * p + r, 2 * q + c) += im;
    if (negate_adjoint) {
      m.re.at(2 * q + c, 2 * p + r) += -re;
      m.im.at(2 * q + c, 2 * p + r) += im;
    }
  };
  switch (u) {
    case 0: set(0, 0, 1, 0); set(1, 1, 1, 0); break;
    case 1: set(0, 0, 0, 1); set(1, 1, 0, -1); break;
    case 2: set(0, 1, -1, 0); set(1, 0, 1, 0); break;
    case 3: set(0, 1, 0, -1); set(1, 0, 0, -1); break;
    default: throw InputError("quaternion unit index out of range");
  }
}

}  // namespace

Embedding embed_sp_in_su(std::size_t k, std::size_t m) {
  if (k < 1 || 2 * k > m) throw InputError("embed_sp_in_su: need 1 <= k, 2k <= m");
  Embedding e;
  e.label = "sp(" + std::to_string(k) + ") < su(" + std::to_string(m) + ")";
  e.ambient = 2 * m;
  e.leading_block = true;
  e.block = 4 * k;
  for (std::size_t p = 0; p < k; ++p)
    for (std::size_t q = p + 1; q < k; ++q)
      for (int u = 0; u < 4; ++u) {
        ComplexMatrix c(m);
        put_unit_block(c, p, q, u, true);
        e.image.push_back(realify(c));
      }
  for (std::size_t p = 0; p < k; ++p)
    for (int u = 1; u < 4; ++u) {
      ComplexMatrix c(m);
      put_unit_block(c, p, p, u, false);
      e.image.push_back(realify(c));
    }
  return e;
}

Embedding embed_su_block_in_su(std::size_t k, std::size_t m) {
  if (k > m) throw InputError("embed_su_block_in_su: k exceeds m");
  LieAlgebraBasis small = build_su(k);
  Embedding e = from_algebra(small, 2 * m);
  e.label = "su(" + std::to_string(k) + ") < su(" + std::to_string(m) + ")";
  return e;
}

Embedding embed_u_in_su(std::size_t k, std::size_t m) {
  if (k >= m) throw InputError("embed_u_in_su: need k < m");
  Embedding e = embed_su_block_in_su(k, m);
  e.label = "u(" + std::to_string(k) + ") < su(" + std::to_string(m) + ")";
  ComplexMatrix z(m);
  for (std::size_t p = 0; p < m; ++p)
    z.im.at(p, p) = (p < k) ? Rational(static_cast<long>(m - k))
                            : Rational(-static_cast<long>(k));
  e.image.push_back(realify(z));
  e.block = 2 * m;
  e.leading_block = true;
  return e;
}

Embedding compose(const Embedding& outer, const Embedding& inner) {
  if (!outer.leading_block)
    throw InputError("compose: outer embedding is not a leading block");
  if (inner.ambient != outer.block)
    throw InputError("compose: inner ambient does not match outer block");
  Embedding e;
  e.label = inner.label + " < " + outer.label;
  e.ambient = outer.ambient;
  e.leading_block = true;
  e.block = inner.leading_block ? inner.block : inner.ambient;
  e.image.reserve(inner.image.size());
  for (const auto& b : inner.image) e.image.push_back(pad(b, outer.ambient));
  return e;
}

void verify_closed(const Embedding& e) {
  Subspace span(so_dim(e.ambient));
  for (const auto& b : e.image) span.add(flatten_skew(b));
  if (span.dim() != e.image.size())
    throw ComputeError("embedding image is linearly dependent: " + e.label);
  for (std::size_t i = 0; i < e.image.size(); ++i)
    for (std::size_t j = i + 1; j < e.image.size(); ++j) {
      if (!span.contains(flatten_skew(bracket(e.image[i], e.image[j]))))
        throw ComputeError("embedding image is not closed under brackets: " +
                           e.label + " at pair (" + std::to_string(i) + "," +
                           std::to_string(j) + ")");
    }
}

}  // namespace sublab
