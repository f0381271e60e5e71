#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sublab/linalg.hpp"
#include "sublab/matrix.hpp"
#include "sublab/types.hpp"

namespace sublab {

/// Skew-symmetric matrices over the rationals, expressed in the elementary
/// basis E_ij (i < j, lexicographic): +1 at (i,j), -1 at (j,i).
/// Q(X,Y) = -1/2 tr(XY) makes this basis orthonormal, so flattened
/// coordinates carry Q as the standard dot product.

std::size_t so_dim(std::size_t n);

/// Flat index of E_ij within so(n), 0-based, requires i < j < n.
std::size_t e_index(std::size_t n, std::size_t i, std::size_t j);

RationalMatrix e_matrix(std::size_t n, std::size_t i, std::size_t j);

/// Upper-triangle coordinates of a skew matrix in lexicographic E order.
RVec flatten_skew(const RationalMatrix& m);
RationalMatrix unflatten_skew(std::size_t n, const RVec& v);

RationalMatrix bracket(const RationalMatrix& x, const RationalMatrix& y);

/// Bi-invariant form Q(X,Y) = -1/2 tr(XY).
Rational form_q(const RationalMatrix& x, const RationalMatrix& y);

/// Ordered basis of a compact matrix Lie algebra realified inside so(N).
struct LieAlgebraBasis {
  std::string label;
  std::size_t ambient = 0;
  std::vector<RationalMatrix> basis;

  std::size_t dim() const { return basis.size(); }
  std::vector<RVec> coords() const;
  Subspace span() const;
};

/// so(n): all E_ij in lexicographic order.
LieAlgebraBasis build_so(std::size_t n);

/// u(n) realified in so(2n); complex slot p occupies real coordinates
/// (2p-1, 2p), and multiplication by i acts as [[0,-1],[1,0]] there.
LieAlgebraBasis build_u(std::size_t n);

/// su(n) realified in so(2n): off-diagonal pairs then n-1 traceless
/// diagonal combinations.
LieAlgebraBasis build_su(std::size_t n);

/// sp(n) realified in so(4n): quaternionic slot p occupies real
/// coordinates (4p-3..4p) with component order (1, i, j, k); generators
/// are left multiplications by quaternionic skew-Hermitian matrices.
LieAlgebraBasis build_sp(std::size_t n);

/// sp(n) + sp(1) in so(4n): build_sp(n) followed by the three global
/// right multiplications R_i, R_j, R_k.
LieAlgebraBasis build_sp_sp1(std::size_t n);

/// Left multiplication by the quaternion unit u in {0:1, 1:i, 2:j, 3:k}
/// as a 4x4 rational matrix on components (1, i, j, k).
RationalMatrix quaternion_left(int u);
/// Right multiplication by the same units.
RationalMatrix quaternion_right(int u);

/// Matrix of ad(x) restricted to span(on), columns in the given basis.
/// Throws ComputeError naming the first basis element whose bracket
/// leaves the span.
RationalMatrix ad_operator(const RationalMatrix& x, const std::vector<RVec>& on,
                           std::size_t ambient);

}  // namespace sublab
