#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sublab/lie.hpp"

namespace sublab {

/// Image of a subalgebra inside so(N), in real matrix form. Embeddings
/// whose image only touches the leading `block` real coordinates compose
/// with larger ambient spaces by zero padding.
struct Embedding {
  std::string label;
  std::size_t ambient = 0;
  bool leading_block = false;
  std::size_t block = 0;
  std::vector<RationalMatrix> image;

  std::size_t dim() const { return image.size(); }
  std::vector<RVec> coords() const;
  LieAlgebraBasis algebra() const;
};

/// so(k) on the first k coordinates of so(m).
Embedding embed_so_block(std::size_t k, std::size_t m);

/// u(k) realified on the first 2k coordinates of so(m).
Embedding embed_u_in_so(std::size_t k, std::size_t m);

/// su(k) realified on the first 2k coordinates of so(m).
Embedding embed_su_in_so(std::size_t k, std::size_t m);

/// sp(k) realified on the first 4k coordinates of so(m).
Embedding embed_sp_in_so(std::size_t k, std::size_t m);

/// sp(k) + sp(1) with the sp(1) factor acting by right multiplication on
/// the first k quaternionic slots; image inside so(m), 4k <= m.
Embedding embed_spsp1_in_so(std::size_t k, std::size_t m);

/// The circle sum E_12 + E_34 + ... inside so(m) for odd m, fixing the
/// last coordinate.
Embedding embed_diag_circle(std::size_t m);

/// sp(k) inside su(m) (2k <= m), realified in so(2m). Quaternionic slot p
/// occupies complex slots (2p-1, 2p); the quaternion units act by the
/// 2x2 complex blocks diag(i,-i), [[0,-1],[1,0]], [[0,-i],[-i,0]].
Embedding embed_sp_in_su(std::size_t k, std::size_t m);

/// su(k) block inside su(m), realified in so(2m).
Embedding embed_su_block_in_su(std::size_t k, std::size_t m);

/// u(k) inside su(m) (k < m): su(k) block plus the traceless diagonal
/// circle i*diag(m-k, ..., m-k, -k, ..., -k); realified in so(2m).
Embedding embed_u_in_su(std::size_t k, std::size_t m);

/// Pads inner's image into outer's ambient space. Requires outer to be a
/// leading-block embedding whose block size equals inner's ambient size.
Embedding compose(const Embedding& outer, const Embedding& inner);

/// Exact subalgebra check: all pairwise brackets stay inside the span.
/// Throws ComputeError naming the first failing pair.
void verify_closed(const Embedding& e);

}  // namespace sublab
