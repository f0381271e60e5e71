#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sublab/lie.hpp"

namespace sublab {

/// Action of a fixed list of algebra elements on ambient so(N) coordinates.
struct AdAction {
  std::size_t ambient = 0;
  std::vector<RationalMatrix> ops;  ///< skew N x N generators

  static AdAction from(const LieAlgebraBasis& g) { return {g.ambient, g.basis}; }
  RVec apply(std::size_t op, const RVec& v) const;
};

/// One invariant summand of a decomposition.
struct Summand {
  std::vector<RVec> basis;  ///< canonical reduced-row-echelon rows
  std::string type;         ///< "orthogonal" | "unitary" | "symplectic" | "module"
  bool trivial = false;     ///< all generators act as zero
  bool certified = false;   ///< irreducibility proven exactly
  std::size_t dim() const { return basis.size(); }
};

/// Float cross-check data recorded by a decomposition.
struct FloatCheck {
  bool ran = false;
  unsigned seed = 0;
  unsigned reseeds = 0;
  double residual = 0.0;
  std::vector<std::size_t> cluster_dims;
};

struct Decomposition {
  std::vector<Summand> summands;
  /// Indices grouped by pairwise equivalence (nonzero hom); singletons
  /// included. Defined only over certified summands plus isolated modules.
  std::vector<std::vector<std::size_t>> classes;
  std::size_t commutant_dim = 0;      ///< sum over classes of dim_R End * s^2
  std::size_t commutant_sym_dim = 0;  ///< self-adjoint part of the commutant
  bool fully_certified = false;
  FloatCheck float_check;

  std::vector<std::size_t> dims() const;
};

struct DecomposeOptions {
  std::size_t certify_max_dim = static_cast<std::size_t>(-1);
  unsigned seed = 0;
  double tol = 1e-9;
  bool float_check = true;
  unsigned max_reseeds = 8;
};

/// Basis of the Q-orthogonal complement of small inside big; checks
/// small is contained in big.
std::vector<RVec> reductive_complement(const std::vector<RVec>& big,
                                       const std::vector<RVec>& small);

/// Splits `space` (must be invariant) into irreducible summands, exactly.
/// Summands come out in canonical order: seeds are taken from the reduced
/// row echelon basis of `space` in coordinate order, each seed generates a
/// cyclic module, and reducible modules are split through rational
/// spectral projections of self-adjoint commutant elements. Summands of
/// dimension above certify_max_dim are returned as uncertified modules.
Decomposition irreducible_decomposition(const AdAction& h,
                                        const std::vector<RVec>& space,
                                        const DecomposeOptions& opt = {});

/// dim of the space of equivariant linear maps span(a) -> span(b); both
/// spans must be invariant.
std::size_t hom_dimension(const AdAction& h, const std::vector<RVec>& a,
                          const std::vector<RVec>& b);

/// Type of an irreducible invariant subspace from dim End in {1, 2, 4}.
std::string summand_type(const AdAction& h, const std::vector<RVec>& s);

/// Exact basis of all equivariant operators on span(space), as matrices in
/// the coordinates of the given basis rows. Assembled from the hom spaces
/// of an exact decomposition, which equals the kernel of the full
/// intertwiner system.
std::vector<RationalMatrix> commutant(const AdAction& h,
                                      const std::vector<RVec>& space);

/// Matrices of each generator restricted to span(rows).
std::vector<RationalMatrix> restricted_ops(const AdAction& h,
                                           const std::vector<RVec>& rows);

}  // namespace sublab
