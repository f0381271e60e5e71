#pragma once

#include "sublab/matrix.hpp"

#include <cstdint>
#include <optional>

namespace sublab {

/// Reduced row echelon form in place. Returns the pivot column indices in
/// row order.
std::vector<std::size_t> rref_inplace(RationalMatrix& m);

std::size_t rank(RationalMatrix m);

/// Columns span the exact null space {x : m x = 0}, one canonical column
/// per free variable (that variable 1, the other free variables 0).
RationalMatrix kernel(const RationalMatrix& m);

/// Particular solution of m x = b with free variables set to 0; empty when
/// the system is inconsistent.
std::optional<RVec> solve(const RationalMatrix& m, const RVec& b);

/// Coordinates of v in the given spanning list, if v lies in its span.
std::optional<RVec> coordinates_in(const std::vector<RVec>& span, const RVec& v);

/// Exact subspace kept in reduced row echelon form. Rows are ordered by
/// pivot column, each pivot is 1 and is the only nonzero entry in its
/// column, so equal subspaces have identical basis rows.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}
  Subspace(std::size_t ambient_dim, const std::vector<RVec>& gens);

  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient_dim() const { return ambient_; }

  /// Adds v to the span. True when the dimension grew.
  bool add(const RVec& v);

  /// v minus its reduction against the basis rows; zero iff v is a member.
  RVec reduce(const RVec& v) const;

  bool contains(const RVec& v) const { return is_zero_vec(reduce(v)); }
  bool contains_all(const std::vector<RVec>& vs) const;

  const std::vector<RVec>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && rows_ == o.rows_;
  }

 private:
  std::size_t ambient_ = 0;
  std::vector<RVec> rows_;
  std::vector<std::size_t> pivots_;
};

/// Basis of the intersection of two spans.
std::vector<RVec> intersect_spans(const std::vector<RVec>& a,
                                  const std::vector<RVec>& b);

/// Basis of {w in span(big) : dot(w, s) = 0 for all s in small}.
std::vector<RVec> perp_within(const std::vector<RVec>& big,
                              const std::vector<RVec>& small);

/// Gram matrix of dot products.
RationalMatrix gram_matrix(const std::vector<RVec>& vecs);

/// Exact positive definiteness of a symmetric matrix, decided by the pivot
/// signs of symmetric Gaussian elimination.
bool is_positive_definite(RationalMatrix g);

/// Exact orthogonal projector (standard dot product) onto the span of an
/// independent basis, precomputed as a dense matrix.
class Projector {
 public:
  Projector() = default;
  /// Throws ComputeError when the basis is dependent.
  Projector(std::size_t ambient_dim, const std::vector<RVec>& basis);

  RVec apply(const RVec& v) const { return matrix_.apply(v); }
  const RationalMatrix& matrix() const { return matrix_; }

 private:
  RationalMatrix matrix_;
};

double to_double(const Rational& r);

/// One eigenvalue cluster of a float spectral split.
struct SpectralCluster {
  double value = 0.0;                      ///< mean of the clustered eigenvalues
  std::vector<std::vector<double>> basis;  ///< orthonormal eigenvectors
};

struct EigenSplitResult {
  std::vector<SpectralCluster> clusters;  ///< ascending by value

  std::vector<std::size_t> dims() const {
    std::vector<std::size_t> d;
    d.reserve(clusters.size());
    for (const auto& c : clusters) d.push_back(c.basis.size());
    return d;
  }
};

/// Floating-point spectral split of an exact symmetric matrix. Sorted
/// eigenvalues are grouped greedily: a gap larger than tol starts a new
/// cluster. Throws ComputeError when the input is not symmetric or when a
/// cluster's internal spread exceeds tol (the spectrum is not resolvable at
/// this tolerance).
EigenSplitResult symmetric_eigensplit(const RationalMatrix& sym,
                                      double tol = 1e-9);

/// max over span vectors v and operators A of |A v - P A v| (euclidean),
/// with P the float orthogonal projector onto the span. Cross-checks a
/// float cluster against exact invariance.
double float_span_residual(const std::vector<std::vector<double>>& span,
                           const std::vector<RationalMatrix>& ops);

/// Spectral split of an operator given in a basis with Gram matrix `gram`
/// (positive definite), for operators self-adjoint with respect to that
/// Gram. Cluster basis vectors are coordinate vectors in the same basis.
EigenSplitResult eigensplit_in_gram(const RationalMatrix& op,
                                    const RationalMatrix& gram,
                                    double tol = 1e-9);

}  // namespace sublab
