#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sublab/embedding.hpp"
#include "sublab/homotopy.hpp"
#include "sublab/isotropy.hpp"
#include "sublab/types.hpp"

namespace sublab {

/// Affine integer expression a*n + b.
struct RankExpr {
  long a = 0;
  long b = 0;

  long eval(std::size_t n) const;
  std::string str() const;
  static RankExpr parse(const std::string& text);
};

/// Quotient of two affine expressions, evaluated as an exact rational.
struct RatioExpr {
  RankExpr num;
  RankExpr den;

  Rational eval(std::size_t n) const;
  static RatioExpr parse(const std::string& text);
};

/// One factor of an algebra label. family is one of so, su, sp, u, spin,
/// g2; the rank expression is ignored for g2.
struct LabelFactor {
  std::string family;
  RankExpr rank;
};

std::vector<LabelFactor> parse_label(const std::string& label);
long label_dim(const std::string& label, std::size_t n);

/// One row of the enlargement catalog: g = k1 + k2 with h = k1 meet k2,
/// so that g/k1 and k2/h present the same space.
struct CatalogEntry {
  std::size_t index = 0;  ///< 1-based row number
  std::size_t line = 0;   ///< line number in the data file
  std::string g, k1, k2, h;
  std::string space;  ///< display name, may be empty
  bool symmetric = false;
  bool supported = false;  ///< constructible by the embedding registry
};

/// Loads `g | k1 | k2 | h | space | symmetric | supported` rows, checking
/// the dimension identity dim g - dim k1 = dim k2 - dim h at two values
/// of n. Errors carry the offending line number.
std::vector<CatalogEntry> load_catalog(const std::string& path);

struct ConstantAssertion {
  std::size_t summand = 0;  ///< 1-based canonical summand index
  RatioExpr ratio;          ///< expected lambda_i / lambda_1
};

/// Concrete verification target: a catalog row, an intermediate
/// subalgebra l with h in l in k2, an n range, and expected outcomes.
struct Fixture {
  std::string id;
  std::size_t row = 0;
  std::string l;
  std::string base;
  std::size_t n_min = 0, n_max = 0;
  std::string expect;  ///< submersion | no-submersion | out-of-scope
  std::vector<ConstantAssertion> constants;
  std::string obstruct;  ///< space expression, empty when absent
  std::size_t obstruct_n_min = 0, obstruct_n_max = 0;
};

std::vector<Fixture> load_fixtures(const std::string& path,
                                   const std::vector<CatalogEntry>& catalog);

/// sphere(expr) | stiefel(k, expr) | circle(inner), with affine
/// expressions evaluated at n.
SpaceDescriptor parse_space(const std::string& text, std::size_t n);

/// A catalog row realized at a concrete n: exact bases for the chain
/// h in l in k2 in g together with k1, and the complements the
/// submersion analysis consumes.
struct ChainScenario {
  std::string label;
  std::string note;  ///< catalog row identification
  std::size_t n = 0;
  std::size_t ambient = 0;  ///< real matrix size
  LieAlgebraBasis g;
  Embedding k1, k2, h;
  std::optional<Embedding> l;
  std::vector<RVec> m_total;  ///< k2 minus h
  std::vector<RVec> fiber;    ///< l minus h, empty without l
  std::vector<RVec> m2;       ///< k2 minus l, equals m_total without l
  AdAction h_act;
  AdAction l_act;  ///< equals h_act without l
};

/// Builds the scenario for a catalog row at parameter n, optionally with
/// an intermediate subalgebra. Verifies closure of every embedding and
/// the containments h in l in k2 in g and k1 in g.
ChainScenario build_scenario(const CatalogEntry& row, std::size_t n,
                             const std::string& l_label = "");

}  // namespace sublab
