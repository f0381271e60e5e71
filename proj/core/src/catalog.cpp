#include "sublab/catalog.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "sublab/lie.hpp"

namespace sublab {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(trim(cur));
  return out;
}

long parse_long(const std::string& s) {
  if (s.empty()) throw InputError("expected an integer, got an empty field");
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    throw InputError("expected an integer, got '" + s + "'");
  }
  if (used != s.size())
    throw InputError("expected an integer, got '" + s + "'");
  return v;
}

std::string strip_outer_parens(std::string t) {
  while (t.size() >= 2 && t.front() == '(' && t.back() == ')') {
    int depth = 0;
    bool wraps = true;
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
      if (t[i] == '(') ++depth;
      if (t[i] == ')') --depth;
      if (depth == 0) {
        wraps = false;
        break;
      }
    }
    if (!wraps) break;
    t = t.substr(1, t.size() - 2);
  }
  return t;
}

bool parse_yes_no(const std::string& s, const std::string& context) {
  if (s == "yes") return true;
  if (s == "no") return false;
  throw InputError(context + ": expected yes or no, got '" + s + "'");
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& s) {
  const std::size_t p = s.find("..");
  if (p == std::string::npos)
    throw InputError("expected a range a..b, got '" + s + "'");
  const long a = parse_long(s.substr(0, p));
  const long b = parse_long(s.substr(p + 2));
  if (a < 1 || b < a)
    throw InputError("invalid range '" + s + "'");
  return {static_cast<std::size_t>(a), static_cast<std::size_t>(b)};
}

}  // namespace

long RankExpr::eval(std::size_t n) const {
  return a * static_cast<long>(n) + b;
}

std::string RankExpr::str() const {
  if (a == 0) return std::to_string(b);
  std::string out;
  if (a == 1)
    out = "n";
  else if (a == -1)
    out = "-n";
  else
    out = std::to_string(a) + "n";
  if (b > 0) out += "+" + std::to_string(b);
  if (b < 0) out += std::to_string(b);
  return out;
}

RankExpr RankExpr::parse(const std::string& text) {
  const std::string t = strip_spaces(text);
  if (t.empty()) throw InputError("empty rank expression");
  const std::size_t p = t.find('n');
  if (p == std::string::npos) return {0, parse_long(t)};
  if (t.find('n', p + 1) != std::string::npos)
    throw InputError("rank expression is not affine: '" + text + "'");
  RankExpr e;
  const std::string head = t.substr(0, p);
  if (head.empty())
    e.a = 1;
  else if (head == "-")
    e.a = -1;
  else if (head == "+")
    e.a = 1;
  else
    e.a = parse_long(head);
  const std::string tail = t.substr(p + 1);
  if (tail.empty()) {
    e.b = 0;
  } else {
    if (tail[0] != '+' && tail[0] != '-')
      throw InputError("rank expression is not affine: '" + text + "'");
    e.b = parse_long(tail);
  }
  return e;
}

Rational RatioExpr::eval(std::size_t n) const {
  const long p = num.eval(n);
  const long q = den.eval(n);
  if (q == 0)
    throw InputError("ratio denominator vanishes at n = " + std::to_string(n));
  return Rational(p) / Rational(q);
}

RatioExpr RatioExpr::parse(const std::string& text) {
  const std::string t = strip_spaces(text);
  int depth = 0;
  std::size_t slash = std::string::npos;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] == '(') ++depth;
    if (t[i] == ')') --depth;
    if (t[i] == '/' && depth == 0) {
      if (slash != std::string::npos)
        throw InputError("ratio has more than one division: '" + text + "'");
      slash = i;
    }
  }
  RatioExpr r;
  if (slash == std::string::npos) {
    r.num = RankExpr::parse(strip_outer_parens(t));
    r.den = RankExpr{0, 1};
  } else {
    r.num = RankExpr::parse(strip_outer_parens(t.substr(0, slash)));
    r.den = RankExpr::parse(strip_outer_parens(t.substr(slash + 1)));
  }
  return r;
}

std::vector<LabelFactor> parse_label(const std::string& label) {
  const std::string t = strip_spaces(label);
  if (t == "g2") return {{"g2", RankExpr{}}};
  static const std::vector<std::string> families = {"spin", "so", "su", "sp",
                                                    "u"};
  std::vector<LabelFactor> out;
  std::size_t pos = 0;
  while (pos < t.size()) {
    std::string family;
    for (const auto& f : families) {
      if (t.compare(pos, f.size(), f) == 0 && pos + f.size() < t.size() &&
          t[pos + f.size()] == '(') {
        family = f;
        break;
      }
    }
    if (family.empty())
      throw InputError("unrecognized algebra label: '" + label + "'");
    pos += family.size();
    const std::size_t close = t.find(')', pos);
    if (close == std::string::npos)
      throw InputError("unbalanced parentheses in label: '" + label + "'");
    const std::string expr = t.substr(pos + 1, close - pos - 1);
    out.push_back({family, RankExpr::parse(expr)});
    pos = close + 1;
  }
  if (out.empty())
    throw InputError("unrecognized algebra label: '" + label + "'");
  return out;
}

long label_dim(const std::string& label, std::size_t n) {
  long total = 0;
  for (const auto& f : parse_label(label)) {
    if (f.family == "g2") {
      total += 14;
      continue;
    }
    const long m = f.rank.eval(n);
    if (m < 0)
      throw InputError("label '" + label + "' has negative rank at n = " +
                       std::to_string(n));
    if (f.family == "so" || f.family == "spin")
      total += m * (m - 1) / 2;
    else if (f.family == "su")
      total += m >= 1 ? m * m - 1 : 0;
    else if (f.family == "sp")
      total += m * (2 * m + 1);
    else if (f.family == "u")
      total += m * m;
  }
  return total;
}

std::vector<CatalogEntry> load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open catalog file: " + path);
  std::vector<CatalogEntry> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const std::string where = "catalog line " + std::to_string(lineno);
    const auto fields = split(t, '|');
    if (fields.size() != 7)
      throw InputError(where + ": expected 7 fields, got " +
                       std::to_string(fields.size()));
    CatalogEntry e;
    e.index = out.size() + 1;
    e.line = lineno;
    e.g = fields[0];
    e.k1 = fields[1];
    e.k2 = fields[2];
    e.h = fields[3];
    e.space = fields[4];
    try {
      e.symmetric = parse_yes_no(fields[5], where);
      e.supported = parse_yes_no(fields[6], where);
      for (std::size_t n : {std::size_t{3}, std::size_t{5}}) {
        const long lhs = label_dim(e.g, n) - label_dim(e.k1, n);
        const long rhs = label_dim(e.k2, n) - label_dim(e.h, n);
        if (lhs != rhs)
          throw InputError("dimension identity fails at n = " +
                           std::to_string(n) + ": " + std::to_string(lhs) +
                           " vs " + std::to_string(rhs));
      }
    } catch (const InputError& err) {
      const std::string what = err.what();
      if (what.rfind(where, 0) == 0) throw;
      throw InputError(where + ": " + what);
    }
    out.push_back(std::move(e));
  }
  if (out.empty()) throw InputError("catalog file has no rows: " + path);
  return out;
}

std::vector<Fixture> load_fixtures(const std::string& path,
                                   const std::vector<CatalogEntry>& catalog) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open fixture file: " + path);
  std::vector<Fixture> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const std::string where = "fixture line " + std::to_string(lineno);
    const auto fields = split(t, '|');
    if (fields.size() != 9)
      throw InputError(where + ": expected 9 fields, got " +
                       std::to_string(fields.size()));
    Fixture f;
    f.id = fields[0];
    try {
      const long row = parse_long(fields[1]);
      if (row < 1 || static_cast<std::size_t>(row) > catalog.size())
        throw InputError("row " + std::to_string(row) +
                         " is outside the catalog");
      f.row = static_cast<std::size_t>(row);
      f.l = fields[2];
      f.base = fields[3];
      std::tie(f.n_min, f.n_max) = parse_range(fields[4]);
      f.expect = fields[5];
      if (f.expect != "submersion" && f.expect != "no-submersion" &&
          f.expect != "out-of-scope")
        throw InputError("unknown expectation '" + f.expect + "'");
      if (fields[6] != "-") {
        for (const auto& item : split(fields[6], ';')) {
          const std::size_t colon = item.find(':');
          if (colon == std::string::npos)
            throw InputError("constant assertion needs index:ratio, got '" +
                             item + "'");
          ConstantAssertion c;
          const long idx = parse_long(trim(item.substr(0, colon)));
          if (idx < 1) throw InputError("constant index must be positive");
          c.summand = static_cast<std::size_t>(idx);
          c.ratio = RatioExpr::parse(item.substr(colon + 1));
          f.constants.push_back(c);
        }
      }
      if (fields[7] != "-") f.obstruct = fields[7];
      if (fields[8] != "-") {
        if (f.obstruct.empty())
          throw InputError("obstruction range given without a target");
        std::tie(f.obstruct_n_min, f.obstruct_n_max) = parse_range(fields[8]);
      }
      if (!f.obstruct.empty()) {
        const std::size_t probe =
            f.obstruct_n_min ? f.obstruct_n_min : f.n_min;
        parse_space(f.obstruct, probe);
      }
      parse_label(f.l);
    } catch (const InputError& err) {
      const std::string what = err.what();
      if (what.rfind(where, 0) == 0) throw;
      throw InputError(where + ": " + what);
    }
    out.push_back(std::move(f));
  }
  return out;
}

SpaceDescriptor parse_space(const std::string& text, std::size_t n) {
  const std::string t = strip_spaces(text);
  const std::size_t open = t.find('(');
  if (open == std::string::npos || t.back() != ')')
    throw InputError("unrecognized space expression: '" + text + "'");
  const std::string head = t.substr(0, open);
  const std::string inner = t.substr(open + 1, t.size() - open - 2);
  if (head == "sphere") {
    const long m = RankExpr::parse(inner).eval(n);
    if (m < 1)
      throw InputError("sphere dimension is not positive at n = " +
                       std::to_string(n));
    return SpaceDescriptor::sphere(static_cast<std::size_t>(m));
  }
  if (head == "stiefel") {
    int depth = 0;
    std::size_t comma = std::string::npos;
    for (std::size_t i = 0; i < inner.size(); ++i) {
      if (inner[i] == '(') ++depth;
      if (inner[i] == ')') --depth;
      if (inner[i] == ',' && depth == 0) {
        comma = i;
        break;
      }
    }
    if (comma == std::string::npos)
      throw InputError("stiefel expression needs two arguments: '" + text +
                       "'");
    const long k = RankExpr::parse(inner.substr(0, comma)).eval(n);
    const long m = RankExpr::parse(inner.substr(comma + 1)).eval(n);
    if (k < 1 || m <= k)
      throw InputError("stiefel arguments need 0 < k < m at n = " +
                       std::to_string(n));
    return SpaceDescriptor::stiefel(static_cast<std::size_t>(k),
                                    static_cast<std::size_t>(m));
  }
  if (head == "circle")
    return SpaceDescriptor::circle_quotient(parse_space(inner, n));
  throw InputError("unrecognized space expression: '" + text + "'");
}

namespace {

long positive_rank(const LabelFactor& f, const std::string& label,
                   std::size_t n) {
  const long m = f.rank.eval(n);
  if (m < 1)
    throw InputError("label '" + label + "' evaluates to rank " +
                     std::to_string(m) + " at n = " + std::to_string(n));
  return m;
}

Embedding embed_in_so(const std::string& label, std::size_t n,
                      std::size_t ambient) {
  const auto factors = parse_label(label);
  if (factors.size() == 1) {
    const auto& f = factors[0];
    if (f.family == "g2" || f.family == "spin")
      throw InputError("label '" + label +
                       "' is not constructible by the embedding registry");
    const std::size_t m =
        static_cast<std::size_t>(positive_rank(f, label, n));
    if (f.family == "so") return embed_so_block(m, ambient);
    if (f.family == "u") return embed_u_in_so(m, ambient);
    if (f.family == "su") return embed_su_in_so(m, ambient);
    if (f.family == "sp") return embed_sp_in_so(m, ambient);
  }
  if (factors.size() == 2 && factors[0].family == "sp" &&
      factors[1].family == "sp" && factors[1].rank.eval(n) == 1) {
    const std::size_t m =
        static_cast<std::size_t>(positive_rank(factors[0], label, n));
    return embed_spsp1_in_so(m, ambient);
  }
  throw InputError("label '" + label +
                   "' is not constructible by the embedding registry");
}

Embedding embed_in_su(const std::string& label, std::size_t n,
                      std::size_t complex_size) {
  const auto factors = parse_label(label);
  if (factors.size() != 1)
    throw InputError("label '" + label +
                     "' is not constructible by the embedding registry");
  const auto& f = factors[0];
  if (f.family == "g2" || f.family == "spin" || f.family == "so")
    throw InputError("label '" + label +
                     "' is not constructible by the embedding registry");
  const std::size_t m = static_cast<std::size_t>(positive_rank(f, label, n));
  if (f.family == "su") return embed_su_block_in_su(m, complex_size);
  if (f.family == "sp") return embed_sp_in_su(m, complex_size);
  if (m + 1 > complex_size)
    throw InputError("label '" + label + "' does not fit inside su(" +
                     std::to_string(complex_size) + ")");
  if (m + 1 == complex_size) return embed_u_in_su(m, complex_size);
  return compose(embed_su_block_in_su(m + 1, complex_size),
                 embed_u_in_su(m, m + 1));
}

}  // namespace

ChainScenario build_scenario(const CatalogEntry& row, std::size_t n,
                             const std::string& l_label) {
  if (n < 1) throw InputError("n must be at least 1");
  const auto g_factors = parse_label(row.g);
  if (g_factors.size() != 1 ||
      (g_factors[0].family != "so" && g_factors[0].family != "su"))
    throw InputError("scenario construction needs an so or su ambient, got '" +
                     row.g + "'");

  ChainScenario sc;
  sc.n = n;
  sc.label = row.g + "/" + row.k1;
  sc.note = "catalog row " + std::to_string(row.index) + ": " + row.g + " | " +
            row.k1 + " | " + row.k2 + " | " + row.h;
  if (!l_label.empty()) sc.note += " with l = " + l_label;

  const bool so_ambient = g_factors[0].family == "so";
  const std::size_t size =
      static_cast<std::size_t>(positive_rank(g_factors[0], row.g, n));
  sc.ambient = so_ambient ? size : 2 * size;
  auto embed_one = [&](const std::string& label) {
    return so_ambient ? embed_in_so(label, n, sc.ambient)
                      : embed_in_su(label, n, size);
  };

  sc.g = so_ambient ? build_so(size) : build_su(size);
  sc.g.label = row.g;
  sc.k1 = embed_one(row.k1);
  sc.k2 = embed_one(row.k2);
  sc.h = embed_one(row.h);
  if (!l_label.empty()) sc.l = embed_one(l_label);

  const auto check_dim = [&](const Embedding& e, const std::string& label) {
    const long want = label_dim(label, n);
    if (static_cast<long>(e.dim()) != want)
      throw ComputeError("constructed embedding for '" + label +
                         "' has dimension " + std::to_string(e.dim()) +
                         ", expected " + std::to_string(want));
    verify_closed(e);
  };
  check_dim(sc.k1, row.k1);
  check_dim(sc.k2, row.k2);
  check_dim(sc.h, row.h);
  if (sc.l) check_dim(*sc.l, l_label);

  const Subspace g_span = sc.g.span();
  const auto require_inside = [&](const Subspace& big,
                                  const std::vector<RVec>& small,
                                  const std::string& what) {
    if (!big.contains_all(small))
      throw ComputeError("containment fails: " + what);
  };
  require_inside(g_span, sc.k1.coords(), row.k1 + " inside " + row.g);
  require_inside(g_span, sc.k2.coords(), row.k2 + " inside " + row.g);
  const Subspace k2_span(so_dim(sc.ambient), sc.k2.coords());
  require_inside(k2_span, sc.h.coords(), row.h + " inside " + row.k2);
  if (sc.l) {
    require_inside(k2_span, sc.l->coords(), l_label + " inside " + row.k2);
    const Subspace l_span(so_dim(sc.ambient), sc.l->coords());
    require_inside(l_span, sc.h.coords(), row.h + " inside " + l_label);
  }

  sc.m_total = reductive_complement(sc.k2.coords(), sc.h.coords());
  if (sc.l) {
    sc.fiber = reductive_complement(sc.l->coords(), sc.h.coords());
    sc.m2 = reductive_complement(sc.k2.coords(), sc.l->coords());
  } else {
    sc.m2 = sc.m_total;
  }
  sc.h_act = AdAction::from(sc.h.algebra());
  sc.l_act = sc.l ? AdAction::from(sc.l->algebra()) : sc.h_act;
  return sc;
}

}  // namespace sublab
