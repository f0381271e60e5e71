#include "sublab/types.hpp"

#include <cctype>

namespace sublab {

std::string to_fraction_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_fraction(const std::string& text) {
  if (text.empty()) throw InputError("empty fraction");
  std::size_t slash = text.find('/');
  auto check_int = [&](const std::string& part, bool allow_sign) {
    if (part.empty()) throw InputError("malformed fraction: " + text);
    std::size_t i = 0;
    if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) throw InputError("malformed fraction: " + text);
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i])))
        throw InputError("malformed fraction: " + text);
  };
  if (slash == std::string::npos) {
    check_int(text, true);
    return Rational(text, 10);
  }
  std::string num = text.substr(0, slash);
  std::string den = text.substr(slash + 1);
  check_int(num, true);
  check_int(den, false);
  Rational r(num + "/" + den, 10);
  if (r.get_den() == 0) throw InputError("zero denominator: " + text);
  r.canonicalize();
  return r;
}

}  // namespace sublab
