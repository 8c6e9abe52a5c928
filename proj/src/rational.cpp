#include "tropcer/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace tropcer {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

Int parse_int_strict(const std::string& s, const std::string& whole) {
  std::size_t i = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) {
    throw std::invalid_argument("invalid rational literal: '" + whole + "'");
  }
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw std::invalid_argument("invalid rational literal: '" + whole + "'");
    }
  }
  return Int(s);
}

}  // namespace

Int parse_int_strict(const std::string& text) {
  const std::string t = trim(text);
  if (t.empty()) throw std::invalid_argument("invalid integer literal: ''");
  return parse_int_strict(t, text);
}

Rat parse_rat(const std::string& text) {
  const std::string t = trim(text);
  if (t.empty()) throw std::invalid_argument("invalid rational literal: ''");
  const std::size_t slash = t.find('/');
  if (slash == std::string::npos) {
    return Rat(parse_int_strict(t, text));
  }
  if (t.find('/', slash + 1) != std::string::npos) {
    throw std::invalid_argument("invalid rational literal: '" + text + "'");
  }
  Int num = parse_int_strict(trim(t.substr(0, slash)), text);
  Int den = parse_int_strict(trim(t.substr(slash + 1)), text);
  if (den == 0) {
    throw std::invalid_argument("zero denominator in rational literal: '" + text + "'");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rat(num, den);
}

std::string rat_str(const Rat& x) {
  const Int n = rat_num(x);
  const Int d = rat_den(x);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

std::string int_str(const Int& x) { return x.str(); }

}  // namespace tropcer
