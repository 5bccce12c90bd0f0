#include "adhm/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace adhm {

namespace {

bool all_digits(const std::string& s, std::size_t begin, std::size_t end) {
  if (begin >= end) return false;
  for (std::size_t k = begin; k < end; ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::size_t start = 0;
  if (start < text.size() && (text[start] == '-' || text[start] == '+')) ++start;
  const std::size_t slash = text.find('/');
  bool ok;
  if (slash == std::string::npos) {
    ok = all_digits(text, start, text.size());
  } else {
    // The sign belongs to the numerator only; "1/-2" is rejected.
    ok = all_digits(text, start, slash) && all_digits(text, slash + 1, text.size());
  }
  if (!ok) throw std::invalid_argument("malformed rational \"" + text + "\"");

  Rational value;
  // GMP does not accept a leading '+'.
  const std::string digits = text[0] == '+' ? text.substr(1) : text;
  if (value.set_str(digits, 10) != 0) {
    throw std::invalid_argument("malformed rational \"" + text + "\"");
  }
  if (value.get_den() == 0) {
    throw std::invalid_argument("zero denominator in rational \"" + text + "\"");
  }
  value.canonicalize();
  return value;
}

std::string format_rational(const Rational& value) { return value.get_str(); }

bool is_integer(const Rational& value) { return value.get_den() == 1; }

int compare_abs(const Rational& a, const Rational& b) {
  const Rational aa = abs(a);
  const Rational bb = abs(b);
  return cmp(aa, bb);
}

}  // namespace adhm
