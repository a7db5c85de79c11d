#include "endscope/rational.hpp"

#include <cctype>

namespace endscope {

namespace {

bool is_integer_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_token(text))
      throw std::invalid_argument("bad rational: '" + std::string(text) + "'");
    return Rational(BigInt{std::string(text)});
  }
  std::string_view num = text.substr(0, slash);
  std::string_view den = text.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den))
    throw std::invalid_argument("bad rational: '" + std::string(text) + "'");
  BigInt d{std::string(den)};
  if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  return Rational(BigInt{std::string(num)}, d);
}

std::string format_rational(const Rational& value) {
  std::string s = numerator(value).str();
  if (denominator(value) != 1) {
    s += '/';
    s += denominator(value).str();
  }
  return s;
}

std::string format_ext(const ExtRational& value) {
  if (value.is_infinite()) return "inf";
  return format_rational(value.finite());
}

ExtRational parse_ext(std::string_view text) {
  if (text == "inf") return ExtRational::infinity();
  return ExtRational(parse_rational(text));
}

}  // namespace endscope
