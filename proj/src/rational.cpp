#include "gham/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace gham {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s = text;
  // trim surrounding whitespace
  size_t a = s.find_first_not_of(" \t\r\n");
  size_t b = s.find_last_not_of(" \t\r\n");
  if (a == std::string::npos) throw std::invalid_argument("empty rational literal");
  s = s.substr(a, b - a + 1);

  bool neg = false;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    s = s.substr(1);
  }
  if (s.empty()) throw std::invalid_argument("bad rational literal: '" + text + "'");

  Rational value;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw std::invalid_argument("bad rational literal: '" + text + "'");
    BigInt n(num), d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    value = Rational(n, d);
  } else if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (frac.empty()) frac = "0";
    if (!all_digits(whole) || !all_digits(frac))
      throw std::invalid_argument("bad rational literal: '" + text + "'");
    BigInt scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    value = Rational(BigInt(whole) * scale + BigInt(frac), scale);
  } else {
    if (!all_digits(s)) throw std::invalid_argument("bad rational literal: '" + text + "'");
    value = Rational(BigInt(s));
  }
  return neg ? Rational(-value) : value;
}

std::string format_rational(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

std::string format_decimal(const Rational& r, int digits) {
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  BigInt num = numerator(r) * scale * 2;
  BigInt den = denominator(r);
  bool neg = num < 0;
  if (neg) num = -num;
  // round half away from zero
  BigInt scaled = (num / den + 1) / 2;
  std::string ds = scaled.str();
  if (static_cast<int>(ds.size()) <= digits) ds.insert(0, digits + 1 - ds.size(), '0');
  std::string out;
  if (neg && scaled != 0) out += "-";
  out += ds.substr(0, ds.size() - digits);
  if (digits > 0) out += "." + ds.substr(ds.size() - digits);
  return out;
}

std::vector<Rational> parse_rational_list(const std::vector<std::string>& items) {
  std::vector<Rational> out;
  out.reserve(items.size());
  for (const auto& it : items) out.push_back(parse_rational(it));
  return out;
}

}  // namespace gham
