#include "arrowgraph/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace arrowgraph {

std::string to_string(const Rational& r) {
  if (is_integer(r)) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  if (s.empty()) throw std::invalid_argument("empty number");

  bool negative = false;
  std::size_t pos = 0;
  if (s[0] == '-' || s[0] == '+') {
    negative = s[0] == '-';
    pos = 1;
  }
  std::string body = s.substr(pos);
  if (body.empty()) throw std::invalid_argument("bad number '" + s + "'");

  Rational value;
  if (auto slash = body.find('/'); slash != std::string::npos) {
    std::string num = body.substr(0, slash);
    std::string den = body.substr(slash + 1);
    auto digits = [](const std::string& d) {
      if (d.empty()) return false;
      for (char c : d)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
      return true;
    };
    if (!digits(num) || !digits(den)) throw std::invalid_argument("bad number '" + s + "'");
    Integer d(den, 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    value = Rational(Integer(num, 10), d);
    value.canonicalize();
  } else {
    std::string digits;
    std::size_t frac_digits = 0;
    bool seen_point = false;
    for (char c : body) {
      if (c == '.') {
        if (seen_point) throw std::invalid_argument("bad number '" + s + "'");
        seen_point = true;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        digits += c;
        if (seen_point) ++frac_digits;
      } else {
        throw std::invalid_argument("bad number '" + s + "'");
      }
    }
    if (digits.empty()) throw std::invalid_argument("bad number '" + s + "'");
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_digits);
    value = Rational(Integer(digits, 10), scale);
    value.canonicalize();
  }
  return negative ? Rational(-value) : value;
}

bool has_terminating_decimal(const Rational& r) {
  Integer den = r.get_den();
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) den /= 2;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) den /= 5;
  return den == 1;
}

std::string to_decimal_string(const Rational& r) {
  if (is_integer(r)) return r.get_num().get_str();
  Integer den = r.get_den();
  unsigned long twos = 0, fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) den /= 2, ++twos;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) den /= 5, ++fives;
  if (den != 1) throw std::invalid_argument("rational has no terminating decimal expansion");
  const unsigned long places = std::max(twos, fives);
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
  Integer scaled = Integer(r.get_num() * scale / r.get_den());
  const bool negative = scaled < 0;
  std::string digits = Integer(abs(scaled)).get_str();
  if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
  digits.insert(digits.size() - places, ".");
  return negative ? "-" + digits : digits;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

}  // namespace arrowgraph
