#include "arpl/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace arpl {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

Integer parse_integer(std::string_view s, std::string_view whole) {
  std::size_t i = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) throw std::invalid_argument("bad rational: " + std::string(whole));
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j])))
      throw std::invalid_argument("bad rational: " + std::string(whole));
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return Integer(digits, 10);
}

Rational parse_decimal(std::string_view s, std::string_view whole) {
  long exp10 = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    exp10 = parse_integer(s.substr(e + 1), whole).get_si();
    s = s.substr(0, e);
  }
  std::string digits;
  bool neg = false;
  std::size_t i = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    i = 1;
  }
  bool seen_dot = false;
  for (; i < s.size(); ++i) {
    if (s[i] == '.' && !seen_dot) {
      seen_dot = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw std::invalid_argument("bad rational: " + std::string(whole));
    digits.push_back(s[i]);
    if (seen_dot) --exp10;
  }
  if (digits.empty()) throw std::invalid_argument("bad rational: " + std::string(whole));
  Rational r{Integer(digits, 10)};
  r *= pow(Rational(10), exp10);
  return neg ? Rational(-r) : r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (auto slash = text.find('/'); slash != std::string_view::npos)
    return make_rational(parse_integer(text.substr(0, slash), text),
                         parse_integer(text.substr(slash + 1), text));
  if (text.find_first_of(".eE") != std::string_view::npos) return parse_decimal(text, text);
  return Rational(parse_integer(text, text));
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

double to_double(const Rational& r) { return r.get_d(); }

Rational pow(const Rational& r, long e) {
  if (e < 0) {
    if (r == 0) throw std::domain_error("zero to a negative power");
    return pow(Rational(1) / r, -e);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), r.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), r.get_den_mpz_t(), static_cast<unsigned long>(e));
  Rational out(num, den);
  return out;  // already canonical: powers of coprime integers stay coprime
}

Integer factorial(unsigned n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

Integer binomial(unsigned n, unsigned k) {
  Integer c;
  mpz_bin_uiui(c.get_mpz_t(), n, k);
  return c;
}

}  // namespace arpl
