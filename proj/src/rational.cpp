#include "vcs/rational.hpp"

#include <stdexcept>

namespace vcs {

Int binomial(unsigned long n, unsigned long k) {
  Int result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(const Int& num, const Int& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    // Decimal literal: shift the point out and divide by the matching power of ten.
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    if (digits.empty() || digits == "-" || digits == "+")
      throw std::invalid_argument("bad decimal literal: " + text);
    Int num(digits, 10);
    Int den = 1;
    for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  Rational q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("bad rational literal: " + text);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  q.canonicalize();
  return q;
}

double to_double(const Rational& q) { return q.get_d(); }

Rational abs(const Rational& q) {
  Rational r;
  mpq_abs(r.get_mpq_t(), q.get_mpq_t());
  return r;
}

}  // namespace vcs
