#include "connasym/rational.hpp"

#include <cstdio>

namespace connasym {

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw UsageError("empty rational literal");
  if (text.find('.') != std::string_view::npos)
    throw UsageError("decimal literals are not accepted; use an exact fraction a/b");
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) return Rational(Int(std::string(text)));
    const Int num(std::string(text.substr(0, slash)));
    const Int den(std::string(text.substr(slash + 1)));
    if (den == 0) throw DomainError("rational with zero denominator");
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw UsageError("cannot parse rational literal '" + std::string(text) + "'");
  }
}

std::string Rational::to_string() const {
  std::string s = numerator().get_str();
  if (!is_integer()) s += "/" + denominator().get_str();
  return s;
}

Rational pow(const Rational& x, long e) {
  if (e == 0) return Rational(1);
  const bool invert = e < 0;
  if (invert && x.is_zero()) throw DomainError("cannot raise 0 to a negative power");
  const unsigned long mag = invert ? static_cast<unsigned long>(-(e + 1)) + 1UL
                                   : static_cast<unsigned long>(e);
  Int num, den;
  mpz_pow_ui(num.get_mpz_t(), x.numerator().get_mpz_t(), mag);
  mpz_pow_ui(den.get_mpz_t(), x.denominator().get_mpz_t(), mag);
  return invert ? Rational(den, num) : Rational(num, den);
}

Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Int pow2(unsigned long e) { return ipow(2, e); }
Int pow10(unsigned long e) { return ipow(10, e); }

Int ipow(unsigned long base, unsigned long e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

namespace {

// Compares |num/den| with 10^k exactly.
int cmp_pow10(const Int& num, const Int& den, long k) {
  Int lhs = num, rhs = den;
  if (k >= 0)
    rhs *= pow10(static_cast<unsigned long>(k));
  else
    lhs *= pow10(static_cast<unsigned long>(-k));
  return cmp(lhs, rhs);
}

}  // namespace

std::string to_decimal_string(const Rational& value, int digits) {
  if (digits < 1) throw UsageError("decimal rendering needs at least 1 significant digit");
  if (value.is_zero()) return "0";

  const Int num = ::abs(value.numerator());
  const Int den = value.denominator();

  // Decimal exponent e with 10^e <= |value| < 10^{e+1}. sizeinbase may be off
  // by one, so correct with exact comparisons.
  long e = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 10));
  while (cmp_pow10(num, den, e) < 0) --e;
  while (cmp_pow10(num, den, e + 1) >= 0) ++e;

  // Scale so that exactly `digits` integer digits remain, then round
  // half-to-even on the exact remainder.
  const long shift = digits - 1 - e;
  Int scaled_num = num, scaled_den = den;
  if (shift >= 0)
    scaled_num *= pow10(static_cast<unsigned long>(shift));
  else
    scaled_den *= pow10(static_cast<unsigned long>(-shift));
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled_num.get_mpz_t(), scaled_den.get_mpz_t());
  const int half = cmp(Int(2 * r), scaled_den);
  if (half > 0 || (half == 0 && mpz_odd_p(q.get_mpz_t())))
    q += 1;
  if (q == pow10(static_cast<unsigned long>(digits))) {
    q = pow10(static_cast<unsigned long>(digits - 1));
    ++e;
  }

  std::string s = q.get_str();
  std::string out;
  if (e >= -4 && e < digits) {
    if (e >= 0) {
      out = s.substr(0, static_cast<std::size_t>(e) + 1);
      if (static_cast<std::size_t>(e) + 1 < s.size()) out += "." + s.substr(static_cast<std::size_t>(e) + 1);
    } else {
      out = "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + s;
    }
  } else {
    out = s.substr(0, 1);
    if (s.size() > 1) out += "." + s.substr(1);
    char buf[16];
    std::snprintf(buf, sizeof(buf), "e%+03ld", e);
    out += buf;
  }
  return value.sign() < 0 ? "-" + out : out;
}

}  // namespace connasym
