#include "numeric.hpp"

#include <mpfr.h>

#include <cctype>

#include "error.hpp"

namespace patchcount {

namespace {

mpz_class parse_integer(const std::string& tok) {
  if (tok.empty()) fail_validation("empty number token");
  try {
    return mpz_class(tok, 10);
  } catch (const std::invalid_argument&) {
    fail_validation("not an integer: '" + tok + "'");
  }
}

}  // namespace

Rational parse_rational(const std::string& token) {
  auto slash = token.find('/');
  mpz_class num, den;
  if (slash == std::string::npos) {
    num = parse_integer(token);
    den = 1;
  } else {
    num = parse_integer(token.substr(0, slash));
    den = parse_integer(token.substr(slash + 1));
    if (den == 0) fail_validation("zero denominator in '" + token + "'");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_decimal(const std::string& token) {
  auto dot = token.find('.');
  if (dot == std::string::npos) {
    mpz_class n = parse_integer(token);
    if (n < 0) fail_validation("negative decimal: '" + token + "'");
    return Rational(n);
  }
  std::string digits = token.substr(0, dot) + token.substr(dot + 1);
  for (char ch : digits)
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      fail_validation("not a decimal literal: '" + token + "'");
  size_t frac_len = token.size() - dot - 1;
  if (digits.empty() || frac_len == 0)
    fail_validation("not a decimal literal: '" + token + "'");
  mpz_class scaled(digits, 10);
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, frac_len);
  Rational q(scaled, pow10);
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

std::string format_scaled(const mpz_class& scaled, int places) {
  std::string digits = scaled.get_str();
  bool neg = false;
  if (!digits.empty() && digits[0] == '-') {
    neg = true;
    digits = digits.substr(1);
  }
  if (places == 0) return (neg ? "-" : "") + digits;
  if (static_cast<int>(digits.size()) <= places)
    digits.insert(0, places + 1 - digits.size(), '0');
  digits.insert(digits.size() - places, ".");
  return (neg ? "-" : "") + digits;
}

}  // namespace

std::string floor_decimal(const Rational& q, int places) {
  if (q < 0) fail_validation("floor_decimal expects a nonnegative value");
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, places);
  mpz_class scaled;
  mpz_class num = q.get_num() * pow10;
  mpz_fdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), q.get_den().get_mpz_t());
  return format_scaled(scaled, places);
}

BigCount log2_floor_scaled(const BigCount& x, int places) {
  if (x <= 0) fail_validation("log2 of a nonpositive value");
  if (places < 0 || places > 30) fail_validation("log2 places out of range");

  // Work on the top bits only; dropping low bits keeps the result a lower
  // bound, which is the rounding direction we certify.
  const size_t keep = 300;
  size_t bits = mpz_sizeinbase(x.get_mpz_t(), 2);
  mpz_class mant = x;
  unsigned long shift = 0;
  if (bits > keep) {
    shift = static_cast<unsigned long>(bits - keep);
    mpz_fdiv_q_2exp(mant.get_mpz_t(), x.get_mpz_t(), shift);
  }

  mpfr_t v;
  mpfr_init2(v, 360);
  mpfr_set_z(v, mant.get_mpz_t(), MPFR_RNDD);
  mpfr_log2(v, v, MPFR_RNDD);
  mpfr_add_ui(v, v, shift, MPFR_RNDD);

  mpfr_t scale;
  mpfr_init2(scale, 360);
  mpfr_ui_pow_ui(scale, 10, static_cast<unsigned long>(places), MPFR_RNDD);
  mpfr_mul(v, v, scale, MPFR_RNDD);

  mpz_class out;
  mpfr_get_z(out.get_mpz_t(), v, MPFR_RNDD);
  mpfr_clear(scale);
  mpfr_clear(v);
  return out;
}

std::string log2_floor_decimal(const BigCount& x, int places) {
  return format_scaled(log2_floor_scaled(x, places), places);
}

}  // namespace patchcount
