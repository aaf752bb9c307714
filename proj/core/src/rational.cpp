#include "arrspec/rational.hpp"

#include "arrspec/errors.hpp"

namespace arrspec {

namespace {

bool valid_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!valid_integer_literal(num) || !valid_integer_literal(den) || den.front() == '-' || den.front() == '+')
    throw ValidationError("not a rational number: \"" + std::string(text) + "\"");
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  Integer dz{std::string(den)};
  if (dz == 0) throw ValidationError("zero denominator in \"" + std::string(text) + "\"");
  Rational q(Integer(n), dz);
  q.canonicalize();
  return q;
}

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Rational& q) { return q.get_str(); }

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational fractional_part(const Rational& q) { return q - Rational(floor(q)); }

Rational binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

Rational factorial(long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(r);
}

}  // namespace arrspec
