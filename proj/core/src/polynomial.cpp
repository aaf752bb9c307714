#include "arrspec/polynomial.hpp"

#include <algorithm>
#include <limits>

#include "arrspec/errors.hpp"

namespace arrspec {

Monomial::Monomial(std::vector<std::uint16_t> exponents) : exponents_(std::move(exponents)) {
  for (auto e : exponents_) degree_ += e;
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, unsigned power) {
  Monomial m(nvars);
  m.exponents_.at(index) = static_cast<std::uint16_t>(power);
  m.degree_ = static_cast<int>(power);
  return m;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out(*this);
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    unsigned e = unsigned{out.exponents_[i]} + other.exponents_[i];
    if (e > std::numeric_limits<std::uint16_t>::max()) throw InternalError("monomial exponent overflow");
    out.exponents_[i] = static_cast<std::uint16_t>(e);
  }
  out.degree_ += other.degree_;
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    if (exponents_[i] > other.exponents_[i]) return false;
  return true;
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
  if (auto c = degree_ <=> other.degree_; c != 0) return c;
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    if (auto c = exponents_[i] <=> other.exponents_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

namespace {

void compositions(std::size_t nvars, int remaining, std::size_t pos, std::vector<std::uint16_t>& cur,
                  std::vector<Monomial>& out) {
  if (pos + 1 == nvars) {
    cur[pos] = static_cast<std::uint16_t>(remaining);
    out.emplace_back(cur);
    cur[pos] = 0;
    return;
  }
  for (int e = 0; e <= remaining; ++e) {
    cur[pos] = static_cast<std::uint16_t>(e);
    compositions(nvars, remaining - e, pos + 1, cur, out);
  }
  cur[pos] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  std::vector<std::uint16_t> cur(nvars, 0);
  compositions(nvars, degree, 0, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

Polynomial Polynomial::constant(std::size_t nvars, int max_degree, const Rational& value) {
  Polynomial p(nvars, max_degree);
  p.add_term(Monomial(nvars), value);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, int max_degree, std::size_t index, const Rational& coeff) {
  Polynomial p(nvars, max_degree);
  p.add_term(Monomial::variable(nvars, index), coeff);
  return p;
}

Polynomial Polynomial::monomial(int max_degree, const Monomial& m, const Rational& coeff) {
  Polynomial p(m.nvars(), max_degree);
  p.add_term(m, coeff);
  return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const { return coefficient(Monomial(nvars_)); }

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.nvars() != nvars_) throw InternalError("monomial has the wrong number of variables");
  if (c == 0 || m.degree() > max_degree_) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Polynomial Polynomial::homogeneous(int j) const {
  Polynomial out(nvars_, max_degree_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == j) out.terms_.emplace_hint(out.terms_.end(), m, c);
  return out;
}

int Polynomial::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

bool Polynomial::is_homogeneous() const {
  return terms_.empty() || terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

Polynomial Polynomial::truncated(int max_degree) const {
  Polynomial out(nvars_, max_degree);
  for (const auto& [m, c] : terms_)
    if (m.degree() <= max_degree) out.terms_.emplace_hint(out.terms_.end(), m, c);
  return out;
}

Polynomial Polynomial::alternating() const {
  Polynomial out(*this);
  for (auto& [m, c] : out.terms_)
    if (m.degree() % 2 == 1) c = -c;
  return out;
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (nvars_ != other.nvars_) throw InternalError("polynomials over different variable sets");
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_compatible(other);
  if (other.max_degree_ < max_degree_) *this = truncated(other.max_degree_);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_compatible(other);
  if (other.max_degree_ < max_degree_) *this = truncated(other.max_degree_);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

bool Polynomial::operator==(const Polynomial& other) const {
  return nvars_ == other.nvars_ && terms_ == other.terms_;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  const int cap = std::min(a.max_degree_, b.max_degree_);
  Polynomial out(a.nvars_, cap);
  for (const auto& [ma, ca] : a.terms_) {
    if (ma.degree() > cap) break;
    for (const auto& [mb, cb] : b.terms_) {
      if (ma.degree() + mb.degree() > cap) break;
      out.add_term(ma * mb, ca * cb);
    }
  }
  return out;
}

Polynomial pow(const Polynomial& p, int e) {
  if (e < 0) return pow(geom_inv(p), -e);
  Polynomial result = Polynomial::constant(p.nvars(), p.max_degree(), 1);
  Polynomial base = p;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial geom_inv(const Polynomial& u) {
  const Rational c = u.constant_term();
  if (c == 0) throw ArgumentError("geom_inv: constant term is zero, no inverse exists");
  // u = c(1 + z)  ⇒  u⁻¹ = c⁻¹ Σ (−z)^k
  Polynomial minus_z = u * Rational(-1 / c);
  minus_z.add_term(Monomial(u.nvars()), 1);
  Polynomial sum = Polynomial::constant(u.nvars(), u.max_degree(), 1);
  Polynomial power = sum;
  for (int k = 1; k <= u.max_degree(); ++k) {
    power = power * minus_z;
    if (power.is_zero()) break;
    sum += power;
  }
  return sum * Rational(1 / c);
}

Polynomial compose(std::span<const Rational> series, const Polynomial& z) {
  if (z.constant_term() != 0) throw ArgumentError("compose: argument must have zero constant term");
  Polynomial result(z.nvars(), z.max_degree());
  const std::size_t top = std::min<std::size_t>(series.size(), static_cast<std::size_t>(z.max_degree()) + 1);
  for (std::size_t k = top; k-- > 0;) {
    result = result * z;
    result.add_term(Monomial(z.nvars()), series[k]);
  }
  return result;
}

Polynomial exp(const Polynomial& z) {
  if (z.constant_term() != 0) throw ArgumentError("exp: argument must have zero constant term");
  std::vector<Rational> coeffs;
  for (int k = 0; k <= z.max_degree(); ++k) coeffs.push_back(1 / factorial(k));
  return compose(coeffs, z);
}

std::string to_string(const Polynomial& p, const std::function<std::string(std::size_t)>& name) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = abs(c);
    bool negative = c < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += name(i);
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    if (mono.empty()) {
      out += arrspec::to_string(mag);
    } else {
      if (mag != 1) out += arrspec::to_string(mag) + "*";
      out += mono;
    }
  }
  return out;
}

}  // namespace arrspec
