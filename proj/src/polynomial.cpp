#include "redpow/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace redpow {

namespace {

// Root bounds above this are refused: callers enumerate indices below the bound.
const mpz_class kMaxSignBound = mpz_class(1) << 40;

} // namespace

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0)
    throw std::invalid_argument("malformed rational '" + text + "'");
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(std::size_t degree, const Rational& coeff) {
  std::vector<Rational> c(degree + 1, Rational(0));
  c[degree] = coeff;
  return Polynomial(std::move(c));
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0)
    coeffs_.pop_back();
  denom_ = 1;
  for (const auto& c : coeffs_)
    mpz_lcm(denom_.get_mpz_t(), denom_.get_mpz_t(), c.get_den_mpz_t());
  scaled_.clear();
  scaled_.reserve(coeffs_.size());
  for (const auto& c : coeffs_)
    scaled_.push_back(c.get_num() * (denom_ / c.get_den()));
}

std::optional<std::size_t> Polynomial::degree() const {
  if (coeffs_.empty())
    return std::nullopt;
  return coeffs_.size() - 1;
}

Rational Polynomial::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational Polynomial::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

Rational Polynomial::eval(Index n) const {
  mpz_class acc = 0;
  const mpz_class x = static_cast<unsigned long>(n);
  for (auto it = scaled_.rbegin(); it != scaled_.rend(); ++it)
    acc = acc * x + *it;
  Rational out(acc, denom_);
  out.canonicalize();
  return out;
}

int Polynomial::sign_at(Index n) const {
  mpz_class acc = 0;
  const mpz_class x = static_cast<unsigned long>(n);
  for (auto it = scaled_.rbegin(); it != scaled_.rend(); ++it)
    acc = acc * x + *it;
  return sgn(acc);
}

Index Polynomial::sign_bound() const {
  if (coeffs_.size() <= 1)
    return 0;
  const Rational lead = abs(coeffs_.back());
  Rational max_ratio = 0;
  Rational sum_ratio = 0;
  for (std::size_t i = 0; i + 1 < coeffs_.size(); ++i) {
    const Rational r = abs(coeffs_[i]) / lead;
    max_ratio = std::max(max_ratio, r);
    sum_ratio += r;
  }
  // Cauchy: |root| < 1 + max ratio. Lagrange: |root| <= max(1, sum of ratios).
  const Rational bound = std::min(Rational(1 + max_ratio), std::max(Rational(1), sum_ratio));
  mpz_class floor_bound;
  mpz_fdiv_q(floor_bound.get_mpz_t(), bound.get_num_mpz_t(), bound.get_den_mpz_t());
  const mpz_class result = floor_bound + 1;
  if (result > kMaxSignBound)
    throw std::overflow_error("polynomial root bound too large: " + result.get_str());
  return result.get_ui();
}

std::vector<Index> Polynomial::natural_roots() const {
  if (is_zero())
    throw std::logic_error("natural_roots of the zero polynomial");
  std::vector<Index> roots;
  std::size_t low = 0;
  while (scaled_[low] == 0)
    ++low;
  if (low > 0)
    roots.push_back(0);
  if (low + 1 == scaled_.size())
    return roots;
  // Any non-zero integer root divides the lowest non-zero coefficient.
  const mpz_class trailing = abs(scaled_[low]);
  Index limit = sign_bound();
  if (trailing.fits_ulong_p())
    limit = std::min<Index>(limit, trailing.get_ui());
  for (Index n = 1; n <= limit; ++n) {
    if (!mpz_divisible_ui_p(trailing.get_mpz_t(), static_cast<unsigned long>(n)))
      continue;
    if (sign_at(n) == 0)
      roots.push_back(n);
  }
  return roots;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (coeffs_.size() < o.coeffs_.size())
    coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (coeffs_.size() < o.coeffs_.size())
    coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    normalize();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * o.coeffs_[j];
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

Polynomial operator-(const Polynomial& a) {
  std::vector<Rational> c = a.coeffs_;
  for (auto& x : c)
    x = -x;
  return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& k, const Polynomial& a) {
  std::vector<Rational> c = a.coeffs_;
  for (auto& x : c)
    x *= k;
  return Polynomial(std::move(c));
}

bool operator<(const Polynomial& a, const Polynomial& b) {
  if (a.coeffs_.size() != b.coeffs_.size())
    return a.coeffs_.size() < b.coeffs_.size();
  for (std::size_t i = a.coeffs_.size(); i-- > 0;) {
    if (a.coeffs_[i] != b.coeffs_[i])
      return a.coeffs_[i] < b.coeffs_[i];
  }
  return false;
}

std::string Polynomial::to_string() const {
  if (is_zero())
    return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0)
      continue;
    const Rational mag = abs(c);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    std::string mono;
    if (i >= 1)
      mono = i == 1 ? "l" : "l^" + std::to_string(i);
    if (mono.empty())
      out += mag.get_str();
    else if (mag == 1)
      out += mono;
    else
      out += mag.get_str() + "*" + mono;
  }
  return out;
}

} // namespace redpow
