// SPDX-License-Identifier: Apache-2.0
#include "polynomial.hpp"

#include <numeric>
#include <stdexcept>

namespace predabs {

namespace {

std::int64_t lcm_checked(std::int64_t a, std::int64_t b) {
  __int128 l = static_cast<__int128>(a / std::gcd(a, b)) * b;
  if (l > INT64_MAX) throw std::overflow_error("polynomial denominator overflow");
  return static_cast<std::int64_t>(l);
}

std::string monomial(std::size_t power) {
  if (power == 0) return "";
  if (power == 1) return "mu";
  return "mu^" + std::to_string(power);
}

}  // namespace

PolyMu::PolyMu(Rational constant) : coeffs_{constant} { trim(); }

PolyMu::PolyMu(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

PolyMu PolyMu::mu() { return PolyMu({Rational(0), Rational(1)}); }

PolyMu PolyMu::one_minus_mu() { return PolyMu({Rational(1), Rational(-1)}); }

void PolyMu::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational PolyMu::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

Rational PolyMu::evaluate(const Rational& mu) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * mu + *it;
  return acc;
}

std::size_t PolyMu::multiplicity_at_one() const {
  if (is_zero()) throw std::domain_error("multiplicity of the zero polynomial");
  std::size_t k = 0;
  PolyMu p = *this;
  while (p.evaluate(Rational(1)).is_zero()) {
    p = p.divide_by_mu_minus_one(1);
    ++k;
  }
  return k;
}

PolyMu PolyMu::divide_by_mu_minus_one(std::size_t k) const {
  std::vector<Rational> c = coeffs_;
  for (std::size_t step = 0; step < k; ++step) {
    if (c.empty()) break;
    // Synthetic division by (mu - 1), highest degree first.
    std::vector<Rational> q(c.size() - 1);
    Rational carry(0);
    for (std::size_t i = c.size(); i-- > 1;) {
      carry = carry + c[i];
      q[i - 1] = carry;
    }
    if (!(carry + c[0]).is_zero()) throw std::domain_error("(mu - 1) does not divide polynomial");
    c = std::move(q);
  }
  return PolyMu(std::move(c));
}

PolyMu& PolyMu::operator+=(const PolyMu& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

PolyMu& PolyMu::operator-=(const PolyMu& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

PolyMu& PolyMu::operator*=(const PolyMu& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  coeffs_ = std::move(out);
  trim();
  return *this;
}

PolyMu PolyMu::pow(std::size_t exponent) const {
  PolyMu result(Rational(1));
  for (std::size_t i = 0; i < exponent; ++i) result *= *this;
  return result;
}

std::string PolyMu::str() const {
  if (coeffs_.size() <= 1) return coefficient(0).str();
  std::int64_t common = 1;
  for (const auto& c : coeffs_) common = lcm_checked(common, c.den());

  std::string body;
  std::size_t terms = 0;
  for (std::size_t power = coeffs_.size(); power-- > 0;) {
    Rational scaled = coeffs_[power] * Rational(common);
    if (scaled.is_zero()) continue;
    std::int64_t n = scaled.num();
    bool negative = n < 0;
    std::int64_t mag = negative ? -n : n;
    if (terms == 0) {
      if (negative) body += "-";
    } else {
      body += negative ? " - " : " + ";
    }
    if (power == 0) {
      body += std::to_string(mag);
    } else if (mag == 1) {
      body += monomial(power);
    } else {
      body += std::to_string(mag) + "*" + monomial(power);
    }
    ++terms;
  }
  if (common == 1) return body;
  if (terms == 1) return body + "/" + std::to_string(common);
  return "(" + body + ")/" + std::to_string(common);
}

RationalFnMu::RationalFnMu(PolyMu numerator, PolyMu denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  // Clear denominators, then divide out the integer content of both sides.
  std::int64_t common = 1;
  for (const auto& c : num_.coefficients()) common = lcm_checked(common, c.den());
  for (const auto& c : den_.coefficients()) common = lcm_checked(common, c.den());
  std::int64_t content = 0;
  for (const auto& c : num_.coefficients()) content = std::gcd(content, (c * Rational(common)).num());
  for (const auto& c : den_.coefficients()) content = std::gcd(content, (c * Rational(common)).num());
  Rational scale(common, content);
  if (den_.coefficients().back().num() < 0) scale = -scale;
  num_ *= PolyMu(scale);
  den_ *= PolyMu(scale);
}

Rational RationalFnMu::evaluate(const Rational& mu) const {
  Rational d = den_.evaluate(mu);
  if (d.is_zero()) throw std::domain_error("rational function undefined at mu = " + mu.str());
  return num_.evaluate(mu) / d;
}

Rational RationalFnMu::limit_at_one() const {
  std::size_t k = den_.multiplicity_at_one();
  PolyMu n = num_.is_zero() ? num_ : num_.divide_by_mu_minus_one(k);
  PolyMu d = den_.divide_by_mu_minus_one(k);
  return n.evaluate(Rational(1)) / d.evaluate(Rational(1));
}

std::string RationalFnMu::str() const {
  auto wrap = [](std::string s) { return s.find(' ') == std::string::npos ? s : "(" + s + ")"; };
  return wrap(num_.str()) + " / " + wrap(den_.str());
}

}  // namespace predabs
