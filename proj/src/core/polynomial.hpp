// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rational.hpp"

namespace predabs {

/// Polynomial in the Bernoulli parameter mu with exact coefficients,
/// stored lowest degree first and kept free of trailing zeros.
class PolyMu {
 public:
  PolyMu() = default;
  PolyMu(Rational constant);  // NOLINT(google-explicit-constructor)
  explicit PolyMu(std::vector<Rational> coefficients);

  static PolyMu mu();
  static PolyMu one_minus_mu();

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t power) const;
  /// Degree of the zero polynomial is reported as 0.
  std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  Rational evaluate(const Rational& mu) const;

  /// Largest k such that (mu - 1)^k divides this polynomial. Undefined for zero.
  std::size_t multiplicity_at_one() const;
  /// Exact quotient by (mu - 1)^k; requires k <= multiplicity_at_one().
  PolyMu divide_by_mu_minus_one(std::size_t k) const;

  PolyMu& operator+=(const PolyMu& rhs);
  PolyMu& operator-=(const PolyMu& rhs);
  PolyMu& operator*=(const PolyMu& rhs);
  friend PolyMu operator+(PolyMu a, const PolyMu& b) { return a += b; }
  friend PolyMu operator-(PolyMu a, const PolyMu& b) { return a -= b; }
  friend PolyMu operator*(PolyMu a, const PolyMu& b) { return a *= b; }
  friend bool operator==(const PolyMu&, const PolyMu&) = default;

  PolyMu pow(std::size_t exponent) const;

  /// Canonical text with a common denominator pulled out, highest degree
  /// first, e.g. "(14*mu + 3)/20", "mu", "-mu + 1", "17/20".
  std::string str() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Ratio of two mu-polynomials, normalised to coprime integer coefficients
/// with a positive leading denominator coefficient.
class RationalFnMu {
 public:
  RationalFnMu(PolyMu numerator, PolyMu denominator);

  const PolyMu& numerator() const { return num_; }
  const PolyMu& denominator() const { return den_; }

  Rational evaluate(const Rational& mu) const;
  /// Value as mu -> 1 from below: both sides are divided by the largest power
  /// of (mu - 1) dividing the denominator before evaluating at 1.
  Rational limit_at_one() const;

  friend bool operator==(const RationalFnMu&, const RationalFnMu&) = default;

  /// "num / den".
  std::string str() const;

 private:
  PolyMu num_;
  PolyMu den_;
};

}  // namespace predabs
