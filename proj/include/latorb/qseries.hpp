#pragma once

#include <cstdint>
#include <map>

#include "latorb/rational.hpp"

namespace latorb::qseries {

// All exponents are stored scaled by 48: a stored key E represents q^{E/48}.
// The fixed denominator 48 is the common refinement of the grids produced by
// q^{1/24} (eta), q^{1/2} (tau/2 substitutions) and the k/16 - k/24 twisted
// grading with 8 | k.
inline constexpr std::int64_t kExponentScale = 48;

using Exponent = std::int64_t;

// Truncated Puiseux series with exact rational coefficients.
//
// A series knows the window [valuation, precision) of scaled exponents on
// which its coefficients are correct; terms at or beyond `precision` are
// unknown and requesting them is an error rather than a silent zero.
// Stored coefficients are never zero and always lie inside the window.
// Values are immutable after construction; all operations are pure.
class PuiseuxSeries {
 public:
  using TermMap = std::map<Exponent, Rational>;

  PuiseuxSeries() : valuation_(0), precision_(0) {}

  static PuiseuxSeries zero(Exponent precision);
  static PuiseuxSeries constant(const Rational& c, Exponent precision);
  // c * q^{e/48}
  static PuiseuxSeries monomial(const Rational& c, Exponent e,
                                Exponent precision);
  static PuiseuxSeries from_terms(TermMap terms, Exponent valuation,
                                  Exponent precision);

  Exponent valuation() const { return valuation_; }
  Exponent precision() const { return precision_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }

  // Coefficient at scaled exponent e; throws PrecisionInsufficient for
  // e >= precision().
  Rational at(Exponent e) const;
  // Coefficient at the integer q-power g.
  Rational at_grade(std::int64_t g) const { return at(kExponentScale * g); }

  PuiseuxSeries truncated(Exponent new_precision) const;
  void ensure_precision(Exponent p) const;

  PuiseuxSeries operator-() const;
  friend PuiseuxSeries operator+(const PuiseuxSeries& a,
                                 const PuiseuxSeries& b);
  friend PuiseuxSeries operator-(const PuiseuxSeries& a,
                                 const PuiseuxSeries& b);
  friend PuiseuxSeries operator*(const PuiseuxSeries& a,
                                 const PuiseuxSeries& b);
  friend PuiseuxSeries operator*(const Rational& c, const PuiseuxSeries& a);

  // Multiplicative inverse; requires a nonzero coefficient at the valuation.
  PuiseuxSeries inverse() const;
  // a^e with square-and-multiply; e < 0 goes through inverse().
  PuiseuxSeries pow(std::int64_t e) const;

  // q -> q^2 (exponents doubled, precision rescaled).
  PuiseuxSeries substitute_double() const;
  // q -> q^{1/2}; every stored exponent must be even on the 1/48 grid.
  PuiseuxSeries substitute_half() const;
  // q^{1/2} -> -q^{1/2}: negates coefficients at odd multiples of 24.
  // Requires all stored exponents to be multiples of 24.
  PuiseuxSeries flip_half_powers() const;
  // q d/dq: multiplies the coefficient at E by E/48.
  PuiseuxSeries q_derivative() const;

  // True when a and b agree on all exponents below min(precisions).
  static bool agree_to_common_precision(const PuiseuxSeries& a,
                                        const PuiseuxSeries& b);

 private:
  PuiseuxSeries(TermMap terms, Exponent valuation, Exponent precision)
      : terms_(std::move(terms)), valuation_(valuation), precision_(precision) {
    normalize();
  }

  // Drops zero coefficients and terms at/above precision, then tightens the
  // valuation to the first stored exponent (or to precision when empty).
  void normalize();

  TermMap terms_;
  Exponent valuation_;
  Exponent precision_;
};

}  // namespace latorb::qseries
