#include "latorb/qseries.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "latorb/errors.hpp"

namespace latorb::qseries {

namespace {
Exponent ceil_div2(Exponent e) { return e >= 0 ? (e + 1) / 2 : -((-e) / 2); }
}  // namespace

void PuiseuxSeries::normalize() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second.canonicalize();
    if (it->first >= precision_ || it->second == 0) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
  valuation_ = terms_.empty() ? precision_ : terms_.begin()->first;
  if (valuation_ > precision_) valuation_ = precision_;
}

PuiseuxSeries PuiseuxSeries::zero(Exponent precision) {
  return PuiseuxSeries(TermMap{}, precision, precision);
}

PuiseuxSeries PuiseuxSeries::constant(const Rational& c, Exponent precision) {
  TermMap t;
  if (c != 0) t.emplace(0, c);
  return PuiseuxSeries(std::move(t), 0, precision);
}

PuiseuxSeries PuiseuxSeries::monomial(const Rational& c, Exponent e,
                                      Exponent precision) {
  TermMap t;
  if (c != 0) t.emplace(e, c);
  return PuiseuxSeries(std::move(t), e, precision);
}

PuiseuxSeries PuiseuxSeries::from_terms(TermMap terms, Exponent valuation,
                                        Exponent precision) {
  return PuiseuxSeries(std::move(terms), valuation, precision);
}

Rational PuiseuxSeries::at(Exponent e) const {
  if (e >= precision_) {
    fail(Errc::PrecisionInsufficient,
         "coefficient at scaled exponent " + std::to_string(e) +
             " requested, series precision is " + std::to_string(precision_));
  }
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

PuiseuxSeries PuiseuxSeries::truncated(Exponent new_precision) const {
  Exponent p = std::min(new_precision, precision_);
  return PuiseuxSeries(terms_, std::min(valuation_, p), p);
}

void PuiseuxSeries::ensure_precision(Exponent p) const {
  if (precision_ < p) {
    fail(Errc::PrecisionInsufficient,
         "series precision " + std::to_string(precision_) +
             " below required " + std::to_string(p));
  }
}

PuiseuxSeries PuiseuxSeries::operator-() const {
  TermMap t = terms_;
  for (auto& [e, c] : t) c = -c;
  return PuiseuxSeries(std::move(t), valuation_, precision_);
}

PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  Exponent prec = std::min(a.precision_, b.precision_);
  Exponent val = std::min(a.valuation_, b.valuation_);
  PuiseuxSeries::TermMap t;
  for (const auto& [e, c] : a.terms_) {
    if (e < prec) t[e] += c;
  }
  for (const auto& [e, c] : b.terms_) {
    if (e < prec) t[e] += c;
  }
  return PuiseuxSeries(std::move(t), val, prec);
}

PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  return a + (-b);
}

PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  Exponent prec =
      std::min(a.valuation_ + b.precision_, b.valuation_ + a.precision_);
  Exponent val = a.valuation_ + b.valuation_;
  PuiseuxSeries::TermMap t;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e = ea + eb;
      if (e < prec) t[e] += ca * cb;
    }
  }
  return PuiseuxSeries(std::move(t), val, prec);
}

PuiseuxSeries operator*(const Rational& c, const PuiseuxSeries& a) {
  if (c == 0) return PuiseuxSeries::zero(a.precision_);
  PuiseuxSeries::TermMap t = a.terms_;
  for (auto& [e, v] : t) v *= c;
  return PuiseuxSeries(std::move(t), a.valuation_, a.precision_);
}

PuiseuxSeries PuiseuxSeries::inverse() const {
  if (terms_.empty()) {
    fail(Errc::ZeroLeadingCoefficient,
         "cannot invert a series with no known nonzero term");
  }
  const Exponent v0 = terms_.begin()->first;
  const Rational& a0 = terms_.begin()->second;
  const Exponent width = precision_ - v0;

  // Work on the gcd stride of the offsets from the leading exponent; the
  // inverse is supported on the same stride.
  Exponent g = 0;
  for (const auto& [e, c] : terms_) g = std::gcd(g, e - v0);
  if (g == 0) {
    // single term: inverse is a monomial
    return monomial(1 / a0, -v0, width - v0);
  }
  const std::int64_t len = static_cast<std::int64_t>((width + g - 1) / g);
  std::vector<Rational> a(len, Rational(0));
  for (const auto& [e, c] : terms_) {
    Exponent d = (e - v0) / g;
    if (d < len) a[d] = c;
  }
  std::vector<Rational> b(len, Rational(0));
  b[0] = 1 / a0;
  for (std::int64_t j = 1; j < len; ++j) {
    Rational s(0);
    for (std::int64_t i = 1; i <= j; ++i) {
      if (a[i] != 0 && b[j - i] != 0) s += a[i] * b[j - i];
    }
    if (s != 0) b[j] = -s / a0;
  }
  TermMap t;
  for (std::int64_t j = 0; j < len; ++j) {
    if (b[j] != 0) t.emplace(-v0 + j * g, b[j]);
  }
  return PuiseuxSeries(std::move(t), -v0, -v0 + width);
}

PuiseuxSeries PuiseuxSeries::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  if (e == 0) return constant(1, precision_ - valuation_);
  PuiseuxSeries base = *this;
  PuiseuxSeries result = constant(1, precision_ - valuation_);
  bool have = false;
  std::int64_t n = e;
  while (n > 0) {
    if (n & 1) {
      result = have ? result * base : base;
      have = true;
    }
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

PuiseuxSeries PuiseuxSeries::substitute_double() const {
  TermMap t;
  for (const auto& [e, c] : terms_) t.emplace(2 * e, c);
  return PuiseuxSeries(std::move(t), 2 * valuation_, 2 * precision_);
}

PuiseuxSeries PuiseuxSeries::substitute_half() const {
  TermMap t;
  for (const auto& [e, c] : terms_) {
    if (e % 2 != 0) {
      fail(Errc::ExponentNotRepresentable,
           "halving scaled exponent " + std::to_string(e) +
               " leaves the 1/48 grid");
    }
    t.emplace(e / 2, c);
  }
  return PuiseuxSeries(std::move(t), ceil_div2(valuation_),
                       ceil_div2(precision_));
}

PuiseuxSeries PuiseuxSeries::flip_half_powers() const {
  TermMap t;
  for (const auto& [e, c] : terms_) {
    if (e % 24 != 0) {
      fail(Errc::ExponentNotRepresentable,
           "q^{1/2} sign flip needs exponents on the 1/2 grid, got " +
               std::to_string(e) + "/48");
    }
    t.emplace(e, (e / 24) % 2 != 0 ? -c : c);
  }
  return PuiseuxSeries(std::move(t), valuation_, precision_);
}

PuiseuxSeries PuiseuxSeries::q_derivative() const {
  TermMap t;
  for (const auto& [e, c] : terms_) {
    Rational f(e, kExponentScale);
    f.canonicalize();
    if (e != 0) t.emplace(e, f * c);
  }
  return PuiseuxSeries(std::move(t), valuation_, precision_);
}

bool PuiseuxSeries::agree_to_common_precision(const PuiseuxSeries& a,
                                              const PuiseuxSeries& b) {
  Exponent prec = std::min(a.precision_, b.precision_);
  for (const auto& [e, c] : a.terms_) {
    if (e < prec) {
      auto it = b.terms_.find(e);
      if (it == b.terms_.end() || it->second != c) return false;
    }
  }
  for (const auto& [e, c] : b.terms_) {
    if (e < prec && a.terms_.find(e) == a.terms_.end()) return false;
  }
  return true;
}

}  // namespace latorb::qseries
