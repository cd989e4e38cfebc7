#include "latorb/qseries.hpp"

#include <doctest.h>

#include <random>

#include "latorb/errors.hpp"

using latorb::Errc;
using latorb::Error;
using latorb::Rational;
using latorb::qseries::Exponent;
using latorb::qseries::kExponentScale;
using latorb::qseries::PuiseuxSeries;

namespace {

PuiseuxSeries q_pow(int num48, Exponent prec) {
  return PuiseuxSeries::monomial(1, num48, prec);
}

// Uniform random series on a stride grid, coefficients in [-5, 5].
PuiseuxSeries random_series(std::mt19937_64& rng, Exponent val, Exponent prec,
                            Exponent stride, bool unit_leading) {
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  PuiseuxSeries::TermMap t;
  for (Exponent e = val; e < prec; e += stride) {
    int c = coef(rng);
    if (c != 0) { Rational r(c, den(rng)); r.canonicalize(); t[e] = r; }
  }
  if (unit_leading) { Rational r(1 + std::abs(coef(rng)), den(rng)); r.canonicalize(); t[val] = r; }
  return PuiseuxSeries::from_terms(std::move(t), val, prec);
}

}  // namespace

TEST_CASE("addition: cancellation and precision window") {
  const Exponent P = 10 * kExponentScale;
  auto one = PuiseuxSeries::constant(1, P);
  auto half_q = q_pow(24, P);  // q^{1/2}
  auto a = one - half_q;
  auto sum = a + half_q;
  CHECK(sum.at(0) == 1);
  CHECK(sum.at(24) == 0);
  CHECK(sum.terms().size() == 1);

  auto b = q_pow(-kExponentScale, P) + q_pow(kExponentScale, P);
  CHECK(b.at(-kExponentScale) == 1);
  CHECK(b.at(kExponentScale) == 1);
  CHECK(b.valuation() == -kExponentScale);

  auto p10 = PuiseuxSeries::constant(1, 10 * kExponentScale);
  auto p5 = PuiseuxSeries::constant(1, 5 * kExponentScale);
  CHECK((p10 + p5).precision() == 5 * kExponentScale);
}

TEST_CASE("multiplication basics") {
  const Exponent P = 10 * kExponentScale;
  auto one = PuiseuxSeries::constant(1, P);
  auto hq = q_pow(24, P);
  auto prod = (one - hq) * (one + hq);
  CHECK(prod.at(0) == 1);
  CHECK(prod.at(24) == 0);
  CHECK(prod.at(48) == -1);

  // geometric series times (1 - q) telescopes to 1
  PuiseuxSeries::TermMap g;
  for (int n = 0; n < 10; ++n) g[kExponentScale * n] = 1;
  auto geo = PuiseuxSeries::from_terms(std::move(g), 0, P);
  auto lin = one - q_pow(kExponentScale, P);
  auto tele = geo * lin;
  CHECK(tele.at(0) == 1);
  for (int n = 1; n < 9; ++n) CHECK(tele.at_grade(n) == 0);

  auto c = q_pow(2, P) * q_pow(-2, P);  // q^{1/24} q^{-1/24}
  CHECK(c.at(0) == 1);
}

TEST_CASE("mul precision propagation with negative valuation") {
  // a = q^{-1} known to q^3, b known to q^5: product window per contract
  auto a = q_pow(-48, 4 * kExponentScale);
  auto b = PuiseuxSeries::constant(1, 5 * kExponentScale);
  auto p = a * b;
  CHECK(p.precision() == std::min<Exponent>(-48 + 5 * 48, 0 + 4 * 48));
}

TEST_CASE("inverse") {
  const Exponent P = 8 * kExponentScale;
  auto one = PuiseuxSeries::constant(1, P);
  auto inv = (one - q_pow(kExponentScale, P)).inverse();
  for (int n = 0; n < 8; ++n) CHECK(inv.at_grade(n) == 1);

  auto half = PuiseuxSeries::constant(Rational(1, 2), P).inverse();
  CHECK(half.at(0) == 2);

  // ((1/2)(1 - 2 q^{1/2}))^{-1} = 2(1 + 2 q^{1/2} + 4 q + ...)
  auto s = Rational(1, 2) * (one - Rational(2) * q_pow(24, P));
  auto si = s.inverse();
  CHECK(si.at(0) == 2);
  CHECK(si.at(24) == 4);
  CHECK(si.at(48) == 8);
  CHECK(si.at(72) == 16);

  CHECK_THROWS_AS((void)PuiseuxSeries::zero(P).inverse(), Error);
}

TEST_CASE("integer powers") {
  const Exponent P = 8 * kExponentScale;
  auto one_plus_q = PuiseuxSeries::constant(1, P) + q_pow(kExponentScale, P);
  auto p0 = one_plus_q.pow(0);
  CHECK(p0.at(0) == 1);
  CHECK(p0.terms().size() == 1);
  auto p2 = one_plus_q.pow(2);
  CHECK(p2.at_grade(0) == 1);
  CHECK(p2.at_grade(1) == 2);
  CHECK(p2.at_grade(2) == 1);

  // ((1/2)(1+q))^{-4} = 16(1 - 4q + 10q^2 - 20q^3 + ...)
  auto s = (Rational(1, 2) * one_plus_q).pow(-4);
  CHECK(s.at_grade(0) == 16);
  CHECK(s.at_grade(1) == -64);
  CHECK(s.at_grade(2) == 160);
  CHECK(s.at_grade(3) == -320);
}

TEST_CASE("substitutions") {
  const Exponent P = 8 * kExponentScale;
  auto s = q_pow(48, P) - q_pow(96, P);
  auto d = s.substitute_double();
  CHECK(d.at(96) == 1);
  CHECK(d.at(192) == -1);

  auto h = q_pow(48, P).substitute_half();
  CHECK(h.at(24) == 1);

  CHECK_THROWS_AS((void)q_pow(1, P).substitute_half(), Error);
}

TEST_CASE("coefficient access beyond precision is an error") {
  auto s = PuiseuxSeries::constant(1, 48);
  CHECK_THROWS_AS((void)s.at(48), Error);
  try {
    (void)s.at(100);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::PrecisionInsufficient);
  }
}

TEST_CASE("ring axioms on random series") {
  std::mt19937_64 rng(20240811);
  for (int it = 0; it < 60; ++it) {
    Exponent stride = (it % 2 == 0) ? 24 : 48;
    auto a = random_series(rng, -2 * 48, 5 * 48, stride, false);
    auto b = random_series(rng, 0, 6 * 48, stride, false);
    auto c = random_series(rng, -48, 4 * 48, stride, false);
    auto lhs = (a * b) * c;
    auto rhs = a * (b * c);
    CHECK(PuiseuxSeries::agree_to_common_precision(lhs, rhs));
    auto dist_l = a * (b + c);
    auto dist_r = a * b + a * c;
    CHECK(PuiseuxSeries::agree_to_common_precision(dist_l, dist_r));
    CHECK(PuiseuxSeries::agree_to_common_precision(a * b, b * a));
  }
}

TEST_CASE("invert then multiply returns one") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 100; ++it) {
    Exponent stride = (it % 3 == 0) ? 16 : 48;
    Exponent val = 48 * ((it % 5) - 2);
    auto a = random_series(rng, val, val + 6 * 48, stride, true);
    auto prod = a * a.inverse();
    CHECK(prod.at(0) == 1);
    for (const auto& [e, coeff] : prod.terms()) {
      if (e != 0) CHECK(coeff == 0);
    }
  }
}

TEST_CASE("substitute_half undoes substitute_double") {
  std::mt19937_64 rng(99);
  for (int it = 0; it < 40; ++it) {
    auto a = random_series(rng, 0, 5 * 48, 48, false);
    auto back = a.substitute_double().substitute_half();
    CHECK(PuiseuxSeries::agree_to_common_precision(a, back));
    CHECK(back.precision() == a.precision());
  }
}

TEST_CASE("q-derivative and half-power sign flip") {
  const Exponent P = 6 * kExponentScale;
  auto s = q_pow(24, P) + Rational(3) * q_pow(96, P);
  auto d = s.q_derivative();
  CHECK(d.at(24) == Rational(1, 2));
  CHECK(d.at(96) == 6);

  auto f = s.flip_half_powers();
  CHECK(f.at(24) == -1);
  CHECK(f.at(96) == 3);
  CHECK_THROWS_AS((void)q_pow(2, P).flip_half_powers(), Error);
}
