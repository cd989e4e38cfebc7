#include "latorb/modforms.hpp"

#include <doctest.h>

#include "latorb/bivariate.hpp"
#include "latorb/errors.hpp"

using namespace latorb;
using namespace latorb::modforms;
using qseries::kExponentScale;
using qseries::PuiseuxSeries;

namespace {

constexpr Exponent G = kExponentScale;

Exponent prec_grades(int g) { return G * g + 1; }

// Pentagonal-number expansion of prod (1-q^n), the independent oracle for eta.
PuiseuxSeries euler_product_oracle(Exponent prec) {
  PuiseuxSeries::TermMap t;
  for (std::int64_t j = -64; j <= 64; ++j) {
    std::int64_t e = G * j * (3 * j - 1) / 2;
    if (e >= 0 && e < prec) t[e] += (j % 2 == 0) ? 1 : -1;
  }
  return PuiseuxSeries::from_terms(std::move(t), 0, prec);
}

// Theta-sum oracles over the integers.
PuiseuxSeries theta_sum_oracle(int i, Exponent prec) {
  PuiseuxSeries::TermMap t;
  for (std::int64_t n = -200; n <= 200; ++n) {
    switch (i) {
      case 1: {
        std::int64_t e = 6 * (2 * n + 1) * (2 * n + 1);  // q^{(2n+1)^2/8}
        if (e < prec) t[e] += 1;
        break;
      }
      case 2: {
        std::int64_t e = 24 * n * n;  // q^{n^2/2}
        if (e < prec) t[e] += (n % 2 == 0) ? 1 : -1;
        break;
      }
      case 3: {
        std::int64_t e = 24 * n * n;
        if (e < prec) t[e] += 1;
        break;
      }
    }
  }
  return PuiseuxSeries::from_terms(std::move(t), 0, prec);
}

BivariateLaurent half_tau_half_z(const BivariateLaurent& x) {
  BivariateLaurent out;
  out.z_precision = x.z_precision;
  for (const auto& [e, s] : x.terms) out.terms.emplace(e, s.substitute_half());
  return out.scaled_z(Rational(1, 2));
}

}  // namespace

TEST_CASE("Bernoulli numbers from the generating function") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(3) == 0);
  CHECK(bernoulli(4) == Rational(-1, 30));
  CHECK(bernoulli(12) == Rational(-691, 2730));
}

TEST_CASE("Eisenstein q-expansions") {
  auto e2 = eisenstein_E(2, prec_grades(4));
  CHECK(e2.at_grade(0) == Rational(-1, 12));
  CHECK(e2.at_grade(1) == 2);
  CHECK(e2.at_grade(2) == 6);
  CHECK(e2.at_grade(3) == 8);

  auto e4 = eisenstein_E(4, prec_grades(3));
  CHECK(e4.at_grade(0) == Rational(1, 720));
  CHECK(e4.at_grade(1) == Rational(1, 3));
  CHECK(e4.at_grade(2) == 3);

  auto e1 = eisenstein_E(1, prec_grades(3));
  CHECK(e1.at_grade(0) == Rational(1, 2));
  CHECK(e1.at_grade(1) == 2);
  CHECK(e1.at_grade(2) == 4);

  auto f2 = eisenstein_F(2, prec_grades(4));
  CHECK(f2.at_grade(0) == Rational(-1, 12));
  CHECK(f2.at_grade(1) == -2);
  CHECK(f2.at_grade(2) == -2);
  CHECK(f2.at_grade(3) == -8);

  CHECK(eisenstein_F(1, prec_grades(1)).at_grade(0) == Rational(1, 2));
  CHECK_FALSE(eisenstein_F(3, prec_grades(3)).is_zero());

  auto e4n = eisenstein_normalized(4, prec_grades(3));
  CHECK(e4n.at_grade(0) == 1);
  CHECK(e4n.at_grade(1) == 240);
  CHECK(e4n.at_grade(2) == 2160);
}

TEST_CASE("pair weights") {
  auto ehat11 = pair_weight(PairWeightKind::EHat, 1, 1, prec_grades(3));
  CHECK(PuiseuxSeries::agree_to_common_precision(
      ehat11, eisenstein_E(2, prec_grades(3))));

  auto ebar11 = pair_weight(PairWeightKind::EBar, 1, 1, prec_grades(3));
  CHECK(ebar11.at(0) == Rational(1, 24));
  CHECK(ebar11.at(24) == 1);
  CHECK(ebar11.at(48) == 1);
  CHECK(ebar11.at(72) == 4);
  CHECK(ebar11.at(96) == 1);

  CHECK(pair_weight(PairWeightKind::EHat, 1, 2, prec_grades(3)).is_zero());
  CHECK(pair_weight(PairWeightKind::FBar, 2, 3, prec_grades(3)).is_zero());

  for (auto kind : {PairWeightKind::EHat, PairWeightKind::FHat,
                    PairWeightKind::EBar, PairWeightKind::FBar}) {
    for (unsigned m = 1; m <= 8; ++m) {
      for (unsigned n = 1; n <= 8; ++n) {
        CHECK(PuiseuxSeries::agree_to_common_precision(
            pair_weight(kind, m, n, prec_grades(3)),
            pair_weight(kind, n, m, prec_grades(3))));
      }
    }
  }
}

TEST_CASE("single weights") {
  CHECK(PuiseuxSeries::agree_to_common_precision(
      single_weight(SingleWeightKind::EBar, 2, prec_grades(3)),
      pair_weight(PairWeightKind::EBar, 1, 1, prec_grades(3))));

  auto s1 = single_weight(SingleWeightKind::EBar, 1, prec_grades(2));
  CHECK(s1.at(0) == 0);
  CHECK(s1.at(24) == 2);
  CHECK(s1.at(48) == 2);

  CHECK(PuiseuxSeries::agree_to_common_precision(
      single_weight(SingleWeightKind::F, 2, prec_grades(4)),
      eisenstein_F(2, prec_grades(4))));
}

TEST_CASE("eta against the pentagonal oracle") {
  const Exponent P = prec_grades(15);
  auto eta = dedekind_eta(P);
  auto oracle = PuiseuxSeries::monomial(1, 2, P) * euler_product_oracle(P);
  CHECK(PuiseuxSeries::agree_to_common_precision(eta, oracle));
  CHECK(eta.valuation() == 2);
  CHECK(eta.pow(24).valuation() == 48);
  CHECK(dedekind_eta(2 * P).substitute_half().valuation() == 1);
}

TEST_CASE("theta eta-quotients match theta-sum oracles") {
  const Exponent P = prec_grades(10);
  for (int i : {1, 2, 3}) {
    auto qt = jacobi_theta(i, P).truncated(P);
    CHECK(PuiseuxSeries::agree_to_common_precision(qt, theta_sum_oracle(i, P)));
  }
  // Theta1 leading behavior 2 q^{1/8}(1 + q + q^3 + ...)
  auto t1 = jacobi_theta(1, P);
  CHECK(t1.valuation() == 6);
  CHECK(t1.at(6) == 2);
  CHECK(t1.at(6 + 48) == 2);
}

TEST_CASE("theta product and quartic identities") {
  const Exponent P = prec_grades(10);
  auto t1 = jacobi_theta(1, P + 4 * G);
  auto t2 = jacobi_theta(2, P + 4 * G);
  auto t3 = jacobi_theta(3, P + 4 * G);
  auto eta = dedekind_eta(P + 4 * G);
  CHECK(PuiseuxSeries::agree_to_common_precision(
      (t1 * t2 * t3).truncated(P), (Rational(2) * eta.pow(3)).truncated(P)));
  CHECK(PuiseuxSeries::agree_to_common_precision(
      t3.pow(4).truncated(P), (t1.pow(4) + t2.pow(4)).truncated(P)));
}

TEST_CASE("P1/Q1 z-expansions") {
  const Exponent P = prec_grades(5);
  auto p0 = p1_deriv(0, 6, P);
  CHECK(PuiseuxSeries::agree_to_common_precision(p0.coeff(1, P),
                                                 eisenstein_E(2, P)));
  CHECK(p0.coeff(-1, P).at(0) == -1);

  auto p1m = p1_deriv(1, 6, P);
  CHECK(p1m.coeff(-2, P).at(0) == 1);

  auto q0 = q1_deriv(0, 6, P);
  CHECK(PuiseuxSeries::agree_to_common_precision(q0.coeff(1, P),
                                                 eisenstein_F(2, P)));
}

TEST_CASE("Lambert route reproduces the E/F expansions") {
  const Exponent P = prec_grades(5);
  for (unsigned m = 0; m <= 3; ++m) {
    CHECK(BivariateLaurent::agree_to_common_precision(
        p1_deriv(m, 5, P), p1_lambert(m, {}, 5, P)));
    CHECK(BivariateLaurent::agree_to_common_precision(
        q1_deriv(m, 5, P), q1_lambert(m, {}, 5, P)));
  }
}

TEST_CASE("translation identities for the pi*i shift") {
  const Exponent P = prec_grades(5);
  const int zp = 5;
  for (unsigned m = 0; m <= 2; ++m) {
    auto lhs_p = p1_lambert(m, {.half_z = true, .half_tau = true, .pi_shift = true},
                            zp, P);
    auto rhs_p = pow2_rational(m + 1) * p1_deriv(m, zp, P) -
                 half_tau_half_z(p1_deriv(m, zp, 2 * P));
    CHECK(BivariateLaurent::agree_to_common_precision(lhs_p, rhs_p));

    auto lhs_q = q1_lambert(m, {.half_z = true, .half_tau = true, .pi_shift = true},
                            zp, P);
    auto rhs_q = pow2_rational(m + 1) * q1_deriv(m, zp, P) -
                 half_tau_half_z(q1_deriv(m, zp, 2 * P));
    CHECK(BivariateLaurent::agree_to_common_precision(lhs_q, rhs_q));
  }
}
