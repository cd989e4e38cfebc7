#include "latorb/modforms.hpp"

#include <vector>

#include "latorb/errors.hpp"

namespace latorb::modforms {

namespace {

constexpr Exponent kScale = qseries::kExponentScale;

Exponent ceil_half(Exponent p) { return p >= 0 ? (p + 1) / 2 : -((-p) / 2); }

// Scalar prefactor (-1)^{n+1} n C(m+n-1, n) of the hat weights.
Rational hat_prefactor(unsigned m, unsigned n) {
  Integer b = binomial(m + n - 1, n);
  Rational c = Rational(b) * n;
  if (n % 2 == 0) c = -c;
  return c;
}

}  // namespace

Rational bernoulli(unsigned n) {
  // z = (sum B_j z^j / j!)(e^z - 1): compare coefficients of z^{k+1}.
  std::vector<Rational> b(n + 1);
  b[0] = 1;
  for (unsigned k = 1; k <= n; ++k) {
    Rational s(0);
    for (unsigned j = 0; j < k; ++j) {
      s += b[j] / Rational(factorial(j) * factorial(k + 1 - j));
    }
    b[k] = -Rational(factorial(k)) * s;
  }
  return b[n];
}

PuiseuxSeries eisenstein_E(unsigned k, Exponent prec) {
  if (k < 1) fail(Errc::Internal, "eisenstein_E needs k >= 1");
  PuiseuxSeries::TermMap t;
  Rational c0 = -bernoulli(k) / Rational(factorial(k));
  if (c0 != 0) t.emplace(0, c0);
  const Rational norm = Rational(2) / Rational(factorial(k - 1));
  for (std::int64_t n = 1; kScale * n < prec; ++n) {
    Integer sigma(0);
    for (std::int64_t d = 1; d <= n; ++d) {
      if (n % d == 0) {
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d), k - 1);
        sigma += p;
      }
    }
    t.emplace(kScale * n, norm * Rational(sigma));
  }
  return PuiseuxSeries::from_terms(std::move(t), 0, prec);
}

PuiseuxSeries eisenstein_F(unsigned k, Exponent prec) {
  PuiseuxSeries direct = eisenstein_E(k, prec);
  PuiseuxSeries doubled = eisenstein_E(k, ceil_half(prec)).substitute_double();
  return Rational(2) * doubled - direct;
}

PuiseuxSeries eisenstein_normalized(unsigned k, Exponent prec) {
  Rational c0 = -bernoulli(k) / Rational(factorial(k));
  if (c0 == 0) fail(Errc::Internal, "no normalization for odd k");
  return (1 / c0) * eisenstein_E(k, prec);
}

PuiseuxSeries pair_weight(PairWeightKind kind, unsigned m, unsigned n,
                          Exponent prec) {
  if (m < 1 || n < 1) fail(Errc::Internal, "pair_weight needs m, n >= 1");
  const unsigned w = m + n;
  if (w % 2 != 0) return PuiseuxSeries::zero(prec);
  const Rational c = hat_prefactor(m, n);
  switch (kind) {
    case PairWeightKind::EHat:
      return c * eisenstein_E(w, prec);
    case PairWeightKind::FHat:
      return c * eisenstein_F(w, prec);
    case PairWeightKind::EBar: {
      PuiseuxSeries half = eisenstein_E(w, 2 * prec).substitute_half();
      return (c * pow2_rational(-static_cast<long>(w) + 1)) * half -
             c * eisenstein_E(w, prec);
    }
    case PairWeightKind::FBar: {
      PuiseuxSeries half = eisenstein_F(w, 2 * prec).substitute_half();
      return (c * pow2_rational(-static_cast<long>(w) + 1)) * half -
             c * eisenstein_F(w, prec);
    }
  }
  fail(Errc::Internal, "unreachable");
}

PuiseuxSeries single_weight(SingleWeightKind kind, unsigned n, Exponent prec) {
  if (n < 1) fail(Errc::Internal, "single_weight needs n >= 1");
  switch (kind) {
    case SingleWeightKind::F:
      return eisenstein_F(n, prec);
    case SingleWeightKind::EBar: {
      PuiseuxSeries half = eisenstein_E(n, 2 * prec).substitute_half();
      return pow2_rational(-static_cast<long>(n) + 1) * half -
             eisenstein_E(n, prec);
    }
    case SingleWeightKind::FBar: {
      PuiseuxSeries half = eisenstein_F(n, 2 * prec).substitute_half();
      return pow2_rational(-static_cast<long>(n) + 1) * half -
             eisenstein_F(n, prec);
    }
  }
  fail(Errc::Internal, "unreachable");
}

PuiseuxSeries dedekind_eta(Exponent prec) {
  // q^{1/24} times the Euler product, each factor multiplied in exactly.
  const Exponent width = prec - 2 > 0 ? prec - 2 : 1;
  PuiseuxSeries prod = PuiseuxSeries::constant(1, width);
  for (std::int64_t n = 1; kScale * n < width; ++n) {
    PuiseuxSeries::TermMap f;
    f.emplace(0, Rational(1));
    f.emplace(kScale * n, Rational(-1));
    prod = prod * PuiseuxSeries::from_terms(std::move(f), 0, width);
  }
  return PuiseuxSeries::monomial(1, 2, prec) * prod;
}

PuiseuxSeries jacobi_theta(int i, Exponent prec) {
  // Generous internal padding; quotient valuations are small and the final
  // precision is asserted by truncation at the call sites that need it.
  const Exponent pad = prec + 4 * kScale;
  PuiseuxSeries eta = dedekind_eta(pad);
  switch (i) {
    case 1: {
      PuiseuxSeries eta2 = dedekind_eta(ceil_half(pad) + kScale).substitute_double();
      return Rational(2) * eta2 * eta2 * eta.inverse();
    }
    case 2: {
      PuiseuxSeries etah = dedekind_eta(2 * pad).substitute_half();
      return etah * etah * eta.inverse();
    }
    case 3: {
      PuiseuxSeries eta2 = dedekind_eta(ceil_half(pad) + kScale).substitute_double();
      PuiseuxSeries etah = dedekind_eta(2 * pad).substitute_half();
      PuiseuxSeries denom = etah * etah * eta2 * eta2;
      return eta.pow(5) * denom.inverse();
    }
    default:
      fail(Errc::Internal, "jacobi_theta index must be 1, 2 or 3");
  }
}

}  // namespace latorb::modforms
