#pragma once

#include "latorb/qseries.hpp"

namespace latorb::modforms {

using qseries::Exponent;
using qseries::PuiseuxSeries;

// Exact Bernoulli number B_n from z/(e^z - 1); the convention forces
// B_1 = -1/2.
Rational bernoulli(unsigned n);

// E_k(tau) = -B_k/k! + 2/(k-1)! sum_{n>=1} sigma_{k-1}(n) q^n, defined by the
// displayed q-series for every k >= 1 (odd k included; those only ever enter
// through the level-2/4 combinations below).
PuiseuxSeries eisenstein_E(unsigned k, Exponent prec);

// F_k(tau) = 2 E_k(2 tau) - E_k(tau).
PuiseuxSeries eisenstein_F(unsigned k, Exponent prec);

// Weight-k Eisenstein series normalized to constant term 1, i.e.
// E_k / (-B_k/k!). Only meaningful for even k.
PuiseuxSeries eisenstein_normalized(unsigned k, Exponent prec);

enum class PairWeightKind { EHat, FHat, EBar, FBar };

// Two-index renormalized weights attached to a 2-cycle (r s) with mode
// indices (m, n):
//   EHat: (-1)^{n+1} n C(m+n-1, n) E_{m+n}
//   FHat: the same prefactor times F_{m+n}
//   EBar: 2^{-(m+n-1)} EHat(tau/2) - EHat(tau)
//   FBar: 2^{-(m+n-1)} FHat(tau/2) - FHat(tau)
// Returns the zero series when m+n is odd (the two orderings disagree in
// sign there and no even-weight expansion produces such a term).
PuiseuxSeries pair_weight(PairWeightKind kind, unsigned m, unsigned n,
                          Exponent prec);

enum class SingleWeightKind { F, EBar, FBar };

// One-cycle weights with a single mode index n, no combinatorial prefactor
// and no parity zeroing:
//   F:    F_n(tau)
//   EBar: 2^{-(n-1)} E_n(tau/2) - E_n(tau)
//   FBar: 2^{-(n-1)} F_n(tau/2) - F_n(tau)
PuiseuxSeries single_weight(SingleWeightKind kind, unsigned n, Exponent prec);

// eta(tau) = q^{1/24} prod_{n>=1} (1 - q^n), expanded exactly.
PuiseuxSeries dedekind_eta(Exponent prec);

// Jacobi theta functions as eta quotients:
//   Theta1 = 2 eta(2tau)^2 / eta(tau)
//   Theta2 = eta(tau/2)^2 / eta(tau)
//   Theta3 = eta(tau)^5 / (eta(tau/2)^2 eta(2tau)^2)
PuiseuxSeries jacobi_theta(int i, Exponent prec);

}  // namespace latorb::modforms
