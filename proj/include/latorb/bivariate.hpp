#pragma once

#include <map>

#include "latorb/qseries.hpp"

namespace latorb::modforms {

using qseries::Exponent;
using qseries::PuiseuxSeries;

// Laurent polynomial in z whose coefficients are PuiseuxSeries in q.
// z-exponents below z_precision are known; each coefficient carries its own
// q-window.
struct BivariateLaurent {
  std::map<int, PuiseuxSeries> terms;
  int z_precision = 0;

  PuiseuxSeries coeff(int z_exp, Exponent q_prec) const;

  BivariateLaurent& add_term(int z_exp, const PuiseuxSeries& s);
  // z -> r z: multiplies the coefficient of z^a by r^a.
  BivariateLaurent scaled_z(const Rational& r) const;

  friend BivariateLaurent operator+(const BivariateLaurent& a,
                                    const BivariateLaurent& b);
  friend BivariateLaurent operator-(const BivariateLaurent& a,
                                    const BivariateLaurent& b);
  friend BivariateLaurent operator*(const Rational& c,
                                    const BivariateLaurent& a);

  static bool agree_to_common_precision(const BivariateLaurent& a,
                                        const BivariateLaurent& b);
};

// P_1^{(m)}(z, tau) = m!((-1)^{m+1} z^{-m-1} + sum_{k>=1} C(2k-1, m) E_2k z^{2k-m-1})
BivariateLaurent p1_deriv(unsigned m, int z_prec, Exponent q_prec);
// Q_1^{(m)}: the same shape with F_2k coefficients.
BivariateLaurent q1_deriv(unsigned m, int z_prec, Exponent q_prec);

// Expansion of P_1^{(m)} / Q_1^{(m)} at a transformed argument, computed
// directly from the Lambert series (independent of the E_2k route above):
//   argument  w = (half_z ? z/2 : z) + (pi_shift ? pi*i : 0)
//   modulus   tau' = half_tau ? tau/2 : tau
// The pi*i shift enters exactly through the signs (-1)^n of the Lambert
// index, so all coefficients stay rational.
struct LambertArgument {
  bool half_z = false;
  bool half_tau = false;
  bool pi_shift = false;
};

BivariateLaurent p1_lambert(unsigned m, LambertArgument arg, int z_prec,
                            Exponent q_prec);
BivariateLaurent q1_lambert(unsigned m, LambertArgument arg, int z_prec,
                            Exponent q_prec);

}  // namespace latorb::modforms
