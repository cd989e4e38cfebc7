#include "latorb/bivariate.hpp"

#include <vector>

#include "latorb/errors.hpp"
#include "latorb/modforms.hpp"

namespace latorb::modforms {

namespace {

constexpr Exponent kScale = qseries::kExponentScale;

// Dense Laurent series in one formal variable with rational coefficients,
// used for the z-side elementary sums.
struct ZPoly {
  int off = 0;
  std::vector<Rational> c;

  Rational at(int e) const {
    int i = e - off;
    if (i < 0 || i >= static_cast<int>(c.size())) return 0;
    return c[i];
  }
};

// d/dw
ZPoly derivative(const ZPoly& p) {
  ZPoly r;
  r.off = p.off - 1;
  r.c.assign(p.c.size(), Rational(0));
  for (size_t i = 0; i < p.c.size(); ++i) {
    int e = p.off + static_cast<int>(i);
    if (e != 0) r.c[i] = Rational(e) * p.c[i];
  }
  // exponent e maps to e-1, so the vector shifts by the changed offset only
  return r;
}

// sum_{n>=1} e^{nw} = e^w/(1-e^w) = -1/w - 1/2 - sum_{k>=2} B_k w^{k-1}/k!
ZPoly geometric_exp_plus(int order) {
  ZPoly p;
  p.off = -1;
  p.c.assign(order + 2, Rational(0));
  p.c[0] = -1;
  p.c[1] = Rational(-1, 2);
  for (int k = 2; k - 1 <= order; ++k) {
    p.c[k] = -bernoulli(k) / Rational(factorial(k));
  }
  return p;
}

// sum_{n>=1} (-1)^n e^{nw} = -e^w/(1+e^w), regular at w = 0.
ZPoly geometric_exp_minus(int order) {
  // series division: N(w) = -e^w, D(w) = 1 + e^w
  std::vector<Rational> num(order + 1), den(order + 1);
  for (int i = 0; i <= order; ++i) {
    Rational inv_fact = Rational(1) / Rational(factorial(i));
    num[i] = -inv_fact;
    den[i] = inv_fact;
  }
  den[0] = 2;
  std::vector<Rational> q(order + 1);
  for (int i = 0; i <= order; ++i) {
    Rational s = num[i];
    for (int j = 1; j <= i; ++j) s -= den[j] * q[i - j];
    q[i] = s / den[0];
  }
  ZPoly p;
  p.off = 0;
  p.c = std::move(q);
  return p;
}

Rational signed_pow(const Rational& b, int e) {
  Rational r(1);
  for (int i = 0; i < (e >= 0 ? e : -e); ++i) r *= b;
  if (e < 0) r = 1 / r;
  return r;
}

BivariateLaurent lambert_expansion(unsigned m, LambertArgument arg, int z_prec,
                                   Exponent q_prec, bool q_kind) {
  const Rational c = arg.half_z ? Rational(1, 2) : Rational(1);
  const int sigma = arg.pi_shift ? -1 : 1;
  const Exponent q_step = arg.half_tau ? kScale / 2 : kScale;

  BivariateLaurent out;
  out.z_precision = z_prec;

  // Elementary part: delta_{m,0}/2 + (d/dw)^m [sum sigma^n e^{nw}] at w = cz.
  {
    int order = z_prec + static_cast<int>(m) + 2;
    ZPoly base = sigma == 1 ? geometric_exp_plus(order)
                            : geometric_exp_minus(order);
    for (unsigned d = 0; d < m; ++d) base = derivative(base);
    for (int e = base.off; e < z_prec; ++e) {
      Rational v = base.at(e);
      if (v == 0) continue;
      out.add_term(e, PuiseuxSeries::constant(v * signed_pow(c, e), q_prec));
    }
    if (m == 0) out.add_term(0, PuiseuxSeries::constant(Rational(1, 2), q_prec));
  }

  // q-part: sum_{n,j>=1} (+-1)^j q'^{jn} sigma^n n^m [e^{ncz} - (-1)^m e^{-ncz}]
  std::map<int, PuiseuxSeries::TermMap> acc;
  for (std::int64_t n = 1; q_step * n < q_prec; ++n) {
    Rational n_m(1);
    for (unsigned d = 0; d < m; ++d) n_m *= n;
    const Rational nc = Rational(n) * c;
    for (std::int64_t j = 1; q_step * j * n < q_prec; ++j) {
      Rational sign(1);
      if (sigma == -1 && n % 2 != 0) sign = -sign;
      if (q_kind && j % 2 != 0) sign = -sign;
      Rational pw(1);  // (nc)^a / a!
      for (int a = 0; a < z_prec; ++a) {
        if (a > 0) pw *= nc / a;
        if ((static_cast<int>(m) + a) % 2 == 0) continue;  // even m+a cancels
        Rational coef = sign * n_m * pw * 2;
        acc[a][q_step * j * n] += coef;
      }
    }
  }
  for (auto& [a, tm] : acc) {
    out.add_term(a, PuiseuxSeries::from_terms(std::move(tm), 0, q_prec));
  }
  return out;
}

}  // namespace

PuiseuxSeries BivariateLaurent::coeff(int z_exp, Exponent q_prec) const {
  auto it = terms.find(z_exp);
  if (it == terms.end()) return PuiseuxSeries::zero(q_prec);
  return it->second;
}

BivariateLaurent& BivariateLaurent::add_term(int z_exp,
                                             const PuiseuxSeries& s) {
  auto it = terms.find(z_exp);
  if (it == terms.end()) {
    terms.emplace(z_exp, s);
  } else {
    it->second = it->second + s;
  }
  return *this;
}

BivariateLaurent BivariateLaurent::scaled_z(const Rational& r) const {
  BivariateLaurent out;
  out.z_precision = z_precision;
  for (const auto& [e, s] : terms) {
    Rational f(1);
    if (e >= 0) {
      for (int i = 0; i < e; ++i) f *= r;
    } else {
      for (int i = 0; i < -e; ++i) f /= r;
    }
    out.terms.emplace(e, f * s);
  }
  return out;
}

BivariateLaurent operator+(const BivariateLaurent& a,
                           const BivariateLaurent& b) {
  BivariateLaurent out = a;
  out.z_precision = std::min(a.z_precision, b.z_precision);
  for (const auto& [e, s] : b.terms) out.add_term(e, s);
  return out;
}

BivariateLaurent operator-(const BivariateLaurent& a,
                           const BivariateLaurent& b) {
  return a + (Rational(-1) * b);
}

BivariateLaurent operator*(const Rational& c, const BivariateLaurent& a) {
  BivariateLaurent out;
  out.z_precision = a.z_precision;
  for (const auto& [e, s] : a.terms) out.terms.emplace(e, c * s);
  return out;
}

bool BivariateLaurent::agree_to_common_precision(const BivariateLaurent& a,
                                                 const BivariateLaurent& b) {
  int zp = std::min(a.z_precision, b.z_precision);
  for (const auto& [e, s] : a.terms) {
    if (e >= zp) continue;
    if (!PuiseuxSeries::agree_to_common_precision(s, b.coeff(e, s.precision())))
      return false;
  }
  for (const auto& [e, s] : b.terms) {
    if (e >= zp) continue;
    if (a.terms.find(e) == a.terms.end() && !s.is_zero()) {
      if (!PuiseuxSeries::agree_to_common_precision(s, PuiseuxSeries::zero(s.precision())))
        return false;
    }
  }
  return true;
}

BivariateLaurent p1_deriv(unsigned m, int z_prec, Exponent q_prec) {
  BivariateLaurent out;
  out.z_precision = z_prec;
  Rational polar = Rational(factorial(m));
  if (m % 2 == 0) polar = -polar;  // (-1)^{m+1}
  out.add_term(-static_cast<int>(m) - 1, PuiseuxSeries::constant(polar, q_prec));
  for (unsigned k = 1; 2 * static_cast<int>(k) - static_cast<int>(m) - 1 < z_prec; ++k) {
    Integer b = binomial(2 * k - 1, m);
    if (b == 0) continue;
    Rational coef = Rational(factorial(m)) * Rational(b);
    out.add_term(2 * k - m - 1, coef * eisenstein_E(2 * k, q_prec));
  }
  return out;
}

BivariateLaurent q1_deriv(unsigned m, int z_prec, Exponent q_prec) {
  BivariateLaurent out;
  out.z_precision = z_prec;
  Rational polar = Rational(factorial(m));
  if (m % 2 == 0) polar = -polar;
  out.add_term(-static_cast<int>(m) - 1, PuiseuxSeries::constant(polar, q_prec));
  for (unsigned k = 1; 2 * static_cast<int>(k) - static_cast<int>(m) - 1 < z_prec; ++k) {
    Integer b = binomial(2 * k - 1, m);
    if (b == 0) continue;
    Rational coef = Rational(factorial(m)) * Rational(b);
    out.add_term(2 * k - m - 1, coef * eisenstein_F(2 * k, q_prec));
  }
  return out;
}

BivariateLaurent p1_lambert(unsigned m, LambertArgument arg, int z_prec,
                            Exponent q_prec) {
  return lambert_expansion(m, arg, z_prec, q_prec, /*q_kind=*/false);
}

BivariateLaurent q1_lambert(unsigned m, LambertArgument arg, int z_prec,
                            Exponent q_prec) {
  return lambert_expansion(m, arg, z_prec, q_prec, /*q_kind=*/true);
}

}  // namespace latorb::modforms
