#include "latorb/rational.hpp"

#include "latorb/errors.hpp"

namespace latorb {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ZeroLeadingCoefficient: return "ZeroLeadingCoefficient";
    case Errc::ExponentNotRepresentable: return "ExponentNotRepresentable";
    case Errc::PrecisionInsufficient: return "PrecisionInsufficient";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::NotPositiveDefinite: return "NotPositiveDefinite";
    case Errc::NotEven: return "NotEven";
    case Errc::RankNotMultipleOf8: return "RankNotMultipleOf8";
    case Errc::DualConditionFails: return "DualConditionFails";
    case Errc::EnumerationTooLarge: return "EnumerationTooLarge";
    case Errc::GradeTooLarge: return "GradeTooLarge";
    case Errc::ParityViolation: return "ParityViolation";
    case Errc::RankMismatch: return "RankMismatch";
    case Errc::StateNotInDomain: return "StateNotInDomain";
    case Errc::NotUnimodular: return "NotUnimodular";
    case Errc::ParseError: return "ParseError";
    case Errc::IoError: return "IoError";
    case Errc::Internal: return "Internal";
  }
  return "UnknownError";
}

Rational rational_from_string(const std::string& s) {
  mpq_class r;
  if (s.empty() || r.set_str(s, 10) != 0) {
    fail(Errc::ParseError, "not a rational: '" + s + "'");
  }
  if (r.get_den() == 0) {
    fail(Errc::ParseError, "zero denominator in '" + s + "'");
  }
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

Integer binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Rational pow2_rational(long e) {
  Integer p = 1;
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
  Rational r = e >= 0 ? Rational(p) : Rational(1, p);
  r.canonicalize();
  return r;
}

double to_double(const Rational& r) { return r.get_d(); }

}  // namespace latorb
