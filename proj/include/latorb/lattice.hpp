#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "latorb/qseries.hpp"

namespace latorb::lattice {

using qseries::Exponent;
using qseries::PuiseuxSeries;

using Gram = std::vector<std::vector<std::int64_t>>;
using LatticeVector = std::vector<std::int64_t>;
using RationalVector = std::vector<Rational>;

// Even positive-definite lattice of rank 8l with sqrt(2)L* even, presented by
// an integer Gram matrix in a fixed basis. Construction goes through
// validate(), which checks every hypothesis exactly and names the violated
// one on failure.
class EvenLattice {
 public:
  static constexpr std::uint64_t kDefaultVisitBudget = 600'000'000;
  // Above this estimated vector count theta evaluation switches away from
  // direct enumeration (see theta_with_insertion).
  static constexpr double kEnumerationAutoThreshold = 8.0e7;

  static EvenLattice validate(const Gram& gram, std::string name = {});

  const std::string& name() const { return name_; }
  int rank() const { return rank_; }
  int l() const { return rank_ / 8; }
  const Gram& gram() const { return gram_; }
  const Integer& determinant() const { return det_; }
  bool unimodular() const { return det_ == 1; }

  Rational pairing(const RationalVector& a, const RationalVector& b) const;
  Rational pairing_lattice(const RationalVector& a,
                           const LatticeVector& b) const;
  std::int64_t norm(const LatticeVector& v) const;
  bool in_2L(const LatticeVector& alpha) const;

  // Streams every lattice vector of norm <= max_norm exactly once (both v
  // and -v appear; zero once). Norm membership is rechecked in exact integer
  // arithmetic regardless of floating bounds.
  void for_each_vector(
      std::int64_t max_norm,
      const std::function<void(const std::vector<std::int32_t>&,
                               std::int64_t)>& visit,
      std::uint64_t max_visits = kDefaultVisitBudget) const;

  // counts[n] = #{v : <v,v> = n} for 0 <= n <= max_norm.
  std::vector<std::int64_t> shell_sizes(
      std::int64_t max_norm,
      std::uint64_t max_visits = kDefaultVisitBudget) const;

  // sum_alpha prod_j <v_j, alpha> q^{<alpha,alpha>/2} through q^max_grade,
  // by direct enumeration.
  PuiseuxSeries theta_by_enumeration(
      const std::vector<RationalVector>& insertions, std::int64_t max_grade,
      std::uint64_t max_visits = kDefaultVisitBudget) const;

  // Same series, with the evaluation route chosen by workload: enumeration
  // up to kEnumerationAutoThreshold estimated vectors; beyond that, for
  // unimodular lattices and at most quadratic insertions, the expansion is
  // completed through the weight-k/2 modular-form space generated by
  // E4/E6 monomials (the initial coefficients still come from enumeration).
  PuiseuxSeries theta_with_insertion(
      const std::vector<RationalVector>& insertions,
      std::int64_t max_grade) const;

  // Estimated number of lattice vectors of norm <= max_norm (ball volume).
  double estimate_vector_count(std::int64_t max_norm) const;

 private:
  EvenLattice() = default;

  PuiseuxSeries theta_modular_plain(std::int64_t max_grade) const;
  PuiseuxSeries theta_modular_degree2(const RationalVector& v,
                                      const RationalVector& w,
                                      std::int64_t max_grade) const;

  std::string name_;
  Gram gram_;
  int rank_ = 0;
  Integer det_;
  std::vector<std::vector<Rational>> inverse_;
  // Fincke-Pohst data: diag[i] and mu[i][j] (j > i) with
  // Q(x) = sum_i diag[i] (x_i + sum_{j>i} mu[i][j] x_j)^2.
  std::vector<double> fp_diag_;
  std::vector<std::vector<double>> fp_mu_;
};

}  // namespace latorb::lattice
