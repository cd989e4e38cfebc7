#include "latorb/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "latorb/errors.hpp"
#include "latorb/modforms.hpp"

namespace latorb::lattice {

namespace {

constexpr Exponent kScale = qseries::kExponentScale;

Exponent prec_for_grade(std::int64_t g) { return kScale * g + 1; }

// Determinant of the leading s x s block, fraction-free (Bareiss).
Integer leading_minor(const Gram& g, int s) {
  std::vector<std::vector<Integer>> a(s, std::vector<Integer>(s));
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) a[i][j] = g[i][j];
  Integer prev = 1;
  for (int p = 0; p < s - 1; ++p) {
    if (a[p][p] == 0) {
      int r = p + 1;
      while (r < s && a[r][p] == 0) ++r;
      if (r == s) return 0;
      // swap then negate the swapped-in row: determinant unchanged
      std::swap(a[p], a[r]);
      for (int j = 0; j < s; ++j) a[p][j] = -a[p][j];
    }
    for (int i = p + 1; i < s; ++i) {
      for (int j = p + 1; j < s; ++j) {
        a[i][j] = (a[p][p] * a[i][j] - a[i][p] * a[p][j]) / prev;
      }
      a[i][p] = 0;
    }
    prev = a[p][p];
  }
  return a[s - 1][s - 1];
}

std::vector<std::vector<Rational>> exact_inverse(const Gram& g, int n) {
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = g[i][j];
    a[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r) {
      if (a[r][col] != 0) { piv = r; break; }
    }
    if (piv < 0) fail(Errc::Internal, "singular matrix in exact_inverse");
    std::swap(a[col], a[piv]);
    Rational d = a[col][col];
    for (int j = 0; j < 2 * n; ++j) a[col][j] /= d;
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (int j = 0; j < 2 * n; ++j) a[r][j] -= f * a[col][j];
    }
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

// Fincke-Pohst preprocessing: Q(x) = sum_i d_i (x_i + sum_{j>i} mu_ij x_j)^2.
void cholesky_fp(const Gram& g, int n, std::vector<double>& diag,
                 std::vector<std::vector<double>>& mu) {
  std::vector<std::vector<double>> q(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) q[i][j] = static_cast<double>(g[i][j]);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      q[j][i] = q[i][j];
      q[i][j] = q[i][j] / q[i][i];
    }
    for (int r = i + 1; r < n; ++r) {
      for (int c = r; c < n; ++c) q[r][c] -= q[r][i] * q[i][c];
    }
  }
  diag.assign(n, 0.0);
  mu.assign(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    diag[i] = q[i][i];
    for (int j = i + 1; j < n; ++j) mu[i][j] = q[i][j];
  }
}

// Core depth-first enumeration over half the nonzero vectors (the first
// nonzero coordinate from the top level is positive); the visitor receives
// each vector with its exact norm. Returns false when the budget runs out.
template <typename Visitor>
bool enumerate_half(const Gram& gram, int n, const std::vector<double>& diag,
                    const std::vector<std::vector<double>>& mu,
                    std::int64_t max_norm, std::uint64_t max_visits,
                    Visitor&& visit) {
  if (max_norm < 0) return true;
  const double bound = static_cast<double>(max_norm) + 0.5;
  std::vector<std::int32_t> x(n, 0);
  std::vector<double> t(n + 1, 0.0);  // t[i+1] = remaining budget at level i
  std::vector<double> u(n, 0.0);
  // exact partial data
  std::vector<std::int64_t> pnorm(n + 1, 0);
  std::vector<std::int64_t> cross(n, 0);
  std::uint64_t visits = 0;

  t[n] = bound;
  // iterative DFS
  std::vector<std::int32_t> lo(n), hi(n);
  int level = n - 1;
  bool descending = true;
  while (level < n) {
    if (level < 0) {
      // leaf: exact recheck
      if (pnorm[0] <= max_norm) {
        visit(x, pnorm[0]);
      }
      ++level;
      descending = false;
      continue;
    }
    if (descending) {
      // compute interval at this level
      double ui = 0.0;
      for (int j = level + 1; j < n; ++j) ui += mu[level][j] * x[j];
      u[level] = ui;
      // The +0.5 margin on the root bound dominates floating rounding by many
      // orders of magnitude for integer Gram matrices at desk scale; the tiny
      // inflation below guards the sqrt itself. Exact leaf rechecks make
      // false accepts impossible either way.
      double rad = t[level + 1] / diag[level];
      if (rad < 0) rad = 0;
      double z = std::sqrt(rad) * (1.0 + 1e-12) + 1e-9;
      std::int32_t l = static_cast<std::int32_t>(std::floor(z - ui));
      std::int32_t f = static_cast<std::int32_t>(std::ceil(-z - ui));
      bool all_zero_above = true;
      for (int j = level + 1; j < n; ++j) {
        if (x[j] != 0) { all_zero_above = false; break; }
      }
      if (all_zero_above && f < 0) f = 0;
      lo[level] = f;
      hi[level] = l;
      x[level] = f - 1;  // advanced below
      descending = false;
    }
    // advance candidate at this level
    if (x[level] >= hi[level]) {
      x[level] = 0;
      ++level;
      descending = false;
      continue;
    }
    ++x[level];
    if (++visits > max_visits) return false;
    // exact partials
    std::int64_t s = 0;
    for (int j = level + 1; j < n; ++j) s += gram[level][j] * x[j];
    cross[level] = s;
    pnorm[level] = pnorm[level + 1] +
                   static_cast<std::int64_t>(x[level]) * x[level] *
                       gram[level][level] +
                   2 * static_cast<std::int64_t>(x[level]) * s;
    double dx = static_cast<double>(x[level]) + u[level];
    double rem = t[level + 1] - diag[level] * dx * dx;
    if (rem < -1e-7 * (bound + 1.0)) {
      continue;
    }
    t[level] = std::max(rem, 0.0);
    --level;
    descending = true;
  }
  return true;
}

struct InsertionData {
  std::vector<std::vector<std::int64_t>> scaled;  // G*v scaled to integers
  Rational denom = 1;                             // product of scalings
};

InsertionData prepare_insertions(const Gram& g, int n,
                                 const std::vector<RationalVector>& dirs) {
  InsertionData out;
  for (const auto& v : dirs) {
    if (static_cast<int>(v.size()) != n) {
      fail(Errc::RankMismatch, "insertion direction has wrong rank");
    }
    std::vector<Rational> gv(n, Rational(0));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (v[j] != 0) gv[i] += Rational(g[i][j]) * v[j];
      }
    }
    Integer den = 1;
    for (auto& c : gv) den = lcm(den, Integer(c.get_den()));
    std::vector<std::int64_t> row(n);
    for (int i = 0; i < n; ++i) {
      Rational scaled = gv[i] * Rational(den);
      scaled.canonicalize();
      if (!scaled.get_num().fits_slong_p()) {
        fail(Errc::Internal, "insertion direction entries too large");
      }
      row[i] = static_cast<std::int64_t>(scaled.get_num().get_si());
    }
    out.scaled.push_back(std::move(row));
    out.denom *= Rational(den);
  }
  return out;
}

}  // namespace

EvenLattice EvenLattice::validate(const Gram& gram, std::string name) {
  const int n = static_cast<int>(gram.size());
  for (const auto& row : gram) {
    if (static_cast<int>(row.size()) != n) {
      fail(Errc::NotSymmetric, "Gram matrix is not square");
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (gram[i][j] != gram[j][i]) {
        fail(Errc::NotSymmetric, "gram[" + std::to_string(i) + "][" +
                                     std::to_string(j) + "] != transpose");
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    if (gram[i][i] % 2 != 0) {
      fail(Errc::NotEven,
           "diagonal entry at " + std::to_string(i) + " is odd");
    }
  }
  if (n == 0 || n % 8 != 0) {
    fail(Errc::RankNotMultipleOf8, "rank " + std::to_string(n));
  }
  for (int s = 1; s <= n; ++s) {
    if (leading_minor(gram, s) <= 0) {
      fail(Errc::NotPositiveDefinite,
           "leading principal minor of size " + std::to_string(s) +
               " is not positive");
    }
  }
  EvenLattice L;
  L.name_ = std::move(name);
  L.gram_ = gram;
  L.rank_ = n;
  L.det_ = leading_minor(gram, n);
  L.inverse_ = exact_inverse(gram, n);
  // sqrt(2)L* even <=> 2*gram^{-1} integral with even diagonal
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Rational e = 2 * L.inverse_[i][j];
      e.canonicalize();
      if (e.get_den() != 1) {
        fail(Errc::DualConditionFails,
             "2*gram^{-1} is not integral at (" + std::to_string(i) + "," +
                 std::to_string(j) + ")");
      }
      if (i == j && mpz_odd_p(e.get_num().get_mpz_t())) {
        fail(Errc::DualConditionFails,
             "2*gram^{-1} has odd diagonal at " + std::to_string(i));
      }
    }
  }
  cholesky_fp(gram, n, L.fp_diag_, L.fp_mu_);
  return L;
}

Rational EvenLattice::pairing(const RationalVector& a,
                              const RationalVector& b) const {
  if (static_cast<int>(a.size()) != rank_ ||
      static_cast<int>(b.size()) != rank_) {
    fail(Errc::RankMismatch, "pairing arguments must match the lattice rank");
  }
  Rational s(0);
  for (int i = 0; i < rank_; ++i) {
    if (a[i] == 0) continue;
    Rational row(0);
    for (int j = 0; j < rank_; ++j) {
      if (b[j] != 0) row += Rational(gram_[i][j]) * b[j];
    }
    s += a[i] * row;
  }
  return s;
}

Rational EvenLattice::pairing_lattice(const RationalVector& a,
                                      const LatticeVector& b) const {
  RationalVector br(b.begin(), b.end());
  return pairing(a, br);
}

std::int64_t EvenLattice::norm(const LatticeVector& v) const {
  if (static_cast<int>(v.size()) != rank_) {
    fail(Errc::RankMismatch, "vector rank mismatch");
  }
  std::int64_t s = 0;
  for (int i = 0; i < rank_; ++i) {
    for (int j = 0; j < rank_; ++j) s += v[i] * gram_[i][j] * v[j];
  }
  return s;
}

bool EvenLattice::in_2L(const LatticeVector& alpha) const {
  if (static_cast<int>(alpha.size()) != rank_) {
    fail(Errc::RankMismatch, "vector rank mismatch");
  }
  for (auto c : alpha) {
    if (c % 2 != 0) return false;
  }
  return true;
}

double EvenLattice::estimate_vector_count(std::int64_t max_norm) const {
  if (max_norm < 0) return 0.0;
  const double k = rank_;
  double log_vol = (k / 2) * std::log(M_PI) - std::lgamma(k / 2 + 1) +
                   (k / 2) * std::log(static_cast<double>(max_norm)) -
                   0.5 * std::log(det_.get_d());
  return std::exp(log_vol);
}

void EvenLattice::for_each_vector(
    std::int64_t max_norm,
    const std::function<void(const std::vector<std::int32_t>&, std::int64_t)>&
        visit,
    std::uint64_t max_visits) const {
  std::vector<std::int32_t> neg(rank_);
  bool ok = enumerate_half(
      gram_, rank_, fp_diag_, fp_mu_, max_norm, max_visits,
      [&](const std::vector<std::int32_t>& x, std::int64_t nrm) {
        bool zero = std::all_of(x.begin(), x.end(),
                                [](std::int32_t c) { return c == 0; });
        visit(x, nrm);
        if (!zero) {
          for (int i = 0; i < rank_; ++i) neg[i] = -x[i];
          visit(neg, nrm);
        }
      });
  if (!ok) {
    fail(Errc::EnumerationTooLarge,
         "vector enumeration exceeded the visit budget");
  }
}

std::vector<std::int64_t> EvenLattice::shell_sizes(
    std::int64_t max_norm, std::uint64_t max_visits) const {
  std::vector<std::int64_t> counts(max_norm + 1, 0);
  bool ok = enumerate_half(gram_, rank_, fp_diag_, fp_mu_, max_norm,
                           max_visits,
                           [&](const std::vector<std::int32_t>& x,
                               std::int64_t nrm) {
                             bool zero = std::all_of(
                                 x.begin(), x.end(),
                                 [](std::int32_t c) { return c == 0; });
                             counts[nrm] += zero ? 1 : 2;
                           });
  if (!ok) {
    fail(Errc::EnumerationTooLarge,
         "shell enumeration exceeded the visit budget");
  }
  return counts;
}

PuiseuxSeries EvenLattice::theta_by_enumeration(
    const std::vector<RationalVector>& insertions, std::int64_t max_grade,
    std::uint64_t max_visits) const {
  const Exponent prec = prec_for_grade(max_grade);
  const std::int64_t max_norm = 2 * max_grade;
  if (insertions.empty()) {
    auto counts = shell_sizes(max_norm, max_visits);
    PuiseuxSeries::TermMap t;
    for (std::int64_t nrm = 0; nrm <= max_norm; ++nrm) {
      if (counts[nrm] != 0 && nrm % 2 == 0) t[24 * nrm] = counts[nrm];
    }
    return PuiseuxSeries::from_terms(std::move(t), 0, prec);
  }

  InsertionData ins = prepare_insertions(gram_, rank_, insertions);
  const size_t q = ins.scaled.size();
  std::vector<Integer> acc(max_norm + 1, Integer(0));
  bool ok = enumerate_half(
      gram_, rank_, fp_diag_, fp_mu_, max_norm, max_visits,
      [&](const std::vector<std::int32_t>& x, std::int64_t nrm) {
        std::int64_t prod = 1;
        for (size_t a = 0; a < q; ++a) {
          std::int64_t dot = 0;
          const auto& row = ins.scaled[a];
          for (int i = 0; i < rank_; ++i) dot += row[i] * x[i];
          prod *= dot;
          if (prod == 0) return;
        }
        // -x contributes (-1)^q prod; for odd q the pair cancels
        if (q % 2 == 0) {
          bool zero = std::all_of(x.begin(), x.end(),
                                  [](std::int32_t c) { return c == 0; });
          acc[nrm] += zero ? Integer(prod) : Integer(2 * prod);
        }
      });
  if (!ok) {
    fail(Errc::EnumerationTooLarge,
         "theta enumeration exceeded the visit budget");
  }
  PuiseuxSeries::TermMap t;
  Rational inv_den = 1 / ins.denom;
  for (std::int64_t nrm = 0; nrm <= max_norm; ++nrm) {
    if (acc[nrm] != 0) t[24 * nrm] = Rational(acc[nrm]) * inv_den;
  }
  return PuiseuxSeries::from_terms(std::move(t), 0, prec);
}

PuiseuxSeries EvenLattice::theta_modular_plain(std::int64_t max_grade) const {
  const Exponent prec = prec_for_grade(max_grade);
  const int w = rank_ / 2;
  // monomial basis E4^a E6^b of M_w
  std::vector<std::pair<int, int>> basis;
  for (int b = 0; 6 * b <= w; ++b) {
    if ((w - 6 * b) % 4 == 0) basis.emplace_back((w - 6 * b) / 4, b);
  }
  const int d = static_cast<int>(basis.size());
  auto e4 = modforms::eisenstein_normalized(4, prec);
  auto e6 = modforms::eisenstein_normalized(6, prec);
  std::vector<PuiseuxSeries> series;
  series.reserve(d);
  for (auto [a, b] : basis) series.push_back(e4.pow(a) * e6.pow(b));

  auto counts = shell_sizes(2 * (d - 1));
  // solve sum_i c_i series_i[q^j] = r(2j), j = 0..d-1
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d + 1));
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) m[j][i] = series[i].at_grade(j);
    m[j][d] = counts[2 * j];
  }
  for (int col = 0; col < d; ++col) {
    int piv = col;
    while (piv < d && m[piv][col] == 0) ++piv;
    if (piv == d) fail(Errc::Internal, "singular theta basis system");
    std::swap(m[col], m[piv]);
    for (int r = 0; r < d; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (int c = col; c <= d; ++c) m[r][c] -= f * m[col][c];
    }
  }
  PuiseuxSeries out = PuiseuxSeries::zero(prec);
  for (int i = 0; i < d; ++i) out = out + (m[i][d] / m[i][i]) * series[i];
  return out;
}

PuiseuxSeries EvenLattice::theta_modular_degree2(
    const RationalVector& v, const RationalVector& w,
    std::int64_t max_grade) const {
  const Exponent prec = prec_for_grade(max_grade);
  // <v,alpha><w,alpha> = H(alpha) + (<v,w>/k)<alpha,alpha> with H harmonic;
  // theta_H lies in the cusp space S_{k/2+2}.
  PuiseuxSeries theta0 = theta_modular_plain(max_grade);
  Rational trace_coef = pairing(v, w) / rank_;
  PuiseuxSeries trace_part =
      (Rational(2) * trace_coef) * theta0.q_derivative();

  const int wt = rank_ / 2 + 2;
  std::vector<std::pair<int, int>> cusp_basis;
  if (wt >= 12) {
    for (int b = 0; 6 * b <= wt - 12; ++b) {
      if ((wt - 12 - 6 * b) % 4 == 0) cusp_basis.emplace_back((wt - 12 - 6 * b) / 4, b);
    }
  }
  const int d = static_cast<int>(cusp_basis.size());
  if (d == 0) return trace_part;

  auto e4 = modforms::eisenstein_normalized(4, prec);
  auto e6 = modforms::eisenstein_normalized(6, prec);
  auto delta = modforms::dedekind_eta(prec + 2 * kScale).pow(24).truncated(prec);
  std::vector<PuiseuxSeries> series;
  for (auto [a, b] : cusp_basis) series.push_back(delta * e4.pow(a) * e6.pow(b));

  // determining coefficients q^1..q^d from enumeration
  PuiseuxSeries low = theta_by_enumeration({v, w}, d);
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d + 1));
  for (int j = 1; j <= d; ++j) {
    for (int i = 0; i < d; ++i) m[j - 1][i] = series[i].at_grade(j);
    m[j - 1][d] = low.at_grade(j) - trace_part.at_grade(j);
  }
  for (int col = 0; col < d; ++col) {
    int piv = col;
    while (piv < d && m[piv][col] == 0) ++piv;
    if (piv == d) fail(Errc::Internal, "singular cusp basis system");
    std::swap(m[col], m[piv]);
    for (int r = 0; r < d; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (int c = col; c <= d; ++c) m[r][c] -= f * m[col][c];
    }
  }
  PuiseuxSeries out = trace_part;
  for (int i = 0; i < d; ++i) out = out + (m[i][d] / m[i][i]) * series[i];
  return out;
}

PuiseuxSeries EvenLattice::theta_with_insertion(
    const std::vector<RationalVector>& insertions,
    std::int64_t max_grade) const {
  double est = estimate_vector_count(2 * max_grade);
  if (est <= kEnumerationAutoThreshold) {
    return theta_by_enumeration(insertions, max_grade);
  }
  if (insertions.size() % 2 != 0) {
    // alpha <-> -alpha cancellation, exact at any precision
    return PuiseuxSeries::zero(prec_for_grade(max_grade));
  }
  if (!unimodular() || insertions.size() > 2) {
    fail(Errc::EnumerationTooLarge,
         "theta workload too large and no modular completion applies "
         "(estimated " + std::to_string(est) + " vectors)");
  }
  if (insertions.empty()) return theta_modular_plain(max_grade);
  return theta_modular_degree2(insertions[0], insertions[1], max_grade);
}

}  // namespace latorb::lattice
