#include "debruijn/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace debruijn {

namespace {

Real eval(const std::vector<Real>& c, Real z) {
  Real v = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * z + *it;
  return v;
}

Real eval_derivative(const std::vector<Real>& c, Real z) {
  Real v = 0;
  for (std::size_t k = c.size(); k-- > 1;) v = v * z + static_cast<Real>(k) * c[k];
  return v;
}

const Real kSqrtPi = std::sqrt(std::numbers::pi_v<Real>);

}  // namespace

Real polynomial_root(const std::vector<Real>& c, Real lo, Real hi) {
  if (c.empty()) throw DomainError("polynomial_root: no coefficients");
  if (!(lo <= hi)) throw DomainError("polynomial_root: bracket must satisfy lo <= hi");
  Real flo = eval(c, lo);
  if (flo == 0) return lo;
  if (eval(c, hi) == 0) return hi;
  if ((flo < 0) == (eval(c, hi) < 0)) throw DomainError("polynomial_root: no sign change on the bracket");
  for (int i = 0; i < 80; ++i) {
    const Real mid = (lo + hi) / 2;
    const Real fm = eval(c, mid);
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  Real z = (lo + hi) / 2;
  for (int i = 0; i < 3; ++i) {
    const Real d = eval_derivative(c, z);
    if (d == 0) break;
    z -= eval(c, z) / d;
  }
  return z;
}

Real dominant_singularity_plain() {
  static const Real rho = polynomial_root({1, -3, -1, -1}, 0, 1);
  return rho;
}

Real dominant_singularity_model_c() {
  static const Real rho = polynomial_root({1, -7, 3, -1}, 0, 0.5L);
  return rho;
}

Real q_at_rho() {
  // rho - z divides 1 - 3z - z^2 - z^3 with cofactor z^2 + (1 + rho) z + 3 + rho + rho^2.
  const Real r = dominant_singularity_plain();
  return r * r + (1 + r) * r + 3 + r + r * r;
}

Real growth_constant_plain() {
  const Real r = dominant_singularity_plain();
  // Gamma(-1/2) = -2 sqrt(pi).
  return std::sqrt(r * q_at_rho() / (1 - r)) / (4 * r * kSqrtPi);
}

Real growth_constant_hnf() {
  const Real r = dominant_singularity_plain();
  return std::sqrt(r * q_at_rho() / (1 - r)) / (4 * (1 - r) * kSqrtPi);
}

AsymptoticProfile plain_profile() {
  const Real r = dominant_singularity_plain();
  return {r, 1 / r, growth_constant_plain()};
}

AsymptoticProfile hnf_profile() {
  const Real r = dominant_singularity_plain();
  return {r, 1 / r, growth_constant_hnf()};
}

Real density(DensityClass cls) {
  const Real r = dominant_singularity_plain();
  return cls == DensityClass::NeutralHeadNormal ? r : r / (1 - r);
}

std::pair<Real, Real> closed_density_bounds() {
  return {kClosedLowerRaw / kPlainConstantRounded, kClosedUpperRaw / kPlainConstantRounded};
}

double log_count(const BigNat& x) {
  if (x <= 0) throw DomainError("log_count: argument must be positive");
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, x.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::numbers::ln2;
}

double empirical_constant(std::uint64_t n, CountClass cls) {
  if (cls != CountClass::Plain && cls != CountClass::HeadNormal)
    throw DomainError("empirical_constant: only plain and hnf counts have a profile");
  if (n == 0) throw DomainError("empirical_constant: n must be positive");
  const auto& a = (*cached_table(cls, n))[n];
  const double nd = static_cast<double>(n);
  return std::exp(log_count(a) + nd * std::log(static_cast<double>(dominant_singularity_plain())) + 1.5 * std::log(nd));
}

double exact_density(std::uint64_t n, CountClass cls, std::uint64_t param) {
  const BigNat& plain = (*cached_table(CountClass::Plain, n))[n];
  if (plain == 0) throw DomainError("exact_density: no terms of size 0");
  mpq_class q((*cached_table(cls, n, param))[n], plain);
  q.canonicalize();
  return q.get_d();
}

double containment_ratio(std::uint64_t n, std::uint64_t p) { return exact_density(n, CountClass::Containing, p); }

double growth_ratio(std::uint64_t n) {
  if (n < 2) throw DomainError("growth_ratio: n must be at least 2");
  const auto t = cached_table(CountClass::Plain, n);
  mpq_class q((*t)[n], (*t)[n - 1]);
  q.canonicalize();
  return q.get_d();
}

}  // namespace debruijn
