#pragma once

// Singularities, growth constants and densities, plus finite-n checks
// against exact counts.

#include <cstdint>
#include <utility>
#include <vector>

#include "debruijn/counting.hpp"

namespace debruijn {

using Real = long double;

/// a_n ~ constant * growth^n * n^(exponent_num / exponent_den).
struct AsymptoticProfile {
  Real rho;
  Real growth;
  Real constant;
  int exponent_num = -3;
  int exponent_den = 2;
};

/// Root in [lo, hi] of the polynomial with coefficients c[0] + c[1] z + ...;
/// the endpoints must bracket a sign change. Bisection, then Newton polish.
Real polynomial_root(const std::vector<Real>& c, Real lo, Real hi);

/// Smallest root of 1 - 3z - z^2 - z^3.
Real dominant_singularity_plain();
/// Smallest root of 1 - 7z + 3z^2 - z^3 (constructor weights 1,1,1,0).
Real dominant_singularity_model_c();
/// Cofactor Q with 1 - 3z - z^2 - z^3 = (rho - z) Q(z), evaluated at rho.
Real q_at_rho();
Real growth_constant_plain();
Real growth_constant_hnf();
AsymptoticProfile plain_profile();
AsymptoticProfile hnf_profile();

enum class DensityClass { NeutralHeadNormal, HeadNormal };
Real density(DensityClass cls);

inline constexpr Real kClosedLowerRaw = 0.07790995266L;
inline constexpr Real kClosedUpperRaw = 0.07790998229L;
/// The plain-term constant to the five digits the bounds were normalised with.
inline constexpr Real kPlainConstantRounded = 0.60676L;
/// Lower and upper asymptotic density of closed terms: the raw bounds over
/// kPlainConstantRounded.
std::pair<Real, Real> closed_density_bounds();

/// Natural logarithm of a positive big integer.
double log_count(const BigNat& x);
/// exp(ln a_n + n ln rho + 1.5 ln n) for plain or head normal counts.
double empirical_constant(std::uint64_t n, CountClass cls);
/// a_n / plain_n in exact arithmetic, rounded once.
double exact_density(std::uint64_t n, CountClass cls, std::uint64_t param = 0);
/// Terms of size n containing a fixed non-index subterm of size p, over all terms.
double containment_ratio(std::uint64_t n, std::uint64_t p);
/// plain_n / plain_{n-1}.
double growth_ratio(std::uint64_t n);

}  // namespace debruijn
