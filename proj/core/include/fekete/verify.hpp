#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "fekete/bounds.hpp"
#include "fekete/mclass.hpp"
#include "fekete/transforms.hpp"

namespace fekete {

/// Cartesian lattice over the closed unit disks |zeta1| <= 1, |zeta2| <= 1
/// with `resolution` points per unit along each real axis (boundary points
/// on the axes included).
struct OracleGrid {
  int resolution = 60;
};

struct OracleResult {
  double max_value = 0.0;      // max over grid and injected witnesses
  double witness_max = 0.0;    // max over injected witnesses alone
  double grid_max = 0.0;       // max over the lattice alone
  Complex arg_zeta1{0.0, 0.0}; // lattice argmax
  Complex arg_zeta2{0.0, 0.0};
  std::string argmax_kind;     // witness label or "grid"
};

/// mu' = (cos a + (2 mu + k - 1)/k) / 2 — the reduction used to fold the
/// root-transform functional onto the Caratheodory coefficient problem.
double mu_prime(const SectorAlpha& s, int k, double mu);

/// Brute-force maximization of |p2 - mu p1^2| over the attainable pairs
/// p1 = 2 zeta1, p2 = 2 zeta1^2 + 2 (1 - |zeta1|^2) zeta2, with the sharp
/// witness functions injected as exact candidates.
OracleResult oracle_max_p_functional(double mu, const OracleGrid& grid);

/// The same search for (1/(4k)) |p2 - mu' p1^2|, the root-transform
/// functional over class members.
OracleResult oracle_max_fs(const SectorAlpha& s, int k, double mu, const OracleGrid& grid);

struct VerificationReport {
  double alpha = 0.0;
  int k = 1;
  double mu = 0.0;
  double bound = 0.0;
  double max_observed = 0.0;
  std::string argmax;
  long violations = 0;
  double sharpness_gap = 0.0;  // bound - max_observed
};

inline constexpr double kViolationTolerance = 1e-9;

/// Draws n_samples functionals (sample 0 the identity, samples 1 and 2 the
/// extremals, the rest Herglotz members from stream (seed, i)), evaluates
/// |b_{2k+1} - mu b_{k+1}^2| and counts violations of thm31_bound + 1e-9.
VerificationReport verify_on_samples(const SectorAlpha& s, int k, double mu, int n_samples,
                                     std::uint64_t seed);

/// bound - max functional over {f1, f2 and 16 rotations of each}.
double sharpness_gap(const SectorAlpha& s, int k, double mu);

/// A bi-univalent candidate pair: f and its inverse, each with its strip
/// membership report.
struct SigmaPairWitness {
  NormalizedSeries f;
  NormalizedSeries g;
  MembershipReport f_report;
  MembershipReport g_report;

  bool accepted() const { return f_report.accepted && g_report.accepted; }
};

SigmaPairWitness check_sigma_pair(const NormalizedSeries& f, const SectorAlpha& s);

/// Desk check of the bi-univalent bounds on the perturbation families
/// f = z + eps z^2 and f = z + eps z^3: for every accepted pair asserts
/// |a2| <= min(1, sqrt(2/(2+cos a))) and |a3 - mu a2^2| <= thm41_fs_bound.
/// max_observed reports the largest functional/bound ratio.
VerificationReport verify_thm41(const SectorAlpha& s, std::span<const double> eps_grid,
                                std::span<const double> mu_grid);

struct SigmaDerivation {
  Complex a2_squared;  // (k2 + l2) / (2 (2 + cos a))
  Complex a3;          // a2^2 + (k2 - l2)/8
};

struct DerivationInconsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Evaluates the closed forms above from Caratheodory coefficients
/// (l1 = -k1 imposed). When the input k1 satisfies
/// k1^2 = (k2 + l2)/(2 (1 + cos(a)/2)), the identity 8 a2^2 = k1^2 + l1^2
/// is cross-checked; disagreement beyond 1e-10 raises
/// DerivationInconsistencyError.
SigmaDerivation verify_sigma_derivation(Complex k1, Complex k2, Complex l2, const SectorAlpha& s);

}  // namespace fekete
