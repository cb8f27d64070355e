#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "fekete/series.hpp"

namespace fekete {

/// Sector parameter alpha in [pi/2, pi - 1e-6] together with the induced
/// strip endpoints for Re{z f'(z)/f(z)}:
///   lower = 1 + (alpha - pi)/(2 sin alpha),  upper = 1 + alpha/(2 sin alpha).
class SectorAlpha {
 public:
  explicit SectorAlpha(double radians);

  double alpha() const { return alpha_; }
  double sin_alpha() const { return sin_; }
  double cos_alpha() const { return cos_; }
  double lower() const { return lower_; }
  double upper() const { return upper_; }

 private:
  double alpha_, sin_, cos_, lower_, upper_;
};

inline constexpr int kMaxHerglotzAtoms = 8;

/// Finite convex combination of boundary kernels (1+z e^{i theta})/(1-z e^{i theta});
/// the sampling space for Caratheodory functions.
struct HerglotzMeasure {
  std::vector<double> weights;  // nonnegative, sum to 1 within 1e-12
  std::vector<double> angles;   // in [0, 2pi)

  HerglotzMeasure(std::vector<double> w, std::vector<double> a);
  int count() const { return static_cast<int>(weights.size()); }
};

/// Series of a Schwarz function: w(0) = 0.
class SchwarzSeries {
 public:
  explicit SchwarzSeries(TruncatedSeries w);
  const TruncatedSeries& series() const { return w_; }
  int order() const { return w_.order(); }

 private:
  TruncatedSeries w_;
};

struct MembershipGrid {
  std::vector<double> radii;  // each in (0, 1)
  int angle_count = 720;

  static MembershipGrid defaults();
};

struct MembershipReport {
  bool accepted = false;
  double worst_value = 0.0;  // Re{z f'/f} at the tightest grid point
  double worst_r = 0.0;
  double worst_theta = 0.0;
  double clearance = 0.0;  // signed margin-adjusted distance inside the strip
  double tail = 0.0;       // truncation tail estimate at the largest radius
};

/// Raised when a requested positive certification margin cannot be backed
/// by the truncated data (tail estimate reaches the observed clearance).
struct TailGuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Coefficients A_n = (-1)^{n-1} sin(n alpha) / (n sin alpha) of the strip
/// map B_alpha; A_0 = 0.
TruncatedSeries balpha_coeffs(const SectorAlpha& s, int order);

/// B_alpha(z) = log((1 + z e^{i alpha})/(1 + z e^{-i alpha})) / (2 i sin alpha),
/// principal branch. Requires |z| < 1.
Complex balpha_value(const SectorAlpha& s, Complex z);

/// p(z) = 1 + sum_n 2 (sum_j lambda_j e^{i n theta_j}) z^n.
TruncatedSeries caratheodory_series(const HerglotzMeasure& h, int order);

/// w = (p - 1)/(p + 1); requires p(0) = 1.
SchwarzSeries schwarz_from_p(const TruncatedSeries& p);

/// p = (1 + w)/(1 - w).
TruncatedSeries caratheodory_from_schwarz(const SchwarzSeries& w);

SchwarzSeries rotate_schwarz(const SchwarzSeries& w, double theta);

/// The unique normalized solution of z f'/f = 1 + B_alpha(w(z)):
/// (n-1) a_n = sum_{j=1}^{n-1} q_j a_{n-j} with q = B_alpha o w.
NormalizedSeries build_member(const SectorAlpha& s, const SchwarzSeries& w, int order);

NormalizedSeries member_from_measure(const SectorAlpha& s, const HerglotzMeasure& h, int order);

/// Grid test of the two-sided strip condition on Re{z f'/f}. Accepts iff
/// every grid value lies in [lower + margin, upper - margin]. Throws
/// std::invalid_argument for radii outside (0,1), and TailGuardError when
/// margin > 0 cannot be certified against the truncation tail.
MembershipReport membership_check(const NormalizedSeries& f, const SectorAlpha& s,
                                  const MembershipGrid& grid, double margin);

/// Extremal driven by w(z) = z: expansion z + z^2 + (1-cos a)/2 z^3 + ...
NormalizedSeries extremal_f1(const SectorAlpha& s, int order);

/// Extremal driven by w(z) = z^2: expansion z + z^3/2 + ... (odd terms only).
NormalizedSeries extremal_f2(const SectorAlpha& s, int order);

/// e^{-i theta} f(e^{i theta} z): a_n -> e^{i(n-1) theta} a_n.
NormalizedSeries rotate(const NormalizedSeries& f, double theta);

/// Deterministic measure draw for stream (seed, index): atom count uniform
/// on 1..8, angles i.i.d. uniform, weights symmetric Dirichlet(1).
HerglotzMeasure sample_measure(std::uint64_t seed, std::uint64_t index);

}  // namespace fekete
