#include "fekete/mclass.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "fekete/rng.hpp"

namespace fekete {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kAlphaSlack = 1e-12;  // absorbs unit-conversion round-off
}  // namespace

SectorAlpha::SectorAlpha(double radians) : alpha_(radians) {
  if (!(radians >= kPi / 2 - kAlphaSlack && radians <= kPi - 1e-6 + kAlphaSlack))
    throw std::invalid_argument("SectorAlpha: alpha must lie in [pi/2, pi - 1e-6]");
  sin_ = std::sin(alpha_);
  cos_ = std::cos(alpha_);
  lower_ = 1.0 + (alpha_ - kPi) / (2.0 * sin_);
  upper_ = 1.0 + alpha_ / (2.0 * sin_);
}

HerglotzMeasure::HerglotzMeasure(std::vector<double> w, std::vector<double> a)
    : weights(std::move(w)), angles(std::move(a)) {
  if (weights.empty() || weights.size() != angles.size())
    throw std::invalid_argument("HerglotzMeasure: weights/angles size mismatch");
  if (count() > kMaxHerglotzAtoms)
    throw std::invalid_argument("HerglotzMeasure: at most 8 atoms");
  double sum = 0.0;
  for (double lambda : weights) {
    if (!(lambda >= 0.0)) throw std::invalid_argument("HerglotzMeasure: negative weight");
    sum += lambda;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("HerglotzMeasure: weights must sum to 1");
  for (double theta : angles) {
    if (!(theta >= 0.0 && theta < 2.0 * kPi))
      throw std::invalid_argument("HerglotzMeasure: angles must lie in [0, 2pi)");
  }
}

SchwarzSeries::SchwarzSeries(TruncatedSeries w) : w_(std::move(w)) {
  if (w_[0] != Complex(0.0, 0.0))
    throw std::invalid_argument("SchwarzSeries: w(0) must be zero");
}

MembershipGrid MembershipGrid::defaults() {
  MembershipGrid g;
  g.radii = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95};
  g.angle_count = 720;
  return g;
}

TruncatedSeries balpha_coeffs(const SectorAlpha& s, int order) {
  if (order < 1) throw std::invalid_argument("balpha_coeffs: order must be >= 1");
  TruncatedSeries b(order);
  for (int n = 1; n <= order; ++n) {
    const double sign = (n % 2 == 1) ? 1.0 : -1.0;
    b.set(n, Complex(sign * std::sin(n * s.alpha()) / (n * s.sin_alpha()), 0.0));
  }
  return b;
}

Complex balpha_value(const SectorAlpha& s, Complex z) {
  if (std::abs(z) >= 1.0) throw std::invalid_argument("balpha_value: requires |z| < 1");
  const Complex ei = std::polar(1.0, s.alpha());
  const Complex num = Complex(1.0, 0.0) + z * ei;
  const Complex den = Complex(1.0, 0.0) + z * std::conj(ei);
  // num and den have positive real part, so the principal log of the
  // quotient never crosses the branch cut.
  return std::log(num / den) / (Complex(0.0, 2.0) * s.sin_alpha());
}

TruncatedSeries caratheodory_series(const HerglotzMeasure& h, int order) {
  if (order < 1) throw std::invalid_argument("caratheodory_series: order must be >= 1");
  TruncatedSeries p(order);
  p.set(0, Complex(1.0, 0.0));
  std::vector<Complex> kernel(h.angles.size());
  std::vector<Complex> acc(h.angles.size(), Complex(1.0, 0.0));
  for (std::size_t j = 0; j < h.angles.size(); ++j) kernel[j] = std::polar(1.0, h.angles[j]);
  for (int n = 1; n <= order; ++n) {
    Complex pn(0.0, 0.0);
    for (std::size_t j = 0; j < kernel.size(); ++j) {
      acc[j] *= kernel[j];
      pn += h.weights[j] * acc[j];
    }
    p.set(n, 2.0 * pn);
  }
  return p;
}

SchwarzSeries schwarz_from_p(const TruncatedSeries& p) {
  if (std::abs(p[0] - Complex(1.0, 0.0)) > 1e-12)
    throw std::invalid_argument("schwarz_from_p: requires p(0) = 1");
  TruncatedSeries num = p;
  num.set(0, p[0] - Complex(1.0, 0.0));
  TruncatedSeries den = p;
  den.set(0, p[0] + Complex(1.0, 0.0));
  TruncatedSeries w = div(num, den);
  w.set(0, Complex(0.0, 0.0));
  return SchwarzSeries(std::move(w));
}

TruncatedSeries caratheodory_from_schwarz(const SchwarzSeries& w) {
  TruncatedSeries num = w.series();
  num.set(0, Complex(1.0, 0.0));
  TruncatedSeries den = scale(w.series(), Complex(-1.0, 0.0));
  den.set(0, Complex(1.0, 0.0));
  return div(num, den);
}

SchwarzSeries rotate_schwarz(const SchwarzSeries& w, double theta) {
  return SchwarzSeries(rotate_series(w.series(), theta));
}

NormalizedSeries build_member(const SectorAlpha& s, const SchwarzSeries& w, int order) {
  if (order < 1) throw std::invalid_argument("build_member: order must be >= 1");
  TruncatedSeries wn(order);
  for (int j = 1; j <= std::min(order, w.order()); ++j) wn.set(j, w.series()[j]);
  const TruncatedSeries q = compose(balpha_coeffs(s, order), wn);

  std::vector<Complex> a(static_cast<std::size_t>(order) + 1, Complex(0.0, 0.0));
  a[1] = Complex(1.0, 0.0);
  for (int n = 2; n <= order; ++n) {
    Complex sum(0.0, 0.0);
    for (int j = 1; j < n; ++j) sum += q[j] * a[static_cast<std::size_t>(n - j)];
    a[static_cast<std::size_t>(n)] = sum / static_cast<double>(n - 1);
  }
  return NormalizedSeries(TruncatedSeries(std::move(a)));
}

NormalizedSeries member_from_measure(const SectorAlpha& s, const HerglotzMeasure& h, int order) {
  return build_member(s, schwarz_from_p(caratheodory_series(h, order)), order);
}

MembershipReport membership_check(const NormalizedSeries& f, const SectorAlpha& s,
                                  const MembershipGrid& grid, double margin) {
  if (grid.radii.empty()) throw std::invalid_argument("membership_check: empty radius grid");
  if (grid.angle_count < 1) throw std::invalid_argument("membership_check: empty angle grid");
  if (margin < 0.0) throw std::invalid_argument("membership_check: negative margin");
  double rmax = 0.0;
  for (double r : grid.radii) {
    if (!(r > 0.0 && r < 1.0))
      throw std::invalid_argument("membership_check: radii must lie in (0, 1)");
    rmax = std::max(rmax, r);
  }

  const TruncatedSeries& fs = f.series();
  const TruncatedSeries zd = z_derivative(fs);
  const double lo = s.lower() + margin;
  const double hi = s.upper() - margin;

  MembershipReport rep;
  rep.tail = tail_estimate(fs, rmax);
  double worst_clear = std::numeric_limits<double>::infinity();
  for (double r : grid.radii) {
    for (int j = 0; j < grid.angle_count; ++j) {
      const double theta = 2.0 * kPi * j / grid.angle_count;
      const Complex z = std::polar(r, theta);
      const Complex fv = evaluate(fs, z);
      double re;
      if (std::abs(fv) < 1e-280) {
        re = std::numeric_limits<double>::infinity();  // quotient blow-up: reject
      } else {
        re = (evaluate(zd, z) / fv).real();
      }
      const double clear = std::min(re - lo, hi - re);
      if (clear < worst_clear) {
        worst_clear = clear;
        rep.worst_value = re;
        rep.worst_r = r;
        rep.worst_theta = theta;
      }
    }
  }
  rep.clearance = worst_clear;
  rep.accepted = worst_clear >= 0.0;

  // A positive margin is a certification request: the neglected tail must
  // not be able to overturn the accept. Margin 0 is a best-effort grid
  // verdict (Lemma-level generators are exact members by construction).
  if (rep.accepted && margin > 0.0 && rep.tail > margin && rep.tail >= rep.clearance)
    throw TailGuardError("membership_check: truncation tail " + std::to_string(rep.tail) +
                         " exceeds the requested margin certification");
  return rep;
}

NormalizedSeries extremal_f1(const SectorAlpha& s, int order) {
  return build_member(s, SchwarzSeries(TruncatedSeries::identity(order)), order);
}

NormalizedSeries extremal_f2(const SectorAlpha& s, int order) {
  if (order < 2) throw std::invalid_argument("extremal_f2: order must be >= 2");
  return build_member(s, SchwarzSeries(TruncatedSeries::monomial(2, order)), order);
}

NormalizedSeries rotate(const NormalizedSeries& f, double theta) {
  TruncatedSeries out = rotate_series(f.series(), theta);
  out = scale(out, std::polar(1.0, -theta));
  out.set(0, Complex(0.0, 0.0));
  out.set(1, Complex(1.0, 0.0));  // exact: e^{-i theta} * e^{i theta} * 1
  return NormalizedSeries(std::move(out));
}

HerglotzMeasure sample_measure(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 rng = SplitMix64::stream(seed, index);
  const int m = 1 + static_cast<int>(rng.next() % kMaxHerglotzAtoms);
  std::vector<double> angles(static_cast<std::size_t>(m));
  std::vector<double> weights(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    double theta = 2.0 * kPi * rng.next_unit();
    if (theta >= 2.0 * kPi) theta = 0.0;
    angles[static_cast<std::size_t>(j)] = theta;
  }
  double sum = 0.0;
  for (int j = 0; j < m; ++j) {
    // Dirichlet(1) via normalized Exp(1) draws.
    const double e = -std::log1p(-rng.next_unit());
    weights[static_cast<std::size_t>(j)] = e;
    sum += e;
  }
  if (sum <= 0.0) {
    std::fill(weights.begin(), weights.end(), 1.0 / m);
  } else {
    for (double& lambda : weights) lambda /= sum;
  }
  return HerglotzMeasure(std::move(weights), std::move(angles));
}

}  // namespace fekete
