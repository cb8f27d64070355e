#include "fekete/transforms.hpp"

#include <cmath>
#include <stdexcept>

namespace fekete {

namespace {

void check_root_structure(const RootTransformSeries& rt) {
  const TruncatedSeries& F = rt.series;
  if (std::abs(F[1] - Complex(1.0, 0.0)) > 1e-12)
    throw std::logic_error("kth_root_transform: leading coefficient drifted from 1");
  for (int n = 0; n <= F.order(); ++n) {
    if (n % rt.k == 1 % rt.k && n >= 1) continue;
    if (std::abs(F[n]) > 1e-10)
      throw std::logic_error("kth_root_transform: unexpected support off 1 mod k");
  }
}

}  // namespace

RootTransformSeries kth_root_transform(const NormalizedSeries& f, int k, int order) {
  if (k < 1) throw std::invalid_argument("kth_root_transform: k must be >= 1");
  if (order < 1) throw std::invalid_argument("kth_root_transform: order must be >= 1");
  // F at degree N draws on f(z^k) through degree N + k - 1.
  const int pullback_order = order + k - 1;
  const int needed = pullback_order / k;
  if (f.order() < needed)
    throw std::invalid_argument("kth_root_transform: series order insufficient for requested output");

  TruncatedSeries fk(pullback_order);  // f(z^k)
  for (int j = 1; j * k <= pullback_order; ++j) fk.set(j * k, f[j]);
  TruncatedSeries F = root_k(fk, k);
  RootTransformSeries rt{k, std::move(F)};
  check_root_structure(rt);
  return rt;
}

std::pair<Complex, Complex> b_from_a(Complex a2, Complex a3, int k) {
  if (k < 1) throw std::invalid_argument("b_from_a: k must be >= 1");
  const double kd = static_cast<double>(k);
  const Complex b_low = a2 / kd;
  const Complex b_high = a3 / kd - 0.5 * ((kd - 1.0) / (kd * kd)) * a2 * a2;
  return {b_low, b_high};
}

double fs_functional(Complex b_low, Complex b_high, Complex mu) {
  return std::abs(b_high - mu * b_low * b_low);
}

NormalizedSeries invert_series(const NormalizedSeries& f) {
  NormalizedSeries g = revert(f);
  const Complex a2 = f.order() >= 2 ? f[2] : Complex(0.0, 0.0);
  const Complex a3 = f.order() >= 3 ? f[3] : Complex(0.0, 0.0);
  const Complex a4 = f.order() >= 4 ? f[4] : Complex(0.0, 0.0);
  if (g.order() >= 2 && std::abs(g[2] - (-a2)) > 1e-10)
    throw std::logic_error("invert_series: degree-2 coefficient disagrees with closed form");
  if (g.order() >= 3 && std::abs(g[3] - (2.0 * a2 * a2 - a3)) > 1e-10)
    throw std::logic_error("invert_series: degree-3 coefficient disagrees with closed form");
  if (g.order() >= 4 &&
      std::abs(g[4] + (5.0 * a2 * a2 * a2 - 5.0 * a2 * a3 + a4)) > 1e-10)
    throw std::logic_error("invert_series: degree-4 coefficient disagrees with closed form");
  return g;
}

std::pair<Complex, Complex> inverse_transfer_coeffs(const NormalizedSeries& f) {
  if (f.order() < 3) throw std::invalid_argument("inverse_transfer_coeffs: order must be >= 3");
  const NormalizedSeries g = invert_series(f);
  // w g'/g = (z_derivative(g)/w) / (g/w); both quotient operands have unit
  // constant term after the shift.
  const TruncatedSeries t = div(shift_down(z_derivative(g.series())), shift_down(g.series()));
  return {t[1], t[2]};
}

FSRecord FSRecord::make(int k, double mu, Complex b_low, Complex b_high) {
  FSRecord r{k, mu, b_low, b_high, fs_functional(b_low, b_high, Complex(mu, 0.0))};
  return r;
}

}  // namespace fekete
