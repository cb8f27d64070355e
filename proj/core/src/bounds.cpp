#include "fekete/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace fekete {

const char* region_name(BoundRegion r) {
  switch (r) {
    case BoundRegion::BelowLower: return "below";
    case BoundRegion::Middle: return "middle";
    case BoundRegion::AboveUpper: return "above";
  }
  return "?";
}

namespace {

BoundRegion classify(double mu, double d1, double d2) {
  if (mu < d1) return BoundRegion::BelowLower;
  if (mu > d2) return BoundRegion::AboveUpper;
  return BoundRegion::Middle;
}

}  // namespace

double ma_minda_bound(double mu) {
  if (mu <= 0.0) return -4.0 * mu + 2.0;
  if (mu >= 1.0) return 4.0 * mu - 2.0;
  return 2.0;
}

PiecewiseBound thm31_bound(const SectorAlpha& s, int k, double mu) {
  if (k < 1) throw std::invalid_argument("thm31_bound: k must be >= 1");
  const double c = s.cos_alpha();
  const double kd = static_cast<double>(k);
  const double d1 = 0.5 * (1.0 - kd * (1.0 + c));
  const double d2 = 0.5 * (1.0 + kd * (1.0 - c));
  const double t = (2.0 * mu + kd - 1.0) / kd;
  const BoundRegion region = classify(mu, d1, d2);
  double value;
  switch (region) {
    case BoundRegion::BelowLower: value = (1.0 - c - t) / (2.0 * kd); break;
    case BoundRegion::AboveUpper: value = (c + t - 1.0) / (2.0 * kd); break;
    default: value = 1.0 / (2.0 * kd); break;
  }
  return {value, region, d1, d2};
}

PiecewiseBound cor31_bound(const SectorAlpha& s, double mu) {
  const double c = s.cos_alpha();
  const double d1 = -0.5 * c;
  const double d2 = 1.0 - 0.5 * c;
  const BoundRegion region = classify(mu, d1, d2);
  double value;
  switch (region) {
    case BoundRegion::BelowLower: value = 0.5 * (1.0 - c) - mu; break;
    case BoundRegion::AboveUpper: value = 0.5 * (c - 1.0) + mu; break;
    default: value = 0.5; break;
  }
  return {value, region, d1, d2};
}

PiecewiseBound cor_starlike_half_bound(double mu) {
  const BoundRegion region = classify(mu, 0.5, 1.5);
  double value;
  switch (region) {
    case BoundRegion::BelowLower: value = 1.0 - mu; break;
    case BoundRegion::AboveUpper: value = mu - 1.0; break;
    default: value = 0.5; break;
  }
  return {value, region, 0.5, 1.5};
}

std::pair<double, double> mclass_coeff_bounds(const SectorAlpha& s) {
  return {1.0, 0.5 * (1.0 - s.cos_alpha())};
}

A2Bound thm41_a2_bound(const SectorAlpha& s) {
  const double stated = std::sqrt(2.0 / (2.0 + s.cos_alpha()));
  return {stated, std::min(1.0, stated)};
}

PiecewiseBound thm41_fs_bound(const SectorAlpha& s, double mu) {
  const double c = s.cos_alpha();
  const double half_width = 0.5 * (1.0 + 0.5 * c);
  const double dev = std::abs(1.0 - mu);
  const double direct = dev <= half_width ? 0.5 : dev / (1.0 + 0.5 * c);

  const double hbar = (1.0 - mu) / (2.0 * (2.0 + c));
  const double via_hbar = std::abs(hbar) <= 0.125 ? 0.5 : 4.0 * std::abs(hbar);
  if (std::abs(direct - via_hbar) > 1e-12)
    throw std::logic_error("thm41_fs_bound: direct and hbar forms disagree");

  const double d1 = 1.0 - half_width;
  const double d2 = 1.0 + half_width;
  return {direct, classify(mu, d1, d2), d1, d2};
}

double sigma_a3_bound(const SectorAlpha& s) { return 1.0 / (1.0 + 0.5 * s.cos_alpha()); }

}  // namespace fekete
