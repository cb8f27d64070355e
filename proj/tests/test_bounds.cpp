#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fekete/bounds.hpp"
#include "fekete/verify.hpp"

using namespace fekete;

namespace {
constexpr double kPi = std::numbers::pi;
const double kAlphaGrid[] = {kPi / 2, 2 * kPi / 3, 5 * kPi / 6, kPi - 1e-6};
}  // namespace

TEST_CASE("ma_minda_bound") {
  CHECK(ma_minda_bound(0.0) == doctest::Approx(2.0));
  CHECK(ma_minda_bound(-1.0) == doctest::Approx(6.0));
  CHECK(ma_minda_bound(2.0) == doctest::Approx(6.0));
  CHECK(ma_minda_bound(0.5) == doctest::Approx(2.0));
  CHECK(ma_minda_bound(1.0) == doctest::Approx(2.0));
}

TEST_CASE("thm31_bound frozen values") {
  const SectorAlpha s90(kPi / 2);
  const PiecewiseBound b0 = thm31_bound(s90, 1, 0.0);
  CHECK(b0.value == doctest::Approx(0.5));
  CHECK(b0.region == BoundRegion::Middle);
  CHECK(b0.delta1 == doctest::Approx(0.0));
  CHECK(b0.delta2 == doctest::Approx(1.0));

  CHECK(thm31_bound(s90, 1, 2.0).value == doctest::Approx(1.5));
  CHECK(thm31_bound(s90, 1, 2.0).region == BoundRegion::AboveUpper);

  const SectorAlpha s120(2 * kPi / 3);
  const PiecewiseBound b = thm31_bound(s120, 2, 1.0);
  CHECK(b.value == doctest::Approx(0.25));
  CHECK(b.region == BoundRegion::Middle);
  CHECK(b.delta1 == doctest::Approx(0.0));
  CHECK(b.delta2 == doctest::Approx(2.0));
}

TEST_CASE("piecewise bounds are continuous at their thresholds") {
  const double eps = 1e-9;
  for (double a : kAlphaGrid) {
    const SectorAlpha s(a);
    for (int k : {1, 2, 3, 5}) {
      const PiecewiseBound mid = thm31_bound(s, k, 0.0);
      for (double d : {mid.delta1, mid.delta2}) {
        const double left = thm31_bound(s, k, d - eps).value;
        const double at = thm31_bound(s, k, d).value;
        const double right = thm31_bound(s, k, d + eps).value;
        CHECK(std::abs(left - at) < 1e-8);   // linear pieces, slope O(1)
        CHECK(std::abs(right - at) < 1e-8);
        CHECK(thm31_bound(s, k, d).region == BoundRegion::Middle);
      }
      // exact threshold agreement of the formulas
      const double c = s.cos_alpha();
      const double t1 = (1.0 - c - (2.0 * mid.delta1 + k - 1.0) / k) / (2.0 * k);
      CHECK(std::abs(t1 - 1.0 / (2.0 * k)) < 1e-12);
      const double t2 = (c + (2.0 * mid.delta2 + k - 1.0) / k - 1.0) / (2.0 * k);
      CHECK(std::abs(t2 - 1.0 / (2.0 * k)) < 1e-12);
    }
    const PiecewiseBound f = thm41_fs_bound(s, 0.0);
    for (double d : {f.delta1, f.delta2}) {
      CHECK(std::abs(thm41_fs_bound(s, d - eps).value - thm41_fs_bound(s, d + eps).value) < 1e-8);
      CHECK(std::abs(thm41_fs_bound(s, d).value - 0.5) < 1e-12);
    }
  }
}

TEST_CASE("cor31 equals thm31 at k = 1") {
  for (double a : kAlphaGrid) {
    const SectorAlpha s(a);
    for (double mu = -2.0; mu <= 3.0; mu += 0.05) {
      const PiecewiseBound c = cor31_bound(s, mu);
      const PiecewiseBound t = thm31_bound(s, 1, mu);
      CHECK(std::abs(c.value - t.value) < 1e-12);
      CHECK(c.region == t.region);
      CHECK(std::abs(c.delta1 - t.delta1) < 1e-12);
      CHECK(std::abs(c.delta2 - t.delta2) < 1e-12);
    }
  }
}

TEST_CASE("cor31 frozen examples") {
  const SectorAlpha s150(5 * kPi / 6);
  CHECK(cor31_bound(s150, 1.0).value == doctest::Approx(0.5));
  CHECK(cor31_bound(s150, 1.0).region == BoundRegion::Middle);

  // below-threshold case: (1 - cos a)/2 - mu
  const SectorAlpha s120(2 * kPi / 3);
  CHECK(cor31_bound(s120, 0.0).value == doctest::Approx(0.75));
  CHECK(cor31_bound(s120, 0.0).region == BoundRegion::BelowLower);

  // threshold agreement at mu = 1 - cos(a)/2
  for (double a : kAlphaGrid) {
    const SectorAlpha s(a);
    const double mu = 1.0 - 0.5 * s.cos_alpha();
    CHECK(cor31_bound(s, mu).value == doctest::Approx(0.5));
    CHECK(std::abs((0.5 * (s.cos_alpha() - 1.0) + mu) - 0.5) < 1e-12);
  }
}

TEST_CASE("corollary 3.2: alpha = pi/2 cases") {
  const SectorAlpha s(kPi / 2);
  CHECK(cor31_bound(s, -1.0).value == doctest::Approx(1.5));
  CHECK(cor31_bound(s, 0.0).value == doctest::Approx(0.5));
  CHECK(cor31_bound(s, 1.0).value == doctest::Approx(0.5));
  CHECK(cor31_bound(s, 2.0).value == doctest::Approx(1.5));
  for (double mu = -2.0; mu <= 3.0; mu += 0.1) {
    const double expect = mu <= 0 ? 0.5 - mu : (mu >= 1 ? mu - 0.5 : 0.5);
    CHECK(std::abs(cor31_bound(s, mu).value - expect) < 1e-12);
  }
}

TEST_CASE("starlike order 1/2 corollary is the alpha -> pi limit") {
  CHECK(cor_starlike_half_bound(0.0).value == doctest::Approx(1.0));
  CHECK(cor_starlike_half_bound(1.0).value == doctest::Approx(0.5));
  CHECK(cor_starlike_half_bound(2.0).value == doctest::Approx(1.0));
  const SectorAlpha slim(kPi - 1e-6);
  for (double mu = -2.0; mu <= 3.0; mu += 0.05) {
    CHECK(std::abs(cor31_bound(slim, mu).value - cor_starlike_half_bound(mu).value) < 1e-9);
  }
}

TEST_CASE("proof-internal reduction: thm31 = ma_minda(mu')/(4k)") {
  for (double a : kAlphaGrid) {
    const SectorAlpha s(a);
    for (int k : {1, 2, 3, 5}) {
      for (double mu = -3.0; mu <= 4.0; mu += 0.07) {
        const double mp = mu_prime(s, k, mu);
        CHECK(std::abs(thm31_bound(s, k, mu).value - ma_minda_bound(mp) / (4.0 * k)) < 1e-12);
      }
    }
  }
}

TEST_CASE("thm31 monotone outside the middle region") {
  for (double a : kAlphaGrid) {
    const SectorAlpha s(a);
    for (int k : {1, 2, 3}) {
      const PiecewiseBound ref = thm31_bound(s, k, 0.0);
      double prev = thm31_bound(s, k, ref.delta1 - 2.0).value;
      for (double mu = ref.delta1 - 1.9; mu <= ref.delta1; mu += 0.1) {
        const double v = thm31_bound(s, k, mu).value;
        CHECK(v <= prev + 1e-12);
        prev = v;
      }
      prev = thm31_bound(s, k, ref.delta2).value;
      for (double mu = ref.delta2 + 0.1; mu <= ref.delta2 + 2.0; mu += 0.1) {
        const double v = thm31_bound(s, k, mu).value;
        CHECK(v >= prev - 1e-12);
        prev = v;
      }
    }
  }
}

TEST_CASE("mclass coefficient bounds") {
  const auto [a2, a3] = mclass_coeff_bounds(SectorAlpha(kPi / 2));
  CHECK(a2 == doctest::Approx(1.0));
  CHECK(a3 == doctest::Approx(0.5));
  const auto [b2, b3] = mclass_coeff_bounds(SectorAlpha(kPi - 1e-6));
  CHECK(b2 == doctest::Approx(1.0));
  CHECK(b3 == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("thm41 a2 bound") {
  CHECK(thm41_a2_bound(SectorAlpha(kPi / 2)).stated == doctest::Approx(1.0));
  CHECK(thm41_a2_bound(SectorAlpha(kPi / 2)).effective == doctest::Approx(1.0));
  const A2Bound b = thm41_a2_bound(SectorAlpha(2 * kPi / 3));
  CHECK(b.stated == doctest::Approx(std::sqrt(4.0 / 3.0)));
  CHECK(b.effective == doctest::Approx(1.0));
  CHECK(thm41_a2_bound(SectorAlpha(kPi - 1e-6)).effective == doctest::Approx(1.0));
}

TEST_CASE("thm41 fs bound") {
  for (double a : kAlphaGrid) {
    const SectorAlpha s(a);
    CHECK(thm41_fs_bound(s, 1.0).value == doctest::Approx(0.5));
    for (double mu = -3.0; mu <= 4.0; mu += 0.05) {
      const double v = thm41_fs_bound(s, mu).value;
      CHECK(v >= 0.5 - 1e-15);
      const double dev = std::abs(1.0 - mu);
      const bool middle = dev <= 0.5 * (1.0 + 0.5 * s.cos_alpha());
      if (middle)
        CHECK(v == doctest::Approx(0.5));
      else
        CHECK(v > 0.5);
    }
  }
  CHECK(thm41_fs_bound(SectorAlpha(kPi / 2), 0.0).value == doctest::Approx(1.0));
  // alpha -> pi limit: 2|1-mu| outside |1-mu| <= 1/4
  const SectorAlpha slim(kPi - 1e-6);
  CHECK(thm41_fs_bound(slim, 0.0).value == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(thm41_fs_bound(slim, 1.2).value == doctest::Approx(0.5));
  CHECK(thm41_fs_bound(slim, 1.3).value == doctest::Approx(0.6).epsilon(1e-6));
}

TEST_CASE("sigma a3 bound") {
  CHECK(sigma_a3_bound(SectorAlpha(kPi / 2)) == doctest::Approx(1.0));
  CHECK(sigma_a3_bound(SectorAlpha(2 * kPi / 3)) == doctest::Approx(4.0 / 3.0));
  CHECK(sigma_a3_bound(SectorAlpha(kPi - 1e-6)) == doctest::Approx(2.0).epsilon(1e-6));
  for (double a : kAlphaGrid) {
    const SectorAlpha s(a);
    CHECK(std::abs(sigma_a3_bound(s) - thm41_fs_bound(s, 0.0).value) < 1e-12);
  }
}

TEST_CASE("region labels and names") {
  const SectorAlpha s(kPi / 2);
  CHECK(thm31_bound(s, 1, -5.0).region == BoundRegion::BelowLower);
  CHECK(thm31_bound(s, 1, 0.5).region == BoundRegion::Middle);
  CHECK(thm31_bound(s, 1, 5.0).region == BoundRegion::AboveUpper);
  CHECK(std::string(region_name(BoundRegion::BelowLower)) == "below");
  CHECK(std::string(region_name(BoundRegion::Middle)) == "middle");
  CHECK(std::string(region_name(BoundRegion::AboveUpper)) == "above");
}
