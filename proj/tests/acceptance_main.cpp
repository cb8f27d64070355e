// Acceptance suite: one line per criterion, exit 0 iff all pass.
//
// Each criterion pins its tolerances in code; nothing is deferred to
// runtime configuration. Runs single-threaded and deterministically.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "fekete/io.hpp"
#include "fekete/rng.hpp"
#include "fekete/verify.hpp"

using namespace fekete;

namespace {

constexpr double kPi = std::numbers::pi;
const double kAlphaGrid[] = {kPi / 2, 2 * kPi / 3, 5 * kPi / 6};

int g_failures = 0;

void criterion(int number, const std::string& label, const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  const auto start = std::chrono::steady_clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s criterion %2d: %s (%.1fs)%s%s\n", ok ? "PASS" : "FAIL", number, label.c_str(),
              secs, detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

NormalizedSeries random_normalized(SplitMix64& rng, int order) {
  TruncatedSeries s = TruncatedSeries::identity(order);
  for (int n = 2; n <= order; ++n) s.set(n, Complex(rng.next_in(-1, 1), rng.next_in(-1, 1)));
  return NormalizedSeries(std::move(s));
}

NormalizedSeries koebe(int order) {
  TruncatedSeries den(order);
  den.set(0, Complex(1, 0));
  den.set(1, Complex(-2, 0));
  den.set(2, Complex(1, 0));
  return NormalizedSeries(div(TruncatedSeries::identity(order), den));
}

std::vector<double> mu_range(double lo, double hi, double step) {
  std::vector<double> mus;
  const int n = static_cast<int>(std::floor((hi - lo) / step + 1e-9));
  for (int i = 0; i <= n; ++i) mus.push_back(lo + i * step);
  return mus;
}

bool c1_lemma_oracle(std::string& detail) {
  const auto start = std::chrono::steady_clock::now();
  const OracleGrid grid{60};
  double worst_witness = 0.0, worst_grid = 0.0;
  for (double mu : {-1.0, -0.25, 0.0, 0.3, 0.7, 1.0, 1.5, 2.0}) {
    const OracleResult r = oracle_max_p_functional(mu, grid);
    const double bound = ma_minda_bound(mu);
    worst_witness = std::max(worst_witness, std::abs(r.witness_max - bound));
    worst_grid = std::max(worst_grid, std::abs(r.grid_max - bound));
    if (std::abs(r.max_value - bound) > 1e-12) {
      detail = "combined max missed the bound at mu=" + std::to_string(mu);
      return false;
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  detail = "witness dev " + fmt_double(worst_witness) + ", grid dev " + fmt_double(worst_grid);
  return worst_witness <= 1e-12 && worst_grid <= 0.05 && secs < 60.0;
}

bool c2_nonviolation(std::string& detail) {
  const auto start = std::chrono::steady_clock::now();
  long violations = 0;
  long cells = 0;
  for (double a : kAlphaGrid) {
    const SectorAlpha s(a);
    for (int k : {1, 2, 3}) {
      for (double mu : mu_range(-2.0, 3.0, 0.1)) {
        violations += verify_on_samples(s, k, mu, 1000, 42).violations;
        ++cells;
      }
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  detail = std::to_string(cells) + " cells, " + std::to_string(violations) + " violations";
  return violations == 0 && secs < 300.0;
}

bool c3_sharpness(std::string& detail) {
  double worst = 0.0;
  for (double a : kAlphaGrid) {
    const SectorAlpha s(a);
    for (int k : {1, 2, 3}) {
      for (double mu : mu_range(-2.0, 3.0, 0.1)) {
        worst = std::max(worst, std::abs(sharpness_gap(s, k, mu)));
      }
    }
  }
  detail = "max |gap| " + fmt_double(worst);
  return worst <= 1e-9;
}

bool c4_corollary_chain(std::string& detail) {
  double worst_k1 = 0.0, worst_c32 = 0.0, worst_lim = 0.0;
  for (double a : kAlphaGrid) {
    const SectorAlpha s(a);
    for (double mu : mu_range(-2.0, 3.0, 0.05)) {
      worst_k1 = std::max(worst_k1, std::abs(thm31_bound(s, 1, mu).value - cor31_bound(s, mu).value));
    }
  }
  const SectorAlpha s90(kPi / 2);
  for (double mu : mu_range(-2.0, 3.0, 0.05)) {
    const double expect = mu <= 0.0 ? 0.5 - mu : (mu >= 1.0 ? mu - 0.5 : 0.5);
    worst_c32 = std::max(worst_c32, std::abs(cor31_bound(s90, mu).value - expect));
  }
  const SectorAlpha slim(kPi - 1e-6);
  for (double mu : mu_range(-2.0, 3.0, 0.05)) {
    worst_lim = std::max(worst_lim,
                         std::abs(cor31_bound(slim, mu).value - cor_starlike_half_bound(mu).value));
  }
  detail = "k=1 dev " + fmt_double(worst_k1) + ", cor3.2 dev " + fmt_double(worst_c32) +
           ", limit dev " + fmt_double(worst_lim);
  return worst_k1 <= 1e-12 && worst_c32 <= 1e-12 && worst_lim <= 1e-6;
}

bool c5_series_kernel(std::string& detail) {
  // revert(z/(1-z)) = w/(1+w) to order 12
  TruncatedSeries zs(12);
  for (int d = 1; d <= 12; ++d) zs.set(d, Complex(1, 0));
  const NormalizedSeries ghalf = revert(NormalizedSeries(std::move(zs)));
  double worst_half = 0.0;
  for (int d = 1; d <= 12; ++d)
    worst_half = std::max(worst_half, std::abs(ghalf[d] - Complex(d % 2 ? 1.0 : -1.0, 0.0)));
  if (worst_half > 1e-12) {
    detail = "half-plane reversion dev " + fmt_double(worst_half);
    return false;
  }

  SplitMix64 rng(42);
  double worst_round = 0.0, worst_closed = 0.0;
  for (int t = 0; t < 500; ++t) {
    const NormalizedSeries f = random_normalized(rng, 12);
    const NormalizedSeries g = revert(f);
    TruncatedSeries r = compose(g.series(), f.series());
    r.set(1, r[1] - Complex(1, 0));
    for (int d = 0; d <= r.order(); ++d) worst_round = std::max(worst_round, std::abs(r[d]));
    const Complex a2 = f[2], a3 = f[3], a4 = f[4];
    worst_closed = std::max(worst_closed, std::abs(g[2] + a2));
    worst_closed = std::max(worst_closed, std::abs(g[3] - (2.0 * a2 * a2 - a3)));
    worst_closed =
        std::max(worst_closed, std::abs(g[4] + (5.0 * a2 * a2 * a2 - 5.0 * a2 * a3 + a4)));
  }
  detail = "round-trip dev " + fmt_double(worst_round) + ", closed-form dev " +
           fmt_double(worst_closed);
  return worst_round < 1e-9 && worst_closed < 1e-10;
}

bool c6_extremals(std::string& detail) {
  double worst = 0.0;
  for (double a : kAlphaGrid) {
    const SectorAlpha s(a);
    const double c = s.cos_alpha();
    const NormalizedSeries f1 = extremal_f1(s, 8);
    worst = std::max(worst, std::abs(f1[2] - Complex(1, 0)));
    worst = std::max(worst, std::abs(f1[3] - Complex(0.5 * (1 - c), 0)));
    worst = std::max(worst, std::abs(f1[4] - Complex((1 - 9 * c + 8 * c * c) / 18.0, 0)));

    const NormalizedSeries f2 = extremal_f2(s, 8);
    worst = std::max(worst, std::abs(f2[2]));
    worst = std::max(worst, std::abs(f2[3] - Complex(0.5, 0)));
    for (int k : {1, 2, 3}) {
      const RootTransformSeries rt = kth_root_transform(f2, k, 2 * k + 1);
      worst = std::max(worst, std::abs(rt.b(k + 1)));
      worst = std::max(worst, std::abs(rt.b(2 * k + 1) - Complex(1.0 / (2 * k), 0)));
    }
  }
  const NormalizedSeries f1 = extremal_f1(SectorAlpha(kPi / 2), 8);
  worst = std::max(worst, std::abs(f1[2] - Complex(1.0, 0)));
  worst = std::max(worst, std::abs(f1[3] - Complex(0.5, 0)));
  worst = std::max(worst, std::abs(f1[4] - Complex(1.0 / 18, 0)));
  detail = "max coefficient dev " + fmt_double(worst);
  return worst <= 1e-10;
}

bool c7_membership(std::string& detail) {
  const MembershipGrid grid = MembershipGrid::defaults();
  constexpr int kOrder = 64;  // short truncations misreport Re{zf'/f} at r = 0.95
  long rejected = 0;
  double worst_clearance = 1e300;
  for (double a : kAlphaGrid) {
    const SectorAlpha s(a);

    const MembershipReport mz =
        membership_check(NormalizedSeries(TruncatedSeries::identity(12)), s, grid, 0.0);
    if (!mz.accepted) {
      detail = "identity rejected";
      return false;
    }
    const MembershipReport mk = membership_check(koebe(12), s, grid, 0.0);
    MembershipGrid ring;  // the r = 0.95 circle alone carries the violation
    ring.radii = {0.95};
    ring.angle_count = 720;
    const MembershipReport mk95 = membership_check(koebe(12), s, ring, 0.0);
    if (mk.accepted || mk95.accepted || !(mk95.worst_value > s.upper())) {
      detail = "Koebe not rejected at r = 0.95";
      return false;
    }

    for (int i = 0; i < 1000; ++i) {
      const NormalizedSeries f = member_from_measure(s, sample_measure(42, i), kOrder);
      const MembershipReport m = membership_check(f, s, grid, 0.0);
      if (!m.accepted) ++rejected;
      worst_clearance = std::min(worst_clearance, m.clearance);
    }
  }
  detail = std::to_string(rejected) + " of 3000 members rejected, min clearance " +
           fmt_double(worst_clearance);
  return rejected == 0;
}

bool c8_sigma_bridge(std::string& detail) {
  SplitMix64 rng(4242);
  double worst = 0.0;
  for (int t = 0; t < 500; ++t) {
    const NormalizedSeries f = random_normalized(rng, 12);
    const auto [c1, c2] = inverse_transfer_coeffs(f);
    worst = std::max(worst, std::abs(c1 + f[2]));
    worst = std::max(worst, std::abs(c2 - (3.0 * f[2] * f[2] - 2.0 * f[3])));
  }
  if (worst > 1e-10) {
    detail = "transfer-coefficient dev " + fmt_double(worst);
    return false;
  }

  const SectorAlpha s90(kPi / 2);
  const SigmaDerivation z = verify_sigma_derivation(Complex(0, 0), Complex(0, 0), Complex(0, 0), s90);
  const SigmaDerivation d = verify_sigma_derivation(Complex(2, 0), Complex(2, 0), Complex(2, 0), s90);
  const SigmaDerivation e =
      verify_sigma_derivation(Complex(0, 0), Complex(2, 0), Complex(-2, 0), s90);
  const double dev = std::max({std::abs(z.a2_squared), std::abs(z.a3),
                               std::abs(d.a2_squared - Complex(1, 0)), std::abs(d.a3 - Complex(1, 0)),
                               std::abs(e.a2_squared), std::abs(e.a3 - Complex(0.5, 0))});
  detail = "transfer dev " + fmt_double(worst) + ", substitution dev " + fmt_double(dev);
  return dev <= 1e-12;
}

bool c9_thm41_desk(std::string& detail) {
  const std::vector<double> eps = {0.01, 0.02, 0.05};
  const std::vector<double> mus = mu_range(-2.0, 3.0, 0.1);
  long accepted_pairs = 0;
  for (double a : kAlphaGrid) {
    const SectorAlpha s(a);
    const double a2_cap = thm41_a2_bound(s).effective;
    for (int family = 2; family <= 3; ++family) {
      for (double e : eps) {
        TruncatedSeries ts = TruncatedSeries::identity(16);
        ts.set(family, Complex(e, 0));
        const NormalizedSeries f(std::move(ts));
        const SigmaPairWitness pair = check_sigma_pair(f, s);
        if (!pair.accepted()) continue;
        ++accepted_pairs;
        if (std::abs(f[2]) > a2_cap + 1e-9) {
          detail = "a2 bound violated";
          return false;
        }
        for (double mu : mus) {
          if (std::abs(f[3] - mu * f[2] * f[2]) > thm41_fs_bound(s, mu).value + 1e-9) {
            detail = "fs bound violated at mu=" + std::to_string(mu);
            return false;
          }
        }
      }
    }
  }
  if (accepted_pairs == 0) {
    detail = "no perturbation pair accepted";
    return false;
  }

  // alpha -> pi limit of the Sigma-class corollaries
  const SectorAlpha slim(kPi - 1e-6);
  double worst_lim = 0.0;
  for (double mu : mus) {
    const double dev = std::abs(1.0 - mu);
    const double expect = dev <= 0.25 ? 0.5 : 2.0 * dev;
    worst_lim = std::max(worst_lim, std::abs(thm41_fs_bound(slim, mu).value - expect));
  }
  const double a3_90 = std::abs(sigma_a3_bound(SectorAlpha(kPi / 2)) - 1.0);
  const double a3_lim = std::abs(sigma_a3_bound(slim) - 2.0);
  detail = std::to_string(accepted_pairs) + " accepted pairs, limit dev " + fmt_double(worst_lim);
  return worst_lim <= 1e-6 && a3_90 <= 1e-12 && a3_lim <= 1e-6;
}

bool c10_strip_geometry(std::string& detail) {
  const double at90 = std::abs(SectorAlpha(kPi / 2).lower() - (1.0 - kPi / 4));
  if (at90 > 1e-12) {
    detail = "lower(pi/2) dev " + fmt_double(at90);
    return false;
  }
  const double a_max = kPi - 1e-3;
  for (int i = 0; i < 100; ++i) {
    const double a = kPi / 2 + (a_max - kPi / 2) * i / 99.0;
    const double lo = SectorAlpha(a).lower();
    if (lo < 1.0 - kPi / 4 - 1e-12 || lo >= 0.5) {
      detail = "lower endpoint out of [1 - pi/4, 1/2) at alpha=" + fmt_double(a);
      return false;
    }
  }
  const double tail_dev = std::abs(SectorAlpha(kPi - 1e-3).lower() - 0.5);
  detail = "lower(pi - 1e-3) within " + fmt_double(tail_dev) + " of 1/2";
  return tail_dev <= 1e-3;
}

}  // namespace

int main() {
  std::printf("acceptance suite (alpha grid: pi/2, 2pi/3, 5pi/6)\n");
  criterion(1, "coefficient-lemma oracle equivalence at resolution 60", c1_lemma_oracle);
  criterion(2, "root-transform bound non-violation, 1000 seeded samples per cell", c2_nonviolation);
  criterion(3, "sharpness gap <= 1e-9 via extremal witnesses", c3_sharpness);
  criterion(4, "corollary chain (k=1, alpha=pi/2, alpha->pi limit)", c4_corollary_chain);
  criterion(5, "series kernel reversion identities", c5_series_kernel);
  criterion(6, "extremal expansions and their root transforms", c6_extremals);
  criterion(7, "strip membership: identity/Koebe/1000 sampled members per alpha", c7_membership);
  criterion(8, "inverse-transfer bridge and derivation substitutions", c8_sigma_bridge);
  criterion(9, "bi-univalent desk checks and limit corollaries", c9_thm41_desk);
  criterion(10, "strip geometry of the sector parameter", c10_strip_geometry);
  if (g_failures == 0) {
    std::printf("acceptance: all criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", g_failures);
  return 1;
}
