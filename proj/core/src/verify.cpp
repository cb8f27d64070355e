#include "fekete/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace fekete {

namespace {

constexpr double kPi = std::numbers::pi;

struct Witness {
  std::string label;
  Complex p1, p2;
};

// Sharp candidates from the coefficient lemma: the nu-convex combinations
// of the half-plane kernels give (p1, p2) = (2 nu, 2); nu = 1 is the
// half-plane function, nu = 0 the two-atom one. 16 rotations of each.
std::vector<Witness> lemma_witnesses() {
  static const double nus[] = {0.0, 0.25, 0.5, 0.75, 1.0};
  std::vector<Witness> out;
  out.reserve(5 * 16);
  for (double nu : nus) {
    for (int j = 0; j < 16; ++j) {
      const double theta = 2.0 * kPi * j / 16.0;
      const Complex r1 = std::polar(1.0, theta);
      const Complex r2 = std::polar(1.0, 2.0 * theta);
      out.push_back({"nu=" + std::to_string(nu) + " rot=" + std::to_string(j),
                     2.0 * nu * r1, 2.0 * r2});
    }
  }
  return out;
}

double p_functional(Complex p1, Complex p2, double mu) {
  return std::abs(p2 - mu * p1 * p1);
}

}  // namespace

double mu_prime(const SectorAlpha& s, int k, double mu) {
  const double kd = static_cast<double>(k);
  return 0.5 * (s.cos_alpha() + (2.0 * mu + kd - 1.0) / kd);
}

OracleResult oracle_max_p_functional(double mu, const OracleGrid& grid) {
  if (grid.resolution < 1) throw std::invalid_argument("OracleGrid: resolution must be >= 1");
  const int res = grid.resolution;

  std::vector<Complex> disk;
  disk.reserve(static_cast<std::size_t>(2 * res + 1) * (2 * res + 1));
  for (int iy = -res; iy <= res; ++iy) {
    for (int ix = -res; ix <= res; ++ix) {
      const double x = static_cast<double>(ix) / res;
      const double y = static_cast<double>(iy) / res;
      if (x * x + y * y <= 1.0 + 1e-12) disk.emplace_back(x, y);
    }
  }

  OracleResult out;
  for (const Witness& w : lemma_witnesses()) {
    const double v = p_functional(w.p1, w.p2, mu);
    if (v > out.witness_max) {
      out.witness_max = v;
      out.argmax_kind = w.label;
    }
  }

  // p2 - mu p1^2 = (2 - 4 mu) zeta1^2 + 2 (1 - |zeta1|^2) zeta2.
  const double coeff = 2.0 - 4.0 * mu;
  for (const Complex& z1 : disk) {
    const Complex a = coeff * z1 * z1;
    const double sr = 2.0 * (1.0 - std::norm(z1));
    const double ar = a.real(), ai = a.imag();
    double best = 0.0;
    Complex best_z2(0.0, 0.0);
    for (const Complex& z2 : disk) {
      const double vr = ar + sr * z2.real();
      const double vi = ai + sr * z2.imag();
      const double v2 = vr * vr + vi * vi;
      if (v2 > best) {
        best = v2;
        best_z2 = z2;
      }
    }
    if (best > out.grid_max * out.grid_max) {
      out.grid_max = std::sqrt(best);
      out.arg_zeta1 = z1;
      out.arg_zeta2 = best_z2;
    }
  }

  if (out.grid_max > out.witness_max) {
    out.max_value = out.grid_max;
    out.argmax_kind = "grid";
  } else {
    out.max_value = out.witness_max;
  }
  return out;
}

OracleResult oracle_max_fs(const SectorAlpha& s, int k, double mu, const OracleGrid& grid) {
  if (k < 1) throw std::invalid_argument("oracle_max_fs: k must be >= 1");
  OracleResult r = oracle_max_p_functional(mu_prime(s, k, mu), grid);
  const double f = 1.0 / (4.0 * k);
  r.max_value *= f;
  r.witness_max *= f;
  r.grid_max *= f;
  return r;
}

namespace {

struct SampleFunctional {
  double value;
  std::string label;
};

SampleFunctional functional_of(const NormalizedSeries& f, int k, double mu, std::string label) {
  const auto [b_low, b_high] = b_from_a(f[2], f[3], k);
  return {fs_functional(b_low, b_high, Complex(mu, 0.0)), std::move(label)};
}

constexpr int kSampleOrder = 6;  // a2/a3 is all the functional needs

}  // namespace

VerificationReport verify_on_samples(const SectorAlpha& s, int k, double mu, int n_samples,
                                     std::uint64_t seed) {
  if (n_samples < 1) throw std::invalid_argument("verify_on_samples: n_samples must be >= 1");
  VerificationReport rep;
  rep.alpha = s.alpha();
  rep.k = k;
  rep.mu = mu;
  rep.bound = thm31_bound(s, k, mu).value;

  const NormalizedSeries f1 = extremal_f1(s, kSampleOrder);
  const NormalizedSeries f2 = extremal_f2(s, kSampleOrder);

  rep.max_observed = -1.0;
  for (int i = 0; i < n_samples; ++i) {
    SampleFunctional sf{0.0, ""};
    if (i == 0) {
      sf = {0.0, "identity"};
    } else if (i == 1) {
      sf = functional_of(f1, k, mu, "extremal-f1");
    } else if (i == 2) {
      sf = functional_of(f2, k, mu, "extremal-f2");
    } else {
      const HerglotzMeasure h = sample_measure(seed, static_cast<std::uint64_t>(i));
      sf = functional_of(member_from_measure(s, h, kSampleOrder), k, mu,
                         "herglotz[" + std::to_string(i) + "] m=" + std::to_string(h.count()));
    }
    if (sf.value > rep.bound + kViolationTolerance) ++rep.violations;
    if (sf.value > rep.max_observed) {
      rep.max_observed = sf.value;
      rep.argmax = sf.label;
    }
  }
  rep.sharpness_gap = rep.bound - rep.max_observed;
  return rep;
}

double sharpness_gap(const SectorAlpha& s, int k, double mu) {
  const double bound = thm31_bound(s, k, mu).value;
  const NormalizedSeries f1 = extremal_f1(s, kSampleOrder);
  const NormalizedSeries f2 = extremal_f2(s, kSampleOrder);
  double best = 0.0;
  for (int j = 0; j < 16; ++j) {
    const double theta = 2.0 * kPi * j / 16.0;
    best = std::max(best, functional_of(rotate(f1, theta), k, mu, "").value);
    best = std::max(best, functional_of(rotate(f2, theta), k, mu, "").value);
  }
  return bound - best;
}

SigmaPairWitness check_sigma_pair(const NormalizedSeries& f, const SectorAlpha& s) {
  NormalizedSeries g = invert_series(f);
  const MembershipGrid grid = MembershipGrid::defaults();
  MembershipReport fr = membership_check(f, s, grid, 0.0);
  MembershipReport gr = membership_check(g, s, grid, 0.0);
  return SigmaPairWitness{f, std::move(g), fr, gr};
}

VerificationReport verify_thm41(const SectorAlpha& s, std::span<const double> eps_grid,
                                std::span<const double> mu_grid) {
  constexpr int order = 16;
  VerificationReport rep;
  rep.alpha = s.alpha();
  rep.k = 1;
  rep.mu = mu_grid.empty() ? 0.0 : mu_grid.front();
  rep.bound = 1.0;  // reported as a functional/bound ratio
  rep.max_observed = 0.0;
  rep.argmax = "none accepted";

  const double a2_cap = thm41_a2_bound(s).effective;
  for (int family = 2; family <= 3; ++family) {
    for (double eps : eps_grid) {
      TruncatedSeries ts = TruncatedSeries::identity(order);
      ts.set(family, Complex(eps, 0.0));
      const NormalizedSeries f{std::move(ts)};
      const SigmaPairWitness pair = check_sigma_pair(f, s);
      if (!pair.accepted()) continue;

      const Complex a2 = f[2];
      const Complex a3 = f[3];
      const std::string tag = "z+eps*z^" + std::to_string(family) + " eps=" + std::to_string(eps);
      if (std::abs(a2) > a2_cap + kViolationTolerance) ++rep.violations;
      for (double mu : mu_grid) {
        const double value = std::abs(a3 - mu * a2 * a2);
        const double bound = thm41_fs_bound(s, mu).value;
        const double ratio = value / bound;
        if (value > bound + kViolationTolerance) ++rep.violations;
        if (ratio > rep.max_observed) {
          rep.max_observed = ratio;
          rep.mu = mu;
          rep.argmax = tag;
        }
      }
    }
  }
  rep.sharpness_gap = rep.bound - rep.max_observed;
  return rep;
}

SigmaDerivation verify_sigma_derivation(Complex k1, Complex k2, Complex l2,
                                        const SectorAlpha& s) {
  if (std::abs(k1) > 2.0 + 1e-12 || std::abs(k2) > 2.0 + 1e-12 || std::abs(l2) > 2.0 + 1e-12)
    throw std::invalid_argument("verify_sigma_derivation: Caratheodory coefficients are bounded by 2");
  const double c = s.cos_alpha();
  SigmaDerivation out;
  out.a2_squared = (k2 + l2) / (2.0 * (2.0 + c));
  out.a3 = out.a2_squared + (k2 - l2) / 8.0;

  // Realizable inputs satisfy k1^2 = (k2 + l2)/(2 (1 + cos(a)/2)); on that
  // set, 8 a2^2 must reproduce k1^2 + l1^2 with l1 = -k1.
  const Complex k1_sq_target = (k2 + l2) / (2.0 + c);
  if (std::abs(k1 * k1 - k1_sq_target) <= 1e-10) {
    const Complex lhs = 8.0 * out.a2_squared;
    const Complex rhs = 2.0 * k1 * k1;  // k1^2 + l1^2
    if (std::abs(lhs - rhs) > 1e-10)
      throw DerivationInconsistencyError(
          "verify_sigma_derivation: 8 a2^2 != k1^2 + l1^2 on the realizability set");
  }
  return out;
}

}  // namespace fekete
