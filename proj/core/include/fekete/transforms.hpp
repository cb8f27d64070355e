#pragma once

#include <string>
#include <utility>

#include "fekete/series.hpp"

namespace fekete {

/// F_k(z) = (f(z^k))^{1/k} = z + sum_n b_{kn+1} z^{kn+1}. F_1 = 1 and the
/// support sits on exponents congruent to 1 mod k.
struct RootTransformSeries {
  int k;
  TruncatedSeries series;

  /// b index helper: coefficient at degree n (e.g. k+1, 2k+1).
  Complex b(int n) const { return series[n]; }
};

/// Computes F_k up to the requested order. Requires f to carry every
/// coefficient the expansion needs (f.order() >= floor(order/k)); throws
/// std::invalid_argument on insufficient capacity.
RootTransformSeries kth_root_transform(const NormalizedSeries& f, int k, int order);

/// Closed forms b_{k+1} = a2/k and b_{2k+1} = a3/k - (k-1) a2^2 / (2 k^2).
std::pair<Complex, Complex> b_from_a(Complex a2, Complex a3, int k);

/// |b_high - mu * b_low^2|.
double fs_functional(Complex b_low, Complex b_high, Complex mu);

/// Compositional inverse with a guard: the degree 2..4 coefficients must
/// match the closed forms (-a2, 2a2^2 - a3, -(5a2^3 - 5a2 a3 + a4));
/// a mismatch beyond 1e-10 signals a series-kernel bug (std::logic_error).
NormalizedSeries invert_series(const NormalizedSeries& f);

/// First two coefficients of w g'(w)/g(w) - 1 for g = invert_series(f);
/// equal to (-a2, 3 a2^2 - 2 a3). Requires order >= 3.
std::pair<Complex, Complex> inverse_transfer_coeffs(const NormalizedSeries& f);

/// One evaluated Fekete-Szego functional: value = |b_high - mu b_low^2|.
struct FSRecord {
  int k;
  double mu;
  Complex b_low;
  Complex b_high;
  double value;

  static FSRecord make(int k, double mu, Complex b_low, Complex b_high);
};

}  // namespace fekete
