#pragma once

#include <complex>
#include <span>
#include <vector>

namespace fekete {

using Complex = std::complex<double>;

/// Taylor coefficients c0..cN of a function analytic at 0, truncated at
/// degree N. The universal currency of the library: every class member,
/// transfer function and Schwarz function lives in one of these.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order);
  explicit TruncatedSeries(std::vector<Complex> coeffs);

  static TruncatedSeries constant(Complex value, int order);
  static TruncatedSeries identity(int order);              // z
  static TruncatedSeries monomial(int degree, int order);  // z^degree

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  Complex operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
  void set(int n, Complex value);
  std::span<const Complex> coeffs() const { return coeffs_; }

 private:
  std::vector<Complex> coeffs_;
};

// Binary operations truncate to the shorter operand; unknown high-order
// terms are never fabricated.
TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries scale(const TruncatedSeries& a, Complex factor);

/// Long division. Throws std::domain_error when |b0| < 1e-14.
TruncatedSeries div(const TruncatedSeries& a, const TruncatedSeries& b);

/// Coefficients of outer(inner(z)). The inner series must have zero
/// constant term (throws std::invalid_argument otherwise).
TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

/// exp of a series with a0 = 0 (throws otherwise); E0 = 1 and E' = a'E
/// termwise through the truncation order.
TruncatedSeries exp_series(const TruncatedSeries& a);

/// Principal-branch log of a series with a0 = 1.
TruncatedSeries log_series(const TruncatedSeries& a);

/// Termwise antiderivative with zero constant; output order is N+1.
TruncatedSeries integrate(const TruncatedSeries& a);

/// The operator z d/dz: c_n -> n c_n.
TruncatedSeries z_derivative(const TruncatedSeries& a);

/// Divide by z. Requires c0 = 0.
TruncatedSeries shift_down(const TruncatedSeries& a);

/// (a(z))^{1/k} for a = z^k (1 + u(z)) with u(0) = 0, i.e. a = f(z^k) for
/// normalized f. Principal branch via exp(log/k) on the factored tail;
/// the result has c1 = 1. Throws when the leading structure is violated.
TruncatedSeries root_k(const TruncatedSeries& a, int k);

/// c_n -> e^{i n theta} c_n, i.e. the coefficients of a(e^{i theta} z).
TruncatedSeries rotate_series(const TruncatedSeries& a, double theta);

Complex evaluate(const TruncatedSeries& a, Complex z);

/// Bound on |sum_{n>N} c_n z^n| at |z| = r, extrapolating the coefficient
/// decay geometrically from the maxima of the last two coefficient blocks.
/// Returns +inf when the extrapolated ratio does not contract at radius r,
/// and 0 for series whose tail block is identically zero.
double tail_estimate(const TruncatedSeries& a, double r);

/// Series with c0 = 0 and c1 = 1 exactly.
class NormalizedSeries {
 public:
  explicit NormalizedSeries(TruncatedSeries s);
  const TruncatedSeries& series() const { return s_; }
  int order() const { return s_.order(); }
  Complex operator[](int n) const { return s_[n]; }

 private:
  TruncatedSeries s_;
};

/// Compositional inverse: g with compose(g, f) = z through the truncation
/// order, solved degree by degree against the compose residual.
NormalizedSeries revert(const NormalizedSeries& f);

}  // namespace fekete
