#pragma once

#include <utility>

#include "fekete/mclass.hpp"

namespace fekete {

enum class BoundRegion { BelowLower, Middle, AboveUpper };

const char* region_name(BoundRegion r);

/// A bound value together with the piecewise region that produced it and
/// the two thresholds. Exact threshold hits report Middle.
struct PiecewiseBound {
  double value;
  BoundRegion region;
  double delta1;
  double delta2;
};

/// max |p2 - mu p1^2| over the Caratheodory class:
/// -4mu+2 (mu <= 0), 2 (0 <= mu <= 1), 4mu-2 (mu >= 1).
double ma_minda_bound(double mu);

/// Sharp bound on |b_{2k+1} - mu b_{k+1}^2| for k-th root transforms of
/// class members, with delta1 = (1-k(1+cos a))/2, delta2 = (1+k(1-cos a))/2.
PiecewiseBound thm31_bound(const SectorAlpha& s, int k, double mu);

/// The k = 1 specialization, evaluated from its own printed formulas.
PiecewiseBound cor31_bound(const SectorAlpha& s, double mu);

/// Fekete-Szego bound for starlike functions of order 1/2 (the alpha -> pi
/// limit): 1-mu / 1/2 / mu-1 with thresholds 1/2 and 3/2.
PiecewiseBound cor_starlike_half_bound(double mu);

/// (|a2| bound, |a3| bound) = (1, (1 - cos a)/2).
std::pair<double, double> mclass_coeff_bounds(const SectorAlpha& s);

/// |a2| bound for the bi-univalent class: the stated sqrt(2/(2+cos a))
/// exceeds 1 for alpha > pi/2, so the trivial cap is exposed alongside it.
struct A2Bound {
  double stated;     // sqrt(2/(2 + cos a))
  double effective;  // min(1, stated)
};
A2Bound thm41_a2_bound(const SectorAlpha& s);

/// Fekete-Szego bound for the bi-univalent class (real mu): 1/2 when
/// |1-mu| <= (1 + cos(a)/2)/2, else |1-mu|/(1 + cos(a)/2). Computed both
/// directly and through hbar(mu) = (1-mu)/(2(2+cos a)); the two routes are
/// asserted equal.
PiecewiseBound thm41_fs_bound(const SectorAlpha& s, double mu);

/// |a3| bound for the bi-univalent class: 1/(1 + cos(a)/2).
double sigma_a3_bound(const SectorAlpha& s);

}  // namespace fekete
