#pragma once

#include <array>
#include <cmath>

#include "eightvx/pairing.hpp"
#include "eightvx/params.hpp"

namespace eightvx {

// Nonnegative weights on the six signed pairings of one node. A valid
// weight function reproduces the node parameters as
//   a = w(s1-) + w(s2+) + w(s3+)      b = w(s1+) + w(s2-) + w(s3+)
//   c = w(s1+) + w(s2+) + w(s3-)      d = w(s1-) + w(s2-) + w(s3-)
// equivalently: each even pattern's weight is the sum of w over its three
// compatible signed pairings.
struct WeightFunction {
  std::array<double, 6> w{};  // indexed by sp_index

  double operator()(SignedPairing sp) const { return w[sp_index(sp)]; }
  double& operator[](SignedPairing sp) { return w[sp_index(sp)]; }

  bool monotone() const {
    return w[0] >= w[1] && w[2] >= w[3] && w[4] >= w[5];
  }
  // Plus dominates for P1/P2, minus dominates for P3 (the planar regime).
  bool planar_monotone() const {
    return w[0] >= w[1] && w[2] >= w[3] && w[4] <= w[5];
  }
};

struct WeightSolution {
  bool ok = false;
  WeightFunction w{};
  double slack = 0.0;  // negative slack certifies no nonnegative solution
};

// Largest violation of the four defining equations, relative to the scale
// of the parameters.
inline double weight_residual(const Params& p, const WeightFunction& w) {
  const double ra = std::fabs(p.a - (w.w[1] + w.w[2] + w.w[4]));
  const double rb = std::fabs(p.b - (w.w[0] + w.w[3] + w.w[4]));
  const double rc = std::fabs(p.c - (w.w[0] + w.w[2] + w.w[5]));
  const double rd = std::fabs(p.d - (w.w[1] + w.w[3] + w.w[5]));
  double r = ra;
  if (rb > r) r = rb;
  if (rc > r) r = rc;
  if (rd > r) r = rd;
  return r;
}

// Constructive solver. Any solution has fixed per-pairing differences
//   w(si-) - w(si+) = d_i  with  d1 = (a+d-b-c)/2, d2 = (b+d-a-c)/2,
//   d3 = (c+d-a-b)/2,
// and per-pairing sums u_i free subject to u1+u2+u3 = (a+b+c+d)/2. A
// nonnegative solution needs u_i >= |d_i|, hence exists iff
// |d1|+|d2|+|d3| <= (a+b+c+d)/2. The canonical choice splits the slack
// equally, keeping the solution maximally clear of the boundary.
inline WeightSolution solve_weight_function(const Params& p) {
  WeightSolution out;
  const double d1 = (p.a + p.d - p.b - p.c) / 2.0;
  const double d2 = (p.b + p.d - p.a - p.c) / 2.0;
  const double d3 = (p.c + p.d - p.a - p.b) / 2.0;
  const double half_sum = p.sum() / 2.0;
  out.slack = half_sum - (std::fabs(d1) + std::fabs(d2) + std::fabs(d3));
  if (out.slack < 0) return out;
  const double bump = out.slack / 3.0;
  const double u1 = std::fabs(d1) + bump;
  const double u2 = std::fabs(d2) + bump;
  const double u3 = std::fabs(d3) + bump;
  out.w.w[0] = (u1 - d1) / 2.0;
  out.w.w[1] = (u1 + d1) / 2.0;
  out.w.w[2] = (u2 - d2) / 2.0;
  out.w.w[3] = (u2 + d2) / 2.0;
  out.w.w[4] = (u3 - d3) / 2.0;
  out.w.w[5] = (u3 + d3) / 2.0;
  out.ok = true;
  return out;
}

// Same solver on squared parameters; solvable exactly on the region where
// every squared weight is bounded by the sum of the other three squares.
inline WeightSolution solve_congestion_weights(const Params& p) {
  return solve_weight_function(
      Params{p.a * p.a, p.b * p.b, p.c * p.c, p.d * p.d});
}

}  // namespace eightvx
