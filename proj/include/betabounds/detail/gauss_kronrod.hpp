#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "betabounds/errors.hpp"

namespace betabounds::detail {

// 15-point Kronrod extension of the 7-point Gauss rule (positive half of the
// symmetric node set).  Standard QUADPACK constants.
inline constexpr double kGK15Nodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};

inline constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};

// Weights of the embedded 7-point Gauss rule (at the odd-index nodes).
inline constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct CellEstimate {
  double lo;
  double hi;
  double value;
  double err;
};

// One GK 7/15 application on [lo, hi] with the QUADPACK error heuristic:
// the raw |K15 - G7| difference is sharpened against the rule's own measure
// of integrand variation so the estimate stays reliable on non-smooth cells.
template <class F>
CellEstimate gk15_cell(F&& f, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);

  double fv[15];
  for (int j = 0; j < 7; ++j) {
    fv[j] = f(center - half * kGK15Nodes[j]);
    fv[14 - j] = f(center + half * kGK15Nodes[j]);
  }
  fv[7] = f(center);

  double resk = kKronrodWeights[7] * fv[7];
  double resg = kGaussWeights[3] * fv[7];
  for (int j = 0; j < 7; ++j) {
    resk += kKronrodWeights[j] * (fv[j] + fv[14 - j]);
  }
  for (int j = 0; j < 3; ++j) {
    resg += kGaussWeights[j] * (fv[2 * j + 1] + fv[13 - 2 * j]);
  }

  const double reskh = 0.5 * resk;
  double resasc = kKronrodWeights[7] * std::abs(fv[7] - reskh);
  for (int j = 0; j < 7; ++j) {
    resasc += kKronrodWeights[j] *
              (std::abs(fv[j] - reskh) + std::abs(fv[14 - j] - reskh));
  }
  resasc *= std::abs(half);

  const double value = resk * half;
  double err = std::abs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  return {lo, hi, value, err};
}

struct AdaptiveResult {
  double value = 0.0;
  double err_estimate = 0.0;
  long evaluations = 0;
  bool converged = false;
};

/// Globally adaptive bisection over an initial partition of [lo, hi].
///
/// `breakpoints` (strictly inside (lo, hi), ascending) seed the partition;
/// the cell with the largest error estimate is bisected until the summed
/// estimate certifies `tol` or `max_evals` integrand evaluations are spent.
/// The refinement sequence is a pure function of the inputs, so the node
/// sequence and the result are deterministic.
template <class F>
AdaptiveResult integrate_adaptive(F&& f, double lo, double hi, double tol,
                                  long max_evals,
                                  const std::vector<double>& breakpoints = {}) {
  // Max-heap on (err, then smaller lo first) for deterministic pop order.
  auto heap_less = [](const CellEstimate& a, const CellEstimate& b) {
    if (a.err != b.err) return a.err < b.err;
    return a.lo > b.lo;
  };
  std::vector<CellEstimate> heap;       // refinable cells
  std::vector<CellEstimate> settled;    // too narrow to split further
  AdaptiveResult out;
  double total_err = 0.0;

  const double min_width =
      8.0 * std::numeric_limits<double>::epsilon() * (std::abs(hi - lo) + 1.0);

  auto add_cell = [&](double a, double b) {
    CellEstimate c = gk15_cell(f, a, b);
    out.evaluations += 15;
    total_err += c.err;
    if (b - a <= min_width) {
      settled.push_back(c);
    } else {
      heap.push_back(c);
      std::push_heap(heap.begin(), heap.end(), heap_less);
    }
  };

  double left = lo;
  for (double b : breakpoints) {
    add_cell(left, b);
    left = b;
  }
  add_cell(left, hi);

  while (total_err > tol && !heap.empty() && out.evaluations + 30 <= max_evals) {
    std::pop_heap(heap.begin(), heap.end(), heap_less);
    const CellEstimate c = heap.back();
    heap.pop_back();
    if (c.err == 0.0) {
      // Nothing left that refinement can improve.
      settled.push_back(c);
      break;
    }
    total_err -= c.err;
    const double mid = 0.5 * (c.lo + c.hi);
    add_cell(c.lo, mid);
    add_cell(mid, c.hi);
  }

  // Final value and estimate re-accumulated left to right; the incremental
  // total above only steers refinement.
  settled.insert(settled.end(), heap.begin(), heap.end());
  std::sort(settled.begin(), settled.end(),
            [](const CellEstimate& a, const CellEstimate& b) { return a.lo < b.lo; });
  double value = 0.0;
  double err = 0.0;
  for (const auto& c : settled) {
    value += c.value;
    err += c.err;
  }
  out.value = value;
  out.err_estimate = err;
  out.converged = err <= tol;
  return out;
}

/// Geometrically graded breakpoints used when a weight exponent below 1 makes
/// the integrand's derivative unbounded at an endpoint: cell widths halve
/// toward the affected end so the estimator never sees the blow-up at full
/// interval scale.
inline std::vector<double> graded_breakpoints(double lo, double hi,
                                              bool grade_lo, bool grade_hi,
                                              int levels = 40) {
  std::vector<double> pts;
  const double len = hi - lo;
  if (grade_lo) {
    for (int j = levels; j >= 1; --j) {
      const double x = lo + len * std::ldexp(1.0, -j - 1);
      if (x > lo && x < hi) pts.push_back(x);
    }
  }
  if (grade_hi) {
    for (int j = 1; j <= levels; ++j) {
      const double x = hi - len * std::ldexp(1.0, -j - 1);
      if (x > lo && x < hi) pts.push_back(x);
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

}  // namespace betabounds::detail
