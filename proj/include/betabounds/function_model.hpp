#pragma once

#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "betabounds/errors.hpp"

namespace betabounds {

enum class ClassLabel { convex, m_convex, alpha_m_convex, quasi_convex };

inline std::string_view to_string(ClassLabel label) {
  switch (label) {
    case ClassLabel::convex: return "convex";
    case ClassLabel::m_convex: return "m_convex";
    case ClassLabel::alpha_m_convex: return "alpha_m_convex";
    case ClassLabel::quasi_convex: return "quasi_convex";
  }
  return "?";
}

/// (alpha, m) pair for the generalized convexity classes.  Plain convexity is
/// (1, 1); m-convexity is (1, m).  Both components live in (0, 1].
struct ClassParams {
  double alpha = 1.0;
  double m = 1.0;
};

struct Claim {
  ClassLabel label;
  ClassParams params{};
};

/// Exponent parameter of the power-transformed bounds: the Hoelder exponent
/// k (> 1) or the power-mean exponent l (>= 1).
struct ExponentParam {
  enum class Kind { holder_k, power_l };
  Kind kind;
  double value;

  static ExponentParam holder_k(double k) {
    if (!(k > 1.0)) throw ParameterError("holder exponent k must be > 1");
    return {Kind::holder_k, k};
  }
  static ExponentParam power_l(double l) {
    if (!(l >= 1.0)) throw ParameterError("power-mean exponent l must be >= 1");
    return {Kind::power_l, l};
  }
};

/// An evaluable scalar test function on a closed interval [lo, hi], lo >= 0,
/// with the class memberships the catalog asserts for it.  Immutable after
/// construction; evaluation must be deterministic.
struct FunctionSpec {
  std::string id;
  double lo = 0.0;
  double hi = 1.0;
  std::function<double(double)> eval_fn;
  std::vector<Claim> claims;
};

inline double evaluate(const FunctionSpec& spec, double x) {
  if (!(x >= spec.lo) || !(x <= spec.hi)) {
    throw OutOfDomainError("evaluate: x = " + std::to_string(x) +
                           " outside domain of '" + spec.id + "'");
  }
  return spec.eval_fn(x);
}

namespace detail {
inline std::string compact_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}
}  // namespace detail

/// g(x) = |f(x)|^r on the same domain.  Claims are dropped: membership of the
/// transform has to be re-certified, it does not follow from f's claims.
inline FunctionSpec power_transform(const FunctionSpec& spec, double r) {
  if (!(r >= 1.0)) {
    throw ParameterError("power_transform: exponent must be >= 1, got " +
                         std::to_string(r));
  }
  FunctionSpec out;
  out.id = "|" + spec.id + "|^" + detail::compact_double(r);
  out.lo = spec.lo;
  out.hi = spec.hi;
  out.eval_fn = [f = spec.eval_fn, r](double x) {
    return std::pow(std::abs(f(x)), r);
  };
  return out;
}

/// Built-in test corpus.  Domains are wide enough ([0, 12] = [0, b/m] for
/// b = 3, m = 1/4) that the evaluation points b/m and a/m of the two-branch
/// bounds exist for every grid combination; specimens on narrower domains
/// exercise the out-of-domain skip paths.
inline const std::vector<FunctionSpec>& builtin_catalog() {
  static const std::vector<FunctionSpec> catalog = [] {
    using CL = ClassLabel;
    std::vector<FunctionSpec> specs;

    auto add = [&](std::string id, double lo, double hi,
                   std::function<double(double)> f, std::vector<Claim> claims) {
      specs.push_back({std::move(id), lo, hi, std::move(f), std::move(claims)});
    };

    add("identity", 0.0, 12.0, [](double x) { return x; },
        {{CL::convex}, {CL::quasi_convex}, {CL::m_convex, {1.0, 0.5}},
         {CL::alpha_m_convex, {1.0, 0.25}}});
    add("square", 0.0, 12.0, [](double x) { return x * x; },
        {{CL::convex}, {CL::quasi_convex}, {CL::m_convex, {1.0, 0.25}},
         {CL::alpha_m_convex, {0.5, 0.5}}});
    add("cube", 0.0, 12.0, [](double x) { return x * x * x; },
        {{CL::convex}, {CL::quasi_convex}, {CL::m_convex, {1.0, 0.5}},
         {CL::alpha_m_convex, {0.25, 0.5}}});
    add("pow_three_halves", 0.0, 12.0,
        [](double x) { return std::pow(x, 1.5); },
        {{CL::convex}, {CL::quasi_convex}, {CL::m_convex, {1.0, 0.5}},
         {CL::alpha_m_convex, {0.75, 0.5}}});
    // Quasi-convex but not convex (concave increasing).
    add("sqrt", 0.0, 12.0, [](double x) { return std::sqrt(x); },
        {{CL::quasi_convex}});
    add("affine", 0.0, 3.0, [](double x) { return 2.0 * x + 1.0; },
        {{CL::convex}, {CL::quasi_convex}});
    add("const_one", 0.0, 12.0, [](double) { return 1.0; },
        {{CL::convex}, {CL::quasi_convex}, {CL::alpha_m_convex, {0.25, 1.0}}});
    // Negative constants satisfy the definitional inequality for every
    // (alpha, m); positive ones only at m = 1.
    add("const_neg_one", 0.0, 12.0, [](double) { return -1.0; },
        {{CL::convex}, {CL::quasi_convex}, {CL::m_convex, {1.0, 0.25}},
         {CL::alpha_m_convex, {0.25, 0.25}}, {CL::alpha_m_convex, {0.5, 0.75}}});
    add("expm1", 0.0, 4.0, [](double x) { return std::expm1(x); },
        {{CL::convex}, {CL::quasi_convex}, {CL::m_convex, {1.0, 0.5}}});
    // Monotone decreasing specimen.
    add("exp_neg", 0.0, 12.0, [](double x) { return std::exp(-x); },
        {{CL::convex}, {CL::quasi_convex}});
    // Planted counterexample: interior maximum at 1/2 beats both endpoint
    // values, so it is not quasi-convex (and a fortiori not convex).
    add("neg_bump", 0.0, 1.0,
        [](double x) { return -(x - 0.5) * (x - 0.5); }, {});
    add("abs_shift", 0.0, 3.0, [](double x) { return std::abs(x - 1.0); },
        {{CL::convex}, {CL::quasi_convex}});
    add("sq_shift", 0.0, 3.0, [](double x) { return (x - 1.0) * (x - 1.0); },
        {{CL::convex}, {CL::quasi_convex}});

    return specs;
  }();
  return catalog;
}

inline const FunctionSpec* find_spec(std::string_view id) {
  for (const auto& s : builtin_catalog()) {
    if (s.id == id) return &s;
  }
  return nullptr;
}

}  // namespace betabounds
