#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "betabounds/bounds.hpp"
#include "betabounds/function_model.hpp"

using namespace betabounds;

namespace {

double rel_gap(double x, double y) {
  return std::abs(x - y) / (1.0 + std::max(std::abs(x), std::abs(y)));
}

const WeightParams kUnit{0.0, 1.0, 1.0, 1.0};

}  // namespace

TEST_CASE("thm14 values") {
  const auto id = bound_thm14(*find_spec("identity"), kUnit, 1.0);
  CHECK(id.value == Catch::Approx(1.0 / 12.0).epsilon(1e-13));

  // f == -1, m = 1/2: both branches equal -(1 + 1/2) B(3,2) = -1/8.
  const auto neg = bound_thm14(*find_spec("const_neg_one"), kUnit, 0.5);
  CHECK(neg.value == Catch::Approx(-0.125).epsilon(1e-13));
  CHECK(neg.branch == Branch::from_a);  // tie resolves toward from_a

  const auto sq = bound_thm14(*find_spec("square"), kUnit, 1.0);
  CHECK(sq.value == Catch::Approx(1.0 / 12.0).epsilon(1e-13));
}

TEST_CASE("thm15 values") {
  CHECK(bound_thm15(*find_spec("square"), kUnit).value ==
        Catch::Approx(1.0 / 6.0).epsilon(1e-13));
  CHECK(bound_thm15(*find_spec("const_one"), {1.0, 3.0, 1.0, 1.0}).value ==
        Catch::Approx(4.0 / 3.0).epsilon(1e-13));
  const auto id = bound_thm15(*find_spec("identity"), kUnit);
  CHECK(id.value == Catch::Approx(1.0 / 6.0).epsilon(1e-13));
  CHECK(id.branch == Branch::single);
}

TEST_CASE("thm21 values and the alpha = 1 reduction") {
  const auto id = bound_thm21(*find_spec("identity"), kUnit, 1.0, 1.0);
  CHECK(id.value == Catch::Approx(1.0 / 12.0).epsilon(1e-13));

  const auto sq = bound_thm21(*find_spec("square"), kUnit, 1.0, 1.0);
  CHECK(sq.value == Catch::Approx(1.0 / 12.0).epsilon(1e-13));

  for (const char* spec_id : {"identity", "square", "cube", "const_neg_one",
                              "expm1", "exp_neg"}) {
    const auto& spec = *find_spec(spec_id);
    for (double m : {0.25, 0.5, 1.0}) {
      for (const WeightParams w : {WeightParams{0.0, 1.0, 0.5, 3.5},
                                   WeightParams{1.0, 3.0, 2.0, 1.0}}) {
        if (!(w.b / m <= spec.hi)) continue;
        const double t21 = bound_thm21(spec, w, 1.0, m).value;
        const double t14 = bound_thm14(spec, w, m).value;
        INFO(spec_id << " m=" << m << " p=" << w.p << " q=" << w.q);
        CHECK(std::abs(t21 - t14) <= 1e-12 * (1.0 + std::abs(t21)));
      }
    }
  }
}

TEST_CASE("thm22 values") {
  const auto id = bound_thm22(*find_spec("identity"), kUnit, 1.0, 1.0, 2.0);
  CHECK(id.value == Catch::Approx(0.12909944487358056284).epsilon(1e-13));

  const auto one = bound_thm22(*find_spec("const_one"), kUnit, 1.0, 1.0, 2.0);
  CHECK(one.value == Catch::Approx(0.18257418583505537115).epsilon(1e-13));
}

TEST_CASE("thm23 values, l = 1 collapses to thm21") {
  const auto l1 = bound_thm23(*find_spec("identity"), kUnit, 1.0, 1.0, 1.0);
  CHECK(l1.value == Catch::Approx(1.0 / 12.0).epsilon(1e-12));

  const auto l2 = bound_thm23(*find_spec("identity"), kUnit, 1.0, 1.0, 2.0);
  CHECK(l2.value == Catch::Approx(0.11785113019775792073).epsilon(1e-13));

  const auto sq = bound_thm23(*find_spec("square"), kUnit, 1.0, 1.0, 1.0);
  CHECK(sq.value == Catch::Approx(1.0 / 12.0).epsilon(1e-12));
}

TEST_CASE("thm31 and thm32 values") {
  CHECK(bound_thm31(*find_spec("const_one"), kUnit, 2.0).value ==
        Catch::Approx(0.18257418583505537115).epsilon(1e-13));
  CHECK(bound_thm31(*find_spec("identity"), kUnit, 2.0).value ==
        Catch::Approx(0.18257418583505537115).epsilon(1e-13));
  CHECK(bound_thm31(*find_spec("square"), {0.0, 1.0, 2.0, 2.0}, 2.0).value ==
        Catch::Approx(0.039840953644479787999).epsilon(1e-13));

  CHECK(bound_thm32(*find_spec("square"), kUnit, 1.0).value ==
        Catch::Approx(1.0 / 6.0).epsilon(1e-13));
  CHECK(bound_thm32(*find_spec("square"), kUnit, 3.0).value ==
        Catch::Approx(1.0 / 6.0).epsilon(1e-13));
  CHECK(bound_thm32(*find_spec("const_one"), {1.0, 3.0, 1.0, 1.0}, 2.0).value ==
        Catch::Approx(4.0 / 3.0).epsilon(1e-13));
}

TEST_CASE("convex-case displays match the alpha = m = 1 reductions") {
  for (const char* spec_id : {"identity", "square", "exp_neg", "const_neg_one"}) {
    const auto& spec = *find_spec(spec_id);
    for (const WeightParams w : {kUnit, WeightParams{1.0, 3.0, 0.5, 2.0}}) {
      for (double k : {1.5, 2.0, 4.0}) {
        CHECK(rel_gap(bound_thm22(spec, w, 1.0, 1.0, k).value,
                      thm22_convex_display(spec, w, k)) <= 1e-12);
      }
      for (double l : {1.0, 2.0, 3.0}) {
        CHECK(rel_gap(bound_thm23(spec, w, 1.0, 1.0, l).value,
                      thm23_convex_display(spec, w, l)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("p = q corollary display matches the general operation") {
  const auto& spec = *find_spec("square");
  for (double p : {0.5, 1.0, 2.0}) {
    for (double alpha : {0.5, 1.0}) {
      for (double m : {0.5, 1.0}) {
        const WeightParams w{0.0, 1.0, p, p};
        CHECK(rel_gap(bound_thm21(spec, w, alpha, m).value,
                      thm21_symmetric_display(spec, 0.0, 1.0, p, alpha, m)) <=
              1e-12);
      }
    }
  }
}

TEST_CASE("branch symmetry under reflection with p and q swapped") {
  const auto& spec = *find_spec("square");
  const WeightParams w{0.0, 1.0, 1.0, 2.0};
  const double alpha = 0.5;

  FunctionSpec reflected{"reflected", 0.0, 1.0,
                         [&spec](double x) { return spec.eval_fn(1.0 - x); },
                         {}};
  const auto direct = bound_thm21(spec, w, alpha, 1.0);
  const auto mirrored =
      bound_thm21(reflected, {w.a, w.b, w.q, w.p}, alpha, 1.0);
  CHECK(rel_gap(direct.value, mirrored.value) <= 1e-12);
  REQUIRE(direct.branch != mirrored.branch);  // strict min flips sides
}

TEST_CASE("one-branch fallback when the other evaluation point is missing") {
  // expm1 lives on [0, 4]; with [a, b] = [1, 3] and m = 1/2, b/m = 6 is
  // outside but a/m = 2 is fine, so the from_b route still applies.
  const auto& spec = *find_spec("expm1");
  const WeightParams w{1.0, 3.0, 1.0, 1.0};
  CHECK_THROWS_AS(bound_thm21(spec, w, 1.0, 0.5), OutOfDomainError);
  const auto fb = bound_thm21(spec, w, 1.0, 0.5, BranchSelect::from_b_only);
  CHECK(fb.branch == Branch::from_b);
  CHECK(std::isfinite(fb.value));
  CHECK_THROWS_AS(bound_thm21(spec, w, 1.0, 0.5, BranchSelect::from_a_only),
                  OutOfDomainError);
}

TEST_CASE("monotone corollary bounds") {
  const auto dec = bound_monotone_quasi(*find_spec("exp_neg"), kUnit,
                                        ExponentParam::power_l(1.0),
                                        MonotoneDirection::decreasing);
  CHECK(dec.value == Catch::Approx(1.0 / 6.0).epsilon(1e-13));

  const auto inc = bound_monotone_quasi(*find_spec("identity"), kUnit,
                                        ExponentParam::power_l(1.0),
                                        MonotoneDirection::increasing);
  CHECK(inc.value == Catch::Approx(1.0 / 6.0).epsilon(1e-13));

  const auto inc_k = bound_monotone_quasi(*find_spec("identity"), kUnit,
                                          ExponentParam::holder_k(2.0),
                                          MonotoneDirection::increasing);
  CHECK(inc_k.value == Catch::Approx(0.18257418583505537115).epsilon(1e-13));
}

TEST_CASE("monotone corollary equals the max form at argmax agreement") {
  // For sign-safe monotone specimens the max in thm31/thm32 is attained at
  // the predicted endpoint, so the corollary value coincides.
  const WeightParams w13{1.0, 3.0, 2.0, 0.5};
  const auto& id = *find_spec("identity");
  CHECK(rel_gap(bound_monotone_quasi(id, w13, ExponentParam::holder_k(2.0),
                                     MonotoneDirection::increasing)
                    .value,
                bound_thm31(id, w13, 2.0).value) <= 1e-12);

  const auto& dec = *find_spec("exp_neg");
  CHECK(rel_gap(bound_monotone_quasi(dec, kUnit, ExponentParam::power_l(2.0),
                                     MonotoneDirection::decreasing)
                    .value,
                bound_thm32(dec, kUnit, 2.0).value) <= 1e-12);
}

TEST_CASE("monotonicity violations carry a witness pair") {
  try {
    bound_monotone_quasi(*find_spec("neg_bump"), kUnit,
                         ExponentParam::power_l(1.0),
                         MonotoneDirection::increasing);
    FAIL("expected MonotonicityError");
  } catch (const MonotonicityError& e) {
    CHECK(e.witness_x1 >= 0.5);  // first decreasing step is past the peak
    CHECK(e.witness_x2 > e.witness_x1);
  }

  // Constants have no strict trend in either direction.
  CHECK_THROWS_AS(bound_monotone_quasi(*find_spec("const_one"), kUnit,
                                       ExponentParam::power_l(1.0),
                                       MonotoneDirection::increasing),
                  MonotonicityError);
  CHECK_THROWS_AS(bound_monotone_quasi(*find_spec("identity"), kUnit,
                                       ExponentParam::power_l(1.0),
                                       MonotoneDirection::decreasing),
                  MonotonicityError);
}

TEST_CASE("direction scan") {
  CHECK(scan_monotone_direction(*find_spec("identity"), 0.0, 1.0) ==
        MonotoneDirection::increasing);
  CHECK(scan_monotone_direction(*find_spec("exp_neg"), 0.0, 1.0) ==
        MonotoneDirection::decreasing);
  CHECK(!scan_monotone_direction(*find_spec("const_one"), 0.0, 1.0).has_value());
  CHECK(!scan_monotone_direction(*find_spec("neg_bump"), 0.0, 1.0).has_value());
  // piecewise monotone on sub-intervals
  CHECK(scan_monotone_direction(*find_spec("sq_shift"), 0.0, 1.0) ==
        MonotoneDirection::decreasing);
  CHECK(scan_monotone_direction(*find_spec("sq_shift"), 1.0, 3.0) ==
        MonotoneDirection::increasing);
}

TEST_CASE("bound parameter validation") {
  const auto& spec = *find_spec("square");
  CHECK_THROWS_AS(bound_thm21(spec, kUnit, 0.0, 1.0), ParameterError);
  CHECK_THROWS_AS(bound_thm21(spec, kUnit, 1.0, 1.5), ParameterError);
  CHECK_THROWS_AS(bound_thm22(spec, kUnit, 1.0, 1.0, 1.0), ParameterError);
  CHECK_THROWS_AS(bound_thm23(spec, kUnit, 1.0, 1.0, 0.5), ParameterError);
  CHECK_THROWS_AS(bound_thm31(spec, kUnit, 0.9), ParameterError);
  CHECK_THROWS_AS(bound_thm32(spec, kUnit, 0.0), ParameterError);
  CHECK_THROWS_AS(bound_thm15(spec, {0.0, 1.0, -1.0, 1.0}), ParameterError);
  // b/m outside the domain is a hard error, not a silent skip
  CHECK_THROWS_AS(bound_thm14(*find_spec("neg_bump"), kUnit, 0.5),
                  OutOfDomainError);
}
