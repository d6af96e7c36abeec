#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "quartic/classifier.hpp"
#include "quartic/error.hpp"
#include "quartic/oracle.hpp"
#include "support/oracles.hpp"

using namespace quartic;

namespace {

std::vector<double> root_values(Classification const& c) {
  std::vector<double> out;
  for (auto const& r : c.roots) out.push_back(r.t);
  return out;
}

double residual_limit(DepressedQuartic const& P) {
  double const b = cauchy_root_bound(P);
  return 1e-8 * (1.0 + b * b * b * b);
}

}  // namespace

TEST_CASE("four real roots, three interior and one exterior") {
  auto const c = classify({-25.0, -60.0, -36.0});
  CHECK(c.n_int == 3);
  CHECK(c.n_ext == 1);
  CHECK(c.n_real_distinct == 4);
  CHECK(c.n_real_multiplicity == 4);
  CHECK(c.case_label == CaseLabel::kFourReal);
  auto const roots = root_values(c);
  REQUIRE(roots.size() == 4);
  double const expected[] = {-3.0, -2.0, -1.0, 6.0};
  for (int i = 0; i < 4; ++i) CHECK(std::abs(roots[i] - expected[i]) <= 1e-8);
  CHECK(c.roots[3].origin == RootOrigin::kExterior);
  CHECK(c.roots[0].origin == RootOrigin::kInterior);
}

TEST_CASE("all complex through the sufficient condition") {
  auto const c = classify({-2.0, 0.0, 3.0});
  CHECK(c.n_real_distinct == 0);
  CHECK(c.case_label == CaseLabel::kAllComplex);
  CHECK(c.sufficient_all_complex);
  CHECK(c.roots.empty());
}

TEST_CASE("t^4 - 4t^2 + t + 1 has four real roots") {
  // Reference roots from mpmath polyroots at 40 digits.
  auto const c = classify({-4.0, 1.0, 1.0});
  CHECK(c.trig->a == 1.0);
  CHECK(c.trig->b == -0.5);
  CHECK(c.n_int == 3);
  CHECK(c.n_ext == 1);
  CHECK(c.n_real_distinct == 4);
  CHECK(c.case_label == CaseLabel::kFourReal);
  double const expected[] = {-2.0614988506846422183, -0.39633853101445311028,
                             0.6938224565045130581, 1.7640149251945822705};
  auto const roots = root_values(c);
  REQUIRE(roots.size() == 4);
  for (int i = 0; i < 4; ++i) CHECK(std::abs(roots[i] - expected[i]) <= 1e-8);
  CHECK(oracle::sturm_count({-4.0, 1.0, 1.0}) == 4);
}

TEST_CASE("two-real cases a, b and c") {
  // f < 0 throughout: b = -5, a = 1.
  auto const a_case = classify({-1.0, 1.0 / 8.0, -4.0 / 8.0});
  CHECK(a_case.case_label == CaseLabel::kTwoRealA);
  CHECK(a_case.n_ext == 2);
  CHECK(a_case.sufficient_two_real_outside);

  // (t - 0.5)(t - 0.3)((t + 0.4)^2 + 0.04): both real roots inside u = 0.5385.
  DepressedQuartic const b_quartic{-0.29, -0.04, 0.03};
  auto const b_case = classify(b_quartic);
  REQUIRE(oracle::sturm_count(b_quartic) == 2);
  CHECK(b_case.n_int == 2);
  CHECK(b_case.n_ext == 0);
  CHECK(b_case.case_label == CaseLabel::kTwoRealB);

  // (t - 2)(t + 1)(t^2 + t + 1) = t^4 - 2t^2 - 3t - 2: u = sqrt(2) puts -1
  // inside and 2 outside.
  auto const c_case = classify({-2.0, -3.0, -2.0});
  CHECK(c_case.n_int == 1);
  CHECK(c_case.n_ext == 1);
  CHECK(c_case.case_label == CaseLabel::kTwoRealC);
  auto const roots = root_values(c_case);
  REQUIRE(roots.size() == 2);
  CHECK(std::abs(roots[0] - -1.0) <= 1e-10);
  CHECK(std::abs(roots[1] - 2.0) <= 1e-10);
}

TEST_CASE("find_exterior_root") {
  CHECK(std::abs(find_exterior_root({-25.0, -60.0, -36.0}, Side::kRight) - 6.0) <=
        1e-12);
  CHECK(std::abs(find_exterior_root({-4.0, 1.0, 1.0}, Side::kLeft) -
                 -2.0614988506846422183) <= 1e-12);
  // t^4 - t^2 - 1: s = t^2 solves s^2 - s - 1 = 0, so t = sqrt(golden ratio).
  double const golden = (1.0 + std::sqrt(5.0)) / 2.0;
  CHECK(std::abs(find_exterior_root({-1.0, 0.0, -1.0}, Side::kRight) -
                 std::sqrt(golden)) <= 1e-12);

  try {
    find_exterior_root({-2.0, 0.0, 3.0}, Side::kRight);
    FAIL("expected an internal-logic error");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::kInternalLogic);
  }
  CHECK_THROWS_AS(find_exterior_root({1.0, 0.0, -1.0}, Side::kRight), Error);
}

TEST_CASE("m >= 0 follows the global-convexity path") {
  auto const none = classify_m_nonneg({1.0, 0.0, 1.0});
  CHECK(none.n_real_distinct == 0);
  CHECK(none.case_label == CaseLabel::kMNonNegConvex);
  CHECK_FALSE(none.trig.has_value());

  auto const two = classify_m_nonneg({0.0, 0.0, -1.0});
  CHECK(two.n_real_distinct == 2);
  REQUIRE(two.roots.size() == 2);
  CHECK(std::abs(two.roots[0].t + 1.0) <= 1e-12);
  CHECK(std::abs(two.roots[1].t - 1.0) <= 1e-12);
  CHECK(two.roots[0].origin == RootOrigin::kConvexPath);

  auto const touch = classify_m_nonneg({2.0, 0.0, 0.0});
  CHECK(touch.case_label == CaseLabel::kDegenerate);
  CHECK(touch.n_real_distinct == 1);
  CHECK(touch.n_real_multiplicity == 2);
  REQUIRE(touch.roots.size() == 1);
  CHECK(touch.roots[0].t == 0.0);
  REQUIRE(touch.diagnostics.size() == 1);
  CHECK(touch.diagnostics[0].quantity == "P(t*)");

  // classify routes m >= 0 here, including m = 0.
  CHECK(classify({0.0, 0.0, -1.0}).n_real_distinct == 2);
  CHECK(classify({0.0, 0.0, 0.0}).n_real_multiplicity == 4);

  try {
    classify_m_nonneg({-1.0, 0.0, 0.0});
    FAIL("expected kWrongPath");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::kWrongPath);
  }
}

TEST_CASE("m > 0 with an odd term still has its roots located") {
  testing::Rng rng(31);
  for (int i = 0; i < 300; ++i) {
    DepressedQuartic const P{rng.uniform(0.0, 10.0), rng.uniform(-10, 10),
                             rng.uniform(-10, 10)};
    auto const c = classify(P);
    REQUIRE(c.n_real_distinct == oracle::sturm_count(P));
    for (auto const& r : c.roots) {
      REQUIRE(std::abs(eval_quartic(P, r.t)) <= residual_limit(P));
    }
  }
}

TEST_CASE("biquadratic route") {
  auto const none = classify_biquadratic({-2.0, 0.0, 3.0});
  CHECK(none.n_real_distinct == 0);

  auto const merged_centre = classify_biquadratic({-2.0, 0.0, 0.0});
  CHECK(merged_centre.case_label == CaseLabel::kDegenerate);
  CHECK(merged_centre.n_real_distinct == 3);
  CHECK(merged_centre.n_real_multiplicity == 4);
  REQUIRE(merged_centre.roots.size() == 3);
  CHECK(std::abs(merged_centre.roots[0].t + std::sqrt(2.0)) <= 1e-12);
  CHECK(std::abs(merged_centre.roots[1].t) <= 1e-12);
  CHECK(merged_centre.roots[1].multiplicity == 2);
  CHECK(std::abs(merged_centre.roots[2].t - std::sqrt(2.0)) <= 1e-12);

  auto const merged_pairs = classify_biquadratic({-2.0, 0.0, 1.0});
  CHECK(merged_pairs.case_label == CaseLabel::kDegenerate);
  CHECK(merged_pairs.n_real_distinct == 2);
  CHECK(merged_pairs.n_real_multiplicity == 4);
  REQUIRE(merged_pairs.roots.size() == 2);
  CHECK(std::abs(merged_pairs.roots[0].t + 1.0) <= 1e-12);
  CHECK(std::abs(merged_pairs.roots[1].t - 1.0) <= 1e-12);

  auto const convex = classify_biquadratic({1.0, 0.0, -2.0});
  CHECK(convex.n_real_distinct == 2);
  CHECK(std::abs(convex.roots[1].t - 1.0) <= 1e-12);

  CHECK_THROWS_AS(classify_biquadratic({-2.0, 0.5, 1.0}), Error);
}

TEST_CASE("biquadratic route agrees with the segment route") {
  testing::Rng rng(41);
  for (int i = 0; i < 500; ++i) {
    double const m = rng.uniform(-10.0, 10.0);
    double const q = rng.uniform(-10.0, 30.0);
    DepressedQuartic const P{m, 0.0, q};
    auto const general = classify(P);
    auto const closed = classify_biquadratic(P);
    REQUIRE(general.n_real_distinct == closed.n_real_distinct);
    REQUIRE(general.n_real_multiplicity == closed.n_real_multiplicity);
    REQUIRE(general.roots.size() == closed.roots.size());
    for (std::size_t k = 0; k < general.roots.size(); ++k) {
      REQUIRE(std::abs(general.roots[k].t - closed.roots[k].t) <= 1e-8);
    }
  }
}

TEST_CASE("sufficient conditions of the classification") {
  testing::Rng rng(43);
  for (int i = 0; i < 500; ++i) {
    double const a = rng.uniform(-30.0, 30.0);
    double const margin = rng.uniform(1e-6, 20.0);
    for (double b : {std::abs(a) + 1.0 + margin, -(std::abs(a) + 1.0 + margin)}) {
      DepressedQuartic const P{-1.0, a / 8.0, (b + 1.0) / 8.0};
      auto const c = classify(P);
      if (b > 0.0) {
        REQUIRE(c.case_label == CaseLabel::kAllComplex);
      } else {
        REQUIRE(c.n_real_distinct == 2);
        REQUIRE(c.n_ext == 2);
        REQUIRE(c.case_label == CaseLabel::kTwoRealA);
      }
    }
  }
}

TEST_CASE("two exterior roots on one side when f > 0 throughout") {
  // u = 1.0554 and a = -31.68: f(0) > 0, but P'(u) < 0 and P dips below zero
  // beyond u.
  DepressedQuartic const P{-1.113793103448276, -4.6551724137931032, 5.0};
  auto const c = classify(P);
  CHECK(c.boundary->at_zero > 0.0);
  CHECK(c.boundary->at_pi > 0.0);
  CHECK(c.n_int == 0);
  CHECK(c.n_ext == 2);
  CHECK(c.n_real_distinct == 2);
  CHECK(c.case_label == CaseLabel::kTwoRealExteriorPair);
  CHECK(oracle::sturm_count(P) == 2);
  auto const roots = root_values(c);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == doctest::Approx(1.0976174887).epsilon(1e-9));
  CHECK(roots[1] == doctest::Approx(1.3466757193).epsilon(1e-9));

  auto const mirrored = classify({P.m, -P.p, P.q});
  CHECK(mirrored.case_label == CaseLabel::kTwoRealExteriorPair);
  auto const left = root_values(mirrored);
  REQUIRE(left.size() == 2);
  CHECK(left[0] == doctest::Approx(-roots[1]).epsilon(1e-12));
  CHECK(left[1] == doctest::Approx(-roots[0]).epsilon(1e-12));
}

TEST_CASE("a double root beyond u is flagged") {
  // (t - 1.2)^2 (t^2 + 2.4 t + 4)
  DepressedQuartic const P{-0.32, -6.144, 5.76};
  auto const c = classify(P);
  CHECK(c.degenerate());
  CHECK(c.n_ext == 1);
  CHECK(c.n_real_multiplicity == 2);
  REQUIRE(c.roots.size() == 1);
  CHECK(c.roots[0].t == doctest::Approx(1.2).epsilon(1e-6));
  CHECK(c.roots[0].multiplicity == 2);
  REQUIRE_FALSE(c.diagnostics.empty());
  CHECK(c.diagnostics[0].quantity == "f(t_ext) right");
}

TEST_CASE("b > |a| + 1 does not exclude real roots once |a| is large") {
  // m = -1, a = -100, b = 102.
  DepressedQuartic const P{-1.0, -12.5, 12.875};
  auto const c = classify(P);
  CHECK(c.sufficient_all_complex);
  CHECK(c.case_label == CaseLabel::kTwoRealExteriorPair);
  CHECK(c.n_real_distinct == oracle::sturm_count(P));
  CHECK(c.n_real_distinct == 2);
}

TEST_CASE("small |m| with large a and b agrees with the Sturm count") {
  testing::Rng rng(59);
  int compared = 0;
  for (double m : {-0.5, -1e-3, -1e-6}) {
    for (int i = 0; i < 300; ++i) {
      DepressedQuartic const P{m, rng.uniform(-2, 2), rng.uniform(-2, 2)};
      if (oracle::run_oracle(P).degeneracy_margin < 1e-4) continue;
      auto const c = classify(P);
      CAPTURE(P.m);
      CAPTURE(P.p);
      CAPTURE(P.q);
      REQUIRE(c.n_real_distinct == oracle::sturm_count(P));
      ++compared;
    }
  }
  CHECK(compared > 600);
}

TEST_CASE("classification invariants over random quartics") {
  testing::Rng rng(47);
  for (int i = 0; i < 2000; ++i) {
    DepressedQuartic const P{rng.uniform(-10, -0.01), rng.uniform(-10, 10),
                             rng.uniform(-10, 10)};
    auto const c = classify(P);
    REQUIRE(c.n_real_distinct == c.n_int + c.n_ext);
    int with_multiplicity = 0;
    for (auto const& r : c.roots) with_multiplicity += r.multiplicity;
    REQUIRE(c.n_real_multiplicity == with_multiplicity);
    REQUIRE(c.n_real_distinct <= 4);
    REQUIRE(static_cast<int>(c.roots.size()) == c.n_real_distinct);
    double const bound = cauchy_root_bound(P);
    double largest = 0.0;
    double sum = 0.0;
    for (auto const& r : c.roots) {
      REQUIRE(std::abs(eval_quartic(P, r.t)) <= residual_limit(P));
      REQUIRE(std::abs(r.t) <= bound);
      largest = std::max(largest, std::abs(r.t));
      sum += r.t;
    }
    REQUIRE(std::is_sorted(c.roots.begin(), c.roots.end(),
                           [](RealRoot const& l, RealRoot const& r) { return l.t < r.t; }));
    if (!c.degenerate()) {
      REQUIRE(c.n_real_distinct % 2 == 0);
      REQUIRE(c.n_real_distinct == oracle::sturm_count(P));
    }
    if (c.case_label == CaseLabel::kFourReal) {
      REQUIRE(std::abs(sum) <= 1e-7 * (1.0 + largest));
    }
  }
}

TEST_CASE("classification is invariant under t -> s t scaling") {
  testing::Rng rng(53);
  for (int i = 0; i < 300; ++i) {
    DepressedQuartic const P{rng.uniform(-10, -0.1), rng.uniform(-10, 10),
                             rng.uniform(-10, 10)};
    // Powers of two keep the scaled coefficients exact.
    double const s = std::ldexp(1.0, static_cast<int>(rng.uniform(-6, 6)));
    DepressedQuartic const scaled{P.m / (s * s), P.p / (s * s * s),
                                  P.q / (s * s * s * s)};
    auto const c = classify(P);
    auto const cs = classify(scaled);
    REQUIRE(c.trig->a == cs.trig->a);
    REQUIRE(c.trig->b == cs.trig->b);
    REQUIRE(c.n_real_distinct == cs.n_real_distinct);
    REQUIRE(c.case_label == cs.case_label);
  }
}

TEST_CASE("degenerate inputs report which quantity was near zero") {
  // (t - 1/2)^2 (t^2 + t - 3): double root at 1/2.
  auto const c = classify({-3.75, 3.25, -0.75});
  CHECK(c.case_label == CaseLabel::kDegenerate);
  CHECK(c.n_real_distinct == 3);
  CHECK(c.n_real_multiplicity == 4);
  REQUIRE_FALSE(c.diagnostics.empty());
  CHECK(c.diagnostics[0].quantity == "f(theta_c)");
  CHECK(std::abs(c.diagnostics[0].value) <= c.diagnostics[0].tolerance);

  // Root exactly at t = u is owned by the interior count, never doubled.
  auto const boundary = classify({-4.0, 0.0, 0.0});
  CHECK(boundary.n_ext == 0);
  CHECK(boundary.n_int == 3);
}

TEST_CASE("roots map back to original coordinates") {
  // (z - 1)(z - 2)(z - 3)(z - 4)
  auto const P = depress({-10.0, 35.0, -50.0, 24.0});
  CHECK(P.shift == -2.5);
  auto const c = classify(P);
  REQUIRE(c.roots.size() == 4);
  for (int i = 0; i < 4; ++i) {
    CHECK(std::abs(c.roots[i].z - (i + 1.0)) <= 1e-10);
  }
}
