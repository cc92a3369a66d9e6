#include <doctest.h>

#include <algorithm>
#include <random>

#include "generators.hpp"
#include "taut/pl_opt.hpp"
#include "taut/splitting.hpp"

using namespace taut;

namespace {

RVector R(std::initializer_list<Rational> v) { return RVector(v); }

Rational Q(long p, long q = 1) { return Rational(p, q); }

bool contains(const std::vector<RVector>& pts, const RVector& x) {
  return std::find(pts.begin(), pts.end(), x) != pts.end();
}

const RVector kArgmin4 = R({Q(1, 4), Q(3, 8), Q(3, 8), Q(1, 2), Q(1, 2)});
const RVector kArgmin5 = R({Q(1, 5), Q(4, 15), Q(4, 15), Q(4, 15), Q(2, 5), Q(2, 5), Q(2, 5), Q(2, 5), Q(2, 5)});

PLProgram interval() {
  PLProgram p;
  p.num_vars = 1;
  p.inequalities = {{R({-1}), 0}, {R({1}), 1}};
  p.linear = R({1});
  return p;
}

using gen::random_program;
using gen::random_sorted;

}  // namespace

TEST_CASE("preset shapes") {
  CHECK(preset_names().size() == 4);
  const auto b4 = preset("lemma_b4");
  CHECK(b4.num_vars == 5);
  CHECK(b4.equalities.size() == 2);
  CHECK(b4.hinges.empty());
  const auto c4 = preset("lemma_coh4");
  CHECK(c4.num_vars == 5);
  CHECK(c4.hinges.size() == 2);
  for (const auto& h : c4.hinges) CHECK(h.sign == -1);
  CHECK(preset("lemma_b5circ").num_vars == 9);
  const auto c5 = preset("lemma_coh5");
  CHECK(c5.num_vars == 9);
  CHECK(c5.hinges.size() == 11);
  for (const auto& h : c5.hinges) CHECK(h.sign == -1);
  CHECK_THROWS_AS(preset("lemma_b6"), std::invalid_argument);
}

TEST_CASE("degree-4 minima") {
  for (const char* name : {"lemma_b4", "lemma_coh4"}) {
    CAPTURE(name);
    const auto p = preset(name);
    const auto s = solve(p);
    CHECK(s.min_value == Q(1, 4));
    CHECK(contains(s.argmin_points, kArgmin4));
    CHECK(std::is_sorted(s.argmin_points.begin(), s.argmin_points.end()));
    for (const auto& x : s.argmin_points) {
      CHECK(is_feasible(p, x));
      CHECK(evaluate(p, x) == s.min_value);
    }
  }
}

TEST_CASE("degree-5 minima") {
  for (const char* name : {"lemma_b5circ", "lemma_coh5"}) {
    CAPTURE(name);
    const auto p = preset(name);
    const auto s = solve(p);
    CHECK(s.min_value == Q(1, 5));
    CHECK(contains(s.argmin_points, kArgmin5));
    for (const auto& x : s.argmin_points) {
      CHECK(is_feasible(p, x));
      CHECK(evaluate(p, x) == s.min_value);
    }
  }
}

TEST_CASE("trivial interval program") {
  const auto s = solve(interval());
  CHECK(s.min_value == 0);
  REQUIRE(s.argmin_points.size() == 1);
  CHECK(s.argmin_points[0] == R({0}));
  CHECK(sample_check(interval(), 100, 1) >= 0);
}

TEST_CASE("serial and parallel solvers agree") {
  for (const auto& name : preset_names()) {
    CAPTURE(name);
    const auto p = preset(name);
    const auto a = solve(p);
    const auto b = solve_serial(p);
    CHECK(a.min_value == b.min_value);
    CHECK(a.argmin_points == b.argmin_points);
    CHECK(a.candidates_examined == b.candidates_examined);
  }
  std::mt19937 rng(3);
  for (int i = 0; i < 50; ++i) {
    const auto p = random_program(rng);
    try {
      const auto a = solve(p);
      const auto b = solve_serial(p);
      CHECK(a.min_value == b.min_value);
      CHECK(a.argmin_points == b.argmin_points);
    } catch (const InfeasibleError&) {
      CHECK_THROWS_AS(solve_serial(p), InfeasibleError);
    }
  }
}

TEST_CASE("sampling never undercuts the exact minimum") {
  for (const auto& name : preset_names()) {
    CAPTURE(name);
    const auto p = preset(name);
    const auto min = solve(p).min_value;
    CHECK(sample_check(p, 2000, 11) >= min);
  }
  CHECK(sample_check(preset("lemma_b4"), 10000, 7) >= Q(1, 4));
  CHECK_THROWS_AS(sample_check(interval(), 0, 1), std::invalid_argument);
}

TEST_CASE("argmin fed back reproduces the minimum") {
  auto p = interval();
  const auto s = solve(p);
  // pin the variable to the argmin: the feasible set is that single point
  p.equalities.push_back({R({1}), s.argmin_points[0][0]});
  CHECK(sample_check(p, 5, 2) == s.min_value);
  const auto b4 = preset("lemma_b4");
  CHECK(evaluate(b4, kArgmin4) == Q(1, 4));
}

TEST_CASE("redundant constraints and objective scaling") {
  std::mt19937 rng(99);
  int solved = 0;
  for (int trial = 0; trial < 100; ++trial) {
    CAPTURE(trial);
    const auto p = random_program(rng);
    PLSolution base;
    try {
      base = solve(p);
    } catch (const InfeasibleError&) {
      continue;
    }
    ++solved;
    for (const auto& x : base.argmin_points) CHECK(evaluate(p, x) == base.min_value);

    // the sum of the first two box rows is implied by them
    auto red = p;
    LinearConstraint sum = p.inequalities[0];
    for (std::size_t i = 0; i < sum.coeffs.size(); ++i) sum.coeffs[i] += p.inequalities[1].coeffs[i];
    sum.rhs += p.inequalities[1].rhs;
    red.inequalities.push_back(sum);
    // and a loose copy of an existing row
    LinearConstraint loose = p.inequalities.back();
    loose.rhs += 3;
    red.inequalities.push_back(loose);
    CHECK(solve(red).min_value == base.min_value);

    const Rational lambda = Q(std::uniform_int_distribution<int>(1, 9)(rng), 4);
    auto scaled = p;
    for (auto& c : scaled.linear) c *= lambda;
    scaled.constant *= lambda;
    for (auto& h : scaled.hinges) {
      for (auto& c : h.coeffs) c *= lambda;
      h.rhs *= lambda;
    }
    const auto s = solve(scaled);
    CHECK(s.min_value == lambda * base.min_value);
    CHECK(s.argmin_points == base.argmin_points);
  }
  CHECK(solved >= 80);
}

TEST_CASE("infeasible and unbounded programs") {
  PLProgram p;
  p.num_vars = 1;
  p.linear = R({1});
  p.inequalities = {{R({1}), -1}, {R({-1}), -1}};
  CHECK_THROWS_AS(solve(p), InfeasibleError);

  p.inequalities = {{R({-1}), 0}};
  CHECK_THROWS_AS(solve(p), UnboundedError);

  PLProgram line;
  line.num_vars = 2;
  line.linear = R({1, 0});
  line.inequalities = {{R({1, -1}), 0}, {R({-1, 1}), 0}};
  CHECK_THROWS_AS(solve(line), UnboundedError);

  PLProgram clash;
  clash.num_vars = 2;
  clash.linear = R({0, 0});
  clash.equalities = {{R({1, 1}), 1}, {R({2, 2}), 3}};
  CHECK_THROWS_AS(solve(clash), InfeasibleError);

  PLProgram bad;
  bad.num_vars = 2;
  bad.linear = R({1});
  CHECK_THROWS_AS(solve(bad), std::invalid_argument);

  // b4 region without y1 >= 0 lets y1 run to -infinity
  auto open = preset("lemma_b4");
  open.inequalities.erase(open.inequalities.begin() + 3);
  CHECK_THROWS_AS(solve(open), UnboundedError);
}

TEST_CASE("program json round trip") {
  for (const auto& name : preset_names()) {
    const auto p = preset(name);
    const auto j = program_to_json(p);
    const auto back = program_from_json(j);
    CHECK(program_to_json(back) == j);
  }
  const auto j = nlohmann::json::parse(
      R"({"vars": 1, "le": [[-1, 0], [1, "3/2"]], "obj": {"lin": [1], "const": "1/3",
          "hinges": [{"sign": -1, "coeffs": [2], "rhs": 1}]}})");
  const auto p = program_from_json(j);
  const auto s = solve(p);
  // x + 1/3 - max(0, 2x - 1) on [0, 3/2]: 1/3 at 0, 5/6 at 1/2, -1/6 at 3/2
  CHECK(s.min_value == Q(-1, 6));
  CHECK(s.argmin_points == std::vector<RVector>{R({Q(3, 2)})});
  CHECK(program_to_json(p)["obj"]["const"] == "1/3");
  CHECK_THROWS_AS(program_from_json(nlohmann::json::parse(R"({"vars": 2, "le": [[1, 0]]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(program_from_json(nlohmann::json::parse(R"({"le": []})")), std::invalid_argument);
  CHECK(format_point(kArgmin4) == "(1/4, 3/8, 3/8, 1/2, 1/2)");
}

TEST_CASE("codimension bounds") {
  CHECK(bound(4, 19, BoundCase::B_circ) == Q(3, 2));
  CHECK(bound(5, 104, BoundCase::H_circ) == Q(28, 5));
  for (long g : {2L, 5L, 13L, 29L, 61L, 100L, 257L, 1000L, 4099L, 100000L}) {
    CAPTURE(g);
    for (auto c : {BoundCase::B_circ, BoundCase::H_circ}) {
      CHECK(bound(4, g, c) == Q(g + 3, 4) - 4);
      CHECK(bound(5, g, c) == Q(g + 4, 5) - 16);
    }
  }
  CHECK(parse_bound_case("H_circ") == BoundCase::H_circ);
  CHECK(to_string(BoundCase::B_circ) == "B_circ");
  CHECK_THROWS_AS(parse_bound_case("H"), std::invalid_argument);
  CHECK_THROWS_AS(bound(3, 10, BoundCase::B_circ), std::invalid_argument);
  CHECK_THROWS_AS(bound(4, 1, BoundCase::B_circ), std::invalid_argument);
}

TEST_CASE("splitting-type codimensions respect the bounds") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> genus(20, 400);
  const auto T = [](std::vector<int> v) { return SplittingType(std::move(v)); };

  int b4 = 0, coh4 = 0;
  for (int attempt = 0; attempt < 200000 && (b4 < 100 || coh4 < 100); ++attempt) {
    const int g = genus(rng);
    const auto e = random_sorted(rng, g + 3, 3, 0);
    const auto f = random_sorted(rng, g + 3, 2, 0);
    if (2 * e[0] > f[1]) continue;
    const Rational floor4 = Q(g + 3, 4) - 4;
    if (b4 < 100) {
      ++b4;
      CHECK(Rational(codim_simultaneous(T(e), T(f))) >= floor4);
    }
    if (coh4 < 100 && constraints_4(T(e), T(f)).non_factoring_ok()) {
      ++coh4;
      CHECK(Rational(codim_hurwitz4(T(e), T(f))) >= floor4);
    }
  }
  CHECK(b4 == 100);
  CHECK(coh4 == 100);

  int b5 = 0, coh5 = 0, beyond = 0;
  for (int attempt = 0; attempt < 2000000 && (b5 < 100 || coh5 < 100); ++attempt) {
    const int g = genus(rng);
    const auto e = random_sorted(rng, g + 4, 4, 0);
    const auto f = random_sorted(rng, 2 * g + 8, 5, 0);
    if (e[0] + f[0] + f[1] > g + 4) continue;
    const Rational floor5 = Q(g + 4, 5) - 16;
    if (b5 < 100) {
      ++b5;
      CHECK(Rational(codim_simultaneous(T(e), T(f))) >= floor5);
    }
    if (coh5 < 100 && constraints_5(T(e), T(f), g).pfaffian_ok()) {
      ++coh5;
      // h1 of the 11 summands (f_a, f_b, e_i) allowed to go negative
      long allowed = 0;
      bool confined = true;
      for (std::size_t a = 0; a < 5; ++a)
        for (std::size_t b = a + 1; b < 5; ++b)
          for (std::size_t i = 0; i < 4; ++i) {
            const long d = f[a] + f[b] + e[i] - (g + 4);
            const bool listed = (a == 0 && b == 1) || (a == 0 && b == 2 && i < 3) ||
                                (a == 0 && b == 3 && i < 2) || (a == 1 && b == 2 && i < 2);
            if (listed) allowed += std::max(0L, -d - 1);
            if (!listed && d <= -2) confined = false;
          }
      const long u11 = codim_simultaneous(T(e), T(f)) - allowed;
      CHECK(Rational(u11) >= floor5);
      const long u = codim_hurwitz5(T(e), T(f), g);
      if (confined) {
        CHECK(u == u11);
      } else {
        CHECK(u < u11);
      }
      if (Rational(u) < floor5) {
        CHECK(!confined);
        ++beyond;
      }
    }
  }
  CHECK(b5 == 100);
  CHECK(coh5 == 100);
  MESSAGE("Pfaffian-admissible pairs below the degree-5 bound, all with h1 outside the 11 positions: "
          << beyond);
}
