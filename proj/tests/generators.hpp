#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "taut/pl_opt.hpp"

namespace gen {

// Random bounded program: a box around the origin, a few random cuts that
// keep the origin feasible, random linear part and hinges.
inline taut::PLProgram random_program(std::mt19937& rng) {
  std::uniform_int_distribution<int> nv(1, 3), coef(-4, 4), cnt(0, 3), box(1, 5);
  taut::PLProgram p;
  p.num_vars = nv(rng);
  const auto n = static_cast<std::size_t>(p.num_vars);
  for (std::size_t i = 0; i < n; ++i) {
    taut::RVector up(n, taut::Rational(0)), dn(n, taut::Rational(0));
    up[i] = 1;
    dn[i] = -1;
    p.inequalities.push_back({up, taut::Rational(box(rng))});
    p.inequalities.push_back({dn, taut::Rational(box(rng))});
  }
  auto rvec = [&] {
    taut::RVector v(n);
    for (auto& x : v) x = taut::Rational(coef(rng), std::uniform_int_distribution<int>(1, 3)(rng));
    return v;
  };
  for (int k = cnt(rng); k > 0; --k) {
    taut::RVector a = rvec();
    // passes through a neighbourhood of the origin, so the region stays nonempty
    p.inequalities.push_back({a, taut::Rational(std::uniform_int_distribution<int>(0, 3)(rng))});
  }
  if (n >= 2 && cnt(rng) == 0) {
    taut::RVector a = rvec();
    p.equalities.push_back({a, taut::Rational(0)});
  }
  p.linear = rvec();
  p.constant = taut::Rational(coef(rng), 2);
  for (int k = cnt(rng); k > 0; --k) {
    p.hinges.push_back({coef(rng) >= 0 ? 1 : -1, rvec(), taut::Rational(coef(rng), 2)});
  }
  return p;
}

inline std::vector<int> random_sorted(std::mt19937& rng, int total, int n, int lo) {
  const int room = total - n * lo;
  std::uniform_int_distribution<int> cut(0, room);
  std::vector<int> cuts{0, room};
  for (int i = 0; i < n - 1; ++i) cuts.push_back(cut(rng));
  std::sort(cuts.begin(), cuts.end());
  std::vector<int> v;
  for (int i = 0; i < n; ++i) v.push_back(lo + cuts[static_cast<std::size_t>(i + 1)] - cuts[static_cast<std::size_t>(i)]);
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace gen
