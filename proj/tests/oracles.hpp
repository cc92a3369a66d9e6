#pragma once

// Independent recounts used as oracles by unit and acceptance tests: they
// work from raw summand degrees and never call the type constructors.

#include <algorithm>
#include <random>
#include <vector>

#include "taut/bundle.hpp"

namespace oracle {

inline long neg_part(int d) { return d <= -2 ? -d - 1 : 0; }

inline long recount_end(const std::vector<int>& e) {
  long s = 0;
  for (int a : e)
    for (int b : e) s += neg_part(b - a);
  return s;
}

inline long recount4(const std::vector<int>& e, const std::vector<int>& f) {
  long u = 0;
  for (int fj : f)
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = a; b < 3; ++b) u += neg_part(e[a] + e[b] - fj);
  return recount_end(e) + recount_end(f) - u;
}

inline long recount5(const std::vector<int>& e, const std::vector<int>& f, long g) {
  long u = 0;
  for (int ei : e)
    for (std::size_t j = 0; j < 5; ++j)
      for (std::size_t k = j + 1; k < 5; ++k) u += neg_part(static_cast<int>(ei + f[j] + f[k] - g - 4));
  return recount_end(e) + recount_end(f) - u;
}

// Random composition of `total` into `n` sorted parts, each >= lo.
inline std::vector<int> random_parts(std::mt19937& rng, int total, int n, int lo) {
  lo = std::min(lo, total / n);
  std::vector<int> v(static_cast<std::size_t>(n), lo);
  int rest = total - lo * n;
  std::uniform_int_distribution<int> pick(0, n - 1);
  while (rest-- > 0) ++v[static_cast<std::size_t>(pick(rng))];
  std::sort(v.begin(), v.end());
  return v;
}

// Split bundles sum O(L_i) on the P^1-bundle over a base with formal degree-1
// classes x1..x4, c1(L_i) = x_{s_i} + d_i z.
struct SplitBundles {
  taut::RingPtr ring = taut::RingSpec::create({{"x1", 1}, {"x2", 1}, {"x3", 1}, {"x4", 1}}, 5);
  taut::FiberAmbientPtr amb = taut::FiberAmbient::create(ring, taut::GradedPoly(ring));

  struct Line {
    int base = -1;  // index into x1..x4, or -1 for none
    int degree = 0;
  };

  taut::FiberClass c1(const Line& l) const {
    auto c = taut::FiberClass::z(amb) * taut::Rational(l.degree);
    if (l.base >= 0) {
      c = c + taut::FiberClass::pullback(amb, taut::GradedPoly::generator(ring, "x" + std::to_string(l.base + 1)));
    }
    return c;
  }

  taut::BundleChar sum_of(const std::vector<taut::FiberClass>& c1s) const {
    auto s = taut::BundleChar::trivial(taut::FiberClass::zero(amb), 0);
    for (const auto& c : c1s) s = s + taut::BundleChar::line_bundle(c);
    return s;
  }

  taut::BundleChar split(const std::vector<Line>& ls) const {
    std::vector<taut::FiberClass> c1s;
    for (const auto& l : ls) c1s.push_back(c1(l));
    return sum_of(c1s);
  }

  std::vector<Line> random(std::mt19937& rng) const {
    std::uniform_int_distribution<int> rank(1, 4), base(-1, 3), deg(-5, 5);
    std::vector<Line> v(static_cast<std::size_t>(rank(rng)));
    for (auto& l : v) l = {base(rng), deg(rng)};
    return v;
  }

  // Summand enumeration: Sym^2 = sum_{i<=j} L_i L_j, wedge^2 = sum_{i<j},
  // tensor = sum_{i,j}.
  bool check(const std::vector<Line>& a, const std::vector<Line>& b) const {
    std::vector<taut::FiberClass> s2, w2, t;
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = i; j < a.size(); ++j) {
        s2.push_back(c1(a[i]) + c1(a[j]));
        if (j > i) w2.push_back(c1(a[i]) + c1(a[j]));
      }
    for (const auto& x : a)
      for (const auto& y : b) t.push_back(c1(x) + c1(y));
    const auto A = split(a);
    return A.sym2() == sum_of(s2) && A.wedge2() == sum_of(w2) && A.tensor(split(b)) == sum_of(t);
  }
};

}  // namespace oracle
