#include "taut/ce.hpp"

#include <string>

namespace taut {

namespace {

void require_supported(int k) {
  if (k < 3 || k > 5) throw std::invalid_argument("unsupported degree k = " + std::to_string(k));
}

std::string primed(const char* stem, int i) { return stem + std::to_string(i) + "'"; }
std::string plain(const char* stem, int i) { return stem + std::to_string(i); }

}  // namespace

std::vector<Generator> ce_generators(int k) {
  require_supported(k);
  std::vector<Generator> g{{"c2", 2}};
  const int r = k - 1;
  for (int i = 1; i <= r; ++i) g.push_back({plain("a", i), i});
  for (int i = 2; i <= r; ++i) g.push_back({primed("a", i), i - 1});
  if (k == 4) {
    g.push_back({"b2", 2});
    g.push_back({"b2'", 1});
  } else if (k == 5) {
    for (int i = 2; i <= 5; ++i) g.push_back({plain("b", i), i});
    for (int i = 2; i <= 5; ++i) g.push_back({primed("b", i), i - 1});
  }
  return g;
}

GradedPoly CESetup::a1_prime() const {
  if (genus) return GradedPoly::constant(ring, Rational(*genus + k - 1));
  return GradedPoly::generator(ring, "g") + GradedPoly::constant(ring, k - 1);
}

CESetup ce_setup(int k, std::optional<long> genus, int truncation) {
  require_supported(k);
  if (truncation < 2) throw TruncationError("truncation must be at least 2");
  if (genus && *genus < 0) throw std::invalid_argument("genus must be nonnegative");

  RingPtr ring = genus ? RingSpec::create(ce_generators(k), truncation)
                       : RingSpec::create_with_parameters(ce_generators(k), {"g"}, truncation);
  auto fiber = FiberAmbient::create(ring, "c2");
  auto gen = [&](const std::string& n) { return GradedPoly::generator(ring, n); };

  CESetup s{k, genus, ring, fiber, BundleChar::trivial(FiberClass::zero(fiber), 0), std::nullopt, nullptr};
  const GradedPoly a1p = s.a1_prime();

  std::vector<ChernPart> e{{gen("a1"), a1p}};
  for (int i = 2; i <= k - 1; ++i) e.push_back({gen(plain("a", i)), gen(primed("a", i))});
  s.E = chern_from_parts(fiber, e, k - 1);

  if (k == 4) {
    s.F = chern_from_parts(fiber, {{gen("a1"), a1p}, {gen("b2"), gen("b2'")}}, 2);
  } else if (k == 5) {
    std::vector<ChernPart> f{{gen("a1") * Rational(2), a1p * Rational(2)}};
    for (int i = 2; i <= 5; ++i) f.push_back({gen(plain("b", i)), gen(primed("b", i))});
    s.F = chern_from_parts(fiber, f, 5);
  }
  s.curve_ambient = dual_projectivization(s.E);
  return s;
}

ZetaClass curve_class(const CESetup& s) {
  const int top = s.k - 2;
  if (s.truncation() <= top) throw TruncationError("truncation too small for the curve class");
  const auto& amb = s.curve_ambient;
  const ZetaChar detE = pullback(s.E.det(), amb);
  switch (s.k) {
    case 3:
      return -twist_zeta(detE, -3).piece(1);
    case 4: {
      const ZetaChar F = pullback(*s.F, amb);
      return twist_zeta(detE, -4).piece(2) - twist_zeta(F, -2).piece(2);
    }
    default: {
      const ZetaChar F = pullback(*s.F, amb);
      return twist_zeta(F.dual().tensor(detE), -3).piece(3) - twist_zeta(F, -2).piece(3) -
             twist_zeta(detE, -5).piece(3);
    }
  }
}

KappaResult kappa(const CESetup& s, int i) {
  if (i < 0) throw std::invalid_argument("kappa index must be nonnegative");
  if (s.truncation() < kappa_min_truncation(s.k, i)) {
    throw TruncationError("truncation " + std::to_string(s.truncation()) + " too small for kappa_" +
                          std::to_string(i) + " (need " + std::to_string(kappa_min_truncation(s.k, i)) +
                          ")");
  }
  const auto& amb = s.curve_ambient;
  const ZetaClass omega =
      ZetaClass::zeta(amb) - ZetaClass::pullback(amb, FiberClass::z(s.fiber) * Rational(2));
  ZetaClass product = curve_class(s);
  for (int j = 0; j <= i; ++j) product = product * omega;
  return {i, s.k, push_pi(push_gamma(product))};
}

long ce_rank(int i, int k) {
  if (k < 3) throw std::invalid_argument("degree k must be at least 3");
  if (i < 1 || i > k - 2) {
    throw std::invalid_argument("index i = " + std::to_string(i) + " outside 1.." + std::to_string(k - 2));
  }
  if (i == k - 2) return 1;
  const Rational r = Rational(i * (k - 2 - i), k - 1) * binomial(k, i + 1);
  return r.to_long();
}

Presentation presentation(int k, long genus) {
  require_supported(k);
  if (genus < 2) throw std::invalid_argument("genus must be at least 2");
  return {ce_generators(k), genus + k};
}

}  // namespace taut
