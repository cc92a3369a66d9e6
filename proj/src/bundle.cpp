#include "taut/bundle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace taut {

BundleChar chern_from_parts(const FiberAmbientPtr& ambient, const std::vector<ChernPart>& parts,
                            int rank) {
  if (rank < 0) throw std::invalid_argument("negative rank");
  if (static_cast<int>(parts.size()) > rank) {
    throw std::invalid_argument("more Chern classes than the rank allows");
  }
  std::vector<FiberClass> chern;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const int deg = static_cast<int>(i) + 1;
    const auto& [a, a_prime] = parts[i];
    if (!a.is_homogeneous(deg)) {
      throw std::invalid_argument("a" + std::to_string(deg) + " is not of degree " + std::to_string(deg));
    }
    if (!a_prime.is_homogeneous(deg - 1)) {
      throw std::invalid_argument("a" + std::to_string(deg) + "' is not of degree " +
                                  std::to_string(deg - 1));
    }
    chern.emplace_back(ambient, a, a_prime);
  }
  return BundleChar::from_chern(FiberClass::constant(ambient, rank), chern);
}

std::vector<FiberClass> chern_of(const BundleChar& b) {
  auto c = b.chern();
  if (auto r = b.rank(); r && r->is_integer() && r->sign() >= 0) {
    const auto keep = std::min<std::size_t>(c.size(), static_cast<std::size_t>(r->to_long()));
    c.resize(keep, b.rank_class().zero_like());
  }
  return c;
}

BundleChar twist_z(const BundleChar& b, int n) {
  const auto& amb = b.rank_class().ambient();
  return b.tensor(BundleChar::line_bundle(FiberClass::z(amb) * Rational(n)));
}

ZetaChar twist_zeta(const ZetaChar& b, int n) {
  const auto& amb = b.rank_class().ambient();
  return b.tensor(ZetaChar::line_bundle(ZetaClass::zeta(amb) * Rational(n)));
}

ZetaChar pullback(const BundleChar& b, const ZetaAmbientPtr& ambient) {
  std::vector<ZetaClass> p;
  p.reserve(b.pieces().size());
  for (const auto& x : b.pieces()) p.push_back(ZetaClass::pullback(ambient, x));
  return ZetaChar(std::move(p));
}

ZetaAmbientPtr dual_projectivization(const BundleChar& E) {
  const auto r = E.rank();
  if (!r || !r->is_integer() || r->sign() <= 0) {
    throw std::invalid_argument("projectivization needs a bundle of constant positive rank");
  }
  auto relation = chern_of(E.dual());
  // Classes of degree >= D vanish in the truncated ring.
  relation.resize(static_cast<std::size_t>(r->to_long()), E.rank_class().zero_like());
  return ZetaAmbient::create(E.rank_class().ambient(), std::move(relation));
}

std::vector<Rational> todd_series(int order) {
  // (1 - e^{-x}) / x = sum_n (-1)^n x^n / (n+1)!
  std::vector<Rational> g;
  for (int n = 0; n < order; ++n) {
    Rational c = Rational(1) / factorial(static_cast<unsigned>(n + 1));
    g.push_back(n % 2 ? -c : c);
  }
  std::vector<Rational> t;
  for (int n = 0; n < order; ++n) {
    Rational acc = n == 0 ? Rational(1) : Rational(0);
    for (int i = 1; i <= n; ++i) acc -= g[static_cast<std::size_t>(i)] * t[static_cast<std::size_t>(n - i)];
    t.push_back(acc / g[0]);
  }
  return t;
}

FiberClass relative_todd(const FiberAmbientPtr& ambient) {
  const int D = ambient->truncation();
  const auto t = todd_series(D);
  const FiberClass x = FiberClass::z(ambient) * Rational(2);
  FiberClass power = FiberClass::constant(ambient, 1);
  FiberClass td = FiberClass::zero(ambient);
  for (int n = 0; n < D; ++n) {
    td += power * t[static_cast<std::size_t>(n)];
    power = power * x;
  }
  return td;
}

BundleChar grr_push_pi(const BundleChar& b) {
  const auto& amb = b.rank_class().ambient();
  const int D = b.truncation();
  const FiberClass product = b.total() * relative_todd(amb);
  std::vector<FiberClass> p;
  for (int d = 0; d + 1 < D; ++d) {
    p.push_back(FiberClass::pullback(amb, push_pi(product.degree_part(d + 1))));
  }
  p.push_back(FiberClass::zero(amb));
  return BundleChar(std::move(p));
}

}  // namespace taut
