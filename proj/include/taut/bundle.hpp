#pragma once

#include <vector>

#include "taut/character.hpp"
#include "taut/fiber_class.hpp"
#include "taut/zeta_class.hpp"

namespace taut {

/// Characters of bundles on the universal P^1-bundle P.
using BundleChar = Character<FiberClass>;
/// Characters of bundles on a projective sub-bundle P(V) -> P.
using ZetaChar = Character<ZetaClass>;

static_assert(GradedClass<FiberClass>);
static_assert(GradedClass<ZetaClass>);

/// c_i = a_i + a_i' z, with a_i of degree i and a_i' of degree i-1.
struct ChernPart {
  GradedPoly a;
  GradedPoly a_prime;
};

/// Builds the character of a rank-`rank` bundle whose Chern classes are
/// given by `parts[i]` for c_{i+1}. Throws on degree mismatch.
[[nodiscard]] BundleChar chern_from_parts(const FiberAmbientPtr& ambient,
                                          const std::vector<ChernPart>& parts, int rank);

/// c_1, ..., c_{min(rank, D-1)} (all D-1 classes when the rank is not constant).
[[nodiscard]] std::vector<FiberClass> chern_of(const BundleChar& b);

/// Tensor with O(n z) on P.
[[nodiscard]] BundleChar twist_z(const BundleChar& b, int n);
/// Tensor with O(n zeta) on P(V).
[[nodiscard]] ZetaChar twist_zeta(const ZetaChar& b, int n);

/// gamma^* of a character on P.
[[nodiscard]] ZetaChar pullback(const BundleChar& b, const ZetaAmbientPtr& ambient);

/// Projective bundle P(E^dual) with zeta = c1(O(1)); the relation uses the
/// Chern classes of E^dual, i.e. c_i(E^dual) = (-1)^i c_i(E).
[[nodiscard]] ZetaAmbientPtr dual_projectivization(const BundleChar& E);

/// Coefficients t_0, t_1, ... of x / (1 - e^{-x}) up to x^{order-1}, by exact
/// power series inversion.
[[nodiscard]] std::vector<Rational> todd_series(int order);

/// Todd class of the relative tangent bundle of P -> B (c1 = 2z).
[[nodiscard]] FiberClass relative_todd(const FiberAmbientPtr& ambient);

/// ch(pi_! b) = pi_*(ch(b) td), pulled back to P. The degree-(D-1) piece is
/// beyond what the truncated input determines and is returned as zero.
[[nodiscard]] BundleChar grr_push_pi(const BundleChar& b);

}  // namespace taut
