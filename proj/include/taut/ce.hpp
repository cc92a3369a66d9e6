#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "taut/bundle.hpp"

namespace taut {

/// Raised when the truncation order cannot hold the requested class.
class TruncationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Universal data of a degree-k cover in Casnati-Ekedahl form over the base:
/// E of rank k-1 with c_i = a_i + a_i' z, and for k = 4, 5 the first syzygy
/// bundle F with c_i = b_i + b_i' z.
struct CESetup {
  int k = 3;
  /// Numeric genus; when absent the ring carries a degree-0 parameter "g".
  std::optional<long> genus;
  RingPtr ring;
  FiberAmbientPtr fiber;
  BundleChar E;
  std::optional<BundleChar> F;
  /// P(E^dual) over P, with zeta = c1(O(1)).
  ZetaAmbientPtr curve_ambient;

  [[nodiscard]] int truncation() const { return ring->truncation(); }
  /// a1' = g + k - 1, as a polynomial in the ring.
  [[nodiscard]] GradedPoly a1_prime() const;
};

/// CE generators for k in {3, 4, 5}, in canonical order.
[[nodiscard]] std::vector<Generator> ce_generators(int k);

[[nodiscard]] CESetup ce_setup(int k, std::optional<long> genus, int truncation);

/// Class of the universal curve C in P(E^dual), homogeneous of degree k-2.
[[nodiscard]] ZetaClass curve_class(const CESetup& s);

struct KappaResult {
  int index = 0;
  int k = 3;
  GradedPoly polynomial;
};

/// Smallest truncation order that can represent kappa_i for degree k.
[[nodiscard]] constexpr int kappa_min_truncation(int k, int i) { return i + k; }

/// kappa_i = pi_* gamma_* ([C] (zeta - 2z)^{i+1}).
[[nodiscard]] KappaResult kappa(const CESetup& s, int i);

/// Rank of F_i in the resolution of a degree-k cover, 1 <= i <= k-2.
[[nodiscard]] long ce_rank(int i, int k);

struct Presentation {
  std::vector<Generator> generators;
  /// No relations among the generators in degrees below this bound.
  long truncation_bound = 0;
};

[[nodiscard]] Presentation presentation(int k, long genus);

}  // namespace taut
