#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "taut/graded_poly.hpp"

namespace taut {

class FiberAmbient;
using FiberAmbientPtr = std::shared_ptr<const FiberAmbient>;

/// Chow ring of the universal P^1-bundle pi: P -> B, presented as
/// A*(B)[z]/(z^2 + c2). `c2` must be homogeneous of degree 2 (or zero, for
/// split data on a single fiber).
class FiberAmbient {
 public:
  static FiberAmbientPtr create(RingPtr ring, GradedPoly c2);
  static FiberAmbientPtr create(RingPtr ring, std::string_view c2_generator);

  [[nodiscard]] const RingPtr& ring() const { return ring_; }
  [[nodiscard]] const GradedPoly& c2() const { return c2_; }
  [[nodiscard]] int truncation() const { return ring_->truncation(); }

 private:
  FiberAmbient(RingPtr ring, GradedPoly c2) : ring_(std::move(ring)), c2_(std::move(c2)) {}

  RingPtr ring_;
  GradedPoly c2_;
};

[[nodiscard]] bool same_ambient(const FiberAmbientPtr& a, const FiberAmbientPtr& b);

/// P + Q*z in A*(P). Terms of total degree >= D are dropped, where a z-term
/// counts one more than its base weight.
class FiberClass {
 public:
  FiberClass(FiberAmbientPtr ambient, GradedPoly base, GradedPoly z_part);

  static FiberClass zero(FiberAmbientPtr ambient);
  static FiberClass constant(FiberAmbientPtr ambient, const Rational& value);
  static FiberClass z(FiberAmbientPtr ambient);
  /// pi^* of a base class.
  static FiberClass pullback(FiberAmbientPtr ambient, GradedPoly base);

  [[nodiscard]] const FiberAmbientPtr& ambient() const { return ambient_; }
  [[nodiscard]] const GradedPoly& base() const { return base_; }
  [[nodiscard]] const GradedPoly& z_part() const { return z_; }
  [[nodiscard]] int truncation() const { return ambient_->truncation(); }

  [[nodiscard]] bool is_zero() const { return base_.is_zero() && z_.is_zero(); }
  [[nodiscard]] std::optional<Rational> constant_value() const;
  [[nodiscard]] FiberClass degree_part(int d) const;
  [[nodiscard]] FiberClass truncated(int bound) const;
  [[nodiscard]] bool is_homogeneous(int d) const;

  [[nodiscard]] FiberClass zero_like() const { return zero(ambient_); }
  [[nodiscard]] FiberClass one_like() const { return constant(ambient_, 1); }

  FiberClass& operator+=(const FiberClass& o);
  FiberClass& operator-=(const FiberClass& o);
  FiberClass& operator*=(const Rational& c);

  friend FiberClass operator+(FiberClass a, const FiberClass& b) { return a += b; }
  friend FiberClass operator-(FiberClass a, const FiberClass& b) { return a -= b; }
  friend FiberClass operator-(FiberClass a) { return a *= Rational(-1); }
  friend FiberClass operator*(FiberClass a, const Rational& c) { return a *= c; }
  friend FiberClass operator*(const Rational& c, FiberClass a) { return a *= c; }
  friend FiberClass operator*(const FiberClass& a, const FiberClass& b);
  friend bool operator==(const FiberClass& a, const FiberClass& b);

  /// Base ring extended by a degree-1 symbol `z`.
  [[nodiscard]] GradedPoly to_display_poly() const;
  [[nodiscard]] std::string to_string() const { return to_display_poly().to_string(); }

 private:
  void check(const FiberClass& o) const;
  void trim();

  FiberAmbientPtr ambient_;
  GradedPoly base_;
  GradedPoly z_;
};

/// pi_*(P + Q z) = Q.
[[nodiscard]] GradedPoly push_pi(const FiberClass& c);

/// Display ring: the graded generators of `ring`, then `extra` degree-1
/// symbols, then the ring's degree-0 parameters. Returns the ring plus a map
/// from old generator index to new index.
struct DisplayRing {
  RingPtr ring;
  std::vector<std::size_t> remap;
  std::vector<std::size_t> extra_index;
};
[[nodiscard]] DisplayRing make_display_ring(const RingPtr& ring, const std::vector<std::string>& extra,
                                            int truncation);
[[nodiscard]] GradedPoly embed(const GradedPoly& p, const DisplayRing& target,
                               const std::vector<int>& extra_exponents);

}  // namespace taut
