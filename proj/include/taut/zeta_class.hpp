#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "taut/fiber_class.hpp"

namespace taut {

class ZetaAmbient;
using ZetaAmbientPtr = std::shared_ptr<const ZetaAmbient>;

/// Chow ring of a projective bundle gamma: P(V) -> P with hyperplane class
/// zeta, presented as A*(P)[zeta] / (zeta^r + c1(V) zeta^{r-1} + ... + cr(V)).
class ZetaAmbient {
 public:
  /// `relation[i]` is c_{i+1}(V); the rank r is relation.size() >= 1.
  static ZetaAmbientPtr create(FiberAmbientPtr fiber, std::vector<FiberClass> relation);

  [[nodiscard]] const FiberAmbientPtr& fiber() const { return fiber_; }
  [[nodiscard]] int rank() const { return static_cast<int>(relation_.size()); }
  [[nodiscard]] const std::vector<FiberClass>& relation() const { return relation_; }
  [[nodiscard]] int truncation() const { return fiber_->truncation(); }

 private:
  ZetaAmbient(FiberAmbientPtr fiber, std::vector<FiberClass> relation)
      : fiber_(std::move(fiber)), relation_(std::move(relation)) {}

  FiberAmbientPtr fiber_;
  std::vector<FiberClass> relation_;
};

/// c_0 + c_1 zeta + ... + c_{r-1} zeta^{r-1}, kept reduced. The coefficient
/// of zeta^j is truncated below total degree D - j.
class ZetaClass {
 public:
  ZetaClass(ZetaAmbientPtr ambient, std::vector<FiberClass> coefficients);

  static ZetaClass zero(ZetaAmbientPtr ambient);
  static ZetaClass constant(ZetaAmbientPtr ambient, const Rational& value);
  static ZetaClass zeta(ZetaAmbientPtr ambient);
  /// gamma^* of a class on P.
  static ZetaClass pullback(ZetaAmbientPtr ambient, const FiberClass& c);
  /// zeta^power reduced by the bundle relation.
  static ZetaClass zeta_power(ZetaAmbientPtr ambient, int power);

  [[nodiscard]] const ZetaAmbientPtr& ambient() const { return ambient_; }
  [[nodiscard]] const std::vector<FiberClass>& coefficients() const { return coeffs_; }
  [[nodiscard]] const FiberClass& coefficient(int j) const { return coeffs_.at(static_cast<std::size_t>(j)); }
  [[nodiscard]] int truncation() const { return ambient_->truncation(); }

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] std::optional<Rational> constant_value() const;
  [[nodiscard]] ZetaClass degree_part(int d) const;
  [[nodiscard]] bool is_homogeneous(int d) const;

  [[nodiscard]] ZetaClass zero_like() const { return zero(ambient_); }
  [[nodiscard]] ZetaClass one_like() const { return constant(ambient_, 1); }

  ZetaClass& operator+=(const ZetaClass& o);
  ZetaClass& operator-=(const ZetaClass& o);
  ZetaClass& operator*=(const Rational& c);

  friend ZetaClass operator+(ZetaClass a, const ZetaClass& b) { return a += b; }
  friend ZetaClass operator-(ZetaClass a, const ZetaClass& b) { return a -= b; }
  friend ZetaClass operator-(ZetaClass a) { return a *= Rational(-1); }
  friend ZetaClass operator*(ZetaClass a, const Rational& c) { return a *= c; }
  friend ZetaClass operator*(const Rational& c, ZetaClass a) { return a *= c; }
  friend ZetaClass operator*(const ZetaClass& a, const ZetaClass& b);
  friend bool operator==(const ZetaClass& a, const ZetaClass& b);

  /// Base ring extended by degree-1 symbols `z` and `zeta`.
  [[nodiscard]] GradedPoly to_display_poly() const;
  [[nodiscard]] std::string to_string() const { return to_display_poly().to_string(); }

 private:
  void check(const ZetaClass& o) const;

  ZetaAmbientPtr ambient_;
  std::vector<FiberClass> coeffs_;
};

/// gamma_* reads off the coefficient of zeta^{r-1}.
[[nodiscard]] FiberClass push_gamma(const ZetaClass& c);

}  // namespace taut
