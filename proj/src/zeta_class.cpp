#include "taut/zeta_class.hpp"

#include <algorithm>
#include <utility>

namespace taut {

ZetaAmbientPtr ZetaAmbient::create(FiberAmbientPtr fiber, std::vector<FiberClass> relation) {
  if (relation.empty()) throw RingError("projective bundle needs rank >= 1");
  for (std::size_t i = 0; i < relation.size(); ++i) {
    if (!same_ambient(fiber, relation[i].ambient())) {
      throw RingError("relation coefficients must live on the same P^1-bundle");
    }
    if (!relation[i].is_homogeneous(static_cast<int>(i) + 1)) {
      throw RingError("relation coefficient c" + std::to_string(i + 1) + " is not homogeneous");
    }
  }
  return ZetaAmbientPtr(new ZetaAmbient(std::move(fiber), std::move(relation)));
}

ZetaClass::ZetaClass(ZetaAmbientPtr ambient, std::vector<FiberClass> coefficients)
    : ambient_(std::move(ambient)), coeffs_(std::move(coefficients)) {
  const int r = ambient_->rank();
  if (static_cast<int>(coeffs_.size()) > r) {
    throw RingError("zeta class has more coefficients than the bundle rank; reduce first");
  }
  while (static_cast<int>(coeffs_.size()) < r) coeffs_.push_back(FiberClass::zero(ambient_->fiber()));
  const int D = truncation();
  for (int j = 0; j < r; ++j) {
    auto& c = coeffs_[static_cast<std::size_t>(j)];
    if (!same_ambient(c.ambient(), ambient_->fiber())) throw RingError("coefficient ambient mismatch");
    c = c.truncated(D - j);
  }
}

ZetaClass ZetaClass::zero(ZetaAmbientPtr ambient) { return ZetaClass(std::move(ambient), {}); }

ZetaClass ZetaClass::constant(ZetaAmbientPtr ambient, const Rational& value) {
  auto f = ambient->fiber();
  return ZetaClass(std::move(ambient), {FiberClass::constant(std::move(f), value)});
}

ZetaClass ZetaClass::zeta(ZetaAmbientPtr ambient) { return zeta_power(std::move(ambient), 1); }

ZetaClass ZetaClass::pullback(ZetaAmbientPtr ambient, const FiberClass& c) {
  return ZetaClass(std::move(ambient), {c});
}

ZetaClass ZetaClass::zeta_power(ZetaAmbientPtr ambient, int power) {
  if (power < 0) throw std::invalid_argument("negative power of zeta");
  const int r = ambient->rank();
  if (power < r) {
    std::vector<FiberClass> c(static_cast<std::size_t>(r), FiberClass::zero(ambient->fiber()));
    c[static_cast<std::size_t>(power)] = FiberClass::constant(ambient->fiber(), 1);
    return ZetaClass(std::move(ambient), std::move(c));
  }
  ZetaClass z = zeta_power(ambient, r - 1);
  ZetaClass step = zeta_power(ambient, 1);
  for (int p = r - 1; p < power; ++p) z = z * step;
  return z;
}

bool ZetaClass::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const FiberClass& c) { return c.is_zero(); });
}

std::optional<Rational> ZetaClass::constant_value() const {
  for (std::size_t j = 1; j < coeffs_.size(); ++j) {
    if (!coeffs_[j].is_zero()) return std::nullopt;
  }
  return coeffs_[0].constant_value();
}

ZetaClass ZetaClass::degree_part(int d) const {
  std::vector<FiberClass> out;
  out.reserve(coeffs_.size());
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    out.push_back(coeffs_[j].degree_part(d - static_cast<int>(j)));
  }
  return ZetaClass(ambient_, std::move(out));
}

bool ZetaClass::is_homogeneous(int d) const {
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (!coeffs_[j].is_zero() && !coeffs_[j].is_homogeneous(d - static_cast<int>(j))) return false;
  }
  return true;
}

void ZetaClass::check(const ZetaClass& o) const {
  if (ambient_ != o.ambient_) throw RingError("zeta classes from different projective bundles");
}

ZetaClass& ZetaClass::operator+=(const ZetaClass& o) {
  check(o);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
  return *this;
}

ZetaClass& ZetaClass::operator-=(const ZetaClass& o) {
  check(o);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= o.coeffs_[j];
  return *this;
}

ZetaClass& ZetaClass::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

ZetaClass operator*(const ZetaClass& a, const ZetaClass& b) {
  a.check(b);
  const int r = a.ambient_->rank();
  const int D = a.truncation();
  const auto& fiber = a.ambient_->fiber();
  std::vector<FiberClass> prod(static_cast<std::size_t>(2 * r - 1), FiberClass::zero(fiber));
  for (int i = 0; i < r; ++i) {
    const auto& ai = a.coeffs_[static_cast<std::size_t>(i)];
    if (ai.is_zero()) continue;
    for (int j = 0; j < r; ++j) {
      const auto& bj = b.coeffs_[static_cast<std::size_t>(j)];
      if (bj.is_zero() || i + j >= D) continue;
      prod[static_cast<std::size_t>(i + j)] += (ai * bj).truncated(D - i - j);
    }
  }
  // zeta^n = -(c1 zeta^{n-1} + ... + cr zeta^{n-r}) for n >= r, applied top-down.
  const auto& rel = a.ambient_->relation();
  for (int n = 2 * r - 2; n >= r; --n) {
    FiberClass top = prod[static_cast<std::size_t>(n)];
    if (top.is_zero()) continue;
    for (int i = 1; i <= r; ++i) {
      const int target = n - i;
      if (target >= D) continue;
      prod[static_cast<std::size_t>(target)] -=
          (top * rel[static_cast<std::size_t>(i - 1)]).truncated(D - target);
    }
  }
  prod.resize(static_cast<std::size_t>(r), FiberClass::zero(fiber));
  return ZetaClass(a.ambient_, std::move(prod));
}

bool operator==(const ZetaClass& a, const ZetaClass& b) {
  return a.ambient_ == b.ambient_ && a.coeffs_ == b.coeffs_;
}

GradedPoly ZetaClass::to_display_poly() const {
  const auto& ring = ambient_->fiber()->ring();
  const DisplayRing dr = make_display_ring(ring, {"z", "zeta"}, truncation() + ambient_->rank() + 1);
  GradedPoly out(dr.ring);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const int zj = static_cast<int>(j);
    out += embed(coeffs_[j].base(), dr, {0, zj});
    out += embed(coeffs_[j].z_part(), dr, {1, zj});
  }
  return out;
}

FiberClass push_gamma(const ZetaClass& c) {
  return c.coefficient(c.ambient()->rank() - 1);
}

}  // namespace taut
