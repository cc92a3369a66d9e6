#include "taut/fiber_class.hpp"

#include <utility>

namespace taut {

FiberAmbientPtr FiberAmbient::create(RingPtr ring, GradedPoly c2) {
  if (!same_ring(ring, c2.ring())) throw RingError("c2 does not live in the base ring");
  if (!c2.is_homogeneous(2)) throw RingError("c2 must be homogeneous of degree 2");
  return FiberAmbientPtr(new FiberAmbient(std::move(ring), std::move(c2)));
}

FiberAmbientPtr FiberAmbient::create(RingPtr ring, std::string_view c2_generator) {
  GradedPoly c2 = GradedPoly::generator(ring, c2_generator);
  return create(std::move(ring), std::move(c2));
}

bool same_ambient(const FiberAmbientPtr& a, const FiberAmbientPtr& b) {
  return a == b || (a && b && same_ring(a->ring(), b->ring()) && a->c2() == b->c2());
}

FiberClass::FiberClass(FiberAmbientPtr ambient, GradedPoly base, GradedPoly z_part)
    : ambient_(std::move(ambient)), base_(std::move(base)), z_(std::move(z_part)) {
  if (!same_ring(ambient_->ring(), base_.ring()) || !same_ring(ambient_->ring(), z_.ring())) {
    throw RingError("fiber class parts must live in the ambient base ring");
  }
  trim();
}

void FiberClass::trim() {
  const int d = truncation();
  if (auto w = z_.max_weight(); w && *w >= d - 1) z_ = z_.truncated(d - 1);
}

FiberClass FiberClass::zero(FiberAmbientPtr ambient) {
  const auto& r = ambient->ring();
  return FiberClass(std::move(ambient), GradedPoly(r), GradedPoly(r));
}

FiberClass FiberClass::constant(FiberAmbientPtr ambient, const Rational& value) {
  const auto& r = ambient->ring();
  return FiberClass(std::move(ambient), GradedPoly::constant(r, value), GradedPoly(r));
}

FiberClass FiberClass::z(FiberAmbientPtr ambient) {
  const auto& r = ambient->ring();
  return FiberClass(std::move(ambient), GradedPoly(r), GradedPoly::constant(r, 1));
}

FiberClass FiberClass::pullback(FiberAmbientPtr ambient, GradedPoly base) {
  const auto& r = ambient->ring();
  return FiberClass(std::move(ambient), std::move(base), GradedPoly(r));
}

std::optional<Rational> FiberClass::constant_value() const {
  if (!z_.is_zero()) return std::nullopt;
  return base_.constant_value();
}

FiberClass FiberClass::degree_part(int d) const {
  const int D = truncation();
  if (d < 0 || d >= D) return zero_like();
  GradedPoly zp = d >= 1 ? z_.degree_part(d - 1) : GradedPoly(z_.ring());
  return FiberClass(ambient_, base_.degree_part(d), std::move(zp));
}

FiberClass FiberClass::truncated(int bound) const {
  return FiberClass(ambient_, base_.truncated(bound), z_.truncated(bound - 1));
}

bool FiberClass::is_homogeneous(int d) const {
  return base_.is_homogeneous(d) && z_.is_homogeneous(d - 1);
}

void FiberClass::check(const FiberClass& o) const {
  if (!same_ambient(ambient_, o.ambient_)) throw RingError("fiber classes from different ambients");
}

FiberClass& FiberClass::operator+=(const FiberClass& o) {
  check(o);
  base_ += o.base_;
  z_ += o.z_;
  return *this;
}

FiberClass& FiberClass::operator-=(const FiberClass& o) {
  check(o);
  base_ -= o.base_;
  z_ -= o.z_;
  return *this;
}

FiberClass& FiberClass::operator*=(const Rational& c) {
  base_ *= c;
  z_ *= c;
  return *this;
}

FiberClass operator*(const FiberClass& a, const FiberClass& b) {
  a.check(b);
  // (P1 + Q1 z)(P2 + Q2 z) = P1 P2 - c2 Q1 Q2 + (P1 Q2 + Q1 P2) z
  GradedPoly base = a.base_ * b.base_;
  if (!a.z_.is_zero() && !b.z_.is_zero()) base -= a.ambient_->c2() * (a.z_ * b.z_);
  GradedPoly zp = a.base_ * b.z_;
  zp += a.z_ * b.base_;
  return FiberClass(a.ambient_, std::move(base), std::move(zp));
}

bool operator==(const FiberClass& a, const FiberClass& b) {
  return same_ambient(a.ambient_, b.ambient_) && a.base_ == b.base_ && a.z_ == b.z_;
}

GradedPoly push_pi(const FiberClass& c) { return c.z_part(); }

DisplayRing make_display_ring(const RingPtr& ring, const std::vector<std::string>& extra,
                              int truncation) {
  std::vector<Generator> graded;
  std::vector<std::string> params;
  DisplayRing out;
  out.remap.resize(ring->size());
  std::vector<std::size_t> param_src;
  for (std::size_t i = 0; i < ring->size(); ++i) {
    const auto& g = ring->generator(i);
    if (g.degree > 0) {
      out.remap[i] = graded.size();
      graded.push_back(g);
    } else {
      param_src.push_back(i);
      params.push_back(g.name);
    }
  }
  for (const auto& name : extra) {
    out.extra_index.push_back(graded.size());
    graded.push_back({name, 1});
  }
  for (std::size_t k = 0; k < param_src.size(); ++k) out.remap[param_src[k]] = graded.size() + k;
  out.ring = RingSpec::create_with_parameters(std::move(graded), std::move(params), truncation);
  return out;
}

GradedPoly embed(const GradedPoly& p, const DisplayRing& target,
                 const std::vector<int>& extra_exponents) {
  GradedPoly out(target.ring);
  for (const auto& [m, c] : p.terms()) {
    std::vector<int> e(target.ring->size(), 0);
    for (std::size_t i = 0; i < m.exponents.size(); ++i) e[target.remap[i]] = m.exponents[i];
    for (std::size_t k = 0; k < extra_exponents.size(); ++k) {
      e[target.extra_index[k]] += extra_exponents[k];
    }
    out += GradedPoly::monomial(target.ring, std::move(e), c);
  }
  return out;
}

GradedPoly FiberClass::to_display_poly() const {
  const DisplayRing dr = make_display_ring(ambient_->ring(), {"z"}, truncation() + 1);
  return embed(base_, dr, {0}) + embed(z_, dr, {1});
}

}  // namespace taut
