#include "taut/graded_poly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace taut {

RingSpec::RingSpec(std::vector<Generator> generators, int truncation)
    : generators_(std::move(generators)), truncation_(truncation) {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (!index_.emplace(generators_[i].name, i).second) {
      throw RingError("duplicate generator name '" + generators_[i].name + "'");
    }
  }
}

RingPtr RingSpec::create(std::vector<Generator> generators, int truncation) {
  return create_with_parameters(std::move(generators), {}, truncation);
}

RingPtr RingSpec::create_with_parameters(std::vector<Generator> generators,
                                         std::vector<std::string> parameters, int truncation) {
  if (truncation < 1) throw RingError("truncation order must be >= 1");
  for (const auto& g : generators) {
    if (g.name.empty()) throw RingError("empty generator name");
    if (g.degree < 1) {
      throw RingError("generator '" + g.name + "' has non-positive degree " +
                      std::to_string(g.degree));
    }
  }
  for (auto& p : parameters) {
    if (p.empty()) throw RingError("empty parameter name");
    generators.push_back({std::move(p), 0});
  }
  return RingPtr(new RingSpec(std::move(generators), truncation));
}

std::optional<std::size_t> RingSpec::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t RingSpec::require_index(std::string_view name) const {
  if (auto i = index_of(name)) return *i;
  throw RingError("unknown generator '" + std::string(name) + "'");
}

int RingSpec::weight(const std::vector<int>& exponents) const {
  int w = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) w += exponents[i] * generators_[i].degree;
  return w;
}

bool operator==(const RingSpec& a, const RingSpec& b) {
  if (a.truncation_ != b.truncation_ || a.generators_.size() != b.generators_.size()) return false;
  for (std::size_t i = 0; i < a.generators_.size(); ++i) {
    if (a.generators_[i].name != b.generators_[i].name ||
        a.generators_[i].degree != b.generators_[i].degree) {
      return false;
    }
  }
  return true;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

GradedPoly::GradedPoly(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw RingError("null ring");
}

GradedPoly GradedPoly::constant(RingPtr ring, const Rational& value) {
  GradedPoly p(std::move(ring));
  p.add_term(Monomial{0, std::vector<int>(p.ring_->size(), 0)}, value);
  return p;
}

GradedPoly GradedPoly::generator(RingPtr ring, std::string_view name) {
  const std::size_t i = ring->require_index(name);
  std::vector<int> e(ring->size(), 0);
  e[i] = 1;
  return monomial(std::move(ring), std::move(e), Rational(1));
}

GradedPoly GradedPoly::monomial(RingPtr ring, std::vector<int> exponents,
                                const Rational& coefficient) {
  GradedPoly p(std::move(ring));
  if (exponents.size() != p.ring_->size()) throw RingError("exponent vector length mismatch");
  if (std::any_of(exponents.begin(), exponents.end(), [](int e) { return e < 0; })) {
    throw RingError("negative exponent");
  }
  const int w = p.ring_->weight(exponents);
  p.add_term(Monomial{w, std::move(exponents)}, coefficient);
  return p;
}

void GradedPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero() || m.weight >= ring_->truncation()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void GradedPoly::check_ring(const GradedPoly& o) const {
  if (!same_ring(ring_, o.ring_)) throw RingError("operands live in different rings");
}

std::optional<Rational> GradedPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1) {
    const auto& [m, c] = *terms_.begin();
    if (std::all_of(m.exponents.begin(), m.exponents.end(), [](int e) { return e == 0; })) return c;
  }
  return std::nullopt;
}

Rational GradedPoly::coefficient(const std::vector<int>& exponents) const {
  auto it = terms_.find(Monomial{ring_->weight(exponents), exponents});
  return it == terms_.end() ? Rational(0) : it->second;
}

GradedPoly GradedPoly::degree_part(int d) const {
  if (d < 0 || d >= ring_->truncation()) {
    throw std::out_of_range("degree " + std::to_string(d) + " outside [0, " +
                            std::to_string(ring_->truncation()) + ")");
  }
  GradedPoly out(ring_);
  for (const auto& [m, c] : terms_) {
    if (m.weight == d) out.terms_.emplace_hint(out.terms_.end(), m, c);
  }
  return out;
}

GradedPoly GradedPoly::truncated(int bound) const {
  GradedPoly out(ring_);
  for (const auto& [m, c] : terms_) {
    if (m.weight >= bound) break;
    out.terms_.emplace_hint(out.terms_.end(), m, c);
  }
  return out;
}

bool GradedPoly::is_homogeneous(int d) const {
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.weight == d; });
}

std::optional<int> GradedPoly::max_weight() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first.weight;
}

GradedPoly GradedPoly::substitute(const std::map<std::string, Rational>& bindings) const {
  std::vector<std::pair<std::size_t, Rational>> idx;
  idx.reserve(bindings.size());
  for (const auto& [name, value] : bindings) idx.emplace_back(ring_->require_index(name), value);
  GradedPoly out(ring_);
  for (const auto& [m, c] : terms_) {
    Monomial key = m;
    Rational coef = c;
    for (const auto& [i, value] : idx) {
      const int e = key.exponents[i];
      if (e == 0) continue;
      coef *= pow(value, static_cast<unsigned>(e));
      key.exponents[i] = 0;
      key.weight -= e * ring_->generator(i).degree;
    }
    out.add_term(key, coef);
  }
  return out;
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& o) {
  check_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& o) {
  check_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

GradedPoly& GradedPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

GradedPoly& GradedPoly::operator*=(const GradedPoly& o) { return *this = *this * o; }

GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
  a.check_ring(b);
  GradedPoly out(a.ring_);
  const int limit = a.ring_->truncation();
  const std::size_t n = a.ring_->size();
  Monomial key{0, std::vector<int>(n, 0)};
  for (const auto& [ma, ca] : a.terms_) {
    if (ma.weight >= limit) break;
    for (const auto& [mb, cb] : b.terms_) {
      const int w = ma.weight + mb.weight;
      if (w >= limit) break;  // b is sorted by weight
      key.weight = w;
      for (std::size_t i = 0; i < n; ++i) key.exponents[i] = ma.exponents[i] + mb.exponents[i];
      out.add_term(key, ca * cb);
    }
  }
  return out;
}

bool operator==(const GradedPoly& a, const GradedPoly& b) {
  return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

std::string GradedPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first_term = true;
  for (const auto& [m, c] : terms_) {
    if (!first_term) os << " + ";
    first_term = false;
    std::vector<std::string> factors;
    bool has_gen = false;
    for (std::size_t i = 0; i < m.exponents.size(); ++i) {
      if (m.exponents[i] == 0) continue;
      has_gen = true;
      std::string f = ring_->generator(i).name;
      if (m.exponents[i] > 1) f += "^" + std::to_string(m.exponents[i]);
      factors.push_back(std::move(f));
    }
    if (!has_gen || c != Rational(1)) factors.insert(factors.begin(), c.str());
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) os << " * ";
      os << factors[i];
    }
  }
  return os.str();
}

nlohmann::json GradedPoly::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [m, c] : terms_) {
    out.push_back({{"coeff", c.str()}, {"exponents", m.exponents}});
  }
  return out;
}

GradedPoly GradedPoly::from_json(RingPtr ring, const nlohmann::json& j) {
  GradedPoly p(std::move(ring));
  if (!j.is_array()) throw RingError("polynomial JSON must be an array of terms");
  for (const auto& t : j) {
    std::vector<int> e = t.at("exponents").get<std::vector<int>>();
    const auto& cj = t.at("coeff");
    const Rational c = cj.is_string() ? Rational::parse(cj.get<std::string>())
                                      : Rational(cj.get<long>());
    p += monomial(p.ring_, std::move(e), c);
  }
  return p;
}

}  // namespace taut
