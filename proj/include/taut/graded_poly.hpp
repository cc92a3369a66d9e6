#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "taut/rational.hpp"

namespace taut {

/// Thrown for malformed ring definitions and operations mixing rings.
class RingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Generator {
  std::string name;
  int degree = 1;
};

class RingSpec;
using RingPtr = std::shared_ptr<const RingSpec>;

/// Ordered list of weighted generators plus the truncation order D: every
/// monomial of weighted degree >= D is identified with zero.
class RingSpec {
 public:
  /// Generators must have distinct names and degree >= 1; D >= 1.
  static RingPtr create(std::vector<Generator> generators, int truncation);

  /// Like create(), then appends degree-0 parameters (e.g. a symbolic genus)
  /// after the graded generators. Parameters never count toward truncation.
  static RingPtr create_with_parameters(std::vector<Generator> generators,
                                        std::vector<std::string> parameters, int truncation);

  [[nodiscard]] std::size_t size() const { return generators_.size(); }
  [[nodiscard]] int truncation() const { return truncation_; }
  [[nodiscard]] const std::vector<Generator>& generators() const { return generators_; }
  [[nodiscard]] const Generator& generator(std::size_t i) const { return generators_.at(i); }
  [[nodiscard]] std::optional<std::size_t> index_of(std::string_view name) const;
  [[nodiscard]] std::size_t require_index(std::string_view name) const;

  [[nodiscard]] int weight(const std::vector<int>& exponents) const;

  friend bool operator==(const RingSpec& a, const RingSpec& b);

 private:
  RingSpec(std::vector<Generator> generators, int truncation);

  std::vector<Generator> generators_;
  std::unordered_map<std::string, std::size_t> index_;
  int truncation_;
};

[[nodiscard]] bool same_ring(const RingPtr& a, const RingPtr& b);

/// A monomial key. Ordered by weighted degree, then lexicographically with
/// larger exponents of earlier generators first (graded lex).
struct Monomial {
  int weight = 0;
  std::vector<int> exponents;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.weight != b.weight) return a.weight < b.weight;
    return a.exponents > b.exponents;
  }
};

/// Truncated polynomial with exact rational coefficients over a RingSpec.
/// No stored coefficient is zero and every stored monomial has weight < D.
class GradedPoly {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialOrder>;

  explicit GradedPoly(RingPtr ring);

  static GradedPoly constant(RingPtr ring, const Rational& value);
  static GradedPoly generator(RingPtr ring, std::string_view name);
  static GradedPoly monomial(RingPtr ring, std::vector<int> exponents, const Rational& coefficient);

  [[nodiscard]] const RingPtr& ring() const { return ring_; }
  [[nodiscard]] const TermMap& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t term_count() const { return terms_.size(); }

  /// The value when the polynomial is a constant (including zero).
  [[nodiscard]] std::optional<Rational> constant_value() const;
  [[nodiscard]] Rational coefficient(const std::vector<int>& exponents) const;

  /// Sum of the terms of weighted degree exactly d; requires 0 <= d < D.
  [[nodiscard]] GradedPoly degree_part(int d) const;
  /// Drops terms of weighted degree >= bound.
  [[nodiscard]] GradedPoly truncated(int bound) const;
  [[nodiscard]] bool is_homogeneous(int d) const;
  [[nodiscard]] std::optional<int> max_weight() const;

  /// Replaces the named generators by constants; unknown names throw.
  [[nodiscard]] GradedPoly substitute(const std::map<std::string, Rational>& bindings) const;

  GradedPoly& operator+=(const GradedPoly& o);
  GradedPoly& operator-=(const GradedPoly& o);
  GradedPoly& operator*=(const Rational& c);
  GradedPoly& operator*=(const GradedPoly& o);

  friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
  friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
  friend GradedPoly operator*(GradedPoly a, const Rational& c) { return a *= c; }
  friend GradedPoly operator*(const Rational& c, GradedPoly a) { return a *= c; }
  friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b);
  friend GradedPoly operator-(GradedPoly a) { return a *= Rational(-1); }

  /// Exact equality of term maps (rings must agree).
  friend bool operator==(const GradedPoly& a, const GradedPoly& b);

  /// `coef * gen^k * ...` terms joined by " + "; "0" for the zero polynomial.
  [[nodiscard]] std::string to_string() const;
  /// [{"coeff": "p/q", "exponents": [...]}, ...] in graded lex order.
  [[nodiscard]] nlohmann::json to_json() const;
  static GradedPoly from_json(RingPtr ring, const nlohmann::json& j);

 private:
  void add_term(const Monomial& m, const Rational& c);
  void check_ring(const GradedPoly& o) const;

  RingPtr ring_;
  TermMap terms_;
};

}  // namespace taut
