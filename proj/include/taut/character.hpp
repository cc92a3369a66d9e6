#pragma once

#include <concepts>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "taut/rational.hpp"

namespace taut {

/// A truncated graded commutative Q-algebra element: FiberClass or ZetaClass.
template <class C>
concept GradedClass = requires(const C& a, const C& b, const Rational& q, int d) {
  { a + b } -> std::same_as<C>;
  { a - b } -> std::same_as<C>;
  { a * b } -> std::same_as<C>;
  { a * q } -> std::same_as<C>;
  { a.degree_part(d) } -> std::same_as<C>;
  { a.zero_like() } -> std::same_as<C>;
  { a.one_like() } -> std::same_as<C>;
  { a.truncation() } -> std::same_as<int>;
  { a.is_zero() } -> std::same_as<bool>;
  { a.constant_value() } -> std::same_as<std::optional<Rational>>;
};

/// Chern character ch_0 + ch_1 + ... + ch_{D-1} of a (virtual) bundle.
/// pieces[d] is homogeneous of degree d; ch_0 is the rank, kept as a class
/// so that ranks polynomial in a degree-0 parameter are representable.
template <GradedClass C>
class Character {
 public:
  explicit Character(std::vector<C> pieces) : pieces_(std::move(pieces)) {
    if (pieces_.empty()) throw std::invalid_argument("character needs at least ch_0");
    const int D = pieces_.front().truncation();
    if (static_cast<int>(pieces_.size()) != D) {
      throw std::invalid_argument("character must have exactly D pieces");
    }
  }

  static Character from_total(const C& total) {
    std::vector<C> p;
    for (int d = 0; d < total.truncation(); ++d) p.push_back(total.degree_part(d));
    return Character(std::move(p));
  }

  static Character trivial(const C& like, const Rational& rank) {
    return from_total(like.one_like() * rank);
  }

  /// exp(c1): the line bundle with first Chern class c1 (degree 1).
  static Character line_bundle(const C& c1) {
    const int D = c1.truncation();
    std::vector<C> p;
    p.push_back(c1.one_like());
    C power = c1.one_like();
    for (int d = 1; d < D; ++d) {
      power = power * c1;
      p.push_back(power * (Rational(1) / factorial(static_cast<unsigned>(d))));
    }
    return Character(std::move(p));
  }

  /// Newton's identities: chern[i] is c_{i+1}; missing classes are zero.
  static Character from_chern(const C& rank, const std::vector<C>& chern) {
    const int D = rank.truncation();
    auto e = [&](int n) -> C {
      if (n == 0) return rank.one_like();
      if (n - 1 < static_cast<int>(chern.size())) return chern[static_cast<std::size_t>(n - 1)];
      return rank.zero_like();
    };
    std::vector<C> power_sums;  // p_n, n >= 1
    std::vector<C> p;
    p.push_back(rank);
    for (int n = 1; n < D; ++n) {
      C acc = e(n) * Rational(n);
      for (int i = 1; i < n; ++i) {
        C term = e(n - i) * power_sums[static_cast<std::size_t>(i - 1)];
        acc = (i % 2 == 1) ? acc - term : acc + term;
      }
      if (n % 2 == 0) acc = acc * Rational(-1);
      power_sums.push_back(acc);
      p.push_back(acc * (Rational(1) / factorial(static_cast<unsigned>(n))));
    }
    return Character(std::move(p));
  }

  [[nodiscard]] int truncation() const { return static_cast<int>(pieces_.size()); }
  [[nodiscard]] const C& piece(int d) const { return pieces_.at(static_cast<std::size_t>(d)); }
  [[nodiscard]] const std::vector<C>& pieces() const { return pieces_; }
  [[nodiscard]] const C& rank_class() const { return pieces_.front(); }
  [[nodiscard]] std::optional<Rational> rank() const { return pieces_.front().constant_value(); }

  [[nodiscard]] C total() const {
    C t = pieces_.front();
    for (std::size_t d = 1; d < pieces_.size(); ++d) t = t + pieces_[d];
    return t;
  }

  /// c_1, ..., c_{D-1} via inverse Newton identities.
  [[nodiscard]] std::vector<C> chern() const {
    const int D = truncation();
    std::vector<C> e{rank_class().one_like()};
    for (int n = 1; n < D; ++n) {
      C acc = rank_class().zero_like();
      for (int i = 1; i <= n; ++i) {
        C term = e[static_cast<std::size_t>(n - i)] * piece(i) * factorial(static_cast<unsigned>(i));
        acc = (i % 2 == 1) ? acc + term : acc - term;
      }
      e.push_back(acc * (Rational(1) / Rational(n)));
    }
    e.erase(e.begin());
    return e;
  }

  [[nodiscard]] Character dual() const {
    auto p = pieces_;
    for (std::size_t d = 1; d < p.size(); d += 2) p[d] = p[d] * Rational(-1);
    return Character(std::move(p));
  }

  /// psi^k scales ch_d by k^d.
  [[nodiscard]] Character adams(int k) const {
    if (k < 1) throw std::invalid_argument("Adams operation needs k >= 1");
    auto p = pieces_;
    Rational scale(1);
    for (std::size_t d = 1; d < p.size(); ++d) {
      scale *= Rational(k);
      p[d] = p[d] * scale;
    }
    return Character(std::move(p));
  }

  [[nodiscard]] Character tensor(const Character& o) const {
    const int D = truncation();
    std::vector<C> p;
    for (int d = 0; d < D; ++d) {
      C acc = rank_class().zero_like();
      for (int i = 0; i <= d; ++i) {
        const C& a = piece(i);
        const C& b = o.piece(d - i);
        if (a.is_zero() || b.is_zero()) continue;
        acc = acc + a * b;
      }
      p.push_back(std::move(acc));
    }
    return Character(std::move(p));
  }

  [[nodiscard]] Character det() const { return line_bundle(piece(1)); }

  [[nodiscard]] Character sym2() const {
    return (tensor(*this) + adams(2)).scaled(Rational(1, 2));
  }
  [[nodiscard]] Character wedge2() const {
    return (tensor(*this) - adams(2)).scaled(Rational(1, 2));
  }
  [[nodiscard]] Character sym3() const {
    const Character cube = tensor(*this).tensor(*this);
    const Character mixed = adams(2).tensor(*this).scaled(Rational(3));
    return (cube + mixed + adams(3).scaled(Rational(2))).scaled(Rational(1, 6));
  }

  [[nodiscard]] Character scaled(const Rational& c) const {
    auto p = pieces_;
    for (auto& x : p) x = x * c;
    return Character(std::move(p));
  }

  friend Character operator+(const Character& a, const Character& b) {
    auto p = a.pieces_;
    for (std::size_t d = 0; d < p.size(); ++d) p[d] = p[d] + b.pieces_.at(d);
    return Character(std::move(p));
  }
  friend Character operator-(const Character& a, const Character& b) {
    auto p = a.pieces_;
    for (std::size_t d = 0; d < p.size(); ++d) p[d] = p[d] - b.pieces_.at(d);
    return Character(std::move(p));
  }
  friend bool operator==(const Character& a, const Character& b) { return a.pieces_ == b.pieces_; }

 private:
  std::vector<C> pieces_;
};

}  // namespace taut
