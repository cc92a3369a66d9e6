#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace taut {

/// Splitting type e_1 <= ... <= e_r of O(e_1) + ... + O(e_r) on P^1.
class SplittingType {
 public:
  SplittingType() = default;
  explicit SplittingType(std::vector<int> parts);

  /// "2,3,4" (any order, whitespace allowed); throws std::invalid_argument.
  static SplittingType parse(std::string_view text);

  [[nodiscard]] const std::vector<int>& parts() const { return parts_; }
  [[nodiscard]] int rank() const { return static_cast<int>(parts_.size()); }
  [[nodiscard]] long degree() const;
  [[nodiscard]] int operator[](std::size_t i) const { return parts_.at(i); }
  [[nodiscard]] std::string str() const;

  friend bool operator==(const SplittingType&, const SplittingType&) = default;
  friend auto operator<=>(const SplittingType&, const SplittingType&) = default;

 private:
  std::vector<int> parts_;
};

[[nodiscard]] long h0(const SplittingType& t);
[[nodiscard]] long h1(const SplittingType& t);

[[nodiscard]] SplittingType dual_type(const SplittingType& t);
[[nodiscard]] SplittingType twist_type(const SplittingType& t, int n);
[[nodiscard]] SplittingType tensor_type(const SplittingType& s, const SplittingType& t);
[[nodiscard]] SplittingType hom_type(const SplittingType& s, const SplittingType& t);
[[nodiscard]] SplittingType end_type(const SplittingType& t);
[[nodiscard]] SplittingType sym2_type(const SplittingType& t);
[[nodiscard]] SplittingType sym3_type(const SplittingType& t);
[[nodiscard]] SplittingType wedge2_type(const SplittingType& t);
[[nodiscard]] SplittingType det_type(const SplittingType& t);

[[nodiscard]] long codim_simultaneous(const SplittingType& e, const SplittingType& f);

/// h1(End e) + h1(End f) - h1(f^dual (x) Sym^2 e); e of rank 3, f of rank 2.
[[nodiscard]] long codim_hurwitz4(const SplittingType& e, const SplittingType& f);

/// h1(End e) + h1(End f) - h1(e (x) wedge^2 f (x) O(-g-4)); e of rank 4 and
/// degree g+4, f of rank 5 and degree 2g+8.
[[nodiscard]] long codim_hurwitz5(const SplittingType& e, const SplittingType& f, long g);

/// f^dual (x) Sym^2 e: its h1 obstructs degree-4 covers.
[[nodiscard]] SplittingType obstruction_type4(const SplittingType& e, const SplittingType& f);
/// e (x) wedge^2 f (x) O(-g-4).
[[nodiscard]] SplittingType obstruction_type5(const SplittingType& e, const SplittingType& f, long g);

struct Constraints4 {
  bool degrees_match = false;    // e1+e2+e3 = f1+f2
  bool e1_positive = false;      // e1 >= 1
  bool two_e1_ge_f1 = false;
  bool two_e2_ge_f2 = false;
  bool quadric_irreducible = false;  // not (e1+e3 < f2 and 2 e3 <= f2)
  bool non_factoring = false;    // e1 + e3 - f2 >= 0
  bool in_H_prime = false;       // every summand of f^dual (x) Sym^2 e >= -1
  bool in_H_circ = false;        // every summand >= 1

  [[nodiscard]] bool irreducible_ok() const {
    return degrees_match && e1_positive && two_e1_ge_f1 && two_e2_ge_f2 && quadric_irreducible;
  }
  [[nodiscard]] bool non_factoring_ok() const { return irreducible_ok() && non_factoring; }
};

[[nodiscard]] Constraints4 constraints_4(const SplittingType& e, const SplittingType& f);

struct Constraints5 {
  bool degrees_match = false;  // deg e = g+4, deg f = 2g+8
  bool lower = false;          // f1 + f3 + e4 >= g+4
  bool imp2 = false;           // f1 + f4 + e3 >= g+4
  bool imp3 = false;           // f2 + f3 + e3 >= g+4
  bool f_globally_generated = false;
  bool in_H_prime = false;     // summands of e (x) wedge^2 f (-g-4) >= -1, f globally generated
  bool in_H_circ = false;      // summands >= 1, f globally generated

  [[nodiscard]] bool pfaffian_ok() const { return degrees_match && lower && imp2 && imp3; }
};

[[nodiscard]] Constraints5 constraints_5(const SplittingType& e, const SplittingType& f, long g);

enum class StrataFilter { all, irreducible, non_factoring };

[[nodiscard]] StrataFilter parse_strata_filter(std::string_view text);
[[nodiscard]] std::string_view to_string(StrataFilter f);

struct StratumRecord {
  SplittingType e;
  SplittingType f;
  long codim = 0;
  Constraints4 flags;
};

/// Candidate strata of degree-4 covers of genus g: e1 in [1, (g+3)/3],
/// f1 in [1, (g+3)/2], sorted by codimension, then e and f descending.
[[nodiscard]] std::vector<StratumRecord> enumerate_strata4(long g, StrataFilter filter);

/// Codimension 2(g'+1) of covers factoring through a genus-g' double cover.
[[nodiscard]] long factoring_codim(long g_prime);

/// Number of summands e_i + f_j + f_k - (g+4) < 0 over the 40 triples, j < k.
[[nodiscard]] int negative_summand_count5(const SplittingType& e, const SplittingType& f, long g);

}  // namespace taut
