#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "taut/rational.hpp"

namespace taut {

using RVector = std::vector<Rational>;

/// coeffs . x = rhs, or coeffs . x <= rhs.
struct LinearConstraint {
  RVector coeffs;
  Rational rhs;
};

/// Contributes sign * max(0, coeffs . x - rhs) to the objective.
struct Hinge {
  int sign = -1;
  RVector coeffs;
  Rational rhs;
};

/// Minimize  linear . x + constant + sum of hinges  over
/// { equalities, inequalities (<=) }.
struct PLProgram {
  int num_vars = 0;
  std::vector<LinearConstraint> equalities;
  std::vector<LinearConstraint> inequalities;
  RVector linear;
  Rational constant;
  std::vector<Hinge> hinges;

  /// Throws std::invalid_argument on length mismatches or bad hinge signs.
  void validate() const;
};

struct PLSolution {
  Rational min_value;
  /// Every attaining vertex, deduplicated and sorted lexicographically.
  std::vector<RVector> argmin_points;
  std::int64_t candidates_examined = 0;
};

class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnboundedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

[[nodiscard]] Rational evaluate(const PLProgram& p, const RVector& x);
[[nodiscard]] bool is_feasible(const PLProgram& p, const RVector& x);

/// Exact minimum by vertex enumeration over constraint and breakpoint
/// hyperplanes, parallelized with OpenMP.
[[nodiscard]] PLSolution solve(const PLProgram& p);
/// Single-threaded reference implementation of solve().
[[nodiscard]] PLSolution solve_serial(const PLProgram& p);

/// Minimum of the objective over `trials` feasible rational points drawn by
/// rejection sampling from a bounding box of the feasible region.
[[nodiscard]] Rational sample_check(const PLProgram& p, int trials, std::uint64_t seed);

[[nodiscard]] const std::vector<std::string>& preset_names();
/// lemma_b4, lemma_coh4, lemma_b5circ, lemma_coh5.
[[nodiscard]] PLProgram preset(std::string_view name);

enum class BoundCase { B_circ, H_circ };
[[nodiscard]] BoundCase parse_bound_case(std::string_view text);
[[nodiscard]] std::string_view to_string(BoundCase c);
/// Name of the preset whose minimum drives bound(k, ., c).
[[nodiscard]] std::string bound_preset(int k, BoundCase c);

/// (g+3) min - 4 for k = 4, (g+4) min - 16 for k = 5, with min from solve().
[[nodiscard]] Rational bound(int k, long g, BoundCase c);

/// {"vars", "eq", "le", "obj": {"lin", "const", "hinges"}}; numbers are
/// integers or "p/q" strings.
[[nodiscard]] nlohmann::json program_to_json(const PLProgram& p);
[[nodiscard]] PLProgram program_from_json(const nlohmann::json& j);

[[nodiscard]] std::string format_point(const RVector& x);

}  // namespace taut
