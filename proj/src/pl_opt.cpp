#include "taut/pl_opt.hpp"

#include <omp.h>

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <set>

namespace taut {

void PLProgram::validate() const {
  if (num_vars < 0) throw std::invalid_argument("negative number of variables");
  const auto n = static_cast<std::size_t>(num_vars);
  auto check = [&](const RVector& v, const char* what) {
    if (v.size() != n) {
      throw std::invalid_argument(std::string(what) + " has " + std::to_string(v.size()) +
                                  " coefficients, expected " + std::to_string(n));
    }
  };
  for (const auto& c : equalities) check(c.coeffs, "equality");
  for (const auto& c : inequalities) check(c.coeffs, "inequality");
  check(linear, "objective");
  for (const auto& h : hinges) {
    check(h.coeffs, "hinge");
    if (h.sign != 1 && h.sign != -1) throw std::invalid_argument("hinge sign must be +1 or -1");
  }
}

namespace {

Rational dot(const RVector& a, const RVector& x) {
  mpq_class s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero()) s += a[i].raw() * x[i].raw();
  }
  return Rational(s);
}

}  // namespace

Rational evaluate(const PLProgram& p, const RVector& x) {
  Rational v = dot(p.linear, x) + p.constant;
  for (const auto& h : p.hinges) {
    const Rational s = dot(h.coeffs, x) - h.rhs;
    if (s.sign() > 0) v += h.sign > 0 ? s : -s;
  }
  return v;
}

bool is_feasible(const PLProgram& p, const RVector& x) {
  if (x.size() != static_cast<std::size_t>(p.num_vars)) return false;
  for (const auto& c : p.equalities)
    if (dot(c.coeffs, x) != c.rhs) return false;
  for (const auto& c : p.inequalities)
    if (dot(c.coeffs, x) > c.rhs) return false;
  return true;
}

namespace {

using i128 = __int128;

/// Integer row a . t (<= or =) b in the reduced coordinates.
struct IntRow {
  std::vector<mpz_class> a;
  mpz_class b;
  std::vector<std::int64_t> a64;
  std::int64_t b64 = 0;
  bool small = false;

  friend bool operator<(const IntRow& x, const IntRow& y) {
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  }
  friend bool operator==(const IntRow& x, const IntRow& y) { return x.a == y.a && x.b == y.b; }
};

constexpr std::int64_t kSmall = std::int64_t{1} << 30;

bool fits_small(const mpz_class& v) { return v.fits_slong_p() && std::abs(v.get_si()) < kSmall; }

/// Clears denominators and common factors of (coeffs, rhs).
IntRow make_row(const RVector& coeffs, const Rational& rhs, bool normalize_sign) {
  mpz_class l = 1;
  for (const auto& c : coeffs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.raw().get_den_mpz_t());
  mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), rhs.raw().get_den_mpz_t());
  IntRow r;
  mpz_class g = 0;
  for (const auto& c : coeffs) {
    mpz_class v = c.raw().get_num() * (l / c.raw().get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    r.a.push_back(std::move(v));
  }
  r.b = rhs.raw().get_num() * (l / rhs.raw().get_den());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r.b.get_mpz_t());
  if (g > 1) {
    for (auto& v : r.a) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(r.b.get_mpz_t(), r.b.get_mpz_t(), g.get_mpz_t());
  }
  if (normalize_sign) {
    for (const auto& v : r.a) {
      if (v == 0) continue;
      if (v < 0) {
        for (auto& w : r.a) w = -w;
        r.b = -r.b;
      }
      break;
    }
  }
  r.small = fits_small(r.b);
  for (const auto& v : r.a) r.small = r.small && fits_small(v);
  if (r.small) {
    for (const auto& v : r.a) r.a64.push_back(v.get_si());
    r.b64 = r.b.get_si();
  }
  return r;
}

bool is_zero_row(const IntRow& r) {
  return std::all_of(r.a.begin(), r.a.end(), [](const mpz_class& v) { return v == 0; });
}

/// Affine parametrization x = x0 + N t of the equality subspace, with all
/// constraints and hinges rewritten in t.
struct Reduced {
  int n = 0;
  int m = 0;
  RVector x0;
  std::vector<RVector> basis;  // m vectors of length n
  std::vector<IntRow> ineq;    // a . t <= b
  std::vector<IntRow> planes;  // distinct hyperplanes a . t = b
  RVector obj;                 // objective in t
  Rational obj_const;
  std::vector<std::pair<int, std::pair<RVector, Rational>>> hinges;  // sign, (coeffs in t, rhs)

  [[nodiscard]] RVector lift(const RVector& t) const {
    RVector x = x0;
    for (int j = 0; j < m; ++j) {
      if (t[static_cast<std::size_t>(j)].is_zero()) continue;
      for (int i = 0; i < n; ++i) {
        x[static_cast<std::size_t>(i)] += basis[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] *
                                          t[static_cast<std::size_t>(j)];
      }
    }
    return x;
  }

  [[nodiscard]] Rational value(const RVector& t) const {
    Rational v = dot(obj, t) + obj_const;
    for (const auto& [sign, h] : hinges) {
      const Rational s = dot(h.first, t) - h.second;
      if (s.sign() > 0) v += sign > 0 ? s : -s;
    }
    return v;
  }
};

RVector pull(const RVector& a, const Reduced& r) {
  RVector out;
  for (const auto& col : r.basis) out.push_back(dot(a, col));
  return out;
}

Reduced reduce(const PLProgram& p) {
  p.validate();
  Reduced r;
  r.n = p.num_vars;
  const auto n = static_cast<std::size_t>(p.num_vars);

  // Row-reduce [E | f].
  std::vector<RVector> M;
  for (const auto& c : p.equalities) {
    RVector row = c.coeffs;
    row.push_back(c.rhs);
    M.push_back(std::move(row));
  }
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < M.size(); ++col) {
    std::size_t piv = row;
    while (piv < M.size() && M[piv][col].is_zero()) ++piv;
    if (piv == M.size()) continue;
    std::swap(M[piv], M[row]);
    const Rational inv = Rational(1) / M[row][col];
    for (auto& v : M[row]) v *= inv;
    for (std::size_t i = 0; i < M.size(); ++i) {
      if (i == row || M[i][col].is_zero()) continue;
      const Rational f = M[i][col];
      for (std::size_t j = col; j <= n; ++j) M[i][j] -= f * M[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < M.size(); ++i) {
    if (!M[i][n].is_zero()) throw InfeasibleError("equality constraints are inconsistent");
  }

  r.x0.assign(n, Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) r.x0[pivots[i]] = M[i][n];
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    RVector v(n, Rational(0));
    v[j] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -M[i][j];
    r.basis.push_back(std::move(v));
  }
  r.m = static_cast<int>(r.basis.size());

  std::set<IntRow> planes;
  for (const auto& c : p.inequalities) {
    const RVector a = pull(c.coeffs, r);
    const Rational b = c.rhs - dot(c.coeffs, r.x0);
    IntRow ir = make_row(a, b, false);
    if (is_zero_row(ir)) {
      if (ir.b < 0) throw InfeasibleError("an inequality reduces to 0 <= negative");
      continue;
    }
    planes.insert(make_row(a, b, true));
    r.ineq.push_back(std::move(ir));
  }
  r.obj = pull(p.linear, r);
  r.obj_const = dot(p.linear, r.x0) + p.constant;
  for (const auto& h : p.hinges) {
    const RVector a = pull(h.coeffs, r);
    const Rational b = h.rhs - dot(h.coeffs, r.x0);
    r.hinges.push_back({h.sign, {a, b}});
    IntRow ir = make_row(a, b, true);
    if (!is_zero_row(ir)) planes.insert(std::move(ir));
  }
  r.planes.assign(planes.begin(), planes.end());
  return r;
}

/// Solution of a square system as t = num / den with den > 0.
struct Vertex {
  std::vector<mpz_class> num;
  mpz_class den;
};

/// Fraction-free Gauss-Jordan on the augmented m x (m+1) matrix; on success
/// every diagonal entry equals +-det and column m holds det * t.
template <class Get>
std::optional<Vertex> solve_big(int m, Get&& entry) {
  const auto M = static_cast<std::size_t>(m);
  std::vector<mpz_class> a(M * (M + 1));
  for (std::size_t i = 0; i < M; ++i)
    for (std::size_t j = 0; j <= M; ++j) a[i * (M + 1) + j] = entry(i, j);
  mpz_class prev = 1;
  mpz_class tmp;
  for (std::size_t k = 0; k < M; ++k) {
    std::size_t p = k;
    while (p < M && a[p * (M + 1) + k] == 0) ++p;
    if (p == M) return std::nullopt;
    if (p != k)
      for (std::size_t j = 0; j <= M; ++j) std::swap(a[p * (M + 1) + j], a[k * (M + 1) + j]);
    const mpz_class& piv = a[k * (M + 1) + k];
    for (std::size_t i = 0; i < M; ++i) {
      if (i == k) continue;
      const mpz_class f = a[i * (M + 1) + k];
      for (std::size_t j = 0; j <= M; ++j) {
        if (j == k) continue;
        mpz_class& x = a[i * (M + 1) + j];
        x *= piv;
        tmp = f * a[k * (M + 1) + j];
        x -= tmp;
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
      a[i * (M + 1) + k] = 0;
    }
    for (std::size_t i = 0; i < k; ++i) a[i * (M + 1) + i] = piv;
    prev = piv;
  }
  Vertex v;
  v.den = prev;
  for (std::size_t i = 0; i < M; ++i) v.num.push_back(a[i * (M + 1) + M]);
  if (v.den < 0) {
    v.den = -v.den;
    for (auto& x : v.num) x = -x;
  }
  return v;
}

enum class SmallStatus { ok, singular, overflow };

constexpr i128 kLimit = i128{1} << 62;

/// int64 version of solve_big; reports overflow instead of widening.
SmallStatus solve_small(int m, const std::vector<const IntRow*>& rows, std::int64_t* a,
                        std::vector<std::int64_t>& num, std::int64_t& den) {
  const int W = m + 1;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) a[i * W + j] = rows[static_cast<std::size_t>(i)]->a64[static_cast<std::size_t>(j)];
    a[i * W + m] = rows[static_cast<std::size_t>(i)]->b64;
  }
  std::int64_t prev = 1;
  for (int k = 0; k < m; ++k) {
    int p = k;
    while (p < m && a[p * W + k] == 0) ++p;
    if (p == m) return SmallStatus::singular;
    if (p != k)
      for (int j = 0; j <= m; ++j) std::swap(a[p * W + j], a[k * W + j]);
    const std::int64_t piv = a[k * W + k];
    for (int i = 0; i < m; ++i) {
      if (i == k) continue;
      const std::int64_t f = a[i * W + k];
      for (int j = 0; j <= m; ++j) {
        if (j == k) continue;
        const i128 x = (static_cast<i128>(a[i * W + j]) * piv - static_cast<i128>(f) * a[k * W + j]) / prev;
        if (x >= kLimit || x <= -kLimit) return SmallStatus::overflow;
        a[i * W + j] = static_cast<std::int64_t>(x);
      }
      a[i * W + k] = 0;
    }
    for (int i = 0; i < k; ++i) a[i * W + i] = piv;
    prev = piv;
  }
  den = prev;
  num.resize(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) num[static_cast<std::size_t>(i)] = a[i * W + m];
  if (den < 0) {
    den = -den;
    for (auto& x : num) x = -x;
  }
  return SmallStatus::ok;
}

/// a . num <= b * den, exactly.
bool satisfies(const IntRow& r, const Vertex& v) {
  mpz_class s = 0;
  for (std::size_t j = 0; j < r.a.size(); ++j) s += r.a[j] * v.num[j];
  return s <= r.b * v.den;
}

bool satisfies_small(const IntRow& r, const std::vector<std::int64_t>& num, std::int64_t den) {
  // |a| < 2^30 and |num| < 2^62: each product < 2^92, sums of < 2^30 terms fit.
  i128 s = 0;
  for (std::size_t j = 0; j < num.size(); ++j) s += static_cast<i128>(r.a64[j]) * num[j];
  return s <= static_cast<i128>(r.b64) * den;
}

RVector to_rational(const Vertex& v) {
  RVector t;
  for (const auto& x : v.num) t.emplace_back(mpq_class(x, v.den));
  return t;
}

Vertex widen(const std::vector<std::int64_t>& num, std::int64_t den) {
  Vertex v;
  for (auto x : num) v.num.emplace_back(static_cast<long>(x));
  v.den = static_cast<long>(den);
  return v;
}

/// Binomial coefficients as 64-bit integers (saturating).
std::uint64_t choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (r > std::numeric_limits<std::uint64_t>::max() / 2) return std::numeric_limits<std::uint64_t>::max() / 2;
  }
  return static_cast<std::uint64_t>(r);
}

/// Lexicographic combination of rank `index` among k-subsets of [0, n).
std::vector<int> unrank(std::uint64_t index, int n, int k) {
  std::vector<int> c;
  int x = 0;
  for (int i = 0; i < k; ++i) {
    while (true) {
      const std::uint64_t rest = choose(n - x - 1, k - i - 1);
      if (index < rest) break;
      index -= rest;
      ++x;
    }
    c.push_back(x++);
  }
  return c;
}

bool next_combination(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  int i = k - 1;
  while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i) --i;
  if (i < 0) return false;
  ++c[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < k; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  return true;
}

/// Candidate vertex of the intersection of rows[c]; nullopt when singular.
std::optional<Vertex> intersect(int m, const std::vector<IntRow>& rows, const std::vector<int>& c,
                                std::vector<std::int64_t>& scratch, std::vector<const IntRow*>& sel,
                                std::vector<std::int64_t>& num64, std::int64_t& den64, bool& is_small) {
  sel.clear();
  bool small = true;
  for (int i : c) {
    sel.push_back(&rows[static_cast<std::size_t>(i)]);
    small = small && rows[static_cast<std::size_t>(i)].small;
  }
  if (small) {
    scratch.resize(static_cast<std::size_t>(m * (m + 1)));
    const auto st = solve_small(m, sel, scratch.data(), num64, den64);
    if (st == SmallStatus::singular) return std::nullopt;
    if (st == SmallStatus::ok) {
      is_small = true;
      return Vertex{};
    }
  }
  is_small = false;
  return solve_big(m, [&](std::size_t i, std::size_t j) -> mpz_class {
    return j == static_cast<std::size_t>(m) ? sel[i]->b : sel[i]->a[j];
  });
}

bool feasible_vertex(const std::vector<IntRow>& ineq, const std::optional<Vertex>& big, bool is_small,
                     const std::vector<std::int64_t>& num64, std::int64_t den64) {
  if (is_small) {
    bool all_small = true;
    for (const auto& r : ineq) {
      if (!r.small) {
        all_small = false;
        break;
      }
    }
    if (all_small) {
      for (const auto& r : ineq)
        if (!satisfies_small(r, num64, den64)) return false;
      return true;
    }
    const Vertex v = widen(num64, den64);
    for (const auto& r : ineq)
      if (!satisfies(r, v)) return false;
    return true;
  }
  for (const auto& r : ineq)
    if (!satisfies(r, *big)) return false;
  return true;
}

struct Best {
  std::optional<Rational> value;
  std::set<RVector> points;

  void offer(const Rational& v, RVector t) {
    if (!value || v < *value) {
      value = v;
      points.clear();
      points.insert(std::move(t));
    } else if (v == *value) {
      points.insert(std::move(t));
    }
  }
  void merge(Best&& o) {
    if (!o.value) return;
    if (!value || *o.value < *value) {
      *this = std::move(o);
    } else if (*o.value == *value) {
      points.merge(o.points);
    }
  }
};

/// Visits every feasible vertex of {ineq} among intersections of m rows of
/// `rows`, for combination ranks in [begin, end).
template <class Visit>
void scan(const Reduced& r, const std::vector<IntRow>& rows, const std::vector<IntRow>& ineq,
          std::uint64_t begin, std::uint64_t end, Visit&& visit) {
  const int H = static_cast<int>(rows.size());
  const int m = r.m;
  if (begin >= end) return;
  std::vector<int> c = unrank(begin, H, m);
  std::vector<std::int64_t> scratch, num64;
  std::vector<const IntRow*> sel;
  std::int64_t den64 = 1;
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    bool is_small = false;
    auto v = intersect(m, rows, c, scratch, sel, num64, den64, is_small);
    if (v && feasible_vertex(ineq, v, is_small, num64, den64)) {
      visit(is_small ? widen(num64, den64) : *v);
    }
    if (!next_combination(c, H)) break;
  }
}

/// Rank of integer rows (as rationals).
int rank_of(const std::vector<IntRow>& rows, int m) {
  std::vector<RVector> M;
  for (const auto& row : rows) {
    RVector v;
    for (const auto& a : row.a) v.emplace_back(mpq_class(a));
    M.push_back(std::move(v));
  }
  int rank = 0;
  for (int col = 0; col < m && rank < static_cast<int>(M.size()); ++col) {
    auto piv = static_cast<std::size_t>(rank);
    while (piv < M.size() && M[piv][static_cast<std::size_t>(col)].is_zero()) ++piv;
    if (piv == M.size()) continue;
    std::swap(M[piv], M[static_cast<std::size_t>(rank)]);
    for (std::size_t i = static_cast<std::size_t>(rank) + 1; i < M.size(); ++i) {
      if (M[i][static_cast<std::size_t>(col)].is_zero()) continue;
      const Rational f = M[i][static_cast<std::size_t>(col)] / M[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)];
      for (std::size_t j = static_cast<std::size_t>(col); j < static_cast<std::size_t>(m); ++j)
        M[i][j] -= f * M[static_cast<std::size_t>(rank)][j];
    }
    ++rank;
  }
  return rank;
}

mpz_class det_big(std::vector<mpz_class> a, std::size_t M) {
  if (M == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < M; ++k) {
    std::size_t p = k;
    while (p < M && a[p * M + k] == 0) ++p;
    if (p == M) return 0;
    if (p != k) {
      for (std::size_t j = 0; j < M; ++j) std::swap(a[p * M + j], a[k * M + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < M; ++i) {
      for (std::size_t j = k + 1; j < M; ++j) {
        mpz_class x = a[i * M + j] * a[k * M + k] - a[i * M + k] * a[k * M + j];
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
        a[i * M + j] = x;
      }
    }
    prev = a[k * M + k];
  }
  return sign * a[M * M - 1];
}

/// True when the recession cone {d : A d <= 0} contains a nonzero vector,
/// assuming A has full column rank (so the cone is pointed).
bool has_recession_ray(const std::vector<IntRow>& ineq, int m) {
  const int H = static_cast<int>(ineq.size());
  auto test = [&](const std::vector<mpz_class>& d) {
    bool nonpos = true, nonneg = true;
    for (const auto& r : ineq) {
      mpz_class s = 0;
      for (std::size_t j = 0; j < d.size(); ++j) s += r.a[j] * d[j];
      if (s > 0) nonpos = false;
      if (s < 0) nonneg = false;
    }
    return nonpos || nonneg;
  };
  if (m == 1) return test({mpz_class(1)});
  std::vector<int> c(static_cast<std::size_t>(m - 1));
  for (int i = 0; i < m - 1; ++i) c[static_cast<std::size_t>(i)] = i;
  if (H < m - 1) return true;
  const auto k = static_cast<std::size_t>(m - 1);
  do {
    // Generalized cross product of the m-1 rows.
    std::vector<mpz_class> d(static_cast<std::size_t>(m));
    bool nonzero = false;
    for (int col = 0; col < m; ++col) {
      std::vector<mpz_class> minor;
      minor.reserve(k * k);
      for (int i : c)
        for (int j = 0; j < m; ++j)
          if (j != col) minor.push_back(ineq[static_cast<std::size_t>(i)].a[static_cast<std::size_t>(j)]);
      mpz_class det = det_big(std::move(minor), k);
      if (col % 2) det = -det;
      if (det != 0) nonzero = true;
      d[static_cast<std::size_t>(col)] = det;
    }
    if (nonzero && test(d)) return true;
  } while (next_combination(c, H));
  return false;
}

bool any_feasible_vertex(const Reduced& r) {
  bool found = false;
  const std::uint64_t total = choose(static_cast<int>(r.ineq.size()), r.m);
  scan(r, r.ineq, r.ineq, 0, total, [&](const Vertex&) { found = true; });
  return found;
}

/// Raises InfeasibleError / UnboundedError when the vertex method does not apply.
void check_region(const Reduced& r) {
  if (r.m == 0) return;
  const int rank = rank_of(r.ineq, r.m);
  if (rank < r.m) {
    // A lineality direction exists; the region is either empty or unbounded.
    // Pin the lineality space by restricting to a complement and look for a point.
    Reduced pinned = r;
    for (int j = 0; j < r.m; ++j) {
      RVector e(static_cast<std::size_t>(r.m), Rational(0));
      e[static_cast<std::size_t>(j)] = 1;
      IntRow lo = make_row(e, Rational(0), false);
      std::vector<IntRow> trial = pinned.ineq;
      trial.push_back(lo);
      if (rank_of(trial, r.m) > rank_of(pinned.ineq, r.m)) {
        pinned.ineq.push_back(lo);
        RVector ne(static_cast<std::size_t>(r.m), Rational(0));
        ne[static_cast<std::size_t>(j)] = -1;
        pinned.ineq.push_back(make_row(ne, Rational(0), false));
      }
    }
    if (any_feasible_vertex(pinned)) throw UnboundedError("feasible region is unbounded (contains a line)");
    throw InfeasibleError("no feasible point");
  }
  if (has_recession_ray(r.ineq, r.m)) {
    if (any_feasible_vertex(r)) throw UnboundedError("feasible region is unbounded");
    throw InfeasibleError("no feasible point");
  }
}

PLSolution finish(const Reduced& r, Best&& best, std::uint64_t examined) {
  if (!best.value) throw InfeasibleError("no feasible point");
  PLSolution s;
  s.min_value = *best.value;
  s.candidates_examined = static_cast<std::int64_t>(examined);
  for (const auto& t : best.points) s.argmin_points.push_back(r.lift(t));
  std::sort(s.argmin_points.begin(), s.argmin_points.end());
  s.argmin_points.erase(std::unique(s.argmin_points.begin(), s.argmin_points.end()), s.argmin_points.end());
  return s;
}

std::optional<PLSolution> trivial_case(const Reduced& r) {
  if (r.m != 0) return std::nullopt;
  // Only the point x0; reduced inequalities were all 0 <= b with b >= 0.
  PLSolution s;
  s.min_value = r.value({});
  s.argmin_points.push_back(r.x0);
  s.candidates_examined = 1;
  return s;
}

PLSolution solve_impl(const PLProgram& p, bool parallel) {
  const Reduced r = reduce(p);
  if (auto t = trivial_case(r)) return *t;
  check_region(r);

  const std::uint64_t total = choose(static_cast<int>(r.planes.size()), r.m);
  Best best;
  if (!parallel) {
    scan(r, r.planes, r.ineq, 0, total, [&](const Vertex& v) {
      RVector t = to_rational(v);
      const Rational val = r.value(t);
      best.offer(val, std::move(t));
    });
    return finish(r, std::move(best), total);
  }

  constexpr std::uint64_t kChunk = 2048;
  const auto chunks = static_cast<std::int64_t>((total + kChunk - 1) / kChunk);
  std::vector<Best> partial(static_cast<std::size_t>(std::max(1, omp_get_max_threads())));
#pragma omp parallel
  {
    Best& mine = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t c = 0; c < chunks; ++c) {
      const std::uint64_t begin = static_cast<std::uint64_t>(c) * kChunk;
      const std::uint64_t end = std::min(total, begin + kChunk);
      scan(r, r.planes, r.ineq, begin, end, [&](const Vertex& v) {
        RVector t = to_rational(v);
        const Rational val = r.value(t);
        mine.offer(val, std::move(t));
      });
    }
  }
  for (auto& b : partial) best.merge(std::move(b));
  return finish(r, std::move(best), total);
}

}  // namespace

PLSolution solve(const PLProgram& p) { return solve_impl(p, true); }
PLSolution solve_serial(const PLProgram& p) { return solve_impl(p, false); }

Rational sample_check(const PLProgram& p, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  const Reduced r = reduce(p);
  if (r.m == 0) {
    if (!is_feasible(p, r.x0)) throw InfeasibleError("no feasible point");
    return evaluate(p, r.x0);
  }
  check_region(r);

  // Bounding box of the feasible region from its vertices.
  std::vector<std::optional<Rational>> lo(static_cast<std::size_t>(r.m)), hi(static_cast<std::size_t>(r.m));
  scan(r, r.ineq, r.ineq, 0, choose(static_cast<int>(r.ineq.size()), r.m), [&](const Vertex& v) {
    const RVector t = to_rational(v);
    for (std::size_t j = 0; j < t.size(); ++j) {
      if (!lo[j] || t[j] < *lo[j]) lo[j] = t[j];
      if (!hi[j] || t[j] > *hi[j]) hi[j] = t[j];
    }
  });
  if (!lo[0]) throw InfeasibleError("no feasible point");

  // Sample t = k / Q on a grid; Q is a multiple of every box denominator so
  // the box corners are grid points.
  mpz_class Q = 1 << 16;
  for (std::size_t j = 0; j < lo.size(); ++j) {
    mpz_lcm(Q.get_mpz_t(), Q.get_mpz_t(), lo[j]->raw().get_den_mpz_t());
    mpz_lcm(Q.get_mpz_t(), Q.get_mpz_t(), hi[j]->raw().get_den_mpz_t());
  }
  std::vector<mpz_class> klo, span;
  for (std::size_t j = 0; j < lo.size(); ++j) {
    const mpq_class a = lo[j]->raw() * Q, b = hi[j]->raw() * Q;
    klo.push_back(a.get_num());
    span.push_back(b.get_num() - a.get_num());
  }
  std::mt19937_64 rng(seed);
  const std::int64_t budget = static_cast<std::int64_t>(trials) * 200000;
  std::optional<Rational> best;
  int accepted = 0;
  auto accept = [&](const Vertex& v) {
    ++accepted;
    const Rational val = r.value(to_rational(v));
    if (!best || val < *best) best = val;
  };

  constexpr long kGrid = 1L << 40;
  bool fast = Q < kGrid;
  for (std::size_t j = 0; j < lo.size() && fast; ++j) fast = abs(klo[j]) < kGrid && span[j] < kGrid;
  for (const auto& row : r.ineq) fast = fast && row.small;

  if (fast) {
    const std::int64_t q = Q.get_si();
    std::vector<std::uniform_int_distribution<std::int64_t>> pick;
    for (std::size_t j = 0; j < lo.size(); ++j) {
      pick.emplace_back(klo[j].get_si(), klo[j].get_si() + span[j].get_si());
    }
    std::vector<std::int64_t> num(lo.size());
    for (std::int64_t attempt = 0; attempt < budget && accepted < trials; ++attempt) {
      for (std::size_t j = 0; j < num.size(); ++j) num[j] = pick[j](rng);
      bool ok = true;
      for (const auto& row : r.ineq) {
        i128 sum = 0;
        for (std::size_t j = 0; j < num.size(); ++j) sum += static_cast<i128>(row.a64[j]) * num[j];
        if (sum > static_cast<i128>(row.b64) * q) {
          ok = false;
          break;
        }
      }
      if (ok) accept(widen(num, q));
    }
  } else {
    gmp_randclass grand(gmp_randinit_mt);
    grand.seed(static_cast<unsigned long>(rng()));
    Vertex v;
    v.den = Q;
    v.num.resize(lo.size());
    for (std::int64_t attempt = 0; attempt < budget && accepted < trials; ++attempt) {
      for (std::size_t j = 0; j < lo.size(); ++j) {
        v.num[j] = klo[j] + (span[j] == 0 ? mpz_class(0) : mpz_class(grand.get_z_range(span[j] + 1)));
      }
      bool ok = true;
      for (const auto& row : r.ineq) {
        if (!satisfies(row, v)) {
          ok = false;
          break;
        }
      }
      if (ok) accept(v);
    }
  }
  if (!best) throw std::runtime_error("sampling found no feasible point within the attempt budget");
  return *best;
}

std::string format_point(const RVector& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ", ";
    s += x[i].str();
  }
  return s + ")";
}

}  // namespace taut
