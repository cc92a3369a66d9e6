#include "taut/splitting.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace taut {

SplittingType::SplittingType(std::vector<int> parts) : parts_(std::move(parts)) {
  std::sort(parts_.begin(), parts_.end());
}

SplittingType SplittingType::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(pos, comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty() && item.front() == '+') item.remove_prefix(1);
    int v = 0;
    auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || end != item.data() + item.size()) {
      throw std::invalid_argument("bad splitting type \"" + std::string(text) + "\"");
    }
    parts.push_back(v);
    pos = comma + 1;
  }
  return SplittingType(std::move(parts));
}

long SplittingType::degree() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }

std::string SplittingType::str() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

long h0(const SplittingType& t) {
  long s = 0;
  for (int e : t.parts()) s += std::max(0, e + 1);
  return s;
}

long h1(const SplittingType& t) {
  long s = 0;
  for (int e : t.parts()) s += std::max(0, -e - 1);
  return s;
}

SplittingType dual_type(const SplittingType& t) {
  std::vector<int> p;
  for (int e : t.parts()) p.push_back(-e);
  return SplittingType(std::move(p));
}

SplittingType twist_type(const SplittingType& t, int n) {
  std::vector<int> p;
  for (int e : t.parts()) p.push_back(e + n);
  return SplittingType(std::move(p));
}

SplittingType tensor_type(const SplittingType& s, const SplittingType& t) {
  std::vector<int> p;
  for (int a : s.parts())
    for (int b : t.parts()) p.push_back(a + b);
  return SplittingType(std::move(p));
}

SplittingType hom_type(const SplittingType& s, const SplittingType& t) {
  return tensor_type(dual_type(s), t);
}

SplittingType end_type(const SplittingType& t) { return hom_type(t, t); }

SplittingType sym2_type(const SplittingType& t) {
  std::vector<int> p;
  const auto& e = t.parts();
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i; j < e.size(); ++j) p.push_back(e[i] + e[j]);
  return SplittingType(std::move(p));
}

SplittingType sym3_type(const SplittingType& t) {
  std::vector<int> p;
  const auto& e = t.parts();
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i; j < e.size(); ++j)
      for (std::size_t k = j; k < e.size(); ++k) p.push_back(e[i] + e[j] + e[k]);
  return SplittingType(std::move(p));
}

SplittingType wedge2_type(const SplittingType& t) {
  std::vector<int> p;
  const auto& e = t.parts();
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j) p.push_back(e[i] + e[j]);
  return SplittingType(std::move(p));
}

SplittingType det_type(const SplittingType& t) {
  return SplittingType({static_cast<int>(t.degree())});
}

long codim_simultaneous(const SplittingType& e, const SplittingType& f) {
  return h1(end_type(e)) + h1(end_type(f));
}

SplittingType obstruction_type4(const SplittingType& e, const SplittingType& f) {
  return tensor_type(dual_type(f), sym2_type(e));
}

SplittingType obstruction_type5(const SplittingType& e, const SplittingType& f, long g) {
  return twist_type(tensor_type(e, wedge2_type(f)), static_cast<int>(-g - 4));
}

namespace {

void require_ranks(const SplittingType& e, int re, const SplittingType& f, int rf) {
  if (e.rank() != re || f.rank() != rf) {
    throw std::invalid_argument("expected e of rank " + std::to_string(re) + " and f of rank " +
                                std::to_string(rf));
  }
}

void require_degree5(const SplittingType& e, const SplittingType& f, long g) {
  require_ranks(e, 4, f, 5);
  if (e.degree() != g + 4 || f.degree() != 2 * g + 8) {
    throw std::invalid_argument("degree-5 types need deg e = g+4 and deg f = 2g+8");
  }
}

bool all_at_least(const SplittingType& t, int bound) {
  return std::all_of(t.parts().begin(), t.parts().end(), [&](int x) { return x >= bound; });
}

}  // namespace

long codim_hurwitz4(const SplittingType& e, const SplittingType& f) {
  require_ranks(e, 3, f, 2);
  return codim_simultaneous(e, f) - h1(obstruction_type4(e, f));
}

long codim_hurwitz5(const SplittingType& e, const SplittingType& f, long g) {
  require_degree5(e, f, g);
  return codim_simultaneous(e, f) - h1(obstruction_type5(e, f, g));
}

Constraints4 constraints_4(const SplittingType& e, const SplittingType& f) {
  require_ranks(e, 3, f, 2);
  Constraints4 c;
  c.degrees_match = e.degree() == f.degree();
  c.e1_positive = e[0] >= 1;
  c.two_e1_ge_f1 = 2 * e[0] >= f[0];
  c.two_e2_ge_f2 = 2 * e[1] >= f[1];
  // Otherwise the second quadric is a constant binary form in the last two
  // coordinates, splits into two linear factors, and C is reducible.
  c.quadric_irreducible = !(e[0] + e[2] < f[1] && 2 * e[2] <= f[1]);
  c.non_factoring = e[0] + e[2] - f[1] >= 0;
  const auto u = obstruction_type4(e, f);
  c.in_H_prime = all_at_least(u, -1);
  c.in_H_circ = all_at_least(u, 1);
  return c;
}

Constraints5 constraints_5(const SplittingType& e, const SplittingType& f, long g) {
  require_ranks(e, 4, f, 5);
  Constraints5 c;
  c.degrees_match = e.degree() == g + 4 && f.degree() == 2 * g + 8;
  c.lower = f[0] + f[2] + e[3] - (g + 4) >= 0;
  c.imp2 = f[0] + f[3] + e[2] - (g + 4) >= 0;
  c.imp3 = f[1] + f[2] + e[2] - (g + 4) >= 0;
  c.f_globally_generated = f[0] >= 0;
  const auto u = obstruction_type5(e, f, g);
  c.in_H_prime = c.f_globally_generated && all_at_least(u, -1);
  c.in_H_circ = c.f_globally_generated && all_at_least(u, 1);
  return c;
}

StrataFilter parse_strata_filter(std::string_view text) {
  if (text == "all") return StrataFilter::all;
  if (text == "irreducible") return StrataFilter::irreducible;
  if (text == "non_factoring" || text == "non-factoring") return StrataFilter::non_factoring;
  throw std::invalid_argument("unknown strata filter \"" + std::string(text) + "\"");
}

std::string_view to_string(StrataFilter f) {
  switch (f) {
    case StrataFilter::all: return "all";
    case StrataFilter::irreducible: return "irreducible";
    case StrataFilter::non_factoring: return "non_factoring";
  }
  return "all";
}

std::vector<StratumRecord> enumerate_strata4(long g, StrataFilter filter) {
  if (g < 2) throw std::invalid_argument("genus must be at least 2");
  const int d = static_cast<int>(g + 3);
  std::vector<StratumRecord> out;
  for (int e1 = 1; 3 * e1 <= d; ++e1) {
    for (int e2 = e1; e1 + 2 * e2 <= d; ++e2) {
      const SplittingType e({e1, e2, d - e1 - e2});
      for (int f1 = 1; 2 * f1 <= d; ++f1) {
        const SplittingType f({f1, d - f1});
        const auto flags = constraints_4(e, f);
        if (filter == StrataFilter::irreducible && !flags.irreducible_ok()) continue;
        if (filter == StrataFilter::non_factoring && !flags.non_factoring_ok()) continue;
        out.push_back({e, f, codim_hurwitz4(e, f), flags});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const StratumRecord& a, const StratumRecord& b) {
    return std::tie(a.codim, b.e, b.f) < std::tie(b.codim, a.e, a.f);
  });
  return out;
}

long factoring_codim(long g_prime) {
  if (g_prime < 0) throw std::invalid_argument("genus g' must be nonnegative");
  return 2 * (g_prime + 1);
}

int negative_summand_count5(const SplittingType& e, const SplittingType& f, long g) {
  require_degree5(e, f, g);
  int count = 0;
  for (int a : e.parts())
    for (std::size_t j = 0; j < 5; ++j)
      for (std::size_t k = j + 1; k < 5; ++k)
        if (a + f[j] + f[k] - (g + 4) < 0) ++count;
  return count;
}

}  // namespace taut
