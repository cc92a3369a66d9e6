#include <map>
#include <mutex>

#include "taut/pl_opt.hpp"

namespace taut {

namespace {

/// Builder with variables x1..xa, y1..yb laid out as x then y.
struct Builder {
  int nx;
  int ny;
  PLProgram p;

  Builder(int x, int y) : nx(x), ny(y) {
    p.num_vars = x + y;
    p.linear.assign(static_cast<std::size_t>(x + y), Rational(0));
  }

  [[nodiscard]] std::size_t X(int i) const { return static_cast<std::size_t>(i - 1); }
  [[nodiscard]] std::size_t Y(int j) const { return static_cast<std::size_t>(nx + j - 1); }

  using Terms = std::vector<std::pair<std::size_t, long>>;

  [[nodiscard]] RVector vec(const Terms& t) const {
    RVector v(static_cast<std::size_t>(p.num_vars), Rational(0));
    for (const auto& [i, c] : t) v[i] += Rational(c);
    return v;
  }

  void eq(const Terms& t, long rhs) { p.equalities.push_back({vec(t), Rational(rhs)}); }
  void le(const Terms& t, long rhs) { p.inequalities.push_back({vec(t), Rational(rhs)}); }
  void hinge(const Terms& t, long rhs) { p.hinges.push_back({-1, vec(t), Rational(rhs)}); }
  void objective(const Terms& t) { p.linear = vec(t); }
};

PLProgram lemma_b4() {
  Builder b(3, 2);
  b.eq({{b.X(1), 1}, {b.X(2), 1}, {b.X(3), 1}}, 1);
  b.eq({{b.Y(1), 1}, {b.Y(2), 1}}, 1);
  b.le({{b.X(1), -1}}, 0);
  b.le({{b.X(1), 1}, {b.X(2), -1}}, 0);
  b.le({{b.X(2), 1}, {b.X(3), -1}}, 0);
  b.le({{b.Y(1), -1}}, 0);
  b.le({{b.Y(1), 1}, {b.Y(2), -1}}, 0);
  b.le({{b.X(1), 2}, {b.Y(2), -1}}, 0);
  b.objective({{b.X(3), 2}, {b.X(1), -2}, {b.Y(2), 1}, {b.Y(1), -1}});
  return b.p;
}

PLProgram lemma_coh4() {
  Builder b(3, 2);
  b.eq({{b.X(1), 1}, {b.X(2), 1}, {b.X(3), 1}}, 1);
  b.eq({{b.Y(1), 1}, {b.Y(2), 1}}, 1);
  b.le({{b.X(1), -1}}, 0);
  b.le({{b.X(1), 1}, {b.X(2), -1}}, 0);
  b.le({{b.X(2), 1}, {b.X(3), -1}}, 0);
  b.le({{b.Y(1), -1}}, 0);
  b.le({{b.Y(1), 1}, {b.X(1), -2}}, 0);
  b.le({{b.X(1), 2}, {b.Y(2), -1}}, 0);
  b.le({{b.Y(2), 1}, {b.X(2), -2}}, 0);
  b.le({{b.Y(2), 1}, {b.X(1), -1}, {b.X(3), -1}}, 0);
  b.objective({{b.X(3), 2}, {b.X(1), -2}, {b.Y(2), 1}, {b.Y(1), -1}});
  b.hinge({{b.Y(2), 1}, {b.X(1), -2}}, 0);
  b.hinge({{b.Y(2), 1}, {b.X(1), -1}, {b.X(2), -1}}, 0);
  return b.p;
}

Builder b5_region() {
  Builder b(4, 5);
  b.eq({{b.X(1), 1}, {b.X(2), 1}, {b.X(3), 1}, {b.X(4), 1}}, 1);
  b.eq({{b.Y(1), 1}, {b.Y(2), 1}, {b.Y(3), 1}, {b.Y(4), 1}, {b.Y(5), 1}}, 2);
  b.le({{b.X(1), -1}}, 0);
  for (int i = 1; i < 4; ++i) b.le({{b.X(i), 1}, {b.X(i + 1), -1}}, 0);
  b.le({{b.Y(1), -1}}, 0);
  for (int j = 1; j < 5; ++j) b.le({{b.Y(j), 1}, {b.Y(j + 1), -1}}, 0);
  b.le({{b.X(1), 1}, {b.Y(1), 1}, {b.Y(2), 1}}, 1);
  b.objective({{b.X(4), 3},
               {b.X(3), 1},
               {b.X(2), -1},
               {b.X(1), -3},
               {b.Y(5), 4},
               {b.Y(4), 2},
               {b.Y(2), -2},
               {b.Y(1), -4}});
  return b;
}

PLProgram lemma_b5circ() { return b5_region().p; }

PLProgram lemma_coh5() {
  Builder b = b5_region();
  b.le({{b.Y(1), -1}, {b.Y(3), -1}, {b.X(4), -1}}, -1);
  b.le({{b.Y(1), -1}, {b.Y(4), -1}, {b.X(3), -1}}, -1);
  b.le({{b.Y(2), -1}, {b.Y(3), -1}, {b.X(3), -1}}, -1);
  const std::vector<std::tuple<int, int, int>> pairs{{1, 2, 4}, {1, 3, 3}, {1, 4, 2}, {2, 3, 2}};
  for (const auto& [a, c, top] : pairs)
    for (int i = 1; i <= top; ++i) b.hinge({{b.Y(a), -1}, {b.Y(c), -1}, {b.X(i), -1}}, -1);
  return b.p;
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{"lemma_b4", "lemma_coh4", "lemma_b5circ", "lemma_coh5"};
  return names;
}

PLProgram preset(std::string_view name) {
  if (name == "lemma_b4") return lemma_b4();
  if (name == "lemma_coh4") return lemma_coh4();
  if (name == "lemma_b5circ") return lemma_b5circ();
  if (name == "lemma_coh5") return lemma_coh5();
  throw std::invalid_argument("unknown preset \"" + std::string(name) + "\"");
}

BoundCase parse_bound_case(std::string_view text) {
  if (text == "B_circ") return BoundCase::B_circ;
  if (text == "H_circ") return BoundCase::H_circ;
  throw std::invalid_argument("unknown bound case \"" + std::string(text) + "\" (expected B_circ or H_circ)");
}

std::string_view to_string(BoundCase c) { return c == BoundCase::B_circ ? "B_circ" : "H_circ"; }

std::string bound_preset(int k, BoundCase c) {
  if (k == 4) return c == BoundCase::B_circ ? "lemma_b4" : "lemma_coh4";
  if (k == 5) return c == BoundCase::B_circ ? "lemma_b5circ" : "lemma_coh5";
  throw std::invalid_argument("bound is defined for k = 4 or 5");
}

Rational bound(int k, long g, BoundCase c) {
  const std::string name = bound_preset(k, c);
  if (g < 2) throw std::invalid_argument("genus must be at least 2");
  static std::mutex mu;
  static std::map<std::string, Rational> cache;
  Rational min;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(name);
    if (it == cache.end()) it = cache.emplace(name, solve(preset(name)).min_value).first;
    min = it->second;
  }
  return k == 4 ? Rational(g + 3) * min - 4 : Rational(g + 4) * min - 16;
}

namespace {

using nlohmann::json;

json number(const Rational& r) {
  if (r.is_integer() && r.raw().get_num().fits_slong_p()) return r.to_long();
  return r.str();
}

Rational parse_number(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw std::invalid_argument("expected an integer or a \"p/q\" string, got " + j.dump());
}

json vec_json(const RVector& v) {
  json a = json::array();
  for (const auto& r : v) a.push_back(number(r));
  return a;
}

RVector parse_vec(const json& j, std::size_t n, const char* what) {
  if (!j.is_array() || j.size() != n) {
    throw std::invalid_argument(std::string(what) + " must be an array of " + std::to_string(n) + " numbers");
  }
  RVector v;
  for (const auto& e : j) v.push_back(parse_number(e));
  return v;
}

json rows_json(const std::vector<LinearConstraint>& rows) {
  json a = json::array();
  for (const auto& c : rows) {
    json r = vec_json(c.coeffs);
    r.push_back(number(c.rhs));
    a.push_back(std::move(r));
  }
  return a;
}

std::vector<LinearConstraint> parse_rows(const json& j, std::size_t n, const char* what) {
  std::vector<LinearConstraint> out;
  if (j.is_null()) return out;
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be an array");
  for (const auto& row : j) {
    RVector v = parse_vec(row, n + 1, what);
    Rational rhs = v.back();
    v.pop_back();
    out.push_back({std::move(v), std::move(rhs)});
  }
  return out;
}

}  // namespace

json program_to_json(const PLProgram& p) {
  json hinges = json::array();
  for (const auto& h : p.hinges) {
    hinges.push_back({{"sign", h.sign}, {"coeffs", vec_json(h.coeffs)}, {"rhs", number(h.rhs)}});
  }
  return {{"vars", p.num_vars},
          {"eq", rows_json(p.equalities)},
          {"le", rows_json(p.inequalities)},
          {"obj", {{"lin", vec_json(p.linear)}, {"const", number(p.constant)}, {"hinges", hinges}}}};
}

PLProgram program_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vars") || !j["vars"].is_number_integer()) {
    throw std::invalid_argument("program needs an integer \"vars\" field");
  }
  PLProgram p;
  p.num_vars = j["vars"].get<int>();
  if (p.num_vars < 0) throw std::invalid_argument("\"vars\" must be nonnegative");
  const auto n = static_cast<std::size_t>(p.num_vars);
  p.equalities = parse_rows(j.value("eq", json()), n, "eq");
  p.inequalities = parse_rows(j.value("le", json()), n, "le");
  const json obj = j.value("obj", json::object());
  p.linear = obj.contains("lin") ? parse_vec(obj["lin"], n, "obj.lin") : RVector(n, Rational(0));
  if (obj.contains("const")) p.constant = parse_number(obj["const"]);
  if (obj.contains("hinges")) {
    for (const auto& h : obj["hinges"]) {
      Hinge hg;
      hg.sign = h.value("sign", -1);
      hg.coeffs = parse_vec(h.at("coeffs"), n, "hinge coeffs");
      hg.rhs = h.contains("rhs") ? parse_number(h["rhs"]) : Rational(0);
      p.hinges.push_back(std::move(hg));
    }
  }
  p.validate();
  return p;
}

}  // namespace taut
