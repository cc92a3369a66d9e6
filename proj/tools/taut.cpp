#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "taut/ce.hpp"
#include "taut/pl_opt.hpp"
#include "taut/splitting.hpp"

using nlohmann::json;
using namespace taut;

namespace {

constexpr int kExitArgs = 2;
constexpr int kExitMath = 3;

struct Result {
  std::string command;
  json inputs = json::object();
  json output = json::object();
  std::vector<std::string> citations;
  std::string text;
};

void emit(const Result& r, bool as_json) {
  if (as_json) {
    json j{{"command", r.command}, {"inputs", r.inputs}, {"output", r.output}, {"citations", r.citations}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << r.text;
  }
}

json points_json(const std::vector<RVector>& pts) {
  json a = json::array();
  for (const auto& p : pts) {
    json v = json::array();
    for (const auto& x : p) v.push_back(x.str());
    a.push_back(std::move(v));
  }
  return a;
}

std::string points_text(const std::vector<RVector>& pts) {
  std::string s = "[";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) s += ", ";
    s += format_point(pts[i]);
  }
  return s + "]";
}

json generators_json(const std::vector<Generator>& gens) {
  json a = json::array();
  for (const auto& g : gens) a.push_back({{"name", g.name}, {"degree", g.degree}});
  return a;
}

std::string generators_text(const std::vector<Generator>& gens) {
  std::string s;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) s += ", ";
    s += gens[i].name + "(" + std::to_string(gens[i].degree) + ")";
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tautological classes, splitting strata and codimension bounds for Hurwitz spaces"};
  app.require_subcommand(1);
  app.fallthrough();

  bool as_json = false;
  std::optional<int> truncation;
  app.add_flag("--json", as_json, "Print a JSON record instead of text");
  app.add_option("--truncation", truncation, "Truncation order D of the base ring")->check(CLI::PositiveNumber);

  int k = 3;
  int index = 0;
  std::optional<long> genus;
  bool symbolic = false;

  auto* kappa_cmd = app.add_subcommand("kappa", "kappa_i in Casnati-Ekedahl classes");
  kappa_cmd->add_option("-k", k, "Cover degree")->required()->check(CLI::Range(3, 5));
  kappa_cmd->add_option("-i", index, "Index i of kappa_i")->required()->check(CLI::NonNegativeNumber);
  auto* kg = kappa_cmd->add_option("-g,--genus", genus, "Numeric genus")->check(CLI::Range(2L, 1000000L));
  kappa_cmd->add_flag("--symbolic", symbolic, "Keep the genus as a parameter g")->excludes(kg);

  auto* curve_cmd = app.add_subcommand("curve-class", "Class of the universal curve in P(E^dual)");
  curve_cmd->add_option("-k", k, "Cover degree")->required()->check(CLI::Range(3, 5));
  auto* cg = curve_cmd->add_option("-g,--genus", genus, "Numeric genus")->check(CLI::Range(2L, 1000000L));
  curve_cmd->add_flag("--symbolic", symbolic, "Keep the genus as a parameter g")->excludes(cg);

  std::string filter = "irreducible";
  auto* strata_cmd = app.add_subcommand("strata", "Candidate splitting strata of degree-4 covers");
  strata_cmd->add_option("-k", k, "Cover degree (4)")->required();
  strata_cmd->add_option("-g,--genus", genus, "Genus")->required();
  strata_cmd->add_option("--filter", filter, "all | irreducible | non_factoring")
      ->check(CLI::IsMember({"all", "irreducible", "non_factoring", "non-factoring"}));

  std::string e_text, f_text;
  auto* split_cmd = app.add_subcommand("splitting-codim", "Codimension of a splitting locus");
  split_cmd->add_option("-k", k, "Cover degree (4 or 5)")->required()->check(CLI::Range(4, 5));
  split_cmd->add_option("--e", e_text, "Splitting type of E, e.g. 1,4,4")->required();
  split_cmd->add_option("--f", f_text, "Splitting type of F, e.g. 2,7")->required();
  split_cmd->add_option("-g,--genus", genus, "Genus (default: deg e - k + 1)");

  std::string preset_name, spec_file;
  auto* min_cmd = app.add_subcommand("minimize", "Exact minimum of a piecewise-linear program");
  auto* po = min_cmd->add_option("--preset", preset_name, "Built-in program")->check(CLI::IsMember(preset_names()));
  auto* so = min_cmd->add_option("--spec", spec_file, "JSON program file")->check(CLI::ExistingFile);
  po->excludes(so);
  min_cmd->require_option(1);

  std::string case_text = "H_circ";
  auto* bound_cmd = app.add_subcommand("bound", "Codimension lower bound");
  bound_cmd->add_option("-k", k, "Cover degree (4 or 5)")->required()->check(CLI::Range(4, 5));
  bound_cmd->add_option("-g,--genus", genus, "Genus")->required()->check(CLI::Range(2L, 1000000000L));
  bound_cmd->add_option("--case", case_text, "B_circ | H_circ")->check(CLI::IsMember({"B_circ", "H_circ"}));

  auto* pres_cmd = app.add_subcommand("presentation", "Generators and relation-free degree range");
  pres_cmd->add_option("-k", k, "Cover degree")->required()->check(CLI::Range(3, 5));
  pres_cmd->add_option("-g,--genus", genus, "Genus")->required();

  auto* rank_cmd = app.add_subcommand("ce-rank", "Rank of F_i in the resolution");
  rank_cmd->add_option("-i", index, "Index i")->required();
  rank_cmd->add_option("-k", k, "Cover degree")->required()->check(CLI::Range(3, 1000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitArgs;
  }

  Result r;
  try {
    if (kappa_cmd->parsed()) {
      if (!genus && !symbolic) throw std::invalid_argument("kappa needs --genus or --symbolic");
      const int d = truncation.value_or(kappa_min_truncation(k, index) + 2);
      const auto s = ce_setup(k, genus, d);
      const auto res = kappa(s, index);
      r.command = "kappa";
      r.inputs = {{"k", k}, {"i", index}, {"genus", genus ? json(*genus) : json("g")}, {"truncation", d}};
      r.output = {{"polynomial", res.polynomial.to_string()}, {"terms", res.polynomial.to_json()}};
      r.citations = {"kappa_i = f_*(c_1(omega_f)^{i+1}) with c_1(omega_f) = zeta - 2z on P(E^dual)",
                     "projective bundle theorem for pushforward along P(E^dual) -> P^1-bundle -> base",
                     "Casnati-Ekedahl resolution of the universal curve"};
      r.text = res.polynomial.to_string() + "\n";
    } else if (curve_cmd->parsed()) {
      if (!genus && !symbolic) throw std::invalid_argument("curve-class needs --genus or --symbolic");
      const int d = truncation.value_or(k + 1);
      const auto s = ce_setup(k, genus, d);
      const auto c = curve_class(s);
      const FiberClass pushed = push_gamma(c);
      r.command = "curve-class";
      r.inputs = {{"k", k}, {"genus", genus ? json(*genus) : json("g")}, {"truncation", d}};
      r.output = {{"class", c.to_string()}, {"gamma_push", pushed.to_display_poly().to_string()}};
      r.citations = {"Casnati-Ekedahl resolution of the universal curve",
                     "Koszul / Pfaffian resolution classes via Whitney sum formula"};
      r.text = c.to_string() + "\n";
    } else if (strata_cmd->parsed()) {
      if (k != 4) throw std::invalid_argument("strata are enumerated for k = 4 only");
      const auto f = parse_strata_filter(filter);
      const auto rows = enumerate_strata4(*genus, f);
      r.command = "strata";
      r.inputs = {{"k", k}, {"genus", *genus}, {"filter", std::string(to_string(f))}};
      json table = json::array();
      std::ostringstream out;
      out << "# candidate strata, k=4, g=" << *genus << ", filter=" << to_string(f) << "\n";
      out << "e\tf\tcodim\tH'\tH_circ\tnon_factoring\n";
      auto yn = [](bool b) { return b ? "yes" : "no"; };
      for (const auto& row : rows) {
        table.push_back({{"e", row.e.parts()},
                         {"f", row.f.parts()},
                         {"codim", row.codim},
                         {"in_H_prime", row.flags.in_H_prime},
                         {"in_H_circ", row.flags.in_H_circ},
                         {"non_factoring", row.flags.non_factoring}});
        out << row.e.str() << "\t" << row.f.str() << "\t" << row.codim << "\t" << yn(row.flags.in_H_prime) << "\t"
            << yn(row.flags.in_H_circ) << "\t" << yn(row.flags.non_factoring) << "\n";
      }
      r.output = {{"rows", table}};
      r.citations = {"splitting-locus codimension h1(End e) + h1(End f) - h1(f^dual (x) Sym^2 e)",
                     "irreducibility constraints e1 >= 1, 2e1 >= f1, 2e2 >= f2 from the two relative quadrics"};
      r.text = out.str();
    } else if (split_cmd->parsed()) {
      const auto e = SplittingType::parse(e_text);
      const auto f = SplittingType::parse(f_text);
      const long g = genus.value_or(e.degree() - k + 1);
      long codim = 0;
      if (k == 4) {
        if (e.degree() != f.degree()) throw std::invalid_argument("degree-4 types need deg e = deg f");
        codim = codim_hurwitz4(e, f);
      } else {
        codim = codim_hurwitz5(e, f, g);
      }
      r.command = "splitting-codim";
      r.inputs = {{"k", k}, {"e", e.parts()}, {"f", f.parts()}, {"genus", g}};
      r.output = {{"codim", codim}};
      r.citations = {k == 4 ? "h1(End e) + h1(End f) - h1(f^dual (x) Sym^2 e)"
                            : "h1(End e) + h1(End f) - h1(e (x) wedge^2 f (x) O(-g-4))"};
      r.text = std::to_string(codim) + "\n";
    } else if (min_cmd->parsed()) {
      PLProgram p;
      if (!preset_name.empty()) {
        p = preset(preset_name);
        r.inputs = {{"preset", preset_name}};
      } else {
        std::ifstream in(spec_file);
        json j;
        try {
          j = json::parse(in);
        } catch (const json::parse_error& err) {
          throw std::invalid_argument(std::string("bad JSON in ") + spec_file + ": " + err.what());
        }
        p = program_from_json(j);
        r.inputs = {{"spec", program_to_json(p)}};
      }
      const auto s = solve(p);
      r.command = "minimize";
      r.output = {{"min", s.min_value.str()},
                  {"argmin", points_json(s.argmin_points)},
                  {"candidates_examined", s.candidates_examined}};
      r.citations = {"a piecewise-linear function on a polytope attains its minimum where boundary and "
                     "breakpoint hyperplanes meet in a point"};
      r.text = "min = " + s.min_value.str() + " at " + points_text(s.argmin_points) + "\n";
    } else if (bound_cmd->parsed()) {
      const auto c = parse_bound_case(case_text);
      const auto v = bound(k, *genus, c);
      r.command = "bound";
      r.inputs = {{"k", k}, {"genus", *genus}, {"case", std::string(to_string(c))}, {"preset", bound_preset(k, c)}};
      r.output = {{"bound", v.str()}};
      r.citations = {k == 4 ? "codimension >= (g+3) min f - 4 over the normalized splitting region"
                            : "codimension >= (g+4) min f - 16 over the normalized splitting region"};
      r.text = v.str() + "\n";
    } else if (pres_cmd->parsed()) {
      const auto pr = presentation(k, *genus);
      r.command = "presentation";
      r.inputs = {{"k", k}, {"genus", *genus}};
      r.output = {{"generators", generators_json(pr.generators)}, {"truncation_bound", pr.truncation_bound}};
      r.citations = {"Chow ring of the space of Casnati-Ekedahl data is free in degrees below the bound"};
      r.text = "generators: " + generators_text(pr.generators) + "\nno relations below degree " +
               std::to_string(pr.truncation_bound) + "\n";
    } else if (rank_cmd->parsed()) {
      const long v = ce_rank(index, k);
      r.command = "ce-rank";
      r.inputs = {{"i", index}, {"k", k}};
      r.output = {{"rank", v}};
      r.citations = {"rank F_i = i (k-2-i) / (k-1) * binomial(k, i+1), rank F_{k-2} = 1, in the Casnati-Ekedahl resolution"};
      r.text = std::to_string(v) + "\n";
    }
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kExitMath;
  } catch (const UnboundedError& e) {
    std::cerr << "unbounded: " << e.what() << "\n";
    return kExitMath;
  } catch (const TruncationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitArgs;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitArgs;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return 1;
  }
  emit(r, as_json);
  return 0;
}
