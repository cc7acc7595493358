// knotrep: command-line front end.
//
// Exit codes: 0 success, 1 usage or input error, 2 a budget cut the
// computation short (results marked incomplete), 3 internal invariant
// violation (always a bug).

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "knotrep/diagram.hpp"
#include "knotrep/elimination.hpp"
#include "knotrep/fox.hpp"
#include "knotrep/hom_search.hpp"
#include "knotrep/lemma_checks.hpp"
#include "knotrep/obstruction.hpp"
#include "knotrep/poly_text.hpp"

using json = nlohmann::ordered_json;
using namespace knotrep;

namespace {

constexpr int kOk = 0, kUsage = 1, kIncomplete = 2, kInternal = 3;

std::optional<SourceFormat> format_of(const std::string& name) {
  if (name.empty()) return std::nullopt;
  if (name == "braid") return SourceFormat::Braid;
  if (name == "dt") return SourceFormat::DT;
  if (name == "pd") return SourceFormat::PD;
  fail(ErrorCode::InvalidInput, "unknown format '" + name + "'");
}

Presentation knot_group(const Diagram& d) {
  return tietze_simplify(wirtinger(d)).first;
}

json dims_json(const DimInvariant& inv) {
  return json{{"dimension_list", inv.dimension_list},
              {"certified", inv.certified},
              {"real_radical_caveat", inv.real_radical_caveat},
              {"budget_exceeded", inv.budget_exceeded}};
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string dim_list_text(const std::vector<int>& dims) {
  std::string out = "[";
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(dims[i]);
  }
  return out + "]";
}

int cmd_parse(const std::string& path, const std::string& format, bool as_json) {
  Diagram d = parse_knot_file(path, format_of(format));
  if (as_json) {
    emit(json{{"schema", 1},
              {"format", source_format_name(d.source_format)},
              {"crossings", d.crossings.size()},
              {"digest", diagram_digest(d)},
              {"pd", to_pd_text(d)}});
    return kOk;
  }
  std::cout << "format: " << source_format_name(d.source_format) << "\n"
            << "crossings: " << d.crossings.size() << "\n"
            << "digest: " << diagram_digest(d) << "\n"
            << to_pd_text(d);
  return kOk;
}

int cmd_wirtinger(const std::string& path, const std::string& format, bool as_json) {
  Diagram d = parse_knot_file(path, format_of(format));
  Presentation p = wirtinger(d);
  Abelianization ab = abelianization(p);
  if (as_json) {
    std::vector<std::string> rels;
    for (const Word& r : p.relators) rels.push_back(word_to_text(r));
    emit(json{{"schema", 1},
              {"generators", p.generator_count},
              {"relators", rels},
              {"abelianization",
               json{{"rank", ab.rank}, {"torsion", ab.torsion}}}});
    return kOk;
  }
  std::cout << presentation_to_text(p);
  std::cout << "# abelianization: rank " << ab.rank;
  if (!ab.torsion.empty()) {
    std::cout << ", torsion";
    for (long long t : ab.torsion) std::cout << " " << t;
  }
  std::cout << "\n";
  return kOk;
}

int cmd_homs(const std::string& path, const std::string& format,
             const std::string& group, bool as_json) {
  Diagram d = parse_knot_file(path, format_of(format));
  Presentation p = knot_group(d);
  FiniteGroup g = group_by_name(group);
  HomSearchOptions opts;
  opts.conjugacy_pruning = true;
  unsigned long long count = count_homs(p, g, opts);
  if (as_json) {
    emit(json{{"schema", 1}, {"group", group}, {"count", count}});
    return kOk;
  }
  std::cout << count << "\n";
  return kOk;
}

int cmd_colorings(const std::string& path, const std::string& format, int n,
                  bool as_json) {
  Diagram d = parse_knot_file(path, format_of(format));
  mpz_class count = fox_colorings(d, n);
  if (as_json) {
    emit(json{{"schema", 1}, {"n", n}, {"colorings", count.get_str()}});
    return kOk;
  }
  std::cout << count.get_str() << "\n";
  return kOk;
}

int cmd_ideal(const std::string& path, const std::string& format,
              const std::string& model, const std::string& gauge, bool as_json) {
  Diagram d = parse_knot_file(path, format_of(format));
  RepVarietyModel m =
      build_rep_ideal(knot_group(d), RepTarget::from_name(model),
                      gauge_from_name(gauge));
  if (as_json) {
    std::vector<int> pinned;
    for (const auto& [var, value] : m.scheme.pins) pinned.push_back(var);
    std::vector<std::string> gens;
    for (const Polynomial& g : m.ideal.generators)
      gens.push_back(polynomial_to_text(g, m.ideal.var_names));
    emit(json{{"schema", 1},
              {"target", m.target.name()},
              {"gauge", gauge_name(m.gauge)},
              {"generators", m.presentation.generator_count},
              {"vars_per_generator", m.scheme.vars_per_generator},
              {"pinned", pinned},
              {"vars", m.ideal.var_names},
              {"ideal", gens}});
    return kOk;
  }
  std::cout << model_dump(m);
  return kOk;
}

int cmd_dim(const std::string& path, const std::string& format,
            const std::string& model, const std::string& gauge,
            const Budget& budget, bool as_json) {
  Diagram d = parse_knot_file(path, format_of(format));
  RepVarietyModel m =
      build_rep_ideal(knot_group(d), RepTarget::from_name(model),
                      gauge_from_name(gauge));
  DimInvariant inv = variety_dimension(m, budget);
  if (as_json) {
    emit(json{{"schema", 1},
              {"target", inv.target.name()},
              {"gauge", gauge_name(inv.gauge)},
              {"dimension_list", inv.dimension_list},
              {"certified", inv.certified},
              {"real_radical_caveat", inv.real_radical_caveat},
              {"budget_exceeded", inv.budget_exceeded}});
  } else {
    std::cout << "target: " << inv.target.name() << "\n"
              << "gauge: " << gauge_name(inv.gauge) << "\n"
              << "dimension_list: " << dim_list_text(inv.dimension_list) << "\n"
              << "certified: " << (inv.certified ? "yes" : "no") << "\n"
              << "real_radical_caveat: " << (inv.real_radical_caveat ? "yes" : "no")
              << "\n"
              << "budget_exceeded: " << (inv.budget_exceeded ? "yes" : "no")
              << "\n";
  }
  return inv.budget_exceeded ? kIncomplete : kOk;
}

int cmd_compare(const std::string& path_a, const std::string& path_b,
                const std::string& format, const std::vector<std::string>& models,
                const std::string& gauge, const Budget& budget, bool as_json) {
  Diagram a = parse_knot_file(path_a, format_of(format));
  Diagram b = parse_knot_file(path_b, format_of(format));
  GaugeKind gk = gauge_from_name(gauge);
  std::vector<std::pair<RepTarget, GaugeKind>> specs;
  for (const std::string& m : models) specs.emplace_back(RepTarget::from_name(m), gk);

  ComparisonReport report = compare_knots(a, b, specs, budget);

  if (as_json) {
    json entries = json::array();
    for (const ModelEntry& e : report.entries)
      entries.push_back(json{{"target", e.target.name()},
                             {"gauge", gauge_name(e.gauge)},
                             {"a", dims_json(e.a)},
                             {"b", dims_json(e.b)},
                             {"verdict", lex_verdict_name(e.verdict)},
                             {"note", e.note}});
    emit(json{{"schema", 1},
              {"digest_a", report.digest_a},
              {"digest_b", report.digest_b},
              {"entries", entries},
              {"combined", combined_verdict_name(report.combined)},
              {"real_radical_caveat", report.real_radical_caveat},
              {"budget_exceeded", report.budget_exceeded},
              {"heuristic", report.heuristic}});
  } else {
    std::cout << "A: " << path_a << " (" << report.digest_a << ")\n"
              << "B: " << path_b << " (" << report.digest_b << ")\n";
    for (const ModelEntry& e : report.entries) {
      std::cout << "model " << e.target.name() << " gauge " << gauge_name(e.gauge)
                << ": A=" << dim_list_text(e.a.dimension_list)
                << " B=" << dim_list_text(e.b.dimension_list) << " -> "
                << lex_verdict_name(e.verdict);
      if (!e.note.empty()) std::cout << " (" << e.note << ")";
      std::cout << "\n";
    }
    std::cout << "combined: " << combined_verdict_name(report.combined);
    if (report.heuristic) std::cout << " [heuristic: rational dimension bounds]";
    std::cout << "\n";
  }
  return report.budget_exceeded ? kIncomplete : kOk;
}

int cmd_lemma_demo(const Budget& budget, bool as_json) {
  std::vector<std::string> xy{"x", "y"};
  MonomialOrder o = grevlex_order(2);
  Ideal hyper = ideal_of(xy, {"x*y - 1"});
  Ideal hyper_pt = ideal_of(xy, {"x*y - 1", "x - 1"});
  Ideal axes = ideal_of(xy, {"x*y"});
  Ideal axis = ideal_of(xy, {"x"});

  Ideal elim = eliminate(hyper, {1}, budget);
  PolynomialMap proj{2, 1, {parse_polynomial("x", xy, o)}, {}};
  PolynomialMap diff{2, 1, {parse_polynomial("x - y", xy, o)}, {}};
  Ideal img_proj = image_closure_demo(proj, hyper, budget);
  Ideal img_diff = image_closure_demo(diff, hyper, budget);

  LemmaReport r1 = check_dimension_lemma(hyper, hyper_pt, true, budget);
  LemmaReport r2 = check_dimension_lemma(hyper, hyper, true, budget);
  LemmaReport r3 = check_dimension_lemma(axes, axis, true, budget);

  auto lemma_json = [](const char* name, const LemmaReport& r) {
    return json{{"case", name},
                {"dim_x", r.dim_x},
                {"dim_y", r.dim_y},
                {"relation", ideal_relation_name(r.relation)},
                {"verdict", lemma_verdict_name(r.verdict)},
                {"diagnostic", lemma_diagnostic_name(r.diagnostic)},
                {"message", r.message}};
  };

  if (as_json) {
    emit(json{{"schema", 1},
              {"eliminate_hyperbola_drop_y_generators", elim.generators.size()},
              {"image_projection_generators", img_proj.generators.size()},
              {"image_difference_generators", img_diff.generators.size()},
              {"dimension_lemma",
               json::array({lemma_json("hyperbola_vs_point", r1),
                            lemma_json("hyperbola_vs_itself", r2),
                            lemma_json("axes_vs_axis", r3)})}});
    return kOk;
  }

  std::cout << "eliminate (x*y - 1) drop y: "
            << (elim.generators.empty() ? "zero ideal (closure is the whole line)"
                                        : ideal_to_text(elim))
            << "\n";
  std::cout << "image closure of (x,y) -> x on (x*y - 1): "
            << (img_proj.generators.empty() ? "zero ideal" : ideal_to_text(img_proj))
            << "\n";
  std::cout << "image closure of (x,y) -> x - y on (x*y - 1): "
            << (img_diff.generators.empty() ? "zero ideal" : ideal_to_text(img_diff))
            << "\n";
  for (const auto& [name, r] :
       {std::pair<const char*, const LemmaReport&>{"(x*y-1) vs (x*y-1, x-1)", r1},
        {"(x*y-1) vs itself", r2},
        {"(x*y) vs (x)", r3}})
    std::cout << name << ": " << lemma_verdict_name(r.verdict) << " -- " << r.message
              << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"representation-variety invariants of knot groups"};
  app.require_subcommand(1);

  std::string knot, path_a, path_b, format, gauge = "none", group, model = "su2";
  std::vector<std::string> models;
  int n = 3;
  int budget_deg = Budget{}.max_degree;
  bool as_json = false;

  auto add_common = [&](CLI::App* sub, bool needs_knot) {
    if (needs_knot)
      sub->add_option("--knot", knot, "knot file (.braid/.dt/.pd)")->required();
    sub->add_option("--format", format, "braid|dt|pd (default: by extension)");
    sub->add_flag("--json", as_json, "structured output");
  };

  CLI::App* parse = app.add_subcommand("parse", "parse a knot diagram");
  add_common(parse, true);

  CLI::App* wirt = app.add_subcommand("wirtinger", "knot group presentation");
  add_common(wirt, true);

  CLI::App* homs = app.add_subcommand("homs", "count homomorphisms to a finite group");
  add_common(homs, true);
  homs->add_option("--group", group, "target group (C<n>, D<n>, S<n>, A<n>)")
      ->required();

  CLI::App* colorings = app.add_subcommand("colorings", "Fox n-colorings");
  add_common(colorings, true);
  colorings->add_option("--n", n, "modulus (>= 2)")->required();

  CLI::App* ideal = app.add_subcommand("ideal", "representation variety ideal");
  add_common(ideal, true);
  ideal->add_option("--model", model, "su2|so2|so3|so4");
  ideal->add_option("--gauge", gauge, "none|fix1");

  CLI::App* dim = app.add_subcommand("dim", "dimension list of the variety");
  add_common(dim, true);
  dim->add_option("--model", model, "su2|so2|so3|so4");
  dim->add_option("--gauge", gauge, "none|fix1");
  dim->add_option("--budget-deg", budget_deg, "degree budget");

  CLI::App* compare = app.add_subcommand("compare", "compare two knots");
  compare->add_option("--a", path_a, "first knot file")->required();
  compare->add_option("--b", path_b, "second knot file")->required();
  compare->add_option("--format", format, "braid|dt|pd (default: by extension)");
  compare->add_option("--model", models, "su2|so2|so3|so4 (repeatable)");
  compare->add_option("--gauge", gauge, "none|fix1");
  compare->add_option("--budget-deg", budget_deg, "degree budget");
  compare->add_flag("--json", as_json, "structured output");

  CLI::App* lemma = app.add_subcommand("lemma-demo", "dimension/image demonstrations");
  lemma->add_option("--budget-deg", budget_deg, "degree budget");
  lemma->add_flag("--json", as_json, "structured output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  Budget budget;
  budget.max_degree = budget_deg;
  if (models.empty()) models.push_back("su2");

  try {
    if (parse->parsed()) return cmd_parse(knot, format, as_json);
    if (wirt->parsed()) return cmd_wirtinger(knot, format, as_json);
    if (homs->parsed()) return cmd_homs(knot, format, group, as_json);
    if (colorings->parsed()) return cmd_colorings(knot, format, n, as_json);
    if (ideal->parsed()) return cmd_ideal(knot, format, model, gauge, as_json);
    if (dim->parsed()) return cmd_dim(knot, format, model, gauge, budget, as_json);
    if (compare->parsed())
      return cmd_compare(path_a, path_b, format, models, gauge, budget, as_json);
    if (lemma->parsed()) return cmd_lemma_demo(budget, as_json);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::InternalInvariant:
        return kInternal;
      case ErrorCode::DegreeBudgetExceeded:
      case ErrorCode::BudgetExceeded:
        return kIncomplete;
      default:
        return kUsage;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
