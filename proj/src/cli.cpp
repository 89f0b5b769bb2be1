#include "rainbow/cli.hpp"

#include <algorithm>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "rainbow/characterize.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/io.hpp"
#include "rainbow/subgraphs.hpp"
#include "rainbow/transform.hpp"
#include "rainbow/turan.hpp"
#include "rainbow/verify.hpp"

namespace rainbow {

namespace {

using Json = nlohmann::ordered_json;

const std::vector<std::string> kGraphFormats = {"edgelist", "json"};

std::string format_graph(const EdgeColoredGraph& g, const std::string& format) {
  if (format == "json") return io::to_json(g);
  if (format == "dot") return io::to_dot(g);
  return io::to_edgelist(g);
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty())
    out << text;
  else
    io::write_file(path, text);
}

EdgeColoredGraph load_graph(const std::string& path) { return io::parse_graph(io::read_file(path)); }
OrientedGraph load_digraph(const std::string& path) { return io::parse_digraph(io::read_file(path)); }

struct GenerateArgs {
  std::string kind;
  std::optional<int> n, k, parts;
  bool rainbow = false;
  std::string format = "edgelist";
  std::string out;
};

int require_param(const std::optional<int>& value, const char* flag, const std::string& kind) {
  if (!value) throw PreconditionError(kind + " requires " + flag);
  return *value;
}

int run_generate(const GenerateArgs& a, std::ostream& out) {
  LabeledConstruction built;
  if (a.kind == "gk") {
    built = build_gk(require_param(a.n, "--n", a.kind), require_param(a.k, "--k", a.kind));
  } else if (a.kind == "hnk") {
    built = build_hnk(require_param(a.n, "--n", a.kind), require_param(a.k, "--k", a.kind));
  } else if (a.kind == "turan") {
    built = turan_graph(require_param(a.n, "--n", a.kind), require_param(a.parts, "--parts", a.kind), a.rainbow);
  } else if (a.kind == "case2") {
    built = build_case2_figure(a.n.value_or(8), a.k.value_or(7));
  } else {
    built = build_recolored_g1(require_param(a.n, "--n", a.kind));
  }
  emit(format_graph(built.graph, a.format), a.out, out);
  if (!a.out.empty()) io::write_file(a.out + ".meta.json", metadata_to_json(built.meta));
  return kExitOk;
}

struct AnalyzeArgs {
  std::string input;
  int max_clique = 6;
  std::string out;
};

std::string analyze_report(const EdgeColoredGraph& g, int max_clique) {
  const auto st = stats(g);
  const std::int64_t n = g.n(), mc = g.m() + g.c();
  const auto triangles = list_rainbow_triangles(g);
  const auto count = static_cast<std::int64_t>(triangles.size());

  Json doc;
  doc["n"] = n;
  doc["m"] = g.m();
  doc["c"] = g.c();
  doc["m_plus_c"] = mc;
  doc["sum_color_degree"] = st.sum_color_degree();
  doc["sum_saturated_degree"] = st.sum_saturated_degree();
  auto list = Json::array();
  for (const auto& t : triangles) list.push_back({t.a, t.b, t.c});
  doc["rainbow_triangles"] = {{"count", count}, {"list", list}};

  Json cliques = Json::object();
  if (g.has_masks())
    for (int k = 4; k <= max_clique; ++k) cliques[std::to_string(k)] = has_rainbow_clique(g, k);
  doc["rainbow_cliques"] = cliques;

  const auto thr = triangle_threshold(n);
  const auto by_mc = guaranteed_triangles_mc(n, g.m(), g.c());
  const auto by_sum = guaranteed_triangles_colordeg(n, st.sum_color_degree());
  Json th;
  th["T1"] = {{"threshold", thr}, {"value", mc}, {"met", n > 0 && mc >= thr}};
  th["T2"] = {{"threshold", thr}, {"value", mc}, {"margin", mc - thr},
              {"guaranteed_triangles", by_mc}, {"tight", by_mc > 0 && by_mc == count}};
  th["T4"] = {{"threshold", thr}, {"value", st.sum_color_degree()}, {"margin", st.sum_color_degree() - thr},
              {"guaranteed_triangles", by_sum}, {"tight", by_sum > 0 && by_sum == count}};
  auto t5 = Json::array();
  for (int k = 4; k <= max_clique && k <= n; ++k) {
    const auto cthr = clique_threshold(n, k);
    t5.push_back({{"k", k}, {"threshold", cthr}, {"value", mc}, {"margin", mc - cthr},
                  {"guaranteed_cliques", guaranteed_cliques_mc(n, k, g.m(), g.c())}});
  }
  th["T5"] = t5;
  doc["thresholds"] = th;
  return doc.dump(2) + "\n";
}

struct CheckArgs {
  std::string kind;
  std::string input;
  std::optional<int> k, parts;
  bool verdict = false;
  std::string out;
};

int run_check(const CheckArgs& a, std::ostream& out) {
  const auto g = load_graph(a.input);
  std::optional<std::string> cert;
  if (a.kind == "gk") {
    if (auto c = is_in_gk(g, require_param(a.k, "--k", "check gk"))) cert = to_json(*c);
  } else if (a.kind == "hk") {
    if (auto c = is_in_hk(g, require_param(a.k, "--k", "check hk"))) cert = to_json(*c);
  } else {
    if (auto parts = find_rainbow_spanning_turan(g, require_param(a.parts, "--parts", "check turan")))
      cert = Json{{"parts", *parts}}.dump(2) + "\n";
  }
  if (a.verdict)
    emit(cert ? "member\n" : "not a member\n", a.out, out);
  else
    emit(cert ? *cert : "{\"member\": false}\n", a.out, out);
  return kExitOk;
}

struct TransformArgs {
  std::string kind;
  std::string input;
  std::string format = "edgelist";
  bool provenance = false;
  std::string out;
};

std::string_view origin_name(ArcOrigin o) {
  switch (o) {
    case ArcOrigin::p3_forced: return "p3-forced";
    case ArcOrigin::triangle_cycled: return "triangle-cycled";
    case ArcOrigin::free_default: return "free-default";
  }
  return "?";
}

int run_transform(const TransformArgs& a, std::ostream& out) {
  if (a.kind == "associate") {
    emit(format_graph(associated_colored_graph(load_digraph(a.input)).graph, a.format), a.out, out);
  } else if (a.kind == "orient") {
    const auto report = orient_by_p3_rule(load_graph(a.input));
    if (!a.provenance) {
      emit(io::to_digraph_text(report.digraph), a.out, out);
    } else {
      auto arcs = Json::array();
      for (std::size_t i = 0; i < report.origin.size(); ++i) {
        const auto& arc = report.digraph.arcs()[i];
        arcs.push_back({{"tail", arc.tail}, {"head", arc.head}, {"origin", origin_name(report.origin[i])}});
      }
      emit(Json{{"n", report.digraph.n()}, {"arcs", arcs}}.dump(2) + "\n", a.out, out);
    }
  } else {
    const auto d = load_digraph(a.input);
    auto omega = Json::array();
    for (Vertex v = 0; v < d.n(); ++v) omega.push_back(out_component_number(d, v));
    const auto sum = out_component_sum(d);
    Json doc{{"n", d.n()},
             {"arcs", d.arc_count()},
             {"omega", omega},
             {"omega_sum", sum},
             {"directed_triangles", directed_triangles(d).size()},
             {"guaranteed_directed_triangles", guaranteed_directed_triangles(d.n(), d.arc_count(), sum)}};
    emit(doc.dump(2) + "\n", a.out, out);
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string theorem;
  std::optional<int> n_min, n_max, k_min, k_max, ell_max;
  std::optional<std::int64_t> samples;
  std::uint64_t seed = 0;
  int jobs = 1;
  bool noncomplete = false;
  bool complete_only = false;
  bool json = false;
  std::string out;
};

int run_verify(const VerifyArgs& a, std::ostream& out) {
  std::vector<TheoremId> ids;
  if (a.theorem == "all") {
    ids.assign(std::begin(kAllTheorems), std::end(kAllTheorems));
  } else if (auto id = parse_theorem_id(a.theorem)) {
    ids.push_back(*id);
  } else {
    throw InvalidInput("unknown theorem id '" + a.theorem + "'");
  }
  std::string text;
  auto reports = nlohmann::json::array();
  bool ok = true;
  for (auto id : ids) {
    auto grid = default_grid(id);
    if (a.n_min) grid.n_min = *a.n_min;
    if (a.n_max) grid.n_max = *a.n_max;
    if (a.k_min) grid.k_min = *a.k_min;
    if (a.k_max) grid.k_max = *a.k_max;
    if (a.ell_max) grid.ell_max = *a.ell_max;
    if (a.samples) grid.samples = *a.samples;
    if (a.noncomplete) grid.include_noncomplete = true;
    if (a.complete_only) grid.include_noncomplete = false;
    grid.seed = a.seed;
    grid.jobs = a.jobs;
    const auto report = verify_theorem(id, grid);
    ok = ok && report.passed();
    if (a.json)
      reports.push_back(nlohmann::json::parse(to_json(report)));
    else
      text += (text.empty() ? "" : "\n") + to_table(report);
  }
  if (a.json) text = (ids.size() == 1 ? reports[0] : reports).dump(2) + "\n";
  emit(text, a.out, out);
  return ok ? kExitOk : kExitCounterexample;
}

struct ConvertArgs {
  std::string input;
  std::string to = "edgelist";
  std::string out;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rainbow subgraphs in edge-colored graphs: generators, analyzers, recognizers, verifiers",
               "rainbow"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Build a named construction");
  generate->add_option("kind", gen.kind, "gk | hnk | turan | case2 | recolored-g1")
      ->required()
      ->check(CLI::IsMember({"gk", "hnk", "turan", "case2", "recolored-g1"}));
  generate->add_option("--n", gen.n, "Number of vertices");
  generate->add_option("--k", gen.k, "Triangle count (gk) or clique size (hnk, case2)");
  generate->add_option("--parts", gen.parts, "Number of parts (turan)");
  generate->add_flag("--rainbow", gen.rainbow, "Distinct color per edge (turan)");
  generate->add_option("--format", gen.format, "edgelist | json")->check(CLI::IsMember(kGraphFormats));
  generate->add_option("--out", gen.out, "Write FILE and FILE.meta.json instead of stdout");

  AnalyzeArgs an;
  auto* analyze = app.add_subcommand("analyze", "Statistics, rainbow subgraphs and threshold comparisons");
  analyze->add_option("input", an.input, "Graph file (edge list or JSON)")->required();
  analyze->add_option("--max-clique", an.max_clique, "Largest rainbow K_k to look for")
      ->check(CLI::Range(3, 64));
  analyze->add_option("--out", an.out, "Report file");

  CheckArgs chk;
  auto* check = app.add_subcommand("check", "Membership in G_k, H_k or a rainbow spanning Turan graph");
  check->add_option("kind", chk.kind, "gk | hk | turan")->required()->check(CLI::IsMember({"gk", "hk", "turan"}));
  check->add_option("input", chk.input, "Graph file")->required();
  check->add_option("--k", chk.k, "Class parameter k");
  check->add_option("--parts", chk.parts, "Number of Turan parts (turan)");
  check->add_flag("--verdict", chk.verdict, "Print a one-line verdict instead of the certificate");
  check->add_option("--out", chk.out, "Output file");

  TransformArgs tr;
  auto* transform = app.add_subcommand("transform", "Digraph and colored-graph transforms");
  transform->add_option("kind", tr.kind, "associate | orient | omega")
      ->required()
      ->check(CLI::IsMember({"associate", "orient", "omega"}));
  transform->add_option("input", tr.input, "Digraph file (associate, omega) or graph file (orient)")->required();
  transform->add_option("--format", tr.format, "edgelist | json (associate)")->check(CLI::IsMember(kGraphFormats));
  transform->add_flag("--provenance", tr.provenance, "orient: JSON arcs with their origin");
  transform->add_option("--out", tr.out, "Output file");

  VerifyArgs ver;
  auto* verify = app.add_subcommand("verify", "Exhaustive and sampled checks of the theorems and lemmas");
  verify->add_option("theorem", ver.theorem, "T1..T6, L1..L5, P1 or all")->required();
  verify->add_option("--n-min", ver.n_min);
  verify->add_option("--n-max", ver.n_max);
  verify->add_option("--k-min", ver.k_min);
  verify->add_option("--k-max", ver.k_max);
  verify->add_option("--ell-max", ver.ell_max);
  verify->add_option("--samples", ver.samples, "Samples per cell for sampled statements");
  verify->add_option("--seed", ver.seed, "Seed for sampled statements")->capture_default_str();
  verify->add_option("--jobs", ver.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  auto* nc = verify->add_flag("--noncomplete", ver.noncomplete, "Also sweep non-complete graphs (n <= 5)");
  verify->add_flag("--complete-only", ver.complete_only, "Sweep complete graphs only")->excludes(nc);
  verify->add_flag("--json", ver.json, "JSON report instead of a table");
  verify->add_option("--out", ver.out, "Report file");

  ConvertArgs conv;
  auto* convert = app.add_subcommand("convert", "Convert between edge list, JSON and DOT");
  convert->add_option("input", conv.input, "Graph file")->required();
  convert->add_option("--to", conv.to, "edgelist | json | dot")->check(CLI::IsMember({"edgelist", "json", "dot"}));
  convert->add_option("--out", conv.out, "Output file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*generate) return run_generate(gen, out);
    if (*analyze) {
      emit(analyze_report(load_graph(an.input), an.max_clique), an.out, out);
      return kExitOk;
    }
    if (*check) return run_check(chk, out);
    if (*transform) return run_transform(tr, out);
    if (*verify) return run_verify(ver, out);
    if (*convert) {
      emit(format_graph(load_graph(conv.input), conv.to), conv.out, out);
      return kExitOk;
    }
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitPrecondition;
  }
  return kExitUsage;
}

}  // namespace rainbow
