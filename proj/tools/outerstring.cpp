// outerstring command line: JSON on stdout, diagnostics on stderr.
// Exit codes: 0 success, 1 invalid input, 2 bad usage.
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "outerstring/bounds.hpp"
#include "outerstring/extract.hpp"
#include "outerstring/gen.hpp"
#include "outerstring/io.hpp"
#include "outerstring/svg.hpp"

using namespace outerstring;

namespace {

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_ids(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string id;
  while (std::getline(ss, id, ','))
    if (!id.empty()) out.push_back(id);
  return out;
}

Json violation_json(const Violation& v) {
  Json j{{"kind", std::string(to_string(v.kind))}, {"curves", v.curves}};
  j["at"] = v.where ? Json::array({coordinate_json(v.where->x), coordinate_json(v.where->y)}) : Json(nullptr);
  j["detail"] = v.detail;
  return j;
}

int cmd_validate(const std::string& path) {
  auto curves = parse_family_curves(read_text(path));
  std::vector<const GroundedCurve*> ptrs;
  for (const auto& c : curves) ptrs.push_back(&c);
  const auto violations = check_curves(ptrs);
  Json out{{"valid", violations.empty()}, {"n", curves.size()}};
  Json vs = Json::array();
  for (const auto& v : violations) {
    vs.push_back(violation_json(v));
    std::cerr << describe(v) << "\n";
  }
  out["violations"] = vs;
  std::cout << dump(out);
  return violations.empty() ? 0 : 1;
}

int cmd_stats(const std::string& path) {
  auto f = load_family(path);
  IntersectionGraph g(f);
  auto omega = clique_number(g);
  auto chi = chromatic_number(g);
  Json coloring = Json::object();
  for (std::size_t i = 0; i < f.size(); ++i) coloring[f[i].id] = chi.color[i];
  Json edges = Json::array();
  for (auto [a, b] : g.edges()) edges.push_back(Json::array({f[a].id, f[b].id}));
  Json out{{"n", f.size()}, {"omega", omega.size}, {"chi", chi.colors}};
  out["omega_witness"] = f.ids_of(omega.members);
  out["coloring"] = coloring;
  out["edges"] = edges;
  std::cout << dump(out);
  return 0;
}

struct ExtractArgs {
  std::string procedure, path;
  long alpha = 0, beta = 0, k = 2, xi = 1, t = 2, n = 0;
  std::vector<std::string> overrides;
  std::string source = "lemmas";
  std::size_t budget = 200000;
};

BoundParams params_of(const ExtractArgs& a) {
  BoundParams p;
  p.alpha = a.alpha;
  p.beta = a.beta;
  p.k = a.k;
  p.xi = a.xi;
  p.t = a.t;
  p.n = a.n;
  p.search_budget = a.budget;
  if (a.source == "search")
    p.source = SystemSource::Search;
  else if (a.source != "lemmas")
    throw Usage("--source must be lemmas or search");
  for (const auto& o : a.overrides) {
    const auto eq = o.find('=');
    if (eq == std::string::npos || eq == 0) throw Usage("--override expects name=value, got '" + o + "'");
    try {
      p.overrides[o.substr(0, eq)] = parse_rational(o.substr(eq + 1));
    } catch (const Error&) {
      throw Usage("--override value is not a rational: '" + o + "'");
    }
  }
  return p;
}

int cmd_extract(const ExtractArgs& a) {
  const BoundParams params = params_of(a);
  auto f = load_family(a.path);
  IntersectionGraph g(f);
  ChiOracle chi(g);
  ExtractionReport rep;
  if (a.procedure == "mcguinness")
    rep = run_mcguinness(chi, f.all(), params);
  else if (a.procedure == "bfs")
    rep = run_bfs_supported(chi, f.all());
  else if (a.procedure == "bracket-system")
    rep = attempt_bracket_system(chi, f.all(), params);
  else if (a.procedure == "clique-system")
    rep = attempt_clique_system(chi, f.all(), params);
  else
    rep = run_find_skeleton(chi, f.all(), params);
  if (rep.failure) std::cerr << "stopped at " << rep.failure->step << ": needs " << rep.failure->threshold << ", measured " << rep.failure->measured << "\n";
  std::cout << dump(report_json(f, rep));
  return 0;
}

int cmd_bounds(const std::string& function, long k, long alpha, long xi, long n, long t) {
  if (k < 1 || alpha < 0 || xi < 0 || n < 0 || t < 2) throw Usage("bounds need k >= 1, t >= 2 and nonnegative alpha, xi, n");
  BigInt value;
  if (function == "explicit")
    value = explicit_chi_bound(k);
  else if (function == "f")
    value = f_bound(BigInt(alpha), k, BigInt(xi));
  else if (function == "g2")
    value = g2_bound(BigInt(alpha), static_cast<unsigned long>(n), k, BigInt(xi));
  else
    value = gt_bound(static_cast<unsigned long>(t), BigInt(alpha), static_cast<unsigned long>(n), k, BigInt(xi));
  auto text = format_bound(value);
  if (text.scientific) std::cerr << text.digits << " decimal digits\n";
  std::cout << text.text << "\n";
  return 0;
}

int cmd_generate(std::string kind, std::size_t n, std::size_t bends, std::uint64_t seed, std::int64_t grid, const std::string& out) {
  if (const char* env = std::getenv("OUTERSTRING_SEED_OVERRIDE")) {
    try {
      std::size_t used = 0;
      seed = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw Usage("OUTERSTRING_SEED_OVERRIDE must be a nonnegative integer");
    }
  }
  GenSpec spec;
  try {
    spec.kind = parse_gen_kind(kind);
  } catch (const Error& e) {
    throw Usage(e.what());
  }
  if (n < 1 || bends < 2 || grid < 1) throw Usage("generate needs n >= 1, bends >= 2, grid >= 1");
  spec.n = n;
  spec.bends = bends;
  spec.seed = seed;
  spec.grid = grid;
  const std::string text = dump(family_json(generate(spec)));
  if (out.empty() || out == "-")
    std::cout << text;
  else
    write_text(out, text);
  return 0;
}

int cmd_render(const std::string& path, const std::string& out, const std::string& highlight, const std::string& skeleton,
               const std::string& bracket) {
  auto f = load_family(path);
  IntersectionGraph g(f);
  RenderOptions opt;
  if (!highlight.empty()) opt.highlight = f.set_of(split_ids(highlight));
  if (!skeleton.empty()) opt.skeleton = parse_skeleton(g, read_text(skeleton));
  if (!bracket.empty()) opt.bracket = parse_bracket(f, read_text(bracket));
  const std::string svg = render_svg(f, opt);
  if (out.empty() || out == "-")
    std::cout << svg;
  else
    write_text(out, svg);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grounded curve families: exact intersection graphs, proof structures and extraction procedures"};
  app.require_subcommand(1, 1);

  std::string family;

  auto* validate = app.add_subcommand("validate", "Check a family file for general position");
  validate->add_option("family", family, "family JSON file")->required();

  auto* stats = app.add_subcommand("stats", "n, clique number and chromatic number with witnesses");
  stats->add_option("family", family, "family JSON file")->required();

  ExtractArgs ex;
  auto* extract = app.add_subcommand("extract", "Run an extraction procedure and print its report");
  extract->add_option("procedure", ex.procedure, "mcguinness | bfs | bracket-system | clique-system")
      ->required()
      ->check(CLI::IsMember({"mcguinness", "bfs", "bracket-system", "clique-system"}));
  extract->add_option("family", ex.path, "family JSON file")->required();
  extract->add_option("--alpha", ex.alpha, "alpha")->capture_default_str();
  extract->add_option("--beta", ex.beta, "beta")->capture_default_str();
  extract->add_option("--k", ex.k, "clique number bound")->capture_default_str();
  extract->add_option("--xi", ex.xi, "chromatic bound for clique number k-1")->capture_default_str();
  extract->add_option("--t", ex.t, "size of the last clique")->capture_default_str();
  extract->add_option("--n", ex.n, "number of leading 2-cliques")->capture_default_str();
  extract->add_option("--override", ex.overrides, "step=value replaces a threshold; * matches every step");
  extract->add_option("--source", ex.source, "lemmas | search: where assumed clique systems come from")->capture_default_str();
  extract->add_option("--budget", ex.budget, "node budget for --source search")->capture_default_str();

  ExtractArgs sk;
  sk.procedure = "skeleton";
  auto* skeleton = app.add_subcommand("skeleton", "Search for a skeleton supporting a subfamily with chi > alpha");
  skeleton->add_option("family", sk.path, "family JSON file")->required();
  skeleton->add_option("--alpha", sk.alpha, "alpha")->capture_default_str();

  std::string function = "explicit";
  long bk = 1, balpha = 0, bxi = 1, bn = 0, bt = 2;
  auto* bounds = app.add_subcommand("bounds", "Evaluate the bound recurrences exactly");
  bounds->add_option("--k", bk, "clique number")->required();
  bounds->add_option("--function", function, "explicit | f | g2 | gt")
      ->capture_default_str()
      ->check(CLI::IsMember({"explicit", "f", "g2", "gt"}));
  bounds->add_option("--alpha", balpha, "alpha")->capture_default_str();
  bounds->add_option("--xi", bxi, "xi")->capture_default_str();
  bounds->add_option("--n", bn, "n")->capture_default_str();
  bounds->add_option("--t", bt, "t")->capture_default_str();

  std::string kind = "segments", out;
  std::size_t n = 8, bends = 3;
  std::uint64_t seed = 0;
  std::int64_t grid = 20;
  auto* gen = app.add_subcommand("generate", "Write a seeded random family or a figure fixture");
  gen->add_option("--kind", kind, "segments | polylines | figure")->capture_default_str();
  gen->add_option("--n", n, "number of curves, or the figure number")->capture_default_str();
  gen->add_option("--bends", bends, "maximum vertices per polyline")->capture_default_str();
  gen->add_option("--seed", seed, "seed (OUTERSTRING_SEED_OVERRIDE wins)")->capture_default_str();
  gen->add_option("--grid", grid, "coordinate range")->capture_default_str();
  gen->add_option("--out", out, "output file (default stdout)");

  std::string highlight, skeleton_file, bracket_file;
  auto* render = app.add_subcommand("render", "Draw a family as SVG");
  render->add_option("family", family, "family JSON file")->required();
  render->add_option("--out", out, "output file (default stdout)");
  render->add_option("--highlight", highlight, "comma-separated curve ids");
  render->add_option("--skeleton", skeleton_file, "skeleton JSON {u, v, supports}");
  render->add_option("--bracket", bracket_file, "bracket JSON {P, S}");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e);
      return 0;
    }
    app.exit(e);
    return 2;
  }

  try {
    if (validate->parsed()) return cmd_validate(family);
    if (stats->parsed()) return cmd_stats(family);
    if (extract->parsed()) return cmd_extract(ex);
    if (skeleton->parsed()) return cmd_extract(sk);
    if (bounds->parsed()) return cmd_bounds(function, bk, balpha, bxi, bn, bt);
    if (gen->parsed()) return cmd_generate(kind, n, bends, seed, grid, out);
    if (render->parsed()) return cmd_render(family, out, highlight, skeleton_file, bracket_file);
  } catch (const Usage& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << e.what() << "\n";
    for (const auto& v : e.violations()) std::cerr << "  " << describe(v) << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 2;
}
