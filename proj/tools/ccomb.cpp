// ccomb: build graph products, emit moment and convolution tables, run the
// verification suites.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ccomb/errors.hpp"
#include "ccomb/graph_io.hpp"
#include "ccomb/graphs.hpp"
#include "ccomb/products.hpp"
#include "ccomb/transforms.hpp"
#include "ccomb/verify.hpp"

namespace fs = std::filesystem;
using namespace ccomb;

namespace {

struct RunConfig {
  unsigned order = 12;
  unsigned max_word = 8;
  std::uint64_t seed = 1;
  std::string out;
};

std::optional<fs::path> output_dir(const RunConfig& cfg) {
  if (!cfg.out.empty()) return fs::path(cfg.out);
  if (const char* env = std::getenv("CCOMB_OUT_DIR"); env && *env) return fs::path(env);
  return std::nullopt;
}

void write_text(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Strip ".graph.json" / ".json" / ".csv" for output names.
std::string stem_of(const fs::path& path) {
  std::string name = path.filename().string();
  for (const std::string suffix : {".graph.json", ".json", ".csv"}) {
    if (name.size() > suffix.size() && name.ends_with(suffix)) return name.substr(0, name.size() - suffix.size());
  }
  return name;
}

std::string format_label(const Label& l) {
  std::string s = "(";
  for (std::size_t i = 0; i < l.size(); ++i) s += (i ? "," : "") + std::to_string(l[i]);
  return s + ")";
}

const std::map<std::string, ProductKind> kProductKinds{
    {"star", ProductKind::star},         {"comb", ProductKind::comb},
    {"orthogonal", ProductKind::orthogonal}, {"comb-at", ProductKind::comb_at},
    {"c-comb", ProductKind::c_comb},     {"comb-loop", ProductKind::comb_loop},
    {"c-comb-loop", ProductKind::c_comb_loop}};

const std::map<std::string, Convolution> kConvolutions{{"monotone", Convolution::monotone},
                                                       {"boolean", Convolution::boolean},
                                                       {"orthogonal", Convolution::orthogonal},
                                                       {"c-monotone", Convolution::c_monotone}};

// ---------------------------------------------------------------- product

int cmd_product(const RunConfig& cfg, const std::string& kind_name, const std::string& p1, const std::string& p2,
                std::string name, int loop_color) {
  const ProductKind kind = kProductKinds.at(kind_name);
  const Graph g1 = read_graph_file(p1).graph;
  const Graph g2 = read_graph_file(p2).graph;
  const ProductGraph p = kind == ProductKind::c_comb_loop
                             ? c_comb_loop_product(g1, g2, loop_color == 2 ? LoopColor::two : LoopColor::one)
                             : make_product(kind, g1, g2);
  if (name.empty()) name = kind_name;
  const fs::path dir = output_dir(cfg).value_or(".");
  fs::create_directories(dir);
  write_graph_file(dir / (name + ".graph.json"), p.graph, &p.vertex_labels);
  write_text(dir / (name + ".dot"), to_dot(p.graph, &p.vertex_labels, name));

  std::cout << "product " << kind_name << ": " << p.graph.vertex_count() << " vertices, " << p.graph.edges().size()
            << " edges\n";
  std::cout << "root e = vertex " << p.graph.root() << " " << format_label(p.vertex_labels[p.graph.root()]) << '\n';
  if (const auto f = p.graph.second_root())
    std::cout << "root f = vertex " << *f << " " << format_label(p.vertex_labels[*f]) << '\n';
  std::cout << "wrote " << (dir / (name + ".graph.json")).string() << " and " << (dir / (name + ".dot")).string()
            << '\n';
  return 0;
}

// ---------------------------------------------------------------- moments

int cmd_moments(const RunConfig& cfg, const std::string& path, const std::string& at) {
  const Graph g = read_graph_file(path).graph;
  const auto m = root_moments(g, cfg.order, at == "f" ? RootSelector::f : RootSelector::e);
  std::ostringstream os;
  write_coefficient_csv(os, m.values(), 0);
  std::cout << os.str();
  if (const auto dir = output_dir(cfg)) write_text(*dir / (stem_of(path) + ".moments-" + at + ".csv"), os.str());
  return 0;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const RunConfig& cfg, const std::string& suite_name, bool order_set) {
  VerifyConfig vc;
  vc.seed = cfg.seed;
  vc.max_word = cfg.max_word;
  vc.family_max_word = std::min(cfg.max_word, vc.family_max_word);
  if (order_set) {
    vc.order = cfg.order;
    vc.series_order = cfg.order;
    vc.eta_order = std::min(cfg.order, vc.eta_order);
  }
  const Report report = run_suite(parse_suite(suite_name), vc);
  std::ostringstream os;
  report.write(os);
  std::cout << os.str();
  if (const auto dir = output_dir(cfg)) write_text(*dir / ("verify-" + suite_name + ".txt"), os.str());
  return report.passed() ? 0 : 1;
}

// ---------------------------------------------------------------- convolve

struct Input {
  std::optional<Graph> graph;
  std::optional<MomentSeries> table;

  MomentSeries moments(unsigned order, RootSelector at = RootSelector::e) const {
    if (graph) return root_moments(*graph, order, at);
    if (at == RootSelector::f) throw SeriesError("a moment table has no second root");
    if (table->order() < order)
      throw SeriesError("moment table has order " + std::to_string(table->order()) + ", need " + std::to_string(order));
    return table->truncated(order);
  }
};

Input read_input(const std::string& path) {
  const std::string text = read_text(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return {parse_graph(text).graph, std::nullopt};
  return {std::nullopt, parse_moment_table(text)};
}

// Walk-count column for graph inputs: closed walks on the matching product for
// the additive family, alternating d-walks on the matching loop product for the
// multiplicative one. Empty when no product realizes the convolution.
std::optional<std::vector<Rational>> walk_column(bool additive, Convolution kind, const std::vector<Input>& in,
                                                 unsigned order) {
  if (!in[0].graph || !in[1].graph) return std::nullopt;
  if (kind == Convolution::c_monotone && (in.size() > 2 || !in[1].graph->second_root())) return std::nullopt;
  const Graph& g1 = *in[0].graph;
  const Graph& g2 = *in[1].graph;
  const Graph r1 = g1.with_root(g1.root());
  std::vector<Rational> out;
  if (additive) {
    const Graph r2 = g2.with_root(g2.root());
    const ProductGraph p = kind == Convolution::monotone   ? comb_product(r1, r2)
                           : kind == Convolution::boolean  ? star_product(r1, r2)
                           : kind == Convolution::orthogonal ? orthogonal_product(r1, r2)
                                                             : comb_at(r1, g2);
    const unsigned cap = std::max(kDefaultWalkCap, order);
    for (unsigned n = 0; n <= order; ++n)
      out.emplace_back(std::to_string(brute_force_closed_walks(p.graph, n, p.graph.root(), WalkRule::any, cap)));
    return out;
  }
  if (kind != Convolution::monotone && kind != Convolution::c_monotone) return std::nullopt;
  const ProductGraph p =
      kind == Convolution::monotone
          ? comb_loop_product(r1, g2.with_root(g2.root()))
          : c_comb_loop_product(g1.with_roots(g1.root(), g1.second_root().value_or(g1.root())), g2);
  const unsigned cap = std::max(kDefaultWalkCap, 2 * order);
  out.emplace_back(0);
  for (unsigned n = 1; n <= order; ++n)
    out.emplace_back(std::to_string(brute_force_closed_walks(p.graph, 2 * n, p.graph.root(), WalkRule::d_walk, cap)));
  return out;
}

int cmd_convolve(const RunConfig& cfg, const std::string& family, const std::string& kind_name,
                 const std::vector<std::string>& paths) {
  const bool additive = family == "additive";
  const Convolution kind = kConvolutions.at(kind_name);
  if (paths.size() < 2 || paths.size() > 3) throw Error("convolve takes two inputs, or three for c-monotone");
  std::vector<Input> in;
  for (const auto& p : paths) in.push_back(read_input(p));

  const MomentSeries mu1 = in[0].moments(cfg.order);
  const MomentSeries mu2 = in[1].moments(cfg.order);
  std::optional<MomentSeries> nu2;
  if (kind == Convolution::c_monotone) {
    if (in.size() == 3) {
      nu2 = in[2].moments(cfg.order);
    } else if (in[1].graph && in[1].graph->second_root()) {
      nu2 = in[1].moments(cfg.order, RootSelector::f);
    } else {
      throw Error("c-monotone needs nu2: a birooted second graph or a third input");
    }
  }

  std::vector<Rational> values;
  unsigned first = 0;
  if (additive) {
    const auto m = additive_convolve(kind, mu1, mu2, nu2);
    values.assign(m.values().begin(), m.values().end());
  } else {
    std::optional<EtaSeries> n2;
    if (nu2) n2 = eta_from_moments(*nu2);
    const auto h = multiplicative_convolve(kind, eta_from_moments(mu1), eta_from_moments(mu2), n2);
    values.emplace_back(0);
    for (unsigned n = 1; n <= h.order(); ++n) values.push_back(h.coefficient(n));
    first = 1;
  }

  const auto walks = walk_column(additive, kind, in, cfg.order);
  bool all_equal = true;
  std::ostringstream os;
  os << "n,exact,decimal" << (walks ? ",walks,equal" : "") << '\n';
  for (std::size_t n = first; n < values.size(); ++n) {
    os << n << ',' << values[n] << ',' << to_decimal(values[n]);
    if (walks) {
      const bool eq = (*walks)[n] == values[n];
      all_equal = all_equal && eq;
      os << ',' << (*walks)[n] << ',' << (eq ? "yes" : "no");
    }
    os << '\n';
  }
  std::cout << os.str();
  if (const auto dir = output_dir(cfg)) write_text(*dir / (family + "-" + kind_name + ".csv"), os.str());
  return all_equal ? 0 : 1;
}

// ---------------------------------------------------------------- dot

int cmd_dot(const RunConfig& cfg, const std::string& path) {
  const GraphFile f = read_graph_file(path);
  const std::string dot = to_dot(f.graph, f.vertex_labels ? &*f.vertex_labels : nullptr, "G");
  std::cout << dot;
  if (const auto dir = output_dir(cfg)) write_text(*dir / (stem_of(path) + ".dot"), dot);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph products, convolution transforms and c-monotone independence in exact arithmetic"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out, "Output directory (default: $CCOMB_OUT_DIR)");
  };
  auto add_order = [&](CLI::App* sub) {
    return sub->add_option("--order", cfg.order, "Truncation order N")->check(CLI::PositiveNumber);
  };

  std::string kind, family, g1, g2, path, at = "e", suite = "all", name;
  int loop_color = 1;
  std::vector<std::string> inputs;

  auto* product = app.add_subcommand("product", "Build a product graph; writes <name>.graph.json and <name>.dot");
  product->add_option("kind", kind, "Product kind")->required()->check(CLI::IsMember(kProductKinds));
  product->add_option("g1", g1, "First factor graph file")->required()->check(CLI::ExistingFile);
  product->add_option("g2", g2, "Second factor graph file")->required()->check(CLI::ExistingFile);
  product->add_option("--name", name, "Output file stem (default: the kind)");
  product->add_option("--loop-color", loop_color, "Color of the added loops in c-comb-loop")
      ->check(CLI::IsMember({1, 2}));
  add_common(product);

  auto* moments = app.add_subcommand("moments", "Root moment table M0..MN as CSV");
  moments->add_option("graph", path, "Graph file")->required()->check(CLI::ExistingFile);
  moments->add_option("--at", at, "Root: e or f")->check(CLI::IsMember({"e", "f"}));
  add_order(moments);
  add_common(moments);

  auto* verify = app.add_subcommand("verify", "Run a verification suite; exit code 0 iff every check passes");
  verify->add_option("suite", suite, "products | transforms | independence | all")
      ->check(CLI::IsMember({"products", "transforms", "independence", "all"}));
  auto* verify_order = add_order(verify);
  verify->add_option("--max-word", cfg.max_word, "Longest word in the independence checks")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", cfg.seed, "Random seed");
  add_common(verify);

  auto* convolve = app.add_subcommand("convolve", "Convolution coefficients from graphs or moment tables as CSV");
  convolve->add_option("family", family, "additive | multiplicative")
      ->required()
      ->check(CLI::IsMember({"additive", "multiplicative"}));
  convolve->add_option("kind", kind, "monotone | boolean | orthogonal | c-monotone")
      ->required()
      ->check(CLI::IsMember(kConvolutions));
  convolve->add_option("inputs", inputs, "mu1 mu2 [nu2]: graph files or moment tables")
      ->required()
      ->check(CLI::ExistingFile);
  add_order(convolve);
  add_common(convolve);

  auto* dot = app.add_subcommand("dot", "Render a graph file as Graphviz DOT");
  dot->add_option("graph", path, "Graph file")->required()->check(CLI::ExistingFile);
  add_common(dot);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*product) return cmd_product(cfg, kind, g1, g2, name, loop_color);
    if (*moments) return cmd_moments(cfg, path, at);
    if (*verify) return cmd_verify(cfg, suite, verify_order->count() > 0);
    if (*convolve) return cmd_convolve(cfg, family, kind, inputs);
    if (*dot) return cmd_dot(cfg, path);
  } catch (const DivisorVanishes& e) {
    std::cerr << "error: " << e.what() << "; the formula needs a distribution not concentrated at zero\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
