// ramsey-forge: build, verify and certify Ramsey lower-bound colorings and
// Shannon-capacity lower bounds.
//
// Exit status: 0 success, 1 a requested verification failed, 2 usage or
// input error, 3 a size cap was exceeded.

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ramsey_forge/capacity.hpp"
#include "ramsey_forge/catalog.hpp"
#include "ramsey_forge/certificate.hpp"
#include "ramsey_forge/error.hpp"
#include "ramsey_forge/io.hpp"
#include "ramsey_forge/products.hpp"
#include "ramsey_forge/solvers.hpp"

namespace rf = ramsey_forge;

namespace {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2, kCapExceeded = 3 };

struct Globals {
  int threads = 1;
  rf::SolverOptions options() const { return {threads, rf::Limits::from_environment()}; }
};

std::string join(const std::vector<int>& values, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

bool looks_like_graph(const std::string& text) {
  auto start = text.find_first_not_of(" \t\r\n");
  return start != std::string::npos && text[start] == 'p';
}

void emit(const std::string& out_path, const std::string& contents) {
  if (out_path.empty()) {
    std::cout << contents;
  } else {
    rf::write_file(out_path, contents);
  }
}

std::string input_note(const char* role, const std::string& text) {
  return std::string("input ") + role + " sha256 " + rf::sha256_hex(text);
}

void print_report(const rf::VerificationReport& report) {
  for (const auto& line : rf::report_lines(report)) std::cout << line << "\n";
}

// verify --------------------------------------------------------------------

struct VerifyArgs {
  std::string coloring;
  std::vector<int> spec;
  std::string cert;
};

int run_verify(const Globals& globals, const VerifyArgs& args) {
  const std::string text = rf::read_file(args.coloring);
  rf::EdgeColoring c = rf::parse_coloring(text);
  rf::ColoringSpec spec(args.spec);
  auto report = rf::validate_coloring(c, spec, globals.options());
  print_report(report);
  if (!args.cert.empty()) {
    const std::string claim = "coloring in R(" + join(args.spec, ",") + ";" +
                              std::to_string(c.vertex_count()) + ")";
    rf::write_certificate(rf::coloring_certificate(c, report, claim), args.cert);
  }
  return report.pass ? kOk : kVerificationFailed;
}

// construct -----------------------------------------------------------------

struct ConstructArgs {
  std::string a;
  std::string b;
  std::string graph;
  int power = 0;
  std::string g;
  std::string h;
  std::string coloring;
  int m = -1;
  int k = 0;
  std::vector<int> front;
  int special_color = 1;
  std::string out;
  std::string cert;
  std::vector<std::string> provenance;
};

int construct_strong_product(const Globals& globals, const ConstructArgs& args) {
  auto limits = globals.options().limits;
  rf::Graph g = rf::strong_product(rf::read_graph(args.a), rf::read_graph(args.b), limits);
  emit(args.out, rf::format_graph(g));
  std::cerr << "strong product: " << g.vertex_count() << " vertices, " << g.edge_count()
            << " edges\n";
  return kOk;
}

int construct_power(const Globals& globals, const ConstructArgs& args) {
  rf::Graph g = rf::graph_power(rf::read_graph(args.graph), args.power, globals.options().limits);
  emit(args.out, rf::format_graph(g));
  std::cerr << "power " << args.power << ": " << g.vertex_count() << " vertices, "
            << g.edge_count() << " edges\n";
  return kOk;
}

int construct_composition(const Globals& globals, const ConstructArgs& args) {
  auto limits = globals.options().limits;
  const std::string gtext = rf::read_file(args.g);
  const std::string htext = rf::read_file(args.h);
  if (looks_like_graph(gtext) != looks_like_graph(htext)) {
    throw rf::InvalidArgument("composition needs two graphs or two colorings");
  }
  if (looks_like_graph(gtext)) {
    rf::Graph out = rf::composition_graph(rf::parse_graph(gtext), rf::parse_graph(htext), limits);
    emit(args.out, rf::format_graph(out));
    std::cerr << "composition: " << out.vertex_count() << " vertices\n";
  } else {
    rf::EdgeColoring out =
        rf::composition_coloring(rf::parse_coloring(gtext), rf::parse_coloring(htext), limits);
    emit(args.out, rf::format_coloring(out));
    std::cerr << "composition: " << out.vertex_count() << " vertices, " << out.color_count()
              << " colors\n";
  }
  return kOk;
}

int construct_theorem2(const Globals& globals, const ConstructArgs& args) {
  const auto options = globals.options();
  const std::string gtext = rf::read_file(args.g);
  const std::string htext = rf::read_file(args.h);
  rf::EdgeColoring g = rf::parse_coloring(gtext);
  rf::EdgeColoring h = rf::parse_coloring(htext);
  std::vector<std::string> provenance{input_note("g", gtext), input_note("h", htext)};

  if (args.special_color != 1) {
    if (args.special_color < 1 || args.special_color > g.color_count()) {
      throw rf::InvalidArgument("--special-color outside 1.." + std::to_string(g.color_count()));
    }
    std::vector<rf::Color> perm(static_cast<std::size_t>(g.color_count()));
    for (int i = 0; i < g.color_count(); ++i) perm[i] = i + 1;
    std::swap(perm[0], perm[args.special_color - 1]);
    g = rf::relabel_colors(g, perm);
    provenance.push_back("normalize g: colors 1 and " + std::to_string(args.special_color) +
                         " swapped");
  }
  int m = args.m;
  if (!args.front.empty()) {
    if (m >= 0 && m != static_cast<int>(args.front.size())) {
      throw rf::InvalidArgument("--m disagrees with the size of --M");
    }
    m = static_cast<int>(args.front.size());
    g = rf::induced_subcoloring(g, rf::front_permutation(g.vertex_count(), args.front));
    provenance.push_back("normalize g: vertices " + join(args.front, ",") + " moved to the front");
  }
  if (m < 0) throw rf::InvalidArgument("theorem2 needs --m or --M");

  rf::EdgeColoring f = rf::theorem2_construct(g, m, h, args.k, options.limits);
  auto report = rf::validate_coloring(f, rf::ColoringSpec::diagonal(f.color_count(), args.k),
                                      options);
  auto bound = rf::make_doubling_report(g.vertex_count(), m, h.vertex_count(), g.color_count(),
                                        args.k);
  emit(args.out, rf::format_coloring(f));

  std::cout << "constructed " << f.vertex_count() << " vertices, " << f.color_count()
            << " colors\n";
  print_report(report);
  for (const auto& p : args.provenance) provenance.push_back(p);
  if (!report.pass) {
    std::cout << "construction does not verify\n";
    return kVerificationFailed;
  }
  std::cout << "certifies " << bound.claim() << "\n";
  if (!args.cert.empty()) {
    rf::write_certificate(
        rf::coloring_certificate(f, report, bound.claim(), provenance, bound.lines()), args.cert);
  }
  return kOk;
}

int construct_emt(const ConstructArgs& args) {
  if (args.out.empty()) throw rf::InvalidArgument("emt needs --out <prefix>");
  rf::EdgeColoring c = rf::read_coloring(args.coloring);
  auto graphs = rf::emt_product_graphs(c);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const std::string path = args.out + "." + std::to_string(i + 1) + ".g";
    rf::write_graph(graphs[i], path);
    std::cout << "G_" << i + 1 << " -> " << path << "\n";
  }
  return kOk;
}

// alpha / capacity / bound ----------------------------------------------------

struct AlphaArgs {
  std::string graph;
  std::string cert;
  int max_power = 1;
};

int run_alpha(const Globals& globals, const AlphaArgs& args) {
  rf::Graph g = rf::read_graph(args.graph);
  auto result = rf::max_independent_set(g, globals.options());
  for (const auto& line : rf::alpha_lines(result)) std::cout << line << "\n";
  if (!args.cert.empty()) rf::write_certificate(rf::alpha_certificate(g, result), args.cert);
  return kOk;
}

int run_capacity(const Globals& globals, const AlphaArgs& args) {
  rf::Graph g = rf::read_graph(args.graph);
  auto bound = rf::capacity_lower_bound(g, args.max_power, args.graph, globals.options());
  std::cout << std::fixed << std::setprecision(12);
  for (const auto& row : bound.rows) {
    std::cout << "power " << row.power << " alpha " << row.alpha << " root " << row.root << "\n";
  }
  std::cout << "best " << bound.best << "\n";
  if (bound.truncated) {
    std::cout << "truncated " << bound.truncation_reason << "\n";
    return kCapExceeded;
  }
  return kOk;
}

struct BoundArgs {
  std::vector<long long> corollary;
  std::vector<long long> theorem2;
  std::vector<std::string> provenance;
  std::string cert;
};

int run_bound(const BoundArgs& args) {
  if (args.corollary.empty() == args.theorem2.empty()) {
    throw rf::InvalidArgument("bound needs exactly one of --corollary or --theorem2");
  }
  rf::BoundReport report;
  if (!args.corollary.empty()) {
    report = rf::make_corollary_report(args.corollary[0], args.corollary[1], args.corollary[2],
                                       args.provenance);
    std::cout << "m=" << report.corollary->m << " bound=" << report.corollary->bound << "\n";
  } else {
    auto bound = rf::theorem2_bound(args.theorem2[0], args.theorem2[1], args.theorem2[2]);
    report.provenance = args.provenance;
    std::cout << "bound=" << bound << "\n";
  }
  if (!args.cert.empty()) {
    if (!report.corollary) {
      throw rf::InvalidArgument("--cert is only available with --corollary");
    }
    rf::write_certificate(rf::bound_certificate(report), args.cert);
  }
  return kOk;
}

// catalog -----------------------------------------------------------------------

struct CatalogArgs {
  std::string kind;
  int n = 5;
  std::string out;
};

int run_catalog(const CatalogArgs& args) {
  if (args.kind == "cycle") {
    emit(args.out, rf::format_graph(rf::generate_cycle(args.n)));
  } else if (args.kind == "k5") {
    emit(args.out, rf::format_coloring(rf::generate_k5_two_coloring()));
  } else if (args.kind == "gf16") {
    emit(args.out, rf::format_coloring(rf::generate_gf16_three_coloring()));
  } else {
    throw rf::InvalidArgument("unknown catalog object '" + args.kind + "'");
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified Ramsey lower-bound colorings and Shannon-capacity lower bounds"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string("ramsey-forge ") + RAMSEY_FORGE_VERSION);

  Globals globals;
  app.add_option("--threads", globals.threads, "Solver worker threads")
      ->check(CLI::PositiveNumber);

  int result = kOk;

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a coloring against forbidden clique sizes");
  verify_cmd->add_option("coloring", verify.coloring, "Coloring file")->required();
  verify_cmd->add_option("--spec", verify.spec, "Forbidden clique sizes, e.g. 3,3")
      ->required()
      ->delimiter(',');
  verify_cmd->add_option("--cert", verify.cert, "Write a certificate here");
  verify_cmd->callback([&] { result = run_verify(globals, verify); });

  ConstructArgs construct;
  auto* construct_cmd = app.add_subcommand("construct", "Build a product or construction");
  construct_cmd->fallthrough();
  construct_cmd->require_subcommand(1);

  auto* sp = construct_cmd->add_subcommand("strong-product", "Strong product of two graphs");
  sp->add_option("--a", construct.a, "First graph")->required();
  sp->add_option("--b", construct.b, "Second graph")->required();
  sp->add_option("--out", construct.out, "Output file (default stdout)");
  sp->callback([&] { result = construct_strong_product(globals, construct); });

  auto* pw = construct_cmd->add_subcommand("power", "Strong power G^n");
  pw->add_option("--graph", construct.graph, "Graph")->required();
  pw->add_option("--n", construct.power, "Exponent")->required();
  pw->add_option("--out", construct.out, "Output file (default stdout)");
  pw->callback([&] { result = construct_power(globals, construct); });

  auto* comp = construct_cmd->add_subcommand("composition", "Composition G[H] of graphs or colorings");
  comp->set_help_flag("--help", "Print this help message and exit");
  comp->add_option("--g", construct.g, "Outer graph or coloring")->required();
  comp->add_option("--h", construct.h, "Inner graph or coloring")->required();
  comp->add_option("--out", construct.out, "Output file (default stdout)");
  comp->callback([&] { result = construct_composition(globals, construct); });

  auto* t2 = construct_cmd->add_subcommand("theorem2", "Doubling construction of a 2n-coloring");
  t2->set_help_flag("--help", "Print this help message and exit");
  t2->add_option("--g", construct.g, "n-coloring of K_s without monochromatic K_k")->required();
  t2->add_option("--h", construct.h, "n-coloring of K_t in R(k-1,k,...,k)")->required();
  t2->add_option("--k", construct.k, "Forbidden clique size")->required();
  t2->add_option("--m", construct.m, "Size of M (the first m vertices of g)");
  t2->add_option("--M", construct.front, "Vertices of M; moved to the front of g")->delimiter(',');
  t2->add_option("--special-color", construct.special_color,
                 "Color of g that M avoids; swapped with color 1 first");
  t2->add_option("--provenance", construct.provenance, "Extra provenance notes for the certificate");
  t2->add_option("--out", construct.out, "Output coloring file")->required();
  t2->add_option("--cert", construct.cert, "Write a certificate here");
  t2->callback([&] { result = construct_theorem2(globals, construct); });

  auto* emt = construct_cmd->add_subcommand("emt", "Graphs G_i (u~v iff color != i) of a coloring");
  emt->add_option("--coloring", construct.coloring, "Coloring file")->required();
  emt->add_option("--out", construct.out, "Output prefix; writes <prefix>.<i>.g")->required();
  emt->callback([&] { result = construct_emt(construct); });

  AlphaArgs alpha;
  auto* alpha_cmd = app.add_subcommand("alpha", "Exact independence number");
  alpha_cmd->add_option("graph", alpha.graph, "Graph file")->required();
  alpha_cmd->add_option("--cert", alpha.cert, "Write a certificate here");
  alpha_cmd->callback([&] { result = run_alpha(globals, alpha); });

  auto* capacity_cmd = app.add_subcommand("capacity", "alpha(G^n)^(1/n) for n = 1..max power");
  capacity_cmd->add_option("graph", alpha.graph, "Graph file")->required();
  capacity_cmd->add_option("--max-power", alpha.max_power, "Largest power")->required();
  capacity_cmd->callback([&] { result = run_capacity(globals, alpha); });

  BoundArgs bound;
  auto* bound_cmd = app.add_subcommand("bound", "Doubling and corollary bound arithmetic");
  bound_cmd->add_option("--corollary", bound.corollary, "R_n(3) R_{n-1}(3) n")->expected(3);
  bound_cmd->add_option("--theorem2", bound.theorem2, "s m t")->expected(3);
  bound_cmd->add_option("--provenance", bound.provenance, "Source of each supplied Ramsey value");
  bound_cmd->add_option("--cert", bound.cert, "Write a certificate here");
  bound_cmd->callback([&] { result = run_bound(bound); });

  CatalogArgs catalog;
  auto* catalog_cmd = app.add_subcommand("catalog", "Emit a generator object");
  catalog_cmd->add_option("kind", catalog.kind, "cycle | k5 | gf16")->required();
  catalog_cmd->add_option("--n", catalog.n, "Cycle length");
  catalog_cmd->add_option("--out", catalog.out, "Output file (default stdout)");
  catalog_cmd->callback([&] { result = run_catalog(catalog); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  } catch (const rf::CapExceeded& e) {
    std::cerr << "error: cap exceeded: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const rf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return result;
}
