// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "oracles.hpp"
#include "ramsey_forge/capacity.hpp"
#include "ramsey_forge/catalog.hpp"
#include "ramsey_forge/certificate.hpp"
#include "ramsey_forge/coloring.hpp"
#include "ramsey_forge/io.hpp"
#include "ramsey_forge/products.hpp"
#include "ramsey_forge/solvers.hpp"

using namespace ramsey_forge;
using namespace oracle;

namespace {

constexpr double kSqrt5 = 2.2360679774997896;
constexpr double kRootTolerance = 1e-9;

constexpr double kLimitC1 = 1.0;
constexpr double kLimitC2 = 1.0;
constexpr double kLimitC2Stretch = 60.0;
constexpr double kLimitC3 = 1.0;
constexpr double kLimitC4 = 60.0;
constexpr double kLimitC5 = 5.0;

constexpr int kPairsSupermultiplicative = 200;
constexpr int kGraphsSolverAgreement = 200;
constexpr int kPairsAlphaTwo = 100;
constexpr int kPairsComposition = 50;
constexpr int kMaxPropertyVertices = 8;
constexpr std::uint32_t kSeed = 20240611;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

int failures = 0;

void run(const std::string& name, double limit_seconds, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.pass = false;
    out.detail << " [exception: " << e.what() << "]";
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && seconds >= limit_seconds) {
    out.pass = false;
    out.detail << " [time limit " << limit_seconds << " s exceeded]";
  }
  if (!out.pass) ++failures;
  std::printf("%s %s (%.3f s)%s\n", out.pass ? "PASS" : "FAIL", name.c_str(), seconds,
              out.detail.str().c_str());
  std::fflush(stdout);
}

// K5 with the color-2 pair {0,2} moved to the front, ready for m = 2.
EdgeColoring normalized_k5() {
  const std::vector<Vertex> front{0, 2};
  return induced_subcoloring(generate_k5_two_coloring(), front_permutation(5, front));
}

struct Built {
  EdgeColoring coloring = EdgeColoring::monochromatic(1, 1, 1);
  Certificate certificate;
  std::uint64_t triples = 0;
  std::uint64_t triangles = 0;
  bool validated = false;
};

Built build_small() {
  const EdgeColoring g = normalized_k5();
  const EdgeColoring h = EdgeColoring::monochromatic(2, 2, 2);
  Built b{theorem2_construct(g, 2, h, 3), {}, 0, 0, false};
  b.triangles = monochromatic_triangles(b.coloring, &b.triples);
  const auto report = validate_coloring(b.coloring, ColoringSpec::diagonal(4, 3));
  b.validated = report.pass;
  const auto bound = make_doubling_report(5, 2, 2, 2, 3);
  b.certificate = coloring_certificate(b.coloring, report, bound.claim(), {"g K5 cycle coloring"},
                                       bound.lines());
  return b;
}

struct Large {
  Built built;
  bool gf16_valid = false;
  std::uint64_t gf16_triples = 0;
  std::size_t majority_size = 0;
};

Large build_large() {
  Large out;
  const EdgeColoring gf = generate_gf16_three_coloring();
  out.gf16_valid = monochromatic_triangles(gf, &out.gf16_triples) == 0;
  const Neighborhood nb = majority_neighborhood(gf);
  out.majority_size = nb.members.size();

  std::vector<Color> perm{1, 2, 3};
  std::swap(perm[0], perm[nb.color - 1]);
  EdgeColoring g = relabel_colors(gf, perm);
  g = induced_subcoloring(g, front_permutation(16, nb.members));

  const EdgeColoring k5 = generate_k5_two_coloring();
  const EdgeColoring h = EdgeColoring::from_function(
      5, 3, [&](int u, int v) { return static_cast<Color>(k5.color(u, v) + 1); });

  Built& b = out.built;
  b.coloring = theorem2_construct(g, static_cast<int>(nb.members.size()), h, 3);
  b.triangles = monochromatic_triangles(b.coloring, &b.triples);
  const auto report = validate_coloring(b.coloring, ColoringSpec::diagonal(6, 3));
  b.validated = report.pass;
  const auto bound = make_doubling_report(16, static_cast<int>(nb.members.size()), 5, 3, 3);
  b.certificate = coloring_certificate(b.coloring, report, bound.claim(),
                                       {"g GF(16) cubic-residue coloring", "h K5 cycle coloring"},
                                       bound.lines());
  return out;
}

Graph random_alpha_two(std::mt19937& rng) {
  std::uniform_int_distribution<int> size(3, kMaxPropertyVertices);
  for (;;) {
    const Graph g = random_graph(rng, size(rng), 0.6);
    if (brute_force_alpha(g) == 2) return g;
  }
}

std::vector<std::vector<bool>> color_adjacency(const EdgeColoring& c, Color color) {
  const int n = c.vertex_count();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && c.color(u, v) == color) adj[u][v] = true;
  return adj;
}

}  // namespace

int main() {
  run("C1 exhaustive R(3,3)=6: (5,2,3) true, (6,2,3) false", kLimitC1, [](Outcome& o) {
    o.require(exhaustive_ramsey_check(5, 2, 3), "(5,2,3) should admit a coloring");
    o.require(!exhaustive_ramsey_check(6, 2, 3), "(6,2,3) should admit none");
  });

  run("C2 pentagon: alpha(C5)=2, alpha(C5^2)=5, best root sqrt(5)", kLimitC2, [](Outcome& o) {
    const Graph c5 = generate_cycle(5);
    const auto bound = capacity_lower_bound(c5, 2, "C5");
    o.require(!bound.truncated, "not truncated");
    o.require(bound.rows.size() == 2, "two rows");
    if (bound.rows.size() == 2) {
      o.require(bound.rows[0].alpha == 2, "alpha(C5) == 2");
      o.require(bound.rows[1].alpha == 5, "alpha(C5^2) == 5");
    }
    o.require(std::fabs(bound.best - kSqrt5) <= kRootTolerance, "best root within 1e-9");
    o.detail << " best=" << std::setprecision(17) << bound.best;
  });

  run("C2 stretch: alpha(C5^3)=10 on 125 vertices", kLimitC2Stretch, [](Outcome& o) {
    const Graph cube = graph_power(generate_cycle(5), 3);
    o.require(cube.vertex_count() == 125, "125 vertices");
    const auto r = max_independent_set(cube);
    o.require(r.size == 10, "alpha == 10");
    o.require(is_independent(cube, r.witness), "witness independent");
  });

  run("C3 doubling on K5: 29 vertices, 4 colors, no monochromatic triangle, bound 30", kLimitC3,
      [](Outcome& o) {
        const Built b = build_small();
        o.require(b.coloring.vertex_count() == 29, "29 vertices");
        o.require(b.coloring.color_count() == 4, "4 colors");
        o.require(b.triples == 3654, "3654 triples enumerated");
        o.require(b.triangles == 0, "no monochromatic triangle");
        o.require(b.validated, "validate_coloring (3,3,3,3)");
        o.require(theorem2_bound(5, 2, 2) == 30, "theorem2_bound(5,2,2) == 30");
        o.detail << " triples=" << b.triples;
      });

  run("C4 doubling on GF(16): 281 vertices, 6 colors, bound 282", kLimitC4, [](Outcome& o) {
    const Large l = build_large();
    o.require(l.gf16_valid, "GF(16) coloring has no monochromatic triangle");
    o.require(l.gf16_triples == 560, "560 triples enumerated");
    o.require(l.majority_size == 5, "|M| == 5");
    const Built& b = l.built;
    o.require(b.coloring.vertex_count() == 281, "281 vertices");
    o.require(b.coloring.color_count() == 6, "6 colors");
    o.require(b.triangles == 0, "no monochromatic triangle");
    o.require(b.validated, "validate_coloring (3,3,3,3,3,3)");
    const auto cor = corollary_bound(17, 6, 3);
    o.require(cor.m == 5 && cor.bound == 282, "corollary_bound(17,6,3) == 282 with m == 5");
    o.require(theorem2_bound(16, 5, 5) == 282, "theorem2_bound(16,5,5) == 282");
    o.require(b.coloring.vertex_count() + 1 == cor.bound, "construction meets corollary exactly");
    o.detail << " triples=" << b.triples;
  });

  run("C5 EMT on K5: alpha(G_i)=2, alpha(G_1 x G_2)=5 < 6", kLimitC5, [](Outcome& o) {
    const auto graphs = emt_product_graphs(generate_k5_two_coloring());
    o.require(graphs.size() == 2, "two graphs");
    for (const Graph& g : graphs) {
      o.require(max_independent_set(g).size == 2, "solver alpha(G_i) == 2");
      o.require(brute_force_alpha(g) == 2, "oracle alpha(G_i) == 2");
    }
    const Graph prod = strong_product(graphs[0], graphs[1]);
    const auto r = max_independent_set(prod);
    o.require(r.size == 5, "solver alpha(product) == 5");
    o.require(bron_kerbosch_alpha(prod) == 5, "oracle alpha(product) == 5");
    o.require(r.size < 6, "strict inequality against R(3,3)");
    o.require(emt_upper_bound_check(graphs, 6), "emt_upper_bound_check");
    std::vector<int> diagonal;
    for (int v = 0; v < 5; ++v) diagonal.push_back(v * 5 + v);
    o.require(is_independent(prod, diagonal), "vertex diagonal independent");
  });

  run("C6a super-multiplicativity on random pairs", 0, [](Outcome& o) {
    std::mt19937 rng(kSeed);
    std::uniform_int_distribution<int> size(1, kMaxPropertyVertices);
    std::uniform_real_distribution<double> density(0.0, 1.0);
    int bad = 0;
    for (int i = 0; i < kPairsSupermultiplicative; ++i) {
      const Graph g = random_graph(rng, size(rng), density(rng));
      const Graph h = random_graph(rng, size(rng), density(rng));
      const int product = max_independent_set(strong_product(g, h)).size;
      if (product < brute_force_alpha(g) * brute_force_alpha(h)) ++bad;
    }
    o.require(bad == 0, std::to_string(bad) + " violations");
    o.detail << " pairs=" << kPairsSupermultiplicative;
  });

  run("C6b solver agrees with brute force", 0, [](Outcome& o) {
    std::mt19937 rng(kSeed + 1);
    std::uniform_int_distribution<int> size(1, kMaxPropertyVertices);
    std::uniform_real_distribution<double> density(0.0, 1.0);
    int bad = 0;
    for (int i = 0; i < kGraphsSolverAgreement; ++i) {
      const Graph g = random_graph(rng, size(rng), density(rng));
      const auto r = max_independent_set(g);
      if (r.size != brute_force_alpha(g) || !is_independent(g, r.witness) ||
          static_cast<int>(r.witness.size()) != r.size)
        ++bad;
    }
    o.require(bad == 0, std::to_string(bad) + " disagreements");
    o.detail << " graphs=" << kGraphsSolverAgreement;
  });

  run("C6c alpha(g1 x g2) <= 5 for alpha-2 pairs", 0, [](Outcome& o) {
    std::mt19937 rng(kSeed + 2);
    int bad = 0;
    for (int i = 0; i < kPairsAlphaTwo; ++i) {
      const Graph g1 = random_alpha_two(rng);
      const Graph g2 = random_alpha_two(rng);
      const Graph prod = strong_product(g1, g2);
      const int a = max_independent_set(prod).size;
      if (a > 5 || a != bron_kerbosch_alpha(prod)) ++bad;
    }
    o.require(bad == 0, std::to_string(bad) + " violations");
    o.detail << " pairs=" << kPairsAlphaTwo;
  });

  run("C6d composition coloring preserves per-color cliques", 0, [](Outcome& o) {
    std::mt19937 rng(kSeed + 3);
    std::uniform_int_distribution<int> outer(1, 6);
    std::uniform_int_distribution<int> inner(1, 5);
    std::uniform_int_distribution<int> split(1, 3);
    int bad = 0;
    for (int i = 0; i < kPairsComposition; ++i) {
      const int a = split(rng);
      const int b = a + split(rng);
      const EdgeColoring g = random_coloring(rng, outer(rng), 1, a, b);
      const EdgeColoring h = random_coloring(rng, inner(rng), a + 1, b, b);
      const EdgeColoring f = composition_coloring(g, h);
      for (Color c = 1; c <= b; ++c) {
        const int expected =
            c <= a ? brute_force_color_clique(g, c) : brute_force_color_clique(h, c);
        const int solver = max_clique(BitMatrix::from_color_class(f, c)).size;
        const int oracle = bron_kerbosch_max_clique(color_adjacency(f, c));
        if (solver != expected || oracle != expected) ++bad;
      }
    }
    o.require(bad == 0, std::to_string(bad) + " mismatches");
    o.detail << " pairs=" << kPairsComposition;
  });

  run("C7 determinism and round trips", 0, [](Outcome& o) {
    o.require(format_graph(generate_cycle(5)) == format_graph(generate_cycle(5)), "cycle bytes");
    o.require(format_coloring(generate_k5_two_coloring()) ==
                  format_coloring(generate_k5_two_coloring()),
              "k5 bytes");
    o.require(format_coloring(generate_gf16_three_coloring()) ==
                  format_coloring(generate_gf16_three_coloring()),
              "gf16 bytes");

    const Built s1 = build_small();
    const Built s2 = build_small();
    const std::string small_cert = format_certificate(s1.certificate);
    o.require(small_cert == format_certificate(s2.certificate), "29-vertex certificate bytes");
    o.require(format_coloring(s1.coloring) == format_coloring(s2.coloring), "29-vertex coloring bytes");

    const Large l1 = build_large();
    const Large l2 = build_large();
    const std::string large_cert = format_certificate(l1.built.certificate);
    o.require(large_cert == format_certificate(l2.built.certificate), "281-vertex certificate bytes");

    SolverOptions threaded;
    threaded.threads = 4;
    const auto report = validate_coloring(s1.coloring, ColoringSpec::diagonal(4, 3), threaded);
    const auto bound = make_doubling_report(5, 2, 2, 2, 3);
    o.require(format_certificate(coloring_certificate(s1.coloring, report, bound.claim(),
                                                      {"g K5 cycle coloring"}, bound.lines())) ==
                  small_cert,
              "certificate independent of thread count");

    const auto dir = std::filesystem::temp_directory_path() /
                     ("ramsey_forge_acceptance_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    const std::vector<EdgeColoring> colorings{generate_k5_two_coloring(),
                                              generate_gf16_three_coloring(), s1.coloring,
                                              l1.built.coloring};
    for (std::size_t i = 0; i < colorings.size(); ++i) {
      const auto path = dir / ("c" + std::to_string(i) + ".col");
      write_coloring(colorings[i], path);
      const EdgeColoring back = read_coloring(path);
      o.require(back == colorings[i], "coloring file round trip " + std::to_string(i));
      o.require(format_coloring(back) == read_file(path), "coloring bytes round trip");
    }
    const std::vector<Graph> graphs{generate_cycle(5), graph_power(generate_cycle(5), 2),
                                    edgeless_graph(3), complete_graph(6)};
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const auto path = dir / ("g" + std::to_string(i) + ".g");
      write_graph(graphs[i], path);
      const Graph back = read_graph(path);
      o.require(back == graphs[i], "graph file round trip " + std::to_string(i));
      o.require(format_graph(back) == read_file(path), "graph bytes round trip");
    }
    const auto cert_path = dir / "small.cert";
    write_certificate(s1.certificate, cert_path);
    const Certificate back = read_certificate(cert_path);
    o.require(format_certificate(back) == small_cert, "certificate file round trip");
    o.require(recheck_certificate(back, format_coloring(s1.coloring)), "certificate recheck");
    o.require(recheck_certificate(l1.built.certificate, format_coloring(l1.built.coloring)),
              "281-vertex certificate recheck");
    std::filesystem::remove_all(dir);
  });

  std::printf("%s: %d failure(s)\n", failures == 0 ? "ALL PASS" : "SOME FAILED", failures);
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
