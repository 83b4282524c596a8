#include "doctest.h"
#include "oracles.hpp"
#include "ramsey_forge/catalog.hpp"
#include "ramsey_forge/coloring.hpp"
#include "ramsey_forge/error.hpp"
#include "ramsey_forge/solvers.hpp"

using namespace ramsey_forge;

TEST_CASE("EdgeColoring construction checks colors") {
  CHECK_THROWS_AS(EdgeColoring::from_function(3, 2, [](Vertex, Vertex) { return 3; }),
                  InvalidArgument);
  CHECK_THROWS_AS(EdgeColoring::from_function(3, 2, [](Vertex, Vertex) { return 0; }),
                  InvalidArgument);
  CHECK_THROWS_AS(EdgeColoring::monochromatic(0, 2, 1), InvalidArgument);
  CHECK_THROWS_AS(EdgeColoring::monochromatic(3, 256, 1), InvalidArgument);
  std::vector<Color> short_list{1, 2};
  CHECK_THROWS_AS(EdgeColoring::from_upper_triangle(3, 2, short_list), InvalidArgument);

  std::vector<Color> colors{1, 2, 2};
  auto c = EdgeColoring::from_upper_triangle(3, 2, colors);
  CHECK(c.color(0, 1) == 1);
  CHECK(c.color(1, 0) == 1);
  CHECK(c.color(0, 2) == 2);
  CHECK(c.color(2, 1) == 2);
}

TEST_CASE("color_class") {
  auto k5 = generate_k5_two_coloring();
  Graph one = color_class(k5, 1);
  Graph two = color_class(k5, 2);
  // Color 1 is the pentagon, color 2 the pentagram: checked pair by pair.
  for (Vertex u = 0; u < 5; ++u) {
    for (Vertex v = u + 1; v < 5; ++v) {
      const bool cycle_pair = v - u == 1 || v - u == 4;
      CHECK(one.adjacent(u, v) == cycle_pair);
      CHECK(two.adjacent(u, v) == !cycle_pair);
    }
  }
  CHECK(one == generate_cycle(5));
  CHECK(two == complement(generate_cycle(5)));
  CHECK_THROWS_AS(color_class(k5, 3), InvalidArgument);
  CHECK_THROWS_AS(color_class(k5, 0), InvalidArgument);
}

TEST_CASE("color classes partition the pairs") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const int s = 1 + trial % 9;
    const int n = 1 + trial % 4;
    auto c = oracle::random_coloring(rng, s, 1, n, n);
    std::size_t total = 0;
    std::vector<std::vector<int>> owner(s, std::vector<int>(s, 0));
    for (Color col = 1; col <= n; ++col) {
      Graph g = color_class(c, col);
      total += g.edge_count();
      for (auto [u, v] : g.edges()) {
        CHECK(owner[u][v] == 0);
        owner[u][v] = col;
      }
    }
    CHECK(total == static_cast<std::size_t>(s * (s - 1) / 2));
  }
}

TEST_CASE("induced_subcoloring") {
  auto k5 = generate_k5_two_coloring();
  std::vector<Vertex> all{0, 1, 2, 3, 4};
  CHECK(induced_subcoloring(k5, all) == k5);

  // {0,2} is a pentagram pair, so the restriction is a single color-2 edge.
  std::vector<Vertex> pair{0, 2};
  auto k2 = induced_subcoloring(k5, pair);
  CHECK(k2.vertex_count() == 2);
  CHECK(k2.color_count() == 2);
  CHECK(k2.color(0, 1) == 2);
  CHECK(color_class(k2, 1).edge_count() == 0);

  std::vector<Vertex> single{3};
  auto k1 = induced_subcoloring(k5, single);
  CHECK(k1.vertex_count() == 1);
  CHECK(k1.color_count() == 2);

  std::vector<Vertex> dup{1, 1};
  CHECK_THROWS_AS(induced_subcoloring(k5, dup), InvalidArgument);
  std::vector<Vertex> far{7};
  CHECK_THROWS_AS(induced_subcoloring(k5, far), InvalidArgument);
  CHECK_THROWS_AS(induced_subcoloring(k5, std::vector<Vertex>{}), InvalidArgument);
}

TEST_CASE("relabel_colors") {
  auto k5 = generate_k5_two_coloring();
  std::vector<Color> identity{1, 2};
  CHECK(relabel_colors(k5, identity) == k5);

  std::vector<Color> swap{2, 1};
  auto swapped = relabel_colors(k5, swap);
  CHECK(color_class(swapped, 1) == complement(generate_cycle(5)));
  CHECK(color_class(swapped, 2) == generate_cycle(5));

  std::vector<Color> collapse{1, 1};
  CHECK_THROWS_AS(relabel_colors(k5, collapse), InvalidArgument);
  std::vector<Color> too_short{1};
  CHECK_THROWS_AS(relabel_colors(k5, too_short), InvalidArgument);
}

TEST_CASE("validate_coloring examples") {
  auto k5 = generate_k5_two_coloring();
  auto report = validate_coloring(k5, ColoringSpec({3, 3}));
  CHECK(report.pass);
  REQUIRE(report.colors.size() == 2);
  CHECK(report.colors[0].max_clique == 2);
  CHECK(report.colors[1].max_clique == 2);
  CHECK(oracle::monochromatic_triangles(k5) == 0);

  auto fail = validate_coloring(k5, ColoringSpec({2, 3}));
  CHECK_FALSE(fail.pass);
  CHECK(fail.colors[0].witness.size() == 2);

  auto single = EdgeColoring::monochromatic(1, 2, 1);
  auto vacuous = validate_coloring(single, ColoringSpec({2, 2}));
  CHECK(vacuous.pass);
  CHECK(vacuous.colors[0].max_clique == 1);

  CHECK_THROWS_AS(validate_coloring(k5, ColoringSpec({3, 3, 3})), InvalidArgument);
  CHECK_THROWS_AS(ColoringSpec({3, 1}), InvalidArgument);
}

TEST_CASE("every 2-coloring of K_6 fails (3,3)") {
  // Independent of the exhaustive oracle: drive validate_coloring directly.
  const ColoringSpec spec({3, 3});
  int passing = 0;
  for (std::uint32_t bits = 0; bits < (1U << 15); ++bits) {
    std::vector<Color> colors(15);
    for (int i = 0; i < 15; ++i) colors[i] = 1 + static_cast<int>(bits >> i & 1U);
    if (validate_coloring(EdgeColoring::from_upper_triangle(6, 2, colors), spec).pass) ++passing;
  }
  CHECK(passing == 0);
}

TEST_CASE("reports agree with brute force on random colorings") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const int s = 2 + trial % 10;
    const int n = 1 + trial % 3;
    auto c = oracle::random_coloring(rng, s, 1, n, n);
    auto report = validate_coloring(c, ColoringSpec::diagonal(n, 3));
    for (const auto& cr : report.colors) {
      CHECK(cr.max_clique == oracle::brute_force_color_clique(c, cr.color));
      CHECK(cr.witness.size() == static_cast<std::size_t>(cr.max_clique));
      for (std::size_t i = 0; i < cr.witness.size(); ++i) {
        for (std::size_t j = i + 1; j < cr.witness.size(); ++j) {
          CHECK(c.color(cr.witness[i], cr.witness[j]) == cr.color);
        }
      }
    }
  }
}

TEST_CASE("relabeling coherence and induced monotonicity") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const int s = 2 + trial % 8;
    const int n = 2 + trial % 2;
    auto c = oracle::random_coloring(rng, s, 1, n, n);
    std::vector<int> ks(n);
    std::uniform_int_distribution<int> kdist(2, 4);
    for (auto& k : ks) k = kdist(rng);
    ColoringSpec spec(ks);

    std::vector<Color> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    const bool verdict = validate_coloring(c, spec).pass;
    CHECK(validate_coloring(relabel_colors(c, perm), permute_spec(spec, perm)).pass == verdict);

    if (verdict) {
      std::vector<Vertex> vs(s);
      std::iota(vs.begin(), vs.end(), 0);
      std::shuffle(vs.begin(), vs.end(), rng);
      vs.resize(1 + rng() % s);
      CHECK(validate_coloring(induced_subcoloring(c, vs), spec).pass);
    }
  }
}

TEST_CASE("front_permutation") {
  std::vector<Vertex> front{3, 1};
  CHECK(front_permutation(5, front) == std::vector<Vertex>{3, 1, 0, 2, 4});
  std::vector<Vertex> dup{2, 2};
  CHECK_THROWS_AS(front_permutation(5, dup), InvalidArgument);
}
