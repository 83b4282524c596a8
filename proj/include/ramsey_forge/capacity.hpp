#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ramsey_forge/coloring.hpp"
#include "ramsey_forge/graph.hpp"
#include "ramsey_forge/solvers.hpp"

namespace ramsey_forge {

struct CapacityRow {
  int power = 0;
  std::int64_t alpha = 0;
  /// alpha^(1/power).
  double root = 0.0;
  std::vector<Vertex> witness;
};

/// Lower-bound evidence for the Shannon capacity: every row's root is at
/// most c(G), since alpha(G^n)^(1/n) only approaches its limit from below
/// along supermultiplicative chains.
struct CapacityBound {
  std::string graph_id;
  std::vector<CapacityRow> rows;
  double best = 0.0;
  /// Set when a cap stopped the computation before max_power; rows holds
  /// every power completed before that.
  bool truncated = false;
  std::string truncation_reason;
};

/// Exact alpha(G^n) and its n-th root for n = 1..max_power.
CapacityBound capacity_lower_bound(const Graph& g, int max_power, const std::string& graph_id = "G",
                                   const SolverOptions& options = {});

/// True iff alpha(G_1 x ... x G_n) < ramsey_value, where the caller supplies
/// ramsey_value = R(alpha(G_1)+1, ..., alpha(G_n)+1). A false result means
/// either the supplied value or the solver is wrong.
bool emt_upper_bound_check(std::span<const Graph> graphs, std::int64_t ramsey_value,
                           const SolverOptions& options = {});

struct Neighborhood {
  Vertex vertex = 0;
  Color color = 0;
  /// Neighbors of `vertex` in `color`, ascending.
  std::vector<Vertex> members;
};

/// The vertex/color pair with the most same-colored neighbors (ties: lowest
/// vertex, then lowest color). Requires a triangle-free coloring (every
/// color), in which case the neighborhood spans no pair of its own color and
/// has at least ceil((s-1)/n) members.
Neighborhood majority_neighborhood(const EdgeColoring& c);

/// s^2 + m*t + 1.
std::int64_t theorem2_bound(std::int64_t s, std::int64_t m, std::int64_t t);

struct CorollaryBound {
  std::int64_t m = 0;
  std::int64_t bound = 0;
};

/// m = ceil((r_n - 2)/n), bound = (r_n - 1)^2 + m*(r_{n-1} - 1) + 1, where
/// r_n = R_n(3) and r_n_minus_1 = R_{n-1}(3) are supplied by the caller.
CorollaryBound corollary_bound(std::int64_t r_n, std::int64_t r_n_minus_1, std::int64_t n);

/// Inputs and outcome of a doubling bound, with the provenance of every
/// externally supplied Ramsey value.
struct BoundReport {
  struct Doubling {
    std::int64_t s = 0;
    std::int64_t m = 0;
    std::int64_t t = 0;
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::int64_t bound = 0;
  };
  struct Corollary {
    std::int64_t n = 0;
    std::int64_t r_n = 0;
    std::int64_t r_n_minus_1 = 0;
    std::int64_t m = 0;
    std::int64_t bound = 0;
  };

  std::optional<Doubling> doubling;
  std::optional<Corollary> corollary;
  std::vector<std::string> provenance;

  /// The claim certified, e.g. "R_4(3) >= 30".
  std::string claim() const;
  /// Stable line-oriented rendering used inside certificates.
  std::vector<std::string> lines() const;
};

BoundReport make_doubling_report(std::int64_t s, std::int64_t m, std::int64_t t, std::int64_t n,
                                 std::int64_t k, std::vector<std::string> provenance = {});
BoundReport make_corollary_report(std::int64_t r_n, std::int64_t r_n_minus_1, std::int64_t n,
                                  std::vector<std::string> provenance = {});

}  // namespace ramsey_forge
