#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace ramsey_forge {

/// Size guards for products, solvers and exhaustive enumeration. Exceeding
/// any of them raises CapExceeded; nothing is ever silently truncated.
struct Limits {
  std::uint64_t graph_vertices = 1'000'000;
  std::uint64_t coloring_vertices = 2'000'000;
  std::uint64_t solver_vertices = 4'096;
  std::uint64_t enumeration = 100'000'000;

  /// Applies an override string of the form accepted by RAMSEY_FORGE_CAP:
  /// either a bare integer (replaces every vertex cap) or a comma separated
  /// list of `graph=N`, `coloring=N`, `solver=N`, `enum=N`.
  static Limits parse(std::string_view text, Limits base);
  static Limits parse(std::string_view text);

  /// Defaults, overridden by the RAMSEY_FORGE_CAP environment variable when set.
  static Limits from_environment();
};

}  // namespace ramsey_forge
