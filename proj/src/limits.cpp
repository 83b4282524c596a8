#include "ramsey_forge/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <string>

#include "ramsey_forge/error.hpp"

namespace ramsey_forge {

namespace {

std::uint64_t parse_count(std::string_view s) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || value == 0) {
    throw InvalidArgument("invalid cap value '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace

Limits Limits::parse(std::string_view text, Limits base) {
  if (text.find('=') == std::string_view::npos) {
    auto n = parse_count(text);
    base.graph_vertices = base.coloring_vertices = base.solver_vertices = n;
    return base;
  }
  while (!text.empty()) {
    auto comma = text.find(',');
    auto item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw InvalidArgument("invalid cap entry '" + std::string(item) + "'");
    }
    auto key = item.substr(0, eq);
    auto value = parse_count(item.substr(eq + 1));
    if (key == "graph") {
      base.graph_vertices = value;
    } else if (key == "coloring") {
      base.coloring_vertices = value;
    } else if (key == "solver") {
      base.solver_vertices = value;
    } else if (key == "enum") {
      base.enumeration = value;
    } else {
      throw InvalidArgument("unknown cap '" + std::string(key) + "'");
    }
  }
  return base;
}

Limits Limits::parse(std::string_view text) { return parse(text, Limits{}); }

Limits Limits::from_environment() {
  const char* env = std::getenv("RAMSEY_FORGE_CAP");
  if (env == nullptr || *env == '\0') return {};
  return parse(env);
}

}  // namespace ramsey_forge
