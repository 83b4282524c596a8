#include "ramsey_forge/catalog.hpp"

#include <string>
#include <vector>

#include "ramsey_forge/error.hpp"

namespace ramsey_forge {

Graph generate_cycle(int n) {
  if (n < 3) throw InvalidArgument("cycle needs at least 3 vertices, got " + std::to_string(n));
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n));
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, edges);
}

EdgeColoring generate_k5_two_coloring() {
  return EdgeColoring::from_function(5, 2, [](Vertex u, Vertex v) {
    const int d = (v - u + 5) % 5;
    return d == 1 || d == 4 ? 1 : 2;
  });
}

namespace gf16 {

namespace {
constexpr int kModulus = 0b10011;  // x^4 + x + 1
}

int multiply(int a, int b) {
  int product = 0;
  while (b != 0) {
    if (b & 1) product ^= a;
    b >>= 1;
    a <<= 1;
    if (a & 0b10000) a ^= kModulus;
  }
  return product;
}

int generator_power(int e) {
  int value = 1;
  for (int i = 0; i < e % 15; ++i) value = multiply(value, 0b10);
  return value;
}

int discrete_log(int a) {
  if (a <= 0 || a > 15) throw InvalidArgument("discrete log of " + std::to_string(a));
  int value = 1;
  for (int e = 0; e < 15; ++e) {
    if (value == a) return e;
    value = multiply(value, 0b10);
  }
  throw std::logic_error("x is not primitive modulo x^4+x+1");
}

}  // namespace gf16

EdgeColoring generate_gf16_three_coloring() {
  return EdgeColoring::from_function(16, 3, [](Vertex u, Vertex v) {
    return gf16::discrete_log(u ^ v) % 3 + 1;
  });
}

}  // namespace ramsey_forge
