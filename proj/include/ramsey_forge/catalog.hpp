#pragma once

#include "ramsey_forge/coloring.hpp"
#include "ramsey_forge/graph.hpp"

namespace ramsey_forge {

/// C_n with edges {i, i+1 mod n}; n >= 3.
Graph generate_cycle(int n);

/// 2-coloring of K_5: color 1 on the cycle pairs {i, i+1 mod 5} (exactly
/// generate_cycle(5)), color 2 on the pentagram {i, i+2 mod 5}. Neither color
/// has a triangle.
EdgeColoring generate_k5_two_coloring();

/// 3-coloring of K_16 on the elements of GF(16): vertex x is the field
/// element whose bit i is the coefficient of x^i in GF(2)[x]/(x^4+x+1).
/// Pair {u, v} gets color (log_x(u + v) mod 3) + 1, i.e. the coset of the
/// cubic residues containing u + v. Every color class is 5-regular and
/// triangle-free.
EdgeColoring generate_gf16_three_coloring();

namespace gf16 {

/// Product in GF(2)[x]/(x^4+x+1); operands in 0..15.
int multiply(int a, int b);

/// x^e for any e >= 0.
int generator_power(int e);

/// e in 0..14 with x^e = a; a must be nonzero.
int discrete_log(int a);

}  // namespace gf16

}  // namespace ramsey_forge
