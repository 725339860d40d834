#pragma once

#include "niho/exec.hpp"
#include "niho/field.hpp"
#include "niho/integers.hpp"

namespace niho {

// Which binary quadratic form represents p, and a representation.
struct QuadFormRep {
  int form;  // 0: none (symbol -1), 1: a^2+ab+4b^2, 2: 2a^2+ab+2b^2
  long long a;
  long long b;
};

QuadFormRep quad_form_representation(long long p);

// Coefficient attached to p through the quadratic-form representation.
long long a_p_coefficient(long long p);

// The same coefficient read off a theta series times an eta-style product.
long long a_p_modular_form(long long p);

// Extension to q = p^m by a second-order recurrence; special closed branches
// at p = 3 and p = 5.
cpp_int a_q(long long p, int m);

// Projective point counts for the quintic-derived surface
//   x1+..+x5 = 0,  sum_i prod_{j != i} x_j = 0
// over GF(q).  on_lines counts points with at least two zero coordinates
// (the ten lines), smooth_model adds one blown-up P^1 per node.
struct SurfaceCount {
  long long q;
  long long on_surface;
  long long on_lines;
  long long smooth_model;
};

SurfaceCount count_surface_points(const FieldContext& gfq, Exec ex = Exec::parallel);

// 1 + q^2 + q(16 + 4(q/3)) + a_q, the expected smooth-model count.
cpp_int surface_smooth_closed(long long p, int m);

}  // namespace niho
