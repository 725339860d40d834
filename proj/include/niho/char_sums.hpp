#pragma once

#include "niho/field.hpp"
#include "niho/integers.hpp"

namespace niho {

// Affine point count of y^2 = x(x-5)(x+27) over GF(p), and its deviation
// from p.
struct EllipticTrace {
  long long count;
  long long trace;  // count - p
};

// sum_x eta(a2 x^2 + a1 x + a0), evaluated in closed form.
long long char_sum_quadratic(const FieldElement& a2, const FieldElement& a1,
                             const FieldElement& a0);

EllipticTrace count_curve_points(long long p);

// sum_x eta((x^2 - 4)(2x + 1)(2x + 5)) over GF(q), by direct summation.
long long lambda_direct(const FieldContext& gfq);

// The same sum from the curve trace and a second-order recurrence.
cpp_int lambda_closed(long long p, int m);

}  // namespace niho
