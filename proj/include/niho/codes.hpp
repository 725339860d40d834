#pragma once

#include <complex>
#include <map>
#include <vector>

#include "niho/exec.hpp"
#include "niho/field.hpp"

namespace niho {

// Symbol counts of a word over GF(p): counts[s] = how often symbol s occurs.
using CompleteWeight = std::vector<long long>;

// Trace word (Tr(a u))_{u in U} of length q+1.
CompleteWeight zetterberg_dual_word(const FieldTower& t, const FieldElement& a);

// Trace word (Tr(a x + b x^{-1}))_{x in GF(q)*} of length q-1.
CompleteWeight melas_dual_word(const FieldContext& gfq, const FieldElement& a,
                               const FieldElement& b);

// Number of unit-circle roots of x^2 + ax + a/conj(a), given c = a conj(a)
// as an element of GF(q).  c = 0 is rejected.
int count_unit_circle_quadratic_roots(const FieldElement& aabar);

// #{ x in U : x + x^{-1} = a } for a in GF(q).
int count_unit_circle_sum_inverse(const FieldElement& a);

// Complete-weight distributions, aggregated over all words.
std::map<CompleteWeight, long long> zetterberg_weight_distribution(const FieldTower& t,
                                                                   Exec ex = Exec::parallel);
std::map<CompleteWeight, long long> melas_weight_distribution(const FieldContext& gfq,
                                                              Exec ex = Exec::parallel);

// Evaluates both sides of the dual-enumerator identity at the given points;
// returns true when every relative error stays below tol.
bool macwilliams_identity_check(const FieldTower& t,
                                const std::vector<std::complex<double>>& samples,
                                double tol = 1e-6, double* max_rel_err = nullptr);

}  // namespace niho
