#pragma once

#include "niho/integers.hpp"

namespace niho {

// Integer sequence s_{k+1} = lin * s_k + cst * s_{k-1}.
struct QuadraticIntSequence {
  cpp_int s0;
  cpp_int s1;
  cpp_int lin;
  cpp_int cst;
};

cpp_int lucas_sequence_term(const QuadraticIntSequence& seq, int m);

}  // namespace niho
