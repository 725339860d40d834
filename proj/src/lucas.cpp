#include "niho/lucas.hpp"

#include "niho/errors.hpp"

namespace niho {

cpp_int lucas_sequence_term(const QuadraticIntSequence& seq, int m) {
  if (m < 0) throw Error(ErrorCode::TooLarge, "sequence index must be nonnegative");
  if (m == 0) return seq.s0;
  cpp_int prev = seq.s0;
  cpp_int cur = seq.s1;
  for (int k = 1; k < m; ++k) {
    cpp_int next = seq.lin * cur + seq.cst * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace niho
