#pragma once

#include <string>
#include <utility>
#include <vector>

#include "niho/exec.hpp"
#include "niho/field.hpp"
#include "niho/integers.hpp"

namespace niho {

// Multiset of integer coefficients, e.g. {{1,2},{3,1}} for "1^2 3^1".  A
// tuple matching the pattern is an ordered list of distinct nonzero field
// elements x_1..x_k, one per coefficient c_1..c_k, with
//   sum c_i x_i = 0  and  sum c_i / x_i = 0.
struct PatternSpec {
  std::vector<std::pair<int, int>> parts;  // (coefficient, multiplicity)

  PatternSpec(std::initializer_list<std::pair<int, int>> init);
  explicit PatternSpec(std::vector<std::pair<int, int>> init);
  static PatternSpec parse(const std::string& text);  // "1^2 3^1"

  int tuple_size() const;
  int weight() const;
  long long automorphisms() const;          // prod of multiplicity factorials
  std::vector<int> coefficients() const;    // expanded, ascending
  std::string str() const;
  bool operator==(const PatternSpec& o) const { return parts == o.parts; }
};

// Number of ordered tuples matching the pattern, by head enumeration plus a
// closed tail solve.  Characteristic 2 falls back to the reference loop.
long long count_pattern_tuples(const PatternSpec& spec, const FieldContext& gfq,
                               Exec ex = Exec::parallel);

// Same count by enumerating all but one coordinate literally.
long long count_pattern_tuples_reference(const PatternSpec& spec, const FieldContext& gfq);

// Closed form for the orbit count A of the pattern (tuples divided by the
// automorphism factor where the count is nonzero).
cpp_int pattern_count_closed(const PatternSpec& spec, long long p, int m);

// Gamma_d: sum of the orbit counts over all coefficient patterns of weight d.
// Only d = 2 and d = 5 are supported; the assembled sum is checked against
// the closed branch before returning.
cpp_int gamma_d(int d, long long p, int m);

// Number of 5-element subsets of the unit circle with zero sum, in closed
// form through Gamma_5.
cpp_int b5_pure_weight(long long p, int m);

// The same count by completing unit-circle triples with a quadratic pair
// condition.
long long b5_brute_force(const FieldTower& t, Exec ex = Exec::parallel);

// Literal 5-subset enumeration, for small q.
long long b5_brute_force_reference(const FieldTower& t);

}  // namespace niho
