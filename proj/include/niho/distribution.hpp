#pragma once

#include <array>
#include <map>
#include <vector>

#include "niho/exec.hpp"
#include "niho/field.hpp"
#include "niho/integers.hpp"

namespace niho {

// The whole pipeline studies the decimation d = 3(q - 1) + 1 on GF(q^2) with
// q = p^m, p >= 5.  It degenerates when gcd(d, q^2 - 1) > 1, equivalently
// when 5 divides q + 1; every operation here refuses such parameters.
bool check_gcd_condition(long long p, int m);

// Number of unit-circle roots of z^5 + conj(a) z^3 + a z^2 + 1.
int root_count(const FieldTower& t, const FieldElement& a);

// n[i] = #{ a in GF(q^2) : root_count(a) = i }, a = 0 included.
struct RootCountHistogram {
  long long q;
  std::array<long long, 6> n;
};

RootCountHistogram root_count_histogram(const FieldTower& t, Exec ex = Exec::parallel);
RootCountHistogram root_count_histogram_reference(const FieldTower& t);

// #{ y in GF(q^2) : (y+1)^d - y^d = 1 }, closed form and direct count.
cpp_int b3_closed(long long p, int m);
long long b3_brute_force(const FieldTower& t, Exec ex = Exec::parallel);

cpp_int n4_closed(long long p, int m);

// Ordered unit-circle triples with x1 + x2 + x3 + 2 = 0, split into the
// repeated-coordinate locus, the coordinate-one locus, and the free part;
// each stage is checked against its closed form.
struct N4Intermediates {
  long long x_count;
  long long delta_count;
  long long h_count;
  long long n4;
};

N4Intermediates n4_intermediate_counts(const FieldTower& t);

// Also valid at p = 3; cross-checked against the pure-weight subset count.
cpp_int n5_closed(long long p, int m);

struct DistributionRow {
  cpp_int value;
  cpp_int count;
};

struct DistributionTable {
  long long p;
  int m;
  cpp_int q;
  std::vector<DistributionRow> rows;  // values ascending, zero counts kept
};

DistributionTable distribution_closed(long long p, int m);
DistributionTable distribution_oracle(const FieldTower& t, Exec ex = Exec::parallel);

// Histogram of the correlation values summed as complex exponentials over
// the shifted sequence pair; small fields only.
std::map<long long, long long> distribution_complex_reference(const FieldTower& t);

// The four power-moment identities of the histogram.
bool moment_identities_check(const RootCountHistogram& h, long long p, int m);

}  // namespace niho
