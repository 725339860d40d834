#include <doctest.h>

#include <map>

#include "niho/distribution.hpp"
#include "niho/errors.hpp"

using namespace niho;

namespace {

std::map<long long, long long> table_as_map(const DistributionTable& t) {
  std::map<long long, long long> out;
  for (const auto& r : t.rows)
    out[r.value.convert_to<long long>()] = r.count.convert_to<long long>();
  return out;
}

}  // namespace

TEST_CASE("admissible parameters") {
  CHECK(check_gcd_condition(5, 1));
  CHECK(check_gcd_condition(5, 2));
  CHECK(check_gcd_condition(11, 1));
  CHECK(check_gcd_condition(7, 3));
  CHECK(!check_gcd_condition(7, 2));
  CHECK(!check_gcd_condition(19, 1));
  CHECK(!check_gcd_condition(3, 2));
}

TEST_CASE("root count histograms") {
  const FieldTower& t5 = build_field_tower(5, 1);
  CHECK(root_count_histogram(t5).n == std::array<long long, 6>{6, 11, 6, 1, 1, 0});

  const FieldTower& t11 = build_field_tower(11, 1);
  CHECK(root_count_histogram(t11).n == std::array<long long, 6>{38, 47, 26, 8, 1, 1});

  const FieldTower& t25 = build_field_tower(5, 2);
  RootCountHistogram h = root_count_histogram(t25);
  CHECK(h.n == std::array<long long, 6>{216, 239, 109, 54, 4, 3});
  CHECK(root_count_histogram(t25, Exec::serial).n == h.n);
  CHECK(root_count_histogram_reference(t25).n == h.n);

  // a = 0 leaves the single root z = -1
  CHECK(root_count(t25, FieldElement(t25.ext, 0)) == 1);
}

TEST_CASE("degenerate decimation is refused") {
  CHECK_THROWS_AS(distribution_closed(19, 1), Error);
  CHECK_THROWS_AS(distribution_closed(7, 2), Error);
  CHECK_THROWS_AS(b3_closed(7, 2), Error);
  CHECK_THROWS_AS(n5_closed(3, 2), Error);
  CHECK_THROWS_AS(distribution_closed(3, 3), Error);
  CHECK_THROWS_AS(distribution_closed(4, 1), Error);
  const FieldTower& t49 = build_field_tower(7, 2);
  CHECK_THROWS_AS(root_count_histogram(t49), Error);
  try {
    distribution_closed(19, 1);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::GcdViolation);
  }
}

TEST_CASE("third power sums") {
  CHECK(b3_closed(5, 1) == 7);
  CHECK(b3_closed(7, 1) == 7);
  CHECK(b3_closed(5, 2) == 25);
  CHECK(b3_closed(11, 1) == 13);
  for (auto [p, m] : {std::pair<long long, int>{5, 1}, {7, 1}, {5, 2}, {11, 1}, {13, 1}}) {
    const FieldTower& t = build_field_tower(p, m);
    CHECK(cpp_int(b3_brute_force(t)) == b3_closed(p, m));
    CHECK(b3_brute_force(t) == b3_brute_force(t, Exec::serial));
  }
}

TEST_CASE("four root counts") {
  CHECK(n4_closed(5, 1) == 1);
  CHECK(n4_closed(5, 2) == 4);
  CHECK(n4_closed(11, 1) == 1);
  CHECK(n4_closed(7, 3) == 52);
  for (auto [p, m] : {std::pair<long long, int>{5, 1}, {5, 2}, {11, 1}, {13, 1}}) {
    const FieldTower& t = build_field_tower(p, m);
    N4Intermediates n4 = n4_intermediate_counts(t);
    CHECK(cpp_int(n4.n4) == n4_closed(p, m));
    CHECK(n4.x_count - n4.delta_count - n4.h_count == 6 * n4.n4);
  }
}

TEST_CASE("five root counts") {
  CHECK(n5_closed(5, 2) == 3);
  CHECK(n5_closed(7, 3) == 954);
  CHECK(n5_closed(3, 3) == 5);
  CHECK(n5_closed(11, 1) == 1);
}

TEST_CASE("closed distribution tables") {
  DistributionTable d51 = distribution_closed(5, 1);
  CHECK(table_as_map(d51) ==
        std::map<long long, long long>{{-6, 6}, {-1, 10}, {4, 6}, {9, 1}, {14, 1}, {19, 0}});
  CHECK(d51.rows.size() == 6);  // zero rows are kept

  CHECK(table_as_map(distribution_closed(5, 2)) ==
        std::map<long long, long long>{
            {-26, 216}, {-1, 238}, {24, 109}, {49, 54}, {74, 4}, {99, 3}});

  CHECK(table_as_map(distribution_closed(7, 3)) ==
        std::map<long long, long long>{{-344, 42970},
                                       {-1, 44134},
                                       {342, 19735},
                                       {685, 9803},
                                       {1028, 52},
                                       {1371, 954}});

  CHECK(table_as_map(distribution_closed(11, 1)) ==
        std::map<long long, long long>{
            {-12, 38}, {-1, 46}, {10, 26}, {21, 8}, {32, 1}, {43, 1}});
}

TEST_CASE("enumeration oracle agrees with the closed tables") {
  for (auto [p, m] : {std::pair<long long, int>{5, 1}, {5, 2}, {11, 1}, {13, 1}}) {
    const FieldTower& t = build_field_tower(p, m);
    DistributionTable oracle = distribution_oracle(t);
    DistributionTable closed = distribution_closed(p, m);
    REQUIRE(oracle.rows.size() == closed.rows.size());
    for (size_t i = 0; i < oracle.rows.size(); ++i) {
      CHECK(oracle.rows[i].value == closed.rows[i].value);
      CHECK(oracle.rows[i].count == closed.rows[i].count);
    }
  }
}

TEST_CASE("complex correlation sums reproduce the tables") {
  for (auto [p, m] : {std::pair<long long, int>{5, 1}, {11, 1}, {13, 1}}) {
    const FieldTower& t = build_field_tower(p, m);
    std::map<long long, long long> hist = distribution_complex_reference(t);
    std::map<long long, long long> closed = table_as_map(distribution_closed(p, m));
    for (auto it = closed.begin(); it != closed.end();) {
      if (it->second == 0)
        it = closed.erase(it);
      else
        ++it;
    }
    CHECK(hist == closed);
  }
  const FieldTower& big = build_field_tower(5, 2);
  CHECK_THROWS_AS(distribution_complex_reference(big), Error);
}

TEST_CASE("power moments") {
  for (auto [p, m] : {std::pair<long long, int>{5, 1}, {5, 2}, {11, 1}, {13, 1}}) {
    const FieldTower& t = build_field_tower(p, m);
    CHECK(moment_identities_check(root_count_histogram(t), p, m));
  }
  // at q = 49 the decimation degenerates: the first three moments still
  // hold for the root-count histogram, the fourth does not
  RootCountHistogram h49{49, {800, 1020, 385, 160, 0, 36}};
  CHECK(!moment_identities_check(h49, 7, 2));
  long long s0 = 0, s1 = 0, s2 = 0;
  for (int i = 0; i <= 5; ++i) {
    s0 += h49.n[i];
    s1 += (i - 1) * h49.n[i];
    s2 += (i - 1) * (i - 1) * h49.n[i];
  }
  CHECK(s0 == 49 * 49);
  CHECK(s1 == 49);
  CHECK(s2 == 49 * 49);
}
