#include <doctest.h>

#include "niho/char_sums.hpp"
#include "niho/errors.hpp"

using namespace niho;

namespace {

long long char_sum_literal(const FieldContext& f, std::uint32_t a2, std::uint32_t a1,
                           std::uint32_t a0) {
  long long s = 0;
  for (std::uint32_t x = 0; x < f.n; ++x)
    s += f.eta(f.add(f.mul(a2, f.mul(x, x)), f.add(f.mul(a1, x), a0)));
  return s;
}

}  // namespace

TEST_CASE("quadratic character sums in closed form") {
  for (auto [p, m] : {std::pair<long long, int>{7, 1}, {5, 2}, {13, 1}, {3, 3}}) {
    const FieldContext& f = build_field_context(p, m);
    for (std::uint32_t a2 = 1; a2 < f.n; a2 += 3)
      for (std::uint32_t a1 = 0; a1 < f.n; a1 += 4)
        for (std::uint32_t a0 : {0u, 1u, 2u}) {
          long long closed = char_sum_quadratic(FieldElement(f, a2), FieldElement(f, a1),
                                                FieldElement(f, a0));
          CHECK(closed == char_sum_literal(f, a2, a1, a0));
        }
  }
}

TEST_CASE("degenerate quadratic is rejected") {
  const FieldContext& f = build_field_context(7, 1);
  CHECK_THROWS_AS(char_sum_quadratic(FieldElement(f, 0), FieldElement(f, 1),
                                     FieldElement(f, 1)),
                  Error);
  const FieldContext& g = build_field_context(2, 1);
  CHECK_THROWS_AS(char_sum_quadratic(FieldElement(g, 1), FieldElement(g, 0),
                                     FieldElement(g, 0)),
                  Error);
}

TEST_CASE("curve point counts") {
  CHECK(count_curve_points(7).trace == 4);
  CHECK(count_curve_points(11).trace == 0);
  CHECK(count_curve_points(13).trace == -2);
  CHECK(count_curve_points(17).trace == -6);
  CHECK(count_curve_points(7).count == 11);
}

TEST_CASE("lambda fixed values") {
  CHECK(lambda_closed(5, 1) == 0);
  CHECK(lambda_closed(5, 2) == -2);
  CHECK(lambda_closed(7, 2) == -3);
  CHECK(lambda_closed(7, 3) == -21);
  CHECK(lambda_closed(11, 1) == -1);
  CHECK(lambda_closed(13, 1) == -3);
}

TEST_CASE("lambda recurrence matches direct summation") {
  for (auto [p, m] : {std::pair<long long, int>{5, 1}, {5, 2}, {5, 3}, {7, 1},
                      {7, 2}, {11, 1}, {11, 2}, {13, 1}, {17, 1}, {31, 1}}) {
    const FieldContext& f = build_field_context(p, m);
    CHECK(lambda_closed(p, m) == lambda_direct(f));
  }
}

TEST_CASE("lambda needs odd characteristic at least five") {
  CHECK_THROWS_AS(lambda_closed(3, 1), Error);
  CHECK_THROWS_AS(lambda_closed(2, 3), Error);
}
