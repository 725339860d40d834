#include <doctest.h>

#include "niho/errors.hpp"
#include "niho/k3.hpp"

using namespace niho;

TEST_CASE("quadratic form representations") {
  QuadFormRep r17 = quad_form_representation(17);
  CHECK(r17.form == 2);
  CHECK(2 * r17.a * r17.a + r17.a * r17.b + 2 * r17.b * r17.b == 17);
  QuadFormRep r19 = quad_form_representation(19);
  CHECK(r19.form == 1);
  CHECK(r19.a * r19.a + r19.a * r19.b + 4 * r19.b * r19.b == 19);
  CHECK(quad_form_representation(7).form == 0);
}

TEST_CASE("coefficient at the prime") {
  CHECK(a_p_coefficient(7) == 0);
  CHECK(a_p_coefficient(17) == -14);
  CHECK(a_p_coefficient(19) == -22);
  CHECK(a_p_coefficient(23) == 34);
}

TEST_CASE("series route agrees with the form route") {
  for (long long p = 7; p <= 60; ++p) {
    if (!is_prime(p)) continue;
    CHECK(a_p_coefficient(p) == a_p_modular_form(p));
  }
}

TEST_CASE("coefficient at prime powers") {
  CHECK(a_q(17, 2) == -382);
  CHECK(a_q(7, 3) == 0);
  CHECK(a_q(5, 2) == 25);
  CHECK(a_q(7, 2) == 98);
  CHECK(a_q(3, 1) == -3);
  CHECK(a_q(3, 4) == 81);
  CHECK(a_q(5, 3) == 125);
}

TEST_CASE("surface point counts") {
  struct Row {
    long long p;
    int m;
    long long on_surface;
  };
  for (Row r : {Row{5, 1, 41}, Row{7, 1, 120}, Row{11, 1, 144}, Row{13, 1, 300},
                Row{3, 2, 145}, Row{5, 2, 901}}) {
    const FieldContext& f = build_field_context(r.p, r.m);
    SurfaceCount sc = count_surface_points(f);
    long long q = f.n;
    CHECK(sc.q == q);
    CHECK(sc.on_surface == r.on_surface);
    CHECK(sc.on_lines == 10 * q - 10);
    CHECK(sc.smooth_model == r.on_surface + 10 * q);
    CHECK(cpp_int(sc.smooth_model) == surface_smooth_closed(r.p, r.m));
  }
}

TEST_CASE("surface counts match the serial kernel") {
  const FieldContext& f = build_field_context(11, 1);
  SurfaceCount a = count_surface_points(f, Exec::parallel);
  SurfaceCount b = count_surface_points(f, Exec::serial);
  CHECK(a.on_surface == b.on_surface);
  CHECK(a.on_lines == b.on_lines);
  CHECK(a.smooth_model == b.smooth_model);
}

TEST_CASE("coefficient route rejections") {
  CHECK_THROWS_AS(a_p_coefficient(4), Error);
  CHECK_THROWS_AS(a_p_coefficient(5), Error);
  CHECK_THROWS_AS(a_p_modular_form(2003), Error);
  CHECK_THROWS_AS(a_q(2, 3), Error);
}
