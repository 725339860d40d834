#include <doctest.h>

#include "niho/codes.hpp"
#include "niho/errors.hpp"

using namespace niho;

TEST_CASE("trace words over the unit circle and the punctured line") {
  const FieldTower& t = build_field_tower(5, 2);
  const FieldContext& B = t.base;

  CompleteWeight z0 = zetterberg_dual_word(t, FieldElement(t.ext, 0));
  CHECK(z0 == CompleteWeight{26, 0, 0, 0, 0});

  CompleteWeight m00 = melas_dual_word(B, FieldElement(B, 0), FieldElement(B, 0));
  CHECK(m00 == CompleteWeight{24, 0, 0, 0, 0});

  // (Tr(x))_{x != 0}: the zero fiber loses the point x = 0
  CompleteWeight m10 = melas_dual_word(B, FieldElement(B, 1), FieldElement(B, 0));
  CHECK(m10 == CompleteWeight{4, 5, 5, 5, 5});

  long long total = 0;
  CompleteWeight zg = zetterberg_dual_word(t, FieldElement(t.ext, t.ext.gen));
  for (long long c : zg) total += c;
  CHECK(total == 26);
}

TEST_CASE("quadratics over the unit circle") {
  for (auto [p, m] : {std::pair<long long, int>{5, 2}, {7, 2}, {11, 1}}) {
    const FieldTower& t = build_field_tower(p, m);
    const FieldContext& E = t.ext;
    const FieldContext& B = t.base;
    const long long q = t.q;

    // roots in U of z^2 - wz + w^{1-q}, predicted from the norm of w
    for (long long l = 0; l < E.n - 1; l += 7) {
      std::uint32_t w = E.exp_at(l);
      std::uint32_t cterm = E.exp_at(E.log_of(w) * (1 - q));
      int literal = 0;
      for (std::uint32_t u : t.units())
        if (E.add(E.sub(E.mul(u, u), E.mul(w, u)), cterm) == 0) ++literal;
      std::uint32_t norm = E.exp_at(E.log_of(w) * (q + 1));
      int closed = count_unit_circle_quadratic_roots(FieldElement(B, t.project(norm)));
      CHECK(literal == closed);
    }

    // fibers of x + 1/x over the base field
    for (std::uint32_t a = 0; a < q; ++a) {
      int literal = 0;
      for (std::uint32_t u : t.units())
        if (E.add(u, E.inv(u)) == t.embed(a)) ++literal;
      CHECK(literal == count_unit_circle_sum_inverse(FieldElement(B, a)));
    }
  }
}

TEST_CASE("quadratic root count rejections") {
  const FieldContext& B = build_field_context(5, 2);
  CHECK_THROWS_AS(count_unit_circle_quadratic_roots(FieldElement(B, 0)), Error);
  const FieldContext& g2 = build_field_context(2, 2);
  CHECK_THROWS_AS(count_unit_circle_sum_inverse(FieldElement(g2, 1)), Error);
}

TEST_CASE("word pair duality") {
  for (auto [p, m] : {std::pair<long long, int>{5, 2}, {7, 2}}) {
    const FieldTower& t = build_field_tower(p, m);
    const FieldContext& E = t.ext;
    const FieldContext& B = t.base;
    const long long q = t.q;
    const long long target = 2 * q / p;
    for (long long l = 1; l < E.n - 1; l += 97) {
      std::uint32_t a = E.exp_at(l);
      CompleteWeight zc = zetterberg_dual_word(t, FieldElement(E, a));
      std::uint32_t norm = E.exp_at(E.log_of(a) * (q + 1));
      CompleteWeight mc =
          melas_dual_word(B, FieldElement(B, t.project(norm)), FieldElement(B, 1));
      for (long long s = 0; s < p; ++s) CHECK(zc[s] + mc[s] == target);
    }
  }
}

TEST_CASE("weight distributions aggregate every word") {
  const FieldTower& t = build_field_tower(5, 2);
  auto zd = zetterberg_weight_distribution(t);
  long long words = 0;
  for (const auto& kv : zd) words += kv.second;
  CHECK(words == 625);
  auto zs = zetterberg_weight_distribution(t, Exec::serial);
  CHECK(zd == zs);

  auto md = melas_weight_distribution(t.base);
  words = 0;
  for (const auto& kv : md) words += kv.second;
  CHECK(words == 625);
}

TEST_CASE("dual enumerator identity") {
  const FieldTower& t = build_field_tower(5, 2);
  std::vector<std::complex<double>> pts;
  const double pi = std::acos(-1.0);
  for (int k = 0; k < 10; ++k)
    pts.push_back(0.5 * std::exp(std::complex<double>(0.0, 2.0 * pi * k / 10)));
  double err = 1.0;
  CHECK(macwilliams_identity_check(t, pts, 1e-6, &err));
  CHECK(err < 1e-6);

  CHECK_THROWS_AS(macwilliams_identity_check(t, {std::complex<double>(1.0, 0.0)}),
                  Error);
  const FieldTower& big = build_field_tower(7, 3);
  CHECK_THROWS_AS(macwilliams_identity_check(big, pts), Error);
}
