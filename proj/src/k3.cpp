#include "niho/k3.hpp"

#include <cmath>
#include <set>
#include <vector>

#include "niho/lucas.hpp"

namespace niho {
namespace {

long long isqrt_ll(long long x) {
  if (x < 0) return -1;
  long long r = static_cast<long long>(std::sqrt(static_cast<double>(x)));
  while (r > 0 && r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

void check_p(long long p) {
  if (!is_prime(p)) throw Error(ErrorCode::NonPrime, "characteristic must be prime");
  if (p < 7) throw Error(ErrorCode::SmallCharacteristic, "coefficient needs p >= 7");
}

}  // namespace

QuadFormRep quad_form_representation(long long p) {
  check_p(p);
  long long r = p % 15;
  if (r == 1 || r == 4) {
    // a^2 + ab + 4b^2 = p, so (2a+b)^2 + 15 b^2 = 4p
    for (long long b = -isqrt_ll(4 * p / 15); 15 * b * b <= 4 * p; ++b) {
      long long s2 = 4 * p - 15 * b * b;
      long long s = isqrt_ll(s2);
      if (s * s != s2) continue;
      for (long long t : {s, -s}) {
        if ((t - b) % 2 != 0) continue;
        long long a = (t - b) / 2;
        if (a * a + a * b + 4 * b * b == p) return QuadFormRep{1, a, b};
      }
    }
    throw Error(ErrorCode::MismatchError, "no representation found");
  }
  if (r == 2 || r == 8) {
    // 2a^2 + ab + 2b^2 = p, so (4a+b)^2 + 15 b^2 = 8p
    for (long long b = -isqrt_ll(8 * p / 15); 15 * b * b <= 8 * p; ++b) {
      long long s2 = 8 * p - 15 * b * b;
      long long s = isqrt_ll(s2);
      if (s * s != s2) continue;
      for (long long t : {s, -s}) {
        if ((t - b) % 4 != 0) continue;
        long long a = (t - b) / 4;
        if (2 * a * a + a * b + 2 * b * b == p) return QuadFormRep{2, a, b};
      }
    }
    throw Error(ErrorCode::MismatchError, "no representation found");
  }
  return QuadFormRep{0, 0, 0};
}

long long a_p_coefficient(long long p) {
  check_p(p);
  long long r = p % 15;
  std::set<long long> values;
  if (r == 1 || r == 4) {
    for (long long b = -isqrt_ll(4 * p / 15); 15 * b * b <= 4 * p; ++b) {
      long long s2 = 4 * p - 15 * b * b;
      long long s = isqrt_ll(s2);
      if (s * s != s2) continue;
      for (long long t : {s, -s}) {
        if ((t - b) % 2 != 0) continue;
        long long a = (t - b) / 2;
        if (a * a + a * b + 4 * b * b == p) values.insert(2 * a * a + 2 * a * b - 7 * b * b);
      }
    }
  } else if (r == 2 || r == 8) {
    for (long long b = -isqrt_ll(8 * p / 15); 15 * b * b <= 8 * p; ++b) {
      long long s2 = 8 * p - 15 * b * b;
      long long s = isqrt_ll(s2);
      if (s * s != s2) continue;
      for (long long t : {s, -s}) {
        if ((t - b) % 4 != 0) continue;
        long long a = (t - b) / 4;
        if (2 * a * a + a * b + 2 * b * b == p) values.insert(a * a + 8 * a * b + b * b);
      }
    }
  } else {
    return 0;
  }
  if (values.empty()) throw Error(ErrorCode::MismatchError, "no representation found");
  if (values.size() != 1)
    throw Error(ErrorCode::MismatchError, "representations disagree on the coefficient");
  return *values.begin();
}

long long a_p_modular_form(long long p) {
  check_p(p);
  if (p > 2000) throw Error(ErrorCode::TooLarge, "series route capped at p <= 2000");
  long long N = p - 1;  // want the z^p coefficient of z * theta * product
  std::vector<cpp_int> c(N + 1, 0);

  // theta series of m^2 + mn + 4n^2
  for (long long n = -isqrt_ll(4 * N / 15); 15 * n * n <= 4 * N; ++n) {
    long long s = isqrt_ll(4 * N - 15 * n * n);
    long long lo2 = -s - n, hi2 = s - n;
    long long mlo = lo2 >= 0 ? (lo2 + 1) / 2 : -((-lo2) / 2);
    long long mhi = hi2 >= 0 ? hi2 / 2 : -((-hi2 + 1) / 2);
    for (long long m = mlo; m <= mhi; ++m) {
      long long e = m * m + m * n + 4 * n * n;
      if (e <= N) c[e] += 1;
    }
  }

  // times (1 - z^r)(1 - z^{3r})(1 - z^{5r})(1 - z^{15r}) for all r
  for (long long r = 1; r <= N; ++r) {
    for (long long s : {r, 3 * r, 5 * r, 15 * r}) {
      if (s > N) break;
      for (long long i = N; i >= s; --i) c[i] -= c[i - s];
    }
  }
  return c[N].convert_to<long long>();
}

cpp_int a_q(long long p, int m) {
  if (!is_prime(p)) throw Error(ErrorCode::NonPrime, "characteristic must be prime");
  if (p == 2) throw Error(ErrorCode::EvenCharacteristic, "coefficient needs odd characteristic");
  if (m < 1) throw Error(ErrorCode::TooLarge, "extension degree must be positive");
  if (p == 3 || p == 5) {
    cpp_int base = p == 3 ? -3 : 5;
    cpp_int out = 1;
    for (int i = 0; i < m; ++i) out *= base;
    return out;
  }
  long long ap = a_p_coefficient(p);
  long long j = jacobi(p, 15);
  QuadraticIntSequence seq{2, ap, ap, -j * p * p};
  return lucas_sequence_term(seq, m);
}

SurfaceCount count_surface_points(const FieldContext& c, Exec ex) {
  if (c.p == 2)
    throw Error(ErrorCode::EvenCharacteristic, "surface count needs odd characteristic");
  if (c.n > 400) throw Error(ErrorCode::TooLarge, "surface count capped at q <= 400");
  const long long q = c.n;
  const bool par = ex == Exec::parallel;

  // Returns 1 if the projective point lies on the surface, and flags whether
  // at least two coordinates vanish (the line locus).
  auto classify = [&c](const std::uint32_t x[5], bool& on_lines) -> bool {
    int zeros = 0;
    for (int i = 0; i < 5; ++i)
      if (x[i] == 0) ++zeros;
    on_lines = false;
    if (zeros >= 2) {
      on_lines = true;
      return true;
    }
    if (zeros == 1) return false;  // the elementary symmetric term survives
    std::uint32_t s = 0;
    for (int i = 0; i < 5; ++i) s = c.add(s, c.inv(x[i]));
    return s == 0;
  };

  long long total = 0, lines = 0;

  // chart x1 = 1
#pragma omp parallel for reduction(+ : total, lines) schedule(static) if (par)
  for (long long v2 = 0; v2 < q; ++v2) {
    std::uint32_t x2 = static_cast<std::uint32_t>(v2);
    std::uint32_t s2 = c.add(1, x2);
    for (long long v3 = 0; v3 < q; ++v3) {
      std::uint32_t x3 = static_cast<std::uint32_t>(v3);
      std::uint32_t s3 = c.add(s2, x3);
      for (long long v4 = 0; v4 < q; ++v4) {
        std::uint32_t x4 = static_cast<std::uint32_t>(v4);
        std::uint32_t x[5] = {1, x2, x3, x4, c.neg(c.add(s3, x4))};
        bool ln;
        if (classify(x, ln)) {
          ++total;
          if (ln) ++lines;
        }
      }
    }
  }

  // chart x1 = 0, x2 = 1
  for (long long v3 = 0; v3 < q; ++v3) {
    std::uint32_t x3 = static_cast<std::uint32_t>(v3);
    std::uint32_t s3 = c.add(1, x3);
    for (long long v4 = 0; v4 < q; ++v4) {
      std::uint32_t x4 = static_cast<std::uint32_t>(v4);
      std::uint32_t x[5] = {0, 1, x3, x4, c.neg(c.add(s3, x4))};
      bool ln;
      if (classify(x, ln)) {
        ++total;
        if (ln) ++lines;
      }
    }
  }

  // chart x1 = x2 = 0, x3 = 1
  for (long long v4 = 0; v4 < q; ++v4) {
    std::uint32_t x4 = static_cast<std::uint32_t>(v4);
    std::uint32_t x[5] = {0, 0, 1, x4, c.neg(c.add(1, x4))};
    bool ln;
    if (classify(x, ln)) {
      ++total;
      if (ln) ++lines;
    }
  }

  // chart x1 = x2 = x3 = 0, x4 = 1; x5 = -1 is forced
  {
    std::uint32_t x[5] = {0, 0, 0, 1, c.neg(1)};
    bool ln;
    if (classify(x, ln)) {
      ++total;
      if (ln) ++lines;
    }
  }
  // x1 = .. = x4 = 0 violates the hyperplane condition

  return SurfaceCount{q, total, lines, total + 10 * q};
}

cpp_int surface_smooth_closed(long long p, int m) {
  if (!is_prime(p)) throw Error(ErrorCode::NonPrime, "characteristic must be prime");
  if (p == 2) throw Error(ErrorCode::EvenCharacteristic, "closed count needs odd characteristic");
  if (m < 1) throw Error(ErrorCode::TooLarge, "extension degree must be positive");
  cpp_int q = 1;
  for (int i = 0; i < m; ++i) q *= p;
  long long chi3 = p == 3 ? 0 : (q % 3 == 1 ? 1 : -1);
  return 1 + q * q + q * (16 + 4 * chi3) + a_q(p, m);
}

}  // namespace niho
