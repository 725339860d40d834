#include "niho/distribution.hpp"

#include <cmath>
#include <complex>

#include "niho/char_sums.hpp"
#include "niho/k3.hpp"
#include "niho/patterns.hpp"

namespace niho {
namespace {

cpp_int pow_q(long long p, int m) {
  cpp_int q = 1;
  for (int i = 0; i < m; ++i) q *= p;
  return q;
}

cpp_int exact_div(const cpp_int& num, const cpp_int& den) {
  if (num % den != 0)
    throw Error(ErrorCode::IntegralityFailure, "closed form is not an integer");
  return num / den;
}

void require_valid(long long p, int m, long long min_p = 5) {
  if (!is_prime(p)) throw Error(ErrorCode::NonPrime, "characteristic must be prime");
  if (p == 2) throw Error(ErrorCode::EvenCharacteristic, "needs odd characteristic");
  if (p < min_p) throw Error(ErrorCode::SmallCharacteristic, "needs p >= 5");
  if (m < 1) throw Error(ErrorCode::TooLarge, "extension degree must be positive");
  if (!check_gcd_condition(p, m))
    throw Error(ErrorCode::GcdViolation, "5 divides q + 1, the decimation is degenerate");
}

}  // namespace

bool check_gcd_condition(long long p, int m) {
  if (!is_prime(p)) throw Error(ErrorCode::NonPrime, "characteristic must be prime");
  if (m < 1) throw Error(ErrorCode::TooLarge, "extension degree must be positive");
  // gcd(3(q-1)+1, q^2-1) = 1 exactly when 5 does not divide q + 1
  long long q5 = 1;
  for (int i = 0; i < m; ++i) q5 = q5 * (p % 5) % 5;
  return (q5 + 1) % 5 != 0;
}

int root_count(const FieldTower& t, const FieldElement& a) {
  require_valid(t.ext.p, t.base.deg);
  if (&a.ctx() != &t.ext)
    throw Error(ErrorCode::AmbiguousRepresentation, "element not from the extension field");
  const FieldContext& E = t.ext;
  std::uint32_t av = a.packed();
  std::uint32_t abar = t.conj(av);
  int cnt = 0;
  for (std::uint32_t z : t.units()) {
    std::uint32_t z2 = E.mul(z, z);
    std::uint32_t z3 = E.mul(z2, z);
    std::uint32_t z5 = E.mul(z2, z3);
    std::uint32_t val = E.add(E.add(z5, E.mul(abar, z3)), E.add(E.mul(av, z2), 1));
    if (val == 0) ++cnt;
  }
  return cnt;
}

RootCountHistogram root_count_histogram(const FieldTower& t, Exec ex) {
  require_valid(t.ext.p, t.base.deg);
  const FieldContext& E = t.ext;
  const long long q = t.q;
  const long long n1 = E.n - 1;
  if (E.n > 100000000) throw Error(ErrorCode::TooLarge, "histogram capped at q^2 <= 1e8");
  const long long half = E.half();
  const auto& zech = E.zech_table();
  const auto& logt = E.log_table();

  // per unit-circle element: logs of z^2 and z^3 and the log of -(z^5 + 1)
  std::vector<long long> lz2(q + 1), lz3(q + 1), tlog(q + 1);
  {
    const auto& units = t.units();
    for (long long j = 0; j <= q; ++j) {
      std::uint32_t z = units[j];
      long long lz = logt[z];
      lz2[j] = 2 * lz % n1;
      lz3[j] = 3 * lz % n1;
      std::uint32_t z5 = E.exp_at(5 * lz);
      std::uint32_t target = E.neg(E.add(z5, 1));
      tlog[j] = target == 0 ? -1 : logt[target];
    }
  }

  std::array<long long, 6> n{};
  long long c0 = 0, c1 = 0, c2 = 0, c3 = 0, c4 = 0, c5 = 0;
  const bool par = ex == Exec::parallel;
#pragma omp parallel for reduction(+ : c0, c1, c2, c3, c4, c5) schedule(static) if (par)
  for (long long la = 0; la < n1; ++la) {
    long long labar = la * q % n1;
    int cnt = 0;
    for (long long j = 0; j <= q; ++j) {
      // a z^2 + conj(a) z^3 must equal -(z^5 + 1)
      long long lu = la + lz2[j];
      if (lu >= n1) lu -= n1;
      long long lv = labar + lz3[j];
      if (lv >= n1) lv -= n1;
      long long diff = lv - lu;
      if (diff < 0) diff += n1;
      if (diff == half) {
        if (tlog[j] == -1) ++cnt;
        continue;
      }
      if (tlog[j] == -1) continue;
      long long ls = lu + zech[diff];
      if (ls >= n1) ls -= n1;
      if (ls == tlog[j]) ++cnt;
    }
    switch (cnt) {
      case 0: ++c0; break;
      case 1: ++c1; break;
      case 2: ++c2; break;
      case 3: ++c3; break;
      case 4: ++c4; break;
      default: ++c5; break;
    }
  }
  n = {c0, c1, c2, c3, c4, c5};
  ++n[root_count(t, FieldElement(E, 0))];
  return RootCountHistogram{q, n};
}

RootCountHistogram root_count_histogram_reference(const FieldTower& t) {
  require_valid(t.ext.p, t.base.deg);
  const FieldContext& E = t.ext;
  std::array<long long, 6> n{};
  for (long long a = 0; a < E.n; ++a)
    ++n[root_count(t, FieldElement(E, static_cast<std::uint32_t>(a)))];
  return RootCountHistogram{t.q, n};
}

cpp_int b3_closed(long long p, int m) {
  require_valid(p, m);
  cpp_int q = pow_q(p, m);
  return q % 3 != 2 ? q : q + 2;
}

long long b3_brute_force(const FieldTower& t, Exec ex) {
  require_valid(t.ext.p, t.base.deg);
  const FieldContext& E = t.ext;
  const long long n1 = E.n - 1;
  const long long d = (3 * t.q - 2) % n1;  // exponent acts mod q^2 - 1
  const bool par = ex == Exec::parallel;
  long long total = 0;
#pragma omp parallel for reduction(+ : total) schedule(static) if (par)
  for (long long y = 0; y < E.n; ++y) {
    std::uint32_t yv = static_cast<std::uint32_t>(y);
    std::uint32_t y1 = E.add(yv, 1);
    std::uint32_t t1 = y1 == 0 ? 0 : E.exp_at(E.log_of(y1) * d);
    std::uint32_t t2 = yv == 0 ? 0 : E.exp_at(E.log_of(yv) * d);
    if (E.sub(t1, t2) == 1) ++total;
  }
  return total;
}

cpp_int n4_closed(long long p, int m) {
  require_valid(p, m);
  cpp_int q = pow_q(p, m);
  int sgn = m % 2 == 0 ? 1 : -1;
  if (p == 5) return exact_div(q - sgn, 6);
  long long chi5 = jacobi_symbol_power(5, p, m);
  long long chi15 = jacobi_symbol_power(-15, p, m);
  cpp_int lam = lambda_closed(p, m);
  return exact_div(q - 4 + 3 * chi5 + 3 * chi15 + lam, 6);
}

N4Intermediates n4_intermediate_counts(const FieldTower& t) {
  const long long p = t.ext.p;
  const int m = t.base.deg;
  require_valid(p, m);
  const FieldContext& E = t.ext;
  const auto& u = t.units();
  const long long q = t.q;
  const std::uint32_t two = E.from_int(2);
  const std::uint32_t one = 1;

  long long x_count = 0, delta_count = 0, h_count = 0;
  for (long long i = 0; i <= q; ++i) {
    std::uint32_t s1 = E.add(two, u[i]);
    for (long long j = 0; j <= q; ++j) {
      std::uint32_t z3 = E.neg(E.add(s1, u[j]));
      if (!t.in_units(z3)) continue;
      ++x_count;
      if (u[i] == u[j] || u[i] == z3 || u[j] == z3) {
        ++delta_count;
      } else if (u[i] == one || u[j] == one || z3 == one) {
        ++h_count;
      }
    }
  }

  long long lam = lambda_closed(p, m).convert_to<long long>();
  long long chi5 = jacobi_symbol_power(5, p, m);
  long long chi15 = jacobi_symbol_power(-15, p, m);
  long long d5 = p == 5 ? 1 : 0;
  if (x_count != q + 2 + lam)
    throw Error(ErrorCode::MismatchError, "triple count disagrees with closed form");
  if (delta_count != 3 - 3 * chi15 - 2 * d5)
    throw Error(ErrorCode::MismatchError, "repeated-coordinate count disagrees");
  if (h_count != 3 * (1 - chi5 - d5))
    throw Error(ErrorCode::MismatchError, "coordinate-one count disagrees");
  long long free_count = x_count - delta_count - h_count;
  if (free_count % 6 != 0)
    throw Error(ErrorCode::IntegralityFailure, "free triple count not divisible by 6");
  return N4Intermediates{x_count, delta_count, h_count, free_count / 6};
}

cpp_int n5_closed(long long p, int m) {
  require_valid(p, m, 3);
  cpp_int q = pow_q(p, m);
  int sgn = m % 2 == 0 ? 1 : -1;
  cpp_int n5;
  if (p == 3) {
    n5 = exact_div(q * q - q * (6 + sgn) + 6, 120);
  } else if (p == 5) {
    n5 = exact_div(q * q - q * (7 + 4 * sgn) + 10 * sgn, 120);
  } else {
    int chi3 = m % 2 == 0 ? 1 : jacobi(p, 3);
    long long chi5 = jacobi_symbol_power(5, p, m);
    long long chi15 = jacobi_symbol_power(-15, p, m);
    cpp_int lam = lambda_closed(p, m);
    cpp_int aq = a_q(p, m);
    n5 = exact_div(q * q - q * (6 + 4 * chi3) + 16 - 20 * chi5 - 15 * chi15 - 10 * lam - aq,
                   120);
  }
  // the subset count B5 must equal (q + 1) N5
  cpp_int b5 = b5_pure_weight(p, m);
  if (b5 != (q + 1) * n5)
    throw Error(ErrorCode::MismatchError, "subset count disagrees with (q+1) N5");
  return n5;
}

namespace {

DistributionTable table_from_counts(long long p, int m, const cpp_int& q, const cpp_int& n0,
                                    const cpp_int& n1, const cpp_int& n2, const cpp_int& n3,
                                    const cpp_int& n4, const cpp_int& n5) {
  for (const cpp_int* c : {&n0, &n1, &n2, &n3, &n4, &n5})
    if (*c < 0) throw Error(ErrorCode::NegativeFrequency, "negative frequency");
  if (n0 + n1 + n2 + n3 + n4 + n5 != q * q - 1)
    throw Error(ErrorCode::MismatchError, "frequencies do not sum to q^2 - 1");
  DistributionTable t{p, m, q, {}};
  t.rows = {{-q - 1, n0}, {-1, n1},        {q - 1, n2},
            {2 * q - 1, n3}, {3 * q - 1, n4}, {4 * q - 1, n5}};
  return t;
}

}  // namespace

DistributionTable distribution_closed(long long p, int m) {
  require_valid(p, m);
  cpp_int q = pow_q(p, m);
  cpp_int b3 = b3_closed(p, m);
  cpp_int n4 = n4_closed(p, m);
  cpp_int n5 = n5_closed(p, m);
  cpp_int r0 = exact_div(3 * q * q - 2 * q - b3 * q, 6) + n4 + 4 * n5;
  cpp_int r1 = exact_div(b3 * q - q, 2) - 4 * n4 - 15 * n5 - 1;
  cpp_int r2 = exact_div(q * q + 2 * q - b3 * q, 2) + 6 * n4 + 20 * n5;
  cpp_int r3 = exact_div(b3 * q - q, 6) - 4 * n4 - 10 * n5;
  return table_from_counts(p, m, q, r0, r1, r2, r3, n4, n5);
}

DistributionTable distribution_oracle(const FieldTower& t, Exec ex) {
  RootCountHistogram h = root_count_histogram(t, ex);
  cpp_int q = h.q;
  // the all-zero word at a = 0 is excluded from the correlation spectrum
  return table_from_counts(t.ext.p, t.base.deg, q, h.n[0], h.n[1] - 1, h.n[2], h.n[3],
                           h.n[4], h.n[5]);
}

std::map<long long, long long> distribution_complex_reference(const FieldTower& t) {
  require_valid(t.ext.p, t.base.deg);
  if (t.q > 16) throw Error(ErrorCode::TooLarge, "complex reference capped at q <= 16");
  const FieldContext& E = t.ext;
  const long long p = E.p;
  const long long n1 = E.n - 1;
  const long long d = 3 * (t.q - 1) + 1;
  const double pi = std::acos(-1.0);

  std::vector<int> seq(n1);
  for (long long k = 0; k < n1; ++k) seq[k] = E.trace(E.exp_table()[k]);
  std::vector<std::complex<double>> w(p);
  for (long long k = 0; k < p; ++k)
    w[k] = std::exp(std::complex<double>(0.0, 2.0 * pi * k / p));

  std::map<long long, long long> hist;
  for (long long tau = 0; tau < n1; ++tau) {
    std::complex<double> s = 0.0;
    for (long long k = 0; k < n1; ++k) {
      int e = seq[(k + tau) % n1] - seq[d * k % n1];
      s += w[((e % p) + p) % p];
    }
    long long v = std::llround(s.real());
    if (std::abs(s.imag()) > 1e-6 || std::abs(s.real() - v) > 1e-6)
      throw Error(ErrorCode::MismatchError, "correlation sum is not a real integer");
    ++hist[v];
  }
  return hist;
}

bool moment_identities_check(const RootCountHistogram& h, long long p, int m) {
  cpp_int q = pow_q(p, m);
  cpp_int s0 = 0, s1 = 0, s2 = 0, s3 = 0;
  for (int i = 0; i <= 5; ++i) {
    cpp_int w = h.n[i];
    s0 += w;
    s1 += (i - 1) * w;
    s2 += (i - 1) * (i - 1) * w;
    s3 += (i - 1) * (i - 1) * (i - 1) * w;
  }
  cpp_int b3 = q % 3 != 2 ? q : q + 2;
  return s0 == q * q && s1 == q && s2 == q * q && s3 == q * b3;
}

}  // namespace niho
