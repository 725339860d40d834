#include "niho/codes.hpp"

#include <algorithm>
#include <cmath>

#include <boost/multiprecision/cpp_complex.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace niho {
namespace {

using mpc = boost::multiprecision::cpp_complex_50;
using mpreal = mpc::value_type;

template <class C>
C cpow_int(C base, long long e) {
  if (e < 0) return C(1) / cpow_int(base, -e);
  C r(1);
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

}  // namespace

CompleteWeight zetterberg_dual_word(const FieldTower& t, const FieldElement& a) {
  if (&a.ctx() != &t.ext)
    throw Error(ErrorCode::AmbiguousRepresentation, "element not from the extension field");
  CompleteWeight cw(t.ext.p, 0);
  std::uint32_t av = a.packed();
  for (std::uint32_t u : t.units()) ++cw[t.ext.trace(t.ext.mul(av, u))];
  return cw;
}

CompleteWeight melas_dual_word(const FieldContext& gfq, const FieldElement& a,
                               const FieldElement& b) {
  if (&a.ctx() != &gfq || &b.ctx() != &gfq)
    throw Error(ErrorCode::AmbiguousRepresentation, "element not from the given field");
  CompleteWeight cw(gfq.p, 0);
  std::uint32_t av = a.packed(), bv = b.packed();
  for (long long k = 0; k < gfq.n - 1; ++k) {
    std::uint32_t x = gfq.exp_table()[k];
    ++cw[gfq.trace(gfq.add(gfq.mul(av, x), gfq.mul(bv, gfq.inv(x))))];
  }
  return cw;
}

int count_unit_circle_quadratic_roots(const FieldElement& aabar) {
  if (aabar.is_zero()) throw Error(ErrorCode::ZeroInput, "norm must be nonzero");
  const FieldContext& c = aabar.ctx();
  if (c.p == 2) throw Error(ErrorCode::EvenCharacteristic, "needs odd characteristic");
  std::uint32_t cv = aabar.packed();
  return 1 - c.eta(c.mul(c.sub(cv, c.from_int(4)), c.inv(cv)));
}

int count_unit_circle_sum_inverse(const FieldElement& a) {
  const FieldContext& c = a.ctx();
  if (c.p == 2) throw Error(ErrorCode::EvenCharacteristic, "needs odd characteristic");
  std::uint32_t av = a.packed();
  return 1 - c.eta(c.sub(c.mul(av, av), c.from_int(4)));
}

std::map<CompleteWeight, long long> zetterberg_weight_distribution(const FieldTower& t,
                                                                   Exec ex) {
  const FieldContext& e = t.ext;
  const auto& units = t.units();
  const bool par = ex == Exec::parallel;
  std::map<CompleteWeight, long long> dist;
#pragma omp parallel if (par)
  {
    std::map<CompleteWeight, long long> local;
#pragma omp for schedule(static) nowait
    for (long long a = 0; a < e.n; ++a) {
      CompleteWeight cw(e.p, 0);
      std::uint32_t av = static_cast<std::uint32_t>(a);
      for (std::uint32_t u : units) ++cw[e.trace(e.mul(av, u))];
      ++local[cw];
    }
#pragma omp critical
    for (auto& kv : local) dist[kv.first] += kv.second;
  }
  return dist;
}

std::map<CompleteWeight, long long> melas_weight_distribution(const FieldContext& gfq,
                                                              Exec ex) {
  const bool par = ex == Exec::parallel;
  std::map<CompleteWeight, long long> dist;
#pragma omp parallel if (par)
  {
    std::map<CompleteWeight, long long> local;
#pragma omp for schedule(static) nowait
    for (long long a = 0; a < gfq.n; ++a) {
      std::uint32_t av = static_cast<std::uint32_t>(a);
      for (long long b = 0; b < gfq.n; ++b) {
        CompleteWeight cw(gfq.p, 0);
        std::uint32_t bv = static_cast<std::uint32_t>(b);
        for (long long k = 0; k < gfq.n - 1; ++k) {
          std::uint32_t x = gfq.exp_table()[k];
          ++cw[gfq.trace(gfq.add(gfq.mul(av, x), gfq.mul(bv, gfq.inv(x))))];
        }
        ++local[cw];
      }
    }
#pragma omp critical
    for (auto& kv : local) dist[kv.first] += kv.second;
  }
  return dist;
}

bool macwilliams_identity_check(const FieldTower& t,
                                const std::vector<std::complex<double>>& samples,
                                double tol, double* max_rel_err) {
  const long long q = t.q;
  const long long p = t.ext.p;
  if (q > 125) throw Error(ErrorCode::TooLarge, "identity check capped at q <= 125");

  auto zdist = zetterberg_weight_distribution(t);
  auto mdist = melas_weight_distribution(t.base);

  // The (1-z)^(1-q) terms on the right cancel almost exactly: at q = 121 and
  // z = 1/2 two terms near 1e36 leave a result near 1e8, which is far beyond
  // what double can resolve. Evaluate at 50 decimal digits internally.
  const mpreal pi = acos(mpreal(-1));
  std::vector<mpc> w(p);
  for (long long k = 0; k < p; ++k) {
    mpreal ang = 2 * pi * k / p;
    w[k] = mpc(cos(ang), sin(ang));
  }

  mpreal worst(0);
  for (std::complex<double> zd : samples) {
    mpc z(zd.real(), zd.imag());
    mpc zp = cpow_int(z, p);
    if (abs(mpc(1) - z) < 1e-3 || abs(mpc(1) - zp) < 1e-3)
      throw Error(ErrorCode::ZeroInput, "sample too close to a pole");

    std::vector<mpc> x(p), y(p);
    for (long long i = 0; i < p; ++i) {
      x[i] = mpc(1) - w[(p - i) % p] * z;
      mpc s(0);
      for (long long sidx = 0; sidx < p; ++sidx) s += w[i * sidx % p] * cpow_int(z, sidx);
      y[i] = s;
    }

    mpc lhs(0);
    for (const auto& kv : zdist) {
      mpc term(kv.second);
      for (long long i = 0; i < p; ++i) term *= cpow_int(x[i], kv.first[i]);
      lhs += term;
    }

    mpc wm(0);
    for (const auto& kv : mdist) {
      mpc term(kv.second);
      for (long long i = 0; i < p; ++i) term *= cpow_int(y[i], kv.first[i]);
      wm += term;
    }
    mpc wmq = wm / mpc(q * q);

    mpc one_minus_z = mpc(1) - z;
    mpc one_minus_zp = mpc(1) - zp;
    mpc rhs =
        cpow_int(one_minus_z, q + 1) -
        mpc(2 * (q + 1)) * one_minus_z * cpow_int(one_minus_zp, q / p) -
        (mpc(q + 1) / mpc(q - 1)) * cpow_int(one_minus_zp, 2 * q / p) *
            cpow_int(one_minus_z, 1 - q) +
        (mpc(q) * mpc(q) * mpc(q + 1) / mpc(q - 1)) *
            cpow_int(one_minus_zp, 2 * q / p - q + 1) * wmq;

    mpreal al = abs(lhs), ar = abs(rhs);
    mpreal rel = abs(lhs - rhs) / std::max({mpreal(1), al, ar});
    worst = std::max(worst, rel);
  }
  if (max_rel_err) *max_rel_err = worst.convert_to<double>();
  return worst <= tol;
}

}  // namespace niho
