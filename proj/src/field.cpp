#include "niho/field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "niho/integers.hpp"

namespace niho {
namespace {

// Dense polynomials over GF(p), coefficients ascending, no trailing zeros.
using Poly = std::vector<long long>;

void ptrim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly pmod(Poly a, const Poly& f, long long p) {
  // f monic
  int df = static_cast<int>(f.size()) - 1;
  ptrim(a);
  while (static_cast<int>(a.size()) - 1 >= df) {
    long long c = a.back();
    int shift = static_cast<int>(a.size()) - 1 - df;
    for (int i = 0; i <= df; ++i) {
      a[shift + i] = (a[shift + i] - c * f[i]) % p;
      if (a[shift + i] < 0) a[shift + i] += p;
    }
    ptrim(a);
  }
  return a;
}

Poly pmulmod(const Poly& a, const Poly& b, const Poly& f, long long p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
  }
  return pmod(std::move(out), f, p);
}

Poly ppowmod(Poly base, long long e, const Poly& f, long long p) {
  Poly r{1};
  base = pmod(std::move(base), f, p);
  while (e > 0) {
    if (e & 1) r = pmulmod(r, base, f, p);
    base = pmulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

Poly pgcd(Poly a, Poly b, long long p) {
  ptrim(a);
  ptrim(b);
  while (!b.empty()) {
    // reduce a mod b after making b monic
    long long lead = b.back();
    if (lead != 1) {
      // lead^(p-2) mod p
      long long inv = 1, base = lead, e = p - 2;
      while (e > 0) {
        if (e & 1) inv = inv * base % p;
        base = base * base % p;
        e >>= 1;
      }
      for (auto& c : b) c = c * inv % p;
    }
    Poly r = pmod(std::move(a), b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool rabin_irreducible(const Poly& f, long long p, int m) {
  // X^(p^m) == X mod f, and gcd(X^(p^(m/l)) - X, f) = 1 for prime l | m
  auto xq = [&](int k) {
    long long e = 1;
    for (int i = 0; i < k; ++i) e *= p;
    return ppowmod(Poly{0, 1}, e, f, p);
  };
  for (long long l : prime_factors(m)) {
    Poly g = xq(static_cast<int>(m / l));
    // g - X
    if (g.size() < 2) g.resize(2, 0);
    g[1] = (g[1] - 1 + p) % p;
    ptrim(g);
    Poly d = pgcd(g, f, p);
    if (d.size() != 1) return false;
  }
  Poly h = xq(m);
  return h == pmod(Poly{0, 1}, f, p);
}

std::uint32_t pack(const Poly& a, long long p, int deg) {
  std::uint32_t out = 0;
  std::uint32_t mult = 1;
  for (int i = 0; i < deg; ++i) {
    long long c = i < static_cast<int>(a.size()) ? a[i] : 0;
    out += static_cast<std::uint32_t>(c) * mult;
    mult *= static_cast<std::uint32_t>(p);
  }
  return out;
}

Poly unpack(std::uint32_t v, long long p, int deg) {
  Poly a(deg, 0);
  for (int i = 0; i < deg; ++i) {
    a[i] = v % p;
    v = static_cast<std::uint32_t>(v / p);
  }
  ptrim(a);
  return a;
}

std::mutex cache_mutex;

}  // namespace

PrimeModulus::PrimeModulus(long long v) : value(v) {
  if (!is_prime(v)) throw Error(ErrorCode::NonPrime, "characteristic must be prime");
}

std::uint32_t FieldContext::inv(std::uint32_t a) const {
  if (a == 0) throw Error(ErrorCode::ZeroInput, "inverse of zero");
  long long l = log_[a];
  return l == 0 ? exp_[0] : exp_[n - 1 - l];
}

std::uint32_t FieldContext::pow(std::uint32_t a, long long e) const {
  if (a == 0) {
    if (e < 0) throw Error(ErrorCode::ZeroInput, "negative power of zero");
    return e == 0 ? exp_[0] : 0;
  }
  long long l = (log_[a] % (n - 1)) * (e % (n - 1)) % (n - 1);
  if (l < 0) l += n - 1;
  return exp_[l];
}

const FieldContext& build_field_context(long long p, int deg, int modulus_rank) {
  static std::map<std::tuple<long long, int, int>, std::unique_ptr<FieldContext>> cache;
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto key = std::make_tuple(p, deg, modulus_rank);
  auto it = cache.find(key);
  if (it != cache.end()) return *it->second;

  PrimeModulus pm(p);
  if (deg < 1) throw Error(ErrorCode::TooLarge, "degree must be positive");
  long long n = 1;
  for (int i = 0; i < deg; ++i) {
    n *= p;
    if (n > FieldContext::kMaxOrder)
      throw Error(ErrorCode::TooLarge, "field order exceeds table budget");
  }

  auto ctx = std::unique_ptr<FieldContext>(new FieldContext());
  ctx->p = p;
  ctx->deg = deg;
  ctx->n = n;
  ctx->modulus_rank = modulus_rank;
  ctx->p32_ = static_cast<std::uint32_t>(p);

  // modulus: enumerate monic degree-deg polynomials with the constant
  // coefficient as the most significant digit of the counter
  Poly f;
  {
    long long pm1 = n;  // p^deg candidates
    int found = 0;
    bool ok = false;
    for (long long r = 0; r < pm1; ++r) {
      Poly cand(deg + 1, 0);
      cand[deg] = 1;
      long long t = r;
      for (int i = 0; i < deg; ++i) {
        // c_0 is the most significant digit of r, so it varies slowest
        cand[deg - 1 - i] = t % p;
        t /= p;
      }
      if (rabin_irreducible(cand, p, deg)) {
        if (found == modulus_rank) {
          f = cand;
          ok = true;
          break;
        }
        ++found;
      }
    }
    if (!ok) throw Error(ErrorCode::TooLarge, "modulus rank out of range");
  }
  ctx->modulus.assign(f.begin(), f.end());
  ctx->modulus.resize(deg + 1);

  // generator: smallest packed value that is primitive
  std::vector<long long> ell = prime_factors(n - 1);
  std::uint32_t gen = 0;
  for (std::uint32_t v = 1; v < n; ++v) {
    Poly a = unpack(v, p, deg);
    bool prim = true;
    for (long long l : ell) {
      Poly w = ppowmod(a, (n - 1) / l, f, p);
      if (w == Poly{1}) {
        prim = false;
        break;
      }
    }
    if (prim) {
      gen = v;
      break;
    }
  }
  if (gen == 0) throw Error(ErrorCode::TooLarge, "no generator found");
  ctx->gen = gen;

  // exp/log tables by repeated multiplication with the generator
  ctx->exp_.resize(n - 1);
  ctx->log_.assign(n, -1);
  if (deg == 1) {
    long long cur = 1;
    for (long long k = 0; k < n - 1; ++k) {
      ctx->exp_[k] = static_cast<std::uint32_t>(cur);
      ctx->log_[cur] = static_cast<std::int32_t>(k);
      cur = cur * gen % p;
    }
  } else {
    Poly g = unpack(gen, p, deg);
    Poly cur{1};
    for (long long k = 0; k < n - 1; ++k) {
      std::uint32_t pv = pack(cur, p, deg);
      ctx->exp_[k] = pv;
      ctx->log_[pv] = static_cast<std::int32_t>(k);
      cur = pmulmod(cur, g, f, p);
    }
  }
  if (ctx->log_[1] != 0) throw Error(ErrorCode::MismatchError, "exp table failed self-check");

  // Zech logarithms
  ctx->zech_.resize(n - 1);
  for (long long k = 0; k < n - 1; ++k) {
    std::uint32_t s = ctx->add(1, ctx->exp_[k]);
    ctx->zech_[k] = s == 0 ? -1 : ctx->log_[s];
  }

  // absolute trace, via traces of the basis powers X^j
  if (deg >= 2) {
    std::vector<long long> trb(deg);
    for (int j = 0; j < deg; ++j) {
      std::uint32_t xj = ctx->pow(static_cast<std::uint32_t>(p), j);  // X^j
      std::uint32_t acc = 0;
      long long lx = ctx->log_[xj];
      long long pe = 1;
      for (int i = 0; i < deg; ++i) {
        acc = ctx->add(acc, ctx->exp_at(lx * (pe % (n - 1)) % (n - 1)));
        pe = pe * p % (n - 1);
      }
      if (acc >= static_cast<std::uint32_t>(p))
        throw Error(ErrorCode::MismatchError, "trace failed self-check");
      trb[j] = acc;
    }
    ctx->trace_.resize(n);
    for (long long v = 0; v < n; ++v) {
      long long t = 0;
      long long w = v;
      for (int j = 0; j < deg; ++j) {
        t += w % p * trb[j];
        w /= p;
      }
      ctx->trace_[v] = static_cast<std::uint16_t>(t % p);
    }
  }

  auto& slot = cache[key];
  slot = std::move(ctx);
  return *slot;
}

int trace_to_prime(const FieldElement& x) { return x.ctx().trace(x.packed()); }

FieldElement frobenius_q(const FieldElement& x) {
  const FieldContext& c = x.ctx();
  if (c.deg % 2 != 0)
    throw Error(ErrorCode::AmbiguousRepresentation, "context degree must be even");
  long long q = 1;
  for (int i = 0; i < c.deg / 2; ++i) q *= c.p;
  return x.pow(q);
}

int quadratic_character(const FieldElement& x) {
  if (x.ctx().p == 2)
    throw Error(ErrorCode::EvenCharacteristic, "quadratic character needs odd characteristic");
  return x.ctx().eta(x.packed());
}

int jacobi_symbol_power(long long a, long long p, int m) {
  if (p == 2) throw Error(ErrorCode::EvenCharacteristic, "Jacobi symbol needs odd modulus");
  if (!is_prime(p)) throw Error(ErrorCode::NonPrime, "modulus must be a prime power");
  if (m < 1) throw Error(ErrorCode::TooLarge, "exponent must be positive");
  int j = jacobi(a, p);
  if (j == 0) return 0;
  return m % 2 == 0 ? 1 : j;
}

FieldTower::FieldTower(const FieldContext& b, const FieldContext& e)
    : base(b), ext(e), q(b.n) {
  // root of the base modulus among the ext subfield elements, smallest packed
  std::vector<std::uint32_t> roots;
  auto eval = [&](std::uint32_t x) {
    std::uint32_t acc = 0;
    for (int i = base.deg; i >= 0; --i) {
      acc = ext.add(ext.mul(acc, x), ext.from_int(base.modulus[i]));
    }
    return acc;
  };
  if (eval(0) == 0) roots.push_back(0);
  for (long long k = 0; k < q - 1; ++k) {
    std::uint32_t x = ext.exp_at((q + 1) * k);
    if (eval(x) == 0) roots.push_back(x);
  }
  if (roots.empty()) throw Error(ErrorCode::MismatchError, "base modulus has no root in ext");
  theta = *std::min_element(roots.begin(), roots.end());

  embed_.resize(q);
  for (long long v = 0; v < q; ++v) {
    std::uint32_t acc = 0;
    long long w = v;
    std::vector<int> digits(base.deg);
    for (int i = 0; i < base.deg; ++i) {
      digits[i] = static_cast<int>(w % base.p);
      w /= base.p;
    }
    for (int i = base.deg - 1; i >= 0; --i) {
      acc = ext.add(ext.mul(acc, theta), ext.from_int(digits[i]));
    }
    embed_[v] = acc;
    project_[acc] = static_cast<std::uint32_t>(v);
  }
  if (project_.size() != static_cast<size_t>(q))
    throw Error(ErrorCode::MismatchError, "embedding is not injective");

  // spot-check the homomorphism
  std::uint32_t s = 12345;
  for (int i = 0; i < 64; ++i) {
    s = s * 1103515245u + 12345u;
    std::uint32_t a = s % static_cast<std::uint32_t>(q);
    s = s * 1103515245u + 12345u;
    std::uint32_t c = s % static_cast<std::uint32_t>(q);
    if (embed_[base.add(a, c)] != ext.add(embed_[a], embed_[c]) ||
        embed_[base.mul(a, c)] != ext.mul(embed_[a], embed_[c]))
      throw Error(ErrorCode::MismatchError, "embedding failed self-check");
  }

  units_.resize(q + 1);
  for (long long j = 0; j <= q; ++j) units_[j] = ext.exp_at((q - 1) * j);
}

std::uint32_t FieldTower::project(std::uint32_t ext_packed) const {
  auto it = project_.find(ext_packed);
  if (it == project_.end())
    throw Error(ErrorCode::AmbiguousRepresentation, "element not in the base field");
  return it->second;
}

const FieldTower& build_field_tower(long long p, int m, int modulus_rank) {
  static std::map<std::tuple<long long, int, int>, std::unique_ptr<FieldTower>> cache;
  const FieldContext& b = build_field_context(p, m, modulus_rank);
  const FieldContext& e = build_field_context(p, 2 * m, modulus_rank);
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto key = std::make_tuple(p, m, modulus_rank);
  auto it = cache.find(key);
  if (it != cache.end()) return *it->second;
  auto& slot = cache[key];
  slot = std::unique_ptr<FieldTower>(new FieldTower(b, e));
  return *slot;
}

std::vector<FieldElement> unit_circle(const FieldTower& t) {
  std::vector<FieldElement> out;
  out.reserve(t.q + 1);
  for (std::uint32_t u : t.units()) out.emplace_back(t.ext, u);
  return out;
}

}  // namespace niho
