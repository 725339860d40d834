#pragma once

#include <cassert>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "niho/errors.hpp"

namespace niho {

// Validated prime characteristic.
struct PrimeModulus {
  long long value;
  explicit PrimeModulus(long long v);
};

// GF(p^deg) with exp/log/Zech/trace tables over a canonical modulus.
//
// Elements are packed base-p integers: the element sum_i c_i X^i is stored as
// sum_i c_i p^i, so packed values enumerate the field as 0..n-1.  The modulus
// is the first monic irreducible of degree `deg` when coefficient tuples
// (c_0,...,c_{deg-1}) are ordered with the constant coefficient most
// significant; `modulus_rank` selects a later irreducible in the same order,
// which tests use to confirm results do not depend on the representation.
// The generator is the smallest packed primitive element.
class FieldContext {
 public:
  long long p;
  int deg;
  long long n;  // p^deg
  int modulus_rank;
  std::vector<int> modulus;  // c_0..c_deg of the monic modulus
  std::uint32_t gen;

  static constexpr long long kMaxOrder = 200000000;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (deg == 1) {
      std::uint32_t s = a + b;
      return s >= p32_ ? s - p32_ : s;
    }
    std::uint32_t out = 0, mult = 1;
    for (int i = 0; i < deg; ++i) {
      std::uint32_t s = a % p32_ + b % p32_;
      if (s >= p32_) s -= p32_;
      out += s * mult;
      a /= p32_;
      b /= p32_;
      mult *= p32_;
    }
    return out;
  }

  std::uint32_t neg(std::uint32_t a) const {
    if (deg == 1) return a == 0 ? 0 : p32_ - a;
    std::uint32_t out = 0, mult = 1;
    for (int i = 0; i < deg; ++i) {
      std::uint32_t d = a % p32_;
      out += (d == 0 ? 0 : p32_ - d) * mult;
      a /= p32_;
      mult *= p32_;
    }
    return out;
  }

  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    long long k = log_[a] + log_[b];
    if (k >= n - 1) k -= n - 1;
    return exp_[k];
  }

  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, long long e) const;

  // Quadratic character; 0 at 0.  Requires odd p.
  int eta(std::uint32_t a) const {
    if (a == 0) return 0;
    return (log_[a] & 1) ? -1 : 1;
  }

  // Absolute trace, as an integer in [0, p).
  int trace(std::uint32_t a) const {
    if (deg == 1) return static_cast<int>(a);
    return trace_[a];
  }

  long long log_of(std::uint32_t a) const { return log_[a]; }  // -1 at 0

  std::uint32_t exp_at(long long k) const {
    k %= n - 1;
    if (k < 0) k += n - 1;
    return exp_[k];
  }

  std::uint32_t from_int(long long c) const {
    c %= p;
    if (c < 0) c += p;
    return static_cast<std::uint32_t>(c);
  }

  long long half() const { return (n - 1) / 2; }  // log of -1 for odd p

  const std::vector<std::uint32_t>& exp_table() const { return exp_; }
  const std::vector<std::int32_t>& log_table() const { return log_; }
  // zech[k] = log(1 + g^k), -1 where 1 + g^k = 0
  const std::vector<std::int32_t>& zech_table() const { return zech_; }

  FieldContext(const FieldContext&) = delete;
  FieldContext& operator=(const FieldContext&) = delete;

 private:
  FieldContext() = default;
  friend const FieldContext& build_field_context(long long, int, int);

  std::uint32_t p32_ = 0;
  std::vector<std::uint32_t> exp_;
  std::vector<std::int32_t> log_;
  std::vector<std::int32_t> zech_;
  std::vector<std::uint16_t> trace_;
};

// Contexts are cached; repeated calls return the same object, so pointer
// equality decides whether two elements live in the same representation.
const FieldContext& build_field_context(long long p, int deg, int modulus_rank = 0);

class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(const FieldContext& ctx, std::uint32_t packed) : ctx_(&ctx), v_(packed) {
    if (packed >= ctx.n)
      throw Error(ErrorCode::AmbiguousRepresentation, "packed value out of range");
  }

  const FieldContext& ctx() const { return *ctx_; }
  std::uint32_t packed() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  std::vector<int> coords() const {
    std::vector<int> c(ctx_->deg);
    std::uint32_t v = v_;
    for (int i = 0; i < ctx_->deg; ++i) {
      c[i] = static_cast<int>(v % ctx_->p);
      v /= static_cast<std::uint32_t>(ctx_->p);
    }
    return c;
  }

  friend FieldElement operator+(FieldElement a, FieldElement b) {
    same(a, b);
    return FieldElement(*a.ctx_, a.ctx_->add(a.v_, b.v_));
  }
  friend FieldElement operator-(FieldElement a, FieldElement b) {
    same(a, b);
    return FieldElement(*a.ctx_, a.ctx_->sub(a.v_, b.v_));
  }
  friend FieldElement operator*(FieldElement a, FieldElement b) {
    same(a, b);
    return FieldElement(*a.ctx_, a.ctx_->mul(a.v_, b.v_));
  }
  friend FieldElement operator/(FieldElement a, FieldElement b) {
    same(a, b);
    return FieldElement(*a.ctx_, a.ctx_->mul(a.v_, a.ctx_->inv(b.v_)));
  }
  FieldElement operator-() const { return FieldElement(*ctx_, ctx_->neg(v_)); }
  FieldElement pow(long long e) const { return FieldElement(*ctx_, ctx_->pow(v_, e)); }
  FieldElement inverse() const { return FieldElement(*ctx_, ctx_->inv(v_)); }

  bool operator==(const FieldElement& o) const { return ctx_ == o.ctx_ && v_ == o.v_; }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

 private:
  static void same(const FieldElement& a, const FieldElement& b) {
    if (a.ctx_ != b.ctx_)
      throw Error(ErrorCode::AmbiguousRepresentation, "elements from different contexts");
  }
  const FieldContext* ctx_ = nullptr;
  std::uint32_t v_ = 0;
};

int trace_to_prime(const FieldElement& x);

// x -> x^q in a degree-2m context, q = p^m.
FieldElement frobenius_q(const FieldElement& x);

int quadratic_character(const FieldElement& x);

// Jacobi symbol (a / p^m) for odd prime p.
int jacobi_symbol_power(long long a, long long p, int m);

// GF(q) inside GF(q^2), q = p^m, with the embedding table and the order-(q+1)
// unit circle U = { x : x^(q+1) = 1 }.
class FieldTower {
 public:
  const FieldContext& base;
  const FieldContext& ext;
  long long q;
  std::uint32_t theta;  // root of the base modulus inside ext

  std::uint32_t embed(std::uint32_t base_packed) const { return embed_[base_packed]; }
  std::uint32_t project(std::uint32_t ext_packed) const;
  bool in_base(std::uint32_t ext_packed) const {
    return ext_packed == 0 || ext.log_of(ext_packed) % (q + 1) == 0;
  }
  bool in_units(std::uint32_t ext_packed) const {
    return ext_packed != 0 && ext.log_of(ext_packed) % (q - 1) == 0;
  }
  std::uint32_t conj(std::uint32_t ext_packed) const {
    if (ext_packed == 0) return 0;
    return ext.exp_at(ext.log_of(ext_packed) * q);
  }
  // Quadratic character of GF(q), evaluated on an ext element lying in the
  // embedded base field.
  int eta_base(std::uint32_t ext_packed) const {
    if (ext_packed == 0) return 0;
    long long l = ext.log_of(ext_packed);
    if (l % (q + 1) != 0)
      throw Error(ErrorCode::AmbiguousRepresentation, "element not in the base field");
    return ((l / (q + 1)) & 1) ? -1 : 1;
  }
  // u_j = g^((q-1) j), j = 0..q
  const std::vector<std::uint32_t>& units() const { return units_; }

  FieldTower(const FieldTower&) = delete;
  FieldTower& operator=(const FieldTower&) = delete;

 private:
  FieldTower(const FieldContext& b, const FieldContext& e);
  friend const FieldTower& build_field_tower(long long, int, int);

  std::vector<std::uint32_t> embed_;
  std::unordered_map<std::uint32_t, std::uint32_t> project_;
  std::vector<std::uint32_t> units_;
};

const FieldTower& build_field_tower(long long p, int m, int modulus_rank = 0);

std::vector<FieldElement> unit_circle(const FieldTower& t);

}  // namespace niho
