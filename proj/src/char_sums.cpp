#include "niho/char_sums.hpp"

#include "niho/integers.hpp"
#include "niho/lucas.hpp"

namespace niho {

long long char_sum_quadratic(const FieldElement& a2, const FieldElement& a1,
                             const FieldElement& a0) {
  if (&a2.ctx() != &a1.ctx() || &a2.ctx() != &a0.ctx())
    throw Error(ErrorCode::AmbiguousRepresentation, "coefficients from different contexts");
  const FieldContext& c = a2.ctx();
  if (c.p == 2)
    throw Error(ErrorCode::EvenCharacteristic, "quadratic character sums need odd characteristic");
  if (a2.is_zero())
    throw Error(ErrorCode::DegenerateLeadingCoefficient, "leading coefficient is zero");
  std::uint32_t disc = c.sub(c.mul(a1.packed(), a1.packed()),
                             c.mul(c.from_int(4), c.mul(a2.packed(), a0.packed())));
  int e = c.eta(a2.packed());
  if (disc == 0) return (c.n - 1) * e;
  return -e;
}

EllipticTrace count_curve_points(long long p) {
  if (!is_prime(p)) throw Error(ErrorCode::NonPrime, "characteristic must be prime");
  if (p < 7) throw Error(ErrorCode::SmallCharacteristic, "curve needs p >= 7");
  const FieldContext& c = build_field_context(p, 1);
  long long total = 0;
  for (long long x = 0; x < p; ++x) {
    std::uint32_t f = c.mul(c.from_int(x), c.mul(c.from_int(x - 5), c.from_int(x + 27)));
    total += 1 + c.eta(f);
  }
  return EllipticTrace{total, total - p};
}

long long lambda_direct(const FieldContext& gfq) {
  if (gfq.p < 5) throw Error(ErrorCode::SmallCharacteristic, "lambda needs p >= 5");
  long long total = 0;
  std::uint32_t four = gfq.from_int(4);
  std::uint32_t two = gfq.from_int(2);
  std::uint32_t one = gfq.from_int(1);
  std::uint32_t five = gfq.from_int(5);
  for (long long v = 0; v < gfq.n; ++v) {
    std::uint32_t x = static_cast<std::uint32_t>(v);
    std::uint32_t t1 = gfq.sub(gfq.mul(x, x), four);
    std::uint32_t tx = gfq.mul(two, x);
    std::uint32_t t2 = gfq.add(tx, one);
    std::uint32_t t3 = gfq.add(tx, five);
    total += gfq.eta(gfq.mul(t1, gfq.mul(t2, t3)));
  }
  return total;
}

cpp_int lambda_closed(long long p, int m) {
  if (!is_prime(p)) throw Error(ErrorCode::NonPrime, "characteristic must be prime");
  if (p < 5) throw Error(ErrorCode::SmallCharacteristic, "lambda needs p >= 5");
  if (m < 1) throw Error(ErrorCode::TooLarge, "extension degree must be positive");
  if (p == 5) return -1 - (m % 2 == 0 ? 1 : -1);
  long long a = count_curve_points(p).trace;
  QuadraticIntSequence seq{2, -a, -a, -p};
  return -1 - lucas_sequence_term(seq, m);
}

}  // namespace niho
