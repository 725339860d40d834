#include "niho/patterns.hpp"

#include <algorithm>
#include <sstream>

#include "niho/char_sums.hpp"
#include "niho/k3.hpp"

namespace niho {
namespace {

cpp_int exact_div(const cpp_int& num, const cpp_int& den) {
  if (num % den != 0)
    throw Error(ErrorCode::IntegralityFailure, "closed form is not an integer");
  return num / den;
}

cpp_int pow_q(long long p, int m) {
  cpp_int q = 1;
  for (int i = 0; i < m; ++i) q *= p;
  return q;
}

void check_pm(long long p, int m) {
  if (!is_prime(p)) throw Error(ErrorCode::NonPrime, "characteristic must be prime");
  if (m < 1) throw Error(ErrorCode::TooLarge, "extension degree must be positive");
}

int chi3_of(long long p, int m) {
  if (p == 3) return 0;
  return m % 2 == 0 ? 1 : jacobi(p, 3);
}

}  // namespace

PatternSpec::PatternSpec(std::vector<std::pair<int, int>> init) : parts(std::move(init)) {
  std::sort(parts.begin(), parts.end());
  std::vector<std::pair<int, int>> merged;
  for (auto& pr : parts) {
    if (pr.first < 1 || pr.second < 1)
      throw Error(ErrorCode::UnknownPattern, "parts must be positive");
    if (!merged.empty() && merged.back().first == pr.first)
      merged.back().second += pr.second;
    else
      merged.push_back(pr);
  }
  if (merged.empty()) throw Error(ErrorCode::UnknownPattern, "empty pattern");
  parts = std::move(merged);
}

PatternSpec::PatternSpec(std::initializer_list<std::pair<int, int>> init)
    : PatternSpec(std::vector<std::pair<int, int>>(init)) {}

PatternSpec PatternSpec::parse(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::pair<int, int>> parts;
  std::string tok;
  while (in >> tok) {
    size_t caret = tok.find('^');
    int sym, mult = 1;
    try {
      if (caret == std::string::npos) {
        sym = std::stoi(tok);
      } else {
        sym = std::stoi(tok.substr(0, caret));
        mult = std::stoi(tok.substr(caret + 1));
      }
    } catch (const std::exception&) {
      throw Error(ErrorCode::UnknownPattern, "cannot parse pattern: " + text);
    }
    parts.emplace_back(sym, mult);
  }
  return PatternSpec(std::move(parts));
}

int PatternSpec::tuple_size() const {
  int k = 0;
  for (auto& pr : parts) k += pr.second;
  return k;
}

int PatternSpec::weight() const {
  int w = 0;
  for (auto& pr : parts) w += pr.first * pr.second;
  return w;
}

long long PatternSpec::automorphisms() const {
  long long f = 1;
  for (auto& pr : parts)
    for (int i = 2; i <= pr.second; ++i) f *= i;
  return f;
}

std::vector<int> PatternSpec::coefficients() const {
  std::vector<int> c;
  for (auto& pr : parts)
    for (int i = 0; i < pr.second; ++i) c.push_back(pr.first);
  return c;
}

std::string PatternSpec::str() const {
  std::ostringstream out;
  bool first = true;
  for (auto& pr : parts) {
    if (!first) out << ' ';
    out << pr.first << '^' << pr.second;
    first = false;
  }
  return out.str();
}

long long count_pattern_tuples(const PatternSpec& spec, const FieldContext& c, Exec ex) {
  if (c.p == 2) return count_pattern_tuples_reference(spec, c);
  std::vector<int> coeff = spec.coefficients();
  int k = static_cast<int>(coeff.size());
  if (k > 5) throw Error(ErrorCode::PatternTooLarge, "pattern has more than five parts");
  std::vector<std::uint32_t> cf(k);
  for (int i = 0; i < k; ++i) {
    cf[i] = c.from_int(coeff[i]);
    if (cf[i] == 0)
      throw Error(ErrorCode::BadCharacteristic,
                  "coefficient vanishes in this characteristic");
  }
  if (k == 1) return 0;

  // prefer a tail with distinct coefficients so the solve stays quadratic
  if (cf[k - 1] == cf[k - 2]) {
    for (int i = 0; i < k - 2; ++i) {
      if (cf[i] != cf[k - 1]) {
        std::swap(cf[i], cf[k - 1]);
        break;
      }
    }
  }

  const long long nn = c.n;
  if (k >= 3) {
    long long work = 1;
    for (int i = 0; i < k - 2; ++i) {
      work *= nn;
      if (work > 500000000) throw Error(ErrorCode::PatternTooLarge, "field too large for pattern");
    }
  }

  const std::uint32_t al = cf[k - 2], be = cf[k - 1];
  const std::uint32_t four = c.from_int(4);
  const std::uint32_t inv_be = c.inv(be);
  const std::uint32_t d2 = c.sub(c.mul(al, al), c.mul(be, be));

  auto solve_tail = [&](std::uint32_t S, std::uint32_t T, const std::uint32_t* heads,
                        int hn) -> long long {
    auto valid = [&](std::uint32_t u, std::uint32_t v) -> bool {
      if (u == 0 || v == 0 || u == v) return false;
      for (int i = 0; i < hn; ++i)
        if (heads[i] == u || heads[i] == v) return false;
      if (c.add(S, c.add(c.mul(al, u), c.mul(be, v))) != 0) return false;
      if (c.add(T, c.add(c.mul(al, c.inv(u)), c.mul(be, c.inv(v)))) != 0) return false;
      return true;
    };
    long long cnt = 0;
    auto try_u = [&](std::uint32_t u) {
      if (u == 0) return;
      std::uint32_t v = c.mul(c.neg(c.add(S, c.mul(al, u))), inv_be);
      if (valid(u, v)) ++cnt;
    };
    if (T != 0) {
      // T al u^2 + (T S + al^2 - be^2) u + al S = 0
      std::uint32_t A = c.mul(T, al);
      std::uint32_t B = c.add(c.mul(T, S), d2);
      std::uint32_t C = c.mul(al, S);
      std::uint32_t disc = c.sub(c.mul(B, B), c.mul(four, c.mul(A, C)));
      std::uint32_t inv2A = c.inv(c.mul(c.from_int(2), A));
      if (disc == 0) {
        try_u(c.mul(c.neg(B), inv2A));
      } else {
        long long l = c.log_of(disc);
        if (l % 2 == 0) {
          std::uint32_t r = c.exp_at(l / 2);
          try_u(c.mul(c.add(c.neg(B), r), inv2A));
          try_u(c.mul(c.sub(c.neg(B), r), inv2A));
        }
      }
    } else if (d2 != 0) {
      try_u(c.mul(c.neg(c.mul(al, S)), c.inv(d2)));
    } else if (al == be && S == 0) {
      // every u pairs with v = -u
      for (std::uint32_t u = 1; u < nn; ++u)
        if (valid(u, c.neg(u))) ++cnt;
    }
    return cnt;
  };

  if (k == 2) return solve_tail(0, 0, nullptr, 0);

  const bool par = ex == Exec::parallel;
  long long total = 0;
#pragma omp parallel for reduction(+ : total) schedule(dynamic, 16) if (par)
  for (long long v1 = 1; v1 < nn; ++v1) {
    std::uint32_t heads[3];
    heads[0] = static_cast<std::uint32_t>(v1);
    std::uint32_t S1 = c.mul(cf[0], heads[0]);
    std::uint32_t T1 = c.mul(cf[0], c.inv(heads[0]));
    if (k == 3) {
      total += solve_tail(S1, T1, heads, 1);
      continue;
    }
    for (std::uint32_t v2 = 1; v2 < nn; ++v2) {
      if (v2 == heads[0]) continue;
      heads[1] = v2;
      std::uint32_t S2 = c.add(S1, c.mul(cf[1], v2));
      std::uint32_t T2 = c.add(T1, c.mul(cf[1], c.inv(v2)));
      if (k == 4) {
        total += solve_tail(S2, T2, heads, 2);
        continue;
      }
      for (std::uint32_t v3 = 1; v3 < nn; ++v3) {
        if (v3 == heads[0] || v3 == heads[1]) continue;
        heads[2] = v3;
        std::uint32_t S3 = c.add(S2, c.mul(cf[2], v3));
        std::uint32_t T3 = c.add(T2, c.mul(cf[2], c.inv(v3)));
        total += solve_tail(S3, T3, heads, 3);
      }
    }
  }
  return total;
}

long long count_pattern_tuples_reference(const PatternSpec& spec, const FieldContext& c) {
  std::vector<int> coeff = spec.coefficients();
  int k = static_cast<int>(coeff.size());
  if (k > 5) throw Error(ErrorCode::PatternTooLarge, "pattern has more than five parts");
  std::vector<std::uint32_t> cf(k);
  for (int i = 0; i < k; ++i) {
    cf[i] = c.from_int(coeff[i]);
    if (cf[i] == 0)
      throw Error(ErrorCode::BadCharacteristic,
                  "coefficient vanishes in this characteristic");
  }
  if (k == 1) return 0;
  long long work = 1;
  for (int i = 0; i < k - 1; ++i) {
    work *= c.n;
    if (work > 200000000)
      throw Error(ErrorCode::PatternTooLarge, "field too large for the reference loop");
  }

  const std::uint32_t inv_last = c.inv(cf[k - 1]);
  long long total = 0;
  std::vector<std::uint32_t> x(k);
  // enumerate x_1..x_{k-1}, solve the linear sum for x_k, then test the
  // inverse-sum condition literally
  auto rec = [&](auto&& self, int level, std::uint32_t S, std::uint32_t T) -> void {
    if (level == k - 1) {
      std::uint32_t xk = c.mul(c.neg(S), inv_last);
      if (xk == 0) return;
      for (int i = 0; i < k - 1; ++i)
        if (x[i] == xk) return;
      if (c.add(T, c.mul(cf[k - 1], c.inv(xk))) == 0) ++total;
      return;
    }
    for (std::uint32_t v = 1; v < c.n; ++v) {
      bool dup = false;
      for (int i = 0; i < level; ++i)
        if (x[i] == v) dup = true;
      if (dup) continue;
      x[level] = v;
      self(self, level + 1, c.add(S, c.mul(cf[level], v)),
           c.add(T, c.mul(cf[level], c.inv(v))));
    }
  };
  rec(rec, 0, 0, 0);
  return total;
}

cpp_int pattern_count_closed(const PatternSpec& s, long long p, int m) {
  check_pm(p, m);
  cpp_int q = pow_q(p, m);
  int sgn = m % 2 == 0 ? 1 : -1;
  auto is = [&](std::initializer_list<std::pair<int, int>> l) { return s == PatternSpec(l); };

  if (is({{2, 1}}) || is({{5, 1}}) || is({{1, 1}, {4, 1}}) || is({{2, 1}, {3, 1}})) return 0;
  if (is({{1, 2}})) return p == 2 ? cpp_int(0) : exact_div(q - 1, 2);
  if (is({{1, 2}, {3, 1}})) {
    if (p <= 5) return 0;
    return exact_div((q - 1) * (1 + jacobi_symbol_power(5, p, m)), 2);
  }
  if (is({{1, 1}, {2, 2}})) {
    if (p <= 5) return 0;
    return exact_div((q - 1) * (1 + jacobi_symbol_power(-15, p, m)), 2);
  }
  if (is({{1, 3}, {2, 1}})) {
    if (p <= 3) return 0;
    if (p == 5) return exact_div((q - 1) * (q - 6 - sgn), 6);
    long long chi5 = jacobi_symbol_power(5, p, m);
    long long chi15 = jacobi_symbol_power(-15, p, m);
    cpp_int lam = lambda_closed(p, m);
    return exact_div((q - 1) * (q - 10 - 3 * chi5 - 3 * chi15 + lam), 6);
  }
  if (is({{1, 5}})) {
    if (p == 2)
      throw Error(ErrorCode::BadCharacteristic, "no closed branch in characteristic 2");
    if (p == 3) return exact_div((q - 1) * (q * q + q * (-14 + sgn) + 36), 120);
    if (p == 5)
      return exact_div((q - 1) * (q * q + q * (-13 + 4 * sgn) + 10 * (7 + sgn)), 120);
    long long chi5 = jacobi_symbol_power(5, p, m);
    long long chi15 = jacobi_symbol_power(-15, p, m);
    cpp_int lam = lambda_closed(p, m);
    cpp_int aq = a_q(p, m);
    return exact_div((q - 1) * (q * q + q * (-14 + 4 * chi3_of(p, m)) + 86 + 20 * chi5 +
                                15 * chi15 - 10 * lam + aq),
                     120);
  }
  throw Error(ErrorCode::UnknownPattern, "no closed form for pattern " + s.str());
}

cpp_int gamma_d(int d, long long p, int m) {
  check_pm(p, m);
  if (p == 2) throw Error(ErrorCode::EvenCharacteristic, "needs odd characteristic p >= 3");
  if (d != 2 && d != 5) throw Error(ErrorCode::UnsupportedD, "only d = 2 and d = 5");
  cpp_int q = pow_q(p, m);
  int sgn = m % 2 == 0 ? 1 : -1;

  if (d == 2) {
    cpp_int closed = exact_div(q - 1, 2);
    cpp_int assembled =
        pattern_count_closed(PatternSpec{{1, 2}}, p, m) +
        pattern_count_closed(PatternSpec{{2, 1}}, p, m);
    if (assembled != closed)
      throw Error(ErrorCode::MismatchError, "pattern assembly disagrees with closed form");
    return closed;
  }

  cpp_int closed;
  if (p == 3) {
    closed = exact_div((q - 1) * (q * q + q * (-14 + sgn) + 36), 120);
  } else if (p == 5) {
    closed = exact_div((q - 1) * (q * q + q * (7 + 4 * sgn) - 50 - 10 * sgn), 120);
  } else {
    long long chi5 = jacobi_symbol_power(5, p, m);
    long long chi15 = jacobi_symbol_power(-15, p, m);
    cpp_int lam = lambda_closed(p, m);
    cpp_int aq = a_q(p, m);
    closed = exact_div((q - 1) * (q * q + q * (6 + 4 * chi3_of(p, m)) + 6 + 20 * chi5 +
                                  15 * chi15 + 10 * lam + aq),
                       120);
  }
  cpp_int assembled = pattern_count_closed(PatternSpec{{5, 1}}, p, m) +
                      pattern_count_closed(PatternSpec{{1, 1}, {4, 1}}, p, m) +
                      pattern_count_closed(PatternSpec{{2, 1}, {3, 1}}, p, m) +
                      pattern_count_closed(PatternSpec{{1, 2}, {3, 1}}, p, m) +
                      pattern_count_closed(PatternSpec{{1, 3}, {2, 1}}, p, m) +
                      pattern_count_closed(PatternSpec{{1, 1}, {2, 2}}, p, m) +
                      pattern_count_closed(PatternSpec{{1, 5}}, p, m);
  if (assembled != closed)
    throw Error(ErrorCode::MismatchError, "pattern assembly disagrees with closed form");
  return closed;
}

cpp_int b5_pure_weight(long long p, int m) {
  check_pm(p, m);
  if (p == 2) throw Error(ErrorCode::EvenCharacteristic, "needs odd characteristic p >= 3");
  cpp_int q = pow_q(p, m);
  cpp_int g5 = gamma_d(5, p, m);
  cpp_int num = (q + 1) * (q * q + 11) * (q - 1) - 60 * (q + 1) * g5;
  if (p == 5) num -= 36 * (q + 1) * (q - 1);
  if (p == 3) num -= 10 * (q * q - 1) * (q - 1);
  return exact_div(num, 60 * (q - 1));
}

long long b5_brute_force(const FieldTower& t, Exec ex) {
  if (t.q > 350) throw Error(ErrorCode::TooLarge, "subset count capped at q <= 350");
  const FieldContext& E = t.ext;
  if (E.p == 2) throw Error(ErrorCode::EvenCharacteristic, "needs odd characteristic");
  const auto& u = t.units();
  const long long q = t.q;
  const std::uint32_t four = E.from_int(4);

  // number of pairs {x,y} in U with x + y = w
  auto pair_count = [&](std::uint32_t w) -> long long {
    if (w == 0) return (q + 1) / 2;
    std::uint32_t nv = E.exp_at(E.log_of(w) * (q + 1));  // norm of w
    std::uint32_t val = E.mul(E.sub(nv, four), E.inv(nv));
    if (val == 0) return 0;  // double root
    return t.eta_base(val) == -1 ? 1 : 0;
  };

  const bool par = ex == Exec::parallel;
  long long total = 0;
#pragma omp parallel for reduction(+ : total) schedule(dynamic) if (par)
  for (long long i = 0; i <= q; ++i) {
    for (long long j = i + 1; j <= q; ++j) {
      std::uint32_t sij = E.add(u[i], u[j]);
      for (long long l = j + 1; l <= q; ++l) {
        std::uint32_t w = E.neg(E.add(sij, u[l]));
        long long pc = pair_count(w);
        std::uint32_t tri[3] = {u[i], u[j], u[l]};
        for (int a = 0; a < 3; ++a) {
          std::uint32_t part = E.sub(w, tri[a]);
          if (part != tri[a] && t.in_units(part)) --pc;
        }
        for (int a = 0; a < 3; ++a)
          for (int b = a + 1; b < 3; ++b)
            if (E.add(tri[a], tri[b]) == w) ++pc;
        total += pc;
      }
    }
  }
  if (total % 10 != 0)
    throw Error(ErrorCode::IntegralityFailure, "triple completion total not divisible by 10");
  return total / 10;
}

long long b5_brute_force_reference(const FieldTower& t) {
  if (t.q > 60) throw Error(ErrorCode::TooLarge, "literal subsets capped at q <= 60");
  const FieldContext& E = t.ext;
  const auto& u = t.units();
  const long long q = t.q;
  long long total = 0;
  for (long long a = 0; a <= q; ++a)
    for (long long b = a + 1; b <= q; ++b) {
      std::uint32_t s2 = E.add(u[a], u[b]);
      for (long long c = b + 1; c <= q; ++c) {
        std::uint32_t s3 = E.add(s2, u[c]);
        for (long long d = c + 1; d <= q; ++d) {
          std::uint32_t s4 = E.add(s3, u[d]);
          for (long long e = d + 1; e <= q; ++e)
            if (E.add(s4, u[e]) == 0) ++total;
        }
      }
    }
  return total;
}

}  // namespace niho
