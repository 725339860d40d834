// Compares the OpenMP kernels against their serial runs and, where one
// exists, the literal reference implementation.

#include <chrono>
#include <cstdio>
#include <string>

#include "niho/distribution.hpp"
#include "niho/k3.hpp"
#include "niho/patterns.hpp"

using namespace niho;

namespace {

template <typename F>
double time_ms(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void row(const std::string& label, double serial_ms, double parallel_ms,
         double reference_ms) {
  if (reference_ms >= 0)
    std::printf("%-28s %10.2f %10.2f %10.2f %8.2fx\n", label.c_str(), serial_ms,
                parallel_ms, reference_ms, serial_ms / parallel_ms);
  else
    std::printf("%-28s %10.2f %10.2f %10s %8.2fx\n", label.c_str(), serial_ms,
                parallel_ms, "-", serial_ms / parallel_ms);
}

}  // namespace

int main() {
  std::printf("%-28s %10s %10s %10s %9s\n", "kernel", "serial", "parallel",
              "reference", "speedup");

  {
    const FieldTower& t = build_field_tower(7, 3);
    RootCountHistogram hs{}, hp{}, hr{};
    double s = time_ms([&] { hs = root_count_histogram(t, Exec::serial); });
    double p = time_ms([&] { hp = root_count_histogram(t, Exec::parallel); });
    double r = time_ms([&] { hr = root_count_histogram_reference(t); });
    if (hs.n != hp.n || hs.n != hr.n) std::printf("histogram mismatch!\n");
    row("histogram q=343", s, p, r);
  }

  {
    const FieldTower& t = build_field_tower(11, 2);
    long long bs = 0, bp = 0;
    double s = time_ms([&] { bs = b5_brute_force(t, Exec::serial); });
    double p = time_ms([&] { bp = b5_brute_force(t, Exec::parallel); });
    if (bs != bp) std::printf("b5 mismatch!\n");
    row("b5 triples q=121", s, p, -1);
  }

  {
    const FieldTower& t = build_field_tower(7, 2);
    long long bs = 0, br = 0;
    double s = time_ms([&] { bs = b5_brute_force(t, Exec::serial); });
    double r = time_ms([&] { br = b5_brute_force_reference(t); });
    if (bs != br) std::printf("b5 reference mismatch!\n");
    row("b5 vs 5-subsets q=49", s, s, r);
  }

  {
    const FieldContext& f = build_field_context(5, 3);
    PatternSpec spec{{1, 5}};
    long long cs = 0, cp = 0;
    double s = time_ms([&] { cs = count_pattern_tuples(spec, f, Exec::serial); });
    double p = time_ms([&] { cp = count_pattern_tuples(spec, f, Exec::parallel); });
    if (cs != cp) std::printf("pattern mismatch!\n");
    row("pattern 1^5 q=125", s, p, -1);
  }

  {
    const FieldContext& f = build_field_context(7, 2);
    PatternSpec spec{{1, 5}};
    long long cs = 0, cr = 0;
    double s = time_ms([&] { cs = count_pattern_tuples(spec, f, Exec::serial); });
    double r = time_ms([&] { cr = count_pattern_tuples_reference(spec, f); });
    if (cs != cr) std::printf("pattern reference mismatch!\n");
    row("pattern 1^5 q=49 vs ref", s, s, r);
  }

  {
    const FieldContext& f = build_field_context(7, 2);
    SurfaceCount ss{}, sp{};
    double s = time_ms([&] { ss = count_surface_points(f, Exec::serial); });
    double p = time_ms([&] { sp = count_surface_points(f, Exec::parallel); });
    if (ss.smooth_model != sp.smooth_model) std::printf("surface mismatch!\n");
    row("surface q=49", s, p, -1);
  }

  return 0;
}
