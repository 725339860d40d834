// Runs every acceptance check with a wall-clock budget and prints one
// PASS/FAIL line per criterion.  Exits nonzero if any line fails.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <map>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "niho/char_sums.hpp"
#include "niho/codes.hpp"
#include "niho/distribution.hpp"
#include "niho/k3.hpp"
#include "niho/verify.hpp"

using namespace niho;

namespace {

int failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

void report(int idx, const std::string& label, bool pass, double secs, double budget) {
  bool ok = pass && secs <= budget;
  if (!ok) ++failures;
  std::printf("%s  %2d  %-52s  %6.2fs (budget %gs)\n", ok ? "PASS" : "FAIL", idx,
              label.c_str(), secs, budget);
  std::fflush(stdout);
}

struct CmdResult {
  int status;
  std::string out;
};

CmdResult run_cli(const std::string& args) {
  std::string cmd = std::string(NIHO_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* f = popen(cmd.c_str(), "r");
  if (!f) return {-1, ""};
  char buf[4096];
  size_t n;
  std::string out;
  while ((n = fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, n);
  int rc = pclose(f);
  return CmdResult{WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, out};
}

bool cli_table_is(const std::string& args, const std::string& csv) {
  CmdResult r = run_cli(args + " --format csv");
  return r.status == 0 && r.out == csv;
}

std::vector<std::complex<double>> circle_points(int count) {
  const double pi = std::acos(-1.0);
  std::vector<std::complex<double>> pts;
  for (int k = 0; k < count; ++k)
    pts.push_back(0.5 * std::exp(std::complex<double>(0.0, 2.0 * pi * k / count)));
  return pts;
}

}  // namespace

int main() {
  {
    Timer t;
    bool ok = cli_table_is("dist 5 2",
                           "value,count\n-26,216\n-1,238\n24,109\n49,54\n74,4\n99,3\n");
    report(1, "closed table p=5 m=2", ok, t.seconds(), 1.0);
  }

  {
    Timer t;
    bool ok = cli_table_is(
        "dist 7 3",
        "value,count\n-344,42970\n-1,44134\n342,19735\n685,9803\n1028,52\n1371,954\n");
    report(2, "closed table p=7 m=3", ok, t.seconds(), 1.0);
    Timer tv;
    CmdResult r = run_cli("dist 7 3 --verify");
    bool okv = r.status == 0 && r.out.find("FAIL") == std::string::npos;
    report(2, "enumerated oracle p=7 m=3", okv, tv.seconds(), 60.0);
  }

  {
    Timer t;
    CmdResult r = run_cli("dist 11 1 --verify");
    bool ok = r.status == 0 &&
              cli_table_is("dist 11 1",
                           "value,count\n-12,38\n-1,46\n10,26\n21,8\n32,1\n43,1\n");
    report(3, "verified table p=11 m=1", ok, t.seconds(), 1.0);
  }

  {
    Timer t;
    bool ok = lambda_closed(7, 3) == -21 && lambda_closed(11, 1) == -1 &&
              lambda_closed(13, 1) == -3 && lambda_closed(5, 1) == 0 &&
              lambda_closed(5, 2) == -2;
    for (long long p = 5; p <= 31 && ok; ++p) {
      if (!is_prime(p)) continue;
      long long q = p;
      for (int m = 1; q <= 20000; ++m, q *= p) {
        if (lambda_closed(p, m) != lambda_direct(build_field_context(p, m))) ok = false;
        if (q > 20000 / p) break;
      }
    }
    report(4, "lambda recurrence vs direct sums", ok, t.seconds(), 60.0);
  }

  {
    Timer t;
    bool ok = a_p_coefficient(17) == -14 && a_p_coefficient(19) == -22 &&
              a_p_coefficient(23) == 34;
    for (long long p = 7; p <= 100 && ok; ++p) {
      if (!is_prime(p)) continue;
      if (a_p_coefficient(p) != a_p_modular_form(p)) ok = false;
    }
    report(5, "form route vs series route", ok, t.seconds(), 10.0);
  }

  {
    Timer t;
    bool ok = true;
    for (auto [p, m] : {std::pair<long long, int>{7, 1}, {11, 1}, {13, 1}, {7, 2},
                        {3, 2}, {5, 2}}) {
      SurfaceCount sc = count_surface_points(build_field_context(p, m));
      long long q = sc.q;
      if (cpp_int(sc.smooth_model) != surface_smooth_closed(p, m)) ok = false;
      if (sc.on_lines != 10 * q - 10) ok = false;
    }
    report(6, "surface counts q in {7,11,13,49} and {9,25}", ok, t.seconds(), 120.0);
  }

  {
    Timer t;
    bool ok = true;
    for (auto [p, m] : {std::pair<long long, int>{5, 1}, {5, 2}, {5, 3}, {7, 1},
                        {7, 3}, {11, 1}, {11, 2}, {13, 1}}) {
      const FieldTower& tower = build_field_tower(p, m);
      if (!moment_identities_check(root_count_histogram(tower), p, m)) ok = false;
    }
    report(7, "power moments on admissible pairs", ok, t.seconds(), 120.0);
  }

  {
    Timer t;
    bool ok = true;
    std::vector<ReportRecord> records = run_verification(350, false);
    long long bad = 0;
    for (const auto& r : records)
      if (!r.pass) {
        ++bad;
        std::printf("      failed: %s (%s)\n", r.name.c_str(), r.detail.c_str());
      }
    ok = bad == 0 && !records.empty();
    report(8, "full cross-validation sweep to q=350", ok, t.seconds(), 600.0);
  }

  {
    Timer t;
    bool ok = true;
    for (long long q : {25LL, 49LL, 121LL}) {
      long long p = q == 25 ? 5 : q == 49 ? 7 : 11;
      const FieldTower& tower = build_field_tower(p, 2);
      std::vector<std::complex<double>> pts;
      if (q == 49) {
        pts = {{1.0 / 3, 0}, {-1.0 / 3, 0}, {0, 1.0 / 3}, {0, -1.0 / 3}, {1.0 / 7, 0}};
        for (auto z : circle_points(5)) pts.push_back(z);
      } else {
        pts = circle_points(10);
      }
      double err = 1.0;
      if (!macwilliams_identity_check(tower, pts, 1e-6, &err)) ok = false;
    }
    report(9, "dual enumerator identity at 10 samples", ok, t.seconds(), 300.0);
  }

  {
    Timer t;
    bool ok = true;
    for (long long q : {25LL, 49LL, 121LL}) {
      long long p = q == 25 ? 5 : q == 49 ? 7 : 11;
      const FieldTower& tower = build_field_tower(p, 2);
      const FieldContext& E = tower.ext;
      const FieldContext& B = tower.base;
      std::uint64_t state = 0x243f6a8885a308d3ull;
      for (int i = 0; i < 100; ++i) {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        std::uint32_t a = 1 + static_cast<std::uint32_t>((state >> 17) % (E.n - 1));
        CompleteWeight zc = zetterberg_dual_word(tower, FieldElement(E, a));
        std::uint32_t norm = E.exp_at(E.log_of(a) * (q + 1));
        CompleteWeight mc =
            melas_dual_word(B, FieldElement(B, tower.project(norm)), FieldElement(B, 1));
        for (long long s = 0; s < p; ++s)
          if (zc[s] + mc[s] != 2 * q / p) ok = false;
      }
    }
    report(10, "complete weight duality, 100 random words", ok, t.seconds(), 120.0);
  }

  std::printf("%s\n", failures == 0 ? "all criteria satisfied" : "criteria failed");
  return failures == 0 ? 0 : 1;
}
