// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Grid sizes and tolerances are pinned here and in the verification
// chunks (the root-of-unity comparison uses 1e-9).
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "genusgauge/dedekind.hpp"
#include "genusgauge/floer.hpp"
#include "genusgauge/intfun.hpp"
#include "genusgauge/obstruct.hpp"
#include "genusgauge/rat.hpp"
#include "genusgauge/verify.hpp"

#ifndef GENUSGAUGE_BIN_PATH
#error "GENUSGAUGE_BIN_PATH must point at the CLI binary"
#endif
#ifndef GENUSGAUGE_FIXTURES_PATH
#error "GENUSGAUGE_FIXTURES_PATH must point at the shipped fixture file"
#endif

using gg::Rat;
using gg::verify::Report;

namespace {

int failures = 0;

void criterion(int n, const std::string& what,
               const std::function<bool(std::string*)>& body) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
        ok = body(&detail);
    } catch (const std::exception& e) {
        detail = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::string line = what;
    if (!ok && !detail.empty()) line += " -- " + detail;
    std::printf("%s criterion %d: %s [%.2fs]\n", ok ? "PASS" : "FAIL", n, line.c_str(), secs);
    std::fflush(stdout);
    if (!ok) ++failures;
}

bool green(const Report& r, std::string* detail) {
    if (r.ok()) return true;
    *detail = std::to_string(r.failed) + " of " + std::to_string(r.checked) +
              " failed; first: " + r.first_failure;
    return false;
}

} // namespace

int main() {
    criterion(1, "2G(2k,q) = N(2k,q) for all coprime q with 2k <= 2000, "
                 "brute-force re-verified for 2k <= 200, under 60s",
              [](std::string* detail) {
                  auto t0 = std::chrono::steady_clock::now();
                  Report r = gg::verify::run_two_g(2000, 200, 0);
                  double secs = std::chrono::duration<double>(
                                    std::chrono::steady_clock::now() - t0)
                                    .count();
                  if (secs >= 60.0) {
                      *detail = "exceeded the 60s budget";
                      return false;
                  }
                  return green(r, detail);
              });

    criterion(2, "defining sum, sign form, and root-of-unity form agree for "
                 "k <= 200 (sign form exact on i in [-4k, 4k); roots within "
                 "1e-9 on the 16-point sample)",
              [](std::string* detail) {
                  Report r = gg::verify::run_three_way_exact(200, 0);
                  Report s = gg::verify::run_three_way_roots(200, 0);
                  r.merge(s);
                  return green(r, detail);
              });

    criterion(3, "recursion and reciprocity identity grids to 60 with zero "
                 "failures",
              [](std::string* detail) {
                  Report r = gg::verify::run_identities(60, 0);
                  Report s = gg::verify::run_carlitz(60, 0);
                  r.merge(s);
                  return green(r, detail);
              });

    criterion(4, "closed-form point values: G(2,1) = 1/2, N(2,1) = 1, lens "
                 "twist differences for k <= 50, bundle terms at e = 0, "
                 "connected sums to n = 50, rho of the bundle on an even grid",
              [](std::string* detail) {
                  if (gg::big_g(1, 1) != Rat(1, 2)) {
                      *detail = "G(2,1)";
                      return false;
                  }
                  if (gg::big_n(1, 1) != 1) {
                      *detail = "N(2,1)";
                      return false;
                  }
                  for (std::int64_t k = 1; k <= 50; ++k) {
                      Rat best;
                      bool first = true;
                      for (std::int64_t s = 0; s <= k - 1; ++s) {
                          Rat diff = gg::d_lens_2k1_twist_diff(k, s);
                          if (diff != gg::d_lens_2k1(k, s + k) - gg::d_lens_2k1(k, s)) {
                              *detail = "twist difference at k=" + std::to_string(k) +
                                        " s=" + std::to_string(s);
                              return false;
                          }
                          if (first || best < diff) best = diff;
                          first = false;
                      }
                      if (best != gg::delta_lens(k, 1)) {
                          *detail = "twist maximum at k=" + std::to_string(k);
                          return false;
                      }
                  }
                  for (std::int64_t h = 1; h <= 50; ++h)
                      if (gg::q_bundle_d(h, 0, gg::SpincQLabel::T1, gg::Which::Bot) !=
                          Rat(1, 2)) {
                          *detail = "bundle term at h=" + std::to_string(h);
                          return false;
                      }
                  for (std::int64_t n = 0; n <= 50; ++n)
                      if (gg::s1s2_d(n, gg::Which::Top) != Rat(n, 2) ||
                          gg::s1s2_d(n, gg::Which::Bot) != Rat(-n, 2)) {
                          *detail = "connected sum at n=" + std::to_string(n);
                          return false;
                      }
                  for (std::int64_t h = 1; h <= 20; ++h)
                      for (std::int64_t e = -40; e <= 40; e += 2)
                          if (gg::rho_q_bundle(h, e) != Rat(-e, 2)) {
                              *detail = "rho at h=" + std::to_string(h) +
                                        " e=" + std::to_string(e);
                              return false;
                          }
                  return true;
              });

    criterion(5, "circle-bundle correction terms are coherent (gap, duality, "
                 "linearity) for h <= 20, |e| <= 40",
              [](std::string* detail) {
                  return green(gg::verify::run_tdbundle(20, 40, 0), detail);
              });

    criterion(6, "feasibility verdicts at pinned points: L(4,1) rules out "
                 "the Klein bottle bound cases, the sphere admits exactly "
                 "e = +-2 at h = 1, the rho bound separates h = 1 from "
                 "h = 2, Euler congruences",
              [](std::string* detail) {
                  gg::Verdict v = gg::lens_feasible(2, 1, 1, 0);
                  if (v.feasible) {
                      *detail = "L(4,1) h=1 e=0 must be infeasible";
                      return false;
                  }
                  v = gg::lens_feasible(2, 1, 2, 0);
                  if (!v.feasible || v.certificate.size() != 3 ||
                      v.certificate[0].second != "2" || v.certificate[1].second != "0" ||
                      v.certificate[2].second != "0") {
                      *detail = "L(4,1) h=2 e=0 certificate";
                      return false;
                  }
                  std::vector<std::int64_t> es;
                  for (std::int64_t e = -10; e <= 10; ++e)
                      if (gg::sphere_feasible(1, e).feasible) es.push_back(e);
                  if (es != std::vector<std::int64_t>{-2, 2}) {
                      *detail = "sphere region at h=1";
                      return false;
                  }
                  if (gg::rho_bound(Rat(4), 1, 0).feasible ||
                      !gg::rho_bound(Rat(4), 2, 0).feasible) {
                      *detail = "rho bound at |rho|=4";
                      return false;
                  }
                  if (gg::euler_congruence(1, 2) != 2 || gg::euler_congruence(1, 3) != 0) {
                      *detail = "Euler congruence";
                      return false;
                  }
                  return true;
              });

    criterion(7, "the jump bound reproduces the exact lens verdicts "
                 "(2k <= 200, h <= 12, |e| <= 40), N has the parity of k "
                 "for 2k <= 500, and the spin search implies its corollary",
              [](std::string* detail) {
                  Report r = gg::verify::run_mbound_lens(200, 12, 40, 0);
                  Report s = gg::verify::run_congruence(500, 0);
                  Report t = gg::verify::spin_implication_all();
                  r.merge(s);
                  r.merge(t);
                  return green(r, detail);
              });

    criterion(8, "the recorded fixture corpus replays verbatim through the "
                 "CLI, and the hand-checked jump and shift examples hold",
              [](std::string* detail) {
                  std::string cmd = std::string("\"") + GENUSGAUGE_BIN_PATH +
                                    "\" fixtures --file \"" + GENUSGAUGE_FIXTURES_PATH +
                                    "\" > /dev/null 2>&1";
                  int status = std::system(cmd.c_str());
                  int rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
                  if (rc != 0) {
                      *detail = "fixture replay exited " + std::to_string(rc);
                      return false;
                  }
                  if (!gg::mbound_check(Rat(1, 2), 1, 0, gg::PhiRestriction::Unknown)
                           .feasible) {
                      *detail = "jump 1/2 at h=1 e=0 must be feasible";
                      return false;
                  }
                  gg::DTable t{{2}, {Rat(-1, 4), Rat(-7, 4)}};
                  if (gg::rp2_test(t, 1)) {
                      *detail = "shift example must fail the RP^2 test";
                      return false;
                  }
                  return true;
              });

    if (failures == 0) {
        std::printf("acceptance: all 8 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d of 8 criteria FAILED\n", failures);
    return 1;
}
