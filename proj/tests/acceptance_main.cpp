// Acceptance suite: runs every release criterion end to end and prints one
// pass/fail line per criterion. Exit code is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "naive_ref.hpp"
#include "sidonkit/constructions.hpp"
#include "sidonkit/kset.hpp"
#include "sidonkit/oracle.hpp"
#include "sidonkit/randomsim.hpp"
#include "sidonkit/verifier.hpp"

using namespace sidonkit;

namespace {

struct Check {
  std::vector<std::string> failures;

  void require(bool condition, const std::string& message) {
    if (!condition) {
      failures.push_back(message);
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

int worker_threads() { return std::max(2, default_threads()); }

// --- criterion 1: exact tightness for k = 2 -------------------------------

void criterion_1(Check& check) {
  for (Elem n = 3; n <= 7; ++n) {
    const auto start = std::chrono::steady_clock::now();
    const ExactResult r = exact_fk(n, 2);
    const double elapsed = seconds_since(start);
    check.require(r.value == static_cast<std::uint64_t>(2 * n - 3),
                  "exact_fk(" + std::to_string(n) + ",2) != 2n-3");
    check.require(elapsed <= 60.0,
                  "exact_fk(" + std::to_string(n) + ",2) over 60 s");
  }
  const Family big = construct_k2(10000);
  check.require(big.size() == 2 * 10000 - 3, "construct_k2(10^4) size");
  const auto start = std::chrono::steady_clock::now();
  const bool sidon = is_sidon(big);
  const double elapsed = seconds_since(start);
  check.require(sidon, "construct_k2(10^4) not Sidon");
  check.require(elapsed <= 60.0, "verify at n=10^4 over 60 s");
}

// --- criterion 2: upper bound never violated -------------------------------

void criterion_2(Check& check) {
  for (Elem n = 3; n <= 7; ++n) {
    const ExactResult r = exact_fk(n, 2);
    check.require(r.value <= upper_bound_fk(n, 2), "exact_fk(n,2) witness");
    check.require(r.witness.has_value() && is_sidon(*r.witness),
                  "exact_fk(n,2) witness not Sidon");
  }
  const ExactResult r63 = exact_fk(6, 3);
  check.require(r63.value <= upper_bound_fk(6, 3), "exact_fk(6,3) bound");
  check.require(r63.witness.has_value() && is_sidon(*r63.witness),
                "exact_fk(6,3) witness not Sidon");

  for (Elem n : {3, 10, 50, 200, 1000}) {
    const Family f = construct_k2(n);
    check.require(is_sidon(f) && f.size() <= upper_bound_fk(n, 2),
                  "construct_k2(" + std::to_string(n) + ") bound");
  }
  for (Elem n : {5, 12, 25, 40}) {
    const Family f = construct_k3(n);
    check.require(is_sidon(f) && f.size() <= upper_bound_fk(n, 3),
                  "construct_k3(" + std::to_string(n) + ") bound");
  }
  for (int k : {3, 4, 5}) {
    const Elem d = erdos_turan_sidon(k).elements.back() + 1;
    const Family f = construct_k4(4 * d, k);
    check.require(is_sidon(f) && f.size() <= upper_bound_fk(4 * d, k),
                  "construct_k4(k=" + std::to_string(k) + ") bound");
  }
}

// --- criterion 3: the k = 3 construction ------------------------------------

void criterion_3(Check& check) {
  const auto start = std::chrono::steady_clock::now();
  for (Elem n = 5; n <= 40; ++n) {
    const Family f = construct_k3(n);
    check.require(is_sidon(f),
                  "construct_k3(" + std::to_string(n) + ") not Sidon");
    const std::uint64_t baseline =
        binomial_checked(static_cast<std::uint64_t>(n - 1), 2);
    const std::uint64_t slack = static_cast<std::uint64_t>((5 * n + 5) / 6);
    check.require(f.size() + slack >= baseline,
                  "construct_k3(" + std::to_string(n) + ") too small");
  }
  check.require(seconds_since(start) <= 300.0, "criterion 3 over 5 min");
}

// --- criterion 4: 3-set equality classification is complete and linear ------

void criterion_4(Check& check) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<double> xs, ys;
  for (Elem n = 5; n <= 40; ++n) {
    const auto records = enumerate_3set_equalities(n);
    const Classification c = classify_3set_equalities(records);
    check.require(c.unclassified.empty(),
                  "unclassified records at n=" + std::to_string(n));
    if (n >= 20) {
      xs.push_back(static_cast<double>(n));
      ys.push_back(static_cast<double>(records.size()));
    }
  }
  // Least-squares line over n in [20, 40]; relative residuals <= 20%.
  const double count = static_cast<double>(xs.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
  const double intercept = (sy - slope * sx) / count;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double fitted = slope * xs[i] + intercept;
    const double residual = std::abs(fitted - ys[i]) / ys[i];
    check.require(residual <= 0.20,
                  "relative residual " + std::to_string(residual) + " at n=" +
                      std::to_string(static_cast<Elem>(xs[i])));
  }
  check.require(slope > 0.0, "record counts should grow with n");
  check.require(seconds_since(start) <= 600.0, "criterion 4 over 10 min");
}

// --- criterion 5: interval construction and unique decoding -----------------

void criterion_5(Check& check) {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(12345);
  for (int k : {3, 4, 5}) {
    const Elem d = erdos_turan_sidon(k).elements.back() + 1;
    for (Elem n : {4 * d, 8 * d}) {
      const K4Construction c = construct_k4_detailed(n, k);
      const std::string tag =
          "k=" + std::to_string(k) + " n=" + std::to_string(n);
      check.require(is_sidon(c.family), "construct_k4 " + tag + " not Sidon");
      const auto floor_size = static_cast<std::uint64_t>(n / (2 * d));
      std::uint64_t expected = 1;
      for (int i = 1; i < k; ++i) {
        expected *= floor_size;
      }
      check.require(c.family.size() >= expected,
                    "construct_k4 " + tag + " below size bound");
      bool decoded_all = true;
      for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t i = rng() % c.family.size();
        const std::size_t j = rng() % c.family.size();
        const auto a = std::min(i, j);
        const auto b = std::max(i, j);
        const SumsetKey key =
            sumset_sorted(c.family.set(a), c.family.set(b));
        try {
          const auto [u, v] = decode_k4_sumset(c, key);
          decoded_all = decoded_all && u == c.family.set(a) &&
                        v == c.family.set(b);
        } catch (const std::exception&) {
          decoded_all = false;
        }
      }
      check.require(decoded_all, "decoding failed for " + tag);
    }
  }
  check.require(seconds_since(start) <= 300.0, "criterion 5 over 5 min");
}

// --- criterion 6: oracle cross-validation -----------------------------------

void criterion_6(Check& check) {
  std::mt19937_64 rng(777);
  for (int round = 0; round < 100; ++round) {
    const int k = 2 + static_cast<int>(round % 2);
    const Elem n = 2 * k + 2 + static_cast<Elem>(rng() % 16);
    const Family f = naive::random_family(rng, n, k, 1 + rng() % 25);
    if (find_collisions(f) != naive::find_collisions_quadruple(f)) {
      check.require(false, "find_collisions mismatch in round " +
                               std::to_string(round));
      return;
    }
  }
  for (Elem n = 3; n <= 12; ++n) {
    std::vector<std::vector<Elem>> sets;
    for (Elem a = 1; a <= n; ++a) {
      for (Elem b = a + 1; b <= n; ++b) {
        sets.push_back({a, b});
      }
    }
    const Family full(std::move(sets), n, 2, false);
    std::array<std::uint64_t, 3> reference{0, 0, 0};
    for (const auto& rec : naive::find_collisions_quadruple(full)) {
      ++reference[static_cast<std::size_t>(rec.ell - 2)];
    }
    check.require(count_c_ell_all(n, 2) == reference,
                  "count_c_ell mismatch at n=" + std::to_string(n));
  }
}

// --- criterion 7: threshold slopes -------------------------------------------

void criterion_7(Check& check) {
  const auto start = std::chrono::steady_clock::now();
  PGrid grid;
  grid.points = 14;

  {
    const std::vector<Elem> ns{64, 128, 256, 512};
    const ThresholdFit fit =
        threshold_sweep(ns, 2, 2, grid, 400, 1, worker_threads());
    for (const auto& crossing : fit.per_n) {
      check.require(crossing.p_half.has_value(),
                    "k=2 crossing not bracketed at n=" +
                        std::to_string(crossing.n));
    }
    check.require(fit.slope.has_value(), "k=2 slope unavailable");
    if (fit.slope.has_value()) {
      check.require(std::abs(*fit.slope + 1.25) <= 0.20,
                    "k=2 slope " + std::to_string(*fit.slope) +
                        " outside -1.25 +/- 0.20");
    }
  }
  {
    const std::vector<Elem> ns{32, 64, 128};
    const ThresholdFit fit =
        threshold_sweep(ns, 3, 2, grid, 400, 1, worker_threads());
    for (const auto& crossing : fit.per_n) {
      check.require(crossing.p_half.has_value(),
                    "k=3 crossing not bracketed at n=" +
                        std::to_string(crossing.n));
    }
    check.require(fit.slope.has_value(), "k=3 slope unavailable");
    if (fit.slope.has_value()) {
      check.require(std::abs(*fit.slope + 1.75) <= 0.30,
                    "k=3 slope " + std::to_string(*fit.slope) +
                        " outside -1.75 +/- 0.30");
    }
  }
  check.require(seconds_since(start) <= 900.0, "criterion 7 over 15 min");
}

// --- criterion 8: first-moment consistency -----------------------------------

void criterion_8(Check& check) {
  for (double p : {0.02, 0.05, 0.1}) {
    const CollisionDiagnostics diag =
        expected_collision_diagnostics(10, 2, p, 10000, 1, worker_threads());
    check.require(diag.exact.has_value(), "exact branch unavailable");
    if (diag.exact.has_value()) {
      check.require(
          std::abs(diag.mc_mean - *diag.exact) <= 3.0 * diag.mc_sigma + 1e-12,
          "MC mean vs exact first moment at p=" + std::to_string(p));
    }
    check.require(
        diag.pr_not_sidon <= diag.mc_mean + 3.0 * diag.mc_sigma + 1e-12,
        "Markov inequality violated at p=" + std::to_string(p));
  }
}

// --- criterion 9: B2[g] construction ----------------------------------------

void criterion_9(Check& check) {
  const std::vector<std::array<Elem, 3>> cases = {
      {2, 2, 40}, {2, 4, 60}, {3, 2, 40}};
  for (const auto& [k, g, n] : cases) {
    const B2gConstruction c = construct_b2g_detailed(
        n, static_cast<int>(k), static_cast<int>(g));
    const std::string tag = "(k=" + std::to_string(k) +
                            ",g=" + std::to_string(g) +
                            ",n=" + std::to_string(n) + ")";
    check.require(c.family.size() >= 1, "empty b2g family " + tag);
    check.require(c.family.size() == c.base_set.size() * c.inner_system.size(),
                  "b2g size mismatch " + tag);
    check.require(is_bhg(c.family, 2, static_cast<int>(g)),
                  "b2g bound violated " + tag);
  }
}

// --- criterion 10: composite-k demo ------------------------------------------

void criterion_10(Check& check) {
  const MultiRepDemo demo = composite_multirep({1, 2, 4, 8});
  check.require(representation_count(demo.six_sets, demo.s, 2) == 3,
                "representation count != 3");
}

// --- criterion 11: B_h[1] 0-statement surrogate -------------------------------

void criterion_11(Check& check) {
  const auto start = std::chrono::steady_clock::now();
  for (Elem n : {32, 64}) {
    SampleSpec spec;
    spec.n = n;
    spec.k = 2;
    spec.h = 3;
    spec.p = 10.0 * std::pow(static_cast<double>(n), -7.0 / 5.0);
    spec.seed = 1;
    spec.samples = 400;
    const SweepPoint point = estimate_bh_probability(spec, worker_threads());
    check.require(point.p_hat <= 0.2,
                  "B3[1] survival probability " + std::to_string(point.p_hat) +
                      " above 0.2 at n=" + std::to_string(n));
  }
  check.require(seconds_since(start) <= 600.0, "criterion 11 over 10 min");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<void(Check&)> body;
  };
  const std::vector<Criterion> criteria = {
      {1, "exact tightness for k=2 and verify at n=10^4", criterion_1},
      {2, "upper bound never violated", criterion_2},
      {3, "k=3 construction Sidon with size bound (n=5..40)", criterion_3},
      {4, "3-set equality classification complete and linear", criterion_4},
      {5, "interval construction Sidon with unique decoding", criterion_5},
      {6, "oracle cross-validation against quadruple loops", criterion_6},
      {7, "threshold slopes -1.25 (k=2) and -1.75 (k=3)", criterion_7},
      {8, "first-moment consistency and Markov bound", criterion_8},
      {9, "B2[g] construction bound and exact product size", criterion_9},
      {10, "composite-k triple representation", criterion_10},
      {11, "B3[1] 0-statement surrogate", criterion_11},
  };

  int failed = 0;
  for (const Criterion& criterion : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      criterion.body(check);
    } catch (const std::exception& e) {
      check.failures.push_back(std::string("exception: ") + e.what());
    }
    const double elapsed = seconds_since(start);
    if (check.failures.empty()) {
      std::printf("[PASS] criterion %2d: %s (%.1f s)\n", criterion.id,
                  criterion.name, elapsed);
    } else {
      ++failed;
      std::printf("[FAIL] criterion %2d: %s (%.1f s)\n", criterion.id,
                  criterion.name, elapsed);
      for (const std::string& failure : check.failures) {
        std::printf("       - %s\n", failure.c_str());
      }
    }
    std::fflush(stdout);
  }
  if (failed == 0) {
    std::printf("all %zu acceptance criteria passed\n", criteria.size());
  } else {
    std::printf("%d acceptance criteria FAILED\n", failed);
  }
  return failed;
}
