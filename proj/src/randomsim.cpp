#include "sidonkit/randomsim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "sidonkit/kset.hpp"
#include "sidonkit/oracle.hpp"
#include "sidonkit/rng.hpp"
#include "sidonkit/verifier.hpp"

namespace sidonkit {

int default_threads() {
  const char* env = std::getenv("SIDONKIT_THREADS");
  if (env != nullptr) {
    const int value = std::atoi(env);
    if (value >= 1) {
      return value;
    }
  }
  return 1;
}

namespace {

void validate_spec(const SampleSpec& spec) {
  if (spec.n < 2 || spec.n > kMaxAmbient) {
    throw std::invalid_argument("SampleSpec: n out of range");
  }
  if (spec.k < 2 || static_cast<Elem>(spec.k) > spec.n) {
    throw std::invalid_argument("SampleSpec: requires 2 <= k <= n");
  }
  if (!(spec.p > 0.0) || spec.p > 1.0) {
    throw std::invalid_argument("SampleSpec: p must be in (0, 1]");
  }
  if (spec.samples < 1) {
    throw std::invalid_argument("SampleSpec: samples must be >= 1");
  }
  if (spec.h < 2) {
    throw std::invalid_argument("SampleSpec: h must be >= 2");
  }
}

void warn_if_beyond_envelope(const SampleSpec& spec) {
  // Documented desk-scale envelope: k=2 up to n=512, k=3 up to n=128,
  // h>=3 up to n=64. Larger runs are allowed but may be slow.
  static std::once_flag warned;
  const bool beyond = (spec.h >= 3 && spec.n > 64) ||
                      (spec.k == 2 && spec.n > 512) ||
                      (spec.k == 3 && spec.n > 128) ||
                      (spec.k >= 4 && spec.n > 64);
  if (beyond) {
    std::call_once(warned, [&] {
      std::fprintf(stderr,
                   "sidonkit: warning: n=%lld k=%d h=%d is beyond the "
                   "desk-scale envelope; expect long runtimes\n",
                   static_cast<long long>(spec.n), spec.k, spec.h);
    });
  }
}

// Runs fn(i) for i in [0, count) over up to `threads` workers. Results must
// be written to per-index slots; aggregation stays order-independent.
template <typename Fn>
void parallel_for_index(std::uint64_t count, int threads, Fn&& fn) {
  threads = std::max(1, threads);
  if (threads == 1 || count <= 1) {
    for (std::uint64_t i = 0; i < count; ++i) {
      fn(i);
    }
    return;
  }
  const int workers =
      static_cast<int>(std::min<std::uint64_t>(threads, count));
  std::mutex error_mutex;
  std::exception_ptr first_error;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::uint64_t i = static_cast<std::uint64_t>(w); i < count;
             i += static_cast<std::uint64_t>(workers)) {
          fn(i);
        }
      } catch (...) {
        const std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) {
          first_error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) {
    t.join();
  }
  if (first_error) {
    std::rethrow_exception(first_error);
  }
}

// Lexicographic unranking of a k-combination of {1..n}.
std::vector<Elem> unrank_combination(Elem n, int k, std::uint64_t rank) {
  std::vector<Elem> out;
  out.reserve(static_cast<std::size_t>(k));
  Elem next = 1;
  for (int pos = 0; pos < k; ++pos) {
    const int remaining = k - pos - 1;
    bool placed = false;
    for (Elem c = next; c <= n && !placed; ++c) {
      const std::uint64_t below =
          binomial_checked(static_cast<std::uint64_t>(n - c),
                           static_cast<std::uint64_t>(remaining));
      if (rank < below) {
        out.push_back(c);
        next = c + 1;
        placed = true;
      } else {
        rank -= below;
      }
    }
    if (!placed) {
      throw std::logic_error("unrank_combination: rank out of range");
    }
  }
  return out;
}

}  // namespace

Family sample_system(const SampleSpec& spec, std::uint64_t sample_index) {
  validate_spec(spec);
  const std::uint64_t total =
      binomial_checked(static_cast<std::uint64_t>(spec.n),
                       static_cast<std::uint64_t>(spec.k));
  if (spec.p * static_cast<double>(total) >
      static_cast<double>(std::uint64_t{1} << 24)) {
    throw CapExceeded("sample_system: expected family size beyond cap");
  }

  SplitMix64 rng(derive_stream({spec.seed, static_cast<std::uint64_t>(spec.n),
                                static_cast<std::uint64_t>(spec.k),
                                static_cast<std::uint64_t>(spec.h),
                                bits_of(spec.p), sample_index}));

  std::vector<std::vector<Elem>> sets;
  if (spec.p >= 1.0) {
    sets.reserve(total);
    for (std::uint64_t r = 0; r < total; ++r) {
      sets.push_back(unrank_combination(spec.n, spec.k, r));
    }
  } else {
    // Skip-sampling: geometric gaps between included candidate ranks, so
    // the C(n,k) candidate space is never materialized.
    const double log_q = std::log1p(-spec.p);
    std::uint64_t rank = 0;
    for (;;) {
      const double u = rng.next_unit();
      const double gap = std::floor(std::log1p(-u) / log_q);
      if (gap >= static_cast<double>(total - rank)) {
        break;
      }
      rank += static_cast<std::uint64_t>(gap);
      if (rank >= total) {
        break;
      }
      sets.push_back(unrank_combination(spec.n, spec.k, rank));
      ++rank;
      if (rank >= total) {
        break;
      }
    }
  }
  return Family(std::move(sets), spec.n, spec.k, /*zero_anchored=*/false);
}

namespace {

struct SampleOutcome {
  bool holds = true;
  double collisions = 0.0;
};

SampleOutcome evaluate_sample(const SampleSpec& spec,
                              std::uint64_t sample_index) {
  const Family f = sample_system(spec, sample_index);
  SampleOutcome outcome;
  if (spec.h == 2) {
    const CollisionCounts counts = count_collisions(f);
    outcome.holds = counts.total == 0;
    outcome.collisions = static_cast<double>(counts.total);
  } else {
    outcome.collisions =
        static_cast<double>(count_hfold_collision_pairs(f, spec.h));
    outcome.holds = outcome.collisions == 0.0;
  }
  return outcome;
}

SweepPoint summarize(const SampleSpec& spec,
                     const std::vector<SampleOutcome>& outcomes) {
  SweepPoint point;
  point.spec = spec;
  double holds = 0.0;
  double collisions = 0.0;
  for (const SampleOutcome& o : outcomes) {
    holds += o.holds ? 1.0 : 0.0;
    collisions += o.collisions;
  }
  const double s = static_cast<double>(outcomes.size());
  point.p_hat = holds / s;
  point.mean_collisions = collisions / s;
  point.ci_half_width =
      1.96 * std::sqrt(point.p_hat * (1.0 - point.p_hat) / s);
  return point;
}

SweepPoint estimate(const SampleSpec& spec, int threads) {
  validate_spec(spec);
  warn_if_beyond_envelope(spec);
  std::vector<SampleOutcome> outcomes(spec.samples);
  parallel_for_index(spec.samples, threads, [&](std::uint64_t i) {
    outcomes[i] = evaluate_sample(spec, i);
  });
  return summarize(spec, outcomes);
}

}  // namespace

SweepPoint estimate_sidon_probability(const SampleSpec& spec, int threads) {
  if (spec.h != 2) {
    throw std::invalid_argument("estimate_sidon_probability: h must be 2");
  }
  return estimate(spec, threads);
}

SweepPoint estimate_bh_probability(const SampleSpec& spec, int threads) {
  return estimate(spec, threads);
}

// ---------------------------------------------------------------------------
// Threshold sweeps.
// ---------------------------------------------------------------------------

namespace {

double reference_exponent(int k, int h) {
  if (h == 2) {
    return -(2.0 * k + 1.0) / 4.0;
  }
  return -(static_cast<double>(h) * k + 1.0) / (h + 2.0);
}

// Pool-adjacent-violators: least-squares monotone non-increasing fit.
std::vector<double> monotone_non_increasing(const std::vector<double>& values) {
  struct Block {
    double sum;
    int count;
  };
  std::vector<Block> blocks;
  for (double v : values) {
    blocks.push_back(Block{v, 1});
    while (blocks.size() >= 2) {
      auto& prev = blocks[blocks.size() - 2];
      auto& last = blocks.back();
      if (prev.sum / prev.count >= last.sum / last.count) {
        break;
      }
      prev.sum += last.sum;
      prev.count += last.count;
      blocks.pop_back();
    }
  }
  std::vector<double> out;
  out.reserve(values.size());
  for (const Block& b : blocks) {
    for (int i = 0; i < b.count; ++i) {
      out.push_back(b.sum / b.count);
    }
  }
  return out;
}

std::optional<double> half_crossing(const std::vector<double>& p_grid,
                                    const std::vector<double>& p_hats,
                                    std::uint64_t samples) {
  const double eps = 1.0 / (2.0 * static_cast<double>(samples));
  std::vector<double> fitted = monotone_non_increasing(p_hats);
  for (double& v : fitted) {
    v = std::clamp(v, eps, 1.0 - eps);
  }
  auto logit = [](double x) { return std::log(x / (1.0 - x)); };
  for (std::size_t i = 0; i + 1 < fitted.size(); ++i) {
    if (fitted[i] >= 0.5 && fitted[i + 1] < 0.5) {
      const double l0 = logit(fitted[i]);
      const double l1 = logit(fitted[i + 1]);
      const double t = l0 == l1 ? 0.5 : l0 / (l0 - l1);
      const double log_p = std::log(p_grid[i]) +
                           t * (std::log(p_grid[i + 1]) - std::log(p_grid[i]));
      return std::exp(log_p);
    }
  }
  return std::nullopt;
}

}  // namespace

ThresholdFit threshold_sweep(std::span<const Elem> n_list, int k, int h,
                             PGrid grid, std::uint64_t samples,
                             std::uint64_t seed, int threads) {
  if (n_list.empty()) {
    throw std::invalid_argument("threshold_sweep: empty n list");
  }
  if (grid.points < 2) {
    throw std::invalid_argument("threshold_sweep: grid needs >= 2 points");
  }
  ThresholdFit fit;
  fit.seed = seed;

  std::vector<double> log_n;
  std::vector<double> log_p_half;
  for (Elem n : n_list) {
    double p_min = grid.p_min;
    double p_max = grid.p_max;
    if (p_min <= 0.0 || p_max <= 0.0) {
      // Default grid: a wide geometric window around the reference scale.
      const double ref =
          std::pow(static_cast<double>(n), reference_exponent(k, h));
      p_min = ref / 32.0;
      p_max = std::min(1.0, ref * 12.0);
    }
    std::vector<double> p_grid;
    std::vector<double> p_hats;
    for (int j = 0; j < grid.points; ++j) {
      const double t =
          static_cast<double>(j) / static_cast<double>(grid.points - 1);
      const double p = p_min * std::pow(p_max / p_min, t);
      SampleSpec spec;
      spec.n = n;
      spec.k = k;
      spec.p = p;
      spec.h = h;
      spec.seed = seed;
      spec.samples = samples;
      const SweepPoint point = estimate(spec, threads);
      p_grid.push_back(p);
      p_hats.push_back(point.p_hat);
      fit.points.push_back(point);
    }
    CrossingEstimate crossing;
    crossing.n = n;
    crossing.p_half = half_crossing(p_grid, p_hats, samples);
    if (crossing.p_half.has_value()) {
      log_n.push_back(std::log(static_cast<double>(n)));
      log_p_half.push_back(std::log(*crossing.p_half));
    }
    fit.per_n.push_back(crossing);
  }

  if (log_n.size() >= 2) {
    const double count = static_cast<double>(log_n.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < log_n.size(); ++i) {
      sx += log_n[i];
      sy += log_p_half[i];
      sxx += log_n[i] * log_n[i];
      sxy += log_n[i] * log_p_half[i];
    }
    const double denom = count * sxx - sx * sx;
    if (denom != 0.0) {
      fit.slope = (count * sxy - sx * sy) / denom;
      fit.intercept = (sy - *fit.slope * sx) / count;
    }
  }
  return fit;
}

CollisionDiagnostics expected_collision_diagnostics(Elem n, int k, double p,
                                                    std::uint64_t samples,
                                                    std::uint64_t seed,
                                                    int threads) {
  CollisionDiagnostics diag;
  if (p == 0.0) {
    diag.exact = 0.0;
    return diag;
  }
  SampleSpec spec;
  spec.n = n;
  spec.k = k;
  spec.p = p;
  spec.h = 2;
  spec.seed = seed;
  spec.samples = samples;
  validate_spec(spec);

  std::vector<double> counts(samples, 0.0);
  std::vector<char> not_sidon(samples, 0);
  parallel_for_index(samples, threads, [&](std::uint64_t i) {
    const Family f = sample_system(spec, i);
    const CollisionCounts c = count_collisions(f);
    counts[i] = static_cast<double>(c.total);
    not_sidon[i] = c.total > 0 ? 1 : 0;
  });

  double mean = 0.0;
  double fails = 0.0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    mean += counts[i];
    fails += not_sidon[i];
  }
  mean /= static_cast<double>(samples);
  fails /= static_cast<double>(samples);
  double var = 0.0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    var += (counts[i] - mean) * (counts[i] - mean);
  }
  var /= std::max<double>(1.0, static_cast<double>(samples - 1));

  diag.mc_mean = mean;
  diag.mc_sigma = std::sqrt(var / static_cast<double>(samples));
  diag.pr_not_sidon = fails;

  try {
    const auto exact_counts = count_c_ell_all(n, k);
    double expected = 0.0;
    for (int ell = 2; ell <= 4; ++ell) {
      expected += static_cast<double>(
                      exact_counts[static_cast<std::size_t>(ell - 2)]) *
                  std::pow(p, ell);
    }
    diag.exact = expected;
  } catch (const CapExceeded&) {
    diag.exact = std::nullopt;
  }
  return diag;
}

}  // namespace sidonkit
