#include "xpm/decoherence.hpp"

#include <atomic>
#include <cmath>
#include <mutex>
#include <numbers>
#include <thread>

#include "xpm/errors.hpp"
#include "xpm/qnd.hpp"

namespace xpm {

DecoherenceParams appd_params(const MediumConfig& medium, double t) {
  const double r1 = mean_R(medium, 1, t);  // validates equal, non-delta kernels
  const double r2 = mean_R(medium, 2, t);
  DecoherenceParams p;
  p.c1 = r1 * r1;
  p.c2 = r2 * r2;
  p.dphi = medium.phi(1) - medium.phi(2);
  p.n0011 = std::polar(1.0, 0.5 * p.dphi) * p.c1 * p.c2;
  p.n0110 = p.n0011;
  return p;
}

DecoherenceParams appd_params_from_mismatch(double dphi, double phi2,
                                            double ratio) {
  if (!(phi2 > 0.0)) throw validation_error("phi2 must be > 0");
  if (!(ratio > 0.0)) throw validation_error("dv*t/w ratio must be > 0");
  if (dphi < 0.0) throw validation_error("dphi must be >= 0");
  const double vr = 1.0 + dphi / phi2;  // v1/v2 for equal kernels
  const double scale = dphi / (4.0 * std::sqrt(std::numbers::pi)) * ratio;
  const double r1 = std::exp(-scale * vr);
  const double r2 = std::exp(-scale / vr);
  DecoherenceParams p;
  p.c1 = r1 * r1;
  p.c2 = r2 * r2;
  p.dphi = dphi;
  p.n0011 = std::polar(1.0, 0.5 * dphi) * p.c1 * p.c2;
  p.n0110 = p.n0011;
  return p;
}

namespace {

// Uniform double in [0, 1) from the top 53 bits; fully determined by the
// mt19937_64 bit stream, unlike std::uniform_real_distribution.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

cx uniform_disk(std::mt19937_64& rng) {
  const double r = std::sqrt(uniform01(rng));
  const double angle = 2.0 * std::numbers::pi * uniform01(rng);
  return std::polar(r, angle);
}

// Standard normal pair via Box-Muller (deterministic across platforms).
std::pair<double, double> normal_pair(std::mt19937_64& rng) {
  const double u1 = 1.0 - uniform01(rng);  // (0, 1]
  const double u2 = uniform01(rng);
  const double mag = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  return {mag * std::cos(angle), mag * std::sin(angle)};
}

cx clamp_disk(cx z) {
  const double m = std::abs(z);
  return m > 1.0 ? z / m : z;
}

}  // namespace

DecoherenceParams sample_params(std::mt19937_64& rng, double dphi) {
  DecoherenceParams p;
  p.c1 = uniform_disk(rng);
  p.c2 = uniform_disk(rng);
  p.n0011 = uniform_disk(rng);
  p.n0110 = uniform_disk(rng);
  p.dphi = dphi;
  return p;
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t batch) {
  // SplitMix64 round over seed xor a batch offset.
  std::uint64_t z = seed ^ (0x9e3779b97f4a7c15ULL * (batch + 1));
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

constexpr std::uint64_t kBatchSize = 1 << 16;
constexpr std::uint64_t kRestartInterval = 1 << 14;

struct BatchResult {
  double best = -1.0;  // below any reachable concurrence
  DecoherenceParams best_params;
  std::uint64_t best_index = 0;
  std::uint64_t accepted = 0;
};

struct Evaluation {
  bool physical = false;
  double concurrence = 0.0;
};

Evaluation evaluate(const TwoQubitState& state, double phi2,
                    const DecoherenceParams& params) {
  const NoiseMatrix noise = build_noise_matrix(params);
  const Mat4 rho = detail::noisy_cpg_rho_raw(state, phi2, noise.matrix());
  const auto vals = eigvals_hermitian(rho);
  Evaluation out;
  out.physical = vals[0] >= -DensityMatrix4::kPsdTol &&
                 vals[3] <= 1.0 + DensityMatrix4::kPsdTol;
  if (out.physical) out.concurrence = detail::concurrence_unchecked(rho);
  return out;
}

// Randomized hill climb: Gaussian proposals around the incumbent, clamped
// to the unit disks; the step size anneals on failure and resets
// periodically. Restarts keep the climb from stalling in a corner of the
// physicality region.
BatchResult run_batch(double dphi, double phi2, std::uint64_t seed,
                      std::uint64_t batch, std::uint64_t count) {
  const TwoQubitState state = TwoQubitState::balanced();
  std::mt19937_64 rng(substream_seed(seed, batch));

  BatchResult result;
  DecoherenceParams incumbent;  // all zeros: identity noise, always physical
  incumbent.dphi = dphi;
  double incumbent_c = 0.0;
  double step = 0.5;

  for (std::uint64_t s = 0; s < count; ++s) {
    if (s > 0 && s % kRestartInterval == 0) {
      incumbent = DecoherenceParams{};
      incumbent.dphi = dphi;
      incumbent_c = 0.0;
      step = 0.5;
    }
    DecoherenceParams prop;
    prop.dphi = dphi;
    const auto [g1r, g1i] = normal_pair(rng);
    const auto [g2r, g2i] = normal_pair(rng);
    const auto [g3r, g3i] = normal_pair(rng);
    const auto [g4r, g4i] = normal_pair(rng);
    prop.c1 = clamp_disk(incumbent.c1 + step * cx(g1r, g1i));
    prop.c2 = clamp_disk(incumbent.c2 + step * cx(g2r, g2i));
    prop.n0011 = clamp_disk(incumbent.n0011 + step * cx(g3r, g3i));
    prop.n0110 = clamp_disk(incumbent.n0110 + step * cx(g4r, g4i));

    const Evaluation ev = evaluate(state, phi2, prop);
    if (ev.physical) {
      ++result.accepted;
      if (ev.concurrence > incumbent_c) {
        incumbent = prop;
        incumbent_c = ev.concurrence;
      } else {
        step *= 0.995;
      }
      if (ev.concurrence > result.best) {
        result.best = ev.concurrence;
        result.best_params = prop;
        result.best_index = s;
      }
    } else {
      step *= 0.995;
    }
    if (step < 1e-4) step = 0.3;
  }
  return result;
}

}  // namespace

SearchReport min_decoherence_search(double dphi, double phi2,
                                    std::uint64_t samples, std::uint64_t seed,
                                    int workers) {
  if (samples == 0) throw validation_error("sample count must be >= 1");

  const std::uint64_t batches = (samples + kBatchSize - 1) / kBatchSize;
  std::vector<BatchResult> results(batches);

  unsigned n_workers = workers > 0 ? static_cast<unsigned>(workers)
                                   : std::max(1u, std::thread::hardware_concurrency());
  n_workers = std::min<std::uint64_t>(n_workers, batches);

  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  const auto work = [&]() {
    try {
      for (;;) {
        const std::uint64_t b = next.fetch_add(1);
        if (b >= batches) return;
        const std::uint64_t count =
            std::min<std::uint64_t>(kBatchSize, samples - b * kBatchSize);
        results[b] = run_batch(dphi, phi2, seed, b, count);
      }
    } catch (...) {
      std::scoped_lock lock(failure_mu);
      if (!failure) failure = std::current_exception();
    }
  };

  if (n_workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_workers);
    for (unsigned w = 0; w < n_workers; ++w) pool.emplace_back(work);
    for (std::thread& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  SearchReport report;
  report.dphi = dphi;
  report.samples = samples;
  report.seed = seed;

  std::uint64_t accepted = 0;
  std::uint64_t best_batch = batches;
  for (std::uint64_t b = 0; b < batches; ++b) {
    accepted += results[b].accepted;
    // Strict inequality: earliest batch, then earliest sample, wins ties.
    if (results[b].best > (best_batch == batches ? -1.0
                                                 : results[best_batch].best))
      best_batch = b;
  }
  report.accepted_fraction =
      static_cast<double>(accepted) / static_cast<double>(samples);
  if (accepted == 0)
    throw numerical_error(
        "no physical decoherence sample found (accepted_fraction = 0)");

  report.best_concurrence = results[best_batch].best;
  report.best_params = results[best_batch].best_params;
  return report;
}

std::vector<std::pair<double, double>> concurrence_curve_appd(
    double phi2, const std::vector<double>& dphi_grid, double ratio) {
  const TwoQubitState state = TwoQubitState::balanced();
  std::vector<std::pair<double, double>> curve;
  curve.reserve(dphi_grid.size());
  for (double dphi : dphi_grid) {
    const DecoherenceParams params =
        appd_params_from_mismatch(dphi, phi2, ratio);
    const DensityMatrix4 rho =
        noisy_cpg_rho(state, phi2, build_noise_matrix(params));
    curve.emplace_back(dphi, concurrence(rho));
  }
  return curve;
}

}  // namespace xpm
