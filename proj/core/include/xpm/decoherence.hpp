#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "xpm/cpg.hpp"
#include "xpm/medium.hpp"

namespace xpm {

// Decoherence parameters of the harmonic-bath model (equal kernels
// V1 = V2 = V, bath oscillators in the ground state):
//   c_i = ⟨R_i⟩²,  n0011 = n0110 = e^{i dphi/2} c1 c2,  dphi = phi1 - phi2.
DecoherenceParams appd_params(const MediumConfig& medium, double t);

// Same model parametrized directly by the phase mismatch, for Gaussian
// kernels: the velocity ratio follows from dphi = phi2·Δv/v2 and
//   ⟨R_i⟩ = exp( -(dphi/(4√π)) (v_i/v_{3-i}) ratio ),   ratio = Δv·t/w.
DecoherenceParams appd_params_from_mismatch(double dphi, double phi2,
                                            double ratio);

// One independent draw: c1, c2, n0011, n0110 uniform over the complex unit
// disk, dphi passed through. Deterministic for a given generator state.
DecoherenceParams sample_params(std::mt19937_64& rng, double dphi);

struct SearchReport {
  double dphi = 0.0;
  double best_concurrence = 0.0;
  DecoherenceParams best_params;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  double accepted_fraction = 0.0;  // physical samples / total samples
};

// Maximizes the gate concurrence over decoherence parameters at fixed phase
// mismatch, subject to the density matrix staying physical (eigenvalues in
// [0, 1]). The input state is fixed to c_ij = 1/2.
//
// The sample budget is split into fixed-size batches; each batch runs an
// independent randomized hill climb seeded from (seed, batch index), and the
// reduction takes the maximum with a deterministic tie-break. Results are
// identical for any worker count. workers <= 0 selects the hardware
// concurrency.
//
// Throws validation_error for samples == 0 and numerical_error if no sample
// was physical.
SearchReport min_decoherence_search(double dphi, double phi2,
                                    std::uint64_t samples, std::uint64_t seed,
                                    int workers = 0);

// Gate concurrence of the harmonic-bath model over a grid of phase
// mismatches, at fixed Δv·t/w ratio. Returns (dphi, concurrence) pairs.
std::vector<std::pair<double, double>> concurrence_curve_appd(
    double phi2, const std::vector<double>& dphi_grid, double ratio);

// Seed for the given batch derived from the user seed (SplitMix64).
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t batch);

}  // namespace xpm
