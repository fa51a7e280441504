#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "contactloc/sphere_model.hpp"

namespace contactloc {

// Monte Carlo estimator configuration.  Results depend on seed, samples and
// histogram_bins but are bitwise independent of workers: samples are indexed
// globally, the generator is counter-based, and partial sums are reduced in
// fixed chunk order.
struct McConfig {
    std::uint64_t seed = 2026;
    std::size_t samples = 1000000;
    int workers = 1;
    int histogram_bins = 64;
};

struct McVolumeResult {
    double value = 0.0;
    double stderr_value = 0.0;
    std::size_t samples = 0;
};

// Weighted histogram of -mu(z) over uniform samples of the round sphere,
// with per-sample weight h^{-(n+1)} (2pi)^{n+1} / (n! N), h = sum w_j |z_j|^2.
// density[k] then estimates the transform profile magnitude |Q| / (2pi)^{1/2}
// on [edges[k], edges[k+1]).  Samples nudged outside the exact moment range
// by floating-point jitter are clamped into the edge bins and counted.
struct Histogram {
    std::vector<double> edges;           // histogram_bins + 1
    std::vector<double> density;         // histogram_bins
    std::vector<double> density_stderr;  // histogram_bins
    std::size_t samples = 0;
    std::size_t clamped = 0;
};

// Uniform point on the unit sphere S^{2n+1} in C^{n+1}, fully determined by
// (seed, sample_index): normalized standard Gaussian vector from a
// counter-based stream.
std::vector<std::complex<double>> sample_sphere(int n, std::uint64_t seed,
                                                std::uint64_t sample_index);

// Contact volume estimate (2 pi^{n+1} / n!) * mean(h^{-(n+1)}) with its
// standard error.
McVolumeResult mc_contact_volume(const WeightedSphere& sphere, const McConfig& config);

// Histogram over the exact moment range [-max lambda, -min lambda].
Histogram mc_dh_histogram(const WeightedSphere& sphere, const McConfig& config);

}  // namespace contactloc
