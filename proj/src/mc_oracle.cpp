#include "contactloc/mc_oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "contactloc/errors.hpp"

namespace contactloc {

namespace {

constexpr std::size_t kChunkSize = 4096;
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

// splitmix64 finalizer; draw(seed, counter) is a pure function, so every
// sample owns a fixed slice of the stream regardless of thread scheduling.
std::uint64_t mix64(std::uint64_t x) {
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::uint64_t draw(std::uint64_t seed, std::uint64_t counter) {
    return mix64(seed + (counter + 1) * kGolden);
}

// Uniform in the open interval (0, 1); never 0, so log is safe.
double u01(std::uint64_t bits) { return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53; }

struct SphereView {
    int dim;  // n + 1
    int n;
    std::vector<double> w;
    std::vector<double> beta;
};

SphereView make_view(const WeightedSphere& sphere) {
    SphereView view;
    view.dim = sphere.n + 1;
    view.n = sphere.n;
    for (const auto& wj : sphere.w) view.w.push_back(wj.get_d());
    for (const auto& bj : sphere.beta) view.beta.push_back(mpq_class(bj).get_d());
    return view;
}

// Gaussian pair for coordinate j of the given sample, Box-Muller from two
// dedicated stream draws.
void gaussian_pair(std::uint64_t seed, std::uint64_t sample_index, int dim, int j, double* x,
                   double* y) {
    std::uint64_t base = sample_index * static_cast<std::uint64_t>(2 * dim);
    double u1 = u01(draw(seed, base + 2 * static_cast<std::uint64_t>(j)));
    double u2 = u01(draw(seed, base + 2 * static_cast<std::uint64_t>(j) + 1));
    double radius = std::sqrt(-2.0 * std::log(u1));
    *x = radius * std::cos(2.0 * M_PI * u2);
    *y = radius * std::sin(2.0 * M_PI * u2);
}

// h = sum w_j |z_j|^2 and mu = moment value for the sample, computed from
// unnormalized Gaussian coordinates (the normalization cancels in h and mu
// only up to the overall 1/S factor in h, which is kept).
void sample_h_mu(const SphereView& view, std::uint64_t seed, std::uint64_t sample_index,
                 double* h_out, double* mu_out) {
    double total = 0.0, weighted = 0.0, momentum = 0.0;
    for (int j = 0; j < view.dim; ++j) {
        double x, y;
        gaussian_pair(seed, sample_index, view.dim, j, &x, &y);
        double a = x * x + y * y;
        total += a;
        weighted += view.w[static_cast<size_t>(j)] * a;
        momentum += view.beta[static_cast<size_t>(j)] * a;
    }
    *h_out = weighted / total;
    *mu_out = momentum / weighted;
}

void validate_config(const McConfig& config) {
    if (config.samples == 0) throw ConfigError("sample count must be positive");
    if (config.workers < 1) throw ConfigError("worker count must be at least 1");
    if (config.histogram_bins < 1) throw ConfigError("histogram needs at least one bin");
}

// Runs per_sample(sample_index, partial) over all samples, split into
// fixed-size chunks claimed by workers through an atomic cursor.  The partial
// vector is indexed by chunk, so the caller's in-order reduction is
// independent of scheduling.
template <typename Partial, typename PerSample>
std::vector<Partial> chunked_accumulate(std::size_t samples, int workers,
                                        const PerSample& per_sample) {
    std::size_t chunk_count = (samples + kChunkSize - 1) / kChunkSize;
    std::vector<Partial> partials(chunk_count);
    std::atomic<std::size_t> cursor{0};
    auto work = [&]() {
        while (true) {
            std::size_t chunk = cursor.fetch_add(1);
            if (chunk >= chunk_count) return;
            std::size_t begin = chunk * kChunkSize;
            std::size_t end = std::min(samples, begin + kChunkSize);
            Partial& partial = partials[chunk];
            for (std::size_t s = begin; s < end; ++s) per_sample(s, partial);
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(workers));
        for (int t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& thread : pool) thread.join();
    }
    return partials;
}

double pi_power(int k) { return std::pow(M_PI, k); }

double factorial_d(int n) {
    double out = 1.0;
    for (int k = 2; k <= n; ++k) out *= k;
    return out;
}

}  // namespace

std::vector<std::complex<double>> sample_sphere(int n, std::uint64_t seed,
                                                std::uint64_t sample_index) {
    if (n < 0) throw ConfigError("sphere parameter n must be nonnegative");
    int dim = n + 1;
    std::vector<std::complex<double>> z(static_cast<size_t>(dim));
    double total = 0.0;
    for (int j = 0; j < dim; ++j) {
        double x, y;
        gaussian_pair(seed, sample_index, dim, j, &x, &y);
        z[static_cast<size_t>(j)] = {x, y};
        total += x * x + y * y;
    }
    double scale = 1.0 / std::sqrt(total);
    for (auto& zj : z) zj *= scale;
    return z;
}

McVolumeResult mc_contact_volume(const WeightedSphere& sphere, const McConfig& config) {
    validate_config(config);
    SphereView view = make_view(sphere);
    struct Partial {
        double sum = 0.0;
        double sum_sq = 0.0;
    };
    auto per_sample = [&view, &config](std::size_t s, Partial& partial) {
        double h, mu;
        sample_h_mu(view, config.seed, s, &h, &mu);
        double t = std::pow(h, -(view.n + 1));
        partial.sum += t;
        partial.sum_sq += t * t;
    };
    auto partials = chunked_accumulate<Partial>(config.samples, config.workers, per_sample);

    double sum = 0.0, sum_sq = 0.0;
    for (const auto& partial : partials) {
        sum += partial.sum;
        sum_sq += partial.sum_sq;
    }
    double count = static_cast<double>(config.samples);
    double mean = sum / count;
    double scale = 2.0 * pi_power(sphere.n + 1) / factorial_d(sphere.n);
    McVolumeResult result;
    result.samples = config.samples;
    result.value = scale * mean;
    if (config.samples > 1) {
        double variance = std::max(0.0, (sum_sq - count * mean * mean) / (count - 1.0));
        result.stderr_value = scale * std::sqrt(variance / count);
    }
    return result;
}

Histogram mc_dh_histogram(const WeightedSphere& sphere, const McConfig& config) {
    validate_config(config);
    SphereView view = make_view(sphere);

    mpq_class lambda_min = sphere.lambda.front();
    mpq_class lambda_max = sphere.lambda.front();
    for (const auto& l : sphere.lambda) {
        lambda_min = std::min(lambda_min, l);
        lambda_max = std::max(lambda_max, l);
    }
    double lo = mpq_class(-lambda_max).get_d();
    double hi = mpq_class(-lambda_min).get_d();
    if (!(lo < hi)) {  // all critical values equal; widen so bins exist
        lo -= 0.5;
        hi += 0.5;
    }

    int bins = config.histogram_bins;
    double range = hi - lo;
    double weight_scale = std::pow(2.0 * M_PI, view.n + 1) / factorial_d(view.n);

    struct Partial {
        std::vector<double> sum;
        std::vector<double> sum_sq;
        std::size_t clamped = 0;
    };
    auto per_sample = [&](std::size_t s, Partial& partial) {
        if (partial.sum.empty()) {
            partial.sum.assign(static_cast<size_t>(bins), 0.0);
            partial.sum_sq.assign(static_cast<size_t>(bins), 0.0);
        }
        double h, mu;
        sample_h_mu(view, config.seed, s, &h, &mu);
        double value = -mu;
        if (value < lo || value > hi) partial.clamped += 1;
        int index = static_cast<int>(std::floor((value - lo) / range * bins));
        index = std::clamp(index, 0, bins - 1);
        double t = std::pow(h, -(view.n + 1)) * weight_scale;
        partial.sum[static_cast<size_t>(index)] += t;
        partial.sum_sq[static_cast<size_t>(index)] += t * t;
    };
    auto partials = chunked_accumulate<Partial>(config.samples, config.workers, per_sample);

    Histogram out;
    out.samples = config.samples;
    out.edges.resize(static_cast<size_t>(bins) + 1);
    for (int k = 0; k <= bins; ++k) {
        out.edges[static_cast<size_t>(k)] = lo + range * k / bins;
    }
    std::vector<double> sum(static_cast<size_t>(bins), 0.0);
    std::vector<double> sum_sq(static_cast<size_t>(bins), 0.0);
    for (const auto& partial : partials) {
        if (partial.sum.empty()) continue;
        for (int k = 0; k < bins; ++k) {
            sum[static_cast<size_t>(k)] += partial.sum[static_cast<size_t>(k)];
            sum_sq[static_cast<size_t>(k)] += partial.sum_sq[static_cast<size_t>(k)];
        }
        out.clamped += partial.clamped;
    }
    double count = static_cast<double>(config.samples);
    double width = range / bins;
    out.density.resize(static_cast<size_t>(bins));
    out.density_stderr.assign(static_cast<size_t>(bins), 0.0);
    for (int k = 0; k < bins; ++k) {
        // Per-sample variable X = t * 1[bin] / width; density is its mean.
        double mean_x = sum[static_cast<size_t>(k)] / width / count;
        out.density[static_cast<size_t>(k)] = mean_x;
        if (config.samples > 1) {
            double sq = sum_sq[static_cast<size_t>(k)] / (width * width);
            double variance = std::max(0.0, (sq - count * mean_x * mean_x) / (count - 1.0));
            out.density_stderr[static_cast<size_t>(k)] = std::sqrt(variance / count);
        }
    }
    return out;
}

}  // namespace contactloc
