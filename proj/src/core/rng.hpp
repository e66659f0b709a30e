#pragma once

#include <cstdint>
#include <random>
#include <string>

namespace mix2mix {

// Standard normal quantile (Wichura AS 241, double precision).
double normal_quantile(double p);

// Standard normal CDF and PDF.
double normal_cdf(double x);
double normal_pdf(double x);

// Deterministic random source addressed by (seed, stream name).
//
// Streams are independent sub-generators: the engine owns one per noise
// source (keyframe, teacher-noise, teacher-timestep, init-latents,
// reference-choice) so that toggling one source in an ablation leaves the
// others untouched. Identical (seed, stream, draw index) yields identical
// values across runs; normals are produced by inverse-CDF so every draw
// consumes exactly one uniform.
class Rng {
public:
    Rng(std::uint64_t seed, const std::string& stream);

    std::uint64_t seed() const { return seed_; }
    const std::string& stream() const { return stream_; }

    // Uniform in [0, 1).
    double uniform();
    // Uniform in the open interval (0, 1); safe to feed to quantiles.
    double uniform_open();
    // Standard normal via inverse CDF.
    double normal();
    // Uniform integer in {0, ..., n-1}, n >= 1.
    std::uint64_t uniform_int(std::uint64_t n);

private:
    std::uint64_t seed_;
    std::string stream_;
    std::mt19937_64 engine_;
};

}  // namespace mix2mix
