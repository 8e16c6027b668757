#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "sefcc/fcc.hpp"
#include "sefcc/word.hpp"

namespace sefcc {

/// Monte-Carlo sweep configuration. Eb/N0 is normalized with the
/// information rate of 7 data bits per 9 coded bits.
struct SimConfig {
    std::vector<double> ebn0_db_points;
    std::uint64_t trials_per_point = 100000;
    std::uint64_t seed = 1;
    int workers = 1;
    double code_rate = 7.0 / 9.0;
    static constexpr int data_bit_count = 7;

    static std::vector<double> sweep(double start_db, double stop_db, double step_db);
};

struct SimPoint {
    double ebn0_db = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t bit_errors = 0;
    std::uint64_t function_errors = 0;
    double ber = 0.0, ber_ci_lo = 0.0, ber_ci_hi = 0.0;
    double fer = 0.0, fer_ci_lo = 0.0, fer_ci_hi = 0.0;
};

struct SimResult {
    std::vector<SimPoint> points;
};

/// BPSK mapping: bit 0 -> +1.0, bit 1 -> -1.0, unit energy per coordinate.
std::array<double, 9> modulate_bpsk(Word w);

/// Noise variance per coordinate for the given Eb/N0 and code rate:
/// sigma^2 = 1 / (2 * R * 10^(ebn0_db/10)).
double noise_sigma_squared(double ebn0_db, double code_rate);

/// Adds independent zero-mean Gaussian noise to each coordinate.
void add_awgn(std::span<double, 9> symbols, double sigma, std::mt19937_64& rng);

/// Maximum-likelihood soft decision over the 128 encodings: returns the u
/// whose modulated encoding is closest in squared Euclidean distance, ties
/// broken toward the smallest u in natural binary counting order.
Word ml_soft_decode(std::span<const double, 9> observations, const SefccCode& code);

/// 95% Wilson score interval for a binomial proportion.
std::pair<double, double> wilson_interval_95(std::uint64_t successes, std::uint64_t trials);

/// Per trial: u uniform over F_2^7, transmit encode(u) over BPSK/AWGN,
/// ML-decode, count data-bit errors over the 7 systematic bits and function
/// errors f(decoded) != f(u). Bit-identical for a fixed (seed, workers)
/// layout; different layouts agree within confidence intervals.
SimResult run_simulation(const SefccCode& code, const BooleanFunction& f, const SimConfig& cfg);

/// Union bound on the function error rate from the cross-class distance
/// profile: (1/128) * sum over ordered cross-class pairs of
/// Q(sqrt(2 R Eb/N0 d)). Upper-bounds the simulated FER.
double union_bound_fer(const SefccCode& code, const BooleanFunction& f, double ebn0_db,
                       double code_rate = 7.0 / 9.0);

}  // namespace sefcc
