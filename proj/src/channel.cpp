#include "sefcc/channel.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace sefcc {

std::vector<double> SimConfig::sweep(double start_db, double stop_db, double step_db) {
    if (step_db <= 0.0) throw std::invalid_argument("SimConfig::sweep: step must be positive");
    std::vector<double> points;
    for (double x = start_db; x <= stop_db + 1e-9; x += step_db) points.push_back(x);
    return points;
}

std::array<double, 9> modulate_bpsk(Word w) {
    if (w.length() != 9)
        throw std::invalid_argument("modulate_bpsk: expected word length 9, got " + std::to_string(w.length()));
    std::array<double, 9> symbols;
    for (int j = 1; j <= 9; ++j) symbols[static_cast<std::size_t>(j - 1)] = w.coordinate(j) ? -1.0 : 1.0;
    return symbols;
}

double noise_sigma_squared(double ebn0_db, double code_rate) {
    if (!std::isfinite(ebn0_db)) throw std::invalid_argument("noise_sigma_squared: Eb/N0 must be finite");
    return 1.0 / (2.0 * code_rate * std::pow(10.0, ebn0_db / 10.0));
}

void add_awgn(std::span<double, 9> symbols, double sigma, std::mt19937_64& rng) {
    std::normal_distribution<double> noise(0.0, sigma);
    for (double& s : symbols) s += noise(rng);
}

namespace {

// Correlation argmax via sums over set coordinates: for +-1 symbols,
// <y, s(x)> = total - 2 * sum of y over the set bits of x, so maximizing
// correlation is minimizing that partial sum. Scanning u upward and
// replacing only on strict improvement keeps the smallest-u tie rule.
int decode_index(std::span<const double, 9> obs, const std::array<std::uint16_t, 128>& enc) {
    int best_u = 0;
    double best_partial = 0.0;
    {
        std::uint16_t bits = enc[0];
        double partial = 0.0;
        while (bits) {
            partial += obs[static_cast<std::size_t>(8 - std::countr_zero(bits))];
            bits &= static_cast<std::uint16_t>(bits - 1);
        }
        best_partial = partial;
    }
    for (int u = 1; u < 128; ++u) {
        std::uint16_t bits = enc[static_cast<std::size_t>(u)];
        double partial = 0.0;
        while (bits) {
            partial += obs[static_cast<std::size_t>(8 - std::countr_zero(bits))];
            bits &= static_cast<std::uint16_t>(bits - 1);
        }
        if (partial < best_partial) {
            best_partial = partial;
            best_u = u;
        }
    }
    return best_u;
}

}  // namespace

Word ml_soft_decode(std::span<const double, 9> observations, const SefccCode& code) {
    return Word(static_cast<std::uint16_t>(decode_index(observations, code.encoding_bits())), 7);
}

std::pair<double, double> wilson_interval_95(std::uint64_t successes, std::uint64_t trials) {
    if (trials == 0) return {0.0, 1.0};
    constexpr double z = 1.959963984540054;
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

SimResult run_simulation(const SefccCode& code, const BooleanFunction& f, const SimConfig& cfg) {
    if (f.k != 7) throw std::invalid_argument("run_simulation: function domain must be F_2^7");
    if (cfg.trials_per_point < 1) throw std::invalid_argument("run_simulation: trials_per_point must be >= 1");
    const int workers = std::max(1, cfg.workers);
    const auto& enc = code.encoding_bits();

    SimResult result;
    for (std::size_t point = 0; point < cfg.ebn0_db_points.size(); ++point) {
        const double ebn0_db = cfg.ebn0_db_points[point];
        const double sigma = std::sqrt(noise_sigma_squared(ebn0_db, cfg.code_rate));

        std::vector<std::uint64_t> bit_errs(static_cast<std::size_t>(workers), 0);
        std::vector<std::uint64_t> func_errs(static_cast<std::size_t>(workers), 0);

        auto run_worker = [&](int w) {
            // Independent stream per (seed, point, worker). seed_seq keeps
            // 32 bits per entry, so the 64-bit seed is split.
            std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                              static_cast<std::uint32_t>(point), static_cast<std::uint32_t>(w)};
            std::mt19937_64 rng(seq);
            std::normal_distribution<double> noise(0.0, sigma);
            std::uniform_int_distribution<int> source(0, 127);

            const std::uint64_t lo = cfg.trials_per_point * static_cast<std::uint64_t>(w) /
                                     static_cast<std::uint64_t>(workers);
            const std::uint64_t hi = cfg.trials_per_point * static_cast<std::uint64_t>(w + 1) /
                                     static_cast<std::uint64_t>(workers);
            std::uint64_t bits = 0, funcs = 0;
            std::array<double, 9> obs;
            for (std::uint64_t t = lo; t < hi; ++t) {
                const int u = source(rng);
                const std::uint16_t x = enc[static_cast<std::size_t>(u)];
                for (int j = 0; j < 9; ++j) obs[static_cast<std::size_t>(j)] = ((x >> (8 - j)) & 1 ? -1.0 : 1.0) + noise(rng);
                const int decoded = decode_index(obs, enc);
                bits += static_cast<std::uint64_t>(std::popcount(static_cast<unsigned>(u ^ decoded)));
                funcs += static_cast<std::uint64_t>(f(static_cast<std::uint32_t>(decoded)) !=
                                                    f(static_cast<std::uint32_t>(u)));
            }
            bit_errs[static_cast<std::size_t>(w)] = bits;
            func_errs[static_cast<std::size_t>(w)] = funcs;
        };

        if (workers == 1) {
            run_worker(0);
        } else {
            std::vector<std::thread> threads;
            for (int w = 0; w < workers; ++w) threads.emplace_back(run_worker, w);
            for (auto& th : threads) th.join();
        }

        SimPoint sp;
        sp.ebn0_db = ebn0_db;
        sp.trials = cfg.trials_per_point;
        for (int w = 0; w < workers; ++w) {
            sp.bit_errors += bit_errs[static_cast<std::size_t>(w)];
            sp.function_errors += func_errs[static_cast<std::size_t>(w)];
        }
        const std::uint64_t total_bits = sp.trials * static_cast<std::uint64_t>(SimConfig::data_bit_count);
        sp.ber = static_cast<double>(sp.bit_errors) / static_cast<double>(total_bits);
        sp.fer = static_cast<double>(sp.function_errors) / static_cast<double>(sp.trials);
        std::tie(sp.ber_ci_lo, sp.ber_ci_hi) = wilson_interval_95(sp.bit_errors, total_bits);
        std::tie(sp.fer_ci_lo, sp.fer_ci_hi) = wilson_interval_95(sp.function_errors, sp.trials);
        result.points.push_back(sp);
    }
    return result;
}

double union_bound_fer(const SefccCode& code, const BooleanFunction& f, double ebn0_db, double code_rate) {
    if (f.k != 7) throw std::invalid_argument("union_bound_fer: function domain must be F_2^7");
    const auto& enc = code.encoding_bits();

    // Ordered cross-class pair counts per encoding distance.
    std::array<std::uint64_t, 10> pairs{};
    for (int u = 0; u < 128; ++u) {
        for (int v = 0; v < 128; ++v) {
            if (f(static_cast<std::uint32_t>(u)) == f(static_cast<std::uint32_t>(v))) continue;
            ++pairs[static_cast<std::size_t>(
                std::popcount(static_cast<std::uint16_t>(enc[static_cast<std::size_t>(u)] ^
                                                         enc[static_cast<std::size_t>(v)])))];
        }
    }
    const double ebn0 = std::pow(10.0, ebn0_db / 10.0);
    double bound = 0.0;
    for (int d = 1; d <= 9; ++d) {
        if (!pairs[static_cast<std::size_t>(d)]) continue;
        const double q = 0.5 * std::erfc(std::sqrt(code_rate * ebn0 * static_cast<double>(d)));
        bound += static_cast<double>(pairs[static_cast<std::size_t>(d)]) * q;
    }
    return bound / 128.0;
}

}  // namespace sefcc
