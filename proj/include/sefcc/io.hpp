#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "sefcc/channel.hpp"
#include "sefcc/fcc.hpp"

namespace sefcc {

ParityAssignment load_assignment(const std::filesystem::path& path);
void save_assignment(const std::filesystem::path& path, const ParityAssignment& pa);

/// CSV rows `d,count` for d = 0..9, with header.
std::string spectrum_csv(const DistanceSpectrum& s);

/// Simulation CSV: `#`-prefixed metadata lines (seed, code id, rate
/// convention), a header row, then one row per Eb/N0 point.
std::string simulation_csv(const SimResult& result, const std::string& code_id, std::uint64_t seed);

/// Joined CSV for two codes over the same sweep, columns suffixed _a/_b.
std::string comparison_csv(const SimResult& a, const SimResult& b, const std::string& id_a, const std::string& id_b,
                           std::uint64_t seed);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& content);

/// FNV-1a 64-bit content hash, as fixed-width hex.
std::string fnv1a_hex(const std::string& bytes);
std::string file_hash_hex(const std::filesystem::path& path);

/// Record of one CLI run: subcommand, resolved parameters, input file hashes
/// and output file hashes. Serializes deterministically (sorted keys).
struct RunManifest {
    std::string subcommand;
    std::map<std::string, std::string> parameters;
    std::map<std::string, std::string> input_hashes;
    std::map<std::string, std::string> output_hashes;

    std::string to_json() const;
};

}  // namespace sefcc
