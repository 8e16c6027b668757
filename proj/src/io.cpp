#include "sefcc/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace sefcc {

namespace {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

std::string format_rate(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6e", x);
    return buf;
}

void append_point_columns(std::ostringstream& out, const SimPoint& p) {
    out << p.bit_errors << ',' << format_rate(p.ber) << ',' << format_rate(p.ber_ci_lo) << ','
        << format_rate(p.ber_ci_hi) << ',' << p.function_errors << ',' << format_rate(p.fer) << ','
        << format_rate(p.fer_ci_lo) << ',' << format_rate(p.fer_ci_hi);
}

}  // namespace

ParityAssignment load_assignment(const std::filesystem::path& path) {
    try {
        return parse_assignment(read_text_file(path));
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(path.string() + ": " + e.what());
    }
}

void save_assignment(const std::filesystem::path& path, const ParityAssignment& pa) {
    write_text_file(path, format_assignment(pa) + "\n");
}

std::string spectrum_csv(const DistanceSpectrum& s) {
    std::ostringstream out;
    out << "d,count\n";
    for (int d = 0; d <= 9; ++d) out << d << ',' << s.counts[static_cast<std::size_t>(d)] << '\n';
    return out.str();
}

std::string simulation_csv(const SimResult& result, const std::string& code_id, std::uint64_t seed) {
    std::ostringstream out;
    out << "# code=" << code_id << "\n# seed=" << seed << "\n# rate=7/9 (7 data bits per 9 coded bits)\n";
    out << "ebn0_db,trials,bit_errors,ber,ber_ci_lo,ber_ci_hi,func_errors,fer,fer_ci_lo,fer_ci_hi\n";
    for (const SimPoint& p : result.points) {
        out << format_double(p.ebn0_db) << ',' << p.trials << ',' << p.bit_errors << ',' << format_rate(p.ber) << ','
            << format_rate(p.ber_ci_lo) << ',' << format_rate(p.ber_ci_hi) << ',' << p.function_errors << ','
            << format_rate(p.fer) << ',' << format_rate(p.fer_ci_lo) << ',' << format_rate(p.fer_ci_hi) << '\n';
    }
    return out.str();
}

std::string comparison_csv(const SimResult& a, const SimResult& b, const std::string& id_a, const std::string& id_b,
                           std::uint64_t seed) {
    if (a.points.size() != b.points.size())
        throw std::invalid_argument("comparison_csv: results cover different sweeps");
    std::ostringstream out;
    out << "# code_a=" << id_a << "\n# code_b=" << id_b << "\n# seed=" << seed
        << "\n# rate=7/9 (7 data bits per 9 coded bits)\n";
    out << "ebn0_db,trials,bit_errors_a,ber_a,ber_ci_lo_a,ber_ci_hi_a,func_errors_a,fer_a,fer_ci_lo_a,fer_ci_hi_a,"
           "bit_errors_b,ber_b,ber_ci_lo_b,ber_ci_hi_b,func_errors_b,fer_b,fer_ci_lo_b,fer_ci_hi_b\n";
    for (std::size_t i = 0; i < a.points.size(); ++i) {
        const SimPoint& pa = a.points[i];
        const SimPoint& pb = b.points[i];
        if (pa.ebn0_db != pb.ebn0_db || pa.trials != pb.trials)
            throw std::invalid_argument("comparison_csv: mismatched sweep points");
        out << format_double(pa.ebn0_db) << ',' << pa.trials << ',';
        append_point_columns(out, pa);
        out << ',';
        append_point_columns(out, pb);
        out << '\n';
    }
    return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string file_hash_hex(const std::filesystem::path& path) { return fnv1a_hex(read_text_file(path)); }

std::string RunManifest::to_json() const {
    nlohmann::json j;
    j["subcommand"] = subcommand;
    j["parameters"] = parameters;
    j["inputs"] = input_hashes;
    j["outputs"] = output_hashes;
    return j.dump(2) + "\n";
}

}  // namespace sefcc
