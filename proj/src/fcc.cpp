#include "sefcc/fcc.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace sefcc {

std::uint32_t ParityAssignment::pack() const {
    std::uint32_t code = 0;
    for (int i = 0; i < 16; ++i)
        code |= static_cast<std::uint32_t>(parities[static_cast<std::size_t>(i)].bits()) << (2 * i);
    return code;
}

ParityAssignment ParityAssignment::unpack(std::uint32_t code) {
    ParityAssignment pa;
    for (int i = 0; i < 16; ++i)
        pa.parities[static_cast<std::size_t>(i)] = Word(static_cast<std::uint16_t>((code >> (2 * i)) & 3), 2);
    return pa;
}

SefccCode::SefccCode(const HammingCodebook& cb, const ParityAssignment& pa) : cb_(&cb), assignment_(pa) {
    for (std::uint16_t u = 0; u < 128; ++u) {
        const Word v(u, 7);
        const int i = cb.sphere_index(v);
        const Word center_parity = pa.parities[static_cast<std::size_t>(i)];
        const Word p = cb.neighbor_slot(v) == 0 ? center_parity : center_parity.complement();
        full_parity_[u] = static_cast<std::uint8_t>(p.bits());
        encoding_bits_[u] = static_cast<std::uint16_t>((u << 2) | p.bits());
    }
}

SefccCode extend_to_full(const ParityAssignment& pa, const HammingCodebook& cb) { return SefccCode(cb, pa); }

Word encode(const SefccCode& code, Word u) {
    if (u.length() != 7)
        throw std::invalid_argument("encode: expected word length 7, got " + std::to_string(u.length()));
    return code.encoding(u);
}

bool is_valid(const ParityAssignment& pa, const Distance3Graph& g) {
    for (const auto& [i, k] : g.edges) {
        const Word pi = pa.parities[static_cast<std::size_t>(i)];
        const Word pk = pa.parities[static_cast<std::size_t>(k)];
        if (pi == pk.complement()) return false;
    }
    return true;
}

bool has_dmin_2(const ParityAssignment& pa, const Distance3Graph& g) {
    if (!is_valid(pa, g))
        throw std::invalid_argument("has_dmin_2: assignment is not a valid SEFCC parity assignment");
    for (const auto& [i, k] : g.edges)
        if (pa.parities[static_cast<std::size_t>(i)] == pa.parities[static_cast<std::size_t>(k)]) return false;
    return true;
}

DistanceMatrix distance_matrix(const SefccCode& code) {
    DistanceMatrix m;
    const auto& enc = code.encoding_bits();
    for (int i = 0; i < 128; ++i)
        for (int j = 0; j < 128; ++j)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(
                std::popcount(static_cast<std::uint16_t>(enc[static_cast<std::size_t>(i)] ^
                                                         enc[static_cast<std::size_t>(j)])));
    return m;
}

DistanceSpectrum spectrum(const SefccCode& code) {
    DistanceSpectrum s;
    const auto& enc = code.encoding_bits();
    for (int i = 0; i < 128; ++i)
        for (int j = i + 1; j < 128; ++j)
            ++s.counts[static_cast<std::size_t>(std::popcount(
                static_cast<std::uint16_t>(enc[static_cast<std::size_t>(i)] ^ enc[static_cast<std::size_t>(j)])))];
    std::uint64_t weighted = 0;
    for (int d = 0; d <= 9; ++d) weighted += static_cast<std::uint64_t>(d) * s.counts[static_cast<std::size_t>(d)];
    s.sum_distance = 2 * weighted;
    s.d_min = 9;
    for (int d = 0; d <= 9; ++d) {
        if (s.counts[static_cast<std::size_t>(d)] > 0) {
            s.d_min = d;
            break;
        }
    }
    return s;
}

BooleanFunction make_boolean_function(int k, std::vector<std::uint8_t> truth) {
    if (k < 1 || k > 10)
        throw std::invalid_argument("BooleanFunction: k must be in [1,10], got " + std::to_string(k));
    if (truth.size() != (1u << k))
        throw std::invalid_argument("BooleanFunction: truth table size " + std::to_string(truth.size()) +
                                    " does not match 2^" + std::to_string(k));
    for (std::uint8_t b : truth)
        if (b > 1) throw std::invalid_argument("BooleanFunction: truth table entries must be bits");
    return BooleanFunction{k, std::move(truth)};
}

BooleanFunction hamming_membership(const HammingCodebook& cb) {
    std::vector<std::uint8_t> truth(128);
    for (std::uint16_t u = 0; u < 128; ++u) truth[u] = static_cast<std::uint8_t>(cb.is_member(Word(u, 7)));
    return BooleanFunction{7, std::move(truth)};
}

namespace {

void check_subset(std::span<const int> subset, const std::vector<int>& partite, const char* name) {
    if (subset.size() != 4)
        throw std::invalid_argument(std::string("construct_max_sum: ") + name + " must have exactly 4 elements, got " +
                                    std::to_string(subset.size()));
    for (std::size_t a = 0; a < subset.size(); ++a)
        for (std::size_t b = a + 1; b < subset.size(); ++b)
            if (subset[a] == subset[b])
                throw std::invalid_argument(std::string("construct_max_sum: ") + name + " has a repeated index");
    for (int idx : subset)
        if (std::find(partite.begin(), partite.end(), idx) == partite.end())
            throw std::invalid_argument(std::string("construct_max_sum: index ") + std::to_string(idx) +
                                        " is not in the " + name + " partite set");
}

}  // namespace

ParityAssignment construct_max_sum(std::span<const int> odd_subset, std::span<const int> even_subset,
                                   bool swap_pair_roles, const Distance3Graph& g) {
    check_subset(odd_subset, g.partite_odd, "odd_subset");
    check_subset(even_subset, g.partite_even, "even_subset");

    // Pair set P1 = {00, 11} and P2 = {01, 10}; the subset picks the first
    // element of the pair, the rest of the partite set gets the second.
    const Word p1a(0b00, 2), p1b(0b11, 2), p2a(0b01, 2), p2b(0b10, 2);
    const Word odd_first = swap_pair_roles ? p2a : p1a;
    const Word odd_rest = swap_pair_roles ? p2b : p1b;
    const Word even_first = swap_pair_roles ? p1a : p2a;
    const Word even_rest = swap_pair_roles ? p1b : p2b;

    ParityAssignment pa;
    for (int i : g.partite_odd)
        pa.parities[static_cast<std::size_t>(i)] =
            std::find(odd_subset.begin(), odd_subset.end(), i) != odd_subset.end() ? odd_first : odd_rest;
    for (int i : g.partite_even)
        pa.parities[static_cast<std::size_t>(i)] =
            std::find(even_subset.begin(), even_subset.end(), i) != even_subset.end() ? even_first : even_rest;
    return pa;
}

std::vector<Word> construct_optimal_fer(const BooleanFunction& f, Word p) {
    if (p.length() != 2)
        throw std::invalid_argument("construct_optimal_fer: parity must have length 2, got " +
                                    std::to_string(p.length()));
    std::vector<Word> map;
    map.reserve(f.domain_size());
    const Word pc = p.complement();
    for (std::uint32_t u = 0; u < f.domain_size(); ++u) map.push_back(f(u) ? pc : p);
    return map;
}

ParityAssignment optimal_fer_assignment(Word p) {
    if (p.length() != 2)
        throw std::invalid_argument("optimal_fer_assignment: parity must have length 2, got " +
                                    std::to_string(p.length()));
    ParityAssignment pa;
    pa.parities.fill(p.complement());
    return pa;
}

std::string format_assignment(const ParityAssignment& pa) {
    std::string out;
    out.reserve(16 * 3);
    for (int i = 0; i < 16; ++i) {
        if (i) out += ' ';
        out += pa.parities[static_cast<std::size_t>(i)].to_string();
    }
    return out;
}

ParityAssignment parse_assignment(std::string_view text) {
    ParityAssignment pa;
    std::size_t pos = 0;
    int count = 0;
    while (pos < text.size()) {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' || text[pos] == '\r'))
            ++pos;
        if (pos >= text.size()) break;
        std::size_t end = pos;
        while (end < text.size() && text[end] != ' ' && text[end] != '\t' && text[end] != '\n' && text[end] != '\r')
            ++end;
        const std::string_view token = text.substr(pos, end - pos);
        if (count >= 16)
            throw std::invalid_argument("parse_assignment: more than 16 tokens (extra token '" + std::string(token) +
                                        "')");
        if (token.size() != 2 || (token[0] != '0' && token[0] != '1') || (token[1] != '0' && token[1] != '1'))
            throw std::invalid_argument("parse_assignment: token " + std::to_string(count + 1) + " ('" +
                                        std::string(token) + "') is not a 2-character binary parity");
        pa.parities[static_cast<std::size_t>(count)] = Word::parse(token);
        ++count;
        pos = end;
    }
    if (count != 16)
        throw std::invalid_argument("parse_assignment: expected 16 tokens, got " + std::to_string(count));
    return pa;
}

int cross_class_min_distance(const SefccCode& code, const BooleanFunction& f) {
    if (f.k != 7)
        throw std::invalid_argument("cross_class_min_distance: function domain must be F_2^7");
    const auto& enc = code.encoding_bits();
    int best = 9;
    for (int u = 0; u < 128; ++u) {
        if (!f(static_cast<std::uint32_t>(u))) continue;
        for (int v = 0; v < 128; ++v) {
            if (f(static_cast<std::uint32_t>(v))) continue;
            best = std::min(best, std::popcount(static_cast<std::uint16_t>(enc[static_cast<std::size_t>(u)] ^
                                                                           enc[static_cast<std::size_t>(v)])));
        }
    }
    return best;
}

}  // namespace sefcc
