#include "sefcc/hamming.hpp"

#include <sstream>
#include <stdexcept>

namespace sefcc {

Word encode_hamming(Word m) {
    if (m.length() != 4)
        throw std::invalid_argument("encode_hamming: expected message length 4, got " +
                                    std::to_string(m.length()));
    const int m1 = m.coordinate(1), m2 = m.coordinate(2), m3 = m.coordinate(3), m4 = m.coordinate(4);
    const int p1 = m2 ^ m3 ^ m4;
    const int p2 = m1 ^ m3 ^ m4;
    const int p3 = m1 ^ m2 ^ m4;
    return Word(static_cast<std::uint16_t>((m.bits() << 3) | (p1 << 2) | (p2 << 1) | p3), 7);
}

HammingCodebook::HammingCodebook()
    : codewords_{Word(0, 7), Word(0, 7), Word(0, 7), Word(0, 7), Word(0, 7), Word(0, 7), Word(0, 7), Word(0, 7),
                 Word(0, 7), Word(0, 7), Word(0, 7), Word(0, 7), Word(0, 7), Word(0, 7), Word(0, 7), Word(0, 7)},
      parity_check_{Word(0b0111100, 7), Word(0b1011010, 7), Word(0b1101001, 7)} {
    for (std::uint16_t m = 0; m < 16; ++m) codewords_[m] = encode_hamming(Word(m, 4));

    // Sphere tables: every v in F_2^7 lies within distance 1 of a unique codeword.
    sphere_index_.fill(0xff);
    for (int i = 0; i < 16; ++i) {
        const Word c = codewords_[static_cast<std::size_t>(i)];
        sphere_index_[c.bits()] = static_cast<std::uint8_t>(i);
        neighbor_slot_[c.bits()] = 0;
        for (int j = 1; j <= 7; ++j) {
            const Word u = c.with_flipped(j);
            if (sphere_index_[u.bits()] != 0xff)
                throw std::logic_error("HammingCodebook: sphere overlap, code is not perfect");
            sphere_index_[u.bits()] = static_cast<std::uint8_t>(i);
            neighbor_slot_[u.bits()] = static_cast<std::uint8_t>(j);
        }
    }
    for (int v = 0; v < 128; ++v)
        if (sphere_index_[static_cast<std::size_t>(v)] == 0xff)
            throw std::logic_error("HammingCodebook: sphere partition does not cover F_2^7");
}

int HammingCodebook::is_member(Word v) const {
    if (v.length() != 7)
        throw std::invalid_argument("is_member: expected word length 7, got " + std::to_string(v.length()));
    for (const Word& row : parity_check_)
        if (std::popcount(static_cast<std::uint16_t>(row.bits() & v.bits())) & 1) return 0;
    return 1;
}

SphereLocation HammingCodebook::nearest_codeword(Word v) const {
    if (v.length() != 7)
        throw std::invalid_argument("nearest_codeword: expected word length 7, got " +
                                    std::to_string(v.length()));
    return {sphere_index_[v.bits()], neighbor_slot_[v.bits()]};
}

std::string HammingCodebook::table() const {
    std::ostringstream out;
    for (int i = 0; i < 16; ++i) {
        const Word c = codewords_[static_cast<std::size_t>(i)];
        const Word m(static_cast<std::uint16_t>(c.bits() >> 3), 4);
        out << (i + 1 < 10 ? " " : "") << (i + 1) << "  " << m.to_string() << "  " << c.to_string() << "  "
            << c.weight() << "\n";
    }
    return out.str();
}

Distance3Graph distance3_graph(const HammingCodebook& cb) {
    Distance3Graph g;
    g.adjacency.fill(0);
    for (int i = 0; i < 16; ++i) {
        for (int k = i + 1; k < 16; ++k) {
            if (hamming_distance(cb.codeword(i), cb.codeword(k)) == 3) {
                g.edges.emplace_back(i, k);
                g.adjacency[static_cast<std::size_t>(i)] |= static_cast<std::uint16_t>(1u << k);
                g.adjacency[static_cast<std::size_t>(k)] |= static_cast<std::uint16_t>(1u << i);
            }
        }
    }
    for (int i = 0; i < 16; ++i) {
        if (cb.codeword(i).weight() & 1) {
            g.partite_odd.push_back(i);
            g.odd_mask |= static_cast<std::uint16_t>(1u << i);
        } else {
            g.partite_even.push_back(i);
            g.even_mask |= static_cast<std::uint16_t>(1u << i);
        }
    }
    return g;
}

}  // namespace sefcc
