#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sefcc/word.hpp"

namespace sefcc {

/// Systematic [7,4,3] Hamming encoder: [m1..m4, p1, p2, p3] with
/// p1 = m2^m3^m4, p2 = m1^m3^m4, p3 = m1^m2^m4.
Word encode_hamming(Word m);

struct SphereLocation {
    int sphere;  // codeword index, 0-based
    int slot;    // 0 = center, 1..7 = flipped coordinate
};

/// The [7,4,3] Hamming code with its sphere partition of F_2^7 precomputed.
/// Codeword i (0-based) encodes the i-th 4-bit message in natural binary
/// counting order. Immutable once built; safe to share across threads.
class HammingCodebook {
public:
    HammingCodebook();

    const std::array<Word, 16>& codewords() const { return codewords_; }
    Word codeword(int i) const { return codewords_[static_cast<std::size_t>(i)]; }

    /// Parity-check matrix rows as length-7 words; syndrome bit r = <row r, v>.
    const std::array<Word, 3>& parity_check() const { return parity_check_; }

    /// 1 iff v is a Hamming codeword (zero syndrome).
    int is_member(Word v) const;

    /// Unique (sphere index, slot) with the sphere center within distance 1 of v.
    SphereLocation nearest_codeword(Word v) const;

    int sphere_index(Word v) const { return sphere_index_[v.bits()]; }
    int neighbor_slot(Word v) const { return neighbor_slot_[v.bits()]; }

    /// 16-row table: index, message bits, codeword bits, weight.
    std::string table() const;

private:
    std::array<Word, 16> codewords_;
    std::array<Word, 3> parity_check_;
    std::array<std::uint8_t, 128> sphere_index_;
    std::array<std::uint8_t, 128> neighbor_slot_;
};

/// Graph on the 16 codewords with an edge wherever the Hamming distance is
/// exactly 3, plus the odd/even-weight bipartition.
struct Distance3Graph {
    std::vector<std::pair<int, int>> edges;    // unordered pairs, i < k, sorted
    std::array<std::uint16_t, 16> adjacency;   // vertex bit masks
    std::vector<int> partite_odd;              // 0-based codeword indices, sorted
    std::vector<int> partite_even;
    std::uint16_t odd_mask = 0;
    std::uint16_t even_mask = 0;

    int degree(int v) const { return std::popcount(adjacency[static_cast<std::size_t>(v)]); }
    bool has_edge(int i, int k) const { return (adjacency[static_cast<std::size_t>(i)] >> k) & 1; }
};

Distance3Graph distance3_graph(const HammingCodebook& cb);

}  // namespace sefcc
