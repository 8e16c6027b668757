#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sefcc/hamming.hpp"
#include "sefcc/word.hpp"

namespace sefcc {

/// One 2-bit parity per Hamming codeword, in codeword-index order. This is
/// the entire degree of freedom of an optimal single-error-correcting FCC
/// for the Hamming membership function.
struct ParityAssignment {
    std::array<Word, 16> parities;

    ParityAssignment() : parities{Word(0, 2), Word(0, 2), Word(0, 2), Word(0, 2), Word(0, 2), Word(0, 2),
                                  Word(0, 2), Word(0, 2), Word(0, 2), Word(0, 2), Word(0, 2), Word(0, 2),
                                  Word(0, 2), Word(0, 2), Word(0, 2), Word(0, 2)} {}

    /// 2 bits per codeword, entry i at bit 2i. Packs the whole assignment
    /// into 32 bits; handy as a set key and as the census search state.
    std::uint32_t pack() const;
    static ParityAssignment unpack(std::uint32_t code);

    friend bool operator==(const ParityAssignment& a, const ParityAssignment& b) = default;
};

/// A complete SEFCC encoder: the codeword parities extended to all of F_2^7
/// by the complementary rule, with all 128 encodings precomputed.
class SefccCode {
public:
    SefccCode(const HammingCodebook& cb, const ParityAssignment& pa);

    const HammingCodebook& codebook() const { return *cb_; }
    const ParityAssignment& assignment() const { return assignment_; }

    Word full_parity(Word u) const { return Word(full_parity_[u.bits()], 2); }
    Word encoding(Word u) const { return Word(encoding_bits_[u.bits()], 9); }

    /// Encodings as raw 9-bit values, indexed in natural binary counting
    /// order of F_2^7.
    const std::array<std::uint16_t, 128>& encoding_bits() const { return encoding_bits_; }

private:
    const HammingCodebook* cb_;
    ParityAssignment assignment_;
    std::array<std::uint8_t, 128> full_parity_;
    std::array<std::uint16_t, 128> encoding_bits_;
};

/// Extends codeword parities to all of F_2^7: each sphere center keeps its
/// parity, its 7 neighbors receive the bitwise complement.
SefccCode extend_to_full(const ParityAssignment& pa, const HammingCodebook& cb);

/// Systematic encoding [u, p(u)] of a 7-bit word into 9 bits.
Word encode(const SefccCode& code, Word u);

/// True iff no distance-3 codeword pair carries complementary parities,
/// which is exactly the condition for every cross-class encoding pair to
/// sit at distance >= 3.
bool is_valid(const ParityAssignment& pa, const Distance3Graph& g);

/// True iff additionally no distance-3 codeword pair carries equal parities,
/// which lifts the code minimum distance from 1 to 2. Requires a valid
/// assignment; throws std::invalid_argument otherwise.
bool has_dmin_2(const ParityAssignment& pa, const Distance3Graph& g);

/// 128x128 pairwise encoding distances, indexed in natural binary counting
/// order of F_2^7.
using DistanceMatrix = std::array<std::array<std::uint8_t, 128>, 128>;
DistanceMatrix distance_matrix(const SefccCode& code);

/// Distance counts over unordered distinct encoding pairs, d = 0..9, plus
/// d_min and the ordered-pair sum distance (= 2 * sum of d * N_d).
struct DistanceSpectrum {
    std::array<std::uint64_t, 10> counts{};
    int d_min = 0;
    std::uint64_t sum_distance = 0;
};

DistanceSpectrum spectrum(const SefccCode& code);

/// Truth table of a boolean function on F_2^k, k <= 10, indexed in natural
/// binary counting order.
struct BooleanFunction {
    int k = 0;
    std::vector<std::uint8_t> truth;

    int operator()(std::uint32_t rank) const { return truth[rank]; }
    std::uint32_t domain_size() const { return 1u << k; }
};

BooleanFunction make_boolean_function(int k, std::vector<std::uint8_t> truth);

/// The Hamming-code membership function on F_2^7: 1 on the 16 codewords,
/// 0 on the 112 non-codewords.
BooleanFunction hamming_membership(const HammingCodebook& cb);

/// Bipartition-based construction: the odd partite set takes parities from
/// {00,11} (odd_subset -> 00, rest -> 11), the even partite set from {01,10}
/// (even_subset -> 01, rest -> 10). With swap_pair_roles the two pair sets
/// trade sides. Subsets are 0-based codeword indices and must be 4-element
/// subsets of the matching partite set.
ParityAssignment construct_max_sum(std::span<const int> odd_subset, std::span<const int> even_subset,
                                   bool swap_pair_roles, const Distance3Graph& g);

/// Parity map over F_2^k that assigns p wherever f = 0 and the complement of
/// p wherever f = 1, indexed in natural binary counting order. Maximizes the
/// parity distance of every cross-class pair simultaneously.
std::vector<Word> construct_optimal_fer(const BooleanFunction& f, Word p);

/// The codeword-parity assignment induced by construct_optimal_fer for the
/// Hamming membership function: all 16 entries equal to the complement of p.
ParityAssignment optimal_fer_assignment(Word p);

/// Minimum encoding distance over all pairs with f(u) != f(v). The code is a
/// single-error-correcting FCC for f iff the result is >= 3.
int cross_class_min_distance(const SefccCode& code, const BooleanFunction& f);

/// 16 two-character binary tokens in codeword-index order, space separated.
std::string format_assignment(const ParityAssignment& pa);

/// Parses the token format; throws std::invalid_argument with the offending
/// token index on malformed input.
ParityAssignment parse_assignment(std::string_view text);

}  // namespace sefcc
