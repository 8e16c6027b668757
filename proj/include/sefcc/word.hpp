#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sefcc {

/// Fixed-length binary vector (length 2..9) stored as an unsigned bit set.
///
/// Coordinate 1 is the most significant stored bit, so the integer value of
/// `bits()` equals the vector read as a binary numeral and the natural binary
/// counting order of F_2^len coincides with integer order of `bits()`.
class Word {
public:
    static constexpr int kMinLen = 2;
    static constexpr int kMaxLen = 9;

    constexpr Word(std::uint16_t bits, int len) : bits_(bits), len_(static_cast<std::uint8_t>(len)) {
        if (len < kMinLen || len > kMaxLen)
            throw std::invalid_argument("Word: length must be in [2,9], got " + std::to_string(len));
        if (bits >= (1u << len))
            throw std::invalid_argument("Word: bits " + std::to_string(bits) + " out of range for length " +
                                        std::to_string(len));
    }

    constexpr std::uint16_t bits() const { return bits_; }
    constexpr int length() const { return len_; }

    /// Coordinate j, 1-based from the left.
    constexpr int coordinate(int j) const {
        if (j < 1 || j > len_) throw std::out_of_range("Word: coordinate index " + std::to_string(j));
        return (bits_ >> (len_ - j)) & 1;
    }

    constexpr Word with_flipped(int j) const {
        if (j < 1 || j > len_) throw std::out_of_range("Word: coordinate index " + std::to_string(j));
        return Word(static_cast<std::uint16_t>(bits_ ^ (1u << (len_ - j))), len_);
    }

    constexpr int weight() const { return std::popcount(bits_); }

    constexpr Word complement() const {
        return Word(static_cast<std::uint16_t>(~bits_ & ((1u << len_) - 1)), len_);
    }

    friend constexpr Word operator^(Word a, Word b) {
        if (a.len_ != b.len_)
            throw std::invalid_argument("Word: XOR of mismatched lengths " + std::to_string(a.len_) + " vs " +
                                        std::to_string(b.len_));
        return Word(static_cast<std::uint16_t>(a.bits_ ^ b.bits_), a.len_);
    }

    friend constexpr bool operator==(Word a, Word b) { return a.bits_ == b.bits_ && a.len_ == b.len_; }
    friend constexpr auto operator<=>(Word a, Word b) {
        if (auto c = a.len_ <=> b.len_; c != 0) return c;
        return a.bits_ <=> b.bits_;
    }

    std::string to_string() const {
        std::string s(len_, '0');
        for (int j = 1; j <= len_; ++j) s[j - 1] = static_cast<char>('0' + coordinate(j));
        return s;
    }

    static Word parse(std::string_view text) {
        const int len = static_cast<int>(text.size());
        if (len < kMinLen || len > kMaxLen)
            throw std::invalid_argument("Word: cannot parse '" + std::string(text) + "' (bad length)");
        std::uint16_t bits = 0;
        for (char c : text) {
            if (c != '0' && c != '1')
                throw std::invalid_argument("Word: cannot parse '" + std::string(text) + "' (non-binary digit)");
            bits = static_cast<std::uint16_t>((bits << 1) | (c - '0'));
        }
        return Word(bits, len);
    }

private:
    std::uint16_t bits_;
    std::uint8_t len_;
};

/// Number of positions where the bits of x and y differ. Throws on length mismatch.
constexpr int hamming_distance(Word x, Word y) {
    if (x.length() != y.length())
        throw std::invalid_argument("hamming_distance: length mismatch " + std::to_string(x.length()) + " vs " +
                                    std::to_string(y.length()));
    return std::popcount(static_cast<std::uint16_t>(x.bits() ^ y.bits()));
}

}  // namespace sefcc
