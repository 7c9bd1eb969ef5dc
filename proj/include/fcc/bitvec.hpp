#ifndef FCC_BITVEC_HPP
#define FCC_BITVEC_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fcc/errors.hpp"

namespace fcc {

/// Fixed-length binary vector. Bit index 0 is the leftmost character of the
/// textual form, so "0100" has its single 1 at index 1. Length is immutable;
/// values are treated as immutable once built and are safe to share.
///
/// Storage is chunked 64-bit words holding the numeric value of the string
/// (index 0 most significant), so numeric comparison of the words gives the
/// lexicographic order used for tie-breaking.
class BitVector {
public:
    BitVector() : len_(0) {}
    explicit BitVector(std::size_t length) : len_(length), words_((length + 63) / 64, 0) {}

    /// Parse a '0'/'1' string; the empty string gives the length-0 vector.
    static BitVector from_string(std::string_view text);

    /// Vector of the given length whose textual form is `value` written in
    /// binary (leading zeros included). Requires length <= 64.
    static BitVector from_index(std::uint64_t value, std::size_t length);

    std::size_t length() const { return len_; }

    bool get(std::size_t pos) const {
        std::size_t b = len_ - 1 - pos;
        return (words_[b >> 6] >> (b & 63)) & 1;
    }

    /// Copy with the bit at `pos` flipped.
    BitVector with_flipped(std::size_t pos) const {
        BitVector out = *this;
        std::size_t b = len_ - 1 - pos;
        out.words_[b >> 6] ^= std::uint64_t{1} << (b & 63);
        return out;
    }

    /// Numeric value (equals the position of the vector in lexicographic
    /// enumeration of its length class). Requires length <= 64.
    std::uint64_t to_index() const;

    std::size_t weight() const;

    std::string to_string() const;

    std::span<const std::uint64_t> words() const { return words_; }

    friend BitVector operator^(const BitVector& a, const BitVector& b);

    bool operator==(const BitVector& other) const {
        return len_ == other.len_ && words_ == other.words_;
    }

    /// Lexicographic order on the textual form (index 0 most significant).
    std::strong_ordering operator<=>(const BitVector& other) const;

private:
    // OR `src`'s value into this one, shifted up by `shift` bit positions.
    void or_shifted(const BitVector& src, std::size_t shift);

    std::size_t len_;
    std::vector<std::uint64_t> words_;

    friend BitVector concat(const BitVector&, const BitVector&);
    friend BitVector repeat(const BitVector&, unsigned);
};

/// Number of positions where a and b differ.
std::size_t hamming_distance(const BitVector& a, const BitVector& b);

/// Number of 1-bits.
std::size_t hamming_weight(const BitVector& a);

/// t-fold concatenation of a with itself; t >= 1.
BitVector repeat(const BitVector& a, unsigned t);

/// a followed by b.
BitVector concat(const BitVector& a, const BitVector& b);

/// All vectors within Hamming distance `radius` of `center`, in lexicographic
/// order. Materializes the whole ball; use for_each_in_ball for streaming.
std::vector<BitVector> enumerate_ball(const BitVector& center, std::size_t radius);

/// Visit every vector within distance `radius` of `center`, in increasing
/// flip-count order (ties in unspecified order).
void for_each_in_ball(const BitVector& center, std::size_t radius,
                      const std::function<void(const BitVector&)>& visit);

/// Sum of binomial coefficients C(n, 0..radius): the size of a Hamming ball.
std::uint64_t ball_size(std::size_t n, std::size_t radius);

/// All XOR masks over `n` bit positions with at most `radius` bits set,
/// n <= 64. Shared by the exhaustive neighborhood scans; weight-major order.
std::vector<std::uint64_t> flip_masks(std::size_t n, std::size_t radius);

} // namespace fcc

#endif
