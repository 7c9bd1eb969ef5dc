#include "fcc/bitvec.hpp"

#include <algorithm>
#include <bit>

namespace fcc {

BitVector BitVector::from_string(std::string_view text) {
    BitVector out(text.size());
    for (std::size_t pos = 0; pos < text.size(); ++pos) {
        char c = text[pos];
        if (c == '1') {
            std::size_t b = text.size() - 1 - pos;
            out.words_[b >> 6] |= std::uint64_t{1} << (b & 63);
        } else if (c != '0') {
            throw InvalidParameter("bit string may contain only '0'/'1', got '" + std::string(1, c) + "'");
        }
    }
    return out;
}

BitVector BitVector::from_index(std::uint64_t value, std::size_t length) {
    if (length > 64)
        throw InvalidParameter("from_index supports lengths up to 64, got " + std::to_string(length));
    if (length < 64 && (value >> length) != 0)
        throw InvalidParameter("index " + std::to_string(value) + " does not fit in " + std::to_string(length) + " bits");
    BitVector out(length);
    if (length > 0) out.words_[0] = value;
    return out;
}

std::uint64_t BitVector::to_index() const {
    if (len_ > 64)
        throw InvalidParameter("to_index requires length <= 64, got " + std::to_string(len_));
    return len_ == 0 ? 0 : words_[0];
}

std::size_t BitVector::weight() const {
    std::size_t w = 0;
    for (std::uint64_t word : words_) w += std::popcount(word);
    return w;
}

std::string BitVector::to_string() const {
    std::string s(len_, '0');
    for (std::size_t pos = 0; pos < len_; ++pos)
        if (get(pos)) s[pos] = '1';
    return s;
}

std::strong_ordering BitVector::operator<=>(const BitVector& other) const {
    if (len_ != other.len_) return len_ <=> other.len_;
    for (std::size_t i = words_.size(); i-- > 0;) {
        if (words_[i] != other.words_[i]) return words_[i] <=> other.words_[i];
    }
    return std::strong_ordering::equal;
}

BitVector operator^(const BitVector& a, const BitVector& b) {
    if (a.len_ != b.len_) throw LengthMismatch(a.len_, b.len_);
    BitVector out = a;
    for (std::size_t i = 0; i < out.words_.size(); ++i) out.words_[i] ^= b.words_[i];
    return out;
}

void BitVector::or_shifted(const BitVector& src, std::size_t shift) {
    std::size_t word_shift = shift >> 6;
    std::size_t bit_shift = shift & 63;
    for (std::size_t i = 0; i < src.words_.size(); ++i) {
        std::uint64_t w = src.words_[i];
        if (w == 0) continue;
        words_[i + word_shift] |= w << bit_shift;
        if (bit_shift != 0 && i + word_shift + 1 < words_.size())
            words_[i + word_shift + 1] |= w >> (64 - bit_shift);
    }
}

std::size_t hamming_distance(const BitVector& a, const BitVector& b) {
    if (a.length() != b.length()) throw LengthMismatch(a.length(), b.length());
    std::size_t d = 0;
    auto wa = a.words(), wb = b.words();
    for (std::size_t i = 0; i < wa.size(); ++i) d += std::popcount(wa[i] ^ wb[i]);
    return d;
}

std::size_t hamming_weight(const BitVector& a) { return a.weight(); }

BitVector repeat(const BitVector& a, unsigned t) {
    if (t == 0) throw InvalidParameter("repeat count must be >= 1");
    BitVector out(a.length() * t);
    for (unsigned i = 0; i < t; ++i) out.or_shifted(a, std::size_t{i} * a.length());
    return out;
}

BitVector concat(const BitVector& a, const BitVector& b) {
    BitVector out(a.length() + b.length());
    out.or_shifted(b, 0);
    out.or_shifted(a, b.length());
    return out;
}

namespace {

// Recursively choose flip positions first < ... < last, depth remaining.
void visit_flips(const BitVector& current, std::size_t next_pos, std::size_t flips_left,
                 const std::function<void(const BitVector&)>& visit) {
    visit(current);
    if (flips_left == 0) return;
    for (std::size_t p = next_pos; p < current.length(); ++p)
        visit_flips(current.with_flipped(p), p + 1, flips_left - 1, visit);
}

} // namespace

void for_each_in_ball(const BitVector& center, std::size_t radius,
                      const std::function<void(const BitVector&)>& visit) {
    visit_flips(center, 0, std::min(radius, center.length()), visit);
}

std::vector<BitVector> enumerate_ball(const BitVector& center, std::size_t radius) {
    std::vector<BitVector> out;
    out.reserve(center.length() <= 63 ? ball_size(center.length(), radius) : 0);
    for_each_in_ball(center, radius, [&](const BitVector& v) { out.push_back(v); });
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t ball_size(std::size_t n, std::size_t radius) {
    std::uint64_t total = 0, binom = 1;
    for (std::size_t i = 0; i <= std::min(radius, n); ++i) {
        total += binom;
        binom = binom * (n - i) / (i + 1);
    }
    return total;
}

std::vector<std::uint64_t> flip_masks(std::size_t n, std::size_t radius) {
    if (n > 64) throw InvalidParameter("flip_masks requires n <= 64");
    std::vector<std::uint64_t> masks;
    masks.reserve(ball_size(n, std::min(radius, n)));
    masks.push_back(0);
    for (std::size_t w = 1; w <= std::min(radius, n); ++w) {
        // Gosper's hack over n-bit masks of popcount w.
        std::uint64_t m = (std::uint64_t{1} << w) - 1;
        std::uint64_t limit = (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
        while (m <= limit) {
            masks.push_back(m);
            std::uint64_t c = m & (~m + 1);
            std::uint64_t r = m + c;
            if (r == 0) break;
            m = (((r ^ m) >> 2) / c) | r;
        }
    }
    return masks;
}

} // namespace fcc
