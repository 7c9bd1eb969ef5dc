#ifndef FCC_DISTANCE_MATRIX_HPP
#define FCC_DISTANCE_MATRIX_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "fcc/bitvec.hpp"
#include "fcc/function.hpp"

namespace fcc {

enum class MatrixKind { drm, fdm, custom };

/// Square matrix of pairwise distance requirements. Symmetric with a zero
/// diagonal; construction validates both.
class DistanceMatrix {
public:
    DistanceMatrix(std::size_t size, std::vector<int> entries, MatrixKind kind = MatrixKind::custom);

    static DistanceMatrix zero(std::size_t size, MatrixKind kind = MatrixKind::custom);

    std::size_t size() const { return size_; }
    MatrixKind kind() const { return kind_; }

    int at(std::size_t i, std::size_t j) const { return entries_[i * size_ + j]; }
    void set(std::size_t i, std::size_t j, int value);

    int max_entry() const;
    /// Sum of the strict upper triangle.
    std::uint64_t upper_sum() const;

    bool operator==(const DistanceMatrix& other) const {
        return size_ == other.size_ && entries_ == other.entries_;
    }

private:
    std::size_t size_;
    std::vector<int> entries_;
    MatrixKind kind_;
};

/// Distance requirement matrix over the given messages: entry (i,j) is
/// max(2t+1 - d(u_i, u_j), 0) when f(u_i) != f(u_j), else 0.
DistanceMatrix build_drm(const FiniteFunction& f, unsigned t, std::span<const BitVector> msgs);

/// Minimum Hamming distance between any message with label i and any with
/// label j; zero iff i == j.
std::size_t function_distance(const FiniteFunction& f, std::size_t i, std::size_t j);

/// E x E matrix with entry (i,j) = max(2t+1 - d(f_i, f_j), 0) off-diagonal.
DistanceMatrix build_fdm(const FiniteFunction& f, unsigned t);

/// True iff the representatives hit every label exactly once and their DRM,
/// rows sorted by label, equals the FDM. When true the optimal redundancy is
/// exactly the minimum D-code length of the FDM.
bool check_representative_condition(const FiniteFunction& f, unsigned t, std::span<const BitVector> reps);

} // namespace fcc

#endif
