#include "fcc/distance_matrix.hpp"

#include <algorithm>
#include <bit>

namespace fcc {

DistanceMatrix::DistanceMatrix(std::size_t size, std::vector<int> entries, MatrixKind kind)
    : size_(size), entries_(std::move(entries)), kind_(kind) {
    if (size_ == 0) throw InvalidParameter("distance matrix must have at least one row");
    if (entries_.size() != size_ * size_)
        throw InvalidParameter("distance matrix needs " + std::to_string(size_ * size_) + " entries");
    for (std::size_t i = 0; i < size_; ++i) {
        if (at(i, i) != 0) throw InvalidParameter("distance matrix diagonal must be zero");
        for (std::size_t j = i + 1; j < size_; ++j) {
            if (at(i, j) != at(j, i)) throw InvalidParameter("distance matrix must be symmetric");
            if (at(i, j) < 0) throw InvalidParameter("distance requirements must be nonnegative");
        }
    }
}

DistanceMatrix DistanceMatrix::zero(std::size_t size, MatrixKind kind) {
    return DistanceMatrix(size, std::vector<int>(size * size, 0), kind);
}

void DistanceMatrix::set(std::size_t i, std::size_t j, int value) {
    entries_[i * size_ + j] = value;
    entries_[j * size_ + i] = value;
}

int DistanceMatrix::max_entry() const {
    return *std::max_element(entries_.begin(), entries_.end());
}

std::uint64_t DistanceMatrix::upper_sum() const {
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < size_; ++i)
        for (std::size_t j = i + 1; j < size_; ++j) sum += static_cast<std::uint64_t>(at(i, j));
    return sum;
}

DistanceMatrix build_drm(const FiniteFunction& f, unsigned t, std::span<const BitVector> msgs) {
    if (msgs.empty()) throw InvalidParameter("DRM needs at least one message");
    for (const auto& m : msgs)
        if (m.length() != f.k()) throw LengthMismatch(m.length(), f.k());
    auto drm = DistanceMatrix::zero(msgs.size(), MatrixKind::drm);
    int reach = 2 * static_cast<int>(t) + 1;
    for (std::size_t i = 0; i < msgs.size(); ++i) {
        for (std::size_t j = i + 1; j < msgs.size(); ++j) {
            if (f.eval(msgs[i]) == f.eval(msgs[j])) continue;
            int deficit = reach - static_cast<int>(hamming_distance(msgs[i], msgs[j]));
            drm.set(i, j, std::max(deficit, 0));
        }
    }
    return drm;
}

namespace {

// Class-pair scan with early exit at the smallest possible distance.
std::size_t scan_function_distance(const FiniteFunction& f, std::size_t i, std::size_t j) {
    std::uint64_t total = std::uint64_t{1} << f.k();
    std::vector<std::uint64_t> class_i, class_j;
    for (std::uint64_t u = 0; u < total; ++u) {
        std::size_t label = f.eval_index(u);
        if (label == i) class_i.push_back(u);
        if (label == j) class_j.push_back(u);
    }
    std::size_t best = f.k() + 1;
    for (std::uint64_t a : class_i) {
        for (std::uint64_t b : class_j) {
            best = std::min<std::size_t>(best, std::popcount(a ^ b));
            if (best == 1) return 1;
        }
    }
    return best;
}

} // namespace

std::size_t function_distance(const FiniteFunction& f, std::size_t i, std::size_t j) {
    if (i >= f.label_count() || j >= f.label_count())
        throw InvalidParameter("label index out of range");
    if (i == j) return 0;
    if (f.family() != FunctionFamily::table) {
        // Label classes are weight bands [lT, min(lT+T-1, k)]; the closest
        // weights of two bands realize the minimum distance.
        std::size_t lo = std::min(i, j), hi = std::max(i, j);
        std::uint64_t T = f.threshold();
        std::uint64_t nearest_lo = std::min<std::uint64_t>(lo * T + T - 1, f.k());
        return static_cast<std::size_t>(hi * T - nearest_lo);
    }
    if (f.k() > 24) throw InvalidParameter("function_distance table scan supports k <= 24");
    return scan_function_distance(f, i, j);
}

DistanceMatrix build_fdm(const FiniteFunction& f, unsigned t) {
    std::size_t e = f.label_count();
    auto fdm = DistanceMatrix::zero(e, MatrixKind::fdm);
    int reach = 2 * static_cast<int>(t) + 1;
    for (std::size_t i = 0; i < e; ++i) {
        for (std::size_t j = i + 1; j < e; ++j) {
            int deficit = reach - static_cast<int>(function_distance(f, i, j));
            fdm.set(i, j, std::max(deficit, 0));
        }
    }
    return fdm;
}

bool check_representative_condition(const FiniteFunction& f, unsigned t, std::span<const BitVector> reps) {
    if (reps.size() != f.label_count()) return false;
    std::vector<const BitVector*> by_label(f.label_count(), nullptr);
    for (const auto& rep : reps) {
        std::size_t label = f.eval(rep);
        if (by_label[label] != nullptr) return false; // label hit twice
        by_label[label] = &rep;
    }
    std::vector<BitVector> ordered;
    ordered.reserve(reps.size());
    for (const auto* rep : by_label) ordered.push_back(*rep);
    return build_drm(f, t, ordered) == build_fdm(f, t);
}

} // namespace fcc
