#include "fcc/function.hpp"

#include <algorithm>
#include <bit>

namespace fcc {

namespace {

constexpr unsigned kMaxTableK = 24; // 2^24 table entries; beyond that use a closed-form family

std::vector<std::string> numeric_labels(std::size_t count) {
    std::vector<std::string> labels(count);
    for (std::size_t i = 0; i < count; ++i) labels[i] = std::to_string(i);
    return labels;
}

void require_positive_k(unsigned k) {
    if (k == 0) throw InvalidParameter("message length k must be >= 1");
}

} // namespace

FiniteFunction FiniteFunction::weight(unsigned k) {
    require_positive_k(k);
    return FiniteFunction(k, FunctionFamily::weight, 1, numeric_labels(k + 1), nullptr);
}

FiniteFunction FiniteFunction::weight_distribution(unsigned k, unsigned T) {
    require_positive_k(k);
    if (T == 0) throw InvalidParameter("threshold T must be >= 1");
    return FiniteFunction(k, FunctionFamily::weight_distribution, T, numeric_labels(k / T + 1), nullptr);
}

FiniteFunction FiniteFunction::lexicographic_rearrangement(unsigned k) {
    require_positive_k(k);
    std::vector<std::string> labels(k + 1);
    for (unsigned j = 0; j <= k; ++j) labels[j] = std::string(k - j, '0') + std::string(j, '1');
    return FiniteFunction(k, FunctionFamily::lexicographic_rearrangement, 1, std::move(labels), nullptr);
}

FiniteFunction FiniteFunction::from_table(unsigned k, std::vector<std::string> labels,
                                          std::vector<std::uint32_t> values) {
    require_positive_k(k);
    if (k > kMaxTableK)
        throw InvalidParameter("table-backed functions support k <= " + std::to_string(kMaxTableK));
    if (labels.empty()) throw InvalidParameter("label list must be nonempty");
    std::uint64_t expected = std::uint64_t{1} << k;
    if (values.size() != expected)
        throw InvalidParameter("value table must have 2^k = " + std::to_string(expected)
                               + " entries, got " + std::to_string(values.size()));
    {
        auto sorted = labels;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw InvalidParameter("label identifiers must be distinct");
    }
    std::vector<char> hit(labels.size(), 0);
    for (std::uint32_t v : values) {
        if (v >= labels.size())
            throw InvalidParameter("value index " + std::to_string(v) + " out of label range");
        hit[v] = 1;
    }
    if (std::find(hit.begin(), hit.end(), 0) != hit.end())
        throw InvalidParameter("every label must be the image of at least one message");
    return FiniteFunction(k, FunctionFamily::table, 1, std::move(labels),
                          std::make_shared<const std::vector<std::uint32_t>>(std::move(values)));
}

std::size_t FiniteFunction::eval(const BitVector& u) const {
    if (u.length() != k_) throw LengthMismatch(u.length(), k_);
    if (family_ == FunctionFamily::table) return (*table_)[u.to_index()];
    return u.weight() / threshold_;
}

bool FiniteFunction::operator==(const FiniteFunction& other) const {
    if (k_ != other.k_ || family_ != other.family_ || threshold_ != other.threshold_
        || labels_ != other.labels_)
        return false;
    if (family_ == FunctionFamily::table) return *table_ == *other.table_;
    return true;
}

std::vector<std::size_t> function_ball(const FiniteFunction& f, const BitVector& u, std::size_t rho) {
    if (u.length() != f.k()) throw LengthMismatch(u.length(), f.k());
    std::vector<char> seen(f.label_count(), 0);
    std::uint64_t center = u.to_index();
    for (std::uint64_t mask : flip_masks(f.k(), rho)) seen[f.eval_index(center ^ mask)] = 1;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (seen[i]) out.push_back(i);
    return out;
}

namespace {

// Distinct-label counter over repeated ball scans, reset in O(1) per ball.
struct LabelStamps {
    explicit LabelStamps(std::size_t label_count) : stamp(label_count, 0) {}
    std::vector<std::uint32_t> stamp;
    std::uint32_t generation = 0;
    std::size_t count = 0;
    std::size_t lo = 0, hi = 0;

    void begin() {
        ++generation;
        count = 0;
    }
    void add(std::size_t label) {
        if (stamp[label] == generation) return;
        stamp[label] = generation;
        if (count == 0) {
            lo = hi = label;
        } else {
            lo = std::min(lo, label);
            hi = std::max(hi, label);
        }
        ++count;
    }
    bool is_interval() const { return count == hi - lo + 1; }
};

void require_scan_width(unsigned k) {
    if (k > 64) throw InvalidParameter("exhaustive scans support k <= 64");
}

} // namespace

std::size_t compute_lambda(const FiniteFunction& f, std::size_t rho) {
    require_scan_width(f.k());
    auto masks = flip_masks(f.k(), rho);
    LabelStamps stamps(f.label_count());
    std::size_t best = 0;
    std::uint64_t total = std::uint64_t{1} << f.k();
    for (std::uint64_t u = 0; u < total; ++u) {
        stamps.begin();
        for (std::uint64_t mask : masks) stamps.add(f.eval_index(u ^ mask));
        best = std::max(best, stamps.count);
        if (best == f.label_count()) break; // cannot grow further
    }
    return best;
}

std::size_t hwdf_lambda_bound(unsigned T, unsigned t) {
    if (T == 0 || t == 0) throw InvalidParameter("hwdf_lambda_bound requires T >= 1 and t >= 1");
    return static_cast<std::size_t>(4) * t / T + 2;
}

ContiguityResult check_contiguity(const FiniteFunction& f, std::size_t rho) {
    require_scan_width(f.k());
    auto masks = flip_masks(f.k(), rho);
    LabelStamps stamps(f.label_count());
    std::uint64_t total = std::uint64_t{1} << f.k();
    for (std::uint64_t u = 0; u < total; ++u) {
        stamps.begin();
        for (std::uint64_t mask : masks) stamps.add(f.eval_index(u ^ mask));
        if (!stamps.is_interval())
            return {false, BitVector::from_index(u, f.k())};
    }
    return {true, std::nullopt};
}

CyclicColoring make_cyclic_coloring(const FiniteFunction& f, std::size_t lambda, std::size_t rho) {
    if (lambda == 0) throw InvalidParameter("lambda must be >= 1");
    std::size_t needed = compute_lambda(f, rho);
    if (lambda < needed) throw LambdaTooLarge(needed, lambda);
    auto contiguity = check_contiguity(f, rho);
    if (!contiguity.contiguous) throw ContiguityViolation(contiguity.witness->to_string());
    return CyclicColoring(f, lambda);
}

} // namespace fcc
