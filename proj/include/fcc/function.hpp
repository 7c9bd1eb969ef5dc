#ifndef FCC_FUNCTION_HPP
#define FCC_FUNCTION_HPP

#include <bit>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fcc/bitvec.hpp"

namespace fcc {

enum class FunctionFamily { weight, weight_distribution, lexicographic_rearrangement, table };

/// Total function f: F_2^k -> labels, with the label sequence giving the
/// total order on Im(f). Built-in families evaluate lazily; table-backed
/// functions hold one label index per message (message index = lexicographic
/// position = numeric value of the message).
///
/// Immutable after construction and cheap to copy.
class FiniteFunction {
public:
    static FiniteFunction weight(unsigned k);
    /// f(u) = floor(wt(u) / T).
    static FiniteFunction weight_distribution(unsigned k, unsigned T);
    /// f(u) = 0^(k-wt(u)) 1^(wt(u)); labels ordered lexicographically.
    static FiniteFunction lexicographic_rearrangement(unsigned k);
    /// Explicit table of 2^k label indices. Every label must be hit.
    static FiniteFunction from_table(unsigned k, std::vector<std::string> labels,
                                     std::vector<std::uint32_t> values);

    unsigned k() const { return k_; }
    FunctionFamily family() const { return family_; }
    /// Threshold T; meaningful for the weight_distribution family only.
    unsigned threshold() const { return threshold_; }

    std::size_t label_count() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Label index of the message with numeric value `msg` (k <= 64).
    std::size_t eval_index(std::uint64_t msg) const {
        if (family_ == FunctionFamily::table) return (*table_)[msg];
        return static_cast<std::size_t>(std::popcount(msg)) / threshold_;
    }

    std::size_t eval(const BitVector& u) const;

    bool operator==(const FiniteFunction& other) const;

private:
    FiniteFunction(unsigned k, FunctionFamily family, unsigned threshold,
                   std::vector<std::string> labels, std::shared_ptr<const std::vector<std::uint32_t>> table)
        : k_(k), family_(family), threshold_(threshold), labels_(std::move(labels)), table_(std::move(table)) {}

    unsigned k_;
    FunctionFamily family_;
    unsigned threshold_; // 1 for weight and lexicographic_rearrangement
    std::vector<std::string> labels_;
    std::shared_ptr<const std::vector<std::uint32_t>> table_;
};

/// B_f(u, rho): the set of label indices attained within distance rho of u.
/// Sorted ascending; always contains f(u).
std::vector<std::size_t> function_ball(const FiniteFunction& f, const BitVector& u, std::size_t rho);

/// Smallest lambda such that f is locally (rho, lambda)-bounded: the maximum
/// ball size over all 2^k messages.
std::size_t compute_lambda(const FiniteFunction& f, std::size_t rho);

/// floor(4t/T) + 2: the guaranteed local bound for the weight distribution
/// function with threshold T at radius 2t.
std::size_t hwdf_lambda_bound(unsigned T, unsigned t);

struct ContiguityResult {
    bool contiguous = true;
    std::optional<BitVector> witness; // first message (lexicographically) whose ball has a gap
};

/// True iff every radius-rho function ball is an interval of consecutive
/// label indices under the stored order.
ContiguityResult check_contiguity(const FiniteFunction& f, std::size_t rho);

/// Message coloring u -> 1 + (labelIndex(f(u)) mod lambda). When lambda
/// covers every radius-rho ball and the balls are contiguous, messages with
/// different f-values within distance rho get different colors.
class CyclicColoring {
public:
    CyclicColoring(FiniteFunction f, std::size_t lambda) : f_(std::move(f)), lambda_(lambda) {}

    std::size_t lambda() const { return lambda_; }
    std::size_t color(const BitVector& u) const { return 1 + f_.eval(u) % lambda_; }
    std::size_t color_index(std::uint64_t msg) const { return 1 + f_.eval_index(msg) % lambda_; }

private:
    FiniteFunction f_;
    std::size_t lambda_;
};

/// Validating constructor for the coloring: requires lambda to cover every
/// radius-rho ball and the balls to be contiguous. Throws LambdaTooLarge or
/// ContiguityViolation otherwise.
CyclicColoring make_cyclic_coloring(const FiniteFunction& f, std::size_t lambda, std::size_t rho);

} // namespace fcc

#endif
