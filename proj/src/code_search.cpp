#include "fcc/code_search.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace fcc {

BlockCode BlockCode::make(std::vector<BitVector> words, int declared_min_distance) {
    BlockCode code;
    code.words = std::move(words);
    code.declared_min_distance = declared_min_distance;
    if (!code.words.empty()) code.length = code.words.front().length();
    for (const auto& w : code.words)
        if (w.length() != code.length) throw LengthMismatch(w.length(), code.length);
    if (declared_min_distance > 0) {
        bool repeats = false;
        for (std::size_t i = 0; i < code.words.size() && !repeats; ++i)
            for (std::size_t j = i + 1; j < code.words.size() && !repeats; ++j)
                repeats = code.words[i] == code.words[j];
        if (!repeats) {
            auto dmin = min_pairwise_distance(code.words);
            if (dmin && static_cast<int>(*dmin) < declared_min_distance)
                throw InvalidParityCode("declared minimum distance " + std::to_string(declared_min_distance)
                                        + " but pairwise distance " + std::to_string(*dmin) + " occurs");
        }
    }
    return code;
}

std::optional<std::size_t> min_pairwise_distance(std::span<const BitVector> words) {
    if (words.size() < 2) return std::nullopt;
    std::size_t best = SIZE_MAX;
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j)
            best = std::min(best, hamming_distance(words[i], words[j]));
    return best;
}

std::optional<std::uint64_t> plotkin_bound(std::size_t n, int d) {
    if (d <= 0) return std::nullopt;
    std::uint64_t dd = static_cast<std::uint64_t>(d);
    if (d % 2 == 0) {
        if (2 * dd > n) return 2 * (dd / (2 * dd - n));
        return std::nullopt;
    }
    if (2 * dd + 1 > n) return 2 * ((dd + 1) / (2 * dd + 1 - n));
    return std::nullopt;
}

int generalized_plotkin(const DistanceMatrix& d) {
    std::size_t m = d.size();
    if (m <= 1) return 0;
    std::uint64_t sum = d.upper_sum();
    std::uint64_t denom = (m % 2 == 0) ? m * m : m * m - 1;
    return static_cast<int>((4 * sum + denom - 1) / denom);
}

namespace {

struct NodeBudget {
    std::uint64_t remaining;
    // Returns false once the budget is spent.
    bool spend() { return remaining == 0 ? false : (--remaining, true); }
};

// Words ascending with words[0] = 0; candidate words tried in numeric order,
// so the first full assignment is the lexicographically least canonical one.
bool dfs_uniform(std::size_t n, std::size_t num_words, int distance,
                 std::vector<std::uint64_t>& chosen, NodeBudget& budget, bool& budget_hit) {
    if (chosen.size() == num_words) return true;
    std::uint64_t limit = (n >= 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n);
    for (std::uint64_t cand = chosen.back() + 1; cand < limit; ++cand) {
        if (!budget.spend()) {
            budget_hit = true;
            return false;
        }
        bool ok = true;
        for (std::uint64_t prev : chosen) {
            if (std::popcount(cand ^ prev) < distance) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        chosen.push_back(cand);
        if (dfs_uniform(n, num_words, distance, chosen, budget, budget_hit)) return true;
        chosen.pop_back();
        if (budget_hit) return false;
    }
    return false;
}

std::optional<std::vector<std::uint64_t>> find_uniform_code(std::size_t n, std::size_t num_words,
                                                            int distance, NodeBudget& budget,
                                                            bool& budget_hit) {
    std::vector<std::uint64_t> chosen{0};
    if (dfs_uniform(n, num_words, distance, chosen, budget, budget_hit)) return chosen;
    return std::nullopt;
}

BlockCode words_from_indices(const std::vector<std::uint64_t>& indices, std::size_t length,
                             int declared_min_distance) {
    std::vector<BitVector> words;
    words.reserve(indices.size());
    for (std::uint64_t w : indices) words.push_back(BitVector::from_index(w, length));
    return BlockCode::make(std::move(words), declared_min_distance);
}

BlockCode empty_words(std::size_t count) {
    return BlockCode::make(std::vector<BitVector>(count, BitVector(0)), 0);
}

} // namespace

SearchCertificate search_N_uniform(std::size_t num_words, int distance, const SearchLimits& limits) {
    if (num_words == 0) throw InvalidParameter("need at least one codeword");
    if (distance < 0) throw InvalidParameter("distance must be nonnegative");
    UniformTarget target{num_words, distance};
    if (num_words == 1 || distance == 0)
        return {target, 0, empty_words(num_words), std::nullopt};
    if (num_words > limits.uniform_word_cap || distance > limits.uniform_distance_cap)
        throw SearchBudgetExceeded("uniform search parameters beyond configured caps",
                                   static_cast<std::uint64_t>(distance), SearchBudgetExceeded::kUnknown);

    // Skip lengths the Plotkin bound already excludes.
    std::size_t n = static_cast<std::size_t>(distance);
    while (true) {
        auto cap = plotkin_bound(n, distance);
        if (cap && *cap < num_words) {
            ++n;
            continue;
        }
        break;
    }
    std::size_t first_candidate = n;

    NodeBudget budget{limits.node_cap};
    for (;; ++n) {
        bool budget_hit = false;
        auto found = find_uniform_code(n, num_words, distance, budget, budget_hit);
        if (budget_hit)
            throw SearchBudgetExceeded("uniform search node budget exhausted", n,
                                       SearchBudgetExceeded::kUnknown);
        if (found) {
            auto kind = (n == first_candidate) ? InfeasibilityKind::plotkin : InfeasibilityKind::exhausted;
            return {target, n, words_from_indices(*found, n, distance), kind};
        }
    }
}

namespace {

bool dfs_irregular(const DistanceMatrix& d, std::size_t r, std::vector<std::uint64_t>& chosen,
                   NodeBudget& budget, bool& budget_hit) {
    std::size_t row = chosen.size();
    if (row == d.size()) return true;
    std::uint64_t limit = (r >= 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << r);
    for (std::uint64_t cand = 0; cand < limit; ++cand) {
        if (!budget.spend()) {
            budget_hit = true;
            return false;
        }
        bool ok = true;
        for (std::size_t j = 0; j < row; ++j) {
            if (std::popcount(cand ^ chosen[j]) < d.at(row, j)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        chosen.push_back(cand);
        if (dfs_irregular(d, r, chosen, budget, budget_hit)) return true;
        chosen.pop_back();
        if (budget_hit) return false;
    }
    return false;
}

std::optional<std::vector<std::uint64_t>> find_irregular_code(const DistanceMatrix& d, std::size_t r,
                                                              NodeBudget& budget, bool& budget_hit) {
    // Any valid assignment translates to one with word 0 in row 0, and the
    // lexicographically least assignment has it.
    std::vector<std::uint64_t> chosen{0};
    if (dfs_irregular(d, r, chosen, budget, budget_hit)) return chosen;
    return std::nullopt;
}

} // namespace

SearchCertificate search_N_irregular(const DistanceMatrix& d, const SearchLimits& limits) {
    if (d.size() > limits.irregular_size_cap || d.max_entry() > limits.irregular_entry_cap)
        throw SearchBudgetExceeded("irregular search parameters beyond configured caps",
                                   static_cast<std::uint64_t>(generalized_plotkin(d)),
                                   SearchBudgetExceeded::kUnknown);
    if (d.max_entry() == 0) return {d, 0, empty_words(d.size()), std::nullopt};

    std::size_t r0 = std::max<std::size_t>(d.max_entry(), generalized_plotkin(d));
    NodeBudget budget{limits.node_cap};
    for (std::size_t r = r0;; ++r) {
        bool budget_hit = false;
        auto found = find_irregular_code(d, r, budget, budget_hit);
        if (budget_hit)
            throw SearchBudgetExceeded("irregular search node budget exhausted", r,
                                       SearchBudgetExceeded::kUnknown);
        if (found) {
            std::optional<InfeasibilityKind> kind;
            if (r > r0) {
                kind = InfeasibilityKind::exhausted;
            } else if (static_cast<int>(r0) - 1 < generalized_plotkin(d)) {
                kind = InfeasibilityKind::plotkin;
            } else {
                // r0 came from a single row requirement; refute r0-1 by search.
                bool hit = false;
                if (find_irregular_code(d, r0 - 1, budget, hit) || hit)
                    throw SearchBudgetExceeded("irregular refutation budget exhausted", r0 - 1,
                                               SearchBudgetExceeded::kUnknown);
                kind = InfeasibilityKind::exhausted;
            }
            return {d, r, words_from_indices(*found, r, 0), kind};
        }
    }
}

BlockCode repetition_code_4(unsigned t) {
    if (t == 0) throw InvalidParameter("repetition_code_4 requires t >= 1");
    std::string zeros(t, '0'), ones(t, '1');
    std::vector<BitVector> words{
        BitVector::from_string(zeros + zeros + zeros),
        BitVector::from_string(ones + ones + zeros),
        BitVector::from_string(ones + zeros + ones),
        BitVector::from_string(zeros + ones + ones),
    };
    return BlockCode::make(std::move(words), 2 * static_cast<int>(t));
}

bool witness_satisfies_target(const SearchCertificate& certificate) {
    const auto& words = certificate.witness.words;
    if (certificate.witness.length != certificate.found_length) return false;
    if (const auto* uniform = std::get_if<UniformTarget>(&certificate.target)) {
        if (words.size() != uniform->codewords) return false;
        for (std::size_t i = 0; i < words.size(); ++i)
            for (std::size_t j = i + 1; j < words.size(); ++j) {
                if (uniform->distance > 0 && words[i] == words[j]) return false;
                if (static_cast<int>(hamming_distance(words[i], words[j])) < uniform->distance)
                    return false;
            }
        return true;
    }
    const auto& matrix = std::get<DistanceMatrix>(certificate.target);
    if (words.size() != matrix.size()) return false;
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j)
            if (static_cast<int>(hamming_distance(words[i], words[j])) < matrix.at(i, j)) return false;
    return true;
}

} // namespace fcc
