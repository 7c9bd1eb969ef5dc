#ifndef FCC_CODE_SEARCH_HPP
#define FCC_CODE_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "fcc/bitvec.hpp"
#include "fcc/distance_matrix.hpp"

namespace fcc {

/// Ordered list of equal-length words (repeats permitted). When a positive
/// minimum distance is declared and no word repeats, construction checks it.
struct BlockCode {
    std::size_t length = 0;
    std::vector<BitVector> words;
    int declared_min_distance = 0;

    static BlockCode make(std::vector<BitVector> words, int declared_min_distance = 0);

    std::size_t word_count() const { return words.size(); }
};

/// Minimum pairwise distance over all unordered pairs (0 when words repeat);
/// nullopt when fewer than two words.
std::optional<std::size_t> min_pairwise_distance(std::span<const BitVector> words);

struct UniformTarget {
    std::size_t codewords = 0;
    int distance = 0;
};

using SearchTarget = std::variant<UniformTarget, DistanceMatrix>;

enum class InfeasibilityKind { exhausted, plotkin };

/// Result of an exact minimum-length search: the found length, a witness
/// achieving it, and why length-1 shorter is impossible (absent only for a
/// zero-length answer).
struct SearchCertificate {
    SearchTarget target;
    std::size_t found_length = 0;
    BlockCode witness;
    std::optional<InfeasibilityKind> infeasibility;
};

struct SearchLimits {
    std::size_t uniform_word_cap = 8;
    int uniform_distance_cap = 8;
    std::size_t irregular_size_cap = 16;
    int irregular_entry_cap = 9;
    std::uint64_t node_cap = 50'000'000;
};

/// Plotkin upper bound on A(n, d); nullopt when the bound's hypothesis
/// (2d > n for even d, 2d+1 > n for odd d) does not hold.
std::optional<std::uint64_t> plotkin_bound(std::size_t n, int d);

/// Generalized Plotkin lower bound on the minimum D-code length, rounded up
/// to an integer.
int generalized_plotkin(const DistanceMatrix& d);

/// Exact minimum length n admitting an (n, M, d) code, with the
/// lexicographically least witness (normalized to contain the zero word).
SearchCertificate search_N_uniform(std::size_t num_words, int distance, const SearchLimits& limits = {});

/// Exact minimum length r admitting words p_1..p_M, matched to the rows of
/// the matrix (word i serves row i, repeats allowed), with d(p_i, p_j) >=
/// D[i][j]. Witness is the lexicographically least valid assignment.
SearchCertificate search_N_irregular(const DistanceMatrix& d, const SearchLimits& limits = {});

/// The explicit four-word code of length 3t and pairwise distance exactly 2t:
/// blocks of t zeros/ones arranged as 000, 110, 101, 011.
BlockCode repetition_code_4(unsigned t);

/// Re-check a certificate's witness against its target by direct pairwise
/// distance computation, independent of the search path.
bool witness_satisfies_target(const SearchCertificate& certificate);

} // namespace fcc

#endif
