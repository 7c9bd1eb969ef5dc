#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <bit>

#include "fcc/code_search.hpp"

using namespace fcc;

namespace {

BitVector bv(const char* s) { return BitVector::from_string(s); }

DistanceMatrix matrix_of(std::size_t size, std::vector<int> entries) {
    return DistanceMatrix(size, std::move(entries));
}

DistanceMatrix indicator_drm() {
    return matrix_of(4, {0, 2, 2, 1, 2, 0, 0, 0, 2, 0, 0, 0, 1, 0, 0, 0});
}

DistanceMatrix optimality_triple_drm(int t) {
    return matrix_of(3, {0, 2 * t, 2 * t, 2 * t, 0, 2 * t - 1, 2 * t, 2 * t - 1, 0});
}

std::vector<std::string> witness_strings(const SearchCertificate& c) {
    std::vector<std::string> out;
    for (const auto& w : c.witness.words) out.push_back(w.to_string());
    return out;
}

// Oracle: enumerate every M-subset of F_2^n without any symmetry reduction
// and report whether one has pairwise distance >= d.
bool exists_code_dumb(std::size_t n, std::size_t m, int d, std::vector<std::uint64_t>& chosen) {
    if (chosen.size() == m) return true;
    std::uint64_t start = chosen.empty() ? 0 : chosen.back() + 1;
    for (std::uint64_t cand = start; cand < (std::uint64_t{1} << n); ++cand) {
        bool ok = true;
        for (std::uint64_t prev : chosen)
            if (std::popcount(cand ^ prev) < d) {
                ok = false;
                break;
            }
        if (!ok) continue;
        chosen.push_back(cand);
        if (exists_code_dumb(n, m, d, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

bool exists_code_dumb(std::size_t n, std::size_t m, int d) {
    std::vector<std::uint64_t> chosen;
    return exists_code_dumb(n, m, d, chosen);
}

} // namespace

TEST_CASE("plotkin bound") {
    CHECK(plotkin_bound(3, 2) == 4);
    CHECK(plotkin_bound(5, 4) == 2);
    CHECK_FALSE(plotkin_bound(10, 2).has_value());
    CHECK(plotkin_bound(4, 3) == 2); // odd case: 2*floor(4/(7-4))
}

TEST_CASE("generalized plotkin") {
    CHECK(generalized_plotkin(optimality_triple_drm(1)) == 3);
    CHECK(generalized_plotkin(indicator_drm()) == 2);
    CHECK(generalized_plotkin(DistanceMatrix::zero(5)) == 0);
    CHECK(generalized_plotkin(optimality_triple_drm(2)) == 6); // ceil(5.5)
}

TEST_CASE("uniform search reproduces the known small values") {
    auto c42 = search_N_uniform(4, 2);
    CHECK(c42.found_length == 3);
    CHECK(witness_satisfies_target(c42));
    CHECK(c42.infeasibility == InfeasibilityKind::plotkin);
    CHECK(witness_strings(c42) == std::vector<std::string>{"000", "011", "101", "110"});

    auto c44 = search_N_uniform(4, 4);
    CHECK(c44.found_length == 6);
    CHECK(witness_satisfies_target(c44));
    CHECK(c44.infeasibility == InfeasibilityKind::plotkin);

    auto c23 = search_N_uniform(2, 3);
    CHECK(c23.found_length == 3);
    CHECK(witness_strings(c23) == std::vector<std::string>{"000", "111"});

    auto c32 = search_N_uniform(3, 2);
    CHECK(c32.found_length == 3);
    CHECK(witness_satisfies_target(c32));
}

TEST_CASE("uniform search refutations agree with the dumb oracle") {
    // No 4 words of length 2 reach pairwise distance 2, and no 4 words of
    // length 4 reach pairwise distance 3; one length more suffices.
    CHECK_FALSE(exists_code_dumb(2, 4, 2));
    CHECK(exists_code_dumb(3, 4, 2));
    CHECK_FALSE(exists_code_dumb(4, 4, 3));
    CHECK(exists_code_dumb(5, 4, 3));
    CHECK(search_N_uniform(4, 3).found_length == 5);

    CHECK_FALSE(exists_code_dumb(5, 4, 4));
    CHECK(exists_code_dumb(6, 4, 4));
}

TEST_CASE("uniform search degenerate parameters") {
    CHECK(search_N_uniform(1, 5).found_length == 0);
    auto zero_d = search_N_uniform(3, 0);
    CHECK(zero_d.found_length == 0);
    CHECK_FALSE(zero_d.infeasibility.has_value());
    CHECK(witness_satisfies_target(zero_d));
}

TEST_CASE("uniform search never contradicts the plotkin bound") {
    for (std::size_t m = 2; m <= 6; ++m)
        for (int d = 1; d <= 4; ++d) {
            auto cert = search_N_uniform(m, d);
            for (std::size_t n = 1; n <= cert.found_length + 2; ++n) {
                auto cap = plotkin_bound(n, d);
                if (cap && *cap < m) CHECK(cert.found_length > n);
            }
        }
}

TEST_CASE("irregular search on the worked example") {
    auto cert = search_N_irregular(indicator_drm());
    CHECK(cert.found_length == 2);
    CHECK(witness_satisfies_target(cert));
    CHECK(witness_strings(cert) == std::vector<std::string>{"00", "11", "11", "01"});
    CHECK(cert.infeasibility == InfeasibilityKind::plotkin);
}

TEST_CASE("irregular search degenerate and triple cases") {
    auto zero = search_N_irregular(DistanceMatrix::zero(4));
    CHECK(zero.found_length == 0);
    CHECK_FALSE(zero.infeasibility.has_value());

    auto triple = search_N_irregular(optimality_triple_drm(1));
    CHECK(triple.found_length == 3);
    CHECK(witness_satisfies_target(triple));
    CHECK(witness_strings(triple) == std::vector<std::string>{"000", "011", "101"});

    CHECK(search_N_irregular(optimality_triple_drm(2)).found_length == 6);
}

TEST_CASE("irregular search equals uniform search on uniform matrices") {
    for (std::size_t m = 2; m <= 5; ++m)
        for (int d = 1; d <= 3; ++d) {
            std::vector<int> entries(m * m, d);
            for (std::size_t i = 0; i < m; ++i) entries[i * m + i] = 0;
            auto irregular = search_N_irregular(matrix_of(m, std::move(entries)));
            auto uniform = search_N_uniform(m, d);
            CHECK(irregular.found_length == uniform.found_length);
        }
}

TEST_CASE("irregular search dominates the generalized plotkin bound") {
    std::vector<DistanceMatrix> cases{
        indicator_drm(), optimality_triple_drm(1), optimality_triple_drm(2),
        matrix_of(3, {0, 5, 0, 5, 0, 0, 0, 0, 0}),
        matrix_of(4, {0, 1, 2, 3, 1, 0, 1, 2, 2, 1, 0, 1, 3, 2, 1, 0}),
    };
    for (const auto& d : cases)
        CHECK(search_N_irregular(d).found_length >= static_cast<std::size_t>(generalized_plotkin(d)));
}

TEST_CASE("single dominating row requirement is refuted by exhaustion") {
    auto cert = search_N_irregular(matrix_of(3, {0, 5, 0, 5, 0, 0, 0, 0, 0}));
    CHECK(cert.found_length == 5);
    CHECK(cert.infeasibility == InfeasibilityKind::exhausted);
}

TEST_CASE("search budget surfaces as an explicit error") {
    SearchLimits tiny;
    tiny.node_cap = 10;
    CHECK_THROWS_AS(search_N_uniform(6, 4, tiny), SearchBudgetExceeded);
    SearchLimits caps;
    caps.uniform_word_cap = 4;
    CHECK_THROWS_AS(search_N_uniform(5, 2, caps), SearchBudgetExceeded);
}

TEST_CASE("repetition code with four words") {
    auto c1 = repetition_code_4(1);
    std::vector<std::string> expected1{"000", "110", "101", "011"};
    REQUIRE(c1.word_count() == 4);
    for (std::size_t i = 0; i < 4; ++i) CHECK(c1.words[i].to_string() == expected1[i]);

    auto c2 = repetition_code_4(2);
    std::vector<std::string> expected2{"000000", "111100", "110011", "001111"};
    for (std::size_t i = 0; i < 4; ++i) CHECK(c2.words[i].to_string() == expected2[i]);

    for (unsigned t = 1; t <= 3; ++t) {
        auto code = repetition_code_4(t);
        CHECK(code.length == 3 * t);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i + 1; j < 4; ++j)
                CHECK(hamming_distance(code.words[i], code.words[j]) == 2 * t);
    }
}

TEST_CASE("block code construction checks the declared distance") {
    CHECK_THROWS_AS(BlockCode::make({bv("000"), bv("001")}, 2), InvalidParityCode);
    CHECK_NOTHROW(BlockCode::make({bv("000"), bv("011")}, 2));
    // Repeated words skip the declared-distance check.
    CHECK_NOTHROW(BlockCode::make({bv("00"), bv("00")}, 0));
    CHECK_THROWS_AS(BlockCode::make({bv("00"), bv("000")}, 0), LengthMismatch);
}

TEST_CASE("search results are deterministic") {
    auto a = search_N_irregular(indicator_drm());
    auto b = search_N_irregular(indicator_drm());
    CHECK(witness_strings(a) == witness_strings(b));
    auto u1 = search_N_uniform(4, 4);
    auto u2 = search_N_uniform(4, 4);
    CHECK(witness_strings(u1) == witness_strings(u2));
}
