// Acceptance suite: runs the toolkit's headline guarantees end to end and
// prints one PASS/FAIL line per criterion.

#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "fcc/analysis.hpp"
#include "fcc/distance_matrix.hpp"
#include "fcc/formats.hpp"

using namespace fcc;
using Clock = std::chrono::steady_clock;

namespace {

BitVector bv(const char* s) { return BitVector::from_string(s); }

FiniteFunction nonzero_indicator() { return FiniteFunction::from_table(2, {"0", "1"}, {0, 1, 1, 1}); }

std::vector<BitVector> all_messages(unsigned k) {
    std::vector<BitVector> out;
    for (std::uint64_t u = 0; u < (std::uint64_t{1} << k); ++u) out.push_back(BitVector::from_index(u, k));
    return out;
}

struct CriterionResult {
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

struct Harness {
    int failures = 0;

    void run(const std::string& name, double budget_seconds,
             const std::function<bool(std::string&)>& body) {
        CriterionResult result;
        auto start = Clock::now();
        try {
            result.passed = body(result.detail);
        } catch (const std::exception& e) {
            result.passed = false;
            result.detail = std::string("exception: ") + e.what();
        }
        result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
        if (budget_seconds > 0 && result.seconds > budget_seconds) {
            result.passed = false;
            result.detail += " [over time budget]";
        }
        if (!result.passed) ++failures;
        std::printf("%s - %s (%.3fs)%s%s\n", result.passed ? "PASS" : "FAIL", name.c_str(),
                    result.seconds, result.detail.empty() ? "" : ": ", result.detail.c_str());
    }
};

// Test-local oracle: enumerate every M-subset of F_2^n with no symmetry
// reduction and report whether one has pairwise distance >= d.
bool exists_code_by_enumeration(std::size_t n, std::size_t m, int d,
                                std::vector<std::uint64_t>& chosen) {
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
        if (exists_code_by_enumeration(n, m, d, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

bool exists_code_by_enumeration(std::size_t n, std::size_t m, int d) {
    std::vector<std::uint64_t> chosen;
    return exists_code_by_enumeration(n, m, d, chosen);
}

struct GridEntry {
    FccEncoder encoder;
    std::string description;
};

// Every applicable construction over the function grid: the weight
// distribution family for T in 1..8, the lexicographic rearrangement
// function, and the small two-valued table function at k=2.
std::vector<GridEntry> build_construction_grid(unsigned max_k, std::string& error) {
    std::vector<GridEntry> grid;
    for (unsigned k = 1; k <= max_k; ++k) {
        std::vector<std::pair<FiniteFunction, unsigned>> functions; // (f, T or 0)
        for (unsigned T = 1; T <= 8; ++T)
            functions.emplace_back(FiniteFunction::weight_distribution(k, T), T);
        functions.emplace_back(FiniteFunction::lexicographic_rearrangement(k), 0);
        if (k == 2) functions.emplace_back(nonzero_indicator(), 0);

        for (unsigned t = 1; t <= 2; ++t) {
            for (const auto& [f, T] : functions) {
                std::size_t lambda = compute_lambda(f, 2 * std::size_t{t});
                bool contiguous = check_contiguity(f, 2 * std::size_t{t}).contiguous;
                std::string base = "k=" + std::to_string(k) + " t=" + std::to_string(t)
                                   + (T ? " hwdf T=" + std::to_string(T) : " table/lex");
                try {
                    if (lambda <= 4 && contiguous)
                        grid.push_back({build_lambda4(f, t), base + " lambda4"});
                    if (lambda >= 2 && lambda <= 4 && contiguous) {
                        auto code = search_N_uniform(lambda, 2 * static_cast<int>(t)).witness;
                        grid.push_back({build_generic(f, t, code), base + " generic"});
                    }
                    if (T != 0 && 4 * t >= T && T > 2 * t)
                        grid.push_back({build_hwdf_parity(k, T, t), base + " parity"});
                    if (T != 0 && T <= 4 * t)
                        grid.push_back({build_hwdf_mod_a(k, T, t), base + " mod-a"});
                } catch (const std::exception& e) {
                    error = base + ": " + e.what();
                    return grid;
                }
            }
        }
    }
    return grid;
}

} // namespace

int main() {
    Harness harness;
    std::vector<GridEntry> grid;

    harness.run("C1 worked-example distance requirement matrix", 0.001, [&](std::string& detail) {
        auto f = nonzero_indicator();
        auto msgs = all_messages(2);
        auto drm = build_drm(f, 1, msgs);
        DistanceMatrix expected(4, {0, 2, 2, 1, 2, 0, 0, 0, 2, 0, 0, 0, 1, 0, 0, 0}, MatrixKind::drm);
        detail = "4x4 matrix";
        return drm == expected;
    });

    harness.run("C2 minimum-length parity assignment and its code", 1.0, [&](std::string& detail) {
        auto f = nonzero_indicator();
        auto msgs = all_messages(2);
        auto cert = search_N_irregular(build_drm(f, 1, msgs));
        if (cert.found_length != 2) {
            detail = "found length " + std::to_string(cert.found_length);
            return false;
        }
        auto enc = build_from_dcode(f, 1, msgs, cert.witness.words);
        std::vector<std::string> codebook;
        for (const auto& u : msgs) codebook.push_back(enc.encode(u).to_string());
        std::vector<std::string> expected{"0000", "0111", "1011", "1101"};
        if (codebook != expected) {
            detail = "unexpected codebook";
            return false;
        }
        detail = "N(D)=2, codebook matches, verified";
        return verify_fcc(enc).is_fcc;
    });

    harness.run("C3 function distance matrix and representatives", 1.0, [&](std::string& detail) {
        auto f = nonzero_indicator();
        auto fdm = build_fdm(f, 1);
        DistanceMatrix expected(2, {0, 2, 2, 0}, MatrixKind::fdm);
        if (!(fdm == expected)) {
            detail = "FDM mismatch";
            return false;
        }
        std::vector<BitVector> reps{bv("00"), bv("01")};
        if (!check_representative_condition(f, 1, reps)) {
            detail = "representative condition refused";
            return false;
        }
        auto n = search_N_irregular(fdm).found_length;
        detail = "optimal redundancy certified as " + std::to_string(n);
        return n == 2;
    });

    harness.run("C4 minimum lengths for four codewords", 10.0, [&](std::string& detail) {
        auto c2 = search_N_uniform(4, 2);
        auto c4 = search_N_uniform(4, 4);
        if (c2.found_length != 3 || c4.found_length != 6) {
            detail = "lengths " + std::to_string(c2.found_length) + "," + std::to_string(c4.found_length);
            return false;
        }
        if (!witness_satisfies_target(c2) || !witness_satisfies_target(c4)) {
            detail = "witness failed re-verification";
            return false;
        }
        if (!c2.infeasibility || !c4.infeasibility) {
            detail = "missing refutation for length-1";
            return false;
        }
        for (unsigned t = 1; t <= 3; ++t) {
            auto code = repetition_code_4(t);
            if (code.length != 3 * t) return false;
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = i + 1; j < 4; ++j)
                    if (hamming_distance(code.words[i], code.words[j]) != 2 * t) {
                        detail = "repetition code distance off at t=" + std::to_string(t);
                        return false;
                    }
        }
        detail = "N(4,2)=3, N(4,4)=6, block code exact";
        return true;
    });

    harness.run("C5 local bound and contiguity sweep", 60.0, [&](std::string& detail) {
        std::uint64_t combos = 0;
        for (unsigned k = 1; k <= 12; ++k)
            for (unsigned T = 1; T <= 8; ++T)
                for (unsigned t = 1; t <= 2; ++t) {
                    auto f = FiniteFunction::weight_distribution(k, T);
                    ++combos;
                    if (compute_lambda(f, 2 * std::size_t{t}) > hwdf_lambda_bound(T, t)) {
                        detail = "bound violated at k=" + std::to_string(k) + " T=" + std::to_string(T)
                                 + " t=" + std::to_string(t);
                        return false;
                    }
                    if (!check_contiguity(f, 2 * std::size_t{t}).contiguous) {
                        detail = "gap at k=" + std::to_string(k) + " T=" + std::to_string(T);
                        return false;
                    }
                }
        detail = std::to_string(combos) + " (k,T,t) combinations";
        return true;
    });

    harness.run("C6 construction grid verifies exhaustively", 300.0, [&](std::string& detail) {
        std::string error;
        grid = build_construction_grid(10, error);
        if (!error.empty()) {
            detail = error;
            return false;
        }
        for (const auto& entry : grid) {
            auto report = verify_fcc(entry.encoder);
            if (!report.is_fcc) {
                detail = entry.description + " violated at ("
                         + report.violation->u.to_string() + ", " + report.violation->v.to_string() + ")";
                return false;
            }
        }
        detail = std::to_string(grid.size()) + " encoders, zero violations";
        return true;
    });

    harness.run("C7 three-point optimality certificate", 30.0, [&](std::string& detail) {
        for (unsigned t = 1; t <= 2; ++t) {
            auto f = FiniteFunction::weight(3);
            auto report = check_optimality_triple(f, t);
            if (!report.hypothesis_met || !report.witness_triple) {
                detail = "no witness at t=" + std::to_string(t);
                return false;
            }
            std::vector<BitVector> msgs(report.witness_triple->begin(), report.witness_triple->end());
            auto drm = build_drm(f, t, msgs);
            if (generalized_plotkin(drm) != 3 * static_cast<int>(t)) {
                detail = "plotkin bound not 3t at t=" + std::to_string(t);
                return false;
            }
            if (search_N_irregular(drm).found_length != 3 * std::size_t{t}) {
                detail = "search disagrees at t=" + std::to_string(t);
                return false;
            }
            if (build_lambda4(f, t).redundancy() != 3 * std::size_t{t} || !report.optimal) {
                detail = "construction misses 3t at t=" + std::to_string(t);
                return false;
            }
        }
        detail = "lower bound meets construction at t=1,2";
        return true;
    });

    harness.run("C8 lower-bound floor across the grid", 120.0, [&](std::string& detail) {
        std::uint64_t checked = 0;
        for (const auto& entry : grid) {
            const auto& f = entry.encoder.function();
            unsigned t = entry.encoder.t();
            if (f.label_count() < 2) continue;
            // Representatives of the first few label classes keep the exact
            // search small while still exercising the bound.
            std::vector<BitVector> reps;
            std::vector<char> seen(f.label_count(), 0);
            for (std::uint64_t u = 0; u < (std::uint64_t{1} << f.k()) && reps.size() < 4; ++u) {
                std::size_t label = f.eval_index(u);
                if (!seen[label]) {
                    seen[label] = 1;
                    reps.push_back(BitVector::from_index(u, f.k()));
                }
            }
            std::size_t bound = redundancy_lower_bound(f, t, reps);
            ++checked;
            if (bound < 2 * std::size_t{t}) {
                detail = entry.description + ": bound " + std::to_string(bound) + " below 2t";
                return false;
            }
            if (entry.encoder.redundancy() < bound) {
                detail = entry.description + ": r below the computed lower bound";
                return false;
            }
        }
        detail = std::to_string(checked) + " encoders against their bounds";
        return true;
    });

    harness.run("C9 exhaustive channel soundness", 120.0, [&](std::string& detail) {
        std::uint64_t simulated = 0, trials = 0;
        for (const auto& entry : grid) {
            std::size_t bits = entry.encoder.k() + entry.encoder.redundancy();
            if (bits > 16) continue;
            auto stats = simulate_channel_exhaustive(entry.encoder);
            trials += stats.trials;
            ++simulated;
            if (stats.failures != 0) {
                detail = entry.description + ": " + std::to_string(stats.failures) + " failures";
                return false;
            }
        }
        detail = std::to_string(simulated) + " encoders, " + std::to_string(trials)
                 + " trials, zero failures";
        return true;
    });

    harness.run("C10 redundancy comparison row", 60.0, [&](std::string& detail) {
        auto f = FiniteFunction::weight(3);
        std::size_t lambda = compute_lambda(f, 2);
        if (lambda != 4) {
            detail = "lambda " + std::to_string(lambda);
            return false;
        }
        std::size_t fcc_r = build_lambda4(f, 1).redundancy();
        std::size_t n_lambda = search_N_uniform(4, 2).found_length;
        auto n43 = search_N_uniform(4, 3);
        // Independent oracle for the stronger-distance column: plain
        // enumeration refutes length 4 and finds length 5.
        if (exists_code_by_enumeration(4, 4, 3)) {
            detail = "oracle found a (4,4,3) code";
            return false;
        }
        if (!exists_code_by_enumeration(5, 4, 3)) {
            detail = "oracle cannot match the witness at length 5";
            return false;
        }
        if (n43.found_length != 5 || !witness_satisfies_target(n43)) {
            detail = "search disagrees with the oracle";
            return false;
        }
        std::ostringstream chain;
        chain << "r=" << fcc_r << " <= N(4,2)=" << n_lambda << " < N(4,3)=" << n43.found_length;
        detail = chain.str();
        return fcc_r == 3 && n_lambda == 3 && fcc_r <= n_lambda && n_lambda < n43.found_length;
    });

    if (harness.failures == 0) {
        std::printf("all criteria passed\n");
        return 0;
    }
    std::printf("%d criterion(s) failed\n", harness.failures);
    return 1;
}
