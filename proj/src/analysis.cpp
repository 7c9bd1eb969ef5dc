#include "fcc/analysis.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "fcc/distance_matrix.hpp"

namespace fcc {

namespace {

struct Codebook {
    std::vector<std::uint64_t> codewords; // value form, k+r <= 64
    std::vector<std::uint32_t> labels;
    std::size_t bits = 0;
};

Codebook build_codebook(const FccEncoder& encoder) {
    Codebook book;
    book.bits = encoder.k() + encoder.redundancy();
    if (book.bits > 64) throw InvalidParameter("exhaustive analysis supports k + r <= 64");
    std::uint64_t total = std::uint64_t{1} << encoder.k();
    book.codewords.reserve(total);
    book.labels.reserve(total);
    for (std::uint64_t u = 0; u < total; ++u) {
        BitVector msg = BitVector::from_index(u, encoder.k());
        book.codewords.push_back(encoder.encode(msg).to_index());
        book.labels.push_back(static_cast<std::uint32_t>(encoder.function().eval_index(u)));
    }
    return book;
}

// Minimum-distance decode over the cached codebook; nullopt on a label tie.
std::optional<std::uint32_t> decode_cached(const Codebook& book, std::uint64_t received) {
    std::size_t best = book.bits + 1;
    std::uint32_t label = 0;
    bool ambiguous = false;
    for (std::size_t u = 0; u < book.codewords.size(); ++u) {
        std::size_t dist = std::popcount(book.codewords[u] ^ received);
        if (dist < best) {
            best = dist;
            label = book.labels[u];
            ambiguous = false;
        } else if (dist == best && book.labels[u] != label) {
            ambiguous = true;
        }
    }
    if (ambiguous) return std::nullopt;
    return label;
}

} // namespace

VerificationReport verify_fcc(const FccEncoder& encoder, const AnalysisLimits& limits) {
    return verify_fcc_at(encoder, encoder.t(), limits);
}

VerificationReport verify_fcc_at(const FccEncoder& encoder, unsigned claimed_t,
                                 const AnalysisLimits& limits) {
    if (encoder.k() > limits.verify_k_cap)
        throw SearchBudgetExceeded("verification cap is k <= " + std::to_string(limits.verify_k_cap)
                                   + "; sampled simulation can still refute",
                                   0, SearchBudgetExceeded::kUnknown);
    Codebook book = build_codebook(encoder);
    VerificationReport report;
    report.k = encoder.k();
    report.t = claimed_t;
    report.r = encoder.redundancy();
    std::size_t required = 2 * std::size_t{claimed_t} + 1;
    std::uint64_t total = book.codewords.size();
    for (std::uint64_t u = 0; u < total; ++u) {
        for (std::uint64_t v = u + 1; v < total; ++v) {
            if (book.labels[u] == book.labels[v]) continue;
            ++report.checked_pairs;
            std::size_t dist = std::popcount(book.codewords[u] ^ book.codewords[v]);
            if (dist < required) {
                report.is_fcc = false;
                report.violation = FccViolation{BitVector::from_index(u, encoder.k()),
                                                BitVector::from_index(v, encoder.k()), required, dist};
                return report;
            }
        }
    }
    report.is_fcc = true;
    return report;
}

std::size_t redundancy_lower_bound(const FiniteFunction& f, unsigned t, std::span<const BitVector> msgs,
                                   const SearchLimits& search_limits) {
    auto certificate = search_N_irregular(build_drm(f, t, msgs), search_limits);
    std::size_t floor = f.label_count() >= 2 ? 2 * std::size_t{t} : 0;
    return std::max(certificate.found_length, floor);
}

OptimalityReport check_optimality_triple(const FiniteFunction& f, unsigned t) {
    OptimalityReport report;
    std::size_t rho = 2 * std::size_t{t};
    bool bounded = compute_lambda(f, rho) <= 4;
    if (bounded && f.label_count() >= 3 && f.k() >= 2) {
        std::uint64_t total = std::uint64_t{1} << f.k();
        for (std::uint64_t u1 = 0; u1 < total && !report.hypothesis_met; ++u1) {
            std::size_t f1 = f.eval_index(u1);
            for (unsigned b1 = 0; b1 < f.k() && !report.hypothesis_met; ++b1) {
                std::uint64_t u2 = u1 ^ (std::uint64_t{1} << b1);
                std::size_t f2 = f.eval_index(u2);
                if (f2 == f1) continue;
                for (unsigned b2 = 0; b2 < f.k(); ++b2) {
                    if (b2 == b1) continue;
                    std::uint64_t u3 = u1 ^ (std::uint64_t{1} << b2);
                    std::size_t f3 = f.eval_index(u3);
                    if (f3 == f1 || f3 == f2) continue;
                    report.hypothesis_met = true;
                    report.witness_triple = {BitVector::from_index(u1, f.k()),
                                             BitVector::from_index(u2, f.k()),
                                             BitVector::from_index(u3, f.k())};
                    break;
                }
            }
        }
    }
    if (report.hypothesis_met) {
        report.lower_bound = 3 * std::size_t{t};
        try {
            report.construction_redundancy = build_lambda4(f, t).redundancy();
        } catch (const Error&) {
            // contiguity can fail even when the triple exists
        }
        report.optimal = report.construction_redundancy == report.lower_bound;
    } else {
        report.lower_bound = f.label_count() >= 2 ? 2 * std::size_t{t} : 0;
    }
    return report;
}

SimulationStats simulate_channel_exhaustive(const FccEncoder& encoder, const AnalysisLimits& limits) {
    std::size_t bits = encoder.k() + encoder.redundancy();
    if (bits > limits.simulate_bits_cap || encoder.t() > limits.simulate_t_cap)
        throw SearchBudgetExceeded("exhaustive simulation cap is k + r <= "
                                   + std::to_string(limits.simulate_bits_cap) + " with t <= "
                                   + std::to_string(limits.simulate_t_cap),
                                   0, SearchBudgetExceeded::kUnknown);
    Codebook book = build_codebook(encoder);
    SimulationStats stats;
    stats.exhaustive = true;
    stats.per_weight.assign(encoder.t() + 1, {});
    auto error_masks = flip_masks(bits, encoder.t());
    for (std::size_t u = 0; u < book.codewords.size(); ++u) {
        for (std::uint64_t e : error_masks) {
            auto decoded = decode_cached(book, book.codewords[u] ^ e);
            std::size_t w = std::popcount(e);
            ++stats.per_weight[w].trials;
            ++stats.trials;
            if (!decoded || *decoded != book.labels[u]) {
                ++stats.per_weight[w].failures;
                ++stats.failures;
            }
        }
    }
    return stats;
}

SimulationStats simulate_channel_sampled(const FccEncoder& encoder, std::uint64_t count, std::uint64_t seed) {
    Codebook book = build_codebook(encoder);
    std::size_t bits = book.bits;
    SimulationStats stats;
    stats.seed = seed;
    stats.per_weight.assign(encoder.t() + 1, {});
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> positions(bits);
    for (std::uint64_t trial = 0; trial < count; ++trial) {
        std::uint64_t u = rng() % book.codewords.size();
        std::size_t w = encoder.t() == 0 ? 0 : 1 + static_cast<std::size_t>(rng() % encoder.t());
        // Partial Fisher-Yates for a uniform w-subset of bit positions.
        for (std::size_t i = 0; i < bits; ++i) positions[i] = i;
        std::uint64_t e = 0;
        for (std::size_t i = 0; i < w; ++i) {
            std::size_t j = i + static_cast<std::size_t>(rng() % (bits - i));
            std::swap(positions[i], positions[j]);
            e |= std::uint64_t{1} << positions[i];
        }
        auto decoded = decode_cached(book, book.codewords[u] ^ e);
        ++stats.per_weight[w].trials;
        ++stats.trials;
        if (!decoded || *decoded != book.labels[u]) {
            ++stats.per_weight[w].failures;
            ++stats.failures;
        }
    }
    return stats;
}

} // namespace fcc
