#ifndef FCC_ANALYSIS_HPP
#define FCC_ANALYSIS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fcc/encoder.hpp"

namespace fcc {

struct AnalysisLimits {
    unsigned verify_k_cap = 12;       // exhaustive pair scan over 2^k messages
    unsigned simulate_bits_cap = 16;  // exhaustive error patterns over k+r bits
    unsigned simulate_t_cap = 2;
};

struct FccViolation {
    BitVector u;
    BitVector v;
    std::size_t required;
    std::size_t actual;
};

struct VerificationReport {
    bool is_fcc = false;
    std::uint64_t checked_pairs = 0;
    std::optional<FccViolation> violation; // lexicographically first
    unsigned k = 0;
    unsigned t = 0;
    std::size_t r = 0;
};

/// Exhaustively check d(encode(u), encode(v)) >= 2t+1 over all message pairs
/// with f(u) != f(v), at the encoder's own t.
VerificationReport verify_fcc(const FccEncoder& encoder, const AnalysisLimits& limits = {});

/// Same check against a claimed error budget, which may differ from the t
/// the encoder was built for (e.g. refuting a bare identity encoding).
VerificationReport verify_fcc_at(const FccEncoder& encoder, unsigned claimed_t,
                                 const AnalysisLimits& limits = {});

/// max(minimum D-code length of the DRM over msgs, 2t when f takes at least
/// two values). A floor under the redundancy of every (f, t)-FCC.
std::size_t redundancy_lower_bound(const FiniteFunction& f, unsigned t, std::span<const BitVector> msgs,
                                   const SearchLimits& search_limits = {});

struct OptimalityReport {
    bool hypothesis_met = false;
    std::optional<std::array<BitVector, 3>> witness_triple;
    std::size_t lower_bound = 0;
    std::optional<std::size_t> construction_redundancy; // 3t when the 4-row construction applies
    bool optimal = false;

    const char* verdict() const {
        if (optimal) return "optimal";
        if (hypothesis_met) return "lower bound holds, construction unavailable";
        return "not established";
    }
};

/// Look for three messages with pairwise distinct f-values at distances
/// (1, 1, 2). When found (and f is locally (2t,4)-bounded) the redundancy
/// lower bound 3t matches the 4-row construction exactly.
OptimalityReport check_optimality_triple(const FiniteFunction& f, unsigned t);

struct WeightBucket {
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
};

struct SimulationStats {
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
    std::vector<WeightBucket> per_weight; // index = error weight, 0..t
    bool exhaustive = false;
    std::uint64_t seed = 0; // sampled mode only
};

/// Every message x every error pattern of weight <= t; decoded f-value must
/// match. Zero failures certify the decoding guarantee at this scale.
SimulationStats simulate_channel_exhaustive(const FccEncoder& encoder, const AnalysisLimits& limits = {});

/// Random trials: message uniform, error weight uniform in 1..t, support
/// uniform. Deterministic for a fixed seed.
SimulationStats simulate_channel_sampled(const FccEncoder& encoder, std::uint64_t count, std::uint64_t seed);

} // namespace fcc

#endif
