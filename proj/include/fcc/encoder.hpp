#ifndef FCC_ENCODER_HPP
#define FCC_ENCODER_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "fcc/bitvec.hpp"
#include "fcc/code_search.hpp"
#include "fcc/function.hpp"

namespace fcc {

enum class EncoderStrategy { lambda4, generic_coloring, hwdf_parity, hwdf_mod_a, dcode };

const char* strategy_name(EncoderStrategy s);
std::optional<EncoderStrategy> strategy_from_name(std::string_view name);

/// Systematic encoder u -> (u, u_p) protecting f against t substitution
/// errors: messages with different f-values end up at distance >= 2t+1.
/// Immutable; encode/decode are pure.
class FccEncoder {
public:
    const FiniteFunction& function() const { return f_; }
    unsigned k() const { return f_.k(); }
    unsigned t() const { return t_; }
    std::size_t redundancy() const { return redundancy_; }
    EncoderStrategy strategy() const { return strategy_; }

    BitVector parity(const BitVector& u) const;
    BitVector encode(const BitVector& u) const { return concat(u, parity(u)); }

    /// Parity code rows for the coloring and mod-a strategies; null for
    /// hwdf_parity/dcode payloads.
    const BlockCode* parity_code() const;
    /// Per-message parity table (dcode strategy only).
    const std::vector<BitVector>* parity_table() const;
    /// Modulus of the coloring, when one is in play.
    std::optional<std::size_t> coloring_lambda() const;
    /// (m, a) parameters of the mod-a construction.
    std::optional<std::pair<unsigned, unsigned>> mod_a_params() const;

private:
    struct Identity {}; // t = 0: r = 0, parity empty
    struct Colored {
        CyclicColoring coloring;
        BlockCode rows; // parity of color c is row c-1
    };
    struct ThresholdParity {}; // parity = (f(u) mod 2) repeated 2t
    struct ModA {
        unsigned m;
        unsigned a;
        BlockCode code; // parity = word (f(u) mod a)
    };
    struct Matched {
        std::shared_ptr<const std::vector<BitVector>> table; // indexed by message value
    };
    using Payload = std::variant<Identity, Colored, ThresholdParity, ModA, Matched>;

    FccEncoder(FiniteFunction f, unsigned t, std::size_t redundancy, EncoderStrategy strategy,
               Payload payload)
        : f_(std::move(f)), t_(t), redundancy_(redundancy), strategy_(strategy),
          payload_(std::move(payload)) {}

    FiniteFunction f_;
    unsigned t_;
    std::size_t redundancy_;
    EncoderStrategy strategy_;
    Payload payload_;

    friend FccEncoder build_lambda4(const FiniteFunction&, unsigned);
    friend FccEncoder build_generic(const FiniteFunction&, unsigned, const BlockCode&);
    friend FccEncoder build_hwdf_parity(unsigned, unsigned, unsigned);
    friend FccEncoder build_hwdf_mod_a(unsigned, unsigned, unsigned, const std::optional<BlockCode>&);
    friend FccEncoder build_from_dcode(const FiniteFunction&, unsigned, std::span<const BitVector>,
                                       std::span<const BitVector>);
};

/// Four-row parity table construction for locally (2t, 4)-bounded functions
/// with contiguous balls; redundancy 3t.
FccEncoder build_lambda4(const FiniteFunction& f, unsigned t);

/// Color-indexed parity codewords from a supplied code with at least
/// lambda(f, 2t) words and minimum distance 2t; redundancy = code length.
FccEncoder build_generic(const FiniteFunction& f, unsigned t, const BlockCode& parity_code);

/// Parity-bit construction for the weight distribution function with
/// 4t >= T > 2t: parity = (f(u) mod 2) repeated 2t; redundancy 2t.
FccEncoder build_hwdf_parity(unsigned k, unsigned T, unsigned t);

/// Mod-a construction for the weight distribution function with T <= 4t:
/// m = floor(4t/T)+1, a = ceil(m/2)+1, parity = codeword (f(u) mod a) of an
/// a-word distance-2t code (searched when absent).
FccEncoder build_hwdf_mod_a(unsigned k, unsigned T, unsigned t,
                            const std::optional<BlockCode>& parity_code = std::nullopt);

/// Encoder from a matched parity assignment: msgs must enumerate all of
/// F_2^k and the words must satisfy the DRM of (f, t, msgs) row for row.
FccEncoder build_from_dcode(const FiniteFunction& f, unsigned t, std::span<const BitVector> msgs,
                            std::span<const BitVector> words);

/// Minimum-distance function-value decoding: the f-value of the nearest
/// codeword. nullopt when the nearest codewords disagree on f (more than t
/// errors must have occurred).
std::optional<std::size_t> decode_function(const FccEncoder& encoder, const BitVector& received);

} // namespace fcc

#endif
