#include "fcc/encoder.hpp"

#include <algorithm>
#include <string>

namespace fcc {

const char* strategy_name(EncoderStrategy s) {
    switch (s) {
        case EncoderStrategy::lambda4: return "lambda4";
        case EncoderStrategy::generic_coloring: return "generic";
        case EncoderStrategy::hwdf_parity: return "parity";
        case EncoderStrategy::hwdf_mod_a: return "mod-a";
        case EncoderStrategy::dcode: return "dcode";
    }
    return "?";
}

std::optional<EncoderStrategy> strategy_from_name(std::string_view name) {
    if (name == "lambda4") return EncoderStrategy::lambda4;
    if (name == "generic") return EncoderStrategy::generic_coloring;
    if (name == "parity") return EncoderStrategy::hwdf_parity;
    if (name == "mod-a") return EncoderStrategy::hwdf_mod_a;
    if (name == "dcode") return EncoderStrategy::dcode;
    return std::nullopt;
}

BitVector FccEncoder::parity(const BitVector& u) const {
    if (u.length() != f_.k()) throw LengthMismatch(u.length(), f_.k());
    if (std::holds_alternative<Identity>(payload_)) return BitVector(0);
    if (const auto* colored = std::get_if<Colored>(&payload_))
        return colored->rows.words[colored->coloring.color(u) - 1];
    if (std::holds_alternative<ThresholdParity>(payload_)) {
        bool odd = f_.eval(u) % 2 != 0;
        BitVector bit = BitVector::from_index(odd ? 1 : 0, 1);
        return repeat(bit, 2 * t_);
    }
    if (const auto* mod = std::get_if<ModA>(&payload_))
        return mod->code.words[f_.eval(u) % mod->a];
    const auto& matched = std::get<Matched>(payload_);
    return (*matched.table)[u.to_index()];
}

const BlockCode* FccEncoder::parity_code() const {
    if (const auto* colored = std::get_if<Colored>(&payload_)) return &colored->rows;
    if (const auto* mod = std::get_if<ModA>(&payload_)) return &mod->code;
    return nullptr;
}

const std::vector<BitVector>* FccEncoder::parity_table() const {
    if (const auto* matched = std::get_if<Matched>(&payload_)) return matched->table.get();
    return nullptr;
}

std::optional<std::size_t> FccEncoder::coloring_lambda() const {
    if (const auto* colored = std::get_if<Colored>(&payload_)) return colored->coloring.lambda();
    return std::nullopt;
}

std::optional<std::pair<unsigned, unsigned>> FccEncoder::mod_a_params() const {
    if (const auto* mod = std::get_if<ModA>(&payload_)) return std::make_pair(mod->m, mod->a);
    return std::nullopt;
}

namespace {

// The four parity rows, each repeated t times as a whole block. Pairwise
// distance is exactly 2t.
BlockCode lambda4_rows(unsigned t) {
    std::vector<BitVector> rows;
    for (const char* base : {"000", "110", "101", "011"})
        rows.push_back(repeat(BitVector::from_string(base), t));
    return BlockCode::make(std::move(rows), 2 * static_cast<int>(t));
}

void require_parity_code(const BlockCode& code, std::size_t needed_words, unsigned t) {
    if (code.word_count() < needed_words)
        throw InvalidParityCode("parity code has " + std::to_string(code.word_count())
                                + " words, need " + std::to_string(needed_words));
    auto dmin = min_pairwise_distance(code.words);
    if (dmin && *dmin < 2 * static_cast<std::size_t>(t))
        throw InvalidParityCode("parity code minimum distance " + std::to_string(*dmin)
                                + " below required " + std::to_string(2 * t));
}

} // namespace

FccEncoder build_lambda4(const FiniteFunction& f, unsigned t) {
    if (t == 0) return FccEncoder(f, 0, 0, EncoderStrategy::lambda4, FccEncoder::Identity{});
    auto coloring = make_cyclic_coloring(f, 4, 2 * std::size_t{t});
    return FccEncoder(f, t, 3 * std::size_t{t}, EncoderStrategy::lambda4,
                      FccEncoder::Colored{std::move(coloring), lambda4_rows(t)});
}

FccEncoder build_generic(const FiniteFunction& f, unsigned t, const BlockCode& parity_code) {
    if (t == 0) return FccEncoder(f, 0, 0, EncoderStrategy::generic_coloring, FccEncoder::Identity{});
    std::size_t needed = compute_lambda(f, 2 * std::size_t{t});
    require_parity_code(parity_code, needed, t);
    auto coloring = make_cyclic_coloring(f, parity_code.word_count(), 2 * std::size_t{t});
    return FccEncoder(f, t, parity_code.length, EncoderStrategy::generic_coloring,
                      FccEncoder::Colored{std::move(coloring), parity_code});
}

FccEncoder build_hwdf_parity(unsigned k, unsigned T, unsigned t) {
    auto f = FiniteFunction::weight_distribution(k, T);
    if (t == 0) return FccEncoder(std::move(f), 0, 0, EncoderStrategy::hwdf_parity, FccEncoder::Identity{});
    if (!(4 * t >= T && T > 2 * t))
        throw ThresholdOutOfRange("parity construction needs 4t >= T > 2t, got T=" + std::to_string(T)
                                  + ", t=" + std::to_string(t));
    return FccEncoder(std::move(f), t, 2 * std::size_t{t}, EncoderStrategy::hwdf_parity,
                      FccEncoder::ThresholdParity{});
}

FccEncoder build_hwdf_mod_a(unsigned k, unsigned T, unsigned t,
                            const std::optional<BlockCode>& parity_code) {
    auto f = FiniteFunction::weight_distribution(k, T);
    if (t == 0) return FccEncoder(std::move(f), 0, 0, EncoderStrategy::hwdf_mod_a, FccEncoder::Identity{});
    if (T > 4 * t)
        throw ThresholdOutOfRange("mod-a construction needs T <= 4t; for T > 4t the function is "
                                  "locally binary, use the generic construction with a 2-word code");
    unsigned m = 4 * t / T + 1; // unique m with 4t/(m-1) >= T > 4t/m
    unsigned a = (m + 1) / 2 + 1;
    BlockCode code;
    if (parity_code) {
        require_parity_code(*parity_code, a, t);
        code = *parity_code;
    } else if (a == 4) {
        code = repetition_code_4(t);
    } else {
        code = search_N_uniform(a, 2 * static_cast<int>(t)).witness;
    }
    return FccEncoder(std::move(f), t, code.length, EncoderStrategy::hwdf_mod_a,
                      FccEncoder::ModA{m, a, std::move(code)});
}

FccEncoder build_from_dcode(const FiniteFunction& f, unsigned t, std::span<const BitVector> msgs,
                            std::span<const BitVector> words) {
    if (f.k() > 24) throw InvalidParameter("dcode construction supports k <= 24");
    std::uint64_t total = std::uint64_t{1} << f.k();
    if (msgs.size() != total)
        throw InvalidParameter("dcode needs all 2^k messages, got " + std::to_string(msgs.size()));
    if (words.size() != msgs.size())
        throw InvalidParameter("need one parity word per message");
    std::size_t r = words.empty() ? 0 : words.front().length();
    for (const auto& w : words)
        if (w.length() != r) throw LengthMismatch(w.length(), r);

    // Table indexed by message value; also confirms msgs is a permutation.
    std::vector<BitVector> table(total, BitVector(r));
    std::vector<char> seen(total, 0);
    for (std::size_t i = 0; i < msgs.size(); ++i) {
        if (msgs[i].length() != f.k()) throw LengthMismatch(msgs[i].length(), f.k());
        std::uint64_t idx = msgs[i].to_index();
        if (seen[idx]) throw InvalidParameter("message " + msgs[i].to_string() + " listed twice");
        seen[idx] = 1;
        table[idx] = words[i];
    }

    int reach = 2 * static_cast<int>(t) + 1;
    for (std::size_t i = 0; i < msgs.size(); ++i) {
        for (std::size_t j = i + 1; j < msgs.size(); ++j) {
            if (f.eval(msgs[i]) == f.eval(msgs[j])) continue;
            int required = std::max(reach - static_cast<int>(hamming_distance(msgs[i], msgs[j])), 0);
            if (required == 0) continue;
            int actual = static_cast<int>(hamming_distance(words[i], words[j]));
            if (actual < required) throw DistanceRequirementViolation(i, j, required, actual);
        }
    }
    return FccEncoder(f, t, r, EncoderStrategy::dcode,
                      FccEncoder::Matched{std::make_shared<const std::vector<BitVector>>(std::move(table))});
}

std::optional<std::size_t> decode_function(const FccEncoder& encoder, const BitVector& received) {
    std::size_t n = encoder.k() + encoder.redundancy();
    if (received.length() != n) throw LengthMismatch(received.length(), n);
    if (encoder.k() > 24) throw InvalidParameter("decoding scans all messages; supports k <= 24");
    std::uint64_t total = std::uint64_t{1} << encoder.k();
    std::size_t best = n + 1;
    std::optional<std::size_t> label;
    bool ambiguous = false;
    for (std::uint64_t u = 0; u < total; ++u) {
        BitVector msg = BitVector::from_index(u, encoder.k());
        std::size_t dist = hamming_distance(encoder.encode(msg), received);
        if (dist < best) {
            best = dist;
            label = encoder.function().eval_index(u);
            ambiguous = false;
        } else if (dist == best && label != encoder.function().eval_index(u)) {
            ambiguous = true;
        }
    }
    if (ambiguous) return std::nullopt;
    return label;
}

} // namespace fcc
