#include "fcc/formats.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

namespace fcc {

namespace {

std::string trim(const std::string& s) {
    auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_tokens(const std::string& s) {
    std::istringstream iss(s);
    std::vector<std::string> tokens;
    std::string tok;
    while (iss >> tok) tokens.push_back(tok);
    return tokens;
}

// `key: value` lines; blank lines and '#' comments skipped. Keys may repeat.
struct KvDocument {
    std::vector<std::pair<std::string, std::string>> lines;

    static KvDocument parse(std::istream& in) {
        KvDocument doc;
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            std::string stripped = trim(line);
            if (stripped.empty() || stripped[0] == '#') continue;
            auto colon = stripped.find(':');
            if (colon == std::string::npos)
                throw ConfigError("line " + std::to_string(lineno) + ": expected `key: value`, got `"
                                  + stripped + "`");
            doc.lines.emplace_back(trim(stripped.substr(0, colon)), trim(stripped.substr(colon + 1)));
        }
        return doc;
    }

    const std::string* find(const std::string& key) const {
        for (const auto& [k, v] : lines)
            if (k == key) return &v;
        return nullptr;
    }

    const std::string& require(const std::string& key) const {
        const std::string* v = find(key);
        if (!v) throw ConfigError("missing field `" + key + "`");
        return *v;
    }
};

unsigned parse_unsigned(const std::string& text, const std::string& field) {
    try {
        std::size_t used = 0;
        unsigned long v = std::stoul(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return static_cast<unsigned>(v);
    } catch (const std::exception&) {
        throw ConfigError("field `" + field + "`: expected an unsigned integer, got `" + text + "`");
    }
}

void check_schema(const KvDocument& doc, const std::string& expected_kind) {
    if (doc.require("schema") != "1") throw ConfigError("unsupported schema version");
    if (doc.require("kind") != expected_kind)
        throw ConfigError("expected a `" + expected_kind + "` document, got `" + doc.require("kind") + "`");
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open " + path);
    return in;
}

} // namespace

void write_function_table(std::ostream& out, const FiniteFunction& f) {
    out << "schema: 1\n";
    out << "kind: function\n";
    out << "k: " << f.k() << "\n";
    out << "labels:";
    for (const auto& label : f.labels()) out << ' ' << label;
    out << "\nvalues:";
    std::uint64_t total = std::uint64_t{1} << f.k();
    for (std::uint64_t u = 0; u < total; ++u) out << ' ' << f.labels()[f.eval_index(u)];
    out << "\n";
}

FiniteFunction read_function_table(std::istream& in) {
    KvDocument doc = KvDocument::parse(in);
    check_schema(doc, "function");
    unsigned k = parse_unsigned(doc.require("k"), "k");
    if (k > 24) throw ConfigError("function tables support k <= 24");
    auto labels = split_tokens(doc.require("labels"));
    std::map<std::string, std::uint32_t> index;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (!index.emplace(labels[i], static_cast<std::uint32_t>(i)).second)
            throw ConfigError("duplicate label `" + labels[i] + "`");
    }
    auto value_names = split_tokens(doc.require("values"));
    std::vector<std::uint32_t> values;
    values.reserve(value_names.size());
    for (const auto& name : value_names) {
        auto it = index.find(name);
        if (it == index.end()) throw ConfigError("value `" + name + "` is not a declared label");
        values.push_back(it->second);
    }
    try {
        return FiniteFunction::from_table(k, std::move(labels), std::move(values));
    } catch (const InvalidParameter& e) {
        throw ConfigError(e.what());
    }
}

FiniteFunction load_function_table(const std::string& path) {
    auto in = open_input(path);
    return read_function_table(in);
}

void write_matrix(std::ostream& out, const DistanceMatrix& matrix) {
    out << matrix.size() << "\n";
    for (std::size_t i = 0; i < matrix.size(); ++i) {
        for (std::size_t j = 0; j < matrix.size(); ++j) {
            if (j) out << ' ';
            out << matrix.at(i, j);
        }
        out << "\n";
    }
}

DistanceMatrix read_matrix(std::istream& in, MatrixKind kind) {
    std::size_t m = 0;
    if (!(in >> m) || m == 0) throw ConfigError("matrix file must start with a positive size");
    std::vector<int> entries(m * m);
    for (auto& e : entries)
        if (!(in >> e)) throw ConfigError("matrix file ended before " + std::to_string(m * m) + " entries");
    try {
        return DistanceMatrix(m, std::move(entries), kind);
    } catch (const InvalidParameter& e) {
        throw ConfigError(e.what());
    }
}

DistanceMatrix load_matrix(const std::string& path) {
    auto in = open_input(path);
    return read_matrix(in);
}

void write_certificate(std::ostream& out, const SearchCertificate& certificate) {
    out << "schema: 1\n";
    out << "kind: certificate\n";
    if (const auto* uniform = std::get_if<UniformTarget>(&certificate.target)) {
        out << "target: uniform\n";
        out << "codewords: " << uniform->codewords << "\n";
        out << "distance: " << uniform->distance << "\n";
    } else {
        const auto& matrix = std::get<DistanceMatrix>(certificate.target);
        out << "target: irregular\n";
        out << "matrix-size: " << matrix.size() << "\n";
        for (std::size_t i = 0; i < matrix.size(); ++i) {
            out << "matrix-row:";
            for (std::size_t j = 0; j < matrix.size(); ++j) out << ' ' << matrix.at(i, j);
            out << "\n";
        }
    }
    out << "found-length: " << certificate.found_length << "\n";
    out << "witness:";
    for (const auto& w : certificate.witness.words) out << ' ' << w.to_string();
    out << "\n";
    out << "infeasibility: ";
    if (!certificate.infeasibility)
        out << "none\n";
    else
        out << (*certificate.infeasibility == InfeasibilityKind::plotkin ? "plotkin" : "exhausted") << "\n";
}

namespace {

std::string family_token(const FiniteFunction& f) {
    switch (f.family()) {
        case FunctionFamily::weight: return "weight";
        case FunctionFamily::weight_distribution: return "hwdf";
        case FunctionFamily::lexicographic_rearrangement: return "lex";
        case FunctionFamily::table: return "table";
    }
    return "?";
}

} // namespace

void write_encoder_descriptor(std::ostream& out, const FccEncoder& encoder, const std::string& table_path) {
    const FiniteFunction& f = encoder.function();
    out << "schema: 1\n";
    out << "kind: encoder\n";
    out << "strategy: " << strategy_name(encoder.strategy()) << "\n";
    out << "function: " << family_token(f) << "\n";
    out << "k: " << f.k() << "\n";
    if (f.family() == FunctionFamily::weight_distribution) out << "T: " << f.threshold() << "\n";
    if (f.family() == FunctionFamily::table) {
        if (table_path.empty())
            throw InvalidParameter("descriptor for a table-backed function needs the table path");
        out << "function-table: " << table_path << "\n";
    }
    out << "t: " << encoder.t() << "\n";
    out << "r: " << encoder.redundancy() << "\n";
    if (auto lambda = encoder.coloring_lambda()) out << "lambda: " << *lambda << "\n";
    if (auto mod = encoder.mod_a_params()) {
        out << "m: " << mod->first << "\n";
        out << "a: " << mod->second << "\n";
    }
    if (const BlockCode* code = encoder.parity_code()) {
        out << "parity-words:";
        for (const auto& w : code->words) out << ' ' << w.to_string();
        out << "\n";
    }
    if (const auto* table = encoder.parity_table()) {
        out << "parity-table:";
        for (const auto& w : *table) out << ' ' << w.to_string();
        out << "\n";
    }
}

FccEncoder read_encoder_descriptor(std::istream& in, const std::string& base_dir) {
    KvDocument doc = KvDocument::parse(in);
    check_schema(doc, "encoder");
    auto strategy = strategy_from_name(doc.require("strategy"));
    if (!strategy) throw ConfigError("unknown strategy `" + doc.require("strategy") + "`");
    unsigned k = parse_unsigned(doc.require("k"), "k");
    unsigned t = parse_unsigned(doc.require("t"), "t");
    const std::string& family = doc.require("function");

    auto make_function = [&]() -> FiniteFunction {
        if (family == "weight") return FiniteFunction::weight(k);
        if (family == "lex") return FiniteFunction::lexicographic_rearrangement(k);
        if (family == "hwdf")
            return FiniteFunction::weight_distribution(k, parse_unsigned(doc.require("T"), "T"));
        if (family == "table") {
            std::filesystem::path p = doc.require("function-table");
            if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
            return load_function_table(p.string());
        }
        throw ConfigError("unknown function family `" + family + "`");
    };

    auto parse_words = [](const std::string& text, int declared) {
        std::vector<BitVector> words;
        for (const auto& tok : split_tokens(text)) words.push_back(BitVector::from_string(tok));
        return BlockCode::make(std::move(words), declared);
    };

    std::size_t declared_r = parse_unsigned(doc.require("r"), "r");
    FiniteFunction f = make_function();
    FccEncoder encoder = [&]() -> FccEncoder {
        switch (*strategy) {
            case EncoderStrategy::lambda4: return build_lambda4(f, t);
            case EncoderStrategy::generic_coloring:
                if (t == 0) return build_generic(f, 0, BlockCode{});
                return build_generic(f, t, parse_words(doc.require("parity-words"),
                                                       2 * static_cast<int>(t)));
            case EncoderStrategy::hwdf_parity:
                return build_hwdf_parity(k, parse_unsigned(doc.require("T"), "T"), t);
            case EncoderStrategy::hwdf_mod_a: {
                std::optional<BlockCode> code;
                if (t > 0)
                    code = parse_words(doc.require("parity-words"), 2 * static_cast<int>(t));
                return build_hwdf_mod_a(k, parse_unsigned(doc.require("T"), "T"), t, code);
            }
            case EncoderStrategy::dcode: {
                std::vector<BitVector> msgs;
                msgs.reserve(std::size_t{1} << k);
                for (std::uint64_t u = 0; u < (std::uint64_t{1} << k); ++u)
                    msgs.push_back(BitVector::from_index(u, k));
                if (declared_r == 0) {
                    std::vector<BitVector> empty(msgs.size(), BitVector(0));
                    return build_from_dcode(f, t, msgs, empty);
                }
                auto table = parse_words(doc.require("parity-table"), 0);
                return build_from_dcode(f, t, msgs, table.words);
            }
        }
        throw ConfigError("unreachable strategy");
    }();

    if (encoder.redundancy() != declared_r)
        throw ConfigError("descriptor declares r=" + std::to_string(declared_r)
                          + " but the construction gives r=" + std::to_string(encoder.redundancy()));
    return encoder;
}

FccEncoder load_encoder_descriptor(const std::string& path) {
    auto in = open_input(path);
    return read_encoder_descriptor(in, std::filesystem::path(path).parent_path().string());
}

void write_verification_report(std::ostream& out, const VerificationReport& report) {
    out << "schema: 1\n";
    out << "kind: verification\n";
    out << "k: " << report.k << "\n";
    out << "t: " << report.t << "\n";
    out << "r: " << report.r << "\n";
    out << "checked-pairs: " << report.checked_pairs << "\n";
    out << "is-fcc: " << (report.is_fcc ? "true" : "false") << "\n";
    if (report.violation) {
        out << "violation-u: " << report.violation->u.to_string() << "\n";
        out << "violation-v: " << report.violation->v.to_string() << "\n";
        out << "violation-required: " << report.violation->required << "\n";
        out << "violation-actual: " << report.violation->actual << "\n";
    }
}

} // namespace fcc
