// fcctool: build, search, verify and tabulate function-correcting codes.
//
// Exit codes: 0 success/certified, 1 property refuted, 2 budget exceeded,
// 3 configuration error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "fcc/analysis.hpp"
#include "fcc/formats.hpp"

using namespace fcc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitBudget = 2;
constexpr int kExitConfig = 3;

struct GlobalOptions {
    std::string format = "human"; // human | csv | structured
    std::string out_path;
    unsigned cap_k = 12;
    std::uint64_t cap_nodes = 50'000'000;

    SearchLimits search_limits() const {
        SearchLimits limits;
        limits.node_cap = cap_nodes;
        return limits;
    }
    AnalysisLimits analysis_limits() const {
        AnalysisLimits limits;
        limits.verify_k_cap = cap_k;
        return limits;
    }
};

struct FunctionOptions {
    std::string builtin; // weight | hwdf | lex
    std::string table_path;
    unsigned k = 0;
    unsigned T = 0;

    void add_flags(CLI::App* cmd) {
        cmd->add_option("--fn", builtin, "builtin function: weight, hwdf, lex");
        cmd->add_option("--fn-table", table_path, "path to a function-table file");
        cmd->add_option("--k", k, "message length for builtin functions");
        cmd->add_option("--T", T, "threshold for the hwdf family");
    }

    FiniteFunction resolve() const {
        if (builtin.empty() == table_path.empty())
            throw ConfigError("give exactly one of --fn or --fn-table");
        if (!table_path.empty()) return load_function_table(table_path);
        if (k == 0) throw ConfigError("builtin functions need --k");
        if (builtin == "weight") return FiniteFunction::weight(k);
        if (builtin == "lex") return FiniteFunction::lexicographic_rearrangement(k);
        if (builtin == "hwdf") {
            if (T == 0) throw ConfigError("--fn hwdf needs --T");
            return FiniteFunction::weight_distribution(k, T);
        }
        throw ConfigError("unknown builtin function `" + builtin + "`");
    }

    // Threshold of the resolved family, with the weight function as T=1.
    unsigned effective_threshold() const { return builtin == "weight" ? 1 : T; }
};

std::ostream& open_out(const GlobalOptions& global, std::ofstream& file) {
    if (global.out_path.empty()) return std::cout;
    file.open(global.out_path);
    if (!file) throw ConfigError("cannot write " + global.out_path);
    return file;
}

void emit_header(std::ostream& out, const GlobalOptions& global, const std::string& kind) {
    if (global.format == "structured") out << "schema: 1\nkind: " << kind << "\n";
}

std::vector<BitVector> parse_vector_list(const std::string& csv) {
    std::vector<BitVector> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(BitVector::from_string(item));
    }
    return out;
}

std::vector<BitVector> read_word_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open " + path);
    std::vector<BitVector> out;
    std::string tok;
    while (in >> tok) out.push_back(BitVector::from_string(tok));
    return out;
}

std::vector<BitVector> all_messages(unsigned k) {
    if (k > 20) throw ConfigError("full message enumeration supports k <= 20");
    std::vector<BitVector> out;
    out.reserve(std::size_t{1} << k);
    for (std::uint64_t u = 0; u < (std::uint64_t{1} << k); ++u)
        out.push_back(BitVector::from_index(u, k));
    return out;
}

// ---------------------------------------------------------------- commands

int cmd_ball(const GlobalOptions& global, const FunctionOptions& fn, const std::string& center,
             unsigned rho) {
    auto f = fn.resolve();
    auto ball = function_ball(f, BitVector::from_string(center), rho);
    std::ofstream file;
    auto& out = open_out(global, file);
    emit_header(out, global, "ball");
    out << "u: " << center << "\n";
    out << "rho: " << rho << "\n";
    out << "ball-size: " << ball.size() << "\n";
    out << "ball:";
    for (auto label : ball) out << ' ' << f.labels()[label];
    out << "\n";
    return kExitOk;
}

int cmd_lambda(const GlobalOptions& global, const FunctionOptions& fn, std::optional<unsigned> rho,
               std::optional<unsigned> t, bool bound) {
    if (rho.has_value() == t.has_value())
        throw ConfigError("give exactly one of --rho or --t (rho = 2t)");
    unsigned radius = rho ? *rho : 2 * *t;
    auto f = fn.resolve();
    std::size_t lambda = compute_lambda(f, radius);
    std::ofstream file;
    auto& out = open_out(global, file);
    emit_header(out, global, "lambda");
    out << "rho: " << radius << "\n";
    out << "lambda: " << lambda << "\n";
    if (bound) {
        if (!t) throw ConfigError("--bound needs --t");
        unsigned T = fn.effective_threshold();
        if (T == 0) throw ConfigError("--bound applies to the weight/hwdf families");
        out << "bound: " << hwdf_lambda_bound(T, *t) << "\n";
    }
    return kExitOk;
}

int cmd_contiguity(const GlobalOptions& global, const FunctionOptions& fn, unsigned rho) {
    auto f = fn.resolve();
    auto result = check_contiguity(f, rho);
    std::ofstream file;
    auto& out = open_out(global, file);
    emit_header(out, global, "contiguity");
    out << "rho: " << rho << "\n";
    out << "contiguous: " << (result.contiguous ? "true" : "false") << "\n";
    if (result.witness) out << "witness: " << result.witness->to_string() << "\n";
    return result.contiguous ? kExitOk : kExitRefuted;
}

int cmd_drm(const GlobalOptions& global, const FunctionOptions& fn, unsigned t, const std::string& msgs_csv) {
    auto f = fn.resolve();
    std::vector<BitVector> msgs =
        msgs_csv.empty() ? all_messages(f.k()) : parse_vector_list(msgs_csv);
    auto drm = build_drm(f, t, msgs);
    std::ofstream file;
    auto& out = open_out(global, file);
    write_matrix(out, drm);
    return kExitOk;
}

int cmd_fdm(const GlobalOptions& global, const FunctionOptions& fn, unsigned t) {
    auto f = fn.resolve();
    std::ofstream file;
    auto& out = open_out(global, file);
    write_matrix(out, build_fdm(f, t));
    return kExitOk;
}

int cmd_search(const GlobalOptions& global, bool uniform, bool irregular, std::size_t m, int d,
               const std::string& matrix_path) {
    if (uniform == irregular) throw ConfigError("give exactly one of --uniform or --irregular");
    SearchCertificate cert = [&] {
        if (uniform) {
            if (m == 0) throw ConfigError("--uniform needs --M and --d");
            return search_N_uniform(m, d, global.search_limits());
        }
        if (matrix_path.empty()) throw ConfigError("--irregular needs --matrix");
        return search_N_irregular(load_matrix(matrix_path), global.search_limits());
    }();
    std::ofstream file;
    auto& out = open_out(global, file);
    write_certificate(out, cert);
    return kExitOk;
}

FccEncoder build_encoder(const GlobalOptions& global, const FunctionOptions& fn, unsigned t,
                         const std::string& strategy_token, const std::string& parity_path,
                         const std::string& words_path) {
    auto strategy = strategy_from_name(strategy_token);
    if (!strategy) throw ConfigError("unknown strategy `" + strategy_token + "`");
    auto f = fn.resolve();
    std::optional<BlockCode> supplied;
    if (!parity_path.empty())
        supplied = BlockCode::make(read_word_file(parity_path), 2 * static_cast<int>(t));
    switch (*strategy) {
        case EncoderStrategy::lambda4:
            return build_lambda4(f, t);
        case EncoderStrategy::generic_coloring: {
            if (supplied) return build_generic(f, t, *supplied);
            std::size_t lambda = compute_lambda(f, 2 * std::size_t{t});
            auto cert = search_N_uniform(lambda, 2 * static_cast<int>(t), global.search_limits());
            return build_generic(f, t, cert.witness);
        }
        case EncoderStrategy::hwdf_parity: {
            unsigned T = fn.effective_threshold();
            if (T == 0) throw ConfigError("--strategy parity applies to the weight/hwdf families");
            return build_hwdf_parity(f.k(), T, t);
        }
        case EncoderStrategy::hwdf_mod_a: {
            unsigned T = fn.effective_threshold();
            if (T == 0) throw ConfigError("--strategy mod-a applies to the weight/hwdf families");
            return build_hwdf_mod_a(f.k(), T, t, supplied);
        }
        case EncoderStrategy::dcode: {
            auto msgs = all_messages(f.k());
            std::vector<BitVector> words;
            if (!words_path.empty()) {
                words = read_word_file(words_path);
            } else {
                auto cert = search_N_irregular(build_drm(f, t, msgs), global.search_limits());
                words = cert.witness.words;
            }
            return build_from_dcode(f, t, msgs, words);
        }
    }
    throw ConfigError("unreachable strategy");
}

int cmd_build(const GlobalOptions& global, const FunctionOptions& fn, unsigned t,
              const std::string& strategy_token, const std::string& parity_path,
              const std::string& words_path, const std::string& descriptor_path) {
    auto encoder = build_encoder(global, fn, t, strategy_token, parity_path, words_path);

    if (!descriptor_path.empty()) {
        std::ofstream out(descriptor_path);
        if (!out) throw ConfigError("cannot write " + descriptor_path);
        write_encoder_descriptor(out, encoder, fn.table_path);
    }
    std::ofstream file;
    auto& out = open_out(global, file);
    emit_header(out, global, "build");
    out << "strategy: " << strategy_name(encoder.strategy()) << "\n";
    out << "k: " << encoder.k() << "\n";
    out << "t: " << encoder.t() << "\n";
    out << "r: " << encoder.redundancy() << "\n";
    if (auto mod = encoder.mod_a_params()) out << "a: " << mod->second << "\n";

    if (encoder.k() <= global.cap_k) {
        auto report = verify_fcc(encoder, global.analysis_limits());
        out << "verified: " << (report.is_fcc ? "true" : "false") << "\n";
        if (!report.is_fcc) {
            out << "violation-u: " << report.violation->u.to_string() << "\n";
            out << "violation-v: " << report.violation->v.to_string() << "\n";
            return kExitRefuted;
        }
    } else {
        out << "verified: skipped (k beyond --cap-k)\n";
    }
    return kExitOk;
}

int cmd_verify(const GlobalOptions& global, const std::string& descriptor_path,
               std::optional<unsigned> claimed_t) {
    auto encoder = load_encoder_descriptor(descriptor_path);
    auto report = claimed_t ? verify_fcc_at(encoder, *claimed_t, global.analysis_limits())
                            : verify_fcc(encoder, global.analysis_limits());
    std::ofstream file;
    auto& out = open_out(global, file);
    write_verification_report(out, report);
    return report.is_fcc ? kExitOk : kExitRefuted;
}

int cmd_simulate(const GlobalOptions& global, const std::string& descriptor_path, bool exhaustive,
                 std::uint64_t samples, std::optional<std::uint64_t> seed) {
    auto encoder = load_encoder_descriptor(descriptor_path);
    SimulationStats stats;
    if (exhaustive) {
        stats = simulate_channel_exhaustive(encoder);
    } else {
        if (samples == 0) throw ConfigError("give --exhaustive or --samples N --seed S");
        if (!seed) throw ConfigError("sampled simulation needs an explicit --seed");
        stats = simulate_channel_sampled(encoder, samples, *seed);
    }
    std::ofstream file;
    auto& out = open_out(global, file);
    emit_header(out, global, "simulation");
    out << "mode: " << (stats.exhaustive ? "exhaustive" : "sampled") << "\n";
    if (!stats.exhaustive) out << "seed: " << stats.seed << "\n";
    out << "trials: " << stats.trials << "\n";
    out << "failures: " << stats.failures << "\n";
    for (std::size_t w = 0; w < stats.per_weight.size(); ++w)
        out << "weight-" << w << ": " << stats.per_weight[w].trials << " trials, "
            << stats.per_weight[w].failures << " failures\n";
    return stats.failures == 0 ? kExitOk : kExitRefuted;
}

struct TableRow {
    std::string name;
    unsigned k = 0;
    unsigned t = 0;
    std::string lambda, fcc_r, n_lambda, n_e, n_e_stronger;
};

// Best redundancy over the constructions whose preconditions hold.
std::string best_construction_r(unsigned T, unsigned t, std::size_t lambda, std::size_t n_lambda,
                                bool contiguous) {
    std::size_t best = SIZE_MAX;
    if (contiguous && lambda <= 4) best = std::min(best, 3 * std::size_t{t});
    if (contiguous) best = std::min(best, n_lambda);
    if (T > 0 && 4 * t >= T && T > 2 * t) best = std::min(best, 2 * std::size_t{t});
    if (T > 0 && T <= 4 * t) {
        unsigned m = 4 * t / T + 1;
        unsigned a = (m + 1) / 2 + 1;
        best = std::min(best, search_N_uniform(a, 2 * static_cast<int>(t)).found_length);
    }
    if (best == SIZE_MAX) return "-";
    return std::to_string(best);
}

int cmd_table(const GlobalOptions& global, const std::string& fns_csv, unsigned k, unsigned t) {
    std::vector<TableRow> rows;
    std::stringstream ss(fns_csv);
    std::string token;
    auto limits = global.search_limits();
    while (std::getline(ss, token, ',')) {
        if (token.empty()) continue;
        FiniteFunction f = [&]() -> FiniteFunction {
            if (token == "weight") return FiniteFunction::weight(k);
            if (token == "lex") return FiniteFunction::lexicographic_rearrangement(k);
            if (token.rfind("hwdf:", 0) == 0) {
                unsigned T = 0;
                try {
                    T = static_cast<unsigned>(std::stoul(token.substr(5)));
                } catch (const std::exception&) {
                    throw ConfigError("bad threshold in `" + token + "`");
                }
                return FiniteFunction::weight_distribution(k, T);
            }
            if (token.rfind("table:", 0) == 0) return load_function_table(token.substr(6));
            throw ConfigError("unknown table entry `" + token + "`; use weight, lex, hwdf:T or table:path");
        }();
        unsigned T = 0;
        if (token == "weight") T = 1;
        if (token.rfind("hwdf:", 0) == 0) T = f.threshold();

        TableRow row;
        row.name = token;
        row.k = f.k();
        row.t = t;
        std::size_t e = f.label_count();
        std::size_t lambda = compute_lambda(f, 2 * std::size_t{t});
        bool contiguous = check_contiguity(f, 2 * std::size_t{t}).contiguous;
        row.lambda = std::to_string(lambda);
        auto n_of = [&](std::size_t words, int dist) -> std::optional<std::size_t> {
            try {
                return search_N_uniform(words, dist, limits).found_length;
            } catch (const SearchBudgetExceeded&) {
                return std::nullopt;
            }
        };
        auto n_lambda = n_of(lambda, 2 * static_cast<int>(t));
        auto n_e = n_of(e, 2 * static_cast<int>(t));
        auto n_e_stronger = n_of(e, 2 * static_cast<int>(t) + 1);
        row.n_lambda = n_lambda ? std::to_string(*n_lambda) : "cap";
        row.n_e = n_e ? std::to_string(*n_e) : "cap";
        row.n_e_stronger = n_e_stronger ? std::to_string(*n_e_stronger) : "cap";
        row.fcc_r = n_lambda ? best_construction_r(T, t, lambda, *n_lambda, contiguous) : "cap";
        rows.push_back(std::move(row));
    }

    std::ofstream file;
    auto& out = open_out(global, file);
    if (global.format == "csv") {
        out << "function,k,t,lambda,fcc_r,n_lambda_2t,n_e_2t,n_e_2t1\n";
        for (const auto& row : rows)
            out << row.name << ',' << row.k << ',' << row.t << ',' << row.lambda << ',' << row.fcc_r
                << ',' << row.n_lambda << ',' << row.n_e << ',' << row.n_e_stronger << "\n";
    } else {
        emit_header(out, global, "table");
        if (global.format != "structured")
            out << "function  k  t  lambda  fcc_r  N(lambda,2t)  N(E,2t)  N(E,2t+1)\n";
        for (const auto& row : rows) {
            if (global.format == "structured") {
                out << "row: " << row.name << ' ' << row.k << ' ' << row.t << ' ' << row.lambda << ' '
                    << row.fcc_r << ' ' << row.n_lambda << ' ' << row.n_e << ' ' << row.n_e_stronger
                    << "\n";
            } else {
                out << row.name << "  " << row.k << "  " << row.t << "  " << row.lambda << "  "
                    << row.fcc_r << "  " << row.n_lambda << "  " << row.n_e << "  "
                    << row.n_e_stronger << "\n";
            }
        }
        out << "ordering: fcc_r <= N(lambda,2t) <= N(E,2t) < N(E,2t+1)\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"function-correcting code toolkit"};
    app.require_subcommand(1);
    // Global flags may appear after the subcommand name.
    app.fallthrough();

    GlobalOptions global;
    app.add_option("--format", global.format, "output format: human, csv, structured")
        ->check(CLI::IsMember({"human", "csv", "structured"}));
    app.add_option("--out", global.out_path, "write the primary output to this path");
    app.add_option("--cap-k", global.cap_k, "exhaustive verification cap on k");
    app.add_option("--cap-nodes", global.cap_nodes, "search node budget");

    FunctionOptions fn;
    std::string center;
    unsigned rho_value = 0, table_k = 0;
    std::optional<unsigned> rho_opt, t_opt;
    bool bound = false;
    unsigned t_value = 1;
    std::string msgs_csv;
    bool uniform = false, irregular = false;
    std::size_t search_m = 0;
    int search_d = 0;
    std::string matrix_path, strategy_token, parity_path, words_path, descriptor_path;
    std::optional<unsigned> claimed_t;
    bool exhaustive = false;
    std::uint64_t samples = 0;
    std::optional<std::uint64_t> seed;
    std::string fns_csv = "weight";

    auto* ball = app.add_subcommand("ball", "function ball around a message");
    fn.add_flags(ball);
    ball->add_option("--u", center, "center message")->required();
    ball->add_option("--rho", rho_value, "ball radius")->required();

    auto* lambda = app.add_subcommand("lambda", "smallest local bound lambda");
    fn.add_flags(lambda);
    lambda->add_option("--rho", rho_opt, "ball radius");
    lambda->add_option("--t", t_opt, "error budget (radius 2t)");
    lambda->add_flag("--bound", bound, "also print the hwdf closed-form bound");

    auto* contiguity = app.add_subcommand("contiguity", "check the contiguity condition");
    fn.add_flags(contiguity);
    contiguity->add_option("--rho", rho_value, "ball radius")->required();

    auto* drm = app.add_subcommand("drm", "distance requirement matrix");
    fn.add_flags(drm);
    drm->add_option("--t", t_value, "error budget")->required();
    drm->add_option("--msgs", msgs_csv, "comma-separated messages (default: all)");

    auto* fdm = app.add_subcommand("fdm", "function distance matrix");
    fn.add_flags(fdm);
    fdm->add_option("--t", t_value, "error budget")->required();

    auto* search = app.add_subcommand("search", "exact minimum-length code search");
    search->add_flag("--uniform", uniform, "search N(M, d)");
    search->add_flag("--irregular", irregular, "search N(D) for a matrix file");
    search->add_option("--M", search_m, "number of codewords");
    search->add_option("--d", search_d, "minimum distance");
    search->add_option("--matrix", matrix_path, "distance matrix file");

    auto* build = app.add_subcommand("build", "build an encoder and verify it");
    fn.add_flags(build);
    build->add_option("--t", t_value, "error budget")->required();
    build->add_option("--strategy", strategy_token, "lambda4, generic, parity, mod-a, dcode")
        ->required();
    build->add_option("--parity-code", parity_path, "file of parity codewords (default: search)");
    build->add_option("--words", words_path, "file of matched parity words for dcode");
    build->add_option("--descriptor", descriptor_path, "write the encoder descriptor here");

    auto* verify = app.add_subcommand("verify", "verify an encoder descriptor");
    verify->add_option("--descriptor", descriptor_path, "encoder descriptor file")->required();
    verify->add_option("--t", claimed_t, "claimed error budget (default: the descriptor's)");

    auto* simulate = app.add_subcommand("simulate", "noisy-channel recovery statistics");
    simulate->add_option("--descriptor", descriptor_path, "encoder descriptor file")->required();
    simulate->add_flag("--exhaustive", exhaustive, "all error patterns of weight <= t");
    simulate->add_option("--samples", samples, "number of random trials");
    simulate->add_option("--seed", seed, "RNG seed (mandatory with --samples)");

    auto* table = app.add_subcommand("table", "redundancy comparison table");
    table->add_option("--fns", fns_csv, "comma list: weight, lex, hwdf:T, table:path");
    table->add_option("--k", table_k, "message length")->required();
    table->add_option("--t", t_value, "error budget")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (ball->parsed()) return cmd_ball(global, fn, center, rho_value);
        if (lambda->parsed()) return cmd_lambda(global, fn, rho_opt, t_opt, bound);
        if (contiguity->parsed()) return cmd_contiguity(global, fn, rho_value);
        if (drm->parsed()) return cmd_drm(global, fn, t_value, msgs_csv);
        if (fdm->parsed()) return cmd_fdm(global, fn, t_value);
        if (search->parsed())
            return cmd_search(global, uniform, irregular, search_m, search_d, matrix_path);
        if (build->parsed())
            return cmd_build(global, fn, t_value, strategy_token, parity_path, words_path,
                             descriptor_path);
        if (verify->parsed()) return cmd_verify(global, descriptor_path, claimed_t);
        if (simulate->parsed())
            return cmd_simulate(global, descriptor_path, exhaustive, samples, seed);
        if (table->parsed()) return cmd_table(global, fns_csv, table_k, t_value);
        throw ConfigError("no command given");
    } catch (const SearchBudgetExceeded& e) {
        std::cerr << e.name() << ": " << e.what() << "\n";
        return kExitBudget;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const Error& e) {
        std::cerr << e.name() << ": " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
}
