// Command-line workbench: encoders, the unique and list decoders, brute-force
// minimum distance, the list-size bound chain, the Monte Carlo experiment,
// and subspace distance utilities.

#include <CLI11.hpp>
#include <Eigen/Dense>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "cpcodes/analysis.hpp"
#include "cpcodes/channel.hpp"
#include "cpcodes/decode_list.hpp"
#include "cpcodes/decode_unique.hpp"
#include "cpcodes/serialize.hpp"
#include "cpcodes/simulate.hpp"
#include "cpcodes/subspace.hpp"

namespace {

using namespace cpcodes;

constexpr int kExitOk = 0;
constexpr int kExitDecodeFailure = 1;
constexpr int kExitUsage = 2;

std::vector<std::uint32_t> parse_coeffs(const std::string& s) {
    std::vector<std::uint32_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(static_cast<std::uint32_t>(std::stoul(item)));
    }
    return out;
}

nlohmann::json read_json_input(const std::string& path) {
    if (path.empty() || path == "-") {
        nlohmann::json j;
        std::cin >> j;
        return j;
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    nlohmann::json j;
    in >> j;
    return j;
}

Eigen::MatrixXcd matrix_from_json(const nlohmann::json& rows) {
    if (!rows.is_array() || rows.empty())
        throw std::invalid_argument("subspace basis: expected a nonempty array of rows");
    const std::size_t ncols = rows[0].size();
    Eigen::MatrixXcd m(rows.size(), ncols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != ncols) throw std::invalid_argument("subspace basis: ragged rows");
        for (std::size_t c = 0; c < ncols; ++c) {
            const auto& v = rows[r][c];
            if (!v.is_array() || v.size() != 2)
                throw std::invalid_argument("subspace basis: entries must be [re, im]");
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                std::complex<double>(v[0].get<double>(), v[1].get<double>());
        }
    }
    return m;
}

std::uint64_t default_seed_from_env() {
    if (const char* env = std::getenv("CPCODES_SEED")) return std::stoull(env);
    return 0;
}

int cmd_encode(std::uint32_t q, std::uint32_t k, const std::string& code,
               const std::string& coeffs, const std::string& ordering) {
    CodeParams params = CodeParams::make(
        q, k, ordering == "primitive" ? Ordering::primitive_root : Ordering::natural);
    Polynomial f(*params.field, parse_coeffs(coeffs));
    nlohmann::json j;
    if (code == "cp") {
        j = to_json(cp_encode(f, params));
    } else if (code == "rs") {
        j = to_json(rs_encode(f, params));
    } else if (code == "grs") {
        j = to_json(grs_encode(f, params));
    } else {
        throw CLI::ValidationError("--code must be cp, rs or grs");
    }
    j["q"] = q;
    j["k"] = k;
    j["code"] = code;
    std::cout << j.dump() << '\n';
    return kExitOk;
}

int cmd_decode(std::uint32_t q, std::uint32_t k, const std::string& input, bool plain) {
    CodeParams params = CodeParams::make(q, k);
    ComplexWord w = complex_word_from_json(read_json_input(input));
    try {
        DecodeResult r =
            cp_decode(w, params, plain ? CpPreprocess::plain_rs : CpPreprocess::grs_scaled);
        std::cout << decode_result_json(r).dump() << '\n';
        return kExitOk;
    } catch (const decoding_failure& e) {
        nlohmann::json j;
        j["status"] = "decoding_failure";
        j["error"] = e.what();
        std::cout << j.dump() << '\n';
        return kExitDecodeFailure;
    }
}

int cmd_list_decode(std::uint32_t q, std::uint32_t k, std::uint32_t s, const std::string& input) {
    CodeParams params = CodeParams::make(q, k);
    ComplexWord w = complex_word_from_json(read_json_input(input));
    std::vector<Polynomial> list = cp_list_decode(w, s, params);
    GsParams gp = gs_params(params.n, k, s);
    std::cout << list_result_json(list, gp).dump() << '\n';
    return list.empty() ? kExitDecodeFailure : kExitOk;
}

int cmd_mindist(std::uint32_t q, std::uint32_t k, const std::string& kind_name,
                std::uint64_t budget, bool serial) {
    CodeParams params = CodeParams::make(q, k);
    CodeKind kind = CodeKind::cp_subcode;
    if (kind_name == "rs-ambient")
        kind = CodeKind::rs_ambient;
    else if (kind_name == "grs-full")
        kind = CodeKind::grs_full;
    else if (kind_name != "cp")
        throw CLI::ValidationError("--kind must be cp, rs-ambient or grs-full");
    EnumerableCode code(params, kind);
    std::uint32_t d = serial ? brute_min_distance_serial(code, budget)
                             : brute_min_distance(code, budget);
    std::cout << d << '\n';
    return kExitOk;
}

int cmd_bounds(std::uint32_t q, std::uint32_t k, std::uint32_t w, std::uint32_t s,
               const std::string& kind_name, std::uint64_t exact_budget, std::uint64_t samples,
               std::uint64_t seed) {
    CodeParams params = CodeParams::make(q, k);
    CodeKind kind = CodeKind::cp_subcode;
    std::uint32_t bound_dim = k + 1;  // ambient dimension carrying the q^(1+floor(k/p)) factor
    if (kind_name == "rs-ambient") {
        kind = CodeKind::rs_ambient;
        bound_dim = k + 1;
    } else if (kind_name == "grs-full") {
        kind = CodeKind::grs_full;
        bound_dim = k;
    } else if (kind_name != "cp") {
        throw CLI::ValidationError("--kind must be cp, rs-ambient or grs-full");
    }
    EnumerableCode code(params, kind);
    GsParams gp = gs_params(params.n, code.dim(), s);

    ListSizeStats stats;
    bool exact_ok = true;
    try {
        stats = falsely_decodable_stats(code, w, gp.t, exact_budget);
    } catch (const std::invalid_argument&) {
        exact_ok = false;
    } catch (const std::overflow_error&) {
        exact_ok = false;
    }
    if (!exact_ok) stats = falsely_decodable_stats_sampled(code, w, gp.t, samples, seed);

    BoundChain bounds = bound_chain(w, gp.t, params.n, bound_dim, q);
    write_stats_csv_header(std::cout);
    write_stats_csv_row(std::cout, params, stats, bounds);
    return kExitOk;
}

int cmd_simulate(const std::string& config_path, std::vector<std::uint32_t> primes,
                 std::int64_t messages, std::int64_t trials, const std::string& baseline,
                 const std::string& decoder, std::int64_t error_weight, std::int64_t seed_flag,
                 bool serial) {
    ExperimentConfig cfg;
    cfg.seed = default_seed_from_env();
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw std::invalid_argument("cannot open config file: " + config_path);
        ExperimentConfig file_cfg = load_config(in);
        file_cfg.seed = file_cfg.seed != 0 ? file_cfg.seed : cfg.seed;
        cfg = file_cfg;
    }
    if (!primes.empty()) cfg.primes = std::move(primes);
    if (messages >= 0) cfg.messages_per_q = static_cast<std::uint32_t>(messages);
    if (trials >= 0) cfg.trials_per_message = static_cast<std::uint32_t>(trials);
    if (!baseline.empty()) {
        if (baseline == "analysis-consistent")
            cfg.baseline = Baseline::analysis_consistent;
        else if (baseline == "paper-literal")
            cfg.baseline = Baseline::paper_literal;
        else
            throw CLI::ValidationError("--baseline must be analysis-consistent or paper-literal");
    }
    if (!decoder.empty()) {
        if (decoder == "covering")
            cfg.decoder = TrialDecoder::covering;
        else if (decoder == "gs")
            cfg.decoder = TrialDecoder::gs;
        else
            throw CLI::ValidationError("--decoder must be covering or gs");
    }
    if (error_weight >= 0) cfg.error_weight_override = error_weight;
    if (seed_flag >= 0) cfg.seed = static_cast<std::uint64_t>(seed_flag);

    std::vector<TableRow> rows = serial ? run_table_serial(cfg) : run_table(cfg);
    write_table_csv(std::cout, rows);
    return kExitOk;
}

int cmd_subspace_dist(const std::string& input) {
    nlohmann::json j = read_json_input(input);
    Subspace u(matrix_from_json(j.at("u")));
    Subspace v(matrix_from_json(j.at("v")));
    nlohmann::json out;
    out["chordal"] = chordal_distance(u, v);
    out["subspace_distance"] = subspace_distance(u, v);
    std::cout << out.dump() << '\n';
    return kExitOk;
}

int cmd_subspace_cp_mindist(std::uint32_t q, std::uint32_t k) {
    CodeParams params = CodeParams::make(q, k);
    std::vector<Subspace> book = cp_codebook_subspaces(params);
    std::cout << code_min_subspace_distance(book) << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"character-polynomial subspace code workbench"};
    app.require_subcommand(1);

    std::uint32_t q = 7, k = 2, s = 1, w = 0;
    std::string code = "cp", coeffs, input, ordering = "natural", kind = "cp";
    bool plain = false, serial = false;
    std::uint64_t budget = 1'000'000, exact_budget = 10'000'000, samples = 20'000;
    std::int64_t seed_flag = -1, messages = -1, trials = -1, error_weight = -1;
    std::string config_path, baseline, decoder;
    std::vector<std::uint32_t> primes;

    auto* enc = app.add_subcommand("encode", "encode message coefficients");
    enc->add_option("--q", q, "field size")->required();
    enc->add_option("--k", k, "degree parameter")->required();
    enc->add_option("--code", code, "cp | rs | grs");
    enc->add_option("--coeffs", coeffs, "comma-separated coefficients, constant first")->required();
    enc->add_option("--ordering", ordering, "natural | primitive");

    auto* dec = app.add_subcommand("decode", "unique decoding of a received complex word");
    dec->add_option("--q", q, "field size (prime)")->required();
    dec->add_option("--k", k, "degree parameter")->required();
    dec->add_option("--in", input, "JSON input file (default stdin)");
    dec->add_flag("--plain-rs", plain, "decode unscaled hard decisions at dimension k + 1");

    auto* ld = app.add_subcommand("list-decode", "list decoding of a received complex word");
    ld->add_option("--q", q, "field size (prime)")->required();
    ld->add_option("--k", k, "degree parameter")->required();
    ld->add_option("--s", s, "interpolation multiplicity")->required();
    ld->add_option("--in", input, "JSON input file (default stdin)");

    auto* md = app.add_subcommand("mindist", "brute-force minimum distance");
    md->add_option("--q", q, "field size (prime power)")->required();
    md->add_option("--k", k, "degree parameter")->required();
    md->add_option("--kind", kind, "cp | rs-ambient | grs-full");
    md->add_option("--budget", budget, "enumeration budget");
    md->add_flag("--serial", serial, "use the serial reference kernel");

    auto* bd = app.add_subcommand("bounds", "list-size statistics and the bound chain (CSV)");
    bd->add_option("--q", q, "field size")->required();
    bd->add_option("--k", k, "degree parameter")->required();
    bd->add_option("--w", w, "error weight")->required();
    bd->add_option("--s", s, "interpolation multiplicity");
    bd->add_option("--kind", kind, "cp | rs-ambient | grs-full");
    bd->add_option("--exact-budget", exact_budget, "pattern budget for exact enumeration");
    bd->add_option("--samples", samples, "sample count when exact enumeration is over budget");
    bd->add_option("--seed", seed_flag, "sampling seed");

    auto* sim = app.add_subcommand("simulate", "Monte Carlo average-list-size experiment (CSV)");
    sim->add_option("--config", config_path, "JSON config file");
    sim->add_option("--primes", primes, "comma-separated primes")->delimiter(',');
    sim->add_option("--messages", messages, "messages per prime");
    sim->add_option("--trials", trials, "trials per message");
    sim->add_option("--baseline", baseline, "analysis-consistent | paper-literal");
    sim->add_option("--decoder", decoder, "covering | gs");
    sim->add_option("--error-weight", error_weight, "override injected error weight");
    sim->add_option("--seed", seed_flag, "master seed (overrides CPCODES_SEED)");
    sim->add_flag("--serial", serial, "run trials on one thread");

    auto* sub = app.add_subcommand("subspace", "subspace distance utilities");
    auto* sub_dist = sub->add_subcommand("dist", "distance between two subspaces from JSON");
    sub_dist->add_option("--in", input, "JSON input file (default stdin)");
    auto* sub_cp = sub->add_subcommand("cp-mindist", "min subspace distance of a CP codebook");
    sub_cp->add_option("--q", q, "field size")->required();
    sub_cp->add_option("--k", k, "degree parameter")->required();
    sub->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code_ = app.exit(e);
        return code_ == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (enc->parsed()) return cmd_encode(q, k, code, coeffs, ordering);
        if (dec->parsed()) return cmd_decode(q, k, input, plain);
        if (ld->parsed()) return cmd_list_decode(q, k, s, input);
        if (md->parsed()) return cmd_mindist(q, k, kind, budget, serial);
        if (bd->parsed())
            return cmd_bounds(q, k, w, s, kind, exact_budget, samples,
                              seed_flag >= 0 ? static_cast<std::uint64_t>(seed_flag)
                                             : default_seed_from_env());
        if (sim->parsed())
            return cmd_simulate(config_path, primes, messages, trials, baseline, decoder,
                                error_weight, seed_flag, serial);
        if (sub->parsed()) {
            if (sub_dist->parsed()) return cmd_subspace_dist(input);
            if (sub_cp->parsed()) return cmd_subspace_cp_mindist(q, k);
        }
    } catch (const decoding_failure& e) {
        std::cerr << "decoding failure: " << e.what() << '\n';
        return kExitDecodeFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
