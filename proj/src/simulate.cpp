#include "cpcodes/simulate.hpp"

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <istream>
#include <ostream>

#include <json.hpp>

#include "cpcodes/analysis.hpp"
#include "cpcodes/channel.hpp"
#include "cpcodes/decode_list.hpp"
#include "cpcodes/rng.hpp"

namespace cpcodes {

std::vector<std::uint32_t> ExperimentConfig::default_primes() {
    std::vector<std::uint32_t> ps;
    for (std::uint32_t q = 6; q < 50; ++q) {
        bool prime = q >= 2;
        for (std::uint32_t d = 2; d * d <= q; ++d)
            if (q % d == 0) {
                prime = false;
                break;
            }
        if (prime) ps.push_back(q);
    }
    return ps;
}

ExperimentConfig load_config(std::istream& in) {
    nlohmann::json j = nlohmann::json::parse(in);
    ExperimentConfig cfg;
    for (const auto& [key, value] : j.items()) {
        if (key == "primes") {
            cfg.primes = value.get<std::vector<std::uint32_t>>();
        } else if (key == "messages_per_q") {
            cfg.messages_per_q = value.get<std::uint32_t>();
        } else if (key == "trials_per_message") {
            cfg.trials_per_message = value.get<std::uint32_t>();
        } else if (key == "baseline") {
            std::string s = value.get<std::string>();
            if (s == "analysis-consistent")
                cfg.baseline = Baseline::analysis_consistent;
            else if (s == "paper-literal")
                cfg.baseline = Baseline::paper_literal;
            else
                throw std::invalid_argument("config: unknown baseline '" + s + "'");
        } else if (key == "decoder") {
            std::string s = value.get<std::string>();
            if (s == "covering")
                cfg.decoder = TrialDecoder::covering;
            else if (s == "gs")
                cfg.decoder = TrialDecoder::gs;
            else
                throw std::invalid_argument("config: unknown decoder '" + s + "'");
        } else if (key == "error_weight") {
            cfg.error_weight_override = value.get<std::int64_t>();
        } else if (key == "seed") {
            cfg.seed = value.get<std::uint64_t>();
        } else {
            throw std::invalid_argument("config: unknown key '" + key + "'");
        }
    }
    return cfg;
}

namespace {

std::int64_t injected_weight(const ExperimentConfig& cfg, const CodeParams& params) {
    if (cfg.error_weight_override >= 0) return cfg.error_weight_override;
    return s_zero(params.n, params.k).t_inf;
}

bool contains(const std::vector<Polynomial>& list, const Polynomial& f) {
    return std::find(list.begin(), list.end(), f) != list.end();
}

}  // namespace

TrialRecord run_trial(const Polynomial& g, CodePath which, const ExperimentConfig& cfg,
                      const CodeParams& params, std::mt19937_64& rng) {
    TrialRecord rec;
    const Field& fld = *params.field;
    const std::int64_t weight = injected_weight(cfg, params);
    try {
        std::vector<Polynomial> list;
        Polynomial causal = Polynomial::zero(fld);

        if (which == CodePath::C) {
            const Polynomial f = g.shifted_up(1);  // X * g in Fp(k, q)
            causal = f;
            ComplexWord clean = cp_encode(f, params);
            auto [received, pattern] =
                inject_complex_errors(clean, params, static_cast<std::size_t>(weight), rng);
            if (cfg.decoder == TrialDecoder::gs) {
                list = cp_list_decode(received, s_zero(params.n, params.k).s0, params);
            } else {
                list = cp_bd_list_decode(received, s_zero(params.n, params.k).t_inf, params);
            }
        } else if (cfg.baseline == Baseline::analysis_consistent) {
            const std::uint32_t dim = params.k + 1;
            const Polynomial f = g.shifted_up(1);  // same transmitted polynomial, deg <= k
            causal = f;
            FieldCodeword clean = rs_encode(f, params, dim);
            auto [received, pattern] =
                inject_field_errors(clean, static_cast<std::size_t>(weight), rng);
            if (cfg.decoder == TrialDecoder::gs) {
                list = gs_decode(received, s_zero(params.n, dim).s0, params, dim);
            } else {
                list = bd_list_decode(received, s_zero(params.n, dim).t_inf, params, dim);
            }
        } else {  // paper-literal baseline: GRS(F(k-1, q)), identical parameters to C
            causal = g;
            FieldCodeword clean = grs_encode(g, params);
            auto [received, pattern] =
                inject_field_errors(clean, static_cast<std::size_t>(weight), rng);
            FieldCodeword scaled = received;
            for (std::size_t i = 0; i < scaled.size(); ++i)
                scaled.symbols[i] = fld.mul(scaled.symbols[i], fld.inv(params.alpha(i)));
            if (cfg.decoder == TrialDecoder::gs) {
                list = gs_decode(scaled, s_zero(params.n, params.k).s0, params, params.k);
            } else {
                list = bd_list_decode(scaled, s_zero(params.n, params.k).t_inf, params, params.k);
            }
        }

        rec.list_size = static_cast<std::uint32_t>(list.size());
        rec.empty = list.empty();
        rec.causal_in_list = contains(list, causal);
    } catch (const std::exception&) {
        rec.decode_error = true;
        rec.empty = true;
        rec.list_size = 0;
        rec.causal_in_list = false;
    }
    return rec;
}

namespace {

constexpr std::uint64_t kMessageTag = 0x6d7367ULL;  // message substream id
constexpr std::uint64_t kTrialTag = 0x7472ULL;      // trial substream id

Polynomial draw_message(const ExperimentConfig& cfg, const CodeParams& params,
                        std::uint32_t msg_idx) {
    // Uniform over Fp(k, q)': free coefficients uniform, constrained ones zero.
    auto rng = make_rng(cfg.seed, {params.q, kMessageTag, msg_idx});
    std::uniform_int_distribution<std::uint32_t> coeff(0, params.q - 1);
    std::vector<std::uint32_t> c(params.k, 0);
    for (std::uint32_t j = 0; j < params.k; ++j)
        if ((j + 1) % params.p != 0) c[j] = coeff(rng);
    return Polynomial(*params.field, std::move(c));
}

std::vector<TableRow> run_table_impl(const ExperimentConfig& cfg, bool parallel) {
    std::vector<TableRow> rows;
    for (std::uint32_t q : cfg.primes) {
        const std::uint32_t k = ExperimentConfig::k_rule(q);
        if (k < 2) throw std::invalid_argument("run_table: k rule gives k < 2 for q = " +
                                               std::to_string(q));
        CodeParams params = CodeParams::make(q, k);
        if (!params.field->is_prime())
            throw std::invalid_argument("run_table: q must be prime");

        std::vector<Polynomial> messages;
        for (std::uint32_t m = 0; m < cfg.messages_per_q; ++m)
            messages.push_back(draw_message(cfg, params, m));

        const std::uint64_t trials =
            static_cast<std::uint64_t>(cfg.messages_per_q) * cfg.trials_per_message;
        const std::int64_t total = static_cast<std::int64_t>(trials) * 2;

        // Integer accumulators keep the aggregation order-independent.
        std::uint64_t size_sum_c = 0, size_sum_cp = 0;
        std::uint64_t nonempty_c = 0, nonempty_cp = 0;
        std::uint64_t causal_c = 0;

#pragma omp parallel for schedule(dynamic) if (parallel) \
    reduction(+ : size_sum_c, size_sum_cp, nonempty_c, nonempty_cp, causal_c)
        for (std::int64_t flat = 0; flat < total; ++flat) {
            const std::uint64_t path_id = static_cast<std::uint64_t>(flat) % 2;
            const std::uint64_t trial = (static_cast<std::uint64_t>(flat) / 2);
            const std::uint32_t msg_idx = static_cast<std::uint32_t>(trial / cfg.trials_per_message);
            const std::uint32_t trial_idx =
                static_cast<std::uint32_t>(trial % cfg.trials_per_message);
            auto rng = make_rng(cfg.seed, {params.q, kTrialTag, msg_idx, trial_idx, path_id});
            CodePath path = path_id == 0 ? CodePath::C : CodePath::Cprime;
            TrialRecord rec = run_trial(messages[msg_idx], path, cfg, params, rng);
            if (path == CodePath::C) {
                if (!rec.empty) {
                    size_sum_c += rec.list_size;
                    ++nonempty_c;
                }
                if (rec.causal_in_list) ++causal_c;
            } else {
                if (!rec.empty) {
                    size_sum_cp += rec.list_size;
                    ++nonempty_cp;
                }
            }
        }

        TableRow row;
        row.q = q;
        row.k = k;
        row.n = params.n;
        row.t_inf = s_zero(params.n, k).t_inf;
        row.trials = trials;
        row.avg_list_c = nonempty_c == 0 ? std::numeric_limits<double>::quiet_NaN()
                                         : static_cast<double>(size_sum_c) / nonempty_c;
        row.avg_list_cprime = nonempty_cp == 0 ? std::numeric_limits<double>::quiet_NaN()
                                               : static_cast<double>(size_sum_cp) / nonempty_cp;
        row.empty_rate_c = 1.0 - static_cast<double>(nonempty_c) / trials;
        row.empty_rate_cprime = 1.0 - static_cast<double>(nonempty_cp) / trials;
        row.causal_rate_c = static_cast<double>(causal_c) / trials;
        row.seed = cfg.seed;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

std::vector<TableRow> run_table(const ExperimentConfig& cfg) { return run_table_impl(cfg, true); }

std::vector<TableRow> run_table_serial(const ExperimentConfig& cfg) {
    return run_table_impl(cfg, false);
}

void write_table_csv(std::ostream& os, const std::vector<TableRow>& rows) {
    os << "q,k,n,t_inf,trials,avg_list_C,avg_list_Cprime,empty_rate_C,empty_rate_Cprime,"
          "causal_rate_C,seed\n";
    char buf[256];
    for (const TableRow& r : rows) {
        std::snprintf(buf, sizeof buf,
                      "%u,%u,%u,%" PRId64 ",%" PRIu64 ",%.6f,%.6f,%.6f,%.6f,%.6f,%" PRIu64 "\n",
                      r.q, r.k, r.n, r.t_inf, r.trials, r.avg_list_c, r.avg_list_cprime,
                      r.empty_rate_c, r.empty_rate_cprime, r.causal_rate_c, r.seed);
        os << buf;
    }
}

}  // namespace cpcodes
