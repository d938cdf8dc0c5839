#ifndef CPCODES_SIMULATE_HPP
#define CPCODES_SIMULATE_HPP

#include <cstdint>
#include <iosfwd>
#include <random>
#include <vector>

#include "cpcodes/codebook.hpp"
#include "cpcodes/poly.hpp"

namespace cpcodes {

/// Which code the baseline column decodes.
///   analysis_consistent: RS(F(k,q)), dimension k+1, decoded at its own
///                        maximal radius. For prime q the literal reading
///                        GRS(F(k-1,q)) coincides with the CP subcode as a
///                        set, so only this baseline can separate the columns.
///   paper_literal:       GRS(F(k-1,q)), dimension k.
enum class Baseline { analysis_consistent, paper_literal };

/// Trial decoder backend. Both return exactly the codewords within the
/// radius t_inf of the received word; `covering` enumerates erasure patterns
/// over punctured key-equation decodes and stays fast when the minimal
/// interpolation multiplicity s0 is large, `gs` runs the full
/// interpolation-and-factorization pipeline.
enum class TrialDecoder { covering, gs };

struct ExperimentConfig {
    std::vector<std::uint32_t> primes;  // default: all primes in (5, 50)
    std::uint32_t messages_per_q = 5;
    std::uint32_t trials_per_message = 200;
    Baseline baseline = Baseline::analysis_consistent;
    TrialDecoder decoder = TrialDecoder::covering;
    std::int64_t error_weight_override = -1;  // -1: inject t_inf of the CP-derived code
    std::uint64_t seed = 0;

    static std::vector<std::uint32_t> default_primes();
    static std::uint32_t k_rule(std::uint32_t q) { return q / 2 - 1; }

    ExperimentConfig() : primes(default_primes()) {}
};

/// Load a JSON config ({"primes": [...], "messages_per_q": .., ...});
/// unrecognized keys are rejected. Missing keys keep their defaults.
ExperimentConfig load_config(std::istream& in);

struct TrialRecord {
    std::uint32_t list_size = 0;
    bool causal_in_list = false;
    bool empty = true;
    bool decode_error = false;
};

enum class CodePath { C, Cprime };

/// One transmission: encode the message (an Fp(k,q)' polynomial of degree
/// < k), inject the configured number of errors, list decode at the path's
/// own maximal radius, and record the outcome. Decode errors are recorded,
/// never thrown.
TrialRecord run_trial(const Polynomial& g, CodePath which, const ExperimentConfig& cfg,
                      const CodeParams& params, std::mt19937_64& rng);

struct TableRow {
    std::uint32_t q = 0;
    std::uint32_t k = 0;
    std::uint32_t n = 0;
    std::int64_t t_inf = 0;
    std::uint64_t trials = 0;
    double avg_list_c = 0.0;        // mean list size over trials with nonempty output
    double avg_list_cprime = 0.0;
    double empty_rate_c = 0.0;
    double empty_rate_cprime = 0.0;
    double causal_rate_c = 0.0;     // fraction of all C-path trials containing the message
    std::uint64_t seed = 0;
};

/// Full experiment: messages_per_q * trials_per_message transmissions per
/// prime and per code. Per-trial RNG streams are derived from the master seed
/// by counter-based splitting, so the parallel and serial versions produce
/// identical rows.
std::vector<TableRow> run_table(const ExperimentConfig& cfg);
std::vector<TableRow> run_table_serial(const ExperimentConfig& cfg);

/// CSV schema: q,k,n,t_inf,trials,avg_list_C,avg_list_Cprime,empty_rate_C,
/// empty_rate_Cprime,causal_rate_C,seed
void write_table_csv(std::ostream& os, const std::vector<TableRow>& rows);

}  // namespace cpcodes

#endif
