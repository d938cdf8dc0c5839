// Compares the OpenMP enumeration and trial kernels against their serial
// reference implementations on mid-size instances and reports the speedup.

#include <chrono>
#include <cstdio>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cpcodes/analysis.hpp"
#include "cpcodes/simulate.hpp"

namespace {

double time_ms(const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-34s serial %9.1f ms   parallel %9.1f ms   speedup %.2fx\n", name, serial_ms,
                parallel_ms, parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (OpenMP disabled)\n");
#endif

    using namespace cpcodes;

    {
        EnumerableCode code(CodeParams::make(13, 5), CodeKind::cp_subcode);
        std::uint32_t ds = 0, dp = 0;
        double s = time_ms([&] { ds = brute_min_distance_serial(code); });
        double p = time_ms([&] { dp = brute_min_distance(code); });
        report("mindist q=13 k=5 (371k codewords)", s, p);
        if (ds != dp) {
            std::printf("MISMATCH: serial %u vs parallel %u\n", ds, dp);
            return 1;
        }
    }

    {
        EnumerableCode code(CodeParams::make(7, 2), CodeKind::cp_subcode);
        ListSizeStats ss{}, sp{};
        double s = time_ms([&] { ss = falsely_decodable_stats_serial(code, 4, 2); });
        double p = time_ms([&] { sp = falsely_decodable_stats(code, 4, 2); });
        report("list-size stats q=7 w=4 t=2", s, p);
        if (ss.d_count != sp.d_count) {
            std::printf("MISMATCH: serial D %.0f vs parallel D %.0f\n", ss.d_count, sp.d_count);
            return 1;
        }
    }

    {
        ExperimentConfig cfg;
        cfg.primes = {13};
        cfg.messages_per_q = 2;
        cfg.trials_per_message = 50;
        cfg.seed = 12345;
        std::vector<TableRow> rs, rp;
        double s = time_ms([&] { rs = run_table_serial(cfg); });
        double p = time_ms([&] { rp = run_table(cfg); });
        report("simulate q=13 (100 trials/code)", s, p);
        if (rs.size() != rp.size() || rs[0].avg_list_c != rp[0].avg_list_c ||
            rs[0].avg_list_cprime != rp[0].avg_list_cprime) {
            std::printf("MISMATCH: serial and parallel rows differ\n");
            return 1;
        }
    }

    return 0;
}
