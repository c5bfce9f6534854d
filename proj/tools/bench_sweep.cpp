// Times the serial reference sweep against the worker-pool one on the same
// configuration and confirms the rendered reports are byte-identical.
//
//   bench_sweep [config-file|-] [jobs]
//
// With no config the bundled connected n<=4 corpus is swept against itself.
#include <cstdio>
#include <cstdlib>
#include <chrono>
#include <iostream>
#include <string>

#include "boxdom/sweep.hpp"

using namespace boxdom;

namespace {

double time_run(SweepReport (*runner)(const SweepConfig&), const SweepConfig& cfg,
                std::string* rendered) {
    const auto start = std::chrono::steady_clock::now();
    const SweepReport rep = runner(cfg);
    const auto stop = std::chrono::steady_clock::now();
    *rendered = render_report(rep);
    return std::chrono::duration<double>(stop - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    try {
        SweepConfig cfg;
        if (argc > 1 && std::string(argv[1]) != "-") {
            cfg = parse_config_file(argv[1]);
        } else {
            cfg.g_source = "file:" BOXDOM_DATA_DIR "/connected_le4.g6";
            cfg.h_source = cfg.g_source;
        }
        int jobs = argc > 2 ? std::atoi(argv[2]) : 8;
        if (jobs < 2) jobs = 2;

        SweepConfig serial_cfg = cfg;
        serial_cfg.jobs = 1;
        std::string serial_text;
        const double t_serial = time_run(&run_sweep_serial, serial_cfg, &serial_text);

        SweepConfig parallel_cfg = cfg;
        parallel_cfg.jobs = jobs;
        std::string parallel_text;
        const double t_parallel = time_run(&run_sweep, parallel_cfg, &parallel_text);

        std::printf("serial reference: %8.3f s\n", t_serial);
        std::printf("jobs=%-3d        : %8.3f s  (speedup %.2fx)\n", jobs, t_parallel,
                    t_parallel > 0 ? t_serial / t_parallel : 0.0);
        if (serial_text != parallel_text) {
            std::cerr << "MISMATCH: parallel report differs from the serial reference\n";
            return 3;
        }
        std::printf("reports identical: yes (%zu bytes)\n", serial_text.size());
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
