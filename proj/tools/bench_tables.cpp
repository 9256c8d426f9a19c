// Benchmark of the character-table build: OpenMP-parallel kernel against the
// serial reference, checking that both produce identical tables.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>

#include "octarep/hypchar.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Character-table build benchmark: parallel kernel vs serial reference"};
    int n_max = 5;
    int repeat = 1;
    app.add_option("--n-max", n_max, "Largest rank to benchmark")->check(CLI::Range(1, 8));
    app.add_option("--repeat", repeat, "Builds per timing")->check(CLI::Range(1, 100));
    CLI11_PARSE(app, argc, argv);

    using Clock = std::chrono::steady_clock;
    std::printf("%4s %12s %12s %8s %6s\n", "n", "serial_ms", "parallel_ms", "speedup",
                "equal");
    bool all_equal = true;
    for (int n = 1; n <= n_max; ++n) {
        double serial_ms = 0, parallel_ms = 0;
        octarep::HypCharacterTable serial = octarep::HypCharacterTable::build_serial(n);
        octarep::HypCharacterTable parallel = octarep::HypCharacterTable::build(n);
        for (int r = 0; r < repeat; ++r) {
            auto t0 = Clock::now();
            serial = octarep::HypCharacterTable::build_serial(n);
            auto t1 = Clock::now();
            parallel = octarep::HypCharacterTable::build(n);
            auto t2 = Clock::now();
            serial_ms += std::chrono::duration<double, std::milli>(t1 - t0).count();
            parallel_ms += std::chrono::duration<double, std::milli>(t2 - t1).count();
        }
        serial_ms /= repeat;
        parallel_ms /= repeat;
        bool equal = serial.values() == parallel.values();
        all_equal = all_equal && equal;
        std::printf("%4d %12.2f %12.2f %8.2f %6s\n", n, serial_ms, parallel_ms,
                    parallel_ms > 0 ? serial_ms / parallel_ms : 0.0,
                    equal ? "yes" : "NO");
    }
    return all_equal ? 0 : 1;
}
