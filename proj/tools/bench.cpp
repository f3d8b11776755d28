// Timing comparison: serial reference kernels vs the sharded scans, plus a
// cross-check that both produce identical output.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "locis/enumeration.hpp"
#include "locis/harness.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace locis;

namespace {

template <class F>
long ms(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial reference vs sharded kernels"};
    int max_order = 7;
    int threads =
#ifdef _OPENMP
        omp_get_max_threads();
#else
        1;
#endif
    app.add_option("--max-order", max_order, "largest enumeration order (reference caps at 7)");
    app.add_option("--threads", threads, "shard count for the parallel runs");
    CLI11_PARSE(app, argc, argv);

    for (int n = 5; n <= max_order; n++) {
        std::vector<Graph> ref, scan1, scanN;
        long t_ref = -1;
        if (n <= 7) t_ref = ms([&] { ref = enumerate_connected_reference(n); });
        long t_1 = ms([&] { scan1 = enumerate_connected(n, 1); });
        long t_N = ms([&] { scanN = enumerate_connected(n, threads); });
        bool same = scan1.size() == scanN.size();
        for (size_t i = 0; same && i < scan1.size(); i++) same = scan1[i] == scanN[i];
        if (!ref.empty()) {
            same = same && ref.size() == scan1.size();
            for (size_t i = 0; same && i < ref.size(); i++) same = ref[i] == scan1[i];
        }
        std::printf("enumerate n=%d: %5zu classes | reference %s | scan x1 %ld ms | "
                    "scan x%d %ld ms | identical: %s\n",
                    n, scan1.size(),
                    t_ref < 0 ? "   (skipped)" : (std::to_string(t_ref) + " ms").c_str(), t_1,
                    threads, t_N, same ? "yes" : "NO");
    }

    int chi = std::min(max_order, 8);
    CampaignReport r1, rN;
    long t_c1 = ms([&] { r1 = run_campaign("thm3_1", 6, chi, 1); });
    long t_cN = ms([&] { rN = run_campaign("thm3_1", 6, chi, threads); });
    r1.elapsed_ms = rN.elapsed_ms = 0;  // ignore the embedded clock when comparing
    std::printf("campaign thm3_1 n=6..%d: x1 %ld ms | x%d %ld ms | identical reports: %s\n",
                chi, t_c1, threads, t_cN, r1.to_json() == rN.to_json() ? "yes" : "NO");
    return 0;
}
