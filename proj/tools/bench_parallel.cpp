// Benchmark: the randomized property suites run their samples either on a
// single thread (serial reference) or across OpenMP workers.  Seeds are
// derived per sample index, so both schedules must produce identical
// reports; this tool times the two paths and verifies that they agree.

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "monrep/category_lab.hpp"

using namespace monrep;

namespace {

LambdaContext golden_context() {
    Field f = Field::prime(101);
    BaseAlgebra a(f, {"u"}, {{"x", 0, 0}}, {{0, 0}});
    Quiver q(4, {{"g", 4, 3}, {"b1", 3, 2}, {"b2", 3, 2}, {"a", 2, 1}});
    MonomialIdeal ideal(q, {Path::walk(q, {0, 1}), Path::walk(q, {0, 2, 3})});
    return LambdaContext(std::move(a), std::move(q), std::move(ideal));
}

std::int64_t now_ms() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

bool same_report(const SuiteReport& a, const SuiteReport& b) {
    return a.instances == b.instances && a.failures == b.failures &&
           a.skipped == b.skipped && a.notes == b.notes;
}

} // namespace

int main(int argc, char** argv) {
    int samples = argc > 1 ? std::atoi(argv[1]) : 48;
    std::uint64_t seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 2024;
    LambdaContext c = golden_context();
    std::cout << "suite benchmark: " << samples << " samples per kind, seed " << seed
              << "\n";
    bool ok = true;
    for (const char* kind : {"closure", "kernels", "adjunction"}) {
        std::int64_t t0 = now_ms();
        SuiteReport serial = run_suite_kind(c, kind, samples, seed, 1);
        std::int64_t t1 = now_ms();
        SuiteReport parallel = run_suite_kind(c, kind, samples, seed, 0);
        std::int64_t t2 = now_ms();
        bool agree = same_report(serial, parallel);
        ok = ok && agree && serial.failures == 0;
        double speedup = t2 > t1 ? double(t1 - t0) / double(t2 - t1) : 0.0;
        std::cout << "  " << kind << ": serial " << (t1 - t0) << " ms, parallel "
                  << (t2 - t1) << " ms";
        if (speedup > 0) std::cout << " (x" << speedup << ")";
        std::cout << ", failures " << serial.failures << ", reports "
                  << (agree ? "identical" : "DIFFER") << "\n";
    }
    return ok ? 0 : 1;
}
