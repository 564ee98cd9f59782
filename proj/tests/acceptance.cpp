// Acceptance gate: one line per criterion, nonzero exit if any fails.
#include "hkdfkit/verify.hpp"

#include <chrono>
#include <cstdio>

namespace {

int failures = 0;

void report(int criterion, const char* label, const hkdf::SuiteReport& rep, double seconds) {
    bool ok = rep.all_pass();
    if (!ok) ++failures;
    std::printf("criterion %d [%s] %-28s %zu/%zu checks (%.2fs)\n", criterion,
                ok ? "PASS" : "FAIL", label, rep.checks.size() - rep.failures(),
                rep.checks.size(), seconds);
    if (!ok) {
        for (const auto& c : rep.checks) {
            if (!c.pass) std::printf("    FAIL %s %s\n", c.name.c_str(), c.detail.c_str());
        }
    }
}

template <typename F>
void run(int criterion, const char* label, F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    hkdf::SuiteReport rep = f();
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(criterion, label, rep, dt);
}

}  // namespace

int main() {
    run(1, "heat_equation", [] { return hkdf::run_heat(); });
    run(2, "quasi_monomiality", [] { return hkdf::run_ladder(); });
    run(3, "generating_functions", [] { return hkdf::run_genfunc(); });
    run(4, "operational_umbral", [] { return hkdf::run_umbral_equiv(); });
    run(5, "integral_catalog", [] { return hkdf::run_integral_sweep(12345, 20); });
    run(6, "orthogonality", [] { return hkdf::run_orthogonality(); });
    run(7, "hermite_numbers", [] { return hkdf::run_sequences(); });
    run(8, "bessel", [] { return hkdf::run_bessel_suite(); });
    run(9, "structural_reductions", [] { return hkdf::run_reductions(); });
    std::printf("%s\n", failures == 0 ? "ALL CRITERIA PASS" : "CRITERIA FAILED");
    return failures == 0 ? 0 : 1;
}
