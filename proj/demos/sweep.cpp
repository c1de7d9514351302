// Runs a verification sweep over a small range of moduli and prints the
// per-identity summary, then demonstrates failure minimization by seeding
// a deliberate defect into one closed form.
#include <menon/menon.hpp>

#include <cstdio>

int main() {
    using namespace menon;

    sweep_config cfg;
    cfg.n_min = 1;
    cfg.n_max = 16;
    const auto report = run_sweep<Rat>(cfg);
    std::printf("%s\n", report_to_text(report).c_str());

    std::printf("Seeding the negate-mobius defect and re-running:\n\n");
    sweep_config bad = cfg;
    bad.n_max = 12;
    bad.options.mut = mutation::negate_mobius;
    const auto broken = run_sweep<Rat>(bad);
    const auto totals = broken.totals();
    std::printf("  %lld of %lld checks now fail\n", (long long)totals.failed,
                (long long)totals.checked);
    if (!broken.failures.empty()) {
        const auto& first = broken.failures.front();
        const auto shrunk = minimize_failure<Rat>(first, bad);
        if (shrunk.had_failure)
            std::printf("  smallest failing case: identity=%s n=%lld k=%lld s=%lld\n",
                        identity_name(shrunk.record.id), (long long)shrunk.record.n,
                        (long long)shrunk.record.k, (long long)shrunk.record.s);
    }
    return 0;
}
