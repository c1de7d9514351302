// Acceptance gate: one pass/fail line per criterion, exit code equal to
// the number of failed criteria. Each criterion re-derives its expected
// instance counts from first principles so a silently narrowed grid
// cannot slip through.
#include <menon/menon.hpp>

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

using namespace menon;

namespace {

int failures = 0;

void report(int criterion, const std::string& description, bool ok,
            const std::string& note = "") {
    std::printf("%s criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", criterion,
                description.c_str(), note.empty() ? "" : " -- ",
                note.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

void run(int criterion, const std::string& description,
         const std::function<std::pair<bool, std::string>()>& body) {
    try {
        auto [ok, note] = body();
        report(criterion, description, ok, note);
    } catch (const std::exception& e) {
        report(criterion, description, false, e.what());
    }
}

std::string counts_note(const verification_report& r, double seconds) {
    const auto t = r.totals();
    std::ostringstream os;
    os << t.checked << " checked, " << t.failed << " failed, " << t.skipped
       << " skipped in " << (int)(seconds + 0.5) << "s";
    return os.str();
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

int run_command(const std::string& cmd) {
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

cyclotomic imag_units(std::int64_t n, std::int64_t count) {
    return cyclotomic::root(n, n / 4) * Rat(count);
}

// ---- criterion bodies ------------------------------------------------

std::pair<bool, std::string> criterion1() {
    sweep_config cfg;
    cfg.n_max = 64;
    cfg.ids = {identity::lemma1};
    cfg.threads = 1;
    const auto started = std::chrono::steady_clock::now();
    const auto rep = run_sweep<Rat>(cfg);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
            .count();
    std::int64_t want = 0;  // one check per (n, d | n, k, s) with full grids
    for (std::int64_t n = 1; n <= 64; ++n)
        want += n * n * divisor_count(n);
    const auto t = rep.totals();
    const bool ok = t.failed == 0 && t.checked == want && secs <= 120.0;
    return {ok, counts_note(rep, secs) + ", budget 120s"};
}

std::pair<bool, std::string> criterion2() {
    sweep_config cfg;
    cfg.n_max = 64;
    cfg.ids = {identity::lemma2, identity::lemma3};
    const auto rep = run_sweep<Rat>(cfg);
    bool ok = rep.totals().failed == 0;
    std::ostringstream os;
    for (const auto& [id, c] : rep.identities) {
        ok = ok && c.checked > 0 && c.skipped > 0 && c.failed == 0;
        os << identity_name(id) << " checked " << c.checked << " skipped "
           << c.skipped << "; ";
    }
    return {ok, os.str()};
}

std::pair<bool, std::string> criterion3() {
    sweep_config cfg;
    cfg.n_max = 48;
    cfg.ids = {identity::thm1};
    const auto started = std::chrono::steady_clock::now();
    const auto rep = run_sweep<Rat>(cfg);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
            .count();
    std::int64_t want = 0;  // six functions, full (k, s) grid per n
    for (std::int64_t n = 1; n <= 48; ++n) want += 6 * n * n;
    const auto t = rep.totals();
    const bool ok = t.failed == 0 && t.checked == want && secs <= 600.0;
    return {ok, counts_note(rep, secs) + ", budget 600s"};
}

std::pair<bool, std::string> criterion4() {
    sweep_config cfg;
    cfg.n_max = 64;
    cfg.ids = {identity::thm2, identity::thm3, identity::thm5, identity::cor2,
               identity::cor3};
    const auto started = std::chrono::steady_clock::now();
    const auto rep = run_sweep<Rat>(cfg);
    bool ok = rep.totals().failed == 0;
    for (const auto& [id, c] : rep.identities) ok = ok && c.checked > 0;

    sweep_config split_cfg;
    split_cfg.n_max = 60;
    split_cfg.ids = {identity::thm4};
    const auto split_rep = run_sweep<Rat>(split_cfg);
    std::int64_t want = 0;  // six functions, every coprime factorization
    for (std::int64_t n = 1; n <= 60; ++n)
        want += 6 * n * n *
                (std::int64_t)coprime_splittings(n).size();
    const auto st = split_rep.totals();
    ok = ok && st.failed == 0 && st.checked == want;
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
            .count();
    std::ostringstream os;
    os << rep.totals().checked << " + " << st.checked << " checked, "
       << rep.totals().failed + st.failed << " failed in " << (int)(secs + 0.5)
       << "s";
    return {ok, os.str()};
}

std::pair<bool, std::string> criterion5() {
    int bad = 0;
    auto expect = [&](bool cond) { bad += cond ? 0 : 1; };
    expect(menon_sum(make_gcd_power(6, 1), 0, 1) ==
           cyclotomic::from_rational(6, 8));
    expect(menon_sum(make_gcd_power(4, 1), 1, 1) == imag_units(4, 2));
    expect(menon_sum(make_gcd_power(8, 1), 2, 1) == imag_units(8, 8));
    expect(menon_sum(make_gcd_power(4, 2), 1, 1) == imag_units(4, 12));
    expect(menon_sum(make_ramanujan(12), 3, 1) == imag_units(12, 4));
    expect(menon_sum_closed(make_gcd_power(4, 1), 1, 1) == imag_units(4, 2));
    expect(menon_sum_closed(make_gcd_power(8, 1), 2, 1) == imag_units(8, 8));
    expect(menon_sum_closed(make_gcd_power(4, 2), 1, 1) == imag_units(4, 12));
    expect(menon_sum_closed(make_ramanujan(12), 3, 1) == imag_units(12, 4));
    expect(ramanujan_sum(6, 2) == -1);
    expect(ramanujan_sum(4, 2) == -2);
    expect(coset_sum<Rat>(6, 2, 0, 1).rational_value() == -1);
    expect(jordan_phi_sum((std::int64_t)2, 9) == Rat(17));
    expect(power_phi_sum((std::int64_t)1, 4) == Rat(5));
    {
        poly::int_poly want;  // x^4 - x^2 + 1
        for (std::int64_t c : {1, 0, -1, 0, 1}) want.emplace_back(c);
        expect(*cyclotomic_polynomial_ptr(12) == want);
    }
    expect(gcd_dft<Rat>(4, 1) == imag_units(4, 2));
    expect(gcd_dft<Rat>(6, 3).rational_value() == -5);
    expect(gcd_dft<Rat>(4, 0).rational_value() == 8);
    expect(gcd_dft_closed<Rat>(4, 1) == imag_units(4, 2));
    return {bad == 0, bad == 0 ? "19 spot values exact"
                               : std::to_string(bad) + " spot values wrong"};
}

std::pair<bool, std::string> criterion6() {
    std::int64_t checked = 0;
    for (std::int64_t n = 1; n <= 500; ++n) {
        const Rat want = Rat(euler_phi(n)) * divisor_count(n);
        if (menon_sum_trivial_char(make_gcd_power(n, 1), 0, 1) != want)
            return {false, "phi*tau mismatch at n = " + std::to_string(n)};
        ++checked;
    }
    std::int64_t unit_checked = 0;
    for (std::int64_t n = 1; n <= 128; ++n)
        for (std::int64_t k = 0; k < n; ++k) {
            if (!valuation_split_defined(n, k)) continue;
            const std::int64_t tau = divisor_count(gcd64(n, k));
            const Rat scale = Rat(euler_phi(n)) * tau;
            for (std::int64_t s = 1; s <= n; ++s) {
                if (gcd64(s, n) != 1) continue;
                const auto want =
                    cyclotomic::root(n, k * s % n) * scale;
                if (unit_shift_gcd_power(n, k, s, (std::int64_t)1) != want)
                    return {false, "unit-shift mismatch at n = " +
                                       std::to_string(n) + ", k = " +
                                       std::to_string(k) + ", s = " +
                                       std::to_string(s)};
                ++unit_checked;
            }
        }
    return {unit_checked > 10000,
            std::to_string(checked) + " totient-tau and " +
                std::to_string(unit_checked) + " unit-shift instances"};
}

std::pair<bool, std::string> criterion7() {
    // A deterministic grid of 500 closed-form evaluations, re-run with
    // every nonzero residue witness offset.
    struct coset_case {
        std::int64_t n, k, s, d;
    };
    std::vector<coset_case> cosets;
    for (std::int64_t n = 2; (std::int64_t)cosets.size() < 300; ++n)
        for (std::int64_t d : divisors(n)) {
            if ((std::int64_t)cosets.size() >= 300) break;
            cosets.push_back({n, (n / 2 + (std::int64_t)cosets.size()) % n,
                              (std::int64_t)cosets.size() % (d + 1), d});
        }
    struct sum_case {
        std::int64_t n, k, s;
        function_spec spec;
    };
    std::vector<sum_case> sums;
    const auto specs = builtin_function_specs();
    for (std::int64_t n = 2; (std::int64_t)sums.size() < 200; ++n)
        for (std::int64_t j = 0; j < n && (std::int64_t)sums.size() < 200; ++j)
            sums.push_back(
                {n, j, (j * 2 + 1) % n, specs[(std::size_t)sums.size() % specs.size()]});

    std::int64_t agreed = 0;
    for (std::int64_t t : {1, 2, 3}) {
        eval_options base, shifted;
        shifted.witness_offset = t;
        for (const auto& c : cosets) {
            if (coset_sum_closed<Rat>(c.n, c.k, c.s, c.d, shifted) !=
                coset_sum_closed<Rat>(c.n, c.k, c.s, c.d, base))
                return {false, "coset witness drift at n = " + std::to_string(c.n)};
            ++agreed;
        }
        for (const auto& c : sums) {
            const auto f = make_family(c.spec, Rat{}).at(c.n);
            if (menon_sum_closed(f, c.k, c.s, shifted) !=
                menon_sum_closed(f, c.k, c.s, base))
                return {false, "sum witness drift at n = " + std::to_string(c.n)};
            ++agreed;
        }
    }
    return {agreed == 3 * 500,
            "500 instances invariant under offsets 1, 2, 3"};
}

std::pair<bool, std::string> criterion8() {
    std::ostringstream os;
    bool ok = true;
    for (auto mut : {mutation::negate_mobius, mutation::invert_scale,
                     mutation::drop_coprime_filter,
                     mutation::wrong_residue_inverse,
                     mutation::truncate_divisors}) {
        sweep_config cfg;  // default identity and function selection
        cfg.n_max = 24;
        cfg.options.mut = mut;
        const auto rep = run_sweep<Rat>(cfg);
        const bool caught = rep.totals().failed > 0;
        ok = ok && caught;
        os << mutation_name(mut) << (caught ? " caught (" : " MISSED (")
           << rep.totals().failed << "); ";
    }
    return {ok, os.str()};
}

std::pair<bool, std::string> criterion9() {
    sweep_config cfg;
    cfg.n_max = 48;
    cfg.ids = {identity::cor2, identity::cor3};
    cfg.functions = {function_spec::parse("gcdpow:1/2"),
                     function_spec::parse("sigmagcd:1/2")};
    cfg.tolerance_scale = 1e-9;
    const auto rep = run_sweep<double>(cfg);
    const auto t = rep.totals();
    std::ostringstream os;
    os << t.checked << " checked, " << t.failed << " failed, " << t.skipped
       << " skipped";
    return {t.failed == 0 && t.checked > 0, os.str()};
}

std::pair<bool, std::string> criterion10() {
    const std::string base = "/tmp/menon_acceptance_" + std::to_string(getpid());
    const std::string cli = MENON_CLI_PATH;
    struct variant {
        std::string extra;
        int expect_rc;
    };
    const std::vector<variant> variants = {{"", 0},
                                           {" --mutate wrong-residue-inverse", 1}};
    for (std::size_t v = 0; v < variants.size(); ++v) {
        const std::string a = base + "_a" + std::to_string(v) + ".json";
        const std::string b = base + "_b" + std::to_string(v) + ".json";
        const std::string common = " verify --nmax 16 --format json" + variants[v].extra;
        const int rc1 = run_command(cli + common + " --threads 1 --out " + a +
                                    " > /dev/null");
        const int rc2 = run_command(cli + common + " --threads 2 --out " + b +
                                    " > /dev/null");
        if (rc1 != variants[v].expect_rc || rc2 != variants[v].expect_rc)
            return {false, "unexpected exit codes " + std::to_string(rc1) +
                               ", " + std::to_string(rc2)};
        const std::string ja = slurp(a);
        const std::string jb = slurp(b);
        std::remove(a.c_str());
        std::remove(b.c_str());
        if (ja.empty() || ja != jb)
            return {false, "reports differ across thread counts (variant " +
                               std::to_string(v) + ")"};
    }
    return {true, "clean and failing reports byte-identical at 1 and 2 threads"};
}

}  // namespace

int main() {
    const auto started = std::chrono::steady_clock::now();
    run(1, "restricted-sum closed form matches brute force for n <= 64 within 2 minutes",
        criterion1);
    run(2, "high-valuation and trivial-character coset forms pass in-hypothesis with skips counted",
        criterion2);
    run(3, "general closed form and coset decomposition match brute force for n <= 48, six functions",
        criterion3);
    run(4, "hypothesis-gated sum identities and coprime factorizations pass with zero failures",
        criterion4);
    run(5, "frozen spot values evaluate bit-exactly", criterion5);
    run(6, "totient-tau specialization to n = 500 and unit-shift reduction to n = 128",
        criterion6);
    run(7, "closed forms are invariant under residue witness offsets", criterion7);
    run(8, "each seeded defect is detected by the default sweep", criterion8);
    run(9, "float corollaries at exponent 1/2 stay within 1e-9 * n for n <= 48",
        criterion9);
    run(10, "command-line verification reports are byte-identical across thread counts",
        criterion10);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
            .count();
    std::printf("%d of 10 criteria passed in %.1fs\n", 10 - failures, secs);
    return failures;
}
