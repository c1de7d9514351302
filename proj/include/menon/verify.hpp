#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "menon/error.hpp"
#include "menon/even_function.hpp"
#include "menon/sums.hpp"

namespace menon {

/// Identities the sweep can check, each comparing a closed form against
/// the definitional evaluation over a grid of instances.
enum class identity {
    lemma1,  // restricted character sum, general closed form
    lemma2,  // restricted character sum under the high-valuation hypothesis
    lemma3,  // restricted character sum for the trivial character
    thm1,    // general closed form and coset decomposition of S
    thm2,    // S under the high-valuation hypothesis
    thm3,    // S for the trivial character
    thm4,    // product rule over coprime factorizations of n
    thm5,    // closed form along the valuation splitting
    cor2,    // per-family split closed forms
    cor3,    // per-family unit-shift closed forms
    gcd_dft, // gcd transform without the coprimality filter
};

inline const char* identity_name(identity id) {
    switch (id) {
    case identity::lemma1: return "lemma1";
    case identity::lemma2: return "lemma2";
    case identity::lemma3: return "lemma3";
    case identity::thm1: return "thm1";
    case identity::thm2: return "thm2";
    case identity::thm3: return "thm3";
    case identity::thm4: return "thm4";
    case identity::thm5: return "thm5";
    case identity::cor2: return "cor2";
    case identity::cor3: return "cor3";
    case identity::gcd_dft: return "gcd-dft";
    }
    return "?";
}

inline std::vector<identity> all_identities() {
    return {identity::lemma1, identity::lemma2, identity::lemma3, identity::thm1,
            identity::thm2,   identity::thm3,   identity::thm4,   identity::thm5,
            identity::cor2,   identity::cor3,   identity::gcd_dft};
}

inline identity parse_identity(const std::string& s) {
    for (identity id : all_identities())
        if (s == identity_name(id)) return id;
    throw_error(errc::config_invalid, "unknown identity '" + s + "'");
}

/// Grid description for a verification sweep.
struct sweep_config {
    int64_t n_min = 1;
    int64_t n_max = 24;
    std::vector<identity> ids = all_identities();
    std::vector<function_spec> functions = builtin_function_specs();
    std::optional<int64_t> fixed_k; // full [0, n) grid when absent
    std::optional<int64_t> fixed_s;
    int threads = 1;
    eval_options options{};
    double tolerance_scale = 1e-9; // float mode: |diff| <= scale * n

    void validate() const {
        if (n_min < 1) throw_error(errc::config_invalid, "n_min must be at least 1");
        if (n_max < n_min) throw_error(errc::config_invalid, "n_max must be at least n_min");
        if (n_max > 20000) throw_error(errc::config_invalid, "n_max above supported range 20000");
        if (threads < 1 || threads > 256)
            throw_error(errc::config_invalid, "threads must lie in [1, 256]");
        if (ids.empty()) throw_error(errc::config_invalid, "no identities selected");
        if (functions.empty()) throw_error(errc::config_invalid, "no functions selected");
        if (!(tolerance_scale > 0)) throw_error(errc::config_invalid, "tolerance scale must be positive");
    }

    std::vector<identity> normalized_ids() const {
        std::vector<identity> v = ids;
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        return v;
    }
};

/// One mismatch between a closed form and the definitional value.
/// d is the coset modulus for the restricted sums, the first factor of the
/// coprime factorization for the product rule, and -1 when unused.
struct failure_record {
    identity id = identity::lemma1;
    int64_t n = 1;
    int64_t k = 0;
    int64_t s = 0;
    std::string fspec = "-";
    int64_t d = -1;
    std::string expected;
    std::string actual;
    std::string detail;
};

inline bool failure_order(const failure_record& a, const failure_record& b) {
    return std::tie(a.id, a.n, a.k, a.s, a.fspec, a.d, a.detail) <
           std::tie(b.id, b.n, b.k, b.s, b.fspec, b.d, b.detail);
}

struct identity_counters {
    int64_t checked = 0;
    int64_t passed = 0;
    int64_t failed = 0;
    int64_t skipped = 0; // hypothesis not satisfied; not part of checked

    identity_counters& operator+=(const identity_counters& o) {
        checked += o.checked;
        passed += o.passed;
        failed += o.failed;
        skipped += o.skipped;
        return *this;
    }
};

struct verification_report {
    std::string mode; // "exact" or "float"
    sweep_config config;
    std::vector<std::pair<identity, identity_counters>> identities;
    std::vector<failure_record> failures;
    double wall_seconds = 0.0; // shown in text output, never serialized

    identity_counters totals() const {
        identity_counters t;
        for (const auto& [id, c] : identities) t += c;
        return t;
    }
    bool ok() const { return totals().failed == 0; }
};

namespace detail {

inline std::string render_value(const cyclotomic& z) { return z.str(); }
inline std::string render_value(const std::complex<double>& z) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "(%.17g, %.17g)", z.real(), z.imag());
    return buf;
}

/// Per-unit sweep state. Units are fixed up front and their results merged
/// in unit order, so reports do not depend on the number of worker threads.
template <class T>
struct sweep_worker {
    const sweep_config& cfg;

    struct unit {
        identity id;
        int64_t n;
        int64_t aux; // d for the restricted sums, -1 otherwise
    };
    struct unit_result {
        identity_counters c;
        std::vector<failure_record> fails;
    };

    double tol(int64_t n) const { return cfg.tolerance_scale * double(n); }

    std::vector<int64_t> grid(int64_t n, const std::optional<int64_t>& fixed) const {
        if (fixed) return {mod_reduce(*fixed, n)};
        std::vector<int64_t> v(n);
        for (int64_t i = 0; i < n; ++i) v[i] = i;
        return v;
    }

    std::vector<function_family<T>> families() const {
        std::vector<function_family<T>> out;
        for (const auto& spec : cfg.functions) out.push_back(make_family(spec, T{}));
        return out;
    }

    void check(identity id, int64_t n, int64_t k, int64_t s, const std::string& fspec, int64_t d,
               const value_t<T>& expect, const value_t<T>& got, const std::string& note,
               unit_result& out) const {
        out.c.checked += 1;
        if (modes<T>::equal(expect, got, tol(n))) {
            out.c.passed += 1;
            return;
        }
        out.c.failed += 1;
        out.fails.push_back(
            {id, n, k, s, fspec, d, render_value(expect), render_value(got), note});
    }

    void run_unit(const unit& u, unit_result& out) const {
        switch (u.id) {
        case identity::lemma1: run_lemma1(u, out); break;
        case identity::lemma2: run_lemma2(u, out); break;
        case identity::lemma3: run_lemma3(u, out); break;
        case identity::thm1: run_thm1(u, out); break;
        case identity::thm2: run_thm2(u, out); break;
        case identity::thm3: run_thm3(u, out); break;
        case identity::thm4: run_thm4(u, out); break;
        case identity::thm5: run_thm5(u, out); break;
        case identity::cor2: run_cor2(u, out); break;
        case identity::cor3: run_cor3(u, out); break;
        case identity::gcd_dft: run_gcd_dft(u, out); break;
        }
    }

    // The restricted sum depends on s only through s mod d, so the brute
    // side is cached per class while the closed side sees every s.
    void run_lemma1(const unit& u, unit_result& out) const {
        const int64_t n = u.n, d = u.aux;
        for (int64_t k : grid(n, cfg.fixed_k)) {
            std::vector<std::optional<value_t<T>>> brute(d);
            for (int64_t s : grid(n, cfg.fixed_s)) {
                auto& slot = brute[s % d];
                if (!slot) slot = coset_sum<T>(n, k, s, d);
                check(identity::lemma1, n, k, s, "-", d, *slot,
                      coset_sum_closed<T>(n, k, s, d, cfg.options), "", out);
            }
        }
    }

    void run_lemma2(const unit& u, unit_result& out) const {
        const int64_t n = u.n, d = u.aux;
        const auto ss = grid(n, cfg.fixed_s);
        for (int64_t k : grid(n, cfg.fixed_k)) {
            if (!high_valuation_hypothesis(n, k)) {
                out.c.skipped += static_cast<int64_t>(ss.size());
                continue;
            }
            std::vector<std::optional<value_t<T>>> brute(d);
            for (int64_t s : ss) {
                auto& slot = brute[s % d];
                if (!slot) slot = coset_sum<T>(n, k, s, d);
                check(identity::lemma2, n, k, s, "-", d, *slot,
                      coset_sum_high_valuation<T>(n, k, s, d), "", out);
            }
        }
    }

    void run_lemma3(const unit& u, unit_result& out) const {
        const int64_t n = u.n, d = u.aux;
        const auto ss = grid(n, cfg.fixed_s);
        for (int64_t k : grid(n, cfg.fixed_k)) {
            if (mod_reduce(k, n) != 0) {
                out.c.skipped += static_cast<int64_t>(ss.size());
                continue;
            }
            std::vector<std::optional<value_t<T>>> brute(d);
            for (int64_t s : ss) {
                auto& slot = brute[s % d];
                if (!slot) slot = coset_sum<T>(n, k, s, d);
                check(identity::lemma3, n, k, s, "-", d, *slot,
                      modes<T>::from_scalar(n, coset_sum_trivial_char<T>(n, k, s, d)), "", out);
            }
        }
    }

    // Each instance checks the closed form and, when that matches, the
    // expansion through restricted sums as well.
    void run_thm1(const unit& u, unit_result& out) const {
        const int64_t n = u.n;
        auto fams = families();
        for (size_t fi = 0; fi < fams.size(); ++fi) {
            auto f = fams[fi].at(n);
            const std::string& label = cfg.functions[fi].text;
            for (int64_t k : grid(n, cfg.fixed_k))
                for (int64_t s : grid(n, cfg.fixed_s)) {
                    value_t<T> expect = menon_sum(f, k, s);
                    value_t<T> closed = menon_sum_closed(f, k, s, cfg.options);
                    if (!modes<T>::equal(expect, closed, tol(n))) {
                        out.c.checked += 1;
                        out.c.failed += 1;
                        out.fails.push_back({identity::thm1, n, k, s, label, -1,
                                             render_value(expect), render_value(closed), ""});
                        continue;
                    }
                    value_t<T> dec = menon_sum_via_cosets(f, k, s, cfg.options);
                    check(identity::thm1, n, k, s, label, -1, expect, dec,
                          modes<T>::equal(expect, dec, tol(n)) ? "" : "coset-decomposition", out);
                }
        }
    }

    void run_thm2(const unit& u, unit_result& out) const {
        const int64_t n = u.n;
        auto fams = families();
        const auto ks = grid(n, cfg.fixed_k);
        const auto ss = grid(n, cfg.fixed_s);
        for (int64_t k : ks) {
            if (!high_valuation_hypothesis(n, k)) {
                out.c.skipped += static_cast<int64_t>(fams.size() * ss.size());
                continue;
            }
            for (size_t fi = 0; fi < fams.size(); ++fi) {
                auto f = fams[fi].at(n);
                for (int64_t s : ss)
                    check(identity::thm2, n, k, s, cfg.functions[fi].text, -1, menon_sum(f, k, s),
                          menon_sum_high_valuation(f, k, s), "", out);
            }
        }
    }

    void run_thm3(const unit& u, unit_result& out) const {
        const int64_t n = u.n;
        auto fams = families();
        const auto ks = grid(n, cfg.fixed_k);
        const auto ss = grid(n, cfg.fixed_s);
        for (int64_t k : ks) {
            if (mod_reduce(k, n) != 0) {
                out.c.skipped += static_cast<int64_t>(fams.size() * ss.size());
                continue;
            }
            for (size_t fi = 0; fi < fams.size(); ++fi) {
                auto f = fams[fi].at(n);
                for (int64_t s : ss)
                    check(identity::thm3, n, k, s, cfg.functions[fi].text, -1, menon_sum(f, k, s),
                          modes<T>::from_scalar(n, menon_sum_trivial_char(f, k, s)), "", out);
            }
        }
    }

    // One unit per n covers every coprime factorization n = n1 * n2, with
    // the full-modulus brute value shared across factorizations.
    void run_thm4(const unit& u, unit_result& out) const {
        const int64_t n = u.n;
        auto fams = families();
        const auto ks = grid(n, cfg.fixed_k);
        const auto ss = grid(n, cfg.fixed_s);
        std::vector<std::optional<value_t<T>>> brute(fams.size() * ks.size() * ss.size());
        auto slot_of = [&](size_t fi, size_t ki, size_t si) -> std::optional<value_t<T>>& {
            return brute[(fi * ks.size() + ki) * ss.size() + si];
        };
        for (auto [n1, n2] : coprime_splittings(n)) {
            for (size_t fi = 0; fi < fams.size(); ++fi) {
                auto f = fams[fi].at(n);
                for (size_t ki = 0; ki < ks.size(); ++ki)
                    for (size_t si = 0; si < ss.size(); ++si) {
                        auto& slot = slot_of(fi, ki, si);
                        if (!slot) slot = menon_sum(f, ks[ki], ss[si]);
                        check(identity::thm4, n, ks[ki], ss[si], cfg.functions[fi].text, n1, *slot,
                              menon_sum_split(fams[fi], n1, n2, ks[ki], ss[si]), "", out);
                    }
            }
        }
    }

    void run_thm5(const unit& u, unit_result& out) const {
        const int64_t n = u.n;
        auto fams = families();
        const auto ks = grid(n, cfg.fixed_k);
        const auto ss = grid(n, cfg.fixed_s);
        for (int64_t k : ks) {
            if (!valuation_split_defined(n, k)) {
                out.c.skipped += static_cast<int64_t>(fams.size() * ss.size());
                continue;
            }
            for (size_t fi = 0; fi < fams.size(); ++fi) {
                auto f = fams[fi].at(n);
                for (int64_t s : ss)
                    check(identity::thm5, n, k, s, cfg.functions[fi].text, -1, menon_sum(f, k, s),
                          menon_sum_valuation_split(fams[fi], n, k, s), "", out);
            }
        }
    }

    void run_cor2(const unit& u, unit_result& out) const {
        const int64_t n = u.n;
        auto fams = families();
        const auto ks = grid(n, cfg.fixed_k);
        const auto ss = grid(n, cfg.fixed_s);
        for (int64_t k : ks) {
            if (!valuation_split_defined(n, k)) {
                out.c.skipped += static_cast<int64_t>(fams.size() * ss.size());
                continue;
            }
            for (size_t fi = 0; fi < fams.size(); ++fi) {
                auto f = fams[fi].at(n);
                for (int64_t s : ss)
                    check(identity::cor2, n, k, s, cfg.functions[fi].text, -1, menon_sum(f, k, s),
                          split_value_for<T>(cfg.functions[fi], n, k, s), "", out);
            }
        }
    }

    void run_cor3(const unit& u, unit_result& out) const {
        const int64_t n = u.n;
        auto fams = families();
        const auto ks = grid(n, cfg.fixed_k);
        const auto ss = grid(n, cfg.fixed_s);
        for (int64_t k : ks) {
            if (!valuation_split_defined(n, k)) {
                out.c.skipped += static_cast<int64_t>(fams.size() * ss.size());
                continue;
            }
            for (int64_t s : ss) {
                if (gcd64(s, n) != 1) {
                    out.c.skipped += static_cast<int64_t>(fams.size());
                    continue;
                }
                for (size_t fi = 0; fi < fams.size(); ++fi) {
                    auto f = fams[fi].at(n);
                    check(identity::cor3, n, k, s, cfg.functions[fi].text, -1, menon_sum(f, k, s),
                          unit_shift_value_for<T>(cfg.functions[fi], n, k, s), "", out);
                }
            }
        }
    }

    void run_gcd_dft(const unit& u, unit_result& out) const {
        const int64_t n = u.n;
        for (int64_t k : grid(n, cfg.fixed_k))
            check(identity::gcd_dft, n, k, 0, "-", -1, gcd_dft<T>(n, k), gcd_dft_closed<T>(n, k),
                  "", out);
    }
};

} // namespace detail

/// Runs every selected identity over the configured grid and collects
/// counters and mismatches. The report is a pure function of the config
/// and mode; worker-thread count never changes its contents.
template <class T>
verification_report run_sweep(const sweep_config& cfg) {
    cfg.validate();
    detail::sweep_worker<T> worker{cfg};
    worker.families(); // surface selector/mode mismatches before any work

    using unit = typename detail::sweep_worker<T>::unit;
    using unit_result = typename detail::sweep_worker<T>::unit_result;
    std::vector<unit> units;
    for (identity id : cfg.normalized_ids())
        for (int64_t n = cfg.n_min; n <= cfg.n_max; ++n) {
            if (id == identity::lemma1 || id == identity::lemma2 || id == identity::lemma3)
                for (int64_t d : divisors(n)) units.push_back({id, n, d});
            else
                units.push_back({id, n, -1});
        }

    auto started = std::chrono::steady_clock::now();
    std::vector<unit_result> results(units.size());
    std::vector<std::exception_ptr> errors(units.size());
    std::atomic<size_t> next{0};
    auto body = [&] {
        size_t i;
        while ((i = next.fetch_add(1)) < units.size()) {
            try {
                worker.run_unit(units[i], results[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const size_t width = std::min<size_t>(std::max(cfg.threads, 1), std::max<size_t>(units.size(), 1));
    std::vector<std::thread> pool;
    for (size_t t = 1; t < width; ++t) pool.emplace_back(body);
    body();
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    verification_report report;
    report.mode = modes<T>::exact ? "exact" : "float";
    report.config = cfg;
    for (identity id : cfg.normalized_ids()) report.identities.emplace_back(id, identity_counters{});
    for (size_t i = 0; i < units.size(); ++i) {
        for (auto& [id, c] : report.identities)
            if (id == units[i].id) c += results[i].c;
        for (auto& fr : results[i].fails) report.failures.push_back(std::move(fr));
    }
    std::sort(report.failures.begin(), report.failures.end(), failure_order);
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

/// Re-evaluates one instance of one identity. `applicable` is false when
/// the instance does not satisfy the identity's hypotheses (or aux does
/// not describe a valid coset modulus / factorization), so it can neither
/// pass nor fail.
template <class T>
struct single_check {
    bool applicable = false;
    bool passed = false;
    std::string expected;
    std::string actual;
    std::string detail;
};

template <class T>
single_check<T> run_single(identity id, int64_t n, int64_t k, int64_t s, int64_t aux,
                           const std::string& fspec, const sweep_config& cfg) {
    single_check<T> r;
    const double tol = cfg.tolerance_scale * double(n);
    auto settle = [&](const value_t<T>& expect, const value_t<T>& got, const std::string& note) {
        r.applicable = true;
        r.passed = modes<T>::equal(expect, got, tol);
        r.expected = detail::render_value(expect);
        r.actual = detail::render_value(got);
        r.detail = r.passed ? "" : note;
    };
    auto family = [&]() { return make_family(function_spec::parse(fspec), T{}); };
    try {
        switch (id) {
        case identity::lemma1:
            if (aux < 1 || n % aux != 0) return r;
            settle(coset_sum<T>(n, k, s, aux), coset_sum_closed<T>(n, k, s, aux, cfg.options), "");
            return r;
        case identity::lemma2:
            if (aux < 1 || n % aux != 0 || !high_valuation_hypothesis(n, k)) return r;
            settle(coset_sum<T>(n, k, s, aux), coset_sum_high_valuation<T>(n, k, s, aux), "");
            return r;
        case identity::lemma3:
            if (aux < 1 || n % aux != 0 || mod_reduce(k, n) != 0) return r;
            settle(coset_sum<T>(n, k, s, aux),
                   modes<T>::from_scalar(n, coset_sum_trivial_char<T>(n, k, s, aux)), "");
            return r;
        case identity::thm1: {
            auto f = family().at(n);
            value_t<T> expect = menon_sum(f, k, s);
            value_t<T> closed = menon_sum_closed(f, k, s, cfg.options);
            if (!modes<T>::equal(expect, closed, tol)) {
                settle(expect, closed, "");
                return r;
            }
            settle(expect, menon_sum_via_cosets(f, k, s, cfg.options), "coset-decomposition");
            return r;
        }
        case identity::thm2: {
            if (!high_valuation_hypothesis(n, k)) return r;
            auto f = family().at(n);
            settle(menon_sum(f, k, s), menon_sum_high_valuation(f, k, s), "");
            return r;
        }
        case identity::thm3: {
            if (mod_reduce(k, n) != 0) return r;
            auto f = family().at(n);
            settle(menon_sum(f, k, s), modes<T>::from_scalar(n, menon_sum_trivial_char(f, k, s)),
                   "");
            return r;
        }
        case identity::thm4: {
            if (aux < 1 || n % aux != 0 || gcd64(aux, n / aux) != 1) return r;
            auto fam = family();
            settle(menon_sum(fam.at(n), k, s), menon_sum_split(fam, aux, n / aux, k, s), "");
            return r;
        }
        case identity::thm5: {
            if (!valuation_split_defined(n, k)) return r;
            auto fam = family();
            settle(menon_sum(fam.at(n), k, s), menon_sum_valuation_split(fam, n, k, s), "");
            return r;
        }
        case identity::cor2: {
            if (!valuation_split_defined(n, k)) return r;
            auto spec = function_spec::parse(fspec);
            settle(menon_sum(make_family(spec, T{}).at(n), k, s), split_value_for<T>(spec, n, k, s),
                   "");
            return r;
        }
        case identity::cor3: {
            if (!valuation_split_defined(n, k) || gcd64(mod_reduce(s, n), n) != 1) return r;
            auto spec = function_spec::parse(fspec);
            settle(menon_sum(make_family(spec, T{}).at(n), k, s),
                   unit_shift_value_for<T>(spec, n, k, s), "");
            return r;
        }
        case identity::gcd_dft:
            settle(gcd_dft<T>(n, k), gcd_dft_closed<T>(n, k), "");
            return r;
        }
    } catch (const hypothesis_error&) {
        return single_check<T>{};
    }
    return r;
}

/// Shrinks a failing instance: first the modulus down its divisor lattice
/// (carrying k, s, and the coset modulus along), then k, then s, then the
/// coset modulus. `had_failure` is false when the input does not fail.
struct minimize_result {
    bool had_failure = false;
    failure_record record;
};

template <class T>
minimize_result minimize_failure(const failure_record& fr, const sweep_config& cfg) {
    auto attempt = [&](int64_t n, int64_t k, int64_t s,
                       int64_t aux) -> std::optional<failure_record> {
        auto r = run_single<T>(fr.id, n, k, s, aux, fr.fspec, cfg);
        if (!r.applicable || r.passed) return std::nullopt;
        return failure_record{fr.id,    n,          mod_reduce(k, n), mod_reduce(s, n), fr.fspec,
                              aux,      r.expected, r.actual,         r.detail};
    };
    minimize_result out;
    auto cur = attempt(fr.n, fr.k, fr.s, fr.d);
    if (!cur) {
        out.record = fr;
        return out; // the instance does not fail under this config
    }
    out.had_failure = true;
    bool shrunk = true;
    while (shrunk) {
        shrunk = false;
        for (int64_t n2 : divisors(cur->n)) {
            if (n2 == cur->n) continue;
            int64_t aux2 = cur->d < 0 ? -1 : gcd64(cur->d, n2);
            if (auto r = attempt(n2, cur->k, cur->s, aux2)) {
                cur = r;
                shrunk = true;
                break;
            }
        }
        if (shrunk) continue;
        for (int64_t k2 = 0; k2 < cur->k && !shrunk; ++k2)
            if (auto r = attempt(cur->n, k2, cur->s, cur->d)) {
                cur = r;
                shrunk = true;
            }
        if (shrunk) continue;
        for (int64_t s2 = 0; s2 < cur->s && !shrunk; ++s2)
            if (auto r = attempt(cur->n, cur->k, s2, cur->d)) {
                cur = r;
                shrunk = true;
            }
        if (shrunk) continue;
        if (cur->d > 0)
            for (int64_t d2 : divisors(cur->n)) {
                if (d2 >= cur->d) break;
                if (auto r = attempt(cur->n, cur->k, cur->s, d2)) {
                    cur = r;
                    shrunk = true;
                    break;
                }
            }
    }
    out.record = *cur;
    return out;
}

// ---------------------------------------------------------------------------
// Report serialization. JSON output is byte-deterministic: it echoes the
// grid configuration but neither thread count nor wall time.
// ---------------------------------------------------------------------------

inline nlohmann::ordered_json failure_to_json(const failure_record& f) {
    nlohmann::ordered_json j;
    j["identity"] = identity_name(f.id);
    j["n"] = f.n;
    j["k"] = f.k;
    j["s"] = f.s;
    j["f"] = f.fspec;
    j["d"] = f.d;
    j["expected"] = f.expected;
    j["actual"] = f.actual;
    j["detail"] = f.detail;
    return j;
}

inline nlohmann::ordered_json report_to_json(const verification_report& r) {
    nlohmann::ordered_json j;
    j["mode"] = r.mode;
    nlohmann::ordered_json cfg;
    cfg["n_min"] = r.config.n_min;
    cfg["n_max"] = r.config.n_max;
    auto ids = nlohmann::ordered_json::array();
    for (identity id : r.config.normalized_ids()) ids.push_back(identity_name(id));
    cfg["identities"] = ids;
    auto fns = nlohmann::ordered_json::array();
    for (const auto& spec : r.config.functions) fns.push_back(spec.text);
    cfg["functions"] = fns;
    cfg["k"] = r.config.fixed_k ? nlohmann::ordered_json(*r.config.fixed_k)
                                : nlohmann::ordered_json(nullptr);
    cfg["s"] = r.config.fixed_s ? nlohmann::ordered_json(*r.config.fixed_s)
                                : nlohmann::ordered_json(nullptr);
    cfg["mutation"] = mutation_name(r.config.options.mut);
    cfg["witness_offset"] = r.config.options.witness_offset;
    cfg["tolerance_scale"] = r.config.tolerance_scale;
    j["config"] = cfg;
    auto t = r.totals();
    j["totals"] = {{"checked", t.checked},
                   {"passed", t.passed},
                   {"failed", t.failed},
                   {"skipped", t.skipped}};
    auto per = nlohmann::ordered_json::array();
    for (const auto& [id, c] : r.identities)
        per.push_back({{"identity", identity_name(id)},
                       {"checked", c.checked},
                       {"passed", c.passed},
                       {"failed", c.failed},
                       {"skipped", c.skipped}});
    j["identities"] = per;
    auto fails = nlohmann::ordered_json::array();
    for (const auto& f : r.failures) fails.push_back(failure_to_json(f));
    j["failures"] = fails;
    return j;
}

inline std::string report_to_text(const verification_report& r) {
    std::ostringstream os;
    auto t = r.totals();
    os << "mode " << r.mode << ", n in [" << r.config.n_min << ", " << r.config.n_max << "], "
       << t.checked << " checked, " << t.passed << " passed, " << t.failed << " failed, "
       << t.skipped << " skipped (" << format_float(r.wall_seconds) << "s)\n";
    for (const auto& [id, c] : r.identities)
        os << "  " << identity_name(id) << ": checked " << c.checked << ", passed " << c.passed
           << ", failed " << c.failed << ", skipped " << c.skipped << "\n";
    const size_t shown = std::min<size_t>(r.failures.size(), 25);
    for (size_t i = 0; i < shown; ++i) {
        const auto& f = r.failures[i];
        os << "  FAIL " << identity_name(f.id) << " n=" << f.n << " k=" << f.k << " s=" << f.s;
        if (f.fspec != "-") os << " f=" << f.fspec;
        if (f.d >= 0) os << " d=" << f.d;
        os << ": expected " << f.expected << ", got " << f.actual;
        if (!f.detail.empty()) os << " [" << f.detail << "]";
        os << "\n";
    }
    if (r.failures.size() > shown)
        os << "  ... " << (r.failures.size() - shown) << " more failures\n";
    return os.str();
}

} // namespace menon
