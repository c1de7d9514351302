#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "menon/menon.hpp"

namespace {

using namespace menon;

struct io_options {
    std::string mode = "exact";
    std::string format; // empty means the command default
    std::string out;

    std::string format_or(const char* fallback) const {
        return format.empty() ? fallback : format;
    }
};

void write_output(const io_options& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) throw_error(errc::config_invalid, "cannot open output file '" + opt.out + "'");
    f << text;
}

const std::vector<std::string>& eval_ids() {
    static const std::vector<std::string> ids = {"bruteforce", "thm1",      "thm2",
                                                 "thm3",       "thm5",      "cor2",
                                                 "cor3",       "T",         "ramanujan",
                                                 "gcd-dft"};
    return ids;
}

bool id_takes_function(const std::string& id) {
    return id != "T" && id != "ramanujan" && id != "gcd-dft";
}

template <class T>
output_record eval_one(const std::string& id, int64_t n, int64_t k, int64_t s,
                       const std::string& fspec, int64_t d) {
    if (id == "T") return make_record<T>(n, k, s, "-", id, coset_sum<T>(n, k, s, d));
    if (id == "ramanujan") {
        T scalar;
        if constexpr (modes<T>::exact)
            scalar = Rat(ramanujan_sum(n, k));
        else
            scalar = Rat(ramanujan_sum(n, k)).get_d();
        return make_record<T>(n, k, 0, "-", id, modes<T>::from_scalar(n, scalar));
    }
    if (id == "gcd-dft") return make_record<T>(n, k, 0, "-", id, gcd_dft_closed<T>(n, k));
    auto spec = function_spec::parse(fspec);
    auto fam = make_family(spec, T{});
    if (id == "bruteforce")
        return make_record<T>(n, k, s, spec.text, id, menon_sum(fam.at(n), k, s));
    if (id == "thm1")
        return make_record<T>(n, k, s, spec.text, id, menon_sum_closed(fam.at(n), k, s));
    if (id == "thm2")
        return make_record<T>(n, k, s, spec.text, id, menon_sum_high_valuation(fam.at(n), k, s));
    if (id == "thm3")
        return make_record<T>(n, k, s, spec.text, id,
                              modes<T>::from_scalar(n, menon_sum_trivial_char(fam.at(n), k, s)));
    if (id == "thm5")
        return make_record<T>(n, k, s, spec.text, id, menon_sum_valuation_split(fam, n, k, s));
    if (id == "cor2")
        return make_record<T>(n, k, s, spec.text, id, split_value_for<T>(spec, n, k, s));
    if (id == "cor3")
        return make_record<T>(n, k, s, spec.text, id, unit_shift_value_for<T>(spec, n, k, s));
    throw_error(errc::config_invalid, "unknown evaluator '" + id + "'");
}

std::string record_line(const output_record& r) {
    std::ostringstream os;
    os << "n=" << r.n << " k=" << r.k << " s=" << r.s;
    if (r.f != "-") os << " f=" << r.f;
    os << " identity=" << r.identity << " value=" << r.value;
    char buf[64];
    std::snprintf(buf, sizeof(buf), " approx=(%.12g, %.12g)", r.approx_re, r.approx_im);
    return os.str() + buf + "\n";
}

std::string render_records(const std::vector<output_record>& recs, const std::string& format) {
    if (format == "csv") {
        std::string out = std::string(csv_header()) + "\n";
        for (const auto& r : recs) out += to_csv_row(r) + "\n";
        return out;
    }
    if (format == "json") {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& r : recs) arr.push_back(record_to_json(r));
        return arr.dump(2) + "\n";
    }
    if (format == "text") {
        std::string out;
        for (const auto& r : recs) out += record_line(r);
        return out;
    }
    throw_error(errc::config_invalid, "unknown format '" + format + "'");
}

struct eval_args {
    std::string id;
    int64_t n = 1;
    int64_t k = 0;
    int64_t s = 0;
    std::string f = "gcdpow:1";
    int64_t d = 1;
};

template <class T>
int do_eval(const io_options& opt, const eval_args& a) {
    std::vector<output_record> recs{eval_one<T>(a.id, a.n, a.k, a.s, a.f, a.d)};
    write_output(opt, render_records(recs, opt.format_or("text")));
    return 0;
}

struct table_args {
    std::string id;
    int64_t n_min = 1;
    int64_t n_max = 12;
    std::optional<int64_t> k;
    std::optional<int64_t> s;
    std::vector<std::string> fs;
};

template <class T>
int do_table(const io_options& opt, const table_args& a) {
    if (a.id == "T")
        throw_error(errc::config_invalid,
                    "the table layout has no column for d; use eval for restricted sums");
    std::vector<std::string> fs = a.fs;
    if (fs.empty())
        for (const auto& spec : builtin_function_specs()) fs.push_back(spec.text);
    std::vector<output_record> recs;
    for (int64_t n = a.n_min; n <= a.n_max; ++n) {
        std::vector<int64_t> ks, ss;
        if (a.k)
            ks = {mod_reduce(*a.k, n)};
        else
            for (int64_t k = 0; k < n; ++k) ks.push_back(k);
        if (a.s)
            ss = {mod_reduce(*a.s, n)};
        else
            for (int64_t s = 0; s < n; ++s) ss.push_back(s);
        if (!id_takes_function(a.id)) {
            for (int64_t k : ks) recs.push_back(eval_one<T>(a.id, n, k, 0, "", 1));
            continue;
        }
        for (const auto& f : fs)
            for (int64_t k : ks)
                for (int64_t s : ss) {
                    try {
                        recs.push_back(eval_one<T>(a.id, n, k, s, f, 1));
                    } catch (const hypothesis_error&) {
                        // outside this identity's hypotheses; no row
                    }
                }
    }
    write_output(opt, render_records(recs, opt.format_or("csv")));
    return 0;
}

struct verify_args {
    int64_t n_min = 1;
    int64_t n_max = 24;
    std::string ids;
    bool all = false;
    std::vector<std::string> fs;
    std::optional<int64_t> k;
    std::optional<int64_t> s;
    int threads = 1;
    std::string mutate = "none";
    int64_t witness_offset = 0;
    double tolerance_scale = 1e-9;
};

template <class T>
int do_verify(const io_options& opt, const verify_args& a) {
    sweep_config cfg;
    cfg.n_min = a.n_min;
    cfg.n_max = a.n_max;
    if (!a.ids.empty() && !a.all) {
        cfg.ids.clear();
        std::stringstream ss(a.ids);
        std::string tok;
        while (std::getline(ss, tok, ','))
            if (!tok.empty()) cfg.ids.push_back(parse_identity(tok));
    }
    if (!a.fs.empty()) {
        cfg.functions.clear();
        for (const auto& f : a.fs) cfg.functions.push_back(function_spec::parse(f));
    }
    cfg.fixed_k = a.k;
    cfg.fixed_s = a.s;
    cfg.threads = a.threads;
    cfg.options.mut = parse_mutation(a.mutate);
    cfg.options.witness_offset = a.witness_offset;
    cfg.tolerance_scale = a.tolerance_scale;

    auto rep = run_sweep<T>(cfg);
    std::string format = opt.format_or("text");
    if (format == "json")
        write_output(opt, report_to_json(rep).dump(2) + "\n");
    else if (format == "text")
        write_output(opt, report_to_text(rep));
    else
        throw_error(errc::config_invalid, "verify supports text or json output");
    if (!opt.out.empty()) {
        auto t = rep.totals();
        std::cout << (rep.ok() ? "ok" : "FAIL") << ": " << t.checked << " checked, " << t.failed
                  << " failed, " << t.skipped << " skipped -> " << opt.out << "\n";
    }
    return rep.ok() ? 0 : 1;
}

int do_split(const io_options& opt, int64_t n, int64_t k) {
    auto sp = valuation_split(n, k);
    std::string format = opt.format_or("text");
    if (format == "json") {
        nlohmann::ordered_json j;
        j["n"] = sp.n;
        j["k"] = sp.k;
        j["n1"] = sp.n1;
        j["n2"] = sp.n2;
        j["n1_inv"] = sp.n1_inv;
        j["n2_inv"] = sp.n2_inv;
        write_output(opt, j.dump(2) + "\n");
    } else if (format == "text") {
        std::ostringstream os;
        os << "n=" << sp.n << " k=" << sp.k << " n1=" << sp.n1 << " n2=" << sp.n2
           << " n1_inv=" << sp.n1_inv << " n2_inv=" << sp.n2_inv << "\n";
        write_output(opt, os.str());
    } else {
        throw_error(errc::config_invalid, "split supports text or json output");
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact evaluation and verification of Menon-type character sums"};
    app.require_subcommand(1);

    io_options opt;
    app.add_option("--mode", opt.mode, "scalar mode: exact or float")
        ->check(CLI::IsMember({"exact", "float"}));
    app.add_option("--format", opt.format, "output format: text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    app.add_option("--out", opt.out, "write output to a file instead of stdout");

    eval_args ea;
    auto* eval = app.add_subcommand("eval", "evaluate one sum");
    eval->fallthrough();
    eval->add_option("--id", ea.id, "evaluator")->required()->check(CLI::IsMember(eval_ids()));
    eval->add_option("--n", ea.n, "modulus")->required()->check(CLI::PositiveNumber);
    eval->add_option("--k", ea.k, "character index");
    eval->add_option("--s", ea.s, "shift");
    eval->add_option("--f", ea.f, "function selector (default gcdpow:1)");
    eval->add_option("--d", ea.d, "residue modulus for T")->check(CLI::PositiveNumber);

    table_args ta;
    auto* table = app.add_subcommand("table", "tabulate values over a grid");
    table->fallthrough();
    table->add_option("--id", ta.id, "evaluator")->required()->check(CLI::IsMember(eval_ids()));
    table->add_option("--nmin", ta.n_min)->check(CLI::PositiveNumber);
    table->add_option("--nmax", ta.n_max)->check(CLI::PositiveNumber);
    table->add_option("--k", ta.k, "fix k instead of sweeping [0, n)");
    table->add_option("--s", ta.s, "fix s instead of sweeping [0, n)");
    table->add_option("--f", ta.fs, "function selectors (default: built-ins)");

    verify_args va;
    auto* verify = app.add_subcommand("verify", "check closed forms against brute force");
    verify->fallthrough();
    verify->add_option("--nmin", va.n_min)->check(CLI::PositiveNumber);
    verify->add_option("--nmax", va.n_max)->check(CLI::PositiveNumber);
    verify->add_option("--ids", va.ids, "comma-separated identity list (default: all)");
    verify->add_flag("--all", va.all, "check every identity");
    verify->add_option("--f", va.fs, "function selectors (default: built-ins)");
    verify->add_option("--k", va.k, "fix k instead of sweeping [0, n)");
    verify->add_option("--s", va.s, "fix s instead of sweeping [0, n)");
    verify->add_option("--threads", va.threads, "worker threads (report is unaffected)");
    verify->add_option("--mutate", va.mutate, "seed a deliberate defect into the closed forms");
    verify->add_option("--witness-offset", va.witness_offset,
                       "shift residue representatives by this multiple of d");
    verify->add_option("--tol-scale", va.tolerance_scale, "float mode tolerance per unit of n");

    int64_t sn = 1, sk = 0;
    auto* split = app.add_subcommand("split", "valuation splitting of n along k");
    split->fallthrough();
    split->add_option("--n", sn, "modulus")->required()->check(CLI::PositiveNumber);
    split->add_option("--k", sk, "character index")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        const bool exact = opt.mode == "exact";
        if (eval->parsed()) return exact ? do_eval<Rat>(opt, ea) : do_eval<double>(opt, ea);
        if (table->parsed()) return exact ? do_table<Rat>(opt, ta) : do_table<double>(opt, ta);
        if (verify->parsed()) return exact ? do_verify<Rat>(opt, va) : do_verify<double>(opt, va);
        if (split->parsed()) return do_split(opt, sn, sk);
    } catch (const menon::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == errc::config_invalid ? 2 : 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
