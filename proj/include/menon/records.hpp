#pragma once

#include <cstdint>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "menon/sums.hpp"

namespace menon {

/// One evaluated instance in long form, as emitted by the table and eval
/// commands. `value` is the exact rendering in exact mode (plain rational
/// or coefficient vector over the basis of Q(zeta_n)) and a complex pair
/// in float mode; the approx columns always carry the complex embedding.
struct output_record {
    int64_t n = 1;
    int64_t k = 0;
    int64_t s = 0;
    std::string f = "-";
    std::string identity;
    std::string value;
    double approx_re = 0.0;
    double approx_im = 0.0;
};

template <class T>
output_record make_record(int64_t n, int64_t k, int64_t s, std::string f, std::string id,
                          const value_t<T>& v) {
    output_record rec;
    rec.n = n;
    rec.k = mod_reduce(k, n);
    rec.s = mod_reduce(s, n);
    rec.f = std::move(f);
    rec.identity = std::move(id);
    if constexpr (modes<T>::exact) {
        rec.value = v.str();
    } else {
        char buf[96];
        std::snprintf(buf, sizeof(buf), "(%.17g, %.17g)", v.real(), v.imag());
        rec.value = buf;
    }
    auto z = modes<T>::approx(v);
    rec.approx_re = z.real();
    rec.approx_im = z.imag();
    return rec;
}

inline const char* csv_header() { return "n,k,s,f,identity,value,approx_re,approx_im"; }

inline std::string csv_escape(const std::string& x) {
    if (x.find_first_of(",\"\n") == std::string::npos) return x;
    std::string out = "\"";
    for (char c : x) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

inline std::string to_csv_row(const output_record& r) {
    char num[64];
    std::string out = std::to_string(r.n) + "," + std::to_string(r.k) + "," + std::to_string(r.s) +
                      "," + csv_escape(r.f) + "," + csv_escape(r.identity) + "," +
                      csv_escape(r.value);
    std::snprintf(num, sizeof(num), ",%.12g,%.12g", r.approx_re, r.approx_im);
    return out + num;
}

inline nlohmann::ordered_json record_to_json(const output_record& r) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["s"] = r.s;
    j["f"] = r.f;
    j["identity"] = r.identity;
    j["value"] = r.value;
    j["approx_re"] = r.approx_re;
    j["approx_im"] = r.approx_im;
    return j;
}

} // namespace menon
