#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include <json.hpp>

#include "crws/spectrum.hpp"
#include "crws/verify.hpp"

namespace crws {

/// Complex numbers serialize as [re, im] pairs throughout; never as strings.
inline nlohmann::json to_json(const Complex& z) { return nlohmann::json::array({z.real(), z.imag()}); }

inline nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json samples = nlohmann::json::array();
    for (const SampleRecord& s : r.samples) {
        samples.push_back({{"point", to_json(s.point)},
                           {"lhs", to_json(s.lhs)},
                           {"rhs", to_json(s.rhs)},
                           {"rel_dev", s.rel_dev}});
    }
    return {{"identity", r.identity}, {"graph", r.graph},       {"samples", std::move(samples)},
            {"max_rel_dev", r.max_rel_dev}, {"pass", r.pass},   {"note", r.note}};
}

inline nlohmann::json to_json(const SuiteResult& result) {
    nlohmann::json reports = nlohmann::json::array();
    for (const VerificationReport& r : result.reports) reports.push_back(to_json(r));
    return {{"reports", std::move(reports)}, {"pass", result.all_pass}};
}

/// Canonical eigenvalue order for output: descending real part, then
/// descending imaginary part.
inline std::vector<Complex> sorted_values(const Spectrum& s) {
    std::vector<Complex> v = s.values;
    std::sort(v.begin(), v.end(), [](const Complex& a, const Complex& b) {
        if (a.real() != b.real()) return a.real() > b.real();
        return a.imag() > b.imag();
    });
    return v;
}

inline nlohmann::json to_json(const Spectrum& s) {
    nlohmann::json values = nlohmann::json::array();
    for (const Complex& z : sorted_values(s)) values.push_back(to_json(z));
    return {{"eigenvalues", std::move(values)},
            {"cardinality", s.cardinality()},
            {"provenance", to_string(s.provenance)},
            {"source", s.source}};
}

inline nlohmann::json to_json(const MatchReport& m) {
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& [a, b] : m.pairs) pairs.push_back(nlohmann::json::array({to_json(a), to_json(b)}));
    return {{"pairs", std::move(pairs)},
            {"max_pair_distance", m.max_distance},
            {"pass", m.pass},
            {"note", m.note}};
}

/// CSV export: one eigenvalue per row as "label,re,im,group" where group is a
/// multiplicity-group id assigned by clustering the sorted values at the
/// given linking tolerance.
inline std::string spectrum_to_csv(const Spectrum& s, const std::string& label,
                                   double group_tol = 1e-8) {
    const std::vector<Complex> values = sorted_values(s);
    std::string out = "label,re,im,group\n";
    int group = -1;
    Complex prev(0.0, 0.0);
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i == 0 || std::abs(values[i] - prev) > group_tol) ++group;
        prev = values[i];
        char buf[128];
        std::snprintf(buf, sizeof(buf), "%s,%.17g,%.17g,%d\n", label.c_str(), values[i].real(),
                      values[i].imag(), group);
        out += buf;
    }
    return out;
}

}  // namespace crws
