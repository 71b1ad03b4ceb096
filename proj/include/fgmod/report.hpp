#pragma once

#include <sstream>
#include <string>

#include "fgmod/expression.hpp"
#include "fgmod/verify.hpp"
#include "json.hpp"

namespace fgmod::verify {

inline constexpr std::size_t printed_counterexample_limit = 10;

inline constexpr const char* report_notes[] = {
    "exactness claims are checked on short exact sequences whose three terms all lie in the subcategory",
    "short exact sequences come from every submodule of each finite grid module",
    "a NonStabilizing instance is recorded as skipped, never as a failure",
};

/// Reads {"ring", "max_torsion_order", "max_free_rank", "ideals", "modules", "max_degree", "kmax", "label"};
/// only "ring" is required.
inline GridSpec grid_from_json(const nlohmann::json& j) {
    try {
        GridSpec g;
        g.ring = parse_ring(j.at("ring").get<std::string>());
        g.label = j.value("label", g.ring.to_string());
        g.max_torsion_order = j.value("max_torsion_order", 16);
        g.max_free_rank = j.value("max_free_rank", std::size_t{0});
        g.max_degree = j.value("max_degree", std::size_t(g.ring.is_integers() ? 1 : 3));
        g.kmax = j.value("kmax", default_kmax);
        if (j.contains("ideals")) {
            for (const auto& x : j.at("ideals")) g.ideal_generators.emplace_back(x.get<long long>());
        } else if (g.ring.is_integers()) {
            g.ideal_generators = default_integer_grid().ideal_generators;
        } else {
            for (Integer d = 1; d <= g.ring.modulus(); d += 1)
                if (g.ring.modulus() % d == 0) g.ideal_generators.push_back(d);
        }
        if (j.contains("modules")) {
            std::vector<CanonicalForm> forms;
            for (const auto& x : j.at("modules")) forms.push_back(canonical_form(parse_module(g.ring, x.get<std::string>())));
            g.module_whitelist = std::move(forms);
        }
        if (g.max_torsion_order < 1) throw Error(ErrorCode::InvalidArgument, "max_torsion_order must be positive");
        return g;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("grid document: ") + e.what());
    }
}

inline GridSpec grid_from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("grid document: ") + e.what());
    }
    return grid_from_json(j);
}

inline nlohmann::json report_json(const ClaimReport& r) {
    nlohmann::json j;
    j["id"] = r.claim_id;
    j["anchor"] = r.anchor;
    j["grid"] = r.grid;
    j["verdict"] = to_string(r.verdict());
    j["expected"] = r.expected_fail ? "fail" : "pass";
    j["instances_checked"] = r.instances_checked;
    j["counterexample_count"] = r.counterexamples.size();
    j["skipped_count"] = r.skipped.size();
    auto& cs = j["counterexamples"] = nlohmann::json::array();
    for (const auto& c : r.counterexamples) cs.push_back({{"M", c.M}, {"N", c.N}, {"a", c.a}, {"detail", c.detail}});
    auto& ss = j["skipped"] = nlohmann::json::array();
    for (const auto& s : r.skipped)
        ss.push_back({{"M", s.M}, {"N", s.N}, {"a", s.a}, {"reason", s.reason}, {"free_rank", s.free_rank}});
    return j;
}

/// One JSON object per line: a header, one record per report, then the summary.
inline std::string format_json_lines(const SuiteSummary& s) {
    std::ostringstream out;
    nlohmann::json header;
    header["notes"] = report_notes;
    out << header.dump() << '\n';
    for (const auto& r : s.reports) out << report_json(r).dump() << '\n';
    nlohmann::json tail;
    tail["summary"] = {{"reports", s.reports.size()}, {"unexpected", s.unexpected}, {"ok", s.ok()}};
    out << tail.dump() << '\n';
    return out.str();
}

inline std::string format_text(const SuiteSummary& s) {
    std::ostringstream out;
    for (const char* note : report_notes) out << "# " << note << '\n';
    for (const auto& r : s.reports) {
        out << r.claim_id << " [" << r.grid << "] " << to_string(r.verdict())
            << (r.expected_fail ? " (expected fail)" : "") << ": " << r.instances_checked << " checked, "
            << r.counterexamples.size() << " counterexamples, " << r.skipped.size() << " skipped\n";
        out << "  \"" << r.anchor << "\"\n";
        for (std::size_t i = 0; i < r.counterexamples.size() && i < printed_counterexample_limit; ++i) {
            const auto& c = r.counterexamples[i];
            out << "  M = " << c.M << ", N = " << c.N << ", a = " << c.a;
            if (!c.detail.empty()) out << ": " << c.detail;
            out << '\n';
        }
        if (r.counterexamples.size() > printed_counterexample_limit)
            out << "  ... " << r.counterexamples.size() - printed_counterexample_limit << " more\n";
    }
    out << (s.ok() ? "all verdicts as expected" : "unexpected verdicts:");
    for (const auto& id : s.unexpected) out << ' ' << id;
    out << '\n';
    return out.str();
}

} // namespace fgmod::verify
