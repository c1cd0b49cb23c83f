#pragma once

// Check records and report serialization for the verifier.

#include <chrono>
#include <string>
#include <vector>

#include "json.hpp"

namespace gsp4::report {

// One verified identity. `anchor` names the statement in the source text
// that the check certifies, e.g. "Lemma 7.3". A failing check carries a
// witness: the two sides that were compared and their difference.
struct CheckRecord {
    std::string id;
    std::string anchor;
    bool pass = false;
    std::string left;
    std::string right;
    std::string difference;
    double wall_ms = 0.0;
};

struct Report {
    std::vector<CheckRecord> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    std::size_t failed_count() const {
        std::size_t n = 0;
        for (const auto& c : checks)
            if (!c.pass) ++n;
        return n;
    }
};

// Serializes a report. All timing data lives under the single "timing_ms"
// key so that consumers can strip it and compare runs byte for byte; the
// rest of the document is a pure function of the check results.
inline nlohmann::ordered_json to_json(const Report& r, bool with_timing = true) {
    nlohmann::ordered_json doc;
    doc["schema"] = "1";
    doc["status"] = r.all_pass() ? "pass" : "fail";
    doc["total"] = r.checks.size();
    doc["failed"] = r.failed_count();
    auto checks = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
        nlohmann::ordered_json jc;
        jc["id"] = c.id;
        jc["anchor"] = c.anchor;
        jc["status"] = c.pass ? "pass" : "fail";
        if (!c.left.empty() || !c.right.empty() || !c.difference.empty()) {
            nlohmann::ordered_json w;
            w["left"] = c.left;
            w["right"] = c.right;
            w["difference"] = c.difference;
            jc["witness"] = w;
        }
        checks.push_back(jc);
    }
    doc["checks"] = checks;
    if (with_timing) {
        nlohmann::ordered_json t;
        for (const auto& c : r.checks) t[c.id] = c.wall_ms;
        doc["timing_ms"] = t;
    }
    return doc;
}

inline std::string to_string(const Report& r, bool with_timing = true) {
    return to_json(r, with_timing).dump(2) + "\n";
}

// Runs `fill` on a fresh record, stamping elapsed wall time. `fill` sets
// the pass flag and witness fields; id and anchor are fixed up front.
template <typename F>
CheckRecord timed_check(std::string id, std::string anchor, F&& fill) {
    CheckRecord rec;
    rec.id = std::move(id);
    rec.anchor = std::move(anchor);
    auto t0 = std::chrono::steady_clock::now();
    fill(rec);
    auto t1 = std::chrono::steady_clock::now();
    rec.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return rec;
}

}  // namespace gsp4::report
