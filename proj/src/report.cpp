#include <json.hpp>

#include <sstream>

#include "calibra/suite.hpp"

namespace calibra {

namespace {

using nlohmann::json;

json matrix_to_json(const CoeffMatrix& m) {
    json rows = json::array();
    for (const auto& r : m.rows) {
        json row = json::array();
        for (int v : r.k()) row.push_back(v);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string phases_to_string(const CoeffMatrix& m) {
    std::string s;
    s.reserve(m.phases.size());
    for (Phase p : m.phases) s.push_back(p == Phase::cos ? 'c' : 's');
    return s;
}

json frame_to_json(const Frame& frame) {
    json fs = json::array();
    for (const auto& f : frame.functions()) {
        json terms = json::array();
        for (const auto& [k, ab] : f.terms()) {
            json t;
            t["k"] = json::array();
            for (int v : k.k()) t["k"].push_back(v);
            t["cos"] = ab[0];
            t["sin"] = ab[1];
            terms.push_back(std::move(t));
        }
        fs.push_back(std::move(terms));
    }
    return fs;
}

}  // namespace

std::string to_json(const VerificationReport& report) {
    json j;
    j["suite"] = report.suite;
    j["n"] = report.n;
    j["seed"] = report.seed;
    j["budget"] = report.budget;
    j["overall"] = report.overall() ? "pass" : "fail";
    j["total_runtime_ms"] = report.total_runtime_ms;
    j["checks"] = json::array();
    for (const auto& c : report.checks) {
        json jc;
        jc["name"] = c.name;
        jc["status"] = c.pass ? "pass" : "fail";
        jc["value"] = c.value;
        jc["expected"] = c.expected;
        jc["tolerance"] = c.tolerance;
        jc["runtime_ms"] = c.runtime_ms;
        jc["seed"] = c.seed;
        if (!c.note.empty()) jc["note"] = c.note;
        j["checks"].push_back(std::move(jc));
    }
    return j.dump(2);
}

std::string to_json(const ScanReport& report) {
    json j;
    j["n"] = report.n;
    j["kmax"] = report.kmax;
    j["phases"] = report.phase_set == PhaseSet::all ? "all" : "alternating";
    j["entries_total"] = report.entries.size();
    j["nonzero_count"] = report.nonzero_count;
    j["max_pattern_error"] = report.max_pattern_error;
    j["max_offpattern_value"] = report.max_offpattern_value;
    j["consistent"] = report.consistent;
    j["entries"] = json::array();
    for (const auto& e : report.entries) {
        json je;
        je["matrix"] = matrix_to_json(e.matrix);
        je["phases"] = phases_to_string(e.matrix);
        je["value"] = e.value;
        je["pattern"] = e.pattern;
        je["predicted"] = e.predicted;
        je["abs_error"] = e.abs_error;
        j["entries"].push_back(std::move(je));
    }
    return j.dump(2);
}

std::string to_csv(const ScanReport& report) {
    std::ostringstream out;
    out << "matrix,phases,value,predicted,error\n";
    out.precision(17);
    for (const auto& e : report.entries) {
        out << '"';
        for (std::size_t r = 0; r < e.matrix.rows.size(); ++r) {
            if (r) out << ';';
            const auto k = e.matrix.rows[r].k();
            for (std::size_t i = 0; i < k.size(); ++i) {
                if (i) out << ' ';
                out << k[i];
            }
        }
        out << "\"," << phases_to_string(e.matrix) << ',' << e.value << ',' << e.predicted << ','
            << e.abs_error << '\n';
    }
    return out.str();
}

std::string to_json(const SearchReport& report) {
    json j;
    j["best_value"] = report.best_value;
    j["theoretical"] = report.theoretical;
    j["gap"] = report.gap;
    j["restarts"] = report.restarts;
    j["iterations"] = report.iterations;
    j["seed"] = report.seed;
    j["trace_max"] = report.trace_max;
    if (report.best_frame) j["best_frame"] = frame_to_json(*report.best_frame);
    return j.dump(2);
}

}  // namespace calibra
