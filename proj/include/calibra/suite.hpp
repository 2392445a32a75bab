#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "calibra/omega.hpp"
#include "calibra/search.hpp"

namespace calibra {

struct CheckRecord {
    std::string name;
    bool pass = false;
    double value = 0.0;     ///< measured
    double expected = 0.0;  ///< target constant
    double tolerance = 0.0;
    double runtime_ms = 0.0;
    std::uint64_t seed = 0;
    std::string note;
};

struct VerificationReport {
    std::string suite;
    int n = 1;
    std::uint64_t seed = 0;
    std::string budget;  ///< "quick" or "full"
    std::vector<CheckRecord> checks;
    double total_runtime_ms = 0.0;

    bool overall() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// Runs one of the named check suites: "cocycle", "fourier", "comass",
/// "embedding" or "all". Budget "quick" caps Monte Carlo at 1e5 samples and
/// n at 2; "full" allows 1e7 samples and n up to 3. Reports are a pure
/// function of (suite, n, seed, budget).
VerificationReport run_suite(const std::string& suite, int n, std::uint64_t seed,
                             const std::string& budget);

std::string to_json(const VerificationReport& report);
std::string to_json(const ScanReport& report);
std::string to_csv(const ScanReport& report);
std::string to_json(const SearchReport& report);

}  // namespace calibra
