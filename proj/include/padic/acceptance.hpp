#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "padic/serialize.hpp"
#include "padic/suite.hpp"

namespace padic {

struct SubCheck {
    std::string label;
    bool pass = true;
    std::string detail;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    std::vector<SubCheck> checks;
    double seconds = 0;
    double limit_seconds = 0;
    /// Every sub-check passed and the run finished inside the time limit.
    bool pass() const;
};

struct AcceptanceOptions {
    std::uint64_t seed = kDefaultSeed;
    std::vector<std::int64_t> primes{2, 3, 5, 7};
    std::vector<int> dims{1, 2};
};

constexpr int kCriterionCount = 10;

/// Runs criterion 1..10. Library errors inside a criterion become failed sub-checks.
CriterionResult run_criterion(int id, const AcceptanceOptions& options = {});

/// Wall-clock time is left out unless asked for, so the output is reproducible.
Json to_json(const CriterionResult& r, bool timings = false);

struct FixtureResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// A stored input with its expected output. Kinds: "fourier" (exact transform),
/// "zeta" (exact Igusa zeta) and "h_norm" (squared norm within a tolerance).
FixtureResult check_fixture(const Json& fixture, const std::string& name);

/// Checks every *.json file in a directory, in name order.
std::vector<FixtureResult> check_fixture_dir(const std::string& dir);

}  // namespace padic
