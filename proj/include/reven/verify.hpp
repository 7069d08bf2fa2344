#pragma once

#include "reven/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace reven {

// Bounds for a verification sweep.  Zero fields fall back to the
// suite's documented defaults; seed drives every randomized choice,
// so equal options give byte-identical results.
struct VerifyOptions {
    i64 rmax = 0;
    i64 nmax = 0;
    i64 count = 0;
    std::uint64_t seed = 1;
};

struct SuiteResult {
    std::string suite;
    i64 cases = 0;
    std::vector<std::string> failures; // every failed witness, in sweep order
    std::string notes;                 // effective bounds

    bool pass() const { return failures.empty(); }
};

std::vector<std::string> suite_names();
bool suite_exists(const std::string& name);

// UsageError on unknown suite names.
SuiteResult run_suite(const std::string& name, const VerifyOptions& opt);
std::vector<SuiteResult> run_all(const VerifyOptions& opt);

} // namespace reven
