#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mlfrac/types.hpp"

namespace mlfrac {

struct CaseRecord {
    std::string inputs;
    Complex lhs, rhs;
    Real error = 0;
};

struct VerifyReport {
    std::string id;     // "<suite>/<check>"
    std::string claim;  // one-line statement of the identity
    long cases = 0;
    long skipped = 0;   // inadmissible draws, not counted in cases
    Real max_error = 0;
    Real tolerance = 0;
    bool pass = false;
    std::vector<CaseRecord> records;
};

struct VerifyOptions {
    std::uint64_t seed = 7;
    Real tol = 0;  // 0: each check uses its own tolerance
    long max_terms = 0;  // 0: library default series cap
};

struct CheckInfo {
    std::string suite;
    std::string name;
    Real default_tol;
    VerifyReport (*run)(const VerifyOptions&, Real tol);
};

// Suite ids accepted by run_suite, without "all".
const std::vector<std::string>& suite_ids();
const std::vector<CheckInfo>& verify_checks();

// "all" runs every suite in suite_ids() order. std::invalid_argument for an unknown id.
std::vector<VerifyReport> run_suite(std::string_view id, const VerifyOptions& opts = {});
// A single check by "<suite>/<check>" id.
VerifyReport run_check(std::string_view id, const VerifyOptions& opts = {});

}  // namespace mlfrac
