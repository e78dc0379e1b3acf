#pragma once

#include <string>
#include <vector>

namespace skewchar {

struct SuiteOptions {
    int n_lo = 1;
    int n_hi = 3;
    int m_lo = 0;
    int m_hi = 2;
    int box = 4;          // lambda inside box x box
    int max_cells = 16;   // |lambda| cap for sweeps over shapes
    int bound = 8;        // |a|,|b|,|c| for the path lemmas; c+f for the reflection
    int points = 20;      // random points per character in the weyl suite
    unsigned seed = 1;
    int jobs = 1;
};

struct SuiteReport {
    std::string suite;
    long checks = 0;
    std::vector<std::string> mismatches;

    bool ok() const { return mismatches.empty(); }
    // Deterministic: fixed case order, no timing.
    std::string to_text() const;
    std::string to_json() const;
};

// four-way, lgv, lemmas, reflection, algebra, weyl, sanity, involution.
const std::vector<std::string>& suite_names();

// Unknown names throw PreconditionError.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opt);

}  // namespace skewchar
