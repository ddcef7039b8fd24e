// The fixture reproduction suite, shared by `silted paper-suite` and the
// acceptance test binary.

#pragma once

#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "silted/fixtures.hpp"
#include "silted/homology.hpp"

namespace silted {

/// Everything computed for one quiver.
struct QuiverRun {
    Quiver quiver;
    std::unique_ptr<TwoTermCategory> cat;
    std::vector<TiltingModule> tilting;
    std::vector<SiltingObject> silting;
    std::vector<ClassificationRecord> records;
    std::vector<IsoClass> classes;

    std::size_t strictly_shod_classes() const;
};

QuiverRun run_quiver(const Quiver& q, unsigned jobs = 1);

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = true;
    std::vector<std::string> failures;
};

struct SuiteReport {
    std::vector<CriterionResult> criteria;
    /// Expected-vs-computed counts, one row per fixture.
    std::string table;
    bool all_passed() const;
};

/// Runs criteria 1..7 over every bundled fixture and its opposite.
SuiteReport run_suite(unsigned jobs = 1);

}  // namespace silted
