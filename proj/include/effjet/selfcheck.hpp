/*
 * selfcheck.hpp
 * -------------
 * The acceptance suite: one check per exit criterion, each with an exact
 * tolerance and a wall-clock budget. Shared between the `selftest` CLI
 * subcommand and the standalone acceptance binary.
 */
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace effjet {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    bool within_budget = false;
    double seconds = 0.0;
    double budget_seconds = 0.0;
    std::string detail;  // first failure, or a short summary
};

// quick mode shrinks the iteration counts of the randomized suites; the
// full run pins every criterion exactly as stated.
std::vector<CriterionResult> run_acceptance(bool quick, std::uint64_t seed = 0);

bool all_pass(const std::vector<CriterionResult>& results);

}  // namespace effjet
