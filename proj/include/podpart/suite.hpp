#pragma once

#include "podpart/report.hpp"

#include <string>
#include <vector>

namespace podpart::suite {

struct StatementInfo {
    std::string id;
    std::string formula;
    bool conjecture = false;
};

// Every statement id in canonical order.
const std::vector<StatementInfo>& statements();
bool is_known(const std::string& id);

// "all" or a comma-separated id list. Throws std::invalid_argument naming the
// first unknown id; duplicates collapse, order follows the registry.
std::vector<std::string> resolve(const std::string& spec);

struct Bounds {
    long n_max = 200;
    int k_max = 3;
    long routes_n_max = 40;  // enumeration is exponential; capped separately
};

// Runs each verifier needed by `ids` once and returns the reports for exactly
// those ids, in registry order. Congruence statements use their own ranges.
std::vector<VerificationReport> run(const std::vector<std::string>& ids, const Bounds& bounds);

// One line per statement: id, padding, formula.
std::string help_listing();

}  // namespace podpart::suite
