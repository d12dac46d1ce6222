#pragma once

#include "podpart/partition.hpp"

#include <optional>
#include <ostream>
#include <string>

namespace podpart::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// Environment override for the enumeration ceiling.
inline constexpr const char* kCeilingVariable = "PODPART_ENUM_CEILING";

enum class Format { json, csv, plain };

struct RunConfig {
    std::string command;  // table | verify | bijection | congruence-scan |
                          // congruence-product | conjecture-scan
    long n_max = 0;
    int k_max = 1;
    long order = 30;
    Format format = Format::plain;
    std::string output;  // empty: standard output
    int ceiling = kDefaultEnumerationCeiling;

    // table
    std::string sequence = "pod";
    int sequence_k = 0;
    std::string route = "gf";
    // verify
    std::string statements = "all";
    // bijection
    std::string map;
    std::string parts, odd, alpha, beta;
    int k = 0;
    // congruences
    long m = 1;
    std::optional<long> t;
    std::string modulus = "2";
    std::string residues;
};

struct ParseOutcome {
    std::optional<RunConfig> config;  // empty when parsing ended the run
    int exit_code = kExitPass;
};

// Help output goes to `out`, usage errors to `err`.
ParseOutcome parse(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Validates, computes, then writes the whole artifact at once; nothing is
// written on a usage error.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace podpart::cli
