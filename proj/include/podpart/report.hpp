#pragma once

#include "podpart/bigint.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace podpart {

enum class Status { pass, fail, conjecture_consistent, conjecture_refuted };

std::string_view status_name(Status s);

// One (n, k) point of a sweep together with both sides as evaluated.
struct Witness {
    long n = 0;
    int k = 0;
    BigInt lhs;
    BigInt rhs;
    std::string note;

    nlohmann::json to_json() const;
};

// For an inequality family at fixed k: the first n from which every value in
// the swept range is strict, compared against the predicted threshold.
struct Threshold {
    int k = 0;
    long predicted = 0;
    std::optional<long> observed;  // empty if no strict value was seen

    nlohmann::json to_json() const;
};

struct EqualityPoint {
    long n = 0;
    int k = 0;
};

struct VerificationReport {
    std::string statement_id;
    long n_max = 0;
    int k_max = 0;  // 0 when the statement has no k
    bool conjecture = false;
    std::vector<Witness> failures;
    // inequality families only
    bool inequality = false;
    std::vector<EqualityPoint> equality_set;
    std::vector<Threshold> thresholds;
    // congruences: values not divisible by twice the modulus
    std::vector<Witness> sharpness;
    nlohmann::json parameters = nlohmann::json::object();

    Status status() const;
    // false only for a proved statement with failures
    bool ok() const { return conjecture || failures.empty(); }
    nlohmann::json to_json() const;
    std::string to_plain() const;
};

// Fixed-width summary line used by the plain output format.
std::string summary_line(const VerificationReport& r);

}  // namespace podpart
