#pragma once

#include <json.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace podpart {

// Nonincreasing sequence of positive parts. The empty sequence is the unique
// partition of 0.
class Partition {
public:
    Partition() = default;
    // Throws std::invalid_argument unless parts are positive and nonincreasing.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    // Any order, any positive values; sorted into canonical order.
    static Partition from_multiset(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    long size() const noexcept { return size_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }
    // 1-based, with the convention that out-of-range parts are 0.
    int part(int i) const noexcept;
    int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

    int multiplicity(int value) const noexcept;
    bool has_distinct_parts() const noexcept;

    Partition even_parts() const;
    Partition odd_parts() const;
    Partition conjugate() const;

    // Multiset union and difference (difference requires containment).
    Partition united(const Partition& other) const;
    Partition without(const Partition& other) const;
    Partition scaled(int factor) const;

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    long size_ = 0;
};

struct OverpartitionPart {
    int value;
    bool overlined;
    friend bool operator==(const OverpartitionPart&, const OverpartitionPart&) = default;
};

// A partition together with the set of part values whose first occurrence is
// overlined. Flags attach to distinct values, so each value carries at most one.
class Overpartition {
public:
    Overpartition() = default;
    // `overlined_values` must be distinct values occurring in `parts`.
    Overpartition(Partition parts, std::vector<int> overlined_values);

    const Partition& parts() const noexcept { return parts_; }
    const std::vector<int>& overlined_values() const noexcept { return overlined_; }
    long size() const noexcept { return parts_.size(); }
    bool is_overlined(int value) const noexcept;
    // Expanded listing: largest first, the overlined copy before its plain copies.
    std::vector<OverpartitionPart> listing() const;

    std::string to_string() const;

    friend bool operator==(const Overpartition&, const Overpartition&) = default;
    friend auto operator<=>(const Overpartition& a, const Overpartition& b)
    {
        if (auto c = a.parts_ <=> b.parts_; c != 0)
            return c;
        return a.overlined_ <=> b.overlined_;
    }

private:
    Partition parts_;
    std::vector<int> overlined_;  // sorted decreasing
};

using PartitionPredicate = std::function<bool(const Partition&)>;

inline constexpr int kDefaultEnumerationCeiling = 60;

class EnumerationCeilingExceeded : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// Visits every partition of n exactly once, in decreasing lexicographic order of
// part sequences: (n), (n-1,1), ..., (1,...,1). Throws
// EnumerationCeilingExceeded when n > ceiling.
void for_each_partition(int n, const std::function<void(const Partition&)>& visit,
                        int ceiling = kDefaultEnumerationCeiling);

std::vector<Partition> enumerate_partitions(int n, const PartitionPredicate& predicate = {},
                                            int ceiling = kDefaultEnumerationCeiling);

// Visits every overpartition of n (2^d flag choices per partition with d
// distinct values).
void for_each_overpartition(int n, const std::function<void(const Overpartition&)>& visit,
                            int ceiling = kDefaultEnumerationCeiling);

// Parses "14,14,12" or a JSON array "[14,14,12]"; the empty string and "[]"
// give the empty partition. Parts are sorted into canonical order.
Partition parse_partition(const std::string& text);

nlohmann::json to_json(const Partition& p);
nlohmann::json to_json(const Overpartition& p);
Overpartition overpartition_from_json(const nlohmann::json& j);

}  // namespace podpart
