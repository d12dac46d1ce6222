#pragma once

#include "podpart/bigint.hpp"
#include "podpart/partition.hpp"
#include "podpart/qseries.hpp"

#include <json.hpp>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace podpart::counting {

// Every counting function has two independent routes: an explicit enumeration
// of partition objects (bounded by the enumeration ceiling) and coefficient
// extraction from a generating function built with qseries.
enum class Route { enumeration, generating_function };

std::string_view route_name(Route r);
std::optional<Route> parse_route(std::string_view name);

enum class Sequence {
    p,           // all partitions
    pod,         // no part = 2 (mod 4); equivalently distinct odd parts
    pod_e,       //   ... with an even number of parts
    pod_o,       //   ... with an odd number of parts
    b4,          // 4-regular partitions
    b4_e,
    b4_o,
    q0,          // distinct parts, none = 0 (mod 4)
    q2,          // distinct parts, none = 2 (mod 4)
    q0_alt,      // odd parts, each repeated at most three times
    overline_p,  // overpartitions
    mp,          // MP_k
    mbar,        // overlined M_k
    q_odd,       // distinct odd parts
    q_distinct,  // distinct parts
    xi,          // xi_n
    chi,         // chi_n
};

struct SequenceId {
    Sequence kind = Sequence::p;
    int k = 0;  // only for mp and mbar, k >= 1

    std::string name() const;
    bool takes_k() const noexcept { return kind == Sequence::mp || kind == Sequence::mbar; }

    // Accepts the names produced by name(), e.g. "pod_e", "mp_k" (with k
    // supplied separately) or "mp_2". Returns nullopt for unknown names.
    static std::optional<SequenceId> parse(std::string_view name, int k = 0);
    static std::vector<std::string> known_names();

    friend bool operator==(const SequenceId&, const SequenceId&) = default;
};

// Exact values f(0..n_max) of one counting function, tagged with the route
// that produced them. Exported as CSV (n,value) or JSON; values always travel
// as decimal strings.
class SequenceTable {
public:
    SequenceTable(std::string name, Route route, std::vector<BigInt> values);

    const std::string& name() const noexcept { return name_; }
    Route route() const noexcept { return route_; }
    long n_max() const noexcept { return static_cast<long>(values_.size()) - 1; }
    std::span<const BigInt> values() const noexcept { return values_; }

    // Zero for n < 0; throws std::out_of_range for n > n_max.
    BigInt at(long n) const;
    // Value at numerator/denominator: zero unless that is a nonnegative integer.
    BigInt at_ratio(long numerator, long denominator) const;

    std::string to_csv() const;
    nlohmann::json to_json() const;

private:
    std::string name_;
    Route route_;
    std::vector<BigInt> values_;
};

SequenceTable table(SequenceId id, long n_max, Route route = Route::generating_function,
                    int ceiling = kDefaultEnumerationCeiling);

// Generating function of `id` to the given order (xi and chi give their theta
// series).
qseries::PowerSeries generating_function(SequenceId id, std::size_t order);

// Membership tests backing the enumeration route.
bool no_part_2_mod_4(const Partition& p);
bool has_distinct_odd_parts(const Partition& p);  // even parts unrestricted
bool is_4_regular(const Partition& p);
bool in_q0(const Partition& p);
bool in_q2(const Partition& p);
bool in_q0_alt(const Partition& p);
bool in_q_odd(const Partition& p);
bool in_mp_k(int k, const Partition& p);
bool in_mbar_k(int k, const Overpartition& p);

// Single values through the generating-function route. Out-of-domain
// arguments (negative, or a non-integer ratio) give 0.
BigInt p(long n);
BigInt pod(long n);
BigInt pod(long numerator, long denominator);
std::pair<BigInt, BigInt> pod_split(long n);
BigInt b4(long n);
std::pair<BigInt, BigInt> b4_split(long n);
BigInt q0(long n);
BigInt q2(long n);
BigInt q0_alt(long n);
BigInt overline_p(long n);
BigInt overline_p(long numerator, long denominator);
BigInt q_odd(long n);
BigInt q_distinct(long n);
// k >= 1; zero for n < 0.
BigInt mp_k(int k, long n);
BigInt mbar_k(int k, long n);

int xi(long n);
int chi(long n);

}  // namespace podpart::counting
