#include "podpart/counting.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace podpart::counting {

using qseries::PowerSeries;

std::string_view route_name(Route r)
{
    return r == Route::enumeration ? "enumeration" : "generating-function";
}

std::optional<Route> parse_route(std::string_view name)
{
    if (name == "enumeration" || name == "enum")
        return Route::enumeration;
    if (name == "generating-function" || name == "gf")
        return Route::generating_function;
    return std::nullopt;
}

namespace {

struct NamedSequence {
    Sequence kind;
    std::string_view name;
};

constexpr NamedSequence kNames[] = {
    {Sequence::p, "p"},         {Sequence::pod, "pod"},
    {Sequence::pod_e, "pod_e"}, {Sequence::pod_o, "pod_o"},
    {Sequence::b4, "b4"},       {Sequence::b4_e, "b4_e"},
    {Sequence::b4_o, "b4_o"},   {Sequence::q0, "q0"},
    {Sequence::q2, "q2"},       {Sequence::q0_alt, "q0_alt"},
    {Sequence::overline_p, "pbar"},
    {Sequence::mp, "mp"},       {Sequence::mbar, "mbar"},
    {Sequence::q_odd, "q_odd"}, {Sequence::q_distinct, "q_distinct"},
    {Sequence::xi, "xi"},       {Sequence::chi, "chi"},
};

long isqrt(long n)
{
    if (n < 0)
        return -1;
    auto r = static_cast<long>(std::sqrt(static_cast<double>(n)));
    while (r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

void require_k(int k)
{
    if (k < 1)
        throw std::invalid_argument("k must be a positive integer");
}

}  // namespace

std::string SequenceId::name() const
{
    for (const auto& e : kNames)
        if (e.kind == kind)
            return takes_k() ? std::string(e.name) + "_" + std::to_string(k) : std::string(e.name);
    return "?";
}

std::optional<SequenceId> SequenceId::parse(std::string_view name, int k)
{
    if (name == "overline_p")
        name = "pbar";
    for (const auto& e : kNames) {
        SequenceId id{e.kind, 0};
        if (!id.takes_k()) {
            if (name == e.name)
                return id;
            continue;
        }
        // "mp", "mp_k" (k given separately) or "mp_<k>"
        if (name == e.name || name == std::string(e.name) + "_k") {
            if (k < 1)
                return std::nullopt;
            id.k = k;
            return id;
        }
        const std::string prefix = std::string(e.name) + "_";
        if (name.starts_with(prefix)) {
            const std::string digits(name.substr(prefix.size()));
            if (digits.empty() || !std::ranges::all_of(digits, ::isdigit))
                return std::nullopt;
            id.k = std::stoi(digits);
            if (id.k < 1)
                return std::nullopt;
            return id;
        }
    }
    return std::nullopt;
}

std::vector<std::string> SequenceId::known_names()
{
    std::vector<std::string> out;
    for (const auto& e : kNames) {
        SequenceId id{e.kind, 0};
        out.push_back(id.takes_k() ? std::string(e.name) + "_k" : std::string(e.name));
    }
    return out;
}

SequenceTable::SequenceTable(std::string name, Route route, std::vector<BigInt> values)
    : name_(std::move(name)), route_(route), values_(std::move(values))
{
    if (values_.empty())
        throw std::invalid_argument("a sequence table needs at least the n = 0 entry");
}

BigInt SequenceTable::at(long n) const
{
    if (n < 0)
        return 0;
    if (n > n_max())
        throw std::out_of_range(name_ + "(" + std::to_string(n) + ") is beyond the table bound " +
                                std::to_string(n_max()));
    return values_[static_cast<std::size_t>(n)];
}

BigInt SequenceTable::at_ratio(long numerator, long denominator) const
{
    if (denominator == 0)
        throw std::invalid_argument("zero denominator");
    if (denominator < 0) {
        numerator = -numerator;
        denominator = -denominator;
    }
    if (numerator < 0 || numerator % denominator != 0)
        return 0;
    return at(numerator / denominator);
}

std::string SequenceTable::to_csv() const
{
    std::ostringstream os;
    os << "n,value\n";
    for (std::size_t n = 0; n < values_.size(); ++n)
        os << n << ',' << to_decimal(values_[n]) << '\n';
    return os.str();
}

nlohmann::json SequenceTable::to_json() const
{
    auto vals = nlohmann::json::array();
    for (const auto& v : values_)
        vals.push_back(to_decimal(v));
    return {{"name", name_}, {"route", std::string(route_name(route_))}, {"n_max", n_max()},
            {"values", vals}};
}

// ---------------------------------------------------------------------------
// membership predicates

bool no_part_2_mod_4(const Partition& p)
{
    return std::ranges::none_of(p.parts(), [](int v) { return v % 4 == 2; });
}

bool has_distinct_odd_parts(const Partition& p)
{
    const auto odd = p.odd_parts();
    return odd.has_distinct_parts();
}

bool is_4_regular(const Partition& p)
{
    return std::ranges::none_of(p.parts(), [](int v) { return v % 4 == 0; });
}

bool in_q0(const Partition& p) { return p.has_distinct_parts() && is_4_regular(p); }

bool in_q2(const Partition& p) { return p.has_distinct_parts() && no_part_2_mod_4(p); }

bool in_q0_alt(const Partition& p)
{
    const auto& v = p.parts();
    if (std::ranges::any_of(v, [](int x) { return x % 2 == 0; }))
        return false;
    for (std::size_t i = 0; i < v.size();) {
        std::size_t j = i;
        while (j < v.size() && v[j] == v[i])
            ++j;
        if (j - i > 3)
            return false;
        i = j;
    }
    return true;
}

bool in_q_odd(const Partition& p)
{
    return p.has_distinct_parts() &&
           std::ranges::all_of(p.parts(), [](int x) { return x % 2 != 0; });
}

bool in_mp_k(int k, const Partition& p)
{
    require_k(k);
    // The designated part is the smallest part exceeding 2k-1.
    const auto& v = p.parts();
    int designated = 0;
    for (auto it = v.rbegin(); it != v.rend(); ++it)
        if (*it > 2 * k - 1) {
            designated = *it;
            break;
        }
    if (designated == 0 || designated % 2 == 0 || p.multiplicity(designated) != k)
        return false;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] % 2 == 0 || v[i] == designated)
            continue;
        if (i > 0 && v[i - 1] == v[i])
            return false;
    }
    return true;
}

bool in_mbar_k(int k, const Overpartition& p)
{
    require_k(k);
    const auto& v = p.parts().parts();
    for (auto it = v.rbegin(); it != v.rend(); ++it)
        if (*it > k)
            return p.parts().multiplicity(*it) >= k + 1;
    return false;
}

// ---------------------------------------------------------------------------
// generating functions

namespace {

PowerSeries pod_gf(std::size_t N) { return qseries::divide(qseries::poch_inf(2, 4, N), qseries::poch_inf(1, 1, N)); }

PowerSeries b4_gf(std::size_t N) { return qseries::divide(qseries::poch_inf(4, 4, N), qseries::poch_inf(1, 1, N)); }

// sum (pod_e - pod_o) q^n: every admissible part contributes 1/(1 + q^a).
PowerSeries pod_parity_gf(std::size_t N)
{
    using namespace qseries;
    return inverse(poch_inf_neg(1, 4, N) * poch_inf_neg(3, 4, N) * poch_inf_neg(4, 4, N));
}

PowerSeries b4_parity_gf(std::size_t N)
{
    using namespace qseries;
    return inverse(poch_inf_neg(1, 4, N) * poch_inf_neg(2, 4, N) * poch_inf_neg(3, 4, N));
}

// prod over odd a of (1 + q^a + q^2a + q^3a)
PowerSeries q0_alt_gf(std::size_t N)
{
    std::vector<BigInt> c(N + 1);
    c[0] = 1;
    for (std::size_t a = 1; a <= N; a += 2) {
        for (std::size_t i = N;; --i) {
            BigInt add;
            for (std::size_t m = 1; m <= 3 && m * a <= i; ++m)
                add += c[i - m * a];
            c[i] += add;
            if (i == 0)
                break;
        }
    }
    return PowerSeries(std::move(c));
}

// (-q;q^2)_k / (q^2;q^2)_{k-1} * sum_{j>=k} q^{k(2j+1)} (-q^{2j+3};q^2)_inf / (q^{2j+2};q^2)_inf
PowerSeries mp_gf(int k, std::size_t N)
{
    using namespace qseries;
    const long n = static_cast<long>(N);
    const long top = std::max<long>(k, n / 2 + 1);
    PowerSeries tail = PowerSeries::one(N);  // (-q^{2j+3};q^2)/(q^{2j+2};q^2) at j = top
    PowerSeries sum(N);
    for (long j = top; j >= k; --j) {
        if (j < top) {
            tail = times_binomial(tail, +1, static_cast<std::size_t>(2 * j + 3));
            tail = over_binomial(tail, -1, static_cast<std::size_t>(2 * j + 2));
        }
        const long shift = static_cast<long>(k) * (2 * j + 1);
        if (shift <= n)
            sum = sum + tail.shifted(static_cast<std::size_t>(shift));
    }
    return divide(poch_finite_neg(1, 2, k, N) * sum, poch_finite(2, 2, k - 1, N));
}

// (-q;q)_k / (q;q)_k * sum_{j>=k+1} 2 q^{j(k+1)} / (1-q^j) * (-q^{j+1};q)_inf / (q^{j+1};q)_inf
PowerSeries mbar_gf(int k, std::size_t N)
{
    using namespace qseries;
    const long n = static_cast<long>(N);
    const long top = std::max<long>(k + 1, n);
    PowerSeries tail = PowerSeries::one(N);
    PowerSeries sum(N);
    for (long j = top; j >= k + 1; --j) {
        if (j < top) {
            tail = times_binomial(tail, +1, static_cast<std::size_t>(j + 1));
            tail = over_binomial(tail, -1, static_cast<std::size_t>(j + 1));
        }
        const long shift = j * (static_cast<long>(k) + 1);
        if (shift <= n)
            sum = sum + over_binomial(tail, -1, static_cast<std::size_t>(j))
                            .shifted(static_cast<std::size_t>(shift))
                            .scaled(2);
    }
    return divide(poch_finite_neg(1, 1, k, N) * sum, poch_finite(1, 1, k, N));
}

std::vector<BigInt> halves(const PowerSeries& total, const PowerSeries& diff, bool even_part)
{
    std::vector<BigInt> out(total.order() + 1);
    for (std::size_t i = 0; i <= total.order(); ++i) {
        BigInt twice = even_part ? BigInt(total[i] + diff[i]) : BigInt(total[i] - diff[i]);
        if (!divisible_by(twice, 2))
            throw std::logic_error("parity split is not an integer");
        out[i] = twice / 2;
    }
    return out;
}

std::vector<BigInt> coefficients_of(const PowerSeries& s)
{
    return {s.coefficients().begin(), s.coefficients().end()};
}

std::vector<BigInt> gf_values(SequenceId id, std::size_t N)
{
    switch (id.kind) {
    case Sequence::pod_e:
        return halves(pod_gf(N), pod_parity_gf(N), true);
    case Sequence::pod_o:
        return halves(pod_gf(N), pod_parity_gf(N), false);
    case Sequence::b4_e:
        return halves(b4_gf(N), b4_parity_gf(N), true);
    case Sequence::b4_o:
        return halves(b4_gf(N), b4_parity_gf(N), false);
    default:
        return coefficients_of(generating_function(id, N));
    }
}

using PartitionCounter = std::function<bool(const Partition&)>;

std::vector<BigInt> count_partitions(long n_max, int ceiling, const PartitionCounter& pred)
{
    std::vector<BigInt> out(static_cast<std::size_t>(n_max + 1));
    for (long n = 0; n <= n_max; ++n) {
        unsigned long count = 0;
        for_each_partition(
            static_cast<int>(n), [&](const Partition& p) { count += pred(p) ? 1 : 0; }, ceiling);
        out[static_cast<std::size_t>(n)] = count;
    }
    return out;
}

std::vector<BigInt> count_overpartitions(long n_max, int ceiling,
                                         const std::function<bool(const Overpartition&)>& pred)
{
    std::vector<BigInt> out(static_cast<std::size_t>(n_max + 1));
    for (long n = 0; n <= n_max; ++n) {
        unsigned long count = 0;
        for_each_overpartition(
            static_cast<int>(n), [&](const Overpartition& p) { count += pred(p) ? 1 : 0; },
            ceiling);
        out[static_cast<std::size_t>(n)] = count;
    }
    return out;
}

bool even_length(const Partition& p) { return p.length() % 2 == 0; }

std::vector<BigInt> enumeration_values(SequenceId id, long n_max, int ceiling)
{
    auto all = [](const Partition&) { return true; };
    switch (id.kind) {
    case Sequence::p:
        return count_partitions(n_max, ceiling, all);
    case Sequence::pod:
        return count_partitions(n_max, ceiling, no_part_2_mod_4);
    case Sequence::pod_e:
        return count_partitions(n_max, ceiling,
                                [](const Partition& p) { return no_part_2_mod_4(p) && even_length(p); });
    case Sequence::pod_o:
        return count_partitions(n_max, ceiling,
                                [](const Partition& p) { return no_part_2_mod_4(p) && !even_length(p); });
    case Sequence::b4:
        return count_partitions(n_max, ceiling, is_4_regular);
    case Sequence::b4_e:
        return count_partitions(n_max, ceiling,
                                [](const Partition& p) { return is_4_regular(p) && even_length(p); });
    case Sequence::b4_o:
        return count_partitions(n_max, ceiling,
                                [](const Partition& p) { return is_4_regular(p) && !even_length(p); });
    case Sequence::q0:
        return count_partitions(n_max, ceiling, in_q0);
    case Sequence::q2:
        return count_partitions(n_max, ceiling, in_q2);
    case Sequence::q0_alt:
        return count_partitions(n_max, ceiling, in_q0_alt);
    case Sequence::q_odd:
        return count_partitions(n_max, ceiling, in_q_odd);
    case Sequence::q_distinct:
        return count_partitions(n_max, ceiling,
                                [](const Partition& p) { return p.has_distinct_parts(); });
    case Sequence::mp: {
        const int k = id.k;
        return count_partitions(n_max, ceiling, [k](const Partition& p) { return in_mp_k(k, p); });
    }
    case Sequence::overline_p:
        return count_overpartitions(n_max, ceiling, [](const Overpartition&) { return true; });
    case Sequence::mbar: {
        const int k = id.k;
        return count_overpartitions(n_max, ceiling,
                                    [k](const Overpartition& p) { return in_mbar_k(k, p); });
    }
    case Sequence::xi:
    case Sequence::chi: {
        std::vector<BigInt> out(static_cast<std::size_t>(n_max + 1));
        for (long n = 0; n <= n_max; ++n)
            out[static_cast<std::size_t>(n)] = id.kind == Sequence::xi ? xi(n) : chi(n);
        return out;
    }
    }
    throw std::logic_error("unhandled sequence");
}

}  // namespace

PowerSeries generating_function(SequenceId id, std::size_t N)
{
    using namespace qseries;
    switch (id.kind) {
    case Sequence::p:
        return inverse(poch_inf(1, 1, N));
    case Sequence::pod:
        return pod_gf(N);
    case Sequence::b4:
        return b4_gf(N);
    case Sequence::pod_e:
    case Sequence::pod_o:
    case Sequence::b4_e:
    case Sequence::b4_o:
        return PowerSeries(gf_values(id, N));
    case Sequence::q0:
        return poch_inf_neg(1, 4, N) * poch_inf_neg(2, 4, N) * poch_inf_neg(3, 4, N);
    case Sequence::q2:
        return poch_inf_neg(1, 4, N) * poch_inf_neg(3, 4, N) * poch_inf_neg(4, 4, N);
    case Sequence::q0_alt:
        return q0_alt_gf(N);
    case Sequence::overline_p:
        return divide(poch_inf_neg(1, 1, N), poch_inf(1, 1, N));
    case Sequence::mp:
        require_k(id.k);
        return mp_gf(id.k, N);
    case Sequence::mbar:
        require_k(id.k);
        return mbar_gf(id.k, N);
    case Sequence::q_odd:
        return poch_inf_neg(1, 2, N);
    case Sequence::q_distinct:
        return poch_inf_neg(1, 1, N);
    case Sequence::xi:
        return theta_square(4, N);
    case Sequence::chi:
        return theta_triangular_scaled(N);
    }
    throw std::logic_error("unhandled sequence");
}

SequenceTable table(SequenceId id, long n_max, Route route, int ceiling)
{
    if (n_max < 0)
        throw std::invalid_argument("n_max must be nonnegative");
    if (id.takes_k())
        require_k(id.k);
    auto values = route == Route::enumeration
                      ? enumeration_values(id, n_max, ceiling)
                      : gf_values(id, static_cast<std::size_t>(n_max));
    return SequenceTable(id.name(), route, std::move(values));
}

namespace {

BigInt single(Sequence kind, long n, int k = 0)
{
    if (n < 0)
        return 0;
    return table(SequenceId{kind, k}, n).at(n);
}

}  // namespace

BigInt p(long n) { return single(Sequence::p, n); }
BigInt pod(long n) { return single(Sequence::pod, n); }

BigInt pod(long numerator, long denominator)
{
    if (denominator == 0)
        throw std::invalid_argument("zero denominator");
    if (numerator % denominator != 0)
        return 0;
    return pod(numerator / denominator);
}

std::pair<BigInt, BigInt> pod_split(long n)
{
    if (n < 0)
        return {0, 0};
    return {single(Sequence::pod_e, n), single(Sequence::pod_o, n)};
}

BigInt b4(long n) { return single(Sequence::b4, n); }

std::pair<BigInt, BigInt> b4_split(long n)
{
    if (n < 0)
        return {0, 0};
    return {single(Sequence::b4_e, n), single(Sequence::b4_o, n)};
}

BigInt q0(long n) { return single(Sequence::q0, n); }
BigInt q2(long n) { return single(Sequence::q2, n); }
BigInt q0_alt(long n) { return single(Sequence::q0_alt, n); }
BigInt overline_p(long n) { return single(Sequence::overline_p, n); }

BigInt overline_p(long numerator, long denominator)
{
    if (denominator == 0)
        throw std::invalid_argument("zero denominator");
    if (numerator % denominator != 0)
        return 0;
    return overline_p(numerator / denominator);
}

BigInt q_odd(long n) { return single(Sequence::q_odd, n); }
BigInt q_distinct(long n) { return single(Sequence::q_distinct, n); }

BigInt mp_k(int k, long n)
{
    require_k(k);
    return single(Sequence::mp, n, k);
}

BigInt mbar_k(int k, long n)
{
    require_k(k);
    return single(Sequence::mbar, n, k);
}

int xi(long n)
{
    if (n == 0)
        return 1;
    if (n < 0 || n % 4 != 0)
        return 0;
    const long m = isqrt(n / 4);
    if (m * m * 4 != n)
        return 0;
    return m % 2 == 0 ? 2 : -2;
}

int chi(long n)
{
    if (n < 0)
        return 0;
    const long m = isqrt(n);  // m(m+1) = n forces m = floor(sqrt n)
    if (m * (m + 1) != n)
        return 0;
    return (n / 2) % 2 == 0 ? 1 : -1;
}

}  // namespace podpart::counting
