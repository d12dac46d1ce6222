#include "podpart/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace podpart {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be nonincreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0L);
}

Partition Partition::from_multiset(std::vector<int> parts)
{
    std::ranges::sort(parts, std::greater<>());
    return Partition(std::move(parts));
}

int Partition::part(int i) const noexcept
{
    return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
}

int Partition::multiplicity(int value) const noexcept
{
    return static_cast<int>(std::ranges::count(parts_, value));
}

bool Partition::has_distinct_parts() const noexcept
{
    return std::ranges::adjacent_find(parts_) == parts_.end();
}

Partition Partition::even_parts() const
{
    std::vector<int> e;
    std::ranges::copy_if(parts_, std::back_inserter(e), [](int v) { return v % 2 == 0; });
    return Partition(std::move(e));
}

Partition Partition::odd_parts() const
{
    std::vector<int> o;
    std::ranges::copy_if(parts_, std::back_inserter(o), [](int v) { return v % 2 != 0; });
    return Partition(std::move(o));
}

Partition Partition::conjugate() const
{
    std::vector<int> c(static_cast<std::size_t>(largest()), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j)
            ++c[static_cast<std::size_t>(j)];
    return Partition(std::move(c));
}

Partition Partition::united(const Partition& other) const
{
    std::vector<int> u;
    u.reserve(parts_.size() + other.parts_.size());
    std::ranges::merge(parts_, other.parts_, std::back_inserter(u), std::greater<>());
    return Partition(std::move(u));
}

Partition Partition::without(const Partition& other) const
{
    std::vector<int> d;
    std::ranges::set_difference(parts_, other.parts_, std::back_inserter(d), std::greater<>());
    if (d.size() + other.parts_.size() != parts_.size())
        throw std::invalid_argument("cannot remove " + other.to_string() + " from " + to_string());
    return Partition(std::move(d));
}

Partition Partition::scaled(int factor) const
{
    if (factor <= 0)
        throw std::invalid_argument("scale factor must be positive");
    std::vector<int> s(parts_);
    for (int& v : s)
        v *= factor;
    return Partition(std::move(s));
}

std::string Partition::to_string() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i)
        os << (i ? "," : "") << parts_[i];
    os << ')';
    return os.str();
}

Overpartition::Overpartition(Partition parts, std::vector<int> overlined_values)
    : parts_(std::move(parts)), overlined_(std::move(overlined_values))
{
    std::ranges::sort(overlined_, std::greater<>());
    if (std::ranges::adjacent_find(overlined_) != overlined_.end())
        throw std::invalid_argument("a part value can be overlined at most once");
    for (int v : overlined_)
        if (parts_.multiplicity(v) == 0)
            throw std::invalid_argument("overlined value " + std::to_string(v) + " is not a part");
}

bool Overpartition::is_overlined(int value) const noexcept
{
    return std::ranges::find(overlined_, value) != overlined_.end();
}

std::vector<OverpartitionPart> Overpartition::listing() const
{
    std::vector<OverpartitionPart> out;
    out.reserve(parts_.parts().size());
    const auto& p = parts_.parts();
    for (std::size_t i = 0; i < p.size(); ++i) {
        const bool first = (i == 0 || p[i - 1] != p[i]);
        out.push_back({p[i], first && is_overlined(p[i])});
    }
    return out;
}

std::string Overpartition::to_string() const
{
    std::ostringstream os;
    os << '(';
    bool sep = false;
    for (const auto& part : listing()) {
        os << (sep ? "," : "") << part.value << (part.overlined ? "'" : "");
        sep = true;
    }
    os << ')';
    return os.str();
}

namespace {

void check_ceiling(int n, int ceiling)
{
    if (n > ceiling)
        throw EnumerationCeilingExceeded(
            "enumeration of partitions of " + std::to_string(n) + " exceeds the ceiling " +
            std::to_string(ceiling) + "; use the generating-function route instead");
}

void generate(int remaining, int max_part, std::vector<int>& buf,
              const std::function<void(const Partition&)>& visit)
{
    if (remaining == 0) {
        visit(Partition(buf));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        buf.push_back(p);
        generate(remaining - p, p, buf, visit);
        buf.pop_back();
    }
}

}  // namespace

void for_each_partition(int n, const std::function<void(const Partition&)>& visit, int ceiling)
{
    if (n < 0)
        return;
    check_ceiling(n, ceiling);
    std::vector<int> buf;
    buf.reserve(static_cast<std::size_t>(n));
    generate(n, n, buf, visit);
}

std::vector<Partition> enumerate_partitions(int n, const PartitionPredicate& predicate, int ceiling)
{
    std::vector<Partition> out;
    for_each_partition(
        n,
        [&](const Partition& p) {
            if (!predicate || predicate(p))
                out.push_back(p);
        },
        ceiling);
    return out;
}

void for_each_overpartition(int n, const std::function<void(const Overpartition&)>& visit,
                            int ceiling)
{
    for_each_partition(
        n,
        [&](const Partition& p) {
            std::vector<int> values;
            std::ranges::unique_copy(p.parts(), std::back_inserter(values));
            const std::size_t d = values.size();
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
                std::vector<int> over;
                for (std::size_t i = 0; i < d; ++i)
                    if (mask & (std::uint64_t{1} << i))
                        over.push_back(values[i]);
                visit(Overpartition(p, std::move(over)));
            }
        },
        ceiling);
}

Partition parse_partition(const std::string& text)
{
    std::string t = text;
    std::erase_if(t, [](unsigned char c) { return std::isspace(c) != 0; });
    std::vector<int> parts;
    if (!t.empty() && t.front() == '[') {
        auto j = nlohmann::json::parse(t);
        if (!j.is_array())
            throw std::invalid_argument("partition JSON must be an array of integers");
        for (const auto& v : j) {
            if (!v.is_number_integer())
                throw std::invalid_argument("partition JSON must be an array of integers");
            parts.push_back(v.get<int>());
        }
    } else if (!t.empty()) {
        std::istringstream is(t);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(tok, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (tok.empty() || used != tok.size())
                throw std::invalid_argument("cannot parse part '" + tok + "'");
            parts.push_back(v);
        }
    }
    return Partition::from_multiset(std::move(parts));
}

nlohmann::json to_json(const Partition& p) { return nlohmann::json(p.parts()); }

nlohmann::json to_json(const Overpartition& p)
{
    auto arr = nlohmann::json::array();
    for (const auto& part : p.listing())
        arr.push_back({{"value", part.value}, {"overlined", part.overlined}});
    return arr;
}

Overpartition overpartition_from_json(const nlohmann::json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("overpartition JSON must be an array of {value, overlined}");
    std::vector<int> parts;
    std::vector<int> over;
    for (const auto& e : j) {
        const int v = e.at("value").get<int>();
        parts.push_back(v);
        if (e.value("overlined", false))
            over.push_back(v);
    }
    return Overpartition(Partition::from_multiset(std::move(parts)), std::move(over));
}

}  // namespace podpart
