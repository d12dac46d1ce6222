#include "podpart/bijections.hpp"

#include "podpart/counting.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace podpart::bijections {

namespace {

// part value -> multiplicity, largest value first
using Multiplicities = std::map<int, int, std::greater<>>;

Multiplicities multiplicities(const Partition& p)
{
    Multiplicities m;
    for (int v : p.parts())
        ++m[v];
    return m;
}

Partition from_multiplicities(const Multiplicities& m)
{
    std::vector<int> parts;
    for (auto [v, c] : m)
        parts.insert(parts.end(), static_cast<std::size_t>(c), v);
    return Partition(std::move(parts));
}

// v = 2^k c with c odd
std::pair<int, int> two_adic(int v)
{
    int k = 0;
    while (v % 2 == 0) {
        v /= 2;
        ++k;
    }
    return {k, v};
}

int floor_log2(int m)
{
    int s = 0;
    while ((2 << s) <= m)
        ++s;
    return s;
}

Partition halved(const Partition& p, int d)
{
    std::vector<int> v(p.parts());
    for (int& x : v) {
        if (x % d != 0)
            throw DomainError("part " + std::to_string(x) + " is not divisible by " +
                              std::to_string(d));
        x /= d;
    }
    return Partition(std::move(v));
}

bool distinct_odd(const Partition& p)
{
    return p.has_distinct_parts() &&
           std::ranges::all_of(p.parts(), [](int v) { return v % 2 != 0; });
}

bool distinct_even(const Partition& p)
{
    return p.has_distinct_parts() &&
           std::ranges::all_of(p.parts(), [](int v) { return v % 2 == 0; });
}

long triangular(long k) { return k * (k + 1) / 2; }

}  // namespace

Partition glaisher_split(const Partition& lambda)
{
    if (!lambda.has_distinct_parts())
        throw DomainError("glaisher_split needs distinct parts, got " + lambda.to_string());
    std::vector<int> out;
    for (int v : lambda.parts()) {
        auto [k, c] = two_adic(v);
        out.insert(out.end(), std::size_t{1} << k, c);
    }
    return Partition::from_multiset(std::move(out));
}

Partition glaisher_merge(const Partition& lambda)
{
    std::vector<int> out;
    for (auto [v, m] : multiplicities(lambda)) {
        if (v % 2 == 0)
            throw DomainError("glaisher_merge needs odd parts, got " + lambda.to_string());
        for (int bit = 0; (m >> bit) != 0; ++bit)
            if ((m >> bit) & 1)
                out.push_back(v << bit);
    }
    return Partition::from_multiset(std::move(out));
}

Partition glaisher_variant(const Partition& eta)
{
    if (!counting::in_q2(eta))
        throw DomainError("glaisher_variant needs distinct parts, none = 2 (mod 4), got " +
                          eta.to_string());
    std::vector<int> out;
    for (int v : eta.parts()) {
        auto [k, c] = two_adic(v);
        if (k == 0)
            out.push_back(v);
        else
            out.insert(out.end(), std::size_t{1} << (k - 1), 2 * c);
    }
    return Partition::from_multiset(std::move(out));
}

Partition glaisher_variant_inverse(const Partition& lambda)
{
    if (!in_q2_tilde(lambda))
        throw DomainError("glaisher_variant_inverse: " + lambda.to_string() +
                          " is outside the image set");
    std::vector<int> out;
    for (auto [v, m] : multiplicities(lambda)) {
        if (v % 2 != 0) {
            out.push_back(v);
            continue;
        }
        for (int bit = 1; (m >> bit) != 0; ++bit)
            if ((m >> bit) & 1)
                out.push_back(v << bit);
    }
    return Partition::from_multiset(std::move(out));
}

bool in_q0_tilde(const Partition& p) { return counting::in_q0_alt(p); }

bool in_q2_tilde(const Partition& p)
{
    for (auto [v, m] : multiplicities(p)) {
        if (v % 2 != 0 && m > 1)
            return false;
        if (v % 2 == 0 && (v % 4 != 2 || m % 2 != 0))
            return false;
    }
    return true;
}

bool in_phi_domain(const Partition& p) { return counting::no_part_2_mod_4(p) && !in_q0_tilde(p); }

bool in_epsilon_domain(const Partition& p) { return counting::is_4_regular(p) && !in_q2_tilde(p); }

namespace {

struct PhiData {
    long r = 0;
    int d = 0;
    int s = 0;
    int largest_even = 0;
};

PhiData phi_data(const Partition& lambda)
{
    if (!in_phi_domain(lambda))
        throw DomainError("phi: " + lambda.to_string() + " is outside its domain");
    PhiData data;
    for (auto [v, m] : multiplicities(lambda)) {
        if (v % 2 == 0) {
            data.largest_even = std::max(data.largest_even, v);
        } else if (m >= 4) {
            const int s = floor_log2(m);
            const long r = (1L << s) * v;
            if (r > data.r)
                data = {r, v, s, data.largest_even};
        }
    }
    return data;
}

}  // namespace

int phi_case(const Partition& lambda)
{
    const auto data = phi_data(lambda);
    return data.r >= data.largest_even ? 1 : 2;
}

Partition phi(const Partition& lambda)
{
    const auto data = phi_data(lambda);
    auto m = multiplicities(lambda);
    if (data.r >= data.largest_even) {
        if ((m[data.d] -= 1 << data.s) == 0)
            m.erase(data.d);
        ++m[static_cast<int>(data.r)];
    } else {
        auto [k, c] = two_adic(data.largest_even);
        if (--m[data.largest_even] == 0)
            m.erase(data.largest_even);
        m[c] += 1 << k;
    }
    return from_multiplicities(m);
}

namespace {

// The part 4a+2 selected by case (i), or 0 when case (ii) applies.
int epsilon_case_one_part(const Multiplicities& m)
{
    int smallest_repeated_odd = 0;  // 0: none
    for (auto it = m.rbegin(); it != m.rend(); ++it) {
        auto [v, c] = *it;
        if (v % 2 != 0) {
            if (c > 1 && smallest_repeated_odd == 0)
                smallest_repeated_odd = v;
            continue;
        }
        // parts of lambda^o below (v/2) are all seen already, ascending
        if (v % 4 == 2 && c % 2 == 1 &&
            (smallest_repeated_odd == 0 || smallest_repeated_odd >= v / 2))
            return v;
    }
    return 0;
}

}  // namespace

int epsilon_case(const Partition& lambda)
{
    if (!in_epsilon_domain(lambda))
        throw DomainError("epsilon: " + lambda.to_string() + " is outside its domain");
    return epsilon_case_one_part(multiplicities(lambda)) != 0 ? 1 : 2;
}

Partition epsilon(const Partition& lambda)
{
    if (!in_epsilon_domain(lambda))
        throw DomainError("epsilon: " + lambda.to_string() + " is outside its domain");
    auto m = multiplicities(lambda);
    if (const int part = epsilon_case_one_part(m); part != 0) {
        if (--m[part] == 0)
            m.erase(part);
        m[part / 2] += 2;
        return from_multiplicities(m);
    }
    for (auto it = m.rbegin(); it != m.rend(); ++it) {
        auto [v, c] = *it;
        if (v % 2 != 0 && c > 1) {
            if ((m[v] -= 2) == 0)
                m.erase(v);
            ++m[2 * v];
            return from_multiplicities(m);
        }
    }
    throw DomainError("epsilon: no rule applies to " + lambda.to_string());
}

bool TripleA::in_a_k(int k) const
{
    const int d = length_difference();
    return distinct_odd(odd_part) && distinct_even(alpha) && distinct_even(beta) && k >= 0 &&
           d >= k && d <= k + 1;
}

std::string TripleA::to_string() const
{
    return "(" + odd_part.to_string() + ", " + alpha.to_string() + ", " + beta.to_string() + ")";
}

nlohmann::json to_json(const TripleA& t)
{
    return {{"odd_part", to_json(t.odd_part)},
            {"alpha", to_json(t.alpha)},
            {"beta", to_json(t.beta)}};
}

TripleA zigzag_to_triple(const Partition& lambda, int k)
{
    if (k < 0)
        throw DomainError("k must be nonnegative");
    if (!counting::has_distinct_odd_parts(lambda))
        throw DomainError("zigzag_to_triple needs distinct odd parts, got " + lambda.to_string());
    // rows of the 2-modular diagram: staircase 1..k on top, then lambda^e / 2
    std::vector<int> len;
    for (int r = 1; r <= k; ++r)
        len.push_back(r);
    const auto even = lambda.even_parts();
    for (int v : even.parts())
        len.push_back(v / 2);

    std::vector<int> alpha;
    std::vector<int> beta;
    const int rows = static_cast<int>(len.size());
    for (int c = 1; c <= rows; ++c) {
        int below = 0;
        for (int r = c; r <= rows; ++r)
            if (len[static_cast<std::size_t>(r - 1)] >= c)
                ++below;
        if (below > 0)
            alpha.push_back(2 * below);
    }
    for (int r = 1; r <= rows; ++r) {
        const int right = len[static_cast<std::size_t>(r - 1)] - r;
        if (right > 0)
            beta.push_back(2 * right);
    }
    return {lambda.odd_parts(), Partition::from_multiset(std::move(alpha)),
            Partition::from_multiset(std::move(beta))};
}

Partition triple_to_zigzag(const TripleA& t, int k)
{
    if (!t.in_a_k(k))
        throw DomainError("triple " + t.to_string() + " is not in A_" + std::to_string(k));
    const auto a = halved(t.alpha, 2);
    const auto b = halved(t.beta, 2);
    int rows = k + b.length();
    for (int c = 1; c <= a.length(); ++c)
        rows = std::max(rows, c + a.part(c) - 1);

    std::vector<int> mu;
    for (int r = 1; r <= rows; ++r) {
        int len = 0;
        for (int c = 1; c <= std::min(r, a.length()); ++c)
            if (c + a.part(c) - 1 >= r)
                ++len;
        if (r > k)
            len += b.part(r - k);
        if (r <= k) {
            if (len != r)
                throw DomainError("triple " + t.to_string() + " does not contain the staircase");
        } else {
            if (len <= 0 || (!mu.empty() && len > mu.back()))
                throw DomainError("triple " + t.to_string() + " is not a zig-zag image");
            mu.push_back(len);
        }
    }
    auto lambda = t.odd_part.united(Partition(std::move(mu)).scaled(2));
    if (zigzag_to_triple(lambda, k) != t)
        throw DomainError("triple " + t.to_string() + " is not a zig-zag image");
    return lambda;
}

namespace {

void check_triple_ceiling(int n, int ceiling)
{
    if (n > ceiling)
        throw EnumerationCeilingExceeded("triples of size " + std::to_string(n) +
                                         " exceed the enumeration ceiling " +
                                         std::to_string(ceiling));
}

// distinct partitions of every size 0..n, scaled and shifted as requested
std::vector<std::vector<Partition>> distinct_by_size(int n, bool odd)
{
    std::vector<std::vector<Partition>> out(static_cast<std::size_t>(n) + 1);
    for (int s = 0; s <= n; ++s) {
        if (odd) {
            for_each_partition(s, [&](const Partition& p) {
                if (distinct_odd(p))
                    out[static_cast<std::size_t>(s)].push_back(p);
            }, n);
        } else if (s % 2 == 0) {
            for_each_partition(s / 2, [&](const Partition& p) {
                if (p.has_distinct_parts())
                    out[static_cast<std::size_t>(s)].push_back(p.empty() ? p : p.scaled(2));
            }, n);
        }
    }
    return out;
}

void for_each_triple(int n, int ceiling, const std::function<void(const TripleA&)>& visit)
{
    check_triple_ceiling(n, ceiling);
    if (n < 0)
        return;
    const auto odd = distinct_by_size(n, true);
    const auto even = distinct_by_size(n, false);
    for (int x = 0; x <= n; ++x)
        for (int y = 0; x + y <= n; ++y)
            for (const auto& o : odd[static_cast<std::size_t>(x)])
                for (const auto& a : even[static_cast<std::size_t>(y)])
                    for (const auto& b : even[static_cast<std::size_t>(n - x - y)])
                        visit({o, a, b});
}

}  // namespace

std::vector<TripleA> enumerate_a_k(int n, int k, int ceiling)
{
    std::vector<TripleA> out;
    for_each_triple(n, ceiling, [&](const TripleA& t) {
        if (t.in_a_k(k))
            out.push_back(t);
    });
    return out;
}

std::vector<TripleA> enumerate_a(int n, int ceiling)
{
    std::vector<TripleA> out;
    for_each_triple(n, ceiling, [&](const TripleA& t) {
        if (t.length_difference() >= 0)
            out.push_back(t);
    });
    return out;
}

BigInt signed_triple_count(int n, int ceiling)
{
    std::vector<long> sizes;  // |A_k(n)|
    for_each_triple(n, ceiling, [&](const TripleA& t) {
        const int d = t.length_difference();
        for (int k = std::max(0, d - 1); k <= d; ++k) {
            if (k >= static_cast<int>(sizes.size()))
                sizes.resize(static_cast<std::size_t>(k) + 1, 0);
            ++sizes[static_cast<std::size_t>(k)];
        }
    });
    BigInt total = 0;
    for (std::size_t k = 0; k < sizes.size(); ++k)
        total += (triangular(static_cast<long>(k)) % 2 == 0 ? 1 : -1) * sizes[k];
    return total;
}

Partition equal_triple_to_q2(const TripleA& t)
{
    if (t.alpha != t.beta || !distinct_odd(t.odd_part) || !distinct_even(t.alpha))
        throw DomainError("equal_triple_to_q2 needs a triple with alpha = beta");
    return t.alpha.empty() ? t.odd_part : t.odd_part.united(t.alpha.scaled(2));
}

TripleA move_first_difference(const TripleA& t)
{
    if (t.alpha == t.beta)
        throw DomainError("move_first_difference needs alpha != beta");
    int i = 1;
    while (t.alpha.part(i) == t.beta.part(i))
        ++i;
    const int ai = t.alpha.part(i);
    const int bi = t.beta.part(i);
    if (ai < bi)
        return {t.odd_part, t.alpha.united(Partition{bi}), t.beta.without(Partition{bi})};
    return {t.odd_part, t.alpha.without(Partition{ai}), t.beta.united(Partition{ai})};
}

namespace {

TripleA swapped(const TripleA& t) { return {t.odd_part, t.beta, t.alpha}; }

int residue4(int d) { return ((d % 4) + 4) % 4; }

void require_ma(const MultisetElement& e, int residue)
{
    const int d = e.triple.length_difference();
    const bool ok = d >= 0 && residue4(d) == residue && e.triple.alpha != e.triple.beta &&
                    e.triple.in_a_k(d) && e.copy >= 0 && e.copy < (d > 0 ? 2 : 1);
    if (!ok)
        throw DomainError("element " + e.triple.to_string() + " copy " + std::to_string(e.copy) +
                          " is not in MA_" + std::to_string(residue));
}

std::vector<MultisetElement> multiset(int n, int residue, int ceiling)
{
    std::vector<MultisetElement> out;
    for_each_triple(n, ceiling, [&](const TripleA& t) {
        const int d = t.length_difference();
        if (d < 0 || residue4(d) != residue || t.alpha == t.beta)
            return;
        for (int c = 0; c < (d > 0 ? 2 : 1); ++c)
            out.push_back({t, c});
    });
    return out;
}

}  // namespace

std::vector<MultisetElement> multiset_ma0(int n, int ceiling) { return multiset(n, 0, ceiling); }

std::vector<MultisetElement> multiset_ma2(int n, int ceiling) { return multiset(n, 2, ceiling); }

MultisetElement multiset_involution(const MultisetElement& e)
{
    require_ma(e, 0);
    auto moved = move_first_difference(e.triple);
    if (e.triple.length_difference() > 0)
        return {moved, e.copy};
    if (moved.length_difference() > 0)
        return {moved, 0};
    return {swapped(moved), 1};
}

MultisetElement multiset_involution_inverse(const MultisetElement& e)
{
    require_ma(e, 2);
    auto moved = move_first_difference(e.triple);
    if (moved.length_difference() > 0)
        return {moved, e.copy};
    return {e.copy == 0 ? moved : swapped(moved), 0};
}

int triple_contribution(const TripleA& t)
{
    const int d = t.length_difference();
    if (d == 0)
        return 1;
    if (d % 2 != 0)
        return 0;
    return residue4(d) == 0 ? 2 : -2;
}

nlohmann::json to_json(const TwoQuotientDecomposition& d)
{
    return {{"core", to_json(d.core)}, {"alpha", to_json(d.alpha)}, {"beta", to_json(d.beta)}};
}

namespace {

// A beta-set with an even number of beads, split over the two runners of an abacus.
struct Abacus {
    std::vector<int> runner[2];  // bead positions, descending
};

Abacus abacus_of(const Partition& lambda, int beads)
{
    Abacus a;
    for (int i = 1; i <= beads; ++i) {
        const int b = lambda.part(i) + beads - i;
        a.runner[b % 2].push_back(b / 2);
    }
    return a;
}

Partition runner_partition(const std::vector<int>& positions)
{
    std::vector<int> parts;
    const int m = static_cast<int>(positions.size());
    for (int i = 0; i < m; ++i)
        if (const int v = positions[static_cast<std::size_t>(i)] - (m - 1 - i); v > 0)
            parts.push_back(v);
    return Partition(std::move(parts));
}

Partition from_beads(std::vector<int> beads)
{
    std::ranges::sort(beads, std::greater<>());
    const int n = static_cast<int>(beads.size());
    std::vector<int> parts;
    for (int i = 1; i <= n; ++i)
        if (const int v = beads[static_cast<std::size_t>(i - 1)] - (n - i); v > 0)
            parts.push_back(v);
    return Partition(std::move(parts));
}

std::vector<int> runner_positions(const Partition& q, int count)
{
    std::vector<int> pos;
    for (int i = 1; i <= count; ++i)
        pos.push_back(q.part(i) + count - i);
    return pos;
}

}  // namespace

bool is_staircase(const Partition& p) { return staircase_index(p) >= 0; }

int staircase_index(const Partition& p)
{
    const int k = p.length();
    for (int i = 1; i <= k; ++i)
        if (p.part(i) != k + 1 - i)
            return -1;
    return k;
}

TwoQuotientDecomposition two_core_quotient(const Partition& lambda)
{
    const int beads = lambda.length() + lambda.length() % 2;
    const auto a = abacus_of(lambda, beads);
    std::vector<int> core_beads;
    for (int r = 0; r < 2; ++r)
        for (int j = 0; j < static_cast<int>(a.runner[r].size()); ++j)
            core_beads.push_back(2 * j + r);
    // the second runner is read transposed so that self-conjugate input gives alpha == beta
    return {from_beads(std::move(core_beads)), runner_partition(a.runner[0]),
            runner_partition(a.runner[1]).conjugate()};
}

Partition from_two_core_quotient(const TwoQuotientDecomposition& d)
{
    const int k = staircase_index(d.core);
    if (k < 0)
        throw DomainError("2-core must be a staircase, got " + d.core.to_string());
    const auto second = d.beta.conjugate();
    const int half = k + d.alpha.length() + second.length() + 2;
    const auto core = abacus_of(d.core, 2 * half);
    const int c0 = static_cast<int>(core.runner[0].size());
    const int c1 = static_cast<int>(core.runner[1].size());
    std::vector<int> beads;
    for (int p : runner_positions(d.alpha, c0))
        beads.push_back(2 * p);
    for (int p : runner_positions(second, c1))
        beads.push_back(2 * p + 1);
    return from_beads(std::move(beads));
}

Partition self_conjugate_from_hooks(const Partition& mu)
{
    if (!distinct_odd(mu))
        throw DomainError("diagonal hooks must be distinct odd parts, got " + mu.to_string());
    const int d = mu.length();
    std::vector<int> arm;  // arm = leg = (hook - 1) / 2, strictly decreasing
    for (int v : mu.parts())
        arm.push_back((v - 1) / 2);
    std::vector<int> rows;
    for (int i = 1; i <= d; ++i)
        rows.push_back(arm[static_cast<std::size_t>(i - 1)] + i);
    const int depth = d == 0 ? 0 : arm[0] + 1;
    for (int i = d + 1; i <= depth; ++i) {
        int len = 0;
        for (int j = 1; j <= d; ++j)
            if (arm[static_cast<std::size_t>(j - 1)] + j >= i)
                ++len;
        rows.push_back(len);
    }
    return Partition(std::move(rows));
}

XiImage xi_map(const Partition& mu)
{
    if (!distinct_odd(mu))
        throw DomainError("xi needs distinct odd parts, got " + mu.to_string());
    const auto dec = two_core_quotient(self_conjugate_from_hooks(mu));
    if (dec.alpha != dec.beta)
        throw std::logic_error("self-conjugate partition with unequal 2-quotient");
    return {dec.alpha, staircase_index(dec.core)};
}

PsiImage psi(const Partition& lambda)
{
    if (!counting::in_q0(lambda))
        throw DomainError("psi needs distinct parts, none = 0 (mod 4), got " + lambda.to_string());
    const auto xi = xi_map(lambda.odd_parts());
    auto image = halved(lambda.even_parts(), 2);
    if (!xi.image.empty())
        image = image.united(xi.image.scaled(2));
    return {image, xi.k};
}

RhoImage rho(const Partition& lambda)
{
    if (!counting::in_q2(lambda))
        throw DomainError("rho needs distinct parts, none = 2 (mod 4), got " + lambda.to_string());
    const auto xi = xi_map(lambda.odd_parts());
    const auto quarters = halved(lambda.even_parts(), 4);
    return {Overpartition(xi.image.united(quarters), quarters.parts()), xi.k};
}

CardinalityCheck chi_cardinality(long n)
{
    CardinalityCheck c{counting::b4(n), 0};
    for (long k = 0; triangular(k) <= n; ++k)
        c.rhs += counting::overline_p(n - triangular(k), 2);
    return c;
}

}  // namespace podpart::bijections
