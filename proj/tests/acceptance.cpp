// Acceptance run: one PASS/FAIL line per criterion, with wall time against budget.
// Exit status is the number of failed criteria.

#include "podpart/bijections.hpp"
#include "podpart/congruences.hpp"
#include "podpart/counting.hpp"
#include "podpart/identities.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace podpart;
using namespace podpart::bijections;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    void expect(bool cond, const std::string& what)
    {
        if (!cond) {
            if (ok)
                detail << what;
            else if (detail.str().size() < 2000)
                detail << "; " << what;
            ok = false;
        }
    }
};

long count(int n, const PartitionPredicate& pred)
{
    return n < 0 ? 0 : static_cast<long>(enumerate_partitions(n, pred).size());
}

std::set<Partition> all(int n, const PartitionPredicate& pred = {})
{
    const auto v = enumerate_partitions(n, pred);
    return {v.begin(), v.end()};
}

void expect_reports(Outcome& o, const std::vector<VerificationReport>& reports)
{
    for (const auto& r : reports) {
        std::string first = r.failures.empty() ? "" : " first failure n=" +
                                                          std::to_string(r.failures[0].n) +
                                                          " k=" + std::to_string(r.failures[0].k);
        o.expect(r.status() == Status::pass, r.statement_id + " " +
                                                 std::string(status_name(r.status())) + first);
    }
}

// 1. golden values, both routes where an enumeration exists
void golden(Outcome& o)
{
    using namespace counting;
    auto both = [&](const std::string& name, const BigInt& gf, long enumerated, long expected) {
        o.expect(gf == expected, name + " = " + to_decimal(gf) + ", expected " +
                                     std::to_string(expected));
        o.expect(enumerated == expected, name + " enumerates to " + std::to_string(enumerated));
    };
    const auto pod_parity = [](int parity) {
        return [parity](const Partition& p) { return no_part_2_mod_4(p) && p.length() % 2 == parity; };
    };
    const auto b4_parity = [](int parity) {
        return [parity](const Partition& p) { return is_4_regular(p) && p.length() % 2 == parity; };
    };
    const auto [pe, po] = pod_split(8);
    both("pod_e(8)", pe, count(8, pod_parity(0)), 7);
    both("pod_o(8)", po, count(8, pod_parity(1)), 3);
    const auto [be, bo] = b4_split(7);
    both("b4(7)", b4(7), count(7, is_4_regular), 12);
    both("b4_e(7)", be, count(7, b4_parity(0)), 5);
    both("b4_o(7)", bo, count(7, b4_parity(1)), 7);
    both("Q0(14)", q0(14), count(14, in_q0), 11);
    both("Q2(14)", q2(14), count(14, in_q2), 6);
    both("MP_2(19)", mp_k(2, 19), count(19, [](const Partition& p) { return in_mp_k(2, p); }), 10);
    long mbar = 0, pbar = 0;
    for_each_overpartition(12, [&](const Overpartition& x) { mbar += in_mbar_k(2, x) ? 1 : 0; });
    for_each_overpartition(3, [&](const Overpartition&) { ++pbar; });
    both("Mbar_2(12)", mbar_k(2, 12), mbar, 16);
    both("pbar(3)", overline_p(3), pbar, 8);
    for (auto [n, v] : {std::pair{8, 16L}, {18, 208L}, {23, 592L}, {38, 8528L}})
        both("b4(" + std::to_string(n) + ")", b4(n), count(n, is_4_regular), v);
}

// 6. bijections, exhaustive on small n
void bijection_suite(Outcome& o)
{
    for (int n = 0; n <= 30; ++n) {
        const std::string at = " at n=" + std::to_string(n);
        for (const auto& p : all(n, in_phi_domain)) {
            const auto q = phi(p);
            o.expect(phi(q) == p && q.size() == n, "phi not an involution" + at);
            o.expect(q.length() % 2 != p.length() % 2, "phi keeps length parity" + at);
        }
        for (const auto& p : all(n, in_epsilon_domain)) {
            const auto q = epsilon(p);
            o.expect(epsilon(q) == p && q.size() == n, "epsilon not an involution" + at);
            o.expect(std::abs(q.length() - p.length()) == 1, "epsilon length change" + at);
        }
        std::set<Partition> split_img, variant_img;
        for (const auto& p : all(n, counting::in_q0)) {
            const auto s = glaisher_split(p);
            o.expect(glaisher_merge(s) == p, "Glaisher roundtrip" + at);
            split_img.insert(s);
        }
        o.expect(split_img == all(n, in_q0_tilde), "Glaisher image" + at);
        for (const auto& p : all(n, counting::in_q2)) {
            const auto s = glaisher_variant(p);
            o.expect(glaisher_variant_inverse(s) == p, "Glaisher variant roundtrip" + at);
            variant_img.insert(s);
        }
        o.expect(variant_img == all(n, in_q2_tilde), "Glaisher variant image" + at);
    }

    const auto ex = zigzag_to_triple(Partition{14, 14, 12, 12, 8, 4}, 3);
    o.expect(ex.alpha == Partition{18, 16, 12, 10, 6, 4} && ex.beta == Partition{6, 4} &&
                 ex.odd_part.empty(),
             "zigzag worked example gives " + ex.to_string());
    for (int k = 0; k <= 2; ++k)
        for (int n = 0; n <= 24; ++n) {
            std::set<TripleA> img;
            long src = 0;
            if (n - k * (k + 1) >= 0)
                for (const auto& p : all(n - k * (k + 1), counting::has_distinct_odd_parts)) {
                    const auto t = zigzag_to_triple(p, k);
                    o.expect(triple_to_zigzag(t, k) == p, "zigzag roundtrip");
                    img.insert(t);
                    ++src;
                }
            const auto target = enumerate_a_k(n, k);
            o.expect(static_cast<long>(img.size()) == src &&
                         img == std::set<TripleA>(target.begin(), target.end()),
                     "zigzag image at n=" + std::to_string(n) + " k=" + std::to_string(k));
        }

    for (int n = 0; n <= 20; ++n)
        for (const auto& p : all(n)) {
            const auto d = two_core_quotient(p);
            o.expect(is_staircase(d.core), "2-core not a staircase for " + p.to_string());
            o.expect(p.size() == d.core.size() + 2 * d.alpha.size() + 2 * d.beta.size(),
                     "size law for " + p.to_string());
            o.expect(from_two_core_quotient(d) == p, "2-quotient roundtrip for " + p.to_string());
        }

    for (int n = 0; n <= 24; ++n) {
        std::set<std::pair<int, Partition>> psi_img;
        std::set<std::pair<int, std::string>> rho_img;
        long psi_src = 0, rho_src = 0, psi_target = 0, rho_target = 0;
        for (const auto& p : all(n)) {
            if (counting::in_q0(p)) {
                const auto y = psi(p);
                psi_img.insert({y.k, y.image});
                ++psi_src;
            }
            if (counting::in_q2(p)) {
                const auto z = rho(p);
                rho_img.insert({z.k, z.image.to_string()});
                ++rho_src;
            }
        }
        for (int k = 0; k * (k + 1) / 2 <= n; ++k) {
            const int rest = n - k * (k + 1) / 2;
            if (rest % 2 == 0)
                psi_target += count(rest / 2, counting::has_distinct_odd_parts);
            if (rest % 4 == 0)
                for_each_overpartition(rest / 4, [&](const Overpartition&) { ++rho_target; });
        }
        const std::string at = " at n=" + std::to_string(n);
        o.expect(static_cast<long>(psi_img.size()) == psi_src, "psi not injective" + at);
        o.expect(psi_src == psi_target, "psi image cardinality" + at);
        o.expect(static_cast<long>(rho_img.size()) == rho_src, "rho not injective" + at);
        o.expect(rho_src == rho_target, "rho image cardinality" + at);
    }

    for (int n = 0; n <= 20; ++n)
        o.expect(signed_triple_count(n) == count(n, counting::in_q2),
                 "signed triple count at n=" + std::to_string(n));
}

void conjectures(Outcome& o)
{
    for (const auto& r : identities::check_conjectures(500, 5)) {
        o.expect(r.status() != Status::pass, r.statement_id + " reported as pass");
        if (r.status() == Status::conjecture_consistent)
            continue;
        std::ostringstream w;
        w << r.statement_id << " " << status_name(r.status()) << " with " << r.failures.size()
          << " witnesses, first";
        auto show = [&](const Witness& f) {
            w << " (n=" << f.n << ", k=" << f.k << ", value=" << to_decimal(f.lhs) << ", "
              << f.note << ")";
        };
        show(r.failures.front());
        for (const auto& f : r.failures)
            if (f.lhs < 0) {
                w << ", first negative";
                show(f);
                break;
            }
        o.expect(false, w.str());
    }
}

struct Criterion {
    int number;
    std::string title;
    double budget_seconds;
    std::function<void(Outcome&)> check;
};

}  // namespace

int main()
{
    using identities::verify_t4;
    using identities::verify_t5;
    const std::vector<Criterion> criteria = {
        {1, "golden values", 1.0, golden},
        {2, "enumeration and generating-function routes agree, n <= 40", 60.0,
         [](Outcome& o) { expect_reports(o, identities::verify_route_agreement(40, 3)); }},
        {3, "theorem sweeps", 120.0,
         [](Outcome& o) {
             expect_reports(o, identities::verify_t1(500));
             expect_reports(o, identities::verify_t2(500));
             expect_reports(o, identities::verify_t3(500));
             expect_reports(o, {verify_t4(200, 3)[0], verify_t5(200, 3)[0]});
             expect_reports(o, identities::verify_watson(500));
         }},
        {4, "strictness thresholds, k <= 3, n <= 300", 120.0,
         [](Outcome& o) {
             for (const auto& r : {verify_t4(300, 3)[1], verify_t5(300, 3)[1]}) {
                 expect_reports(o, {r});
                 o.expect(r.thresholds.size() == 3, r.statement_id + " threshold count");
                 for (const auto& t : r.thresholds)
                     o.expect(t.observed && *t.observed == t.predicted,
                              r.statement_id + " flip point at k=" + std::to_string(t.k));
             }
         }},
        {5, "congruences", 120.0,
         [](Outcome& o) {
             const auto th1 = congruences::verify_th5_1(40);
             expect_reports(o, {th1, congruences::verify_th5_2(20)});
             expect_reports(o, congruences::verify_lemmas(30, 12));
             bool sharp = false;
             for (const auto& w : th1.sharpness)
                 sharp = sharp || (w.n == 0 && w.lhs == 16 && w.rhs == 32);
             o.expect(sharp, "no sharpness witness b4(8) = 16 against 32");
         }},
        {6, "bijection property suite", 120.0, bijection_suite},
        {7, "conjecture sweeps, 1 <= k <= 5, n <= 500", 120.0, conjectures},
        {8, "series identities to order 200", 60.0,
         [](Outcome& o) { expect_reports(o, identities::verify_series_identities(200)); }},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.check(o);
        } catch (const std::exception& e) {
            o.expect(false, std::string("exception: ") + e.what());
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.budget_seconds)
            o.expect(false, "took " + std::to_string(secs) + " s");
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.2f s of %.0f s", secs, c.budget_seconds);
        std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title
                  << " (" << timing << ")";
        if (!o.ok) {
            std::cout << ": " << o.detail.str();
            ++failed;
        }
        std::cout << '\n';
    }
    return failed;
}
