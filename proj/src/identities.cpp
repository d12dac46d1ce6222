#include "podpart/identities.hpp"

#include "podpart/counting.hpp"
#include "podpart/qseries.hpp"

#include <functional>

namespace podpart::identities {

using counting::Route;
using counting::Sequence;
using counting::SequenceId;
using counting::SequenceTable;

namespace {

long triangular(long k) { return k * (k + 1) / 2; }

int sign_of_triangular(long j) { return triangular(j) % 2 == 0 ? 1 : -1; }

SequenceTable tab(Sequence s, long n_max, int k = 0)
{
    return counting::table(SequenceId{s, k}, std::max(n_max, 0L));
}

VerificationReport make_report(std::string id, long n_max, int k_max = 0)
{
    VerificationReport r;
    r.statement_id = std::move(id);
    r.n_max = n_max;
    r.k_max = k_max;
    return r;
}

void compare(VerificationReport& r, long n, int k, const BigInt& lhs, const BigInt& rhs)
{
    if (lhs != rhs)
        r.failures.push_back({n, k, lhs, rhs, ""});
}

// Records a value of an inequality family that must be >= 0, strict exactly
// from `threshold` on. Thresholds are finalized by close_thresholds().
struct InequalityAudit {
    VerificationReport& report;
    std::vector<std::pair<int, std::vector<bool>>> strict;  // per k, per n

    void record(long n, int k, long threshold, const BigInt& value)
    {
        if (strict.empty() || strict.back().first != k) {
            strict.push_back({k, {}});
            report.thresholds.push_back({k, threshold, std::nullopt});
        }
        strict.back().second.push_back(value > 0);
        if (value == 0)
            report.equality_set.push_back({n, k});
        if (value < 0)
            report.failures.push_back({n, k, value, 0, "negative"});
        else if ((value > 0) != (n >= threshold))
            report.failures.push_back(
                {n, k, value, 0,
                 value > 0 ? "strict below the threshold" : "equality at or above the threshold"});
    }

    void close()
    {
        for (std::size_t i = 0; i < strict.size(); ++i) {
            const auto& flags = strict[i].second;
            long first = static_cast<long>(flags.size());
            while (first > 0 && flags[static_cast<std::size_t>(first - 1)])
                --first;
            if (first < static_cast<long>(flags.size()))
                report.thresholds[i].observed = first;
        }
    }
};

BigInt t4_lhs_from(const SequenceTable& pod, const SequenceTable& q0, long n, int k)
{
    BigInt s = pod.at(n) - q0.at(n);
    for (long j = 1; j <= k; ++j)
        s += (j % 2 == 0 ? 2 : -2) * pod.at(n - 4 * j * j);
    return k % 2 == 0 ? s : BigInt(-s);
}

BigInt t5_lhs_from(const SequenceTable& pod, const SequenceTable& q2, long n, int k)
{
    BigInt s = q2.at(n);
    for (long j = 0; j <= 2L * k - 1; ++j)
        s -= sign_of_triangular(j) * pod.at(n - j * (j + 1));
    return k % 2 == 0 ? s : BigInt(-s);
}

BigInt conjecture_value_from(const SequenceTable& q, int (*theta)(long), long n, int k)
{
    BigInt s = -theta(n);
    for (long j = 0; j <= 2L * k - 1; ++j)
        s += sign_of_triangular(j) * q.at(n - triangular(j));
    return k % 2 == 1 ? s : BigInt(-s);
}

}  // namespace

std::vector<VerificationReport> verify_t1(long n_max)
{
    const auto q0 = tab(Sequence::q0, n_max), q2 = tab(Sequence::q2, n_max);
    const auto pe = tab(Sequence::pod_e, n_max), po = tab(Sequence::pod_o, n_max);
    const auto be = tab(Sequence::b4_e, n_max), bo = tab(Sequence::b4_o, n_max);
    auto r1 = make_report("T1.i", n_max), r2 = make_report("T1.ii", n_max);
    for (long n = 0; n <= n_max; ++n) {
        const int sign = n % 2 == 0 ? 1 : -1;
        compare(r1, n, 0, sign * q0.at(n), pe.at(n) - po.at(n));
        compare(r2, n, 0, sign * q2.at(n), be.at(n) - bo.at(n));
    }
    return {r1, r2};
}

std::vector<VerificationReport> verify_c1(long n_max)
{
    const auto q0 = tab(Sequence::q0, n_max), q2 = tab(Sequence::q2, n_max);
    const auto pod = tab(Sequence::pod, n_max), b4 = tab(Sequence::b4, n_max);
    auto r1 = make_report("C1.i", n_max), r2 = make_report("C1.ii", n_max);
    for (long n = 0; n <= n_max; ++n) {
        if (!divisible_by(q0.at(n) - pod.at(n), 2))
            r1.failures.push_back({n, 0, q0.at(n), pod.at(n), "parities differ"});
        if (!divisible_by(q2.at(n) - b4.at(n), 2))
            r2.failures.push_back({n, 0, q2.at(n), b4.at(n), "parities differ"});
    }
    return {r1, r2};
}

std::vector<VerificationReport> verify_t2(long n_max)
{
    const auto q0 = tab(Sequence::q0, n_max), q2 = tab(Sequence::q2, n_max);
    const auto pod = tab(Sequence::pod, n_max);
    auto r1 = make_report("T2.i", n_max), r2 = make_report("T2.ii", n_max);
    for (long n = 0; n <= n_max; ++n) {
        BigInt s1 = pod.at(n);
        for (long k = 1; 4 * k * k <= n; ++k)
            s1 += (k % 2 == 0 ? 2 : -2) * pod.at(n - 4 * k * k);
        compare(r1, n, 0, q0.at(n), s1);
        BigInt s2 = 0;
        for (long k = 0; k * (k + 1) <= n; ++k)
            s2 += sign_of_triangular(k) * pod.at(n - k * (k + 1));
        compare(r2, n, 0, q2.at(n), s2);
    }
    return {r1, r2};
}

std::vector<VerificationReport> verify_t3(long n_max)
{
    const auto q0 = tab(Sequence::q0, n_max), q2 = tab(Sequence::q2, n_max);
    auto r1 = make_report("T3.i", n_max), r2 = make_report("T3.ii", n_max);
    for (long n = 0; n <= n_max; ++n) {
        BigInt s1 = 0, s2 = 0;
        for (long k = 0; triangular(k) <= n; ++k) {
            s1 += sign_of_triangular(k) * q0.at(n - triangular(k));
            s2 += sign_of_triangular(k) * q2.at(n - triangular(k));
        }
        compare(r1, n, 0, s1, counting::xi(n));
        compare(r2, n, 0, s2, counting::chi(n));
    }
    return {r1, r2};
}

std::vector<VerificationReport> verify_t4(long n_max, int k_max)
{
    const auto pod = tab(Sequence::pod, n_max), q0 = tab(Sequence::q0, n_max);
    auto eq = make_report("T4", n_max, k_max), ineq = make_report("C4.2", n_max, k_max);
    ineq.inequality = true;
    InequalityAudit audit{ineq, {}};
    for (int k = 1; k <= k_max; ++k) {
        const auto mbar = tab(Sequence::mbar, n_max / 4, k);
        for (long n = 0; n <= n_max; ++n) {
            const BigInt lhs = t4_lhs_from(pod, q0, n, k);
            BigInt rhs = 0;
            for (long j = 0; 4 * j <= n; ++j)
                rhs += q0.at(n - 4 * j) * mbar.at(j);
            compare(eq, n, k, lhs, rhs);
            audit.record(n, k, 4L * (k + 1) * (k + 1), lhs);
        }
    }
    audit.close();
    return {eq, ineq};
}

std::vector<VerificationReport> verify_t5(long n_max, int k_max)
{
    const auto pod = tab(Sequence::pod, n_max), q2 = tab(Sequence::q2, n_max);
    auto eq = make_report("T5", n_max, k_max), ineq = make_report("C4.4", n_max, k_max);
    ineq.inequality = true;
    InequalityAudit audit{ineq, {}};
    for (int k = 1; k <= k_max; ++k) {
        const auto mp = tab(Sequence::mp, n_max / 2, k);
        for (long n = 0; n <= n_max; ++n) {
            const BigInt lhs = t5_lhs_from(pod, q2, n, k);
            BigInt rhs = 0;
            for (long j = 0; 2 * j <= n; ++j)
                rhs += q2.at(n - 2 * j) * mp.at(j);
            compare(eq, n, k, lhs, rhs);
            audit.record(n, k, 2L * k * (2 * k + 1), lhs);
        }
    }
    audit.close();
    return {eq, ineq};
}

std::vector<VerificationReport> verify_watson(long n_max)
{
    const auto q0 = tab(Sequence::q0, n_max), q2 = tab(Sequence::q2, n_max);
    const auto b4 = tab(Sequence::b4, n_max), q_odd = tab(Sequence::q_odd, n_max);
    const auto q = tab(Sequence::q_distinct, n_max);
    const auto pod = tab(Sequence::pod, n_max), pbar = tab(Sequence::overline_p, n_max);
    const auto p = tab(Sequence::p, n_max);

    struct Case {
        const char* id;
        const SequenceTable& lhs;
        const SequenceTable& term;
        long denominator;
    };
    const Case cases[] = {
        {"T6", q0, pod, 2},       {"T7.i", q2, pbar, 4}, {"T7.ii", b4, pbar, 2},
        {"W.Qodd", q_odd, p, 4},  {"W.Q", q, p, 2},
    };
    std::vector<VerificationReport> out;
    for (const auto& c : cases) {
        auto r = make_report(c.id, n_max);
        for (long n = 0; n <= n_max; ++n) {
            BigInt rhs = 0;
            for (long k = 0; triangular(k) <= n; ++k)
                rhs += c.term.at_ratio(n - triangular(k), c.denominator);
            compare(r, n, 0, c.lhs.at(n), rhs);
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<VerificationReport> check_conjectures(long n_max, int k_max)
{
    const auto q0 = tab(Sequence::q0, n_max), q2 = tab(Sequence::q2, n_max);
    auto c1 = make_report("Conj1", n_max, k_max), c2 = make_report("Conj2", n_max, k_max);
    for (auto* r : {&c1, &c2}) {
        r->conjecture = true;
        r->inequality = true;
    }
    InequalityAudit a1{c1, {}}, a2{c2, {}};
    for (int k = 1; k <= k_max; ++k)
        for (long n = 0; n <= n_max; ++n) {
            const long threshold = static_cast<long>(k) * (2 * k + 1);
            a1.record(n, k, threshold, conjecture_value_from(q0, counting::xi, n, k));
            a2.record(n, k, threshold, conjecture_value_from(q2, counting::chi, n, k));
        }
    a1.close();
    a2.close();
    return {c1, c2};
}

std::vector<VerificationReport> verify_series_identities(std::size_t N)
{
    using namespace qseries;
    const auto order = static_cast<long>(N);
    auto series_report = [&](const char* id, const PowerSeries& lhs, const PowerSeries& rhs) {
        auto r = make_report(id, order);
        for (std::size_t i = 0; i <= N; ++i)
            compare(r, static_cast<long>(i), 0, lhs[i], rhs[i]);
        return r;
    };
    const auto q0_product = poch_inf_neg(1, 4, N) * poch_inf_neg(2, 4, N) * poch_inf_neg(3, 4, N);
    const auto q2_product = poch_inf_neg(1, 4, N) * poch_inf_neg(3, 4, N) * poch_inf_neg(4, 4, N);
    const auto gauss21_product = divide(poch_inf(2, 2, N), poch_inf_neg(1, 2, N));

    std::vector<VerificationReport> out;
    out.push_back(series_report("S.Gauss22", theta_square(1, N),
                                divide(poch_inf(1, 1, N), poch_inf_neg(1, 1, N))));
    out.push_back(series_report("S.Gauss21", theta_triangular(N), gauss21_product));
    out.push_back(series_report("S.GFb", q0_product * gauss21_product, theta_square(4, N)));
    out.push_back(series_report("S.GFa", q2_product * gauss21_product, theta_triangular_scaled(N)));
    out.push_back(series_report("S.Euler", inverse(poch_inf(1, 2, N)), poch_inf_neg(1, 1, N)));
    out.push_back(series_report("S.JTP1", jtp_product_side({+1, 2}, 8, N),
                                jtp_sum_side({+1, 2}, 8, N)));
    out.push_back(series_report("S.JTP2", jtp_product_side({-1, 1}, 4, N),
                                jtp_sum_side({-1, 1}, 4, N)));
    return out;
}

std::vector<VerificationReport> verify_route_agreement(long n_max, int k_max)
{
    std::vector<SequenceId> ids = {
        {Sequence::p},      {Sequence::pod},  {Sequence::pod_e},  {Sequence::pod_o},
        {Sequence::b4},     {Sequence::b4_e}, {Sequence::b4_o},   {Sequence::q0},
        {Sequence::q2},     {Sequence::q0_alt}, {Sequence::overline_p},
        {Sequence::q_odd},  {Sequence::q_distinct}, {Sequence::xi}, {Sequence::chi}};
    for (int k = 1; k <= k_max; ++k) {
        ids.push_back({Sequence::mp, k});
        ids.push_back({Sequence::mbar, k});
    }
    auto r = make_report("ROUTES", n_max, k_max);
    for (const auto& id : ids) {
        const auto e = counting::table(id, n_max, Route::enumeration);
        const auto g = counting::table(id, n_max, Route::generating_function);
        for (long n = 0; n <= n_max; ++n)
            if (e.at(n) != g.at(n))
                r.failures.push_back({n, id.k, e.at(n), g.at(n), id.name()});
    }
    return {r};
}

BigInt t4_lhs(long n, int k)
{
    return t4_lhs_from(tab(Sequence::pod, n), tab(Sequence::q0, n), n, k);
}

BigInt t5_lhs(long n, int k)
{
    return t5_lhs_from(tab(Sequence::pod, n), tab(Sequence::q2, n), n, k);
}

BigInt conjecture1_value(long n, int k)
{
    return conjecture_value_from(tab(Sequence::q0, n), counting::xi, n, k);
}

BigInt conjecture2_value(long n, int k)
{
    return conjecture_value_from(tab(Sequence::q2, n), counting::chi, n, k);
}

}  // namespace podpart::identities
