#include "podpart/congruences.hpp"

#include "podpart/qseries.hpp"

#include <stdexcept>

namespace podpart::congruences {

using counting::Sequence;
using counting::SequenceId;

void ProgressionSpec::validate() const
{
    if (m < 1)
        throw std::invalid_argument("modulus m must be positive");
    if (t < 0 || t >= m)
        throw std::invalid_argument("residue t must satisfy 0 <= t < m");
    if (u < 1)
        throw std::invalid_argument("divisor u must be positive");
}

std::vector<BigInt> extract_progression(const counting::SequenceTable& seq, long m, long t)
{
    if (m < 1 || t < 0)
        throw std::invalid_argument("progression needs m >= 1 and t >= 0");
    std::vector<BigInt> out;
    for (long i = t; i <= seq.n_max(); i += m)
        out.push_back(seq.at(i));
    return out;
}

namespace {

std::string residue_note(long m, long t) { return std::to_string(m) + "n+" + std::to_string(t); }

void check_values(VerificationReport& r, const std::vector<BigInt>& values, long m, long t,
                  const BigInt& u)
{
    bool sharp_found = false;
    const BigInt twice = 2 * u;
    for (std::size_t n = 0; n < values.size(); ++n) {
        const auto& v = values[n];
        if (!divisible_by(v, u))
            r.failures.push_back({static_cast<long>(n), 0, v, u, "not divisible at " +
                                                                      residue_note(m, t)});
        else if (!sharp_found && !divisible_by(v, twice)) {
            r.sharpness.push_back({static_cast<long>(n), 0, v, twice,
                                   "not divisible by " + to_decimal(twice) + " at " +
                                       residue_note(m, t)});
            sharp_found = true;
        }
    }
}

}  // namespace

VerificationReport check_progression_congruence(const ProgressionSpec& spec, long n_max,
                                                const std::string& statement_id)
{
    spec.validate();
    if (n_max < 0)
        throw std::invalid_argument("n_max must be nonnegative");
    const auto table = counting::table(spec.sequence, spec.m * n_max + spec.t);
    VerificationReport r;
    r.statement_id = statement_id;
    r.n_max = n_max;
    r.parameters = {{"sequence", spec.sequence.name()},
                    {"m", spec.m},
                    {"t", spec.t},
                    {"u", to_decimal(spec.u)}};
    check_values(r, extract_progression(table, spec.m, spec.t), spec.m, spec.t, spec.u);
    return r;
}

VerificationReport check_progression_family(const std::string& statement_id, long m,
                                            const std::vector<long>& residues, const BigInt& u,
                                            long n_max)
{
    long top = 0;
    for (long t : residues) {
        ProgressionSpec{m, t, u}.validate();
        top = std::max(top, m * n_max + t);
    }
    const auto table = counting::table(SequenceId{Sequence::b4}, top);
    VerificationReport r;
    r.statement_id = statement_id;
    r.n_max = n_max;
    r.parameters = {{"sequence", "b4"}, {"m", m}, {"residues", residues}, {"u", to_decimal(u)}};
    for (long t : residues) {
        auto values = extract_progression(table, m, t);
        values.resize(static_cast<std::size_t>(n_max) + 1);
        check_values(r, values, m, t, u);
    }
    return r;
}

VerificationReport check_product_congruence(const std::vector<long>& residues, long m,
                                            const BigInt& u, long order,
                                            const std::string& statement_id)
{
    if (residues.empty())
        throw std::invalid_argument("at least one residue is needed");
    if (order < 0)
        throw std::invalid_argument("order must be nonnegative");
    long top = 0;
    for (long t : residues) {
        ProgressionSpec{m, t, u}.validate();
        top = std::max(top, m * order + t);
    }
    const auto table = counting::table(SequenceId{Sequence::b4}, top);
    const auto N = static_cast<std::size_t>(order);
    auto product = qseries::PowerSeries::one(N);
    for (long t : residues) {
        auto values = extract_progression(table, m, t);
        values.resize(N + 1);
        product = product * qseries::PowerSeries(std::move(values));
    }
    VerificationReport r;
    r.statement_id = statement_id;
    r.n_max = order;
    r.parameters = {{"sequence", "b4"}, {"m", m}, {"residues", residues}, {"u", to_decimal(u)}};
    for (std::size_t i = 0; i <= N; ++i)
        if (!divisible_by(product[i], u))
            r.failures.push_back({static_cast<long>(i), 0, product[i], u,
                                  "product coefficient not divisible"});
    return r;
}

VerificationReport verify_th5_1(long n_max)
{
    return check_progression_family("TH5.1", 25, {8, 13, 18, 23}, 16, n_max);
}

VerificationReport verify_th5_2(long n_max)
{
    return check_progression_family("TH5.2", 49, {13, 20, 27, 34, 41, 48}, 64, n_max);
}

std::vector<VerificationReport> verify_lemmas(long pair_order, long triple_order)
{
    const BigInt cube = 64 * 64 * 64;
    return {check_product_congruence({8, 23}, 25, 256, pair_order, "L1"),
            check_product_congruence({13, 18}, 25, 256, pair_order, "L2"),
            check_product_congruence({13, 20, 34}, 49, cube, triple_order, "L3.i"),
            check_product_congruence({27, 41, 48}, 49, cube, triple_order, "L3.ii")};
}

namespace {

long ipow(long b, int e)
{
    long r = 1;
    while (e-- > 0)
        r *= b;
    return r;
}

}  // namespace

std::vector<LiteraturePreset> literature_presets(int alpha_max)
{
    std::vector<LiteraturePreset> out;
    for (int a = 1; a <= alpha_max; ++a) {
        out.push_back({"mod2.a", a, 0, ipow(3, 2 * a + 1), (17 * ipow(3, 2 * a) - 1) / 8, 2});
        out.push_back({"mod2.b", a, 0, ipow(3, 2 * a + 2), (11 * ipow(3, 2 * a + 1) - 1) / 8, 2});
        out.push_back({"mod2.c", a, 0, ipow(3, 2 * a + 2), (19 * ipow(3, 2 * a + 1) - 1) / 8, 2});
    }
    for (int a = 0; a <= alpha_max; ++a)
        for (long r : {13, 21, 29, 37})
            out.push_back({"mod4", a, r, ipow(5, 2 * a + 2), (r * ipow(5, 2 * a + 1) - 1) / 8, 4});
    for (int a = 0; a <= alpha_max; ++a)
        for (long r : {11, 19})
            out.push_back({"mod8", a, r, ipow(3, 4 * a + 4), (r * ipow(3, 4 * a + 3) - 1) / 8, 8});
    return out;
}

VerificationReport preset_literature_congruences(long n_max, int alpha_max, long budget)
{
    const auto presets = literature_presets(alpha_max);
    const auto table = counting::table(SequenceId{Sequence::b4}, budget);
    VerificationReport r;
    r.statement_id = "LIT";
    r.n_max = n_max;
    auto instances = nlohmann::json::array();
    for (const auto& p : presets) {
        long top = n_max;
        if (p.t > budget)
            top = -1;
        else
            top = std::min(top, (budget - p.t) / p.m);
        instances.push_back({{"family", p.family},
                             {"alpha", p.alpha},
                             {"r", p.r},
                             {"m", p.m},
                             {"t", p.t},
                             {"u", p.u},
                             {"n_checked", top + 1}});
        for (long n = 0; n <= top; ++n) {
            const auto& v = table.at(p.m * n + p.t);
            if (!divisible_by(v, p.u))
                r.failures.push_back({n, p.alpha, v, p.u, p.family + " at " + residue_note(p.m, p.t)});
        }
    }
    r.parameters = {{"budget", budget}, {"alpha_max", alpha_max}, {"instances", instances}};
    return r;
}

std::vector<long> scan_residues(SequenceId sequence, long m, const BigInt& u, long n_max)
{
    if (m < 1 || n_max < 0 || u < 1)
        throw std::invalid_argument("scan needs m >= 1, n_max >= 0 and u >= 1");
    const auto table = counting::table(sequence, m * n_max + m - 1);
    std::vector<long> out;
    for (long t = 0; t < m; ++t) {
        bool all = true;
        for (long n = 0; n <= n_max && all; ++n)
            all = divisible_by(table.at(m * n + t), u);
        if (all)
            out.push_back(t);
    }
    return out;
}

}  // namespace podpart::congruences
