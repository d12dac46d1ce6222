#include "podpart/suite.hpp"

#include "podpart/congruences.hpp"
#include "podpart/identities.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace podpart::suite {

namespace {

struct Group {
    std::vector<std::string> ids;
    std::function<std::vector<VerificationReport>(const Bounds&)> run;
};

std::vector<VerificationReport> one(VerificationReport r) { return {std::move(r)}; }

const std::vector<Group>& groups()
{
    using namespace identities;
    namespace cg = congruences;
    static const std::vector<Group> g = {
        {{"T1.i", "T1.ii"}, [](const Bounds& b) { return verify_t1(b.n_max); }},
        {{"C1.i", "C1.ii"}, [](const Bounds& b) { return verify_c1(b.n_max); }},
        {{"T2.i", "T2.ii"}, [](const Bounds& b) { return verify_t2(b.n_max); }},
        {{"T3.i", "T3.ii"}, [](const Bounds& b) { return verify_t3(b.n_max); }},
        {{"T4", "C4.2"}, [](const Bounds& b) { return verify_t4(b.n_max, b.k_max); }},
        {{"T5", "C4.4"}, [](const Bounds& b) { return verify_t5(b.n_max, b.k_max); }},
        {{"T6", "T7.i", "T7.ii", "W.Qodd", "W.Q"},
         [](const Bounds& b) { return verify_watson(b.n_max); }},
        {{"S.Gauss22", "S.Gauss21", "S.GFb", "S.GFa", "S.Euler", "S.JTP1", "S.JTP2"},
         [](const Bounds& b) { return verify_series_identities(static_cast<std::size_t>(b.n_max)); }},
        {{"ROUTES"},
         [](const Bounds& b) {
             return verify_route_agreement(std::min(b.n_max, b.routes_n_max), b.k_max);
         }},
        {{"TH5.1"}, [](const Bounds&) { return one(cg::verify_th5_1()); }},
        {{"TH5.2"}, [](const Bounds&) { return one(cg::verify_th5_2()); }},
        {{"L1", "L2", "L3.i", "L3.ii"}, [](const Bounds&) { return cg::verify_lemmas(); }},
        {{"LIT"}, [](const Bounds&) { return one(cg::preset_literature_congruences(40)); }},
        {{"Conj1", "Conj2"}, [](const Bounds& b) { return check_conjectures(b.n_max, b.k_max); }},
    };
    return g;
}

}  // namespace

const std::vector<StatementInfo>& statements()
{
    static const std::vector<StatementInfo> s = {
        {"T1.i", "(-1)^n Q0(n) = pod_e(n) - pod_o(n)"},
        {"T1.ii", "(-1)^n Q2(n) = b4_e(n) - b4_o(n)"},
        {"C1.i", "Q0(n) = pod(n) (mod 2)"},
        {"C1.ii", "Q2(n) = b4(n) (mod 2)"},
        {"T2.i", "Q0(n) = pod(n) + 2 sum_{k>=1} (-1)^k pod(n-4k^2)"},
        {"T2.ii", "Q2(n) = sum_{k>=0} (-1)^{k(k+1)/2} pod(n-k(k+1))"},
        {"T3.i", "sum_k (-1)^{k(k+1)/2} Q0(n-k(k+1)/2) = xi_n"},
        {"T3.ii", "sum_k (-1)^{k(k+1)/2} Q2(n-k(k+1)/2) = chi_n"},
        {"T4", "(-1)^k (pod(n) + 2 sum_{j=1}^k (-1)^j pod(n-4j^2) - Q0(n)) = sum_j Q0(n-4j) Mbar_k(j)"},
        {"C4.2", "the T4 left side is >= 0, strict iff n >= 4(k+1)^2"},
        {"T5", "(-1)^k (Q2(n) - sum_{j=0}^{2k-1} (-1)^{j(j+1)/2} pod(n-j(j+1))) = sum_j Q2(n-2j) MP_k(j)"},
        {"C4.4", "the T5 left side is >= 0, strict iff n >= 2k(2k+1)"},
        {"T6", "Q0(n) = sum_k pod((n-k(k+1)/2)/2)"},
        {"T7.i", "Q2(n) = sum_k pbar((n-k(k+1)/2)/4)"},
        {"T7.ii", "b4(n) = sum_k pbar((n-k(k+1)/2)/2)"},
        {"W.Qodd", "Q_odd(n) = sum_k p((n-k(k+1)/2)/4)"},
        {"W.Q", "Q(n) = sum_k p((n-k(k+1)/2)/2)"},
        {"S.Gauss22", "1 + 2 sum_{n>=1} (-1)^n q^{n^2} = (q;q)/(-q;q)"},
        {"S.Gauss21", "sum_{n>=0} (-1)^{n(n+1)/2} q^{n(n+1)/2} = (q^2;q^2)/(-q;q^2)"},
        {"S.GFb", "(-q,-q^2,-q^3;q^4) (q^2;q^2)/(-q;q^2) = 1 + 2 sum_{n>=1} (-1)^n q^{4n^2}"},
        {"S.GFa", "(-q,-q^3,-q^4;q^4) (q^2;q^2)/(-q;q^2) = sum_{n>=0} (-1)^{n(n+1)/2} q^{n(n+1)}"},
        {"S.Euler", "1/(q;q^2) = (-q;q)"},
        {"S.JTP1", "(z;Q)(Q/z;Q)(Q;Q) = sum_n (-z)^n Q^{n(n-1)/2}, z = q^2, Q = q^8"},
        {"S.JTP2", "(z;Q)(Q/z;Q)(Q;Q) = sum_n (-z)^n Q^{n(n-1)/2}, z = -q, Q = q^4"},
        {"ROUTES", "enumeration = generating function for every counting function"},
        {"TH5.1", "b4(25n+t) = 0 (mod 16), t in {8,13,18,23}"},
        {"TH5.2", "b4(49n+t) = 0 (mod 64), t in {13,20,27,34,41,48}"},
        {"L1", "B(q; 25, 8) B(q; 25, 23) = 0 (mod 256)"},
        {"L2", "B(q; 25, 13) B(q; 25, 18) = 0 (mod 256)"},
        {"L3.i", "B(q; 49, 13) B(q; 49, 20) B(q; 49, 34) = 0 (mod 64^3)"},
        {"L3.ii", "B(q; 49, 27) B(q; 49, 41) B(q; 49, 48) = 0 (mod 64^3)"},
        {"LIT", "known b4 congruence families mod 2, 4 and 8"},
        {"Conj1", "(-1)^{k-1} (sum_{j=0}^{2k-1} (-1)^{j(j+1)/2} Q0(n-j(j+1)/2) - xi_n) >= 0, strict iff n >= k(2k+1)", true},
        {"Conj2", "(-1)^{k-1} (sum_{j=0}^{2k-1} (-1)^{j(j+1)/2} Q2(n-j(j+1)/2) - chi_n) >= 0, strict iff n >= k(2k+1)", true},
    };
    return s;
}

bool is_known(const std::string& id)
{
    const auto& s = statements();
    return std::any_of(s.begin(), s.end(), [&](const StatementInfo& i) { return i.id == id; });
}

std::vector<std::string> resolve(const std::string& spec)
{
    std::set<std::string> wanted;
    if (spec == "all") {
        for (const auto& i : statements())
            wanted.insert(i.id);
    } else {
        std::istringstream is(spec);
        std::string id;
        while (std::getline(is, id, ',')) {
            if (id.empty())
                continue;
            if (!is_known(id))
                throw std::invalid_argument("unknown statement id: " + id);
            wanted.insert(id);
        }
        if (wanted.empty())
            throw std::invalid_argument("no statement ids given");
    }
    std::vector<std::string> out;
    for (const auto& i : statements())
        if (wanted.count(i.id))
            out.push_back(i.id);
    return out;
}

std::vector<VerificationReport> run(const std::vector<std::string>& ids, const Bounds& bounds)
{
    for (const auto& id : ids)
        if (!is_known(id))
            throw std::invalid_argument("unknown statement id: " + id);
    if (bounds.n_max < 0 || bounds.k_max < 1)
        throw std::invalid_argument("bounds need n_max >= 0 and k_max >= 1");

    const std::set<std::string> wanted(ids.begin(), ids.end());
    std::map<std::string, VerificationReport> produced;
    for (const auto& g : groups()) {
        if (std::none_of(g.ids.begin(), g.ids.end(),
                         [&](const std::string& id) { return wanted.count(id) > 0; }))
            continue;
        for (auto& r : g.run(bounds))
            if (wanted.count(r.statement_id))
                produced.emplace(r.statement_id, std::move(r));
    }
    std::vector<VerificationReport> out;
    for (const auto& i : statements())
        if (auto it = produced.find(i.id); it != produced.end())
            out.push_back(std::move(it->second));
    return out;
}

std::string help_listing()
{
    std::ostringstream os;
    for (const auto& i : statements()) {
        os << "  " << i.id << std::string(i.id.size() < 11 ? 11 - i.id.size() : 1, ' ') << i.formula;
        if (i.conjecture)
            os << "  [conjecture]";
        os << '\n';
    }
    return os.str();
}

}  // namespace podpart::suite
