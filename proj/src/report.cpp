#include "podpart/report.hpp"

#include <sstream>

namespace podpart {

std::string_view status_name(Status s)
{
    switch (s) {
    case Status::pass:
        return "pass";
    case Status::fail:
        return "fail";
    case Status::conjecture_consistent:
        return "conjecture-consistent";
    case Status::conjecture_refuted:
        return "conjecture-refuted";
    }
    return "fail";
}

nlohmann::json Witness::to_json() const
{
    nlohmann::json j = {{"n", n}, {"k", k}, {"lhs", to_decimal(lhs)}, {"rhs", to_decimal(rhs)}};
    if (!note.empty())
        j["note"] = note;
    return j;
}

nlohmann::json Threshold::to_json() const
{
    nlohmann::json j = {{"k", k}, {"predicted", predicted}};
    j["observed"] = observed ? nlohmann::json(*observed) : nlohmann::json(nullptr);
    return j;
}

Status VerificationReport::status() const
{
    if (conjecture)
        return failures.empty() ? Status::conjecture_consistent : Status::conjecture_refuted;
    return failures.empty() ? Status::pass : Status::fail;
}

nlohmann::json VerificationReport::to_json() const
{
    nlohmann::json j;
    j["statement_id"] = statement_id;
    j["range"] = {{"n_max", n_max}, {"k_max", k_max}};
    j["status"] = status_name(status());
    auto fails = nlohmann::json::array();
    for (const auto& w : failures)
        fails.push_back(w.to_json());
    j["failures"] = std::move(fails);
    if (inequality) {
        auto eq = nlohmann::json::array();
        for (const auto& p : equality_set)
            eq.push_back({{"n", p.n}, {"k", p.k}});
        j["equality_set"] = std::move(eq);
        auto th = nlohmann::json::array();
        for (const auto& t : thresholds)
            th.push_back(t.to_json());
        j["thresholds"] = std::move(th);
    }
    if (!sharpness.empty()) {
        auto sh = nlohmann::json::array();
        for (const auto& w : sharpness)
            sh.push_back(w.to_json());
        j["sharpness_witnesses"] = std::move(sh);
    }
    if (!parameters.empty())
        j["parameters"] = parameters;
    return j;
}

std::string summary_line(const VerificationReport& r)
{
    std::ostringstream os;
    os << r.statement_id << ' ' << status_name(r.status()) << " n_max=" << r.n_max;
    if (r.k_max > 0)
        os << " k_max=" << r.k_max;
    os << " failures=" << r.failures.size();
    return os.str();
}

std::string VerificationReport::to_plain() const
{
    std::ostringstream os;
    os << summary_line(*this) << '\n';
    for (const auto& w : failures) {
        os << "  failure n=" << w.n << " k=" << w.k << " lhs=" << to_decimal(w.lhs)
           << " rhs=" << to_decimal(w.rhs);
        if (!w.note.empty())
            os << " (" << w.note << ')';
        os << '\n';
    }
    for (const auto& t : thresholds) {
        os << "  k=" << t.k << " predicted strict from n=" << t.predicted << ", observed ";
        if (t.observed)
            os << "n=" << *t.observed;
        else
            os << "none";
        os << '\n';
    }
    for (const auto& w : sharpness)
        os << "  sharpness n=" << w.n << " value=" << to_decimal(w.lhs) << ' ' << w.note << '\n';
    return os.str();
}

}  // namespace podpart
