#include "skind/report_json.hpp"

namespace skind {

namespace {

template <class T>
nlohmann::json opt(const std::optional<T>& v)
{
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

} // namespace

void to_json(nlohmann::json& j, const Spectrum& s)
{
    auto distinct = nlohmann::json::array();
    for (const auto& e : s.distinct())
        distinct.push_back({{"value", static_cast<double>(e.value)}, {"mult", e.mult}});
    j = {{"distinct", distinct}, {"exact", s.exact()}, {"n", s.n()}};
}

void to_json(nlohmann::json& j, const BoundReport& r)
{
    nlohmann::json poly = nullptr;
    if (r.poly)
        poly = {{"b", static_cast<double>(r.poly->b)}, {"c", static_cast<double>(r.poly->c)}};
    auto wit = [](const std::optional<long double>& v) {
        return v ? nlohmann::json(static_cast<double>(*v)) : nlohmann::json(nullptr);
    };
    std::vector<double> coeffs(r.coefficients.begin(), r.coefficients.end());
    j = {
        {"method", r.method_label()},
        {"value", static_cast<double>(r.value)},
        {"floor", r.floor_value},
        {"poly", poly},
        {"coefficients", coeffs},
        {"witnesses",
         {{"theta_s", wit(r.witnesses.theta_s)},
          {"theta_s1", wit(r.witnesses.theta_s1)},
          {"theta_d", wit(r.witnesses.theta_d)},
          {"tau", wit(r.witnesses.tau)},
          {"delta", opt(r.witnesses.delta)}}},
        {"exact", r.spectrum_exact},
        {"exact_value", r.exact ? nlohmann::json(to_string(*r.exact)) : nlohmann::json(nullptr)},
        {"degenerate", r.degenerate},
    };
    if (!r.label.empty())
        j["family"] = r.label;
}

void to_json(nlohmann::json& j, const QuotientMatrix& q)
{
    j = {{"b11", static_cast<double>(q.b11)},
         {"b12", static_cast<double>(q.b12)},
         {"b21", static_cast<double>(q.b21)},
         {"b22", static_cast<double>(q.b22)}};
    if (q.exact) {
        std::vector<std::string> ex;
        for (const auto& v : *q.exact)
            ex.push_back(to_string(v));
        j["exact"] = ex;
    }
}

void to_json(nlohmann::json& j, const ExactResult& r)
{
    j = {{"k", r.k},
         {"alpha_k", r.alpha_k},
         {"witness", r.witness},
         {"nodes_explored", r.nodes_explored},
         {"timed_out", r.timed_out}};
}

void to_json(nlohmann::json& j, const Equitability& e)
{
    j = {{"equitable", e.equitable},
         {"empirical_quotient", e.empirical},
         {"theorem_quotient", e.theorem},
         {"matches_theorem", e.matches_theorem},
         {"size_matches_bound", e.size_matches_bound}};
}

} // namespace skind
