#include "locex/report.hpp"

#include <algorithm>
#include <cmath>

namespace locex {

std::string tool_version() { return "0.1.0"; }

Json to_json(const Graph& g) {
    return Json{{"nodes", g.node_count()},
                {"edges", g.edge_count()},
                {"total_weight", g.total_weight()},
                {"weighted", !g.unit_weights()}};
}

Json to_json(const ObjectiveSpec& spec) {
    Json j{{"kind", spec.name()}};
    if (spec.kind != ObjectiveKind::Q) j["rho"] = spec.effective_rho();
    return j;
}

Json to_json(const CommunityRecord& rec) {
    Json j;
    j["labels"] = rec.labels;
    j["size"] = rec.labels.size();
    j["objective"] = rec.objective;
    if (rec.lambda_star) j["lambda_star"] = *rec.lambda_star;
    j["count"] = rec.count;
    j["stable"] = rec.stable;
    j["rho_valid"] = rec.rho_valid;
    return j;
}

Json to_json(const ExtractionReport& rep) {
    Json comms = Json::array();
    for (const auto& rec : rep.communities) {
        Json j = to_json(rec);
        j["frequency"] =
            static_cast<double>(rec.count) / static_cast<double>(rep.trials);
        comms.push_back(std::move(j));
    }
    return Json{{"objective", to_json(rep.spec)},
                {"trials", rep.trials},
                {"failed_trials", rep.failed_trials},
                {"seed", rep.seed},
                {"communities", std::move(comms)}};
}

Json to_json(const SweepResult& sweep, const Graph& g) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < sweep.rho_grid.size(); ++r) {
        Json comms = Json::array();
        for (const auto& rep : sweep.reports[r])
            comms.push_back(to_json(rep.communities.front()));
        rows.push_back(Json{{"rho", sweep.rho_grid[r]},
                            {"membership", sweep.membership[r]},
                            {"communities", std::move(comms)}});
    }
    return Json{{"labels", g.labels()}, {"grid", std::move(rows)}};
}

Json to_json(const SignificanceResult& sig) {
    Json nulls = Json::array();
    for (double v : sig.null_objectives) {
        if (std::isfinite(v))
            nulls.push_back(v);
        else
            nulls.push_back(nullptr);  // failed replicate
    }
    return Json{{"observed", sig.observed},
                {"null_model", sig.model == NullModel::gnm ? "gnm" : "rewire"},
                {"null_objectives", std::move(nulls)},
                {"p_value", sig.p_value}};
}

Json to_json(const OracleResult& res, const Graph& g) {
    auto subset_labels = [&](const std::vector<int>& subset) {
        std::vector<std::string> labels;
        labels.reserve(subset.size());
        for (int v : subset) labels.push_back(g.label(v));
        std::sort(labels.begin(), labels.end());
        return labels;
    };
    Json ties = Json::array();
    for (const auto& s : res.ties) ties.push_back(subset_labels(s));
    return Json{{"best_labels", subset_labels(res.best_subset)},
                {"best_value", res.best_value},
                {"evaluated_count", res.evaluated_count},
                {"ties", std::move(ties)}};
}

Json make_document(const std::string& command, const Json& parameters,
                   const Graph& g, const Json& payload,
                   const std::vector<std::string>& warnings) {
    return Json{{"tool", "locex"},
                {"version", tool_version()},
                {"command", command},
                {"parameters", parameters},
                {"graph", to_json(g)},
                {"result", payload},
                {"warnings", warnings}};
}

}  // namespace locex
