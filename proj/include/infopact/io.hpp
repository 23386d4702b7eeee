#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "infopact/belief.hpp"
#include "infopact/contract.hpp"
#include "infopact/cost.hpp"
#include "infopact/solve.hpp"
#include "infopact/verify.hpp"

namespace infopact::io {

// On-disk problem description (version "1").
struct ProblemSpec {
    std::size_t states = 0;
    Belief prior;
    CostKind cost_kind = CostKind::entropy;
    double kappa = 1.0;
    UtilityKind utility_kind = UtilityKind::risk_neutral;
    double outside_option = 0.0;
    PosteriorDistribution distribution;
    bool limited_liability = false;

    CostModel cost_model() const;
    UtilityModel utility_model() const;
};

ProblemSpec parse_problem(const nlohmann::json& j);
ProblemSpec load_problem(const std::string& path);

// Round to 12 significant digits; applied to every serialized number so the
// emitted JSON re-parses and re-serializes byte-identically.
double round12(double v);

nlohmann::json contract_to_json(const Contract& contract,
                                const UtilityModel& utility);
Contract contract_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const ImplementationReport& report);
nlohmann::json tangency_to_json(const TangencySolution& solution,
                                const UtilityModel& utility);
nlohmann::json region_label_to_json(const RegionLabel& label,
                                    const UtilityModel& utility);

// CSV columns: x_L,x_H,label,gamma,beta,principal_cost,ic_margin.
void write_region_csv(const RegionGrid& grid, std::ostream& os);

nlohmann::json error_to_json(const std::string& code,
                             const std::string& message,
                             nlohmann::json data = nlohmann::json::object());

}  // namespace infopact::io
