#include "infopact/errors.hpp"

namespace infopact {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::non_finite: return "NonFinite";
        case Errc::negative_entry: return "NegativeEntry";
        case Errc::sum_not_one: return "SumNotOne";
        case Errc::too_few_states: return "TooFewStates";
        case Errc::not_bayes_plausible: return "NotBayesPlausible";
        case Errc::support_too_large: return "SupportTooLarge";
        case Errc::weight_solve_singular: return "WeightSolveSingular";
        case Errc::boundary_point: return "BoundaryPoint";
        case Errc::boundary_support: return "BoundarySupport";
        case Errc::bad_message_index: return "BadMessageIndex";
        case Errc::incomplete_strategy: return "IncompleteStrategy";
        case Errc::transfer_outside_utility_domain:
            return "TransferOutsideUtilityDomain";
        case Errc::unsupported_shape: return "UnsupportedShape";
        case Errc::domain_violation: return "DomainViolation";
        case Errc::invalid_model: return "InvalidModel";
        case Errc::io_error: return "IoError";
        case Errc::infeasible: return "Infeasible";
        case Errc::minimization_failure: return "MinimizationFailure";
        case Errc::root_find_failure: return "RootFindFailure";
        case Errc::non_convergence: return "NonConvergence";
        case Errc::boundary_drift: return "BoundaryDrift";
        case Errc::resolution_too_coarse: return "ResolutionTooCoarse";
    }
    return "Unknown";
}

}  // namespace infopact
