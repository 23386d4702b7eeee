#pragma once

#include <stdexcept>
#include <string>

namespace infopact {

// Error codes carried by every library exception. The CLI maps exception
// categories to exit codes (validation -> 2, infeasible -> 3, solver -> 4).
enum class Errc {
    non_finite,
    negative_entry,
    sum_not_one,
    too_few_states,
    not_bayes_plausible,
    support_too_large,
    weight_solve_singular,
    boundary_point,
    boundary_support,
    bad_message_index,
    incomplete_strategy,
    transfer_outside_utility_domain,
    unsupported_shape,
    domain_violation,
    invalid_model,
    io_error,
    infeasible,
    minimization_failure,
    root_find_failure,
    non_convergence,
    boundary_drift,
    resolution_too_coarse,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }
    const char* code_name() const { return errc_name(code_); }

private:
    Errc code_;
};

// Bad input or precondition violation.
class ValidationError : public Error {
public:
    using Error::Error;
};

// A well-posed request whose answer is "cannot be done" (e.g. limited
// liability cannot hold at the requested outside option).
class InfeasibleError : public Error {
public:
    using Error::Error;
};

// Numerical routine did not converge or lost its bracket.
class SolverError : public Error {
public:
    using Error::Error;
};

}  // namespace infopact
