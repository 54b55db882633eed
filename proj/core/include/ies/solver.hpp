#pragma once

#include <memory>
#include <string>

#include "ies/milp.hpp"
#include "ies/simplex.hpp"

namespace ies {

/// Solves the continuous relaxation (binaries relaxed to [0,1]).
SolveReport solve_lp(const MilpProblem& problem, const LpOptions& options = LpOptions{});

/// Best-first branch-and-bound on the binary variables over the bundled
/// simplex. Deterministic: most-fractional branching with ties broken by
/// variable index, node ties by insertion order.
SolveReport solve_milp(const MilpProblem& problem, const MilpOptions& options = MilpOptions{});

/// A solve engine behind the common report interface. The bundled backend
/// wraps solve_milp; the command backend shells out to an external solver
/// via LP-format text.
class SolverBackend {
  public:
    virtual ~SolverBackend() = default;
    virtual std::string name() const = 0;
    virtual SolveReport solve(const MilpProblem& problem, const MilpOptions& options) = 0;
};

std::unique_ptr<SolverBackend> make_bundled_backend();

/// `command` is invoked as: command <problem.lp> <solution.txt>. The solution
/// file format is: line 1 "status <optimal|infeasible|unbounded|limit>",
/// line 2 "objective <value>", then "<variable> <value>" lines. Reported
/// solutions are replayed against the problem before being accepted.
std::unique_ptr<SolverBackend> make_command_backend(std::string command);

/// Selects a backend from the IES_SOLVER environment variable: unset or
/// "bundled" picks the built-in solver, "cmd:<command>" the command adapter.
std::unique_ptr<SolverBackend> backend_from_env();

}  // namespace ies
