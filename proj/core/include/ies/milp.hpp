#pragma once

#include <limits>
#include <map>
#include <string>
#include <vector>

namespace ies {

constexpr double kInf = std::numeric_limits<double>::infinity();

enum class VarKind { Continuous, Binary };
enum class Relation { LessEqual, Equal, GreaterEqual };
enum class SolveStatus { Optimal, Infeasible, Unbounded, Limit };

std::string to_string(SolveStatus status);

/// Index of a variable inside a MilpProblem.
struct VarId {
    int index = -1;
    bool valid() const { return index >= 0; }
    bool operator==(const VarId&) const = default;
};

struct LinTerm {
    int var = -1;
    double coeff = 0.0;
};

/// Sparse linear expression with a constant offset. Builders use these for
/// derived signals (e.g. device outputs as fixed fractions of inputs).
class LinExpr {
  public:
    LinExpr() = default;
    LinExpr(double constant) : constant_(constant) {}  // NOLINT: implicit by design
    LinExpr(VarId v) { terms_.push_back({v.index, 1.0}); }

    static LinExpr term(VarId v, double coeff) {
        LinExpr e;
        e.terms_.push_back({v.index, coeff});
        return e;
    }

    LinExpr& operator+=(const LinExpr& other);
    LinExpr& operator-=(const LinExpr& other);
    LinExpr& operator*=(double scale);

    const std::vector<LinTerm>& terms() const { return terms_; }
    double constant() const { return constant_; }

    /// Collapses duplicate variables and drops zero coefficients; term order
    /// is ascending variable index.
    LinExpr normalized() const;

    double evaluate(const std::vector<double>& x) const;

  private:
    std::vector<LinTerm> terms_;
    double constant_ = 0.0;
};

LinExpr operator+(LinExpr a, const LinExpr& b);
LinExpr operator-(LinExpr a, const LinExpr& b);
LinExpr operator*(double scale, LinExpr e);
LinExpr operator*(LinExpr e, double scale);
LinExpr operator*(double scale, VarId v);

struct Variable {
    std::string name;
    double lower = 0.0;
    double upper = kInf;
    VarKind kind = VarKind::Continuous;
};

struct Constraint {
    std::string name;
    std::vector<LinTerm> terms;  // normalized: ascending var index, no duplicates
    Relation relation = Relation::LessEqual;
    double rhs = 0.0;
};

/// Solver-independent MILP: bounded variables (continuous or binary), sparse
/// linear rows, and a linear minimization objective.
class MilpProblem {
  public:
    VarId add_variable(const std::string& name, double lower, double upper,
                       VarKind kind = VarKind::Continuous);
    VarId add_binary(const std::string& name) { return add_variable(name, 0.0, 1.0, VarKind::Binary); }

    /// Adds `lhs relation rhs`; the expression's constant folds into the rhs.
    int add_constraint(const std::string& name, const LinExpr& lhs, Relation relation, double rhs);

    void add_objective(const LinExpr& expr);
    void set_objective_coeff(VarId v, double coeff);

    void set_bounds(VarId v, double lower, double upper);

    int num_variables() const { return static_cast<int>(vars_.size()); }
    int num_constraints() const { return static_cast<int>(rows_.size()); }
    int num_binaries() const;

    const Variable& variable(int index) const { return vars_.at(index); }
    const std::vector<Variable>& variables() const { return vars_; }
    const std::vector<Constraint>& constraints() const { return rows_; }
    const std::vector<double>& objective() const { return objective_; }
    double objective_constant() const { return objective_constant_; }

    VarId find_variable(const std::string& name) const;  // invalid VarId if absent

    double objective_value(const std::vector<double>& x) const;

    /// Internal consistency: unique names, sane bounds, term indices in range.
    std::vector<std::string> check() const;

  private:
    std::vector<Variable> vars_;
    std::vector<Constraint> rows_;
    std::vector<double> objective_;   // dense by variable index
    double objective_constant_ = 0.0;
    std::map<std::string, int> name_index_;
};

/// Largest constraint violation of x (bound violations included), for
/// solution replay checks.
double max_violation(const MilpProblem& problem, const std::vector<double>& x);

struct MilpOptions {
    double mip_gap = 1e-4;        // relative incumbent/bound gap
    long node_limit = 200000;
    double time_limit_s = 600.0;
    bool heuristic_binaries = false;  // root-LP rounding pre-fix pass, verified
    int max_lp_iterations = 2000000;
};

/// Outcome of a solve. `primal` is indexed by variable; `primal_by_name`
/// materializes the name -> value view.
struct SolveReport {
    SolveStatus status = SolveStatus::Limit;
    double objective = 0.0;
    double dual_objective = 0.0;  // weak-duality bound from the final LP basis
    std::vector<double> primal;
    double gap = 0.0;
    long nodes = 0;
    double wall_time_s = 0.0;
    long lp_iterations = 0;
    std::string message;
    std::vector<double> incumbent_history;  // objective of each accepted incumbent

    double value(VarId v) const { return primal.at(static_cast<std::size_t>(v.index)); }
    std::map<std::string, double> primal_by_name(const MilpProblem& problem) const;
};

}  // namespace ies
