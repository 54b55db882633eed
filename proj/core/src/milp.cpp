#include "ies/milp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ies {

std::string to_string(SolveStatus status) {
    switch (status) {
        case SolveStatus::Optimal: return "optimal";
        case SolveStatus::Infeasible: return "infeasible";
        case SolveStatus::Unbounded: return "unbounded";
        case SolveStatus::Limit: return "limit";
    }
    return "limit";
}

LinExpr& LinExpr::operator+=(const LinExpr& other) {
    terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
    constant_ += other.constant_;
    return *this;
}

LinExpr& LinExpr::operator-=(const LinExpr& other) {
    for (const auto& t : other.terms_) terms_.push_back({t.var, -t.coeff});
    constant_ -= other.constant_;
    return *this;
}

LinExpr& LinExpr::operator*=(double scale) {
    for (auto& t : terms_) t.coeff *= scale;
    constant_ *= scale;
    return *this;
}

LinExpr LinExpr::normalized() const {
    LinExpr out;
    out.constant_ = constant_;
    out.terms_ = terms_;
    std::sort(out.terms_.begin(), out.terms_.end(),
              [](const LinTerm& a, const LinTerm& b) { return a.var < b.var; });
    std::vector<LinTerm> merged;
    for (const auto& t : out.terms_) {
        if (!merged.empty() && merged.back().var == t.var)
            merged.back().coeff += t.coeff;
        else
            merged.push_back(t);
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const LinTerm& t) { return t.coeff == 0.0; }),
                 merged.end());
    out.terms_ = std::move(merged);
    return out;
}

double LinExpr::evaluate(const std::vector<double>& x) const {
    double v = constant_;
    for (const auto& t : terms_) v += t.coeff * x.at(static_cast<std::size_t>(t.var));
    return v;
}

LinExpr operator+(LinExpr a, const LinExpr& b) { a += b; return a; }
LinExpr operator-(LinExpr a, const LinExpr& b) { a -= b; return a; }
LinExpr operator*(double scale, LinExpr e) { e *= scale; return e; }
LinExpr operator*(LinExpr e, double scale) { e *= scale; return e; }
LinExpr operator*(double scale, VarId v) { return LinExpr::term(v, scale); }

VarId MilpProblem::add_variable(const std::string& name, double lower, double upper, VarKind kind) {
    if (name.empty()) throw std::invalid_argument("variable name must not be empty");
    if (name_index_.count(name)) throw std::invalid_argument("duplicate variable name: " + name);
    if (!(lower <= upper)) throw std::invalid_argument("variable " + name + ": lower > upper");
    if (kind == VarKind::Binary && (lower < 0.0 || upper > 1.0))
        throw std::invalid_argument("binary " + name + ": bounds outside [0,1]");
    const int index = static_cast<int>(vars_.size());
    vars_.push_back({name, lower, upper, kind});
    objective_.push_back(0.0);
    name_index_[name] = index;
    return VarId{index};
}

int MilpProblem::add_constraint(const std::string& name, const LinExpr& lhs, Relation relation,
                                double rhs) {
    LinExpr n = lhs.normalized();
    for (const auto& t : n.terms())
        if (t.var < 0 || t.var >= num_variables())
            throw std::invalid_argument("constraint " + name + ": unknown variable index");
    Constraint row;
    row.name = name;
    row.terms = n.terms();
    row.relation = relation;
    row.rhs = rhs - n.constant();
    rows_.push_back(std::move(row));
    return static_cast<int>(rows_.size()) - 1;
}

void MilpProblem::add_objective(const LinExpr& expr) {
    LinExpr n = expr.normalized();
    for (const auto& t : n.terms()) {
        if (t.var < 0 || t.var >= num_variables())
            throw std::invalid_argument("objective references unknown variable");
        objective_[static_cast<std::size_t>(t.var)] += t.coeff;
    }
    objective_constant_ += n.constant();
}

void MilpProblem::set_objective_coeff(VarId v, double coeff) {
    objective_.at(static_cast<std::size_t>(v.index)) = coeff;
}

void MilpProblem::set_bounds(VarId v, double lower, double upper) {
    if (!(lower <= upper)) throw std::invalid_argument("set_bounds: lower > upper");
    auto& var = vars_.at(static_cast<std::size_t>(v.index));
    var.lower = lower;
    var.upper = upper;
}

int MilpProblem::num_binaries() const {
    int n = 0;
    for (const auto& v : vars_)
        if (v.kind == VarKind::Binary) ++n;
    return n;
}

VarId MilpProblem::find_variable(const std::string& name) const {
    auto it = name_index_.find(name);
    return it == name_index_.end() ? VarId{} : VarId{it->second};
}

double MilpProblem::objective_value(const std::vector<double>& x) const {
    double v = objective_constant_;
    for (int j = 0; j < num_variables(); ++j) v += objective_[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)];
    return v;
}

std::vector<std::string> MilpProblem::check() const {
    std::vector<std::string> issues;
    for (const auto& v : vars_) {
        if (!(v.lower <= v.upper)) issues.push_back("variable " + v.name + ": lower > upper");
        if (std::isnan(v.lower) || std::isnan(v.upper))
            issues.push_back("variable " + v.name + ": NaN bound");
        if (v.kind == VarKind::Binary && (v.lower < 0.0 || v.upper > 1.0))
            issues.push_back("binary " + v.name + ": bounds outside [0,1]");
    }
    for (const auto& row : rows_) {
        for (const auto& t : row.terms) {
            if (t.var < 0 || t.var >= num_variables())
                issues.push_back("constraint " + row.name + ": bad variable index");
            if (!std::isfinite(t.coeff))
                issues.push_back("constraint " + row.name + ": non-finite coefficient");
        }
        if (!std::isfinite(row.rhs)) issues.push_back("constraint " + row.name + ": non-finite rhs");
    }
    return issues;
}

double max_violation(const MilpProblem& problem, const std::vector<double>& x) {
    double worst = 0.0;
    for (int j = 0; j < problem.num_variables(); ++j) {
        const auto& v = problem.variable(j);
        const double xj = x.at(static_cast<std::size_t>(j));
        worst = std::max(worst, v.lower - xj);
        worst = std::max(worst, xj - v.upper);
    }
    for (const auto& row : problem.constraints()) {
        double lhs = 0.0;
        for (const auto& t : row.terms) lhs += t.coeff * x[static_cast<std::size_t>(t.var)];
        switch (row.relation) {
            case Relation::LessEqual: worst = std::max(worst, lhs - row.rhs); break;
            case Relation::GreaterEqual: worst = std::max(worst, row.rhs - lhs); break;
            case Relation::Equal: worst = std::max(worst, std::abs(lhs - row.rhs)); break;
        }
    }
    return worst;
}

std::map<std::string, double> SolveReport::primal_by_name(const MilpProblem& problem) const {
    std::map<std::string, double> out;
    for (int j = 0; j < problem.num_variables(); ++j)
        out[problem.variable(j).name] = primal.at(static_cast<std::size_t>(j));
    return out;
}

}  // namespace ies
