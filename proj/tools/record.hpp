#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyquant/oracle.hpp"
#include "polyquant/solver_common.hpp"

namespace polyquant::cli {

/// One solved instance, ready for serialization.
struct ResultRecord {
    int k = 0;
    int n = 0;
    Constraint constraint = Constraint::Unconstrained;
    std::vector<Point> points;
    std::vector<bool> conditional_flags;
    double v_n = 0.0;
    double stationarity_residual = 0.0;
    double cross_check_delta = 0.0;
    std::optional<std::string> closed_form_expression;
    std::optional<OracleVerdict> verdict;
};

/// Dispatches to the regime solver. Throws std::invalid_argument for bad
/// flag combinations (diagonals require k = 6) and SolverFailure when a
/// numerical solve does not converge.
ResultRecord solve_record(int k, int n, Constraint c);

/// The value oracle verification compares against; equals v_n except for the
/// k = 3, n = 4 special case whose headline value uses the source's own
/// per-parameter weighting.
double comparable_value(const ResultRecord& record);

void attach_verdict(ResultRecord& record, const OracleConfig& config);

/// %.17g formatting, shared by every emitter so golden files reproduce.
std::string format_double(double v);

std::string to_json(const ResultRecord& record);
std::string to_csv(const ResultRecord& record);

/// Exact-value annotation when one is known for (k, n, constraint).
std::optional<std::string> closed_form_expression(int k, int n, Constraint c);

}  // namespace polyquant::cli
