#pragma once

#include <utility>
#include <vector>

#include "tempoflow/rational.hpp"

namespace tempoflow {

// maximize c^T x  s.t. each row (sense) rhs, x >= 0. Exact rational
// two-phase simplex with Bland's rule.
class LinearProgram {
 public:
  enum class Sense { le, eq, ge };
  struct Row {
    std::vector<std::pair<int, Rational>> coeffs;
    Sense sense = Sense::le;
    Rational rhs;
  };

  int add_variable(const Rational& objective = 0);
  void add_row(std::vector<std::pair<int, Rational>> coeffs, Sense sense, const Rational& rhs);

  int variable_count() const { return static_cast<int>(objective_.size()); }
  const std::vector<Rational>& objective() const { return objective_; }
  const std::vector<Row>& rows() const { return rows_; }

 private:
  std::vector<Rational> objective_;
  std::vector<Row> rows_;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Rational value;          // optimal objective
  std::vector<Rational> x;  // primal solution (optimal only)
};

LpResult solve(const LinearProgram& lp);

}  // namespace tempoflow
