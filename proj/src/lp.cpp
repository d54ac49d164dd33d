#include "tempoflow/lp.hpp"

#include <string>

#include "tempoflow/errors.hpp"

namespace tempoflow {

int LinearProgram::add_variable(const Rational& objective) {
  objective_.push_back(objective);
  return static_cast<int>(objective_.size()) - 1;
}

void LinearProgram::add_row(std::vector<std::pair<int, Rational>> coeffs, Sense sense, const Rational& rhs) {
  for (const auto& [j, a] : coeffs) {
    if (j < 0 || j >= variable_count()) throw PreconditionError("LP row references unknown variable " + std::to_string(j));
  }
  rows_.push_back({std::move(coeffs), sense, rhs});
}

namespace {

class Tableau {
 public:
  Tableau(const LinearProgram& lp) : structural_(lp.variable_count()) {
    const auto& rows = lp.rows();
    const int m = static_cast<int>(rows.size());
    // columns: structural | one slack per inequality | one artificial per row needing it
    int slack = 0;
    for (const auto& r : rows) slack += r.sense == LinearProgram::Sense::eq ? 0 : 1;
    first_artificial_ = structural_ + slack;
    int next_slack = structural_;
    std::vector<int> slack_of(m, -1);
    std::vector<bool> needs_art(m, false);
    int arts = 0;
    for (int i = 0; i < m; ++i) {
      const auto& r = rows[i];
      if (r.sense != LinearProgram::Sense::eq) slack_of[i] = next_slack++;
      // After sign normalisation an le row with rhs >= 0 has a +1 slack.
      const bool flip = r.rhs < 0;
      const bool plus_slack = (r.sense == LinearProgram::Sense::le) != flip;
      needs_art[i] = !(r.sense != LinearProgram::Sense::eq && plus_slack);
      arts += needs_art[i] ? 1 : 0;
    }
    cols_ = first_artificial_ + arts;
    a_.assign(m, std::vector<Rational>(cols_));
    rhs_.resize(m);
    basis_.resize(m);
    int next_art = first_artificial_;
    for (int i = 0; i < m; ++i) {
      const auto& r = rows[i];
      const bool flip = r.rhs < 0;
      for (const auto& [j, c] : r.coeffs) a_[i][j] += flip ? Rational(-c) : c;
      rhs_[i] = flip ? Rational(-r.rhs) : r.rhs;
      if (slack_of[i] >= 0) {
        const bool plus = (r.sense == LinearProgram::Sense::le) != flip;
        a_[i][slack_of[i]] = plus ? 1 : -1;
        if (!needs_art[i]) basis_[i] = slack_of[i];
      }
      if (needs_art[i]) {
        a_[i][next_art] = 1;
        basis_[i] = next_art++;
      }
    }
  }

  LpResult run(const LinearProgram& lp) {
    LpResult result;
    // Phase 1: maximize -sum(artificials).
    obj_.assign(cols_, 0);
    obj_rhs_ = 0;
    for (int j = first_artificial_; j < cols_; ++j) obj_[j] = -1;
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (basis_[i] >= first_artificial_) add_row_to_objective(i, 1);
    }
    if (optimize(cols_) == LpStatus::unbounded) throw CertificateError("phase 1 reported unbounded");
    if (obj_rhs_ != 0) return result;  // -z = sum of artificials > 0
    drive_out_artificials();
    // Phase 2.
    obj_.assign(cols_, 0);
    obj_rhs_ = 0;
    for (int j = 0; j < structural_; ++j) obj_[j] = lp.objective()[j];
    for (std::size_t i = 0; i < a_.size(); ++i) {
      const int b = basis_[i];
      if (b < structural_ && obj_[b] != 0) add_row_to_objective(i, Rational(-obj_[b]));
    }
    if (optimize(first_artificial_) == LpStatus::unbounded) {
      result.status = LpStatus::unbounded;
      return result;
    }
    result.status = LpStatus::optimal;
    result.value = -obj_rhs_;
    result.x.assign(structural_, 0);
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (basis_[i] < structural_) result.x[basis_[i]] = rhs_[i];
    }
    return result;
  }

 private:
  void add_row_to_objective(std::size_t i, const Rational& factor) {
    for (int j = 0; j < cols_; ++j) {
      if (a_[i][j] != 0) obj_[j] += factor * a_[i][j];
    }
    obj_rhs_ += factor * rhs_[i];
  }

  // Columns >= limit may not enter.
  LpStatus optimize(int limit) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < limit; ++j) {
        if (obj_[j] > 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return LpStatus::optimal;
      int leave = -1;
      Rational best;
      for (std::size_t i = 0; i < a_.size(); ++i) {
        if (a_[i][enter] <= 0) continue;
        Rational ratio = rhs_[i] / a_[i][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = static_cast<int>(i);
          best = std::move(ratio);
        }
      }
      if (leave < 0) return LpStatus::unbounded;
      pivot(leave, enter);
    }
  }

  void pivot(int r, int c) {
    const Rational p = a_[r][c];
    std::vector<int> nz;
    for (int j = 0; j < cols_; ++j) {
      if (a_[r][j] != 0) {
        a_[r][j] /= p;
        nz.push_back(j);
      }
    }
    rhs_[r] /= p;
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (static_cast<int>(i) == r || a_[i][c] == 0) continue;
      const Rational f = a_[i][c];
      for (int j : nz) a_[i][j] -= f * a_[r][j];
      rhs_[i] -= f * rhs_[r];
    }
    if (obj_[c] != 0) {
      const Rational f = obj_[c];
      for (int j : nz) obj_[j] -= f * a_[r][j];
      obj_rhs_ -= f * rhs_[r];
    }
    basis_[r] = c;
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < a_.size();) {
      if (basis_[i] < first_artificial_) {
        ++i;
        continue;
      }
      int col = -1;
      for (int j = 0; j < first_artificial_; ++j) {
        if (a_[i][j] != 0) {
          col = j;
          break;
        }
      }
      if (col >= 0) {
        pivot(static_cast<int>(i), col);
        ++i;
      } else {
        // redundant row
        a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(i));
        rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
  }

  int structural_;
  int first_artificial_ = 0;
  int cols_ = 0;
  std::vector<std::vector<Rational>> a_;
  std::vector<Rational> rhs_;
  std::vector<int> basis_;
  std::vector<Rational> obj_;
  Rational obj_rhs_;
};

}  // namespace

LpResult solve(const LinearProgram& lp) {
  Tableau t(lp);
  return t.run(lp);
}

}  // namespace tempoflow
