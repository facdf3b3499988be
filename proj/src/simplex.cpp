#include "wvg/simplex.hpp"

#include <algorithm>

namespace wvg {

namespace {

class Tableau {
 public:
  Tableau(const std::vector<LpRow>& rows, std::size_t nvars) : nvars_(nvars) {
    m_ = rows.size();
    n_surplus_ = 0;
    for (const auto& r : rows)
      if (!r.equality) ++n_surplus_;
    cols_ = nvars_ + n_surplus_ + m_;  // structural | surplus | artificial
    surplus_col_.assign(m_, -1);
    row_sign_.assign(m_, 1);
    t_.assign(m_, std::vector<Rat>(cols_ + 1, Rat(0)));
    basis_.resize(m_);

    std::size_t next_surplus = nvars_;
    for (std::size_t i = 0; i < m_; ++i) {
      const auto& r = rows[i];
      if (r.coeffs.size() != nvars_) throw std::invalid_argument("LP row arity mismatch");
      for (std::size_t j = 0; j < nvars_; ++j) t_[i][j] = r.coeffs[j];
      Rat rhs = r.rhs;
      if (!r.equality) {
        surplus_col_[i] = static_cast<long>(next_surplus);
        t_[i][next_surplus] = -1;  // a.x - s = b
        ++next_surplus;
      }
      if (rhs < 0) {
        row_sign_[i] = -1;
        for (std::size_t j = 0; j < cols_; ++j) t_[i][j] = -t_[i][j];
        rhs = -rhs;
      }
      t_[i][cols_] = rhs;
      const std::size_t art = nvars_ + n_surplus_ + i;
      t_[i][art] = 1;
      basis_[i] = art;
    }
  }

  LpResult solve(const std::vector<Rat>& objective) {
    LpResult result;
    // ---- phase 1: min sum of artificials ----
    std::vector<Rat> cost(cols_, Rat(0));
    for (std::size_t j = artificial_begin(); j < cols_; ++j) cost[j] = 1;
    build_objective(cost);
    run(/*allow_artificial=*/true);
    if (obj_value() != 0) {
      result.status = LpStatus::infeasible;
      return result;
    }
    drive_out_artificials();

    // ---- phase 2 ----
    std::vector<Rat> cost2(cols_, Rat(0));
    for (std::size_t j = 0; j < nvars_ && j < objective.size(); ++j) cost2[j] = objective[j];
    build_objective(cost2);
    if (!run(/*allow_artificial=*/false)) {
      result.status = LpStatus::unbounded;
      return result;
    }

    result.status = LpStatus::optimal;
    result.objective = obj_value();
    result.x.assign(nvars_, Rat(0));
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < nvars_) result.x[basis_[i]] = t_[i][cols_];
    // duals: y = c_B B^{-1}; B^{-1} sits under the artificial columns
    result.duals.assign(m_, Rat(0));
    for (std::size_t i = 0; i < m_; ++i) {
      Rat y(0);
      for (std::size_t r = 0; r < m_; ++r) {
        if (basis_[r] < nvars_ && cost2[basis_[r]] != 0)
          y += cost2[basis_[r]] * t_[r][artificial_begin() + i];
      }
      result.duals[i] = row_sign_[i] == 1 ? y : Rat(-y);
    }
    return result;
  }

 private:
  std::size_t artificial_begin() const { return nvars_ + n_surplus_; }

  void build_objective(const std::vector<Rat>& cost) {
    obj_.assign(cols_ + 1, Rat(0));
    for (std::size_t j = 0; j < cols_; ++j) obj_[j] = cost[j];
    for (std::size_t i = 0; i < m_; ++i) {
      const Rat& cb = cost[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) obj_[j] -= cb * t_[i][j];
    }
  }

  Rat obj_value() const { return -obj_[cols_]; }

  // Bland's rule; returns false on unboundedness.
  bool run(bool allow_artificial) {
    const std::size_t limit = allow_artificial ? cols_ : artificial_begin();
    for (;;) {
      std::size_t enter = cols_;
      for (std::size_t j = 0; j < limit; ++j) {
        if (obj_[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == cols_) return true;  // optimal
      std::size_t leave = m_;
      Rat best_ratio;
      for (std::size_t i = 0; i < m_; ++i) {
        if (t_[i][enter] <= 0) continue;
        Rat ratio = t_[i][cols_] / t_[i][enter];
        if (leave == m_ || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == m_) return false;  // unbounded
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    Rat inv = 1 / t_[row][col];
    for (std::size_t j = 0; j <= cols_; ++j) t_[row][j] *= inv;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == row || t_[i][col] == 0) continue;
      Rat factor = t_[i][col];
      for (std::size_t j = 0; j <= cols_; ++j) t_[i][j] -= factor * t_[row][j];
    }
    if (obj_[col] != 0) {
      Rat factor = obj_[col];
      for (std::size_t j = 0; j <= cols_; ++j) obj_[j] -= factor * t_[row][j];
    }
    basis_[row] = col;
  }

  // After a feasible phase 1, pivot basic artificials out where possible;
  // rows whose artificial cannot leave are redundant and stay inert at zero.
  void drive_out_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < artificial_begin()) continue;
      for (std::size_t j = 0; j < artificial_begin(); ++j) {
        if (t_[i][j] != 0) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  std::size_t nvars_, m_, n_surplus_, cols_;
  std::vector<std::vector<Rat>> t_;
  std::vector<Rat> obj_;
  std::vector<std::size_t> basis_;
  std::vector<long> surplus_col_;
  std::vector<int> row_sign_;
};

}  // namespace

LpResult solve_lp(const std::vector<LpRow>& rows, const std::vector<Rat>& objective) {
  if (rows.empty()) {
    // no constraints: optimal at 0 unless some cost is negative
    LpResult r;
    for (const Rat& c : objective) {
      if (c < 0) {
        r.status = LpStatus::unbounded;
        return r;
      }
    }
    r.status = LpStatus::optimal;
    r.objective = 0;
    r.x.assign(objective.size(), Rat(0));
    return r;
  }
  Tableau tab(rows, objective.size());
  return tab.solve(objective);
}

}  // namespace wvg
