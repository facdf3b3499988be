#include "wvg/nucleolus.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "wvg/simplex.hpp"

namespace wvg {

namespace {

constexpr long kNucleolusCap = 12;

struct GameTable {
  long n;
  std::vector<long> weights;
  long quota;

  bool wins(unsigned mask) const {
    long sum = 0;
    for (long i = 0; i < n; ++i)
      if (mask & (1u << i)) sum += weights[static_cast<std::size_t>(i)];
    return sum >= quota;
  }
};

GameTable load_table(const WeightedGame& g, const char* op) {
  if (g.n() > kNucleolusCap)
    throw cap_error(std::string(op) + " capped at 12 players");
  if (!g.total_weight().fits_slong_p())
    throw cap_error("integer weights too large");
  GameTable t;
  t.n = g.n();
  t.quota = g.quota_int().get_si();
  t.weights.resize(static_cast<std::size_t>(t.n));
  for (long i = 0; i < t.n; ++i) t.weights[static_cast<std::size_t>(i)] = g.player_weight(i).get_si();
  return t;
}

// Gaussian elimination over the rationals; returns rank. When `solve` is
// set and rank == n, writes the unique solution.
long rank_of(std::vector<std::vector<Rat>> m, long n, std::vector<Rat>* solution) {
  long rank = 0;
  std::vector<long> pivot_col_of_row;
  for (long col = 0; col < n && rank < static_cast<long>(m.size()); ++col) {
    long pivot = -1;
    for (long r = rank; r < static_cast<long>(m.size()); ++r) {
      if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[static_cast<std::size_t>(rank)], m[static_cast<std::size_t>(pivot)]);
    auto& prow = m[static_cast<std::size_t>(rank)];
    Rat inv = 1 / prow[static_cast<std::size_t>(col)];
    for (auto& v : prow) v *= inv;
    for (long r = 0; r < static_cast<long>(m.size()); ++r) {
      if (r == rank) continue;
      auto& row = m[static_cast<std::size_t>(r)];
      if (row[static_cast<std::size_t>(col)] == 0) continue;
      Rat f = row[static_cast<std::size_t>(col)];
      for (long j = 0; j <= n; ++j)
        row[static_cast<std::size_t>(j)] -= f * prow[static_cast<std::size_t>(j)];
    }
    pivot_col_of_row.push_back(col);
    ++rank;
  }
  if (solution && rank == n) {
    solution->assign(static_cast<std::size_t>(n), Rat(0));
    for (long r = 0; r < rank; ++r)
      (*solution)[static_cast<std::size_t>(pivot_col_of_row[static_cast<std::size_t>(r)])] =
          m[static_cast<std::size_t>(r)][static_cast<std::size_t>(n)];
  }
  return rank;
}

}  // namespace

ExcessVector excess_vector(const WeightedGame& g, const PowerVector& x) {
  GameTable t = load_table(g, "excess vector");
  if (static_cast<long>(x.size()) != t.n) throw std::invalid_argument("dimension mismatch");
  if (vector_sum(x.values) != 1) throw std::invalid_argument("x must sum to 1");
  const unsigned full = (1u << t.n) - 1;
  std::vector<Rat> xsum(full + 1, Rat(0));
  for (unsigned mask = 1; mask <= full; ++mask) {
    const unsigned low = mask & (~mask + 1);
    const int idx = std::countr_zero(mask);
    xsum[mask] = xsum[mask ^ low] + x.values[static_cast<std::size_t>(idx)];
  }
  ExcessVector ev;
  ev.sorted.reserve(full - 1);
  for (unsigned mask = 1; mask < full; ++mask) {
    Rat v = t.wins(mask) ? Rat(1) : Rat(0);
    ev.sorted.push_back(v - xsum[mask]);
  }
  std::sort(ev.sorted.begin(), ev.sorted.end(), std::greater<Rat>());
  return ev;
}

std::strong_ordering lex_compare(const ExcessVector& a, const ExcessVector& b) {
  if (a.sorted.size() != b.sorted.size())
    throw std::invalid_argument("excess vectors of different length");
  for (std::size_t i = 0; i < a.sorted.size(); ++i) {
    if (a.sorted[i] < b.sorted[i]) return std::strong_ordering::less;
    if (a.sorted[i] > b.sorted[i]) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

namespace {

struct StageLpResult {
  Rat level;
  std::vector<Rat> x;
  std::vector<unsigned> newly_fixed;
};

class NucleolusSolver {
 public:
  explicit NucleolusSolver(const WeightedGame& g) : t_(load_table(g, "nucleolus")) {
    full_ = (1u << t_.n) - 1;
    long winners = 0;
    for (long i = 0; i < t_.n; ++i)
      if (t_.weights[static_cast<std::size_t>(i)] >= t_.quota) ++winners;
    impose_floors_ = winners <= 1;
    unfixed_.assign(full_ + 1, true);
    unfixed_[0] = false;
    unfixed_[full_] = false;
  }

  std::vector<Rat> solve() {
    if (t_.n == 1) return {Rat(1)};
    // working set persists across stages; seed with singletons and
    // their complements
    for (long i = 0; i < t_.n; ++i) {
      working_.push_back(1u << i);
      working_.push_back(full_ ^ (1u << i));
    }
    std::sort(working_.begin(), working_.end());
    working_.erase(std::unique(working_.begin(), working_.end()), working_.end());

    const long stage_cap = 2 * static_cast<long>(full_) + 4;
    for (long stage = 0; stage < stage_cap; ++stage) {
      StageLpResult res = run_stage();
      for (unsigned mask : res.newly_fixed) {
        unfixed_[mask] = false;
        fixed_.push_back({mask, res.level});
      }
      std::vector<Rat> x;
      if (equality_rank(&x) == t_.n) return x;
      if (std::none_of(unfixed_.begin() + 1, unfixed_.end() - 1,
                       [](bool u) { return u; }))
        throw std::logic_error("nucleolus: all coalitions fixed but point not unique");
    }
    throw std::logic_error("nucleolus: stage limit exceeded");
  }

 private:
  // rows of the equality system: x(N) = 1 plus fixed coalitions
  long equality_rank(std::vector<Rat>* solution) const {
    std::vector<std::vector<Rat>> rows;
    std::vector<Rat> ones(static_cast<std::size_t>(t_.n) + 1, Rat(1));
    rows.push_back(ones);
    for (const auto& [mask, level] : fixed_) {
      std::vector<Rat> row(static_cast<std::size_t>(t_.n) + 1, Rat(0));
      for (long i = 0; i < t_.n; ++i)
        if (mask & (1u << i)) row[static_cast<std::size_t>(i)] = 1;
      Rat v = t_.wins(mask) ? Rat(1) : Rat(0);
      row[static_cast<std::size_t>(t_.n)] = v - level;
      rows.push_back(std::move(row));
    }
    return rank_of(std::move(rows), t_.n, solution);
  }

  // one stage: minimize the maximum excess over unfixed coalitions subject
  // to the fixed levels, then fix the coalitions carrying positive duals
  StageLpResult run_stage() {
    if (std::none_of(working_.begin(), working_.end(),
                     [&](unsigned m) { return unfixed_[m]; })) {
      for (unsigned mask = 1; mask < full_; ++mask) {
        if (unfixed_[mask]) {
          working_.push_back(mask);
          break;
        }
      }
    }
    const std::size_t nv = static_cast<std::size_t>(t_.n) + 2;  // x, eps+, eps-
    std::vector<Rat> objective(nv, Rat(0));
    objective[nv - 2] = 1;
    objective[nv - 1] = -1;

    for (int iteration = 0;; ++iteration) {
      if (iteration > 4 * static_cast<int>(full_))
        throw std::logic_error("nucleolus: constraint generation did not converge");
      std::vector<LpRow> rows;
      std::vector<unsigned> coalition_of_row;  // 0 = not a working coalition row
      auto push = [&](LpRow row, unsigned mask) {
        rows.push_back(std::move(row));
        coalition_of_row.push_back(mask);
      };
      LpRow sum_row;
      sum_row.coeffs.assign(nv, Rat(0));
      for (long i = 0; i < t_.n; ++i) sum_row.coeffs[static_cast<std::size_t>(i)] = 1;
      sum_row.rhs = 1;
      sum_row.equality = true;
      push(std::move(sum_row), 0);

      if (impose_floors_) {
        for (long i = 0; i < t_.n; ++i) {
          if (t_.weights[static_cast<std::size_t>(i)] < t_.quota) continue;
          LpRow floor_row;
          floor_row.coeffs.assign(nv, Rat(0));
          floor_row.coeffs[static_cast<std::size_t>(i)] = 1;
          floor_row.rhs = 1;  // v({i}) = 1
          push(std::move(floor_row), 0);
        }
      }
      for (const auto& [mask, level] : fixed_) {
        LpRow row;
        row.coeffs.assign(nv, Rat(0));
        for (long i = 0; i < t_.n; ++i)
          if (mask & (1u << i)) row.coeffs[static_cast<std::size_t>(i)] = 1;
        row.rhs = (t_.wins(mask) ? Rat(1) : Rat(0)) - level;
        row.equality = true;
        push(std::move(row), 0);
      }
      for (unsigned mask : working_) {
        if (!unfixed_[mask]) continue;
        LpRow row;
        row.coeffs.assign(nv, Rat(0));
        for (long i = 0; i < t_.n; ++i)
          if (mask & (1u << i)) row.coeffs[static_cast<std::size_t>(i)] = 1;
        row.coeffs[nv - 2] = 1;
        row.coeffs[nv - 1] = -1;
        row.rhs = t_.wins(mask) ? Rat(1) : Rat(0);
        push(std::move(row), mask);
      }

      LpResult lp = solve_lp(rows, objective);
      if (lp.status != LpStatus::optimal)
        throw std::logic_error("nucleolus: stage LP not optimal");
      std::vector<Rat> x(lp.x.begin(), lp.x.begin() + t_.n);
      const Rat level = lp.objective;

      // separation over all unfixed coalitions
      std::vector<Rat> xsum(full_ + 1, Rat(0));
      for (unsigned mask = 1; mask <= full_; ++mask) {
        const unsigned low = mask & (~mask + 1);
        xsum[mask] = xsum[mask ^ low] + x[static_cast<std::size_t>(std::countr_zero(mask))];
      }
      std::vector<std::pair<Rat, unsigned>> violators;
      for (unsigned mask = 1; mask < full_; ++mask) {
        if (!unfixed_[mask]) continue;
        Rat e = (t_.wins(mask) ? Rat(1) : Rat(0)) - xsum[mask];
        if (e > level) violators.push_back({std::move(e), mask});
      }
      if (!violators.empty()) {
        constexpr std::size_t kBatch = 4;
        std::partial_sort(violators.begin(),
                          violators.begin() + std::min(kBatch, violators.size()),
                          violators.end(), std::greater<>());
        for (std::size_t v = 0; v < std::min(kBatch, violators.size()); ++v)
          working_.push_back(violators[v].second);
        continue;
      }

      // optimal: coalitions with positive dual are tight in every optimum
      StageLpResult out;
      out.level = level;
      out.x = std::move(x);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (coalition_of_row[r] != 0 && lp.duals[r] > 0)
          out.newly_fixed.push_back(coalition_of_row[r]);
      }
      if (out.newly_fixed.empty())
        throw std::logic_error("nucleolus: no coalition fixed at stage optimum");
      return out;
    }
  }

  GameTable t_;
  unsigned full_ = 0;
  bool impose_floors_ = true;
  std::vector<bool> unfixed_;
  std::vector<std::pair<unsigned, Rat>> fixed_;
  std::vector<unsigned> working_;
};

}  // namespace

PowerVector nucleolus(const WeightedGame& g) {
  NucleolusSolver solver(g);
  PowerVector p;
  p.kind = IndexKind::nucleolus;
  p.values = solver.solve();
  return p;
}

}  // namespace wvg
