#pragma once

/// Weighted games [q; w] over weight classes with multiplicities. Rational
/// quota and weights are rescaled once, at construction, to integers (the
/// winning rule w(S) >= q is preserved exactly); all counting downstream is
/// integer-only. Player order is class-major and canonical for all
/// per-player output.

#include <span>
#include <vector>

#include "wvg/numeric.hpp"
#include "wvg/weights.hpp"

namespace wvg {

struct RatClass {
  Rat weight;
  long count = 1;
};

struct IntClass {
  Int weight;
  long count = 1;
};

class WeightedGame {
 public:
  WeightedGame() = default;  // empty placeholder; build real games via make()

  /// Builds [quota; classes]. Requires counts >= 1, weights >= 0 and
  /// 0 < quota <= total weight.
  static WeightedGame make(const Rat& quota, const std::vector<RatClass>& classes);

  /// One class of multiplicity 1 per listed weight.
  static WeightedGame from_weights(const Rat& quota, const std::vector<Rat>& weights);

  long n() const { return n_; }
  const std::vector<IntClass>& classes() const { return classes_; }

  /// Effective integer quota Q: a coalition wins iff its integer weight >= Q.
  const Int& quota_int() const { return quota_int_; }

  /// The rational quota after integer rescaling (ceil of this is Q).
  const Rat& quota_scaled() const { return quota_scaled_; }

  /// Quota as originally given.
  const Rat& quota() const { return quota_original_; }

  const Int& total_weight() const { return total_weight_; }

  /// quota / w(N); invariant under the integer rescaling.
  Rat relative_quota() const { return quota_scaled_ / Rat(total_weight_); }

  std::size_t player_class(long player) const;
  const Int& player_weight(long player) const;

  /// Per-player relative weights in class-major order; sums to 1.
  WeightVector relative_weights() const;

  bool wins_weight(const Int& coalition_weight) const {
    return coalition_weight >= quota_int_;
  }

  /// Exact winning test for an explicit coalition of distinct player ids.
  bool is_winning(std::span<const long> coalition) const;

 private:
  std::vector<IntClass> classes_;
  std::vector<long> class_offset_;  // first player id of each class
  Int quota_int_;
  Rat quota_scaled_;
  Rat quota_original_;
  Int total_weight_;
  long n_ = 0;
};

/// [w(N)-Q+1; same weights]. Banzhaf swing counts are invariant under this.
WeightedGame dual_game(const WeightedGame& g);

}  // namespace wvg
