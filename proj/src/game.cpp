#include "wvg/game.hpp"

#include <algorithm>

namespace wvg {

WeightedGame WeightedGame::make(const Rat& quota, const std::vector<RatClass>& classes) {
  if (classes.empty()) throw std::invalid_argument("game needs at least one class");
  if (quota <= 0) throw std::invalid_argument("quota must be positive (v(empty)=0)");
  Rat total(0);
  long n = 0;
  for (const auto& c : classes) {
    if (c.count < 1) throw std::invalid_argument("class count must be >= 1");
    if (c.weight < 0) throw std::invalid_argument("negative weight");
    total += c.weight * Rat(c.count);
    n += c.count;
  }
  if (quota > total)
    throw std::invalid_argument("quota exceeds total weight (v(N) would be 0)");

  // common denominator of the weights only; the quota may stay fractional
  // after scaling, in which case the effective integer quota is its ceiling
  Int scale(1);
  for (const auto& c : classes) {
    Int lcm;
    mpz_lcm(lcm.get_mpz_t(), scale.get_mpz_t(), c.weight.get_den().get_mpz_t());
    scale = lcm;
  }

  WeightedGame g;
  g.quota_original_ = quota;
  g.quota_scaled_ = quota * Rat(scale);
  g.quota_int_ = rat_ceil(g.quota_scaled_);
  g.total_weight_ = 0;
  g.n_ = n;
  g.classes_.reserve(classes.size());
  g.class_offset_.reserve(classes.size());
  long offset = 0;
  for (const auto& c : classes) {
    Rat scaled = c.weight * Rat(scale);
    IntClass ic{scaled.get_num(), c.count};  // den is 1 after scaling
    g.total_weight_ += ic.weight * c.count;
    g.class_offset_.push_back(offset);
    offset += c.count;
    g.classes_.push_back(std::move(ic));
  }
  return g;
}

WeightedGame WeightedGame::from_weights(const Rat& quota, const std::vector<Rat>& weights) {
  std::vector<RatClass> classes;
  classes.reserve(weights.size());
  for (const Rat& w : weights) classes.push_back({w, 1});
  return make(quota, classes);
}

std::size_t WeightedGame::player_class(long player) const {
  if (player < 0 || player >= n_) throw std::invalid_argument("player id out of range");
  auto it = std::upper_bound(class_offset_.begin(), class_offset_.end(), player);
  return static_cast<std::size_t>(it - class_offset_.begin()) - 1;
}

const Int& WeightedGame::player_weight(long player) const {
  return classes_[player_class(player)].weight;
}

WeightVector WeightedGame::relative_weights() const {
  WeightVector w;
  w.reserve(static_cast<std::size_t>(n_));
  for (const auto& c : classes_) {
    Rat rel = make_rat(c.weight, total_weight_);
    for (long i = 0; i < c.count; ++i) w.push_back(rel);
  }
  return w;
}

bool WeightedGame::is_winning(std::span<const long> coalition) const {
  std::vector<long> ids(coalition.begin(), coalition.end());
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
    throw std::invalid_argument("coalition has repeated players");
  Int sum(0);
  for (long id : ids) sum += player_weight(id);
  return wins_weight(sum);
}

WeightedGame dual_game(const WeightedGame& g) {
  Int dual_quota = g.total_weight() - g.quota_int() + 1;
  std::vector<RatClass> classes;
  classes.reserve(g.classes().size());
  for (const auto& c : g.classes()) classes.push_back({Rat(c.weight), c.count});
  return WeightedGame::make(Rat(dual_quota), classes);
}

}  // namespace wvg
