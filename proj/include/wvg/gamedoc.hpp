#pragma once

/// JSON game documents: {"quota": "...", "weights": [...]} or
/// {"quota": "...", "classes": [["weight", count], ...]}. Numeric literals
/// are exact fraction or decimal strings (plain JSON integers are also
/// accepted). Emission always uses the integerized classes form, so a
/// document round-trips to a game with identical indices, byte for byte.

#include <optional>
#include <string>

#include "wvg/game.hpp"

namespace wvg {

struct GameDocument {
  Rat quota;
  std::optional<std::vector<Rat>> weights;
  std::optional<std::vector<RatClass>> classes;

  WeightedGame to_game() const;

  static GameDocument from_game(const WeightedGame& g);

  /// Throws std::invalid_argument on malformed documents.
  static GameDocument parse(const std::string& json_text);

  /// Deterministic two-space-indented JSON; fractions in lowest terms.
  std::string serialize() const;
};

}  // namespace wvg
