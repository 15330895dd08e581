#ifndef BLINDED_GAME_HPP_
#define BLINDED_GAME_HPP_

#include <string>
#include <utility>
#include <vector>

#include "blinded/rational.hpp"

namespace blinded {

// One action index per player, ordered by player id.
using ActionProfile = std::vector<int>;

// Finite strategic game: players 0..n-1, per-player ordered action labels,
// and a total utility tensor in exact rationals.
class StrategicGame {
 public:
  StrategicGame(std::vector<std::vector<std::string>> action_labels,
                std::vector<Rat> utilities);

  int num_players() const { return static_cast<int>(labels_.size()); }
  int num_actions(int player) const {
    return static_cast<int>(labels_[player].size());
  }
  const std::vector<std::string>& action_labels(int player) const {
    return labels_[player];
  }
  const std::string& action_label(int player, int action) const {
    return labels_[player][action];
  }
  // -1 if the label is not an action of the player.
  int action_index(int player, const std::string& label) const;

  long num_profiles() const { return num_profiles_; }
  long profile_index(const ActionProfile& a) const;
  ActionProfile profile_at(long index) const;

  const Rat& utility(const ActionProfile& a, int player) const;
  std::vector<Rat> utilities(const ActionProfile& a) const;

  // Throws DomainError unless every index is in range.
  void check_profile(const ActionProfile& a) const;

  // Replaces player i's coordinate: (a'_i, a_{-i}).
  static ActionProfile with_action(ActionProfile a, int player, int action) {
    a[player] = action;
    return a;
  }

 private:
  std::vector<std::vector<std::string>> labels_;
  std::vector<Rat> utilities_;  // profile-major, player-minor
  long num_profiles_ = 1;
};

enum class DistKind { Product, Joint };

// Probability distribution over joint action profiles, stored as its support.
struct ProfileDistribution {
  DistKind kind = DistKind::Joint;
  std::vector<std::pair<ActionProfile, Rat>> support;

  // Validates: profiles in range and distinct, probabilities non-negative
  // rationals summing to exactly 1, and for product kind exact factorization
  // into per-player marginals (checked by reconstruction). Throws DomainError.
  void validate(const StrategicGame& game) const;

  // Exact marginal of one player's action.
  std::vector<Rat> marginal(const StrategicGame& game, int player) const;

  static ProfileDistribution point_mass(ActionProfile a);
  // Product distribution from per-player mixtures; support enumerates all
  // positive-probability profiles.
  static ProfileDistribution from_product(const StrategicGame& game,
                                          const std::vector<std::vector<Rat>>& mix);
};

struct Tolerance {
  Rat epsilon = 0;            // explicit deviation-gain budget
  int security_parameter = 0; // informational, recorded in reports

  Tolerance() = default;
  explicit Tolerance(Rat eps, int k = 0) : epsilon(std::move(eps)), security_parameter(k) {}
};

}  // namespace blinded

#endif  // BLINDED_GAME_HPP_
