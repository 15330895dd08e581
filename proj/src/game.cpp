#include "blinded/game.hpp"

#include <algorithm>
#include <set>

#include "blinded/errors.hpp"

namespace blinded {

StrategicGame::StrategicGame(std::vector<std::vector<std::string>> action_labels,
                             std::vector<Rat> utilities)
    : labels_(std::move(action_labels)), utilities_(std::move(utilities)) {
  if (labels_.empty()) throw DomainError("game needs at least one player");
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) {
      throw DomainError("player " + std::to_string(i) + " has no actions");
    }
    std::set<std::string> seen(labels_[i].begin(), labels_[i].end());
    if (seen.size() != labels_[i].size()) {
      throw DomainError("duplicate action label for player " + std::to_string(i));
    }
    num_profiles_ *= static_cast<long>(labels_[i].size());
  }
  if (utilities_.size() != static_cast<std::size_t>(num_profiles_) * labels_.size()) {
    throw DomainError("utility tensor is not total");
  }
}

int StrategicGame::action_index(int player, const std::string& label) const {
  const auto& ls = labels_[player];
  auto it = std::find(ls.begin(), ls.end(), label);
  return it == ls.end() ? -1 : static_cast<int>(it - ls.begin());
}

long StrategicGame::profile_index(const ActionProfile& a) const {
  check_profile(a);
  long idx = 0;
  for (int i = 0; i < num_players(); ++i) {
    idx = idx * num_actions(i) + a[i];
  }
  return idx;
}

ActionProfile StrategicGame::profile_at(long index) const {
  ActionProfile a(num_players());
  for (int i = num_players() - 1; i >= 0; --i) {
    a[i] = static_cast<int>(index % num_actions(i));
    index /= num_actions(i);
  }
  return a;
}

const Rat& StrategicGame::utility(const ActionProfile& a, int player) const {
  return utilities_[profile_index(a) * num_players() + player];
}

std::vector<Rat> StrategicGame::utilities(const ActionProfile& a) const {
  long base = profile_index(a) * num_players();
  return std::vector<Rat>(utilities_.begin() + base,
                          utilities_.begin() + base + num_players());
}

void StrategicGame::check_profile(const ActionProfile& a) const {
  if (static_cast<int>(a.size()) != num_players()) {
    throw DomainError("profile has wrong number of coordinates");
  }
  for (int i = 0; i < num_players(); ++i) {
    if (a[i] < 0 || a[i] >= num_actions(i)) {
      throw DomainError("action index out of range for player " + std::to_string(i));
    }
  }
}

void ProfileDistribution::validate(const StrategicGame& game) const {
  Rat total = 0;
  std::set<long> seen;
  for (const auto& [profile, prob] : support) {
    game.check_profile(profile);
    if (prob < 0) throw DomainError("negative probability in distribution");
    if (!seen.insert(game.profile_index(profile)).second) {
      throw DomainError("duplicate profile in distribution support");
    }
    total += prob;
  }
  if (total != 1) {
    throw DomainError("distribution probabilities sum to " + rat_str(total) +
                      ", expected 1");
  }
  if (kind == DistKind::Product) {
    std::vector<std::vector<Rat>> marg(game.num_players());
    for (int i = 0; i < game.num_players(); ++i) marg[i] = marginal(game, i);
    // Reconstruction check: the joint must equal the product of marginals on
    // every profile of the game, not just the support.
    for (long idx = 0; idx < game.num_profiles(); ++idx) {
      ActionProfile a = game.profile_at(idx);
      Rat expect = 1;
      for (int i = 0; i < game.num_players(); ++i) expect *= marg[i][a[i]];
      Rat actual = 0;
      for (const auto& [profile, prob] : support) {
        if (profile == a) { actual = prob; break; }
      }
      if (actual != expect) {
        throw DomainError("distribution marked product does not factor");
      }
    }
  }
}

std::vector<Rat> ProfileDistribution::marginal(const StrategicGame& game,
                                               int player) const {
  std::vector<Rat> m(game.num_actions(player), Rat(0));
  for (const auto& [profile, prob] : support) m[profile[player]] += prob;
  return m;
}

ProfileDistribution ProfileDistribution::point_mass(ActionProfile a) {
  ProfileDistribution d;
  d.kind = DistKind::Product;
  d.support.emplace_back(std::move(a), Rat(1));
  return d;
}

ProfileDistribution ProfileDistribution::from_product(
    const StrategicGame& game, const std::vector<std::vector<Rat>>& mix) {
  ProfileDistribution d;
  d.kind = DistKind::Product;
  for (long idx = 0; idx < game.num_profiles(); ++idx) {
    ActionProfile a = game.profile_at(idx);
    Rat p = 1;
    for (int i = 0; i < game.num_players(); ++i) p *= mix[i][a[i]];
    if (p > 0) d.support.emplace_back(a, p);
  }
  return d;
}

}  // namespace blinded
