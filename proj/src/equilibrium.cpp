#include "blinded/equilibrium.hpp"

#include <sstream>

#include "blinded/errors.hpp"

namespace blinded {

Concept concept_parse(const std::string& name) {
  if (name == "nash") return Concept::Nash;
  if (name == "ce") return Concept::Ce;
  if (name == "cce") return Concept::Cce;
  throw ParseError("unknown concept '" + name + "' (expected nash|ce|cce)");
}

std::string concept_name(Concept c) {
  switch (c) {
    case Concept::Nash: return "nash";
    case Concept::Ce: return "ce";
    case Concept::Cce: return "cce";
  }
  return "?";
}

std::vector<Rat> expected_utility(const StrategicGame& game,
                                  const ProfileDistribution& dist) {
  dist.validate(game);
  std::vector<Rat> out(game.num_players(), Rat(0));
  for (const auto& [profile, prob] : dist.support) {
    for (int i = 0; i < game.num_players(); ++i) {
      out[i] += prob * game.utility(profile, i);
    }
  }
  return out;
}

namespace {

// Best unconditioned pure swap for player i: max_b E[u_i(b, a_-i)] - E[u_i].
DeviationGain unconditioned_gain(const StrategicGame& game,
                                 const ProfileDistribution& dist, int player) {
  Rat base = 0;
  for (const auto& [profile, prob] : dist.support) {
    base += prob * game.utility(profile, player);
  }
  DeviationGain out;
  bool first = true;
  for (int b = 0; b < game.num_actions(player); ++b) {
    Rat v = 0;
    for (const auto& [profile, prob] : dist.support) {
      v += prob * game.utility(StrategicGame::with_action(profile, player, b), player);
    }
    if (first || v - base > out.gain) {
      out.gain = v - base;
      out.witness = {player, b, std::nullopt};
      first = false;
    }
  }
  return out;
}

// Sum over advice of Pr[advice] * best conditional gain. Each summand is the
// unnormalized conditional sum directly (the Pr[advice] weighting cancels the
// conditioning denominator).
DeviationGain conditioned_gain(const StrategicGame& game,
                               const ProfileDistribution& dist, int player) {
  DeviationGain out;
  out.gain = 0;
  Rat worst_per_advice = 0;
  for (int advice = 0; advice < game.num_actions(player); ++advice) {
    Rat pr = 0;
    for (const auto& [profile, prob] : dist.support) {
      if (profile[player] == advice) pr += prob;
    }
    if (pr == 0) continue;
    Rat best = 0;  // staying at the advice is always available: best >= 0
    int best_dev = advice;
    for (int b = 0; b < game.num_actions(player); ++b) {
      Rat g = 0;
      for (const auto& [profile, prob] : dist.support) {
        if (profile[player] != advice) continue;
        g += prob * (game.utility(StrategicGame::with_action(profile, player, b), player) -
                     game.utility(profile, player));
      }
      if (g > best) {
        best = g;
        best_dev = b;
      }
    }
    out.per_advice.emplace_back(advice, best);
    out.gain += best;
    if (best > worst_per_advice || out.witness.player < 0) {
      worst_per_advice = best;
      out.witness = {player, best_dev, advice};
    }
  }
  return out;
}

}  // namespace

DeviationGain deviation_gain(const StrategicGame& game,
                             const ProfileDistribution& dist, int player,
                             Concept concept) {
  if (player < 0 || player >= game.num_players()) {
    throw DomainError("unknown player id " + std::to_string(player));
  }
  dist.validate(game);
  if (concept == Concept::Ce) return conditioned_gain(game, dist, player);
  return unconditioned_gain(game, dist, player);
}

VerifyReport verify_equilibrium(const StrategicGame& game,
                                const ProfileDistribution& dist, Concept concept,
                                const Tolerance& tol) {
  if (concept == Concept::Nash && dist.kind != DistKind::Product) {
    throw ConceptMismatch("nash verification requires a product distribution");
  }
  dist.validate(game);
  VerifyReport report;
  report.concept = concept;
  report.tol = tol;
  report.accept = true;
  for (int i = 0; i < game.num_players(); ++i) {
    DeviationGain g = deviation_gain(game, dist, i, concept);
    report.players.push_back({i, g.gain, g.witness, g.per_advice});
    if (g.gain > tol.epsilon) report.accept = false;
  }
  return report;
}

std::string VerifyReport::to_text(const StrategicGame& game) const {
  std::ostringstream os;
  os << "concept " << concept_name(concept) << " eps " << rat_str(tol.epsilon);
  if (tol.security_parameter > 0) os << " k " << tol.security_parameter;
  os << "\n";
  for (const auto& pv : players) {
    os << "player " << pv.player << " worst_gain " << rat_str(pv.worst_gain);
    if (pv.witness.deviation >= 0) {
      os << " deviation " << game.action_label(pv.player, pv.witness.deviation);
      if (pv.witness.advice) {
        os << " advice " << game.action_label(pv.player, *pv.witness.advice);
      }
    }
    os << "\n";
    for (const auto& [advice, gain] : pv.per_advice) {
      os << "  advice " << game.action_label(pv.player, advice) << " weighted_gain "
         << rat_str(gain) << "\n";
    }
  }
  os << (accept ? "ACCEPT" : "REJECT") << "\n";
  return os.str();
}

StrategicGame normalize_payoffs(const StrategicGame& game) {
  int n = game.num_players();
  std::vector<Rat> lo(n), hi(n);
  for (long idx = 0; idx < game.num_profiles(); ++idx) {
    std::vector<Rat> u = game.utilities(game.profile_at(idx));
    for (int i = 0; i < n; ++i) {
      if (idx == 0 || u[i] < lo[i]) lo[i] = u[i];
      if (idx == 0 || u[i] > hi[i]) hi[i] = u[i];
    }
  }
  std::vector<Rat> utilities;
  utilities.reserve(game.num_profiles() * n);
  for (long idx = 0; idx < game.num_profiles(); ++idx) {
    std::vector<Rat> u = game.utilities(game.profile_at(idx));
    for (int i = 0; i < n; ++i) {
      if (hi[i] == lo[i]) {
        utilities.emplace_back(0);
      } else {
        utilities.push_back((u[i] - lo[i]) / (hi[i] - lo[i]));
      }
    }
  }
  std::vector<std::vector<std::string>> labels;
  for (int i = 0; i < n; ++i) labels.push_back(game.action_labels(i));
  return StrategicGame(std::move(labels), std::move(utilities));
}

}  // namespace blinded
