#ifndef BLINDED_EQUILIBRIUM_HPP_
#define BLINDED_EQUILIBRIUM_HPP_

#include <optional>
#include <string>
#include <vector>

#include "blinded/game.hpp"

namespace blinded {

enum class Concept { Nash, Ce, Cce };

Concept concept_parse(const std::string& name);
std::string concept_name(Concept c);

// Per-player rational payoff vector under dist: E_{a<-alpha}[u_i(a)].
std::vector<Rat> expected_utility(const StrategicGame& game,
                                  const ProfileDistribution& dist);

struct DeviationWitness {
  int player = -1;
  int deviation = -1;          // pure action a*_i
  std::optional<int> advice;   // set for Ce: the conditioning action b_i
};

struct DeviationGain {
  Rat gain;                    // maximum advantage; may be negative
  DeviationWitness witness;    // maximizer (for Ce: the worst advice's best swap)
  // Ce only: (advice, weighted best conditional gain) for every advice with
  // positive probability, so the per-advice inequalities are checkable.
  std::vector<std::pair<int, Rat>> per_advice;
};

// Maximum advantage player i obtains from the concept's allowed pure
// deviations. Cce/Nash: best unconditioned swap. Ce: sum over advice values
// of Pr[a_i=b_i] * (best conditional deviation gain); each conditional best
// is >= 0 because staying put is allowed, so the sum is 0 exactly when every
// per-advice inequality holds.
DeviationGain deviation_gain(const StrategicGame& game,
                             const ProfileDistribution& dist, int player,
                             Concept concept);

struct PlayerVerdict {
  int player;
  Rat worst_gain;
  DeviationWitness witness;
  std::vector<std::pair<int, Rat>> per_advice;
};

struct VerifyReport {
  bool accept = false;
  Concept concept;
  Tolerance tol;
  std::vector<PlayerVerdict> players;

  std::string to_text(const StrategicGame& game) const;
};

// Accepts iff every player's deviation gain is <= tol.epsilon. Nash mode
// requires a product-kind distribution (ConceptMismatch otherwise).
VerifyReport verify_equilibrium(const StrategicGame& game,
                                const ProfileDistribution& dist, Concept concept,
                                const Tolerance& tol);

// Per-player affine rescale of payoffs onto [0,1]; a constant-payoff player
// maps to all zeros. Deviation-gain comparisons are preserved per player.
StrategicGame normalize_payoffs(const StrategicGame& game);

}  // namespace blinded

#endif  // BLINDED_EQUILIBRIUM_HPP_
