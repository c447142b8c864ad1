#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mixspec/embeddings.hpp"
#include "mixspec/interface.hpp"
#include "mixspec/lifting.hpp"
#include "mixspec/mmdp.hpp"

namespace gen {

using namespace mixspec;

struct Limits {
    std::size_t max_atoms = 4;
    std::size_t max_states = 3;
};

std::size_t below(Rng& rng, std::size_t n);
bool coin(Rng& rng, unsigned percent);

// Single variable `name` with a domain of 1..max_states values.
VariableSet variable(Rng& rng, const std::string& name, std::size_t max_states, bool observable = false);

// Positive weights summing to 1 with small denominators.
std::vector<Rational> weights(Rng& rng, std::size_t n);

// Rows are non-empty unless `allow_empty`, in which case roughly one row in six is empty.
MixedSystem system(Rng& rng, const VariableSet& vars, std::size_t max_atoms, bool allow_empty = false);
StateRelation relation(Rng& rng, const VariableSet& left, const VariableSet& right, unsigned percent = 50);

// Relabels atoms with fresh ids and permutes their order.
MixedSystem shuffle_atoms(Rng& rng, const MixedSystem& s, const std::string& prefix);
// Splits a random atom in two when it has weight to spare.
MixedSystem split_atom(Rng& rng, const MixedSystem& s);

// Live MMDP over `vars`, all consistent targets.
Mmdp mmdp(Rng& rng, const VariableSet& vars, const std::vector<std::string>& actions, unsigned percent = 70);
// A model simulated by `m` through the identity: rows shrink, atoms split, transitions vanish.
Mmdp weaken(Rng& rng, const Mmdp& m);

MixedInterface interface(Rng& rng, const VariableSet& vars, const std::vector<std::string>& actions);

ProbAutomaton pa(Rng& rng, std::size_t max_states, std::size_t max_distributions,
                 const std::vector<std::string>& actions, const std::string& prefix = "s");
// Every state of `p` gets a subset of its distributions (never all removed from a pair).
ProbAutomaton pa_subset(Rng& rng, const ProbAutomaton& p);

MarkovChain mc(Rng& rng, std::size_t max_states, const std::vector<std::string>& props, const std::string& prefix = "r");
ConstraintMarkovChain cmc(Rng& rng, std::size_t max_states, std::size_t max_distributions,
                          const std::vector<std::string>& props, const std::string& prefix = "q");
// Chain drawn from `s`: states of s, one distribution of phi(q), one valuation of V(q).
MarkovChain mc_of(Rng& rng, const ConstraintMarkovChain& s);
// CMC with fewer distributions and valuations per state than `s`.
ConstraintMarkovChain cmc_subset(Rng& rng, const ConstraintMarkovChain& s);

} // namespace gen
