#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mixspec/interface.hpp"
#include "mixspec/mmdp.hpp"

namespace mixspec {

// Zero entries are dropped by normalize().
using Distribution = std::map<std::string, Rational>;

struct ProbAutomaton {
    std::vector<std::string> actions;
    std::vector<std::string> states;
    std::string initial;
    std::map<std::pair<std::string, std::string>, std::vector<Distribution>> transitions;

    // Sorts alphabet and states, drops zero entries, merges duplicate distributions and
    // checks that every distribution sums to 1 over known states. Throws validation_error.
    void normalize();
    bool operator==(const ProbAutomaton&) const = default;
};

struct MarkovChain {
    std::vector<std::string> states;
    std::string initial;
    std::map<std::string, Distribution> matrix;
    std::vector<std::string> propositions;
    std::map<std::string, std::set<std::string>> valuation;

    void normalize();
    bool operator==(const MarkovChain&) const = default;
};

struct ConstraintMarkovChain {
    std::vector<std::string> states;
    std::string initial;
    std::map<std::string, std::vector<Distribution>> phi;
    std::vector<std::string> propositions;
    std::map<std::string, std::vector<std::set<std::string>>> valuations;

    void normalize();
    bool operator==(const ConstraintMarkovChain&) const = default;
};

struct NamedCounterexample {
    std::string left;
    std::string right;
    std::string action;
    std::string reason;
};

struct NamedVerdict {
    bool holds = false;
    std::set<std::pair<std::string, std::string>> relation;
    std::optional<NamedCounterexample> counterexample;
    std::size_t iterations = 0;

    explicit operator bool() const { return holds; }
};

// Action label of chain embeddings.
inline const std::string chain_action = "step";
// Variable name of the observable flag for proposition `ap`.
std::string proposition_variable(const std::string& ap);

Mmdp pa_to_mmdp(const ProbAutomaton& p, const std::string& variable = "xi");
// Selection functions per transition are capped by MIXEDSPEC_SELECTION_BOUND (default 4096).
ProbAutomaton mmdp_to_pa(const Mmdp& m);
std::size_t selection_bound();
NamedVerdict pa_simulates(const ProbAutomaton& p1, const ProbAutomaton& p2);
ProbAutomaton pa_product(const ProbAutomaton& p1, const ProbAutomaton& p2);

Mmdp mc_to_mmdp(const MarkovChain& p, const std::string& variable = "xi");
// The initial state carries `initial_valuation` (default: first of V(q0) in canonical order).
MixedInterface cmc_to_interface(const ConstraintMarkovChain& s,
                                const std::optional<std::set<std::string>>& initial_valuation = std::nullopt,
                                const std::string& variable = "xi");
NamedVerdict mc_satisfies_cmc(const MarkovChain& p, const ConstraintMarkovChain& s);
NamedVerdict cmc_weak_refines(const ConstraintMarkovChain& s1, const ConstraintMarkovChain& s2);

} // namespace mixspec
