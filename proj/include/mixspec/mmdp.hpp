#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mixspec/fixpoint.hpp"
#include "mixspec/mixed_system.hpp"

namespace mixspec {

using TransitionKey = std::pair<State, std::string>;

// Deterministic action-indexed transitions from states into mixed systems.
class Mmdp {
public:
    Mmdp(std::vector<std::string> actions, VariableSet variables, State initial,
         std::map<TransitionKey, MixedSystem> transitions);

    const std::vector<std::string>& actions() const { return actions_; }
    const VariableSet& variables() const { return variables_; }
    const State& initial() const { return initial_; }
    const std::map<TransitionKey, MixedSystem>& transitions() const { return transitions_; }
    const MixedSystem* transition(const State& r, const std::string& action) const;
    std::vector<std::string> enabled(const State& r) const;

    // Reachable closure from the initial state over every admissible state, canonical order.
    const std::vector<State>& states() const { return states_; }

    bool operator==(const Mmdp& o) const {
        return actions_ == o.actions_ && variables_ == o.variables_ && initial_ == o.initial_ &&
               transitions_ == o.transitions_;
    }

private:
    std::vector<std::string> actions_;
    VariableSet variables_;
    State initial_;
    std::map<TransitionKey, MixedSystem> transitions_;
    std::vector<State> states_;
};

struct MmdpReport {
    bool deterministic = true;
    bool live = true;
    std::vector<std::string> issues;
};
MmdpReport validate_mmdp(const Mmdp& m);

struct RunStep {
    State source;
    std::string action;
    std::string atom;
    State target;

    bool operator==(const RunStep&) const = default;
};
struct RunTrace {
    std::vector<RunStep> steps;
    bool operator==(const RunTrace&) const = default;
};

class Scheduler {
public:
    enum class Kind { first, random, scripted };

    static Scheduler first() { return Scheduler(Kind::first, {}); }
    static Scheduler random() { return Scheduler(Kind::random, {}); }
    static Scheduler scripted(std::vector<std::string> script) { return Scheduler(Kind::scripted, std::move(script)); }

    // `enabled` is non-empty, in alphabet order.
    std::string pick(const std::vector<std::string>& enabled, Rng& rng);

private:
    Scheduler(Kind kind, std::vector<std::string> script) : kind_(kind), script_(std::move(script)) {}

    Kind kind_;
    std::vector<std::string> script_;
    std::size_t cursor_ = 0;
};

// Throws validation_error on a non-live model.
RunTrace mmdp_run(const Mmdp& m, std::size_t steps, std::uint64_t seed, Resolver resolver, Scheduler scheduler);

Mmdp mmdp_product(const Mmdp& m1, const Mmdp& m2);
// Does m2 simulate m1?
Verdict mmdp_simulates(const Mmdp& m1, const Mmdp& m2);
bool simulation_equivalent(const Mmdp& m1, const Mmdp& m2);

void require_same_alphabet(const std::vector<std::string>& a, const std::vector<std::string>& b, const char* what);

} // namespace mixspec
