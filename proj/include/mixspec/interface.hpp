#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mixspec/fixpoint.hpp"
#include "mixspec/mixed_state.hpp"
#include "mixspec/mmdp.hpp"

namespace mixspec {

// Modal interface: may transitions bound what models can do, must transitions what they
// have to do. An absent initial state denotes the unsatisfiable interface.
class MixedInterface {
public:
    using Transitions = std::map<TransitionKey, MixedState>;

    MixedInterface(std::vector<std::string> actions, VariableSet variables, std::vector<State> states,
                   std::optional<State> initial, Transitions may, Transitions must);

    const std::vector<std::string>& actions() const { return actions_; }
    const VariableSet& variables() const { return variables_; }
    const std::vector<State>& states() const { return states_; } // canonical order
    const std::optional<State>& initial() const { return initial_; }
    const Transitions& may() const { return may_; }
    const Transitions& must() const { return must_; }
    const MixedState* may(const State& q, const std::string& action) const;
    const MixedState* must(const State& q, const std::string& action) const;
    bool has_state(const State& q) const;

    bool operator==(const MixedInterface&) const = default;

private:
    std::vector<std::string> actions_;
    VariableSet variables_;
    std::vector<State> states_;
    std::optional<State> initial_;
    Transitions may_, must_;
};

struct InterfaceReport {
    bool valid = true;
    std::vector<std::string> issues;
};
InterfaceReport validate_interface(const MixedInterface& c);

std::vector<State> inconsistent_states(const MixedInterface& c);
MixedInterface prune(const MixedInterface& c);

// Does the live model m satisfy c?
Verdict satisfies(const Mmdp& m, const MixedInterface& c);
// Does c1 refine c2?
Verdict refines(const MixedInterface& c1, const MixedInterface& c2);

MixedInterface pre_conjoin(const MixedInterface& c1, const MixedInterface& c2);
MixedInterface conjoin(const MixedInterface& c1, const MixedInterface& c2);
MixedInterface compose_interfaces(const MixedInterface& c1, const MixedInterface& c2);

} // namespace mixspec
