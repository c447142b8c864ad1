#pragma once

#include <functional>
#include <optional>
#include <set>
#include <utility>

#include "mixspec/mixed_state.hpp"
#include "mixspec/mixed_system.hpp"
#include "mixspec/transport.hpp"

namespace mixspec {

class StateRelation {
public:
    StateRelation() = default;
    StateRelation(VariableSet left, VariableSet right, std::set<std::pair<State, State>> pairs = {});

    static StateRelation identity(const VariableSet& vars, const std::vector<State>& states);

    const VariableSet& left() const { return left_; }
    const VariableSet& right() const { return right_; }
    const std::set<std::pair<State, State>>& pairs() const { return pairs_; }

    bool contains(const State& a, const State& b) const { return pairs_.count({a, b}) > 0; }
    bool has_successor(const State& a) const;
    void insert(const State& a, const State& b);
    StateRelation transposed() const;

    bool operator==(const StateRelation&) const = default;

private:
    VariableSet left_, right_;
    std::set<std::pair<State, State>> pairs_;
};

// Relation as used by the fixpoint engines: membership plus successor existence.
struct RelationView {
    std::function<bool(const State&, const State&)> related;
    std::function<bool(const State&)> has_successor;
};
RelationView view_of(const StateRelation& rho);

Marginal marginal_of(const MixedSystem& s);

// (ω1,ω2) such that every admissible state of ω1 has a related admissible state of ω2.
std::set<AtomPair> lift_edges(const MixedSystem& s1, const MixedSystem& s2, const RelationView& rho);

std::optional<CouplingWitness> lift_check(const MixedSystem& s1, const MixedSystem& s2, const StateRelation& rho);
std::optional<CouplingWitness> lift_check(const MixedSystem& s1, const MixedSystem& s2, const RelationView& rho);

// s ∈^ρ ss
bool member_lift(const MixedSystem& s, const MixedState& ss, const RelationView& rho);
// ss1 ⊆^ρ ss2
bool subset_lift(const MixedState& ss1, const MixedState& ss2, const StateRelation& rho);
bool subset_lift(const MixedState& ss1, const MixedState& ss2, const RelationView& rho);

StateRelation compose_relations(const StateRelation& r12, const StateRelation& r23);
CouplingWitness compose_witnesses(const CouplingWitness& w12, const CouplingWitness& w23);

} // namespace mixspec
