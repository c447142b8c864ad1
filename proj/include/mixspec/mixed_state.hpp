#pragma once

#include <vector>

#include "mixspec/mixed_system.hpp"

namespace mixspec {

// One factor of a mixed state: either every system over `variables` (Top) or an explicit list.
struct MixedFactor {
    VariableSet variables;
    bool top = false;
    std::vector<MixedSystem> systems;

    bool operator==(const MixedFactor&) const = default;
};

// A set of mixed systems written as the product of its factors. Plain sets have one
// concrete factor; Top(X) has one top factor. Products stay factored until expanded.
class MixedState {
public:
    static MixedState top(VariableSet variables);
    static MixedState of(VariableSet variables, std::vector<MixedSystem> systems);
    explicit MixedState(std::vector<MixedFactor> factors);

    const std::vector<MixedFactor>& factors() const { return factors_; }
    VariableSet variables() const;

    bool is_top() const { return factors_.size() == 1 && factors_.front().top; }
    bool is_concrete() const;
    // Pairwise products of the factors. Throws validation_error when a factor is Top.
    std::vector<MixedSystem> members() const;
    // Single concrete factor holding the expansion; unchanged when not concrete.
    MixedState flattened() const;

    bool operator==(const MixedState&) const = default;

private:
    std::vector<MixedFactor> factors_;
};

MixedState product_mixed_states(const MixedState& a, const MixedState& b);
// Members of `a` with an equivalent member in `b`; Top is the identity.
MixedState intersect_mixed_states(const MixedState& a, const MixedState& b);
bool has_consistent_member(const MixedState& s);

} // namespace mixspec
