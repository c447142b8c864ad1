#include "mixspec/mixed_state.hpp"

#include "mixspec/errors.hpp"

namespace mixspec {

MixedState MixedState::top(VariableSet variables) {
    return MixedState({MixedFactor{std::move(variables), true, {}}});
}

MixedState MixedState::of(VariableSet variables, std::vector<MixedSystem> systems) {
    return MixedState({MixedFactor{std::move(variables), false, std::move(systems)}});
}

MixedState::MixedState(std::vector<MixedFactor> factors) : factors_(std::move(factors)) {
    if (factors_.empty())
        throw validation_error("mixed state without factors");
    VariableSet seen;
    for (const auto& f : factors_) {
        seen = seen.unite(f.variables);
        for (const auto& s : f.systems)
            if (!(s.variables() == f.variables))
                throw validation_error("member system variables differ from the mixed state's variables");
        if (f.top && !f.systems.empty())
            throw validation_error("top factor with explicit members");
    }
}

VariableSet MixedState::variables() const {
    VariableSet vars;
    for (const auto& f : factors_)
        vars = vars.unite(f.variables);
    return vars;
}

bool MixedState::is_concrete() const {
    for (const auto& f : factors_)
        if (f.top)
            return false;
    return true;
}

std::vector<MixedSystem> MixedState::members() const {
    if (!is_concrete())
        throw validation_error("cannot enumerate the members of a mixed state containing Top");
    std::vector<MixedSystem> acc = factors_.front().systems;
    for (std::size_t i = 1; i < factors_.size(); ++i) {
        std::vector<MixedSystem> next;
        for (const auto& a : acc)
            for (const auto& b : factors_[i].systems)
                next.push_back(product(a, b));
        acc = std::move(next);
    }
    return acc;
}

MixedState MixedState::flattened() const {
    if (!is_concrete() || factors_.size() == 1)
        return *this;
    return MixedState::of(variables(), members());
}

MixedState product_mixed_states(const MixedState& a, const MixedState& b) {
    (void)a.variables().unite(b.variables());
    std::vector<MixedFactor> factors = a.factors();
    factors.insert(factors.end(), b.factors().begin(), b.factors().end());
    return MixedState(std::move(factors));
}

namespace {

std::vector<MixedSystem> intersect_lists(const std::vector<MixedSystem>& a, const std::vector<MixedSystem>& b) {
    std::vector<MixedSystem> out;
    for (const auto& s : a)
        for (const auto& t : b)
            if (equivalent(s, t)) {
                out.push_back(s);
                break;
            }
    return out;
}

bool same_layout(const MixedState& a, const MixedState& b) {
    if (a.factors().size() != b.factors().size())
        return false;
    for (std::size_t i = 0; i < a.factors().size(); ++i)
        if (!(a.factors()[i].variables == b.factors()[i].variables))
            return false;
    return true;
}

} // namespace

MixedState intersect_mixed_states(const MixedState& a, const MixedState& b) {
    if (!(a.variables() == b.variables()))
        throw validation_error("intersecting mixed states over different variables");
    if (b.is_top())
        return a;
    if (a.is_top())
        return b;
    if (same_layout(a, b)) {
        std::vector<MixedFactor> factors;
        for (std::size_t i = 0; i < a.factors().size(); ++i) {
            const auto& x = a.factors()[i];
            const auto& y = b.factors()[i];
            if (y.top)
                factors.push_back(x);
            else if (x.top)
                factors.push_back(y);
            else
                factors.push_back(MixedFactor{x.variables, false, intersect_lists(x.systems, y.systems)});
        }
        return MixedState(std::move(factors));
    }
    if (a.is_concrete() && b.is_concrete())
        return MixedState::of(a.variables(), intersect_lists(a.members(), b.members()));
    throw validation_error("cannot intersect symbolic mixed states with different factor layouts");
}

bool has_consistent_member(const MixedState& s) {
    // Top factors contain Dirac systems on every state, and shared variables are declared
    // identically, so a product is consistent exactly when its concrete part is.
    std::vector<MixedFactor> concrete;
    for (const auto& f : s.factors())
        if (!f.top)
            concrete.push_back(f);
    if (concrete.empty())
        return true;
    for (const auto& m : MixedState(std::move(concrete)).members())
        if (check_consistent(m))
            return true;
    return false;
}

} // namespace mixspec
