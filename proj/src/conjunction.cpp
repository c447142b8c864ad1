#include <deque>
#include <set>

#include "mixspec/errors.hpp"
#include "mixspec/interface.hpp"

namespace mixspec {

namespace {

enum class Mode { conjunction, composition };

void collect_targets(const MixedState& s, std::set<State>& seen, std::deque<State>& queue) {
    MixedState flat = s.flattened();
    if (!flat.is_concrete())
        return;
    for (const auto& m : flat.factors().front().systems)
        for (const auto& a : m.atoms())
            for (const auto& q : a.row)
                if (seen.insert(q).second)
                    queue.push_back(q);
}

MixedInterface combine(const MixedInterface& c1, const MixedInterface& c2, Mode mode) {
    const char* what = mode == Mode::conjunction ? "conjoin" : "compose_interfaces";
    require_same_alphabet(c1.actions(), c2.actions(), what);
    VariableSet vars = c1.variables().unite(c2.variables());
    std::optional<State> initial;
    if (c1.initial() && c2.initial())
        initial = join_states(*c1.initial(), *c2.initial());
    if (!initial)
        return MixedInterface(c1.actions(), vars, {}, std::nullopt, {}, {});

    const auto n1 = c1.variables().names();
    const auto n2 = c2.variables().names();
    MixedInterface::Transitions may, must;
    std::vector<State> states;
    std::set<State> seen{*initial};
    std::deque<State> queue{*initial};
    while (!queue.empty()) {
        State q = queue.front();
        queue.pop_front();
        State q1 = project_state(q, n1), q2 = project_state(q, n2);
        if (!c1.has_state(q1) || !c2.has_state(q2))
            continue;
        states.push_back(q);
        for (const auto& a : c1.actions()) {
            const MixedState* may1 = c1.may(q1, a);
            const MixedState* may2 = c2.may(q2, a);
            const MixedState* must1 = c1.must(q1, a);
            const MixedState* must2 = c2.must(q2, a);
            if (may1 && may2) {
                MixedState joint = product_mixed_states(*may1, *may2);
                if (mode == Mode::composition)
                    joint = joint.flattened();
                collect_targets(joint, seen, queue);
                may.emplace(TransitionKey{q, a}, std::move(joint));
            }
            std::optional<MixedState> required;
            if (must1 && must2)
                required = product_mixed_states(*must1, *must2);
            else if (mode == Mode::conjunction && must1)
                required = product_mixed_states(*must1, MixedState::top(c2.variables()));
            else if (mode == Mode::conjunction && must2)
                required = product_mixed_states(MixedState::top(c1.variables()), *must2);
            if (required) {
                if (mode == Mode::composition)
                    required = required->flattened();
                collect_targets(*required, seen, queue);
                must.emplace(TransitionKey{q, a}, std::move(*required));
            }
        }
    }
    bool init_ok = !states.empty() && states.front() == *initial;
    return MixedInterface(c1.actions(), vars, std::move(states), init_ok ? initial : std::nullopt, std::move(may),
                          std::move(must));
}

} // namespace

MixedInterface pre_conjoin(const MixedInterface& c1, const MixedInterface& c2) {
    return combine(c1, c2, Mode::conjunction);
}

MixedInterface conjoin(const MixedInterface& c1, const MixedInterface& c2) { return prune(pre_conjoin(c1, c2)); }

MixedInterface compose_interfaces(const MixedInterface& c1, const MixedInterface& c2) {
    return combine(c1, c2, Mode::composition);
}

} // namespace mixspec
