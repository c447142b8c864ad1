#include "mixspec/interface.hpp"

#include <algorithm>
#include <set>

#include "mixspec/errors.hpp"

namespace mixspec {

MixedInterface::MixedInterface(std::vector<std::string> actions, VariableSet variables, std::vector<State> states,
                               std::optional<State> initial, Transitions may, Transitions must)
    : actions_(std::move(actions)), variables_(std::move(variables)), states_(std::move(states)),
      initial_(std::move(initial)), may_(std::move(may)), must_(std::move(must)) {
    std::sort(actions_.begin(), actions_.end());
    if (std::adjacent_find(actions_.begin(), actions_.end()) != actions_.end())
        throw validation_error("action listed twice in the alphabet");
    for (const auto& q : states_)
        variables_.require_admits(q, "interface state");
    variables_.sort_canonical(states_);
    if (initial_)
        variables_.require_admits(*initial_, "interface initial state");
    for (const auto* map : {&may_, &must_})
        for (const auto& [key, target] : *map) {
            variables_.require_admits(key.first, "interface transition source");
            if (!std::binary_search(actions_.begin(), actions_.end(), key.second))
                throw validation_error("interface transition on action '" + key.second + "' outside the alphabet");
        }
}

const MixedState* MixedInterface::may(const State& q, const std::string& action) const {
    auto it = may_.find({q, action});
    return it == may_.end() ? nullptr : &it->second;
}

const MixedState* MixedInterface::must(const State& q, const std::string& action) const {
    auto it = must_.find({q, action});
    return it == must_.end() ? nullptr : &it->second;
}

bool MixedInterface::has_state(const State& q) const {
    return std::binary_search(states_.begin(), states_.end(), q,
                              [this](const State& a, const State& b) { return variables_.canonical_less(a, b); });
}

InterfaceReport validate_interface(const MixedInterface& c) {
    InterfaceReport report;
    auto issue = [&](std::string msg) {
        report.valid = false;
        report.issues.push_back(std::move(msg));
    };
    if (c.initial() && !c.has_state(*c.initial()))
        issue("initial state {" + c.initial()->str() + "} is not among the interface states");
    for (const auto* map : {&c.may(), &c.must()}) {
        const char* kind = map == &c.may() ? "may" : "must";
        for (const auto& [key, target] : *map) {
            std::string where = std::string(kind) + " target at {" + key.first.str() + "} on '" + key.second + "'";
            if (!c.has_state(key.first))
                issue(where + ": source is not an interface state");
            if (!(target.variables() == c.variables())) {
                issue(where + ": member systems are over different variables");
                continue;
            }
            for (const auto& f : target.factors())
                for (const auto& s : f.systems)
                    for (const auto& a : s.atoms())
                        for (const auto& q : a.row)
                            if (target.factors().size() == 1 && !c.has_state(q))
                                issue(where + ": atom '" + a.id + "' admits {" + q.str() +
                                      "}, which is not an interface state");
        }
    }
    return report;
}

namespace {

bool must_unrealizable(const MixedState& must, const MixedState* may) {
    return !may || !has_consistent_member(intersect_mixed_states(must, *may));
}

// Flatten, restrict rows to `keep` and drop inconsistent members; symbolic targets are left as is.
MixedState tidy(const MixedState& s, const std::vector<State>& keep) {
    MixedState flat = s.flattened();
    if (!flat.is_concrete())
        return flat;
    std::vector<MixedSystem> kept;
    for (const auto& m : flat.factors().front().systems) {
        MixedSystem r = restrict_rows(m, keep);
        if (check_consistent(r))
            kept.push_back(std::move(r));
    }
    return MixedState::of(flat.variables(), std::move(kept));
}

} // namespace

std::vector<State> inconsistent_states(const MixedInterface& c) {
    std::set<State> bad;
    for (const auto& [key, must] : c.must())
        if (must_unrealizable(must, c.may(key.first, key.second)))
            bad.insert(key.first);
    std::vector<State> out(bad.begin(), bad.end());
    c.variables().sort_canonical(out);
    return out;
}

MixedInterface prune(const MixedInterface& c) {
    MixedInterface::Transitions may = c.may();
    MixedInterface::Transitions must = c.must();
    for (auto& [key, target] : must)
        if (auto it = may.find(key); it != may.end())
            target = intersect_mixed_states(target, it->second);

    std::vector<State> states = c.states();
    for (;;) {
        std::vector<State> keep = states;
        std::sort(keep.begin(), keep.end());
        for (auto* map : {&may, &must})
            for (auto& [key, target] : *map)
                target = tidy(target, keep);
        std::erase_if(may, [](const auto& kv) {
            return kv.second.is_concrete() && kv.second.factors().front().systems.empty();
        });

        std::set<State> bad;
        for (const auto& [key, target] : must) {
            auto it = may.find(key);
            if (must_unrealizable(target, it == may.end() ? nullptr : &it->second))
                bad.insert(key.first);
        }
        if (bad.empty())
            break;
        std::erase_if(states, [&](const State& q) { return bad.count(q) > 0; });
        for (auto* map : {&may, &must})
            std::erase_if(*map, [&](const auto& kv) { return bad.count(kv.first.first) > 0; });
    }

    std::optional<State> initial = c.initial();
    if (initial && std::find(states.begin(), states.end(), *initial) == states.end())
        initial.reset();
    return MixedInterface(c.actions(), c.variables(), std::move(states), std::move(initial), std::move(may),
                          std::move(must));
}

namespace {

MixedInterface::Transitions flattened(const MixedInterface::Transitions& t) {
    MixedInterface::Transitions out;
    for (const auto& [key, target] : t)
        out.emplace(key, target.flattened());
    return out;
}

const MixedState* lookup(const MixedInterface::Transitions& t, const State& q, const std::string& a) {
    auto it = t.find({q, a});
    return it == t.end() ? nullptr : &it->second;
}

} // namespace

Verdict satisfies(const Mmdp& m, const MixedInterface& c) {
    if (!validate_mmdp(m).live)
        throw validation_error("satisfaction needs a live MMDP");
    Verdict v;
    if (!c.initial()) {
        v.relation = StateRelation(m.variables(), c.variables());
        v.counterexample = Counterexample{m.initial(), State(), "", "interface has no initial state"};
        return v;
    }
    std::set<std::string> alphabet(m.actions().begin(), m.actions().end());
    alphabet.insert(c.actions().begin(), c.actions().end());
    auto may = flattened(c.may());
    auto must = flattened(c.must());

    PairSpace space(m.states(), c.states());
    std::vector<char> alive(space.size());
    for (std::size_t p = 0; p < space.size(); ++p)
        alive[p] = observably_compatible(m.variables(), space.left_state(p), c.variables(), space.right_state(p));

    auto result = greatest_fixpoint(alive, [&](std::size_t p, const std::vector<char>& snapshot) -> std::optional<Failure> {
        const State& r = space.left_state(p);
        const State& q = space.right_state(p);
        RelationView rel = space.view(snapshot);
        for (const auto& a : alphabet) {
            const MixedSystem* s = m.transition(r, a);
            if (s) {
                const MixedState* allowed = lookup(may, q, a);
                if (!allowed)
                    return Failure{a, "model action has no may transition"};
                if (!member_lift(*s, *allowed, rel))
                    return Failure{a, "model system is not in the lifted may target"};
            }
            if (const MixedState* required = lookup(must, q, a)) {
                if (!s)
                    return Failure{a, "must transition not implemented by the model"};
                if (!member_lift(*s, *required, rel))
                    return Failure{a, "model system is not in the lifted must target"};
            }
        }
        return std::nullopt;
    });

    v.iterations = result.iterations;
    v.relation = space.relation(m.variables(), c.variables(), result.alive);
    auto ci = space.right_index(*c.initial());
    if (!ci) {
        v.counterexample = Counterexample{m.initial(), *c.initial(), "", "interface initial state is not a state"};
        return v;
    }
    std::size_t init = space.index(*space.left_index(m.initial()), *ci);
    v.holds = result.alive[init];
    if (!v.holds) {
        Counterexample cx{m.initial(), *c.initial(), "", "observable variables disagree"};
        if (const auto& f = result.failures[init]) {
            cx.action = f->action;
            cx.reason = f->reason;
        }
        v.counterexample = cx;
    }
    return v;
}

Verdict refines(const MixedInterface& c1, const MixedInterface& c2) {
    require_same_alphabet(c1.actions(), c2.actions(), "refines");
    Verdict v;
    v.relation = StateRelation(c1.variables(), c2.variables());
    if (!c1.initial()) {
        v.holds = true;
        return v;
    }
    if (!c2.initial()) {
        v.counterexample = Counterexample{*c1.initial(), State(), "", "refined interface has no initial state"};
        return v;
    }
    auto may1 = flattened(c1.may()), may2 = flattened(c2.may());
    auto must1 = flattened(c1.must()), must2 = flattened(c2.must());

    PairSpace space(c1.states(), c2.states());
    std::vector<char> alive(space.size());
    for (std::size_t p = 0; p < space.size(); ++p)
        alive[p] = observably_compatible(c1.variables(), space.left_state(p), c2.variables(), space.right_state(p));

    auto result = greatest_fixpoint(alive, [&](std::size_t p, const std::vector<char>& snapshot) -> std::optional<Failure> {
        const State& q1 = space.left_state(p);
        const State& q2 = space.right_state(p);
        RelationView rel = space.view(snapshot);
        for (const auto& a : c1.actions()) {
            if (const MixedState* m1 = lookup(may1, q1, a)) {
                const MixedState* m2 = lookup(may2, q2, a);
                if (!m2)
                    return Failure{a, "may transition not allowed by the refined interface"};
                if (!subset_lift(*m1, *m2, rel))
                    return Failure{a, "may target not included in the lifted may target"};
            }
            if (const MixedState* m2 = lookup(must2, q2, a)) {
                const MixedState* m1 = lookup(must1, q1, a);
                if (!m1)
                    return Failure{a, "must transition of the refined interface is missing"};
                if (!subset_lift(*m1, *m2, rel))
                    return Failure{a, "must target not included in the lifted must target"};
            }
        }
        return std::nullopt;
    });

    v.iterations = result.iterations;
    v.relation = space.relation(c1.variables(), c2.variables(), result.alive);
    auto i1 = space.left_index(*c1.initial());
    auto i2 = space.right_index(*c2.initial());
    v.holds = i1 && i2 && result.alive[space.index(*i1, *i2)];
    if (!v.holds) {
        Counterexample cx{*c1.initial(), *c2.initial(), "", "observable variables disagree"};
        if (!i1 || !i2)
            cx.reason = "initial state is not an interface state";
        else if (const auto& f = result.failures[space.index(*i1, *i2)]) {
            cx.action = f->action;
            cx.reason = f->reason;
        }
        v.counterexample = cx;
    }
    return v;
}

} // namespace mixspec
