#include "mixspec/mmdp.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "mixspec/errors.hpp"

namespace mixspec {

namespace {

std::vector<std::string> normalize_alphabet(std::vector<std::string> actions) {
    std::sort(actions.begin(), actions.end());
    if (std::adjacent_find(actions.begin(), actions.end()) != actions.end())
        throw validation_error("action listed twice in the alphabet");
    return actions;
}

} // namespace

void require_same_alphabet(const std::vector<std::string>& a, const std::vector<std::string>& b, const char* what) {
    if (a != b)
        throw validation_error(std::string(what) + ": alphabets differ");
}

Mmdp::Mmdp(std::vector<std::string> actions, VariableSet variables, State initial,
           std::map<TransitionKey, MixedSystem> transitions)
    : actions_(normalize_alphabet(std::move(actions))), variables_(std::move(variables)),
      initial_(std::move(initial)), transitions_(std::move(transitions)) {
    variables_.require_admits(initial_, "mmdp initial state");
    for (const auto& [key, s] : transitions_) {
        variables_.require_admits(key.first, "mmdp transition source");
        if (!std::binary_search(actions_.begin(), actions_.end(), key.second))
            throw validation_error("mmdp transition on action '" + key.second + "' outside the alphabet");
        if (!(s.variables() == variables_))
            throw validation_error("mmdp transition target at {" + key.first.str() + "} on '" + key.second +
                                   "' is over different variables");
    }
    std::set<State> seen{initial_};
    std::deque<State> queue{initial_};
    while (!queue.empty()) {
        State r = queue.front();
        queue.pop_front();
        for (auto it = transitions_.lower_bound({r, std::string()}); it != transitions_.end() && it->first.first == r;
             ++it)
            for (const auto& a : it->second.atoms())
                for (const auto& q : a.row)
                    if (seen.insert(q).second)
                        queue.push_back(q);
    }
    states_.assign(seen.begin(), seen.end());
    variables_.sort_canonical(states_);
}

const MixedSystem* Mmdp::transition(const State& r, const std::string& action) const {
    auto it = transitions_.find({r, action});
    return it == transitions_.end() ? nullptr : &it->second;
}

std::vector<std::string> Mmdp::enabled(const State& r) const {
    std::vector<std::string> out;
    for (auto it = transitions_.lower_bound({r, std::string()}); it != transitions_.end() && it->first.first == r; ++it)
        out.push_back(it->first.second);
    return out;
}

MmdpReport validate_mmdp(const Mmdp& m) {
    MmdpReport report;
    for (const auto& [key, s] : m.transitions())
        if (!check_consistent(s)) {
            report.live = false;
            report.issues.push_back("transition at {" + key.first.str() + "} on '" + key.second +
                                    "' targets an inconsistent system");
        }
    return report;
}

std::string Scheduler::pick(const std::vector<std::string>& enabled, Rng& rng) {
    switch (kind_) {
    case Kind::first:
        return enabled.front();
    case Kind::random:
        return enabled[uniform_below(rng, mpz_class(static_cast<unsigned long>(enabled.size()))).get_ui()];
    case Kind::scripted: {
        if (cursor_ >= script_.size())
            throw resolver_exhausted("scripted scheduler exhausted after " + std::to_string(cursor_) + " picks");
        const std::string& a = script_[cursor_++];
        if (std::find(enabled.begin(), enabled.end(), a) == enabled.end())
            throw validation_error("scripted scheduler action '" + a + "' is not enabled");
        return a;
    }
    }
    return enabled.front();
}

RunTrace mmdp_run(const Mmdp& m, std::size_t steps, std::uint64_t seed, Resolver resolver, Scheduler scheduler) {
    if (!validate_mmdp(m).live)
        throw validation_error("mmdp_run needs a live MMDP");
    Rng rng(seed);
    RunTrace trace;
    State r = m.initial();
    for (std::size_t k = 0; k < steps; ++k) {
        auto enabled = m.enabled(r);
        if (enabled.empty())
            break;
        std::string action = scheduler.pick(enabled, rng);
        Outcome out = sample_outcome(*m.transition(r, action), rng, resolver);
        trace.steps.push_back({r, action, out.atom, out.state});
        r = out.state;
    }
    return trace;
}

Mmdp mmdp_product(const Mmdp& m1, const Mmdp& m2) {
    require_same_alphabet(m1.actions(), m2.actions(), "mmdp_product");
    VariableSet vars = m1.variables().unite(m2.variables());
    auto init = join_states(m1.initial(), m2.initial());
    if (!init)
        throw validation_error("mmdp_product: initial states are incompatible");
    const auto n1 = m1.variables().names();
    const auto n2 = m2.variables().names();
    std::map<TransitionKey, MixedSystem> transitions;
    std::set<State> seen{*init};
    std::deque<State> queue{*init};
    while (!queue.empty()) {
        State r = queue.front();
        queue.pop_front();
        State r1 = project_state(r, n1), r2 = project_state(r, n2);
        for (const auto& a : m1.actions()) {
            const MixedSystem* s1 = m1.transition(r1, a);
            const MixedSystem* s2 = m2.transition(r2, a);
            if (!s1 || !s2)
                continue;
            MixedSystem joint = product(*s1, *s2);
            for (const auto& atom : joint.atoms())
                for (const auto& q : atom.row)
                    if (seen.insert(q).second)
                        queue.push_back(q);
            transitions.emplace(TransitionKey{r, a}, std::move(joint));
        }
    }
    return Mmdp(m1.actions(), std::move(vars), *init, std::move(transitions));
}

Verdict mmdp_simulates(const Mmdp& m1, const Mmdp& m2) {
    require_same_alphabet(m1.actions(), m2.actions(), "mmdp_simulates");
    PairSpace space(m1.states(), m2.states());
    std::vector<char> alive(space.size());
    for (std::size_t p = 0; p < space.size(); ++p)
        alive[p] = observably_compatible(m1.variables(), space.left_state(p), m2.variables(), space.right_state(p));

    auto result = greatest_fixpoint(alive, [&](std::size_t p, const std::vector<char>& snapshot) -> std::optional<Failure> {
        const State& r1 = space.left_state(p);
        const State& r2 = space.right_state(p);
        RelationView rel = space.view(snapshot);
        for (const auto& a : m1.actions()) {
            const MixedSystem* s1 = m1.transition(r1, a);
            if (!s1)
                continue;
            const MixedSystem* s2 = m2.transition(r2, a);
            if (!s2)
                return Failure{a, "simulating state does not enable the action"};
            if (!lift_check(*s1, *s2, rel))
                return Failure{a, "target systems are not related by the lifted relation"};
        }
        return std::nullopt;
    });

    Verdict v;
    v.iterations = result.iterations;
    v.relation = space.relation(m1.variables(), m2.variables(), result.alive);
    std::size_t init = space.index(*space.left_index(m1.initial()), *space.right_index(m2.initial()));
    v.holds = result.alive[init];
    if (!v.holds) {
        Counterexample cx{m1.initial(), m2.initial(), "", "observable variables disagree"};
        if (const auto& f = result.failures[init]) {
            cx.action = f->action;
            cx.reason = f->reason;
        }
        v.counterexample = cx;
    }
    return v;
}

bool simulation_equivalent(const Mmdp& m1, const Mmdp& m2) {
    return mmdp_simulates(m1, m2).holds && mmdp_simulates(m2, m1).holds;
}

} // namespace mixspec
