#include "mixspec/embeddings.hpp"

#include <algorithm>
#include <cstdlib>

#include "mixspec/errors.hpp"

namespace mixspec {

namespace {

void sort_unique(std::vector<std::string>& v, const char* what) {
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end())
        throw validation_error(std::string(what) + " listed twice");
}

bool known(const std::vector<std::string>& sorted, const std::string& x) {
    return std::binary_search(sorted.begin(), sorted.end(), x);
}

void require_known(const std::vector<std::string>& states, const std::string& q, const char* what) {
    if (!known(states, q))
        throw validation_error(std::string(what) + " '" + q + "' is not a declared state");
}

void normalize_distribution(Distribution& d, const std::vector<std::string>& states, const std::string& where) {
    Rational total;
    for (const auto& [q, w] : d) {
        require_known(states, q, "distribution target");
        if (w.is_negative())
            throw validation_error(where + ": negative probability " + w.str());
        total += w;
    }
    if (total != Rational(1))
        throw validation_error(where + ": probabilities sum to " + total.str() + ", expected 1/1");
    std::erase_if(d, [](const auto& kv) { return kv.second.is_zero(); });
}

void normalize_family(std::vector<Distribution>& family, const std::vector<std::string>& states, const std::string& where) {
    for (auto& d : family)
        normalize_distribution(d, states, where);
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
}

std::set<std::string> restrict_props(const std::set<std::string>& v, const std::vector<std::string>& props) {
    std::set<std::string> out;
    for (const auto& a : v)
        if (known(props, a))
            out.insert(a);
    return out;
}

// Dense transport between two distributions over named states with edges given by `related`.
template <class Related>
bool distributions_couple(const Distribution& mu, const Distribution& nu, Related&& related) {
    std::vector<Rational> supply, demand;
    std::vector<const std::string*> left, right;
    for (const auto& [q, w] : mu) {
        supply.push_back(w);
        left.push_back(&q);
    }
    for (const auto& [q, w] : nu) {
        demand.push_back(w);
        right.push_back(&q);
    }
    std::vector<std::vector<char>> allowed(left.size(), std::vector<char>(right.size()));
    for (std::size_t i = 0; i < left.size(); ++i)
        for (std::size_t j = 0; j < right.size(); ++j)
            allowed[i][j] = related(*left[i], *right[j]);
    return solve_transport(supply, demand, allowed).has_value();
}

struct NamedSpace {
    std::vector<std::string> left, right;
    std::size_t index(std::size_t i, std::size_t j) const { return i * right.size() + j; }
    std::size_t li(const std::string& q) const {
        return static_cast<std::size_t>(std::lower_bound(left.begin(), left.end(), q) - left.begin());
    }
    std::size_t ri(const std::string& q) const {
        return static_cast<std::size_t>(std::lower_bound(right.begin(), right.end(), q) - right.begin());
    }
    auto related(const std::vector<char>& alive) const {
        return [this, &alive](const std::string& a, const std::string& b) { return alive[index(li(a), ri(b))] != 0; };
    }
};

NamedVerdict finish(const NamedSpace& space, const FixpointResult& result, const std::string& i1, const std::string& i2) {
    NamedVerdict v;
    v.iterations = result.iterations;
    for (std::size_t i = 0; i < space.left.size(); ++i)
        for (std::size_t j = 0; j < space.right.size(); ++j)
            if (result.alive[space.index(i, j)])
                v.relation.emplace(space.left[i], space.right[j]);
    std::size_t init = space.index(space.li(i1), space.ri(i2));
    v.holds = result.alive[init];
    if (!v.holds) {
        NamedCounterexample cx{i1, i2, "", "valuations disagree"};
        if (const auto& f = result.failures[init]) {
            cx.action = f->action;
            cx.reason = f->reason;
        }
        v.counterexample = cx;
    }
    return v;
}

State chain_state(const std::string& variable, const std::string& q, const std::set<std::string>& valuation,
                  const std::vector<std::string>& props) {
    std::vector<State::Binding> b{{variable, q}};
    for (const auto& a : props)
        b.emplace_back(proposition_variable(a), valuation.count(a) ? "1" : "0");
    return State(std::move(b));
}

VariableSet chain_variables(const std::string& variable, const std::vector<std::string>& states,
                            const std::vector<std::string>& props) {
    std::vector<VariableDecl> decls{{variable, states, false}};
    for (const auto& a : props)
        decls.push_back({proposition_variable(a), {"0", "1"}, true});
    return VariableSet(std::move(decls));
}

} // namespace

void ProbAutomaton::normalize() {
    sort_unique(actions, "action");
    sort_unique(states, "state");
    require_known(states, initial, "initial state");
    for (auto& [key, family] : transitions) {
        require_known(states, key.first, "transition source");
        if (!known(actions, key.second))
            throw validation_error("transition action '" + key.second + "' is not in the alphabet");
        normalize_family(family, states, "transition at '" + key.first + "' on '" + key.second + "'");
    }
}

void MarkovChain::normalize() {
    sort_unique(states, "state");
    sort_unique(propositions, "proposition");
    require_known(states, initial, "initial state");
    for (const auto& q : states)
        if (!matrix.count(q))
            throw validation_error("state '" + q + "' has no transition row");
    for (auto& [q, row] : matrix) {
        require_known(states, q, "matrix row");
        normalize_distribution(row, states, "row of '" + q + "'");
    }
    for (const auto& [q, v] : valuation) {
        require_known(states, q, "valuation of");
        for (const auto& a : v)
            if (!known(propositions, a))
                throw validation_error("valuation of '" + q + "' uses undeclared proposition '" + a + "'");
    }
    for (const auto& q : states)
        valuation[q];
}

void ConstraintMarkovChain::normalize() {
    sort_unique(states, "state");
    sort_unique(propositions, "proposition");
    require_known(states, initial, "initial state");
    for (auto& [q, family] : phi) {
        require_known(states, q, "constraint of");
        normalize_family(family, states, "constraint of '" + q + "'");
    }
    for (const auto& q : states) {
        phi[q];
        auto& vs = valuations[q];
        if (vs.empty())
            throw validation_error("state '" + q + "' has an empty valuation set");
    }
    for (auto& [q, vs] : valuations) {
        require_known(states, q, "valuations of");
        for (const auto& v : vs)
            for (const auto& a : v)
                if (!known(propositions, a))
                    throw validation_error("valuation of '" + q + "' uses undeclared proposition '" + a + "'");
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    }
}

std::string proposition_variable(const std::string& ap) { return "ap:" + ap; }

Mmdp pa_to_mmdp(const ProbAutomaton& p, const std::string& variable) {
    VariableSet vars({VariableDecl{variable, p.states, false}});
    auto st = [&](const std::string& q) { return State{{variable, q}}; };
    std::map<TransitionKey, MixedSystem> transitions;
    for (const auto& [key, family] : p.transitions) {
        if (family.empty())
            continue;
        // Ω = Q^n with the product probability; a tuple admits exactly its components.
        std::vector<std::vector<std::size_t>> tuples{{}};
        for (std::size_t k = 0; k < family.size(); ++k) {
            std::vector<std::vector<std::size_t>> next;
            for (const auto& t : tuples)
                for (std::size_t i = 0; i < p.states.size(); ++i) {
                    auto u = t;
                    u.push_back(i);
                    next.push_back(std::move(u));
                }
            tuples = std::move(next);
        }
        std::vector<Atom> atoms;
        atoms.reserve(tuples.size());
        for (const auto& t : tuples) {
            Atom a{"(", Rational(1), {}};
            for (std::size_t k = 0; k < t.size(); ++k) {
                const std::string& q = p.states[t[k]];
                a.id += (k ? "," : "") + q;
                auto it = family[k].find(q);
                a.weight *= it == family[k].end() ? Rational() : it->second;
                a.row.push_back(st(q));
            }
            a.id += ")";
            atoms.push_back(std::move(a));
        }
        transitions.emplace(TransitionKey{st(key.first), key.second}, MixedSystem(vars, std::move(atoms)));
    }
    return Mmdp(p.actions, vars, st(p.initial), std::move(transitions));
}

std::size_t selection_bound() {
    if (const char* env = std::getenv("MIXEDSPEC_SELECTION_BOUND")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0)
            return static_cast<std::size_t>(v);
    }
    return 4096;
}

ProbAutomaton mmdp_to_pa(const Mmdp& m) {
    if (!validate_mmdp(m).live)
        throw validation_error("mmdp_to_pa needs a live MMDP");
    const std::size_t bound = selection_bound();
    ProbAutomaton p;
    p.actions = m.actions();
    for (const auto& r : m.states())
        p.states.push_back(r.str());
    p.initial = m.initial().str();
    for (const auto& r : m.states())
        for (const auto& a : m.enabled(r)) {
            OutcomeTable table = outcome_distribution(*m.transition(r, a));
            std::size_t count = 1;
            for (const auto& row : table) {
                if (count > bound / row.states.size())
                    throw bound_exceeded("transition at {" + r.str() + "} on '" + a +
                                         "' has more selection functions than MIXEDSPEC_SELECTION_BOUND=" +
                                         std::to_string(bound));
                count *= row.states.size();
            }
            std::vector<Distribution> family;
            std::vector<std::size_t> choice(table.size(), 0);
            for (;;) {
                Distribution d;
                for (std::size_t i = 0; i < table.size(); ++i)
                    d[table[i].states[choice[i]].str()] += table[i].weight;
                family.push_back(std::move(d));
                std::size_t i = 0;
                while (i < table.size() && ++choice[i] == table[i].states.size())
                    choice[i++] = 0;
                if (i == table.size())
                    break;
            }
            p.transitions[{r.str(), a}] = std::move(family);
        }
    p.normalize();
    return p;
}

NamedVerdict pa_simulates(const ProbAutomaton& p1, const ProbAutomaton& p2) {
    require_same_alphabet(p1.actions, p2.actions, "pa_simulates");
    NamedSpace space{p1.states, p2.states};
    std::vector<char> alive(space.left.size() * space.right.size(), 1);
    auto family = [](const ProbAutomaton& p, const std::string& q, const std::string& a) -> const std::vector<Distribution>* {
        auto it = p.transitions.find({q, a});
        return it == p.transitions.end() ? nullptr : &it->second;
    };
    auto result = greatest_fixpoint(alive, [&](std::size_t pair, const std::vector<char>& snapshot) -> std::optional<Failure> {
        const std::string& s = space.left[pair / space.right.size()];
        const std::string& t = space.right[pair % space.right.size()];
        auto related = space.related(snapshot);
        for (const auto& a : p1.actions) {
            const auto* f1 = family(p1, s, a);
            if (!f1)
                continue;
            const auto* f2 = family(p2, t, a);
            for (const auto& mu : *f1) {
                bool matched = false;
                if (f2)
                    for (const auto& nu : *f2)
                        if (distributions_couple(mu, nu, related)) {
                            matched = true;
                            break;
                        }
                if (!matched)
                    return Failure{a, "distribution has no related counterpart"};
            }
        }
        return std::nullopt;
    });
    return finish(space, result, p1.initial, p2.initial);
}

ProbAutomaton pa_product(const ProbAutomaton& p1, const ProbAutomaton& p2) {
    require_same_alphabet(p1.actions, p2.actions, "pa_product");
    auto pair_name = [](const std::string& s, const std::string& t) { return "(" + s + "," + t + ")"; };
    ProbAutomaton p;
    p.actions = p1.actions;
    for (const auto& s : p1.states)
        for (const auto& t : p2.states)
            p.states.push_back(pair_name(s, t));
    p.initial = pair_name(p1.initial, p2.initial);
    for (const auto& [k1, f1] : p1.transitions)
        for (const auto& [k2, f2] : p2.transitions) {
            if (k1.second != k2.second)
                continue;
            std::vector<Distribution> family;
            for (const auto& mu : f1)
                for (const auto& nu : f2) {
                    Distribution d;
                    for (const auto& [s, x] : mu)
                        for (const auto& [t, y] : nu)
                            d[pair_name(s, t)] = x * y;
                    family.push_back(std::move(d));
                }
            p.transitions[{pair_name(k1.first, k2.first), k1.second}] = std::move(family);
        }
    p.normalize();
    return p;
}

Mmdp mc_to_mmdp(const MarkovChain& p, const std::string& variable) {
    VariableSet vars = chain_variables(variable, p.states, p.propositions);
    auto st = [&](const std::string& r) { return chain_state(variable, r, p.valuation.at(r), p.propositions); };
    std::map<TransitionKey, MixedSystem> transitions;
    for (const auto& r : p.states) {
        const Distribution& row = p.matrix.at(r);
        std::vector<Atom> atoms;
        for (const auto& target : p.states) {
            auto it = row.find(target);
            atoms.push_back({target, it == row.end() ? Rational() : it->second, {st(target)}});
        }
        transitions.emplace(TransitionKey{st(r), chain_action}, MixedSystem(vars, std::move(atoms)));
    }
    return Mmdp({chain_action}, vars, st(p.initial), std::move(transitions));
}

MixedInterface cmc_to_interface(const ConstraintMarkovChain& s, const std::optional<std::set<std::string>>& initial_valuation,
                                const std::string& variable) {
    VariableSet vars = chain_variables(variable, s.states, s.propositions);
    auto st = [&](const std::string& q, const std::set<std::string>& v) { return chain_state(variable, q, v, s.propositions); };
    std::vector<State> states;
    MixedInterface::Transitions may;
    for (const auto& q : s.states)
        for (const auto& v : s.valuations.at(q))
            states.push_back(st(q, v));
    for (const auto& q : s.states) {
        std::vector<MixedSystem> systems;
        for (const auto& pi : s.phi.at(q)) {
            std::vector<Atom> atoms;
            for (const auto& target : s.states) {
                auto it = pi.find(target);
                Atom a{target, it == pi.end() ? Rational() : it->second, {}};
                for (const auto& v : s.valuations.at(target))
                    a.row.push_back(st(target, v));
                atoms.push_back(std::move(a));
            }
            systems.emplace_back(vars, std::move(atoms));
        }
        if (systems.empty())
            continue;
        for (const auto& v : s.valuations.at(q))
            may.emplace(TransitionKey{st(q, v), chain_action}, MixedState::of(vars, systems));
    }
    const auto& v0s = s.valuations.at(s.initial);
    std::set<std::string> v0 = initial_valuation ? *initial_valuation : v0s.front();
    std::optional<State> initial;
    if (std::find(v0s.begin(), v0s.end(), v0) != v0s.end())
        initial = st(s.initial, v0);
    return MixedInterface({chain_action}, vars, std::move(states), initial, std::move(may), {});
}

NamedVerdict mc_satisfies_cmc(const MarkovChain& p, const ConstraintMarkovChain& s) {
    for (const auto& a : s.propositions)
        if (!known(p.propositions, a))
            throw validation_error("proposition '" + a + "' of the CMC is not a proposition of the chain");
    NamedSpace space{p.states, s.states};
    std::vector<char> alive(space.left.size() * space.right.size());
    for (std::size_t i = 0; i < space.left.size(); ++i)
        for (std::size_t j = 0; j < space.right.size(); ++j) {
            auto v = restrict_props(p.valuation.at(space.left[i]), s.propositions);
            const auto& allowed = s.valuations.at(space.right[j]);
            alive[space.index(i, j)] = std::find(allowed.begin(), allowed.end(), v) != allowed.end();
        }
    auto result = greatest_fixpoint(alive, [&](std::size_t pair, const std::vector<char>& snapshot) -> std::optional<Failure> {
        const std::string& r = space.left[pair / space.right.size()];
        const std::string& q = space.right[pair % space.right.size()];
        auto related = space.related(snapshot);
        for (const auto& pi : s.phi.at(q))
            if (distributions_couple(p.matrix.at(r), pi, related))
                return std::nullopt;
        return Failure{chain_action, "no admissible distribution couples with the chain's row"};
    });
    return finish(space, result, p.initial, s.initial);
}

NamedVerdict cmc_weak_refines(const ConstraintMarkovChain& s1, const ConstraintMarkovChain& s2) {
    for (const auto& a : s2.propositions)
        if (!known(s1.propositions, a))
            throw validation_error("proposition '" + a + "' of the abstract CMC is missing in the refined one");
    NamedSpace space{s1.states, s2.states};
    std::vector<char> alive(space.left.size() * space.right.size());
    for (std::size_t i = 0; i < space.left.size(); ++i)
        for (std::size_t j = 0; j < space.right.size(); ++j) {
            const auto& allowed = s2.valuations.at(space.right[j]);
            bool ok = true;
            for (const auto& v : s1.valuations.at(space.left[i]))
                if (std::find(allowed.begin(), allowed.end(), restrict_props(v, s2.propositions)) == allowed.end())
                    ok = false;
            alive[space.index(i, j)] = ok;
        }
    auto result = greatest_fixpoint(alive, [&](std::size_t pair, const std::vector<char>& snapshot) -> std::optional<Failure> {
        const std::string& q1 = space.left[pair / space.right.size()];
        const std::string& q2 = space.right[pair % space.right.size()];
        auto related = space.related(snapshot);
        for (const auto& pi1 : s1.phi.at(q1)) {
            bool matched = false;
            for (const auto& pi2 : s2.phi.at(q2))
                if (distributions_couple(pi1, pi2, related)) {
                    matched = true;
                    break;
                }
            if (!matched)
                return Failure{chain_action, "distribution has no coupled counterpart"};
        }
        return std::nullopt;
    });
    return finish(space, result, s1.initial, s2.initial);
}

} // namespace mixspec
