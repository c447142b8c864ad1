#include "mixspec/lifting.hpp"

#include "mixspec/errors.hpp"

namespace mixspec {

StateRelation::StateRelation(VariableSet left, VariableSet right, std::set<std::pair<State, State>> pairs)
    : left_(std::move(left)), right_(std::move(right)) {
    for (const auto& [a, b] : pairs)
        insert(a, b);
}

StateRelation StateRelation::identity(const VariableSet& vars, const std::vector<State>& states) {
    StateRelation r(vars, vars);
    for (const auto& q : states)
        r.insert(q, q);
    return r;
}

bool StateRelation::has_successor(const State& a) const {
    auto it = pairs_.lower_bound({a, State()});
    return it != pairs_.end() && it->first == a;
}

void StateRelation::insert(const State& a, const State& b) {
    left_.require_admits(a, "relation left side");
    right_.require_admits(b, "relation right side");
    pairs_.emplace(a, b);
}

StateRelation StateRelation::transposed() const {
    StateRelation t(right_, left_);
    for (const auto& [a, b] : pairs_)
        t.pairs_.emplace(b, a);
    return t;
}

RelationView view_of(const StateRelation& rho) {
    return RelationView{[&rho](const State& a, const State& b) { return rho.contains(a, b); },
                        [&rho](const State& a) { return rho.has_successor(a); }};
}

Marginal marginal_of(const MixedSystem& s) {
    Marginal m;
    for (const auto& a : s.atoms())
        m.push_back({a.id, a.weight});
    return m;
}

std::set<AtomPair> lift_edges(const MixedSystem& s1, const MixedSystem& s2, const RelationView& rho) {
    std::set<AtomPair> edges;
    for (const auto& a : s1.atoms())
        for (const auto& b : s2.atoms()) {
            bool ok = true;
            for (const auto& q1 : a.row) {
                bool matched = false;
                for (const auto& q2 : b.row)
                    if (rho.related(q1, q2)) {
                        matched = true;
                        break;
                    }
                if (!matched) {
                    ok = false;
                    break;
                }
            }
            if (ok)
                edges.emplace(a.id, b.id);
        }
    return edges;
}

std::optional<CouplingWitness> lift_check(const MixedSystem& s1, const MixedSystem& s2, const RelationView& rho) {
    const auto& A = s1.atoms();
    const auto& B = s2.atoms();
    std::vector<Rational> supply, demand;
    for (const auto& a : A)
        supply.push_back(a.weight);
    for (const auto& b : B)
        demand.push_back(b.weight);
    std::vector<std::vector<char>> allowed(A.size(), std::vector<char>(B.size(), 0));
    for (std::size_t i = 0; i < A.size(); ++i) {
        if (!A[i].weight.is_positive()) {
            // Carries no mass, so the edge choice is irrelevant to feasibility.
            std::fill(allowed[i].begin(), allowed[i].end(), 1);
            continue;
        }
        for (std::size_t j = 0; j < B.size(); ++j) {
            bool ok = true;
            for (const auto& q1 : A[i].row) {
                bool matched = false;
                for (const auto& q2 : B[j].row)
                    if (rho.related(q1, q2)) {
                        matched = true;
                        break;
                    }
                if (!matched) {
                    ok = false;
                    break;
                }
            }
            allowed[i][j] = ok;
        }
    }
    auto plan = solve_transport(supply, demand, allowed);
    if (!plan)
        return std::nullopt;
    CouplingWitness w;
    for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t j = 0; j < B.size(); ++j)
            if ((*plan)[i][j].is_positive())
                w.entries[{A[i].id, B[j].id}] = (*plan)[i][j];
    return w;
}

std::optional<CouplingWitness> lift_check(const MixedSystem& s1, const MixedSystem& s2, const StateRelation& rho) {
    if (!(s1.variables() == rho.left()) || !(s2.variables() == rho.right()))
        throw validation_error("lift_check: system variables do not match the relation's sides");
    return lift_check(s1, s2, view_of(rho));
}

namespace {

// Closed form for S ⊆^ρ Top: admissible states of positive-mass atoms all have successors.
bool lifts_into_top(const MixedSystem& s, const RelationView& rho) {
    for (const auto& a : s.atoms()) {
        if (!a.weight.is_positive())
            continue;
        for (const auto& q : a.row)
            if (!rho.has_successor(q))
                return false;
    }
    return true;
}

} // namespace

bool member_lift(const MixedSystem& s, const MixedState& ss, const RelationView& rho) {
    if (ss.is_top())
        return lifts_into_top(s, rho);
    for (const auto& t : ss.members())
        if (lift_check(s, t, rho))
            return true;
    return false;
}

bool subset_lift(const MixedState& ss1, const MixedState& ss2, const RelationView& rho) {
    if (ss1.is_top()) {
        if (!ss2.is_top())
            return false;
        for (const auto& q : ss1.variables().enumerate())
            if (!rho.has_successor(q))
                return false;
        return true;
    }
    for (const auto& s : ss1.members())
        if (!member_lift(s, ss2, rho))
            return false;
    return true;
}

bool subset_lift(const MixedState& ss1, const MixedState& ss2, const StateRelation& rho) {
    return subset_lift(ss1, ss2, view_of(rho));
}

StateRelation compose_relations(const StateRelation& r12, const StateRelation& r23) {
    if (!(r12.right() == r23.left()))
        throw validation_error("compose_relations: middle variable sets differ");
    StateRelation out(r12.left(), r23.right());
    for (const auto& [a, b] : r12.pairs()) {
        auto it = r23.pairs().lower_bound({b, State()});
        for (; it != r23.pairs().end() && it->first == b; ++it)
            out.insert(a, it->second);
    }
    return out;
}

CouplingWitness compose_witnesses(const CouplingWitness& w12, const CouplingWitness& w23) {
    auto middle = w12.right_marginal();
    auto check = w23.left_marginal();
    std::erase_if(middle, [](const auto& kv) { return kv.second.is_zero(); });
    std::erase_if(check, [](const auto& kv) { return kv.second.is_zero(); });
    if (middle != check)
        throw validation_error("compose_witnesses: middle marginals differ");
    CouplingWitness w13;
    for (const auto& [k12, x] : w12.entries) {
        if (!x.is_positive())
            continue;
        const Rational& mass = middle.at(k12.second);
        for (const auto& [k23, y] : w23.entries)
            if (k23.first == k12.second && y.is_positive())
                w13.entries[{k12.first, k23.second}] += x * y / mass;
    }
    return w13;
}

} // namespace mixspec
