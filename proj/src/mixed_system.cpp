#include "mixspec/mixed_system.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mixspec/errors.hpp"

namespace mixspec {

MixedSystem::MixedSystem(VariableSet variables, std::vector<Atom> atoms)
    : variables_(std::move(variables)), atoms_(std::move(atoms)) {
    if (atoms_.empty())
        throw validation_error("mixed system without atoms");
    std::set<std::string> ids;
    Rational total;
    for (auto& a : atoms_) {
        if (!ids.insert(a.id).second)
            throw validation_error("atom id '" + a.id + "' used twice");
        if (a.weight.is_negative())
            throw validation_error("atom '" + a.id + "' has negative weight " + a.weight.str());
        total += a.weight;
        for (const auto& q : a.row)
            variables_.require_admits(q, "atom '" + a.id + "'");
        variables_.sort_canonical(a.row);
    }
    if (total != Rational(1))
        throw validation_error("atom weights sum to " + total.str() + ", expected 1/1");
}

MixedSystem MixedSystem::dirac(VariableSet variables, State target, std::string atom_id) {
    return MixedSystem(std::move(variables), {Atom{std::move(atom_id), Rational(1), {std::move(target)}}});
}

const Atom* MixedSystem::atom(std::string_view id) const {
    for (const auto& a : atoms_)
        if (a.id == id)
            return &a;
    return nullptr;
}

Rational MixedSystem::consistent_mass() const {
    Rational mass;
    for (const auto& a : atoms_)
        if (!a.row.empty())
            mass += a.weight;
    return mass;
}

bool check_consistent(const MixedSystem& s) { return s.consistent_mass().is_positive(); }

OutcomeTable outcome_distribution(const MixedSystem& s) {
    Rational mass = s.consistent_mass();
    if (!mass.is_positive())
        throw inconsistent_error("inconsistent mixed system: no positive-mass atom admits a state");
    OutcomeTable table;
    for (const auto& a : s.atoms())
        if (a.weight.is_positive() && !a.row.empty())
            table.push_back({a.id, a.weight / mass, a.row});
    return table;
}

MixedSystem compress(const MixedSystem& s) {
    std::map<std::vector<State>, std::size_t> index;
    std::vector<Atom> merged;
    for (const auto& a : s.atoms()) {
        auto [it, fresh] = index.emplace(a.row, merged.size());
        if (fresh) {
            merged.push_back(a);
        } else {
            auto& m = merged[it->second];
            m.id += "+" + a.id;
            m.weight += a.weight;
        }
    }
    return MixedSystem(s.variables(), std::move(merged));
}

namespace {

// Positive-mass, non-empty-row classes of the compressed system.
std::vector<std::pair<std::vector<State>, Rational>> signature(const MixedSystem& s) {
    std::map<std::vector<State>, Rational> classes;
    for (const auto& a : s.atoms())
        if (a.weight.is_positive() && !a.row.empty())
            classes[a.row] += a.weight;
    return {classes.begin(), classes.end()};
}

} // namespace

bool equivalent(const MixedSystem& a, const MixedSystem& b) {
    return a.variables() == b.variables() && signature(a) == signature(b);
}

MixedSystem product(const MixedSystem& a, const MixedSystem& b) {
    VariableSet vars = a.variables().unite(b.variables());
    std::vector<Atom> atoms;
    atoms.reserve(a.atoms().size() * b.atoms().size());
    for (const auto& x : a.atoms())
        for (const auto& y : b.atoms()) {
            Atom joint{"(" + x.id + "," + y.id + ")", x.weight * y.weight, {}};
            for (const auto& q1 : x.row)
                for (const auto& q2 : y.row)
                    if (auto q = join_states(q1, q2))
                        joint.row.push_back(std::move(*q));
            atoms.push_back(std::move(joint));
        }
    return MixedSystem(std::move(vars), std::move(atoms));
}

MixedSystem restrict_rows(const MixedSystem& s, const std::vector<State>& keep) {
    std::vector<Atom> atoms = s.atoms();
    for (auto& a : atoms)
        std::erase_if(a.row, [&](const State& q) { return !std::binary_search(keep.begin(), keep.end(), q); });
    return MixedSystem(s.variables(), std::move(atoms));
}

} // namespace mixspec
