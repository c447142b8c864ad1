#include "mixspec/state.hpp"

#include <algorithm>

#include "mixspec/errors.hpp"

namespace mixspec {

std::optional<std::size_t> VariableDecl::index_of(std::string_view value) const {
    for (std::size_t i = 0; i < domain.size(); ++i)
        if (domain[i] == value)
            return i;
    return std::nullopt;
}

State::State(std::initializer_list<Binding> bindings) : State(std::vector<Binding>(bindings)) {}

State::State(std::vector<Binding> bindings) : bindings_(std::move(bindings)) {
    std::sort(bindings_.begin(), bindings_.end());
    for (std::size_t i = 1; i < bindings_.size(); ++i)
        if (bindings_[i - 1].first == bindings_[i].first)
            throw validation_error("variable '" + bindings_[i].first + "' assigned twice");
}

const std::string* State::value(std::string_view var) const {
    auto it = std::lower_bound(bindings_.begin(), bindings_.end(), var,
                               [](const Binding& b, std::string_view v) { return b.first < v; });
    if (it == bindings_.end() || it->first != var)
        return nullptr;
    return &it->second;
}

std::string State::str() const {
    std::string out;
    for (const auto& [var, val] : bindings_) {
        if (!out.empty())
            out += ',';
        out += var + "=" + val;
    }
    return out;
}

VariableSet::VariableSet(std::vector<VariableDecl> decls) : decls_(std::move(decls)) {
    std::sort(decls_.begin(), decls_.end(),
              [](const VariableDecl& a, const VariableDecl& b) { return a.name < b.name; });
    for (std::size_t i = 0; i < decls_.size(); ++i) {
        const auto& d = decls_[i];
        if (d.name.empty())
            throw validation_error("variable with empty name");
        if (i > 0 && decls_[i - 1].name == d.name)
            throw validation_error("variable '" + d.name + "' declared twice");
        if (d.domain.empty())
            throw validation_error("variable '" + d.name + "' has an empty domain");
        auto sorted = d.domain;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw validation_error("variable '" + d.name + "' has repeated domain values");
    }
}

const VariableDecl* VariableSet::find(std::string_view name) const {
    auto it = std::lower_bound(decls_.begin(), decls_.end(), name,
                               [](const VariableDecl& d, std::string_view n) { return d.name < n; });
    if (it == decls_.end() || it->name != name)
        return nullptr;
    return &*it;
}

std::set<std::string> VariableSet::names() const {
    std::set<std::string> out;
    for (const auto& d : decls_)
        out.insert(d.name);
    return out;
}

bool VariableSet::admits(const State& q) const {
    if (q.size() != decls_.size())
        return false;
    for (std::size_t i = 0; i < decls_.size(); ++i) {
        const auto& [var, val] = q.bindings()[i];
        if (var != decls_[i].name || !decls_[i].index_of(val))
            return false;
    }
    return true;
}

void VariableSet::require_admits(const State& q, std::string_view context) const {
    if (!admits(q))
        throw validation_error(std::string(context) + ": state {" + q.str() +
                               "} is not a total in-domain assignment of the declared variables");
}

bool VariableSet::canonical_less(const State& a, const State& b) const {
    const auto& ba = a.bindings();
    const auto& bb = b.bindings();
    std::size_t n = std::min(ba.size(), bb.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (ba[i].first != bb[i].first)
            return ba[i].first < bb[i].first;
        if (ba[i].second == bb[i].second)
            continue;
        const VariableDecl* d = find(ba[i].first);
        auto ia = d ? d->index_of(ba[i].second) : std::nullopt;
        auto ib = d ? d->index_of(bb[i].second) : std::nullopt;
        if (ia && ib)
            return *ia < *ib;
        return ba[i].second < bb[i].second;
    }
    return ba.size() < bb.size();
}

void VariableSet::sort_canonical(std::vector<State>& states) const {
    std::sort(states.begin(), states.end(),
              [this](const State& a, const State& b) { return canonical_less(a, b); });
    states.erase(std::unique(states.begin(), states.end()), states.end());
}

std::vector<State> VariableSet::enumerate() const {
    std::vector<std::vector<State::Binding>> partial{{}};
    for (const auto& d : decls_) {
        std::vector<std::vector<State::Binding>> next;
        next.reserve(partial.size() * d.domain.size());
        for (const auto& p : partial)
            for (const auto& v : d.domain) {
                auto q = p;
                q.emplace_back(d.name, v);
                next.push_back(std::move(q));
            }
        partial = std::move(next);
    }
    std::vector<State> out;
    out.reserve(partial.size());
    for (auto& p : partial)
        out.emplace_back(std::move(p));
    return out;
}

VariableSet VariableSet::unite(const VariableSet& other) const {
    std::vector<VariableDecl> merged = decls_;
    for (const auto& d : other.decls_) {
        if (const VariableDecl* mine = find(d.name)) {
            if (!(*mine == d))
                throw validation_error("variable '" + d.name + "' is declared with conflicting domains");
        } else {
            merged.push_back(d);
        }
    }
    return VariableSet(std::move(merged));
}

VariableSet VariableSet::restrict(const std::set<std::string>& names) const {
    std::vector<VariableDecl> kept;
    for (const auto& d : decls_)
        if (names.count(d.name))
            kept.push_back(d);
    return VariableSet(std::move(kept));
}

State project_state(const State& q, const std::set<std::string>& vars) {
    std::vector<State::Binding> kept;
    for (const auto& v : vars) {
        const std::string* val = q.value(v);
        if (!val)
            throw validation_error("cannot project {" + q.str() + "} onto unknown variable '" + v + "'");
        kept.emplace_back(v, *val);
    }
    return State(std::move(kept));
}

bool compatible(const State& a, const State& b) {
    const auto& ba = a.bindings();
    const auto& bb = b.bindings();
    std::size_t i = 0, j = 0;
    while (i < ba.size() && j < bb.size()) {
        if (ba[i].first < bb[j].first)
            ++i;
        else if (bb[j].first < ba[i].first)
            ++j;
        else {
            if (ba[i].second != bb[j].second)
                return false;
            ++i;
            ++j;
        }
    }
    return true;
}

std::optional<State> join_states(const State& a, const State& b) {
    if (!compatible(a, b))
        return std::nullopt;
    std::vector<State::Binding> merged;
    std::set_union(a.bindings().begin(), a.bindings().end(), b.bindings().begin(), b.bindings().end(),
                   std::back_inserter(merged),
                   [](const State::Binding& x, const State::Binding& y) { return x.first < y.first; });
    return State(std::move(merged));
}

bool observably_compatible(const VariableSet& va, const State& a, const VariableSet& vb, const State& b) {
    for (const auto& d : va.decls()) {
        if (!d.observable)
            continue;
        const VariableDecl* other = vb.find(d.name);
        if (!other || !other->observable)
            continue;
        const std::string* x = a.value(d.name);
        const std::string* y = b.value(d.name);
        if (x && y && *x != *y)
            return false;
    }
    return true;
}

} // namespace mixspec
