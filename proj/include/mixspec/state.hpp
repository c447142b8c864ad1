#pragma once

#include <compare>
#include <initializer_list>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mixspec {

struct VariableDecl {
    std::string name;
    std::vector<std::string> domain;
    // Observable variables must agree on related states whenever both sides declare them.
    bool observable = false;

    std::optional<std::size_t> index_of(std::string_view value) const;
    bool operator==(const VariableDecl&) const = default;
};

// Assignment of value tokens to variable names, kept sorted by name.
class State {
public:
    using Binding = std::pair<std::string, std::string>;

    State() = default;
    State(std::initializer_list<Binding> bindings);
    explicit State(std::vector<Binding> bindings);

    const std::vector<Binding>& bindings() const { return bindings_; }
    const std::string* value(std::string_view var) const;
    bool empty() const { return bindings_.empty(); }
    std::size_t size() const { return bindings_.size(); }

    // "x=0,y=1"
    std::string str() const;

    auto operator<=>(const State&) const = default;

private:
    std::vector<Binding> bindings_;
};

class VariableSet {
public:
    VariableSet() = default;
    VariableSet(std::vector<VariableDecl> decls);
    VariableSet(std::initializer_list<VariableDecl> decls)
        : VariableSet(std::vector<VariableDecl>(decls)) {}

    const std::vector<VariableDecl>& decls() const { return decls_; }
    const VariableDecl* find(std::string_view name) const;
    std::set<std::string> names() const;
    bool empty() const { return decls_.empty(); }
    std::size_t size() const { return decls_.size(); }

    // Total over this set and every value in its domain.
    bool admits(const State& q) const;
    void require_admits(const State& q, std::string_view context) const;

    // Variable name first, then domain index.
    bool canonical_less(const State& a, const State& b) const;
    void sort_canonical(std::vector<State>& states) const;

    // Full domain product in canonical order.
    std::vector<State> enumerate() const;

    // Throws validation_error when a shared name is declared differently.
    VariableSet unite(const VariableSet& other) const;
    VariableSet restrict(const std::set<std::string>& names) const;

    bool operator==(const VariableSet&) const = default;

private:
    std::vector<VariableDecl> decls_;
};

State project_state(const State& q, const std::set<std::string>& vars);
bool compatible(const State& a, const State& b);
std::optional<State> join_states(const State& a, const State& b);

// Shared observable variables carry equal values.
bool observably_compatible(const VariableSet& va, const State& a, const VariableSet& vb, const State& b);

} // namespace mixspec
