#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mixspec/lifting.hpp"

namespace mixspec {

struct Failure {
    std::string action;
    std::string reason;
};

struct Counterexample {
    State left;
    State right;
    std::string action;
    std::string reason;
};

struct Verdict {
    bool holds = false;
    StateRelation relation;
    std::optional<Counterexample> counterexample;
    std::size_t iterations = 0;

    explicit operator bool() const { return holds; }
};

struct FixpointResult {
    std::vector<char> alive;
    std::vector<std::optional<Failure>> failures;
    std::size_t iterations = 0; // sweeps that removed at least one pair
};

// Greatest fixpoint by Jacobi sweeps: every sweep evaluates `check(pair, alive)` against a
// frozen snapshot and removes the failing pairs. `alive` holds the initial candidates.
template <class Check>
FixpointResult greatest_fixpoint(std::vector<char> alive, Check&& check) {
    FixpointResult out;
    out.failures.resize(alive.size());
    for (;;) {
        std::vector<std::size_t> doomed;
        for (std::size_t i = 0; i < alive.size(); ++i) {
            if (!alive[i])
                continue;
            if (std::optional<Failure> f = check(i, alive)) {
                out.failures[i] = std::move(f);
                doomed.push_back(i);
            }
        }
        if (doomed.empty())
            break;
        for (std::size_t i : doomed)
            alive[i] = 0;
        ++out.iterations;
    }
    out.alive = std::move(alive);
    return out;
}

// Dense indexing of a product of two state lists, used by all relation fixpoints.
class PairSpace {
public:
    PairSpace(std::vector<State> left, std::vector<State> right);

    std::size_t size() const { return left_.size() * right_.size(); }
    std::size_t index(std::size_t i, std::size_t j) const { return i * right_.size() + j; }
    const State& left_state(std::size_t pair) const { return left_[pair / right_.size()]; }
    const State& right_state(std::size_t pair) const { return right_[pair % right_.size()]; }
    std::optional<std::size_t> left_index(const State& q) const;
    std::optional<std::size_t> right_index(const State& q) const;
    const std::vector<State>& left() const { return left_; }
    const std::vector<State>& right() const { return right_; }

    RelationView view(const std::vector<char>& alive) const;
    StateRelation relation(const VariableSet& lv, const VariableSet& rv, const std::vector<char>& alive) const;

private:
    std::vector<State> left_, right_;
    std::vector<std::pair<State, std::size_t>> left_index_, right_index_;
};

} // namespace mixspec
