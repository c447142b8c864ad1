#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mixspec/rational.hpp"

namespace mixspec {

struct WeightedAtom {
    std::string id;
    Rational weight;
};
using Marginal = std::vector<WeightedAtom>;
using AtomPair = std::pair<std::string, std::string>;

// Joint weight over atom pairs; absent entries are zero.
struct CouplingWitness {
    std::map<AtomPair, Rational> entries;

    Rational at(const std::string& left, const std::string& right) const;
    std::map<std::string, Rational> left_marginal() const;
    std::map<std::string, Rational> right_marginal() const;

    bool operator==(const CouplingWitness&) const = default;
};

// Dense form: plan[i][j] is the mass moved from supply i to demand j.
using TransportPlan = std::vector<std::vector<Rational>>;

// Exact max-flow feasibility: does a non-negative plan supported on `allowed` have
// row sums `supply` and column sums `demand`? Throws validation_error on mass mismatch.
std::optional<TransportPlan> solve_transport(const std::vector<Rational>& supply,
                                             const std::vector<Rational>& demand,
                                             const std::vector<std::vector<char>>& allowed);

std::optional<CouplingWitness> transport_feasible(const Marginal& mu1, const Marginal& mu2,
                                                  const std::set<AtomPair>& allowed);

// Empty result means the witness has marginals mu1/mu2, no negative entries and,
// when `allowed` is given, support inside it.
std::vector<std::string> check_coupling(const CouplingWitness& w, const Marginal& mu1, const Marginal& mu2,
                                        const std::set<AtomPair>* allowed = nullptr);

} // namespace mixspec
