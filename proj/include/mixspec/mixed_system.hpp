#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mixspec/rational.hpp"
#include "mixspec/state.hpp"

namespace mixspec {

struct Atom {
    std::string id;
    Rational weight;
    std::vector<State> row; // admissible states, canonical order, no duplicates

    bool operator==(const Atom&) const = default;
};

// Finite probability space over atoms plus a constraint relating atoms to states.
// Weights sum to exactly 1; atom ids are distinct; rows are total over the variables.
class MixedSystem {
public:
    MixedSystem(VariableSet variables, std::vector<Atom> atoms);

    static MixedSystem dirac(VariableSet variables, State target, std::string atom_id = "w");

    const VariableSet& variables() const { return variables_; }
    const std::vector<Atom>& atoms() const { return atoms_; }
    const Atom* atom(std::string_view id) const;

    // π(∃q.C)
    Rational consistent_mass() const;

    // Atom-identical, including order.
    bool operator==(const MixedSystem&) const = default;

private:
    VariableSet variables_;
    std::vector<Atom> atoms_;
};

struct OutcomeRow {
    std::string atom;
    Rational weight;
    std::vector<State> states;

    bool operator==(const OutcomeRow&) const = default;
};
using OutcomeTable = std::vector<OutcomeRow>;

bool check_consistent(const MixedSystem& s);
// Throws inconsistent_error.
OutcomeTable outcome_distribution(const MixedSystem& s);
MixedSystem compress(const MixedSystem& s);
bool equivalent(const MixedSystem& a, const MixedSystem& b);
MixedSystem product(const MixedSystem& a, const MixedSystem& b);

// Keeps only the admissible states listed in `keep` (sorted by operator<).
MixedSystem restrict_rows(const MixedSystem& s, const std::vector<State>& keep);

using Rng = std::mt19937_64;

// Uniform integer in [0, bound) by rejection on 64-bit chunks; portable across standard libraries.
mpz_class uniform_below(Rng& rng, const mpz_class& bound);

class Resolver {
public:
    enum class Kind { min, random, scripted, prefer };

    static Resolver min() { return Resolver(Kind::min, {}); }
    static Resolver random() { return Resolver(Kind::random, {}); }
    // Each pick consumes the next scripted state, which must be admissible.
    static Resolver scripted(std::vector<State> script) { return Resolver(Kind::scripted, std::move(script)); }
    // First listed state that is admissible, falling back to the canonical minimum.
    static Resolver prefer(std::vector<State> order) { return Resolver(Kind::prefer, std::move(order)); }

    Kind kind() const { return kind_; }
    // `admissible` is non-empty and in canonical order.
    State pick(const std::vector<State>& admissible, Rng& rng);

private:
    Resolver(Kind kind, std::vector<State> script) : kind_(kind), script_(std::move(script)) {}

    Kind kind_;
    std::vector<State> script_;
    std::size_t cursor_ = 0;
};

struct Outcome {
    std::string atom;
    State state;
};

Outcome sample_outcome(const MixedSystem& s, Rng& rng, Resolver& resolver);
State sample_outcome(const MixedSystem& s, std::uint64_t seed, Resolver& resolver);

} // namespace mixspec
