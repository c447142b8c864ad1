#include <doctest.h>

#include "fixtures.hpp"
#include "generators.hpp"
#include "mixspec/errors.hpp"
#include "oracles.hpp"

using namespace fixtures;

namespace {

std::vector<std::vector<char>> mask(std::size_t n, std::size_t m, std::initializer_list<std::pair<int, int>> edges) {
    std::vector<std::vector<char>> out(n, std::vector<char>(m, 0));
    for (auto [i, j] : edges)
        out[i][j] = 1;
    return out;
}

} // namespace

TEST_CASE("transport feasibility examples") {
    Marginal half{{"a", Rational(1, 2)}, {"b", Rational(1, 2)}};
    std::set<AtomPair> all{{"a", "a"}, {"a", "b"}, {"b", "a"}, {"b", "b"}};
    CHECK(transport_feasible(half, half, all).has_value());

    Marginal primed{{"a'", Rational(1, 2)}, {"b'", Rational(1, 2)}};
    CHECK_FALSE(transport_feasible(half, primed, {{"a", "a'"}, {"b", "a'"}}).has_value());

    Marginal mu1{{"a", Rational(7, 10)}, {"b", Rational(3, 10)}};
    Marginal mu2{{"c", Rational(1, 2)}, {"d", Rational(1, 2)}};
    std::set<AtomPair> allowed{{"a", "c"}, {"a", "d"}, {"b", "d"}};
    auto w = transport_feasible(mu1, mu2, allowed);
    REQUIRE(w.has_value());
    // The plan is unique: c can only be fed by a.
    CHECK(w->at("a", "c") == Rational(1, 2));
    CHECK(w->at("a", "d") == Rational(1, 5));
    CHECK(w->at("b", "d") == Rational(3, 10));
    CHECK(w->at("b", "c") == Rational(0));
    CHECK(check_coupling(*w, mu1, mu2, &allowed).empty());
}

TEST_CASE("transport rejects mismatched mass") {
    CHECK_THROWS_AS(solve_transport({Rational(1)}, {Rational(1, 2)}, mask(1, 1, {{0, 0}})), validation_error);
    CHECK_THROWS_AS(solve_transport({Rational(-1), Rational(2)}, {Rational(1)}, mask(2, 1, {{0, 0}, {1, 0}})),
                    validation_error);
}

TEST_CASE("transport agrees with the cut oracle") {
    Rng rng(5);
    for (int i = 0; i < 300; ++i) {
        std::size_t n = 1 + gen::below(rng, 4), m = 1 + gen::below(rng, 4);
        auto supply = gen::weights(rng, n);
        auto demand = gen::weights(rng, m);
        std::vector<std::vector<char>> allowed(n, std::vector<char>(m));
        for (auto& row : allowed)
            for (auto& c : row)
                c = gen::coin(rng, 55);
        auto plan = solve_transport(supply, demand, allowed);
        CHECK(plan.has_value() == oracle::transport_feasible(supply, demand, allowed));
        if (plan) {
            for (std::size_t a = 0; a < n; ++a) {
                Rational row;
                for (std::size_t b = 0; b < m; ++b) {
                    CHECK_FALSE((*plan)[a][b].is_negative());
                    if (!allowed[a][b])
                        CHECK((*plan)[a][b].is_zero());
                    row += (*plan)[a][b];
                }
                CHECK(row == supply[a]);
            }
        }
    }
}

TEST_CASE("lifted relation example") {
    auto w = lift_check(s_lift_left(), s_lift_right(), rho_lift_positive());
    REQUIRE(w.has_value());
    CHECK(oracle::coupling_valid(*w, s_lift_left(), s_lift_right(), rho_lift_positive()));
    CHECK_FALSE(lift_check(s_lift_left(), s_lift_right(), rho_lift_negative()).has_value());
}

TEST_CASE("lift through the identity gives the diagonal") {
    auto rho = StateRelation::identity(vars_x(), vars_x().enumerate());
    auto w = lift_check(s_fig2(), s_fig2(), rho);
    REQUIRE(w.has_value());
    CHECK(w->at("w1", "w1") == Rational(7, 10));
    CHECK(w->at("w2", "w2") == Rational(3, 10));
    CHECK(w->entries.size() == 2);
}

TEST_CASE("lift checks relation sides") {
    auto rho = StateRelation::identity(vars_x(), vars_x().enumerate());
    CHECK_THROWS_AS(lift_check(s_lift_left(), s_lift_right(), rho), validation_error);
}

TEST_CASE("set lifting") {
    auto id = StateRelation::identity(vars_x(), vars_x().enumerate());
    auto fig = MixedState::of(vars_x(), {s_fig2()});
    CHECK(subset_lift(fig, fig, id));
    CHECK_FALSE(subset_lift(fig, MixedState::of(vars_x(), {}), id));
    CHECK(subset_lift(fig, MixedState::top(vars_x()), id));

    // Top needs a successor for every admissible state of every positive atom.
    StateRelation partial(vars_x(), vars_x(), {{q0(), q0()}});
    CHECK_FALSE(subset_lift(fig, MixedState::top(vars_x()), partial));
    CHECK(subset_lift(MixedState::of(vars_x(), {dirac_x(q0())}), MixedState::top(vars_x()), partial));
}

TEST_CASE("relation composition") {
    VariableSet v = vars_x();
    auto id = StateRelation::identity(v, v.enumerate());
    StateRelation rho(v, v, {{q0(), q1()}});
    CHECK(compose_relations(id, rho) == rho);
    CHECK(compose_relations(StateRelation(v, v, {{q0(), q1()}}), StateRelation(v, v, {{q1(), q0()}})) ==
          StateRelation(v, v, {{q0(), q0()}}));
    CHECK(compose_relations(StateRelation(v, v, {{q0(), q1()}}), StateRelation(v, v, {{q0(), q0()}})).pairs().empty());
}

TEST_CASE("witness composition") {
    CouplingWitness diag{{{{"a", "a"}, Rational(1, 2)}, {{"b", "b"}, Rational(1, 2)}}};
    CHECK(compose_witnesses(diag, diag) == diag);

    CouplingWitness prod{{{{"a", "a"}, Rational(1, 4)},
                          {{"a", "b"}, Rational(1, 4)},
                          {{"b", "a"}, Rational(1, 4)},
                          {{"b", "b"}, Rational(1, 4)}}};
    CHECK(compose_witnesses(prod, diag) == prod);
}

TEST_CASE("lift properties on random systems") {
    Rng rng(17);
    for (int i = 0; i < 100; ++i) {
        VariableSet v1 = gen::variable(rng, "x1", 3), v2 = gen::variable(rng, "x2", 3), v3 = gen::variable(rng, "x3", 3);
        MixedSystem s1 = gen::system(rng, v1, 4, true), s2 = gen::system(rng, v2, 4, true), s3 = gen::system(rng, v3, 4);
        StateRelation r12 = gen::relation(rng, v1, v2, 60), r23 = gen::relation(rng, v2, v3, 60);

        auto w = lift_check(s1, s2, r12);
        CHECK(w.has_value() == lift_check(compress(s1), compress(s2), r12).has_value());
        if (w)
            CHECK(oracle::coupling_valid(*w, s1, s2, r12));

        // Growing the relation never loses a lift.
        StateRelation bigger = r12;
        for (const auto& a : v1.enumerate())
            for (const auto& b : v2.enumerate())
                if (gen::coin(rng, 30))
                    bigger.insert(a, b);
        if (w)
            CHECK(lift_check(s1, s2, bigger).has_value());

        auto w23 = lift_check(s2, s3, r23);
        if (w && w23) {
            auto w13 = compose_witnesses(*w, *w23);
            CHECK(oracle::coupling_valid(w13, s1, s3, compose_relations(r12, r23)));
        }
    }
}
