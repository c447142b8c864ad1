#include "fixtures.hpp"

namespace fixtures {

VariableSet vars_x() { return VariableSet({VariableDecl{"x", {"0", "1"}, true}}); }
State q0() { return State{{"x", "0"}}; }
State q1() { return State{{"x", "1"}}; }

MixedSystem s_fig2() {
    return MixedSystem(vars_x(), {Atom{"w1", Rational(7, 10), {q0()}}, Atom{"w2", Rational(3, 10), {q0(), q1()}}});
}

MixedSystem s_det() {
    return MixedSystem(vars_x(), {Atom{"w1", Rational(7, 10), {q0()}}, Atom{"w2", Rational(3, 10), {q1()}}});
}

MixedSystem dirac_x(const State& q, std::string id) { return MixedSystem::dirac(vars_x(), q, std::move(id)); }

namespace {

VariableSet one_var(const std::string& name) { return VariableSet({VariableDecl{name, {"0", "1"}, false}}); }
State val(const std::string& var, const std::string& v) { return State{{var, v}}; }

Mmdp on_x(std::map<TransitionKey, MixedSystem> t) { return Mmdp({alpha}, vars_x(), q0(), std::move(t)); }

MixedInterface iface_x(MixedInterface::Transitions may, MixedInterface::Transitions must, std::vector<State> states = {}) {
    if (states.empty())
        states = {q0(), q1()};
    return MixedInterface({alpha}, vars_x(), std::move(states), q0(), std::move(may), std::move(must));
}

MixedState set_x(std::vector<MixedSystem> systems) { return MixedState::of(vars_x(), std::move(systems)); }

} // namespace

MixedSystem s_lift_left() {
    return MixedSystem(one_var("x1"),
                       {Atom{"w1", Rational(7, 10), {val("x1", "0")}}, Atom{"w2", Rational(3, 10), {val("x1", "0"), val("x1", "1")}}});
}

MixedSystem s_lift_right() {
    return MixedSystem(one_var("x2"),
                       {Atom{"v1", Rational(4, 5), {val("x2", "0")}}, Atom{"v2", Rational(1, 5), {val("x2", "0"), val("x2", "1")}}});
}

StateRelation rho_lift_positive() {
    return StateRelation(one_var("x1"), one_var("x2"),
                         {{val("x1", "0"), val("x2", "0")}, {val("x1", "1"), val("x2", "0")}, {val("x1", "1"), val("x2", "1")}});
}

StateRelation rho_lift_negative() {
    return StateRelation(one_var("x1"), one_var("x2"), {{val("x1", "0"), val("x2", "0")}, {val("x1", "1"), val("x2", "1")}});
}

Mmdp m_fig() { return on_x({{{q0(), alpha}, s_fig2()}}); }
Mmdp m_fig_loop() { return on_x({{{q0(), alpha}, s_fig2()}, {{q1(), alpha}, s_fig2()}}); }
Mmdp m_det() { return on_x({{{q0(), alpha}, s_det()}, {{q1(), alpha}, s_det()}}); }
Mmdp m_stay() { return on_x({{{q0(), alpha}, dirac_x(q0())}}); }
Mmdp m_idle() { return on_x({}); }
Mmdp m_jump() { return on_x({{{q0(), alpha}, dirac_x(q1())}}); }

MixedInterface i_loop() {
    return iface_x({{{q0(), alpha}, set_x({s_fig2()})}, {{q1(), alpha}, set_x({s_fig2()})}}, {});
}

MixedInterface i_right() {
    auto target = set_x({s_fig2(), dirac_x(q0())});
    return iface_x({{{q0(), alpha}, target}, {{q1(), alpha}, target}}, {});
}

MixedInterface i_left() {
    auto target = set_x({s_det()});
    return iface_x({{{q0(), alpha}, target}, {{q1(), alpha}, target}}, {{{q0(), alpha}, target}, {{q1(), alpha}, target}});
}

MixedInterface i_no_alpha() { return iface_x({}, {}); }

MixedInterface i_must_q0() {
    auto target = set_x({dirac_x(q0())});
    return iface_x({{{q0(), alpha}, target}}, {{{q0(), alpha}, target}});
}

MixedInterface i_cascade() {
    // q1 has a must without may; q0's only member targets q1 and q0 carries a must.
    return iface_x({{{q0(), alpha}, set_x({dirac_x(q1())})}},
                   {{{q0(), alpha}, set_x({dirac_x(q1())})}, {{q1(), alpha}, set_x({dirac_x(q0())})}});
}

MixedInterface i_partial() {
    // q1's must and may targets share no system; q0 keeps its Dirac(q0) option.
    return iface_x({{{q0(), alpha}, set_x({dirac_x(q0()), dirac_x(q1())})}, {{q1(), alpha}, set_x({dirac_x(q1())})}},
                   {{{q1(), alpha}, set_x({dirac_x(q0())})}});
}

MixedInterface c_chain() {
    VariableSet v({VariableDecl{"n", {"0", "1", "2"}, false}});
    auto n = [](const char* k) { return State{{"n", k}}; };
    MixedInterface::Transitions may{
        {{n("0"), alpha}, MixedState::of(v, {MixedSystem::dirac(v, n("1"))})},
        {{n("1"), alpha}, MixedState::of(v, {MixedSystem::dirac(v, n("2"))})},
    };
    return MixedInterface({alpha}, v, v.enumerate(), n("0"), std::move(may), {});
}

MixedInterface c_split() {
    VariableSet v({VariableDecl{"p", {"0", "A", "B", "S"}, false}});
    auto p = [](const char* k) { return State{{"p", k}}; };
    MixedSystem fork(v, {Atom{"w", Rational(1), {p("A"), p("B")}}});
    auto stop = MixedState::of(v, {MixedSystem::dirac(v, p("S"))});
    MixedInterface::Transitions may{{{p("0"), alpha}, MixedState::of(v, {fork})}, {{p("A"), alpha}, stop}};
    MixedInterface::Transitions must{{{p("A"), alpha}, stop}};
    return MixedInterface({alpha}, v, v.enumerate(), p("0"), std::move(may), std::move(must));
}

std::vector<std::pair<std::string, Mmdp>> all_models() {
    return {{"m_fig", m_fig()}, {"m_fig_loop", m_fig_loop()}, {"m_det", m_det()},
            {"m_stay", m_stay()}, {"m_idle", m_idle()},       {"m_jump", m_jump()}};
}

std::vector<std::pair<std::string, MixedInterface>> all_interfaces() {
    return {{"i_loop", i_loop()},         {"i_right", i_right()},     {"i_left", i_left()},
            {"i_no_alpha", i_no_alpha()}, {"i_must_q0", i_must_q0()}, {"i_cascade", i_cascade()},
            {"i_partial", i_partial()}};
}

ProbAutomaton pa_example() {
    ProbAutomaton p;
    p.actions = {"a", "b"};
    p.states = {"r0", "r1", "r2"};
    p.initial = "r0";
    p.transitions[{"r0", "a"}] = {Distribution{{"r0", Rational(1)}},
                                  Distribution{{"r0", Rational(7, 10)}, {"r1", Rational(3, 10)}}};
    p.transitions[{"r1", "b"}] = {Distribution{{"r2", Rational(1, 2)}, {"r0", Rational(1, 2)}}};
    p.normalize();
    return p;
}

MarkovChain mc_example() {
    MarkovChain p;
    p.states = {"r0", "r1"};
    p.initial = "r0";
    p.propositions = {"a", "b"};
    p.matrix["r0"] = {{"r0", Rational(1, 2)}, {"r1", Rational(1, 2)}};
    p.matrix["r1"] = {{"r1", Rational(1)}};
    p.valuation["r0"] = {"a"};
    p.valuation["r1"] = {"a", "b"};
    p.normalize();
    return p;
}

ConstraintMarkovChain cmc_example() {
    ConstraintMarkovChain s;
    s.states = {"q0", "q1"};
    s.initial = "q0";
    s.propositions = {"a"};
    s.phi["q0"] = {Distribution{{"q0", Rational(1, 2)}, {"q1", Rational(1, 2)}},
                   Distribution{{"q0", Rational(1, 4)}, {"q1", Rational(3, 4)}}};
    s.phi["q1"] = {Distribution{{"q1", Rational(1)}}};
    s.valuations["q0"] = {{"a"}};
    s.valuations["q1"] = {{"a"}, {}};
    s.normalize();
    return s;
}

std::vector<std::pair<std::string, ModelDocument>> golden_documents() {
    std::vector<std::pair<std::string, ModelDocument>> out{
        {"s_fig2.json", make_document(s_fig2())},
        {"s_det.json", make_document(s_det())},
        {"lift_left.json", make_document(s_lift_left())},
        {"lift_right.json", make_document(s_lift_right())},
        {"rho_positive.json", make_document(rho_lift_positive())},
        {"rho_negative.json", make_document(rho_lift_negative())},
        {"lift_witness.json", make_document(*lift_check(s_lift_left(), s_lift_right(), rho_lift_positive()))},
        {"pa_example.json", make_document(pa_example())},
        {"mc_example.json", make_document(mc_example())},
        {"cmc_example.json", make_document(cmc_example())},
        {"c_chain.json", make_document(c_chain())},
        {"c_split.json", make_document(c_split())},
    };
    for (auto& [name, m] : all_models())
        out.emplace_back(name + ".json", make_document(m));
    for (auto& [name, c] : all_interfaces())
        out.emplace_back(name + ".json", make_document(c));
    return out;
}

namespace {

VariableSet rename_vars(const VariableSet& v, const std::string& from, const std::string& to) {
    std::vector<VariableDecl> decls = v.decls();
    for (auto& d : decls)
        if (d.name == from)
            d.name = to;
    return VariableSet(std::move(decls));
}

State rename_state(const State& q, const std::string& from, const std::string& to) {
    std::vector<State::Binding> b = q.bindings();
    for (auto& [var, val] : b)
        if (var == from)
            var = to;
    return State(std::move(b));
}

} // namespace

MixedSystem rename(const MixedSystem& s, const std::string& from, const std::string& to) {
    std::vector<Atom> atoms = s.atoms();
    for (auto& a : atoms)
        for (auto& q : a.row)
            q = rename_state(q, from, to);
    return MixedSystem(rename_vars(s.variables(), from, to), std::move(atoms));
}

MixedState rename(const MixedState& s, const std::string& from, const std::string& to) {
    std::vector<MixedFactor> factors;
    for (const auto& f : s.factors()) {
        MixedFactor g{rename_vars(f.variables, from, to), f.top, {}};
        for (const auto& m : f.systems)
            g.systems.push_back(rename(m, from, to));
        factors.push_back(std::move(g));
    }
    return MixedState(std::move(factors));
}

Mmdp rename(const Mmdp& m, const std::string& from, const std::string& to) {
    std::map<TransitionKey, MixedSystem> t;
    for (const auto& [k, s] : m.transitions())
        t.emplace(TransitionKey{rename_state(k.first, from, to), k.second}, rename(s, from, to));
    return Mmdp(m.actions(), rename_vars(m.variables(), from, to), rename_state(m.initial(), from, to), std::move(t));
}

MixedInterface rename(const MixedInterface& c, const std::string& from, const std::string& to) {
    auto map = [&](const MixedInterface::Transitions& t) {
        MixedInterface::Transitions out;
        for (const auto& [k, s] : t)
            out.emplace(TransitionKey{rename_state(k.first, from, to), k.second}, rename(s, from, to));
        return out;
    };
    std::vector<State> states;
    for (const auto& q : c.states())
        states.push_back(rename_state(q, from, to));
    std::optional<State> init;
    if (c.initial())
        init = rename_state(*c.initial(), from, to);
    return MixedInterface(c.actions(), rename_vars(c.variables(), from, to), std::move(states), init, map(c.may()),
                          map(c.must()));
}

} // namespace fixtures
