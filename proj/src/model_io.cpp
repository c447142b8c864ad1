#include "mixspec/model_io.hpp"

#include <fstream>
#include <sstream>

namespace mixspec {

using json = nlohmann::json;

namespace {

// ---- reading -------------------------------------------------------------

[[noreturn]] void schema(const std::string& path, const std::string& what) {
    throw schema_error((path.empty() ? "/" : path) + ": " + what, path.empty() ? "/" : path);
}

const json& field(const json& obj, const std::string& path, const char* key) {
    if (!obj.is_object())
        schema(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end())
        schema(path, std::string("missing field '") + key + "'");
    return *it;
}

const json* optional_field(const json& obj, const std::string& path, const char* key) {
    if (!obj.is_object())
        schema(path, "expected an object");
    auto it = obj.find(key);
    return it == obj.end() ? nullptr : &*it;
}

const json& array(const json& j, const std::string& path) {
    if (!j.is_array())
        schema(path, "expected an array");
    return j;
}

std::string token(const json& j, const std::string& path) {
    if (j.is_string())
        return j.get<std::string>();
    if (j.is_number_integer())
        return j.dump();
    schema(path, "expected a string");
}

Rational rational(const json& j, const std::string& path) {
    if (j.is_number_integer())
        return Rational(j.get<long>());
    if (!j.is_string())
        schema(path, "expected a rational written as a string such as \"7/10\" or \"0.7\"");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const validation_error& e) {
        schema(path, e.what());
    }
}

std::vector<std::string> tokens(const json& j, const std::string& path) {
    std::vector<std::string> out;
    std::size_t i = 0;
    for (const auto& x : array(j, path))
        out.push_back(token(x, path + "/" + std::to_string(i++)));
    return out;
}

// Invariant failures keep their class and gain a location.
template <class F>
auto located(const std::string& path, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const schema_error&) {
        throw;
    } catch (const validation_error& e) {
        throw validation_error((path.empty() ? "/" : path) + ": " + e.what());
    }
}

VariableSet read_variables(const json& j, const std::string& path) {
    std::vector<VariableDecl> decls;
    std::size_t i = 0;
    for (const auto& d : array(j, path)) {
        std::string p = path + "/" + std::to_string(i++);
        VariableDecl decl;
        decl.name = token(field(d, p, "name"), p + "/name");
        decl.domain = tokens(field(d, p, "domain"), p + "/domain");
        if (const json* o = optional_field(d, p, "observable")) {
            if (!o->is_boolean())
                schema(p + "/observable", "expected a boolean");
            decl.observable = o->get<bool>();
        }
        decls.push_back(std::move(decl));
    }
    return located(path, [&] { return VariableSet(std::move(decls)); });
}

State read_state(const json& j, const std::string& path) {
    if (!j.is_object())
        schema(path, "expected a state object mapping variables to values");
    std::vector<State::Binding> b;
    for (auto it = j.begin(); it != j.end(); ++it)
        b.emplace_back(it.key(), token(it.value(), path + "/" + it.key()));
    return located(path, [&] { return State(std::move(b)); });
}

State read_state_in(const json& j, const std::string& path, const VariableSet& vars) {
    State q = read_state(j, path);
    located(path, [&] { vars.require_admits(q, "state"); return 0; });
    return q;
}

MixedSystem read_system(const json& j, const std::string& path, const VariableSet* context) {
    VariableSet vars;
    if (const json* v = optional_field(j, path, "variables"))
        vars = read_variables(*v, path + "/variables");
    else if (context)
        vars = *context;
    else
        schema(path, "missing field 'variables'");
    if (context && !(vars == *context))
        throw validation_error(path + ": member system is over different variables than its context");

    std::vector<Atom> atoms;
    const json& jatoms = array(field(j, path, "atoms"), path + "/atoms");
    for (std::size_t i = 0; i < jatoms.size(); ++i) {
        std::string p = path + "/atoms/" + std::to_string(i);
        Atom a{token(field(jatoms[i], p, "id"), p + "/id"), rational(field(jatoms[i], p, "weight"), p + "/weight"), {}};
        if (const json* row = optional_field(jatoms[i], p, "row")) {
            std::size_t k = 0;
            for (const auto& q : array(*row, p + "/row")) {
                std::string pq = p + "/row/" + std::to_string(k++);
                a.row.push_back(read_state_in(q, pq, vars));
            }
        }
        atoms.push_back(std::move(a));
    }
    if (const json* c = optional_field(j, path, "constraint")) {
        std::size_t k = 0;
        for (const auto& pair : array(*c, path + "/constraint")) {
            std::string p = path + "/constraint/" + std::to_string(k++);
            if (!pair.is_array() || pair.size() != 2)
                schema(p, "expected an [atom-id, state] pair");
            std::string id = token(pair[0], p + "/0");
            auto it = std::find_if(atoms.begin(), atoms.end(), [&](const Atom& a) { return a.id == id; });
            if (it == atoms.end())
                throw validation_error(p + ": constraint names unknown atom '" + id + "'");
            it->row.push_back(read_state_in(pair[1], p + "/1", vars));
        }
    }
    return located(path, [&] { return MixedSystem(vars, std::move(atoms)); });
}

std::vector<std::string> read_actions(const json& body, const std::string& path) {
    return tokens(field(body, path, "actions"), path + "/actions");
}

Mmdp read_mmdp(const json& body, const std::string& path) {
    auto actions = read_actions(body, path);
    VariableSet vars = read_variables(field(body, path, "variables"), path + "/variables");
    State initial = read_state_in(field(body, path, "initial"), path + "/initial", vars);
    std::map<TransitionKey, MixedSystem> transitions;
    std::size_t i = 0;
    for (const auto& t : array(field(body, path, "transitions"), path + "/transitions")) {
        std::string p = path + "/transitions/" + std::to_string(i++);
        State src = read_state_in(field(t, p, "source"), p + "/source", vars);
        std::string a = token(field(t, p, "action"), p + "/action");
        MixedSystem target = read_system(field(t, p, "target"), p + "/target", &vars);
        if (!transitions.emplace(TransitionKey{src, a}, std::move(target)).second)
            throw validation_error(p + ": determinism violation, second transition from {" + src.str() + "} on '" + a + "'");
    }
    return located(path, [&] { return Mmdp(std::move(actions), vars, std::move(initial), std::move(transitions)); });
}

MixedState read_mixed_state(const json& j, const std::string& path, const VariableSet& vars) {
    auto systems_of = [&](const json& arr, const std::string& p, const VariableSet& v) {
        std::vector<MixedSystem> out;
        std::size_t k = 0;
        for (const auto& s : array(arr, p)) {
            std::string ps = p + "/" + std::to_string(k++);
            out.push_back(read_system(s, ps, &v));
        }
        return out;
    };
    if (const json* f = optional_field(j, path, "factors")) {
        std::vector<MixedFactor> factors;
        std::size_t k = 0;
        for (const auto& x : array(*f, path + "/factors")) {
            std::string p = path + "/factors/" + std::to_string(k++);
            auto names = tokens(field(x, p, "variables"), p + "/variables");
            std::set<std::string> set(names.begin(), names.end());
            for (const auto& n : set)
                if (!vars.find(n))
                    throw validation_error(p + ": unknown variable '" + n + "'");
            VariableSet fv = vars.restrict(set);
            const json* top = optional_field(x, p, "top");
            if (top && !top->is_boolean())
                schema(p + "/top", "expected a boolean");
            if (top && top->get<bool>())
                factors.push_back(MixedFactor{fv, true, {}});
            else
                factors.push_back(MixedFactor{fv, false, systems_of(field(x, p, "systems"), p + "/systems", fv)});
        }
        return located(path, [&] { return MixedState(std::move(factors)); });
    }
    if (const json* top = optional_field(j, path, "top")) {
        if (!top->is_boolean() || !top->get<bool>())
            schema(path + "/top", "expected true");
        return MixedState::top(vars);
    }
    return MixedState::of(vars, systems_of(field(j, path, "systems"), path + "/systems", vars));
}

MixedInterface read_interface(const json& body, const std::string& path) {
    auto actions = read_actions(body, path);
    VariableSet vars = read_variables(field(body, path, "variables"), path + "/variables");
    std::vector<State> states;
    if (const json* s = optional_field(body, path, "states")) {
        std::size_t i = 0;
        for (const auto& q : array(*s, path + "/states")) {
            std::string p = path + "/states/" + std::to_string(i++);
            states.push_back(read_state_in(q, p, vars));
        }
    } else {
        states = vars.enumerate();
    }
    std::optional<State> initial;
    if (const json* q = optional_field(body, path, "initial"); q && !q->is_null())
        initial = read_state_in(*q, path + "/initial", vars);
    auto read_map = [&](const char* key) {
        MixedInterface::Transitions out;
        const json* arr = optional_field(body, path, key);
        if (!arr)
            return out;
        std::size_t i = 0;
        for (const auto& t : array(*arr, path + "/" + key)) {
            std::string p = path + "/" + key + "/" + std::to_string(i++);
            State src = read_state_in(field(t, p, "source"), p + "/source", vars);
            std::string a = token(field(t, p, "action"), p + "/action");
            MixedState target = read_mixed_state(field(t, p, "target"), p + "/target", vars);
            if (!out.emplace(TransitionKey{src, a}, std::move(target)).second)
                throw validation_error(p + ": determinism violation, second " + key + " target from {" + src.str() +
                                       "} on '" + a + "'");
        }
        return out;
    };
    auto may = read_map("may");
    auto must = read_map("must");
    MixedInterface c = located(path, [&] {
        return MixedInterface(std::move(actions), vars, std::move(states), std::move(initial), std::move(may), std::move(must));
    });
    auto report = validate_interface(c);
    if (!report.valid)
        throw validation_error(path + ": " + report.issues.front());
    return c;
}

Distribution read_distribution(const json& j, const std::string& path) {
    if (!j.is_object())
        schema(path, "expected a distribution object mapping states to probabilities");
    Distribution d;
    for (auto it = j.begin(); it != j.end(); ++it)
        d[it.key()] = rational(it.value(), path + "/" + it.key());
    return d;
}

std::vector<Distribution> read_family(const json& j, const std::string& path) {
    std::vector<Distribution> out;
    std::size_t i = 0;
    for (const auto& d : array(j, path))
        out.push_back(read_distribution(d, path + "/" + std::to_string(i++)));
    return out;
}

ProbAutomaton read_pa(const json& body, const std::string& path) {
    ProbAutomaton p;
    p.actions = read_actions(body, path);
    p.states = tokens(field(body, path, "states"), path + "/states");
    p.initial = token(field(body, path, "initial"), path + "/initial");
    std::size_t i = 0;
    for (const auto& t : array(field(body, path, "transitions"), path + "/transitions")) {
        std::string pt = path + "/transitions/" + std::to_string(i++);
        std::string src = token(field(t, pt, "source"), pt + "/source");
        std::string a = token(field(t, pt, "action"), pt + "/action");
        auto fam = read_family(field(t, pt, "distributions"), pt + "/distributions");
        auto& slot = p.transitions[{src, a}];
        slot.insert(slot.end(), fam.begin(), fam.end());
    }
    located(path, [&] { p.normalize(); return 0; });
    return p;
}

std::set<std::string> read_prop_set(const json& j, const std::string& path) {
    auto v = tokens(j, path);
    return {v.begin(), v.end()};
}

MarkovChain read_mc(const json& body, const std::string& path) {
    MarkovChain p;
    p.states = tokens(field(body, path, "states"), path + "/states");
    p.initial = token(field(body, path, "initial"), path + "/initial");
    const json& matrix = field(body, path, "matrix");
    if (!matrix.is_object())
        schema(path + "/matrix", "expected an object of rows");
    for (auto it = matrix.begin(); it != matrix.end(); ++it)
        p.matrix[it.key()] = read_distribution(it.value(), path + "/matrix/" + it.key());
    if (const json* props = optional_field(body, path, "propositions"))
        p.propositions = tokens(*props, path + "/propositions");
    if (const json* val = optional_field(body, path, "valuation")) {
        if (!val->is_object())
            schema(path + "/valuation", "expected an object");
        for (auto it = val->begin(); it != val->end(); ++it)
            p.valuation[it.key()] = read_prop_set(it.value(), path + "/valuation/" + it.key());
    }
    located(path, [&] { p.normalize(); return 0; });
    return p;
}

ConstraintMarkovChain read_cmc(const json& body, const std::string& path) {
    ConstraintMarkovChain s;
    s.states = tokens(field(body, path, "states"), path + "/states");
    s.initial = token(field(body, path, "initial"), path + "/initial");
    const json& phi = field(body, path, "phi");
    if (!phi.is_object())
        schema(path + "/phi", "expected an object");
    for (auto it = phi.begin(); it != phi.end(); ++it)
        s.phi[it.key()] = read_family(it.value(), path + "/phi/" + it.key());
    if (const json* props = optional_field(body, path, "propositions"))
        s.propositions = tokens(*props, path + "/propositions");
    const json& vals = field(body, path, "valuations");
    if (!vals.is_object())
        schema(path + "/valuations", "expected an object");
    for (auto it = vals.begin(); it != vals.end(); ++it) {
        std::size_t k = 0;
        for (const auto& v : array(it.value(), path + "/valuations/" + it.key()))
            s.valuations[it.key()].push_back(read_prop_set(v, path + "/valuations/" + it.key() + "/" + std::to_string(k++)));
    }
    located(path, [&] { s.normalize(); return 0; });
    return s;
}

StateRelation read_relation(const json& body, const std::string& path) {
    VariableSet left = read_variables(field(body, path, "left"), path + "/left");
    VariableSet right = read_variables(field(body, path, "right"), path + "/right");
    StateRelation r(left, right);
    std::size_t i = 0;
    for (const auto& pr : array(field(body, path, "pairs"), path + "/pairs")) {
        std::string p = path + "/pairs/" + std::to_string(i++);
        if (!pr.is_array() || pr.size() != 2)
            schema(p, "expected a [left, right] pair of states");
        r.insert(read_state_in(pr[0], p + "/0", left), read_state_in(pr[1], p + "/1", right));
    }
    return r;
}

CouplingWitness read_witness(const json& body, const std::string& path) {
    CouplingWitness w;
    std::size_t i = 0;
    for (const auto& e : array(field(body, path, "entries"), path + "/entries")) {
        std::string p = path + "/entries/" + std::to_string(i++);
        AtomPair key{token(field(e, p, "left"), p + "/left"), token(field(e, p, "right"), p + "/right")};
        Rational x = rational(field(e, p, "weight"), p + "/weight");
        if (x.is_negative())
            throw validation_error(p + ": negative coupling weight");
        if (!w.entries.emplace(key, x).second)
            throw validation_error(p + ": duplicate entry");
    }
    return w;
}

// ---- writing -------------------------------------------------------------

json variables_json(const VariableSet& vars) {
    json out = json::array();
    for (const auto& d : vars.decls())
        out.push_back({{"name", d.name}, {"domain", d.domain}, {"observable", d.observable}});
    return out;
}

json system_json(const MixedSystem& s, bool with_variables) {
    json atoms = json::array();
    for (const auto& a : s.atoms()) {
        json row = json::array();
        for (const auto& q : a.row)
            row.push_back(to_json(q));
        atoms.push_back({{"id", a.id}, {"weight", a.weight.str()}, {"row", row}});
    }
    json out{{"atoms", atoms}};
    if (with_variables)
        out["variables"] = variables_json(s.variables());
    return out;
}


template <class Map>
std::vector<typename Map::const_iterator> canonical_keys(const VariableSet& vars, const Map& map) {
    std::vector<typename Map::const_iterator> its;
    for (auto it = map.begin(); it != map.end(); ++it)
        its.push_back(it);
    std::stable_sort(its.begin(), its.end(), [&](auto a, auto b) {
        if (a->first.first != b->first.first)
            return vars.canonical_less(a->first.first, b->first.first);
        return a->first.second < b->first.second;
    });
    return its;
}

json mmdp_json(const Mmdp& m) {
    json transitions = json::array();
    for (auto it : canonical_keys(m.variables(), m.transitions()))
        transitions.push_back({{"source", to_json(it->first.first)},
                               {"action", it->first.second},
                               {"target", system_json(it->second, false)}});
    return {{"actions", m.actions()},
            {"variables", variables_json(m.variables())},
            {"initial", to_json(m.initial())},
            {"transitions", transitions}};
}

json mixed_state_json(const MixedState& s) {
    auto systems = [](const MixedFactor& f) {
        json arr = json::array();
        for (const auto& m : f.systems)
            arr.push_back(system_json(m, false));
        return arr;
    };
    if (s.factors().size() == 1) {
        const auto& f = s.factors().front();
        if (f.top)
            return {{"top", true}};
        return {{"systems", systems(f)}};
    }
    json factors = json::array();
    for (const auto& f : s.factors()) {
        json names = json::array();
        for (const auto& d : f.variables.decls())
            names.push_back(d.name);
        json jf{{"variables", names}, {"top", f.top}};
        if (!f.top)
            jf["systems"] = systems(f);
        factors.push_back(jf);
    }
    return {{"factors", factors}};
}

json interface_json(const MixedInterface& c) {
    auto entries = [&](const MixedInterface::Transitions& map) {
        json arr = json::array();
        for (auto it : canonical_keys(c.variables(), map))
            arr.push_back({{"source", to_json(it->first.first)},
                           {"action", it->first.second},
                           {"target", mixed_state_json(it->second)}});
        return arr;
    };
    json states = json::array();
    for (const auto& q : c.states())
        states.push_back(to_json(q));
    return {{"actions", c.actions()},
            {"variables", variables_json(c.variables())},
            {"states", states},
            {"initial", c.initial() ? to_json(*c.initial()) : json(nullptr)},
            {"may", entries(c.may())},
            {"must", entries(c.must())}};
}

json distribution_json(const Distribution& d) {
    json out = json::object();
    for (const auto& [q, w] : d)
        out[q] = w.str();
    return out;
}

json family_json(const std::vector<Distribution>& f) {
    json arr = json::array();
    for (const auto& d : f)
        arr.push_back(distribution_json(d));
    return arr;
}

json pa_json(const ProbAutomaton& p) {
    json transitions = json::array();
    for (const auto& [key, fam] : p.transitions)
        transitions.push_back({{"source", key.first}, {"action", key.second}, {"distributions", family_json(fam)}});
    return {{"actions", p.actions}, {"states", p.states}, {"initial", p.initial}, {"transitions", transitions}};
}

json mc_json(const MarkovChain& p) {
    json matrix = json::object(), valuation = json::object();
    for (const auto& [q, row] : p.matrix)
        matrix[q] = distribution_json(row);
    for (const auto& [q, v] : p.valuation)
        valuation[q] = v;
    return {{"states", p.states},
            {"initial", p.initial},
            {"matrix", matrix},
            {"propositions", p.propositions},
            {"valuation", valuation}};
}

json cmc_json(const ConstraintMarkovChain& s) {
    json phi = json::object(), vals = json::object();
    for (const auto& [q, fam] : s.phi)
        phi[q] = family_json(fam);
    for (const auto& [q, vs] : s.valuations) {
        json arr = json::array();
        for (const auto& v : vs)
            arr.push_back(v);
        vals[q] = arr;
    }
    return {{"states", s.states},
            {"initial", s.initial},
            {"phi", phi},
            {"propositions", s.propositions},
            {"valuations", vals}};
}

const std::pair<ModelKind, const char*> kind_names[] = {
    {ModelKind::mixed_system, "mixed-system"}, {ModelKind::mmdp, "mmdp"}, {ModelKind::interface, "interface"},
    {ModelKind::pa, "pa"},                     {ModelKind::mc, "mc"},     {ModelKind::cmc, "cmc"},
    {ModelKind::relation, "relation"},         {ModelKind::witness, "witness"}};

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
        throw syntax_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + e.what(), line,
                           column);
    }
}

} // namespace

std::string kind_name(ModelKind kind) {
    for (const auto& [k, n] : kind_names)
        if (k == kind)
            return n;
    return "unknown";
}

ModelDocument make_document(ModelBody body) {
    static constexpr ModelKind by_index[] = {ModelKind::mixed_system, ModelKind::mmdp, ModelKind::interface, ModelKind::pa,
                                             ModelKind::mc,           ModelKind::cmc,  ModelKind::relation,  ModelKind::witness};
    ModelKind kind = by_index[body.index()];
    return ModelDocument{kind, format_version, std::move(body)};
}

json to_json(const State& q) {
    json out = json::object();
    for (const auto& [var, val] : q.bindings())
        out[var] = val;
    return out;
}

json to_json(const StateRelation& r) {
    std::vector<std::pair<State, State>> pairs(r.pairs().begin(), r.pairs().end());
    std::sort(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
        if (a.first != b.first)
            return r.left().canonical_less(a.first, b.first);
        return r.right().canonical_less(a.second, b.second);
    });
    json arr = json::array();
    for (const auto& [a, b] : pairs)
        arr.push_back(json::array({to_json(a), to_json(b)}));
    return {{"left", variables_json(r.left())}, {"right", variables_json(r.right())}, {"pairs", arr}};
}

json to_json(const CouplingWitness& w) {
    json arr = json::array();
    for (const auto& [k, v] : w.entries)
        arr.push_back({{"left", k.first}, {"right", k.second}, {"weight", v.str()}});
    return {{"entries", arr}};
}

json to_json(const OutcomeTable& t) {
    json arr = json::array();
    for (const auto& row : t) {
        json states = json::array();
        for (const auto& q : row.states)
            states.push_back(to_json(q));
        arr.push_back({{"atom", row.atom}, {"weight", row.weight.str()}, {"states", states}});
    }
    return arr;
}

json to_json(const Verdict& v) {
    json out{{"holds", v.holds}, {"iterations", v.iterations}, {"relation", to_json(v.relation)}};
    if (v.counterexample)
        out["counterexample"] = {{"left", to_json(v.counterexample->left)},
                                 {"right", to_json(v.counterexample->right)},
                                 {"action", v.counterexample->action},
                                 {"reason", v.counterexample->reason}};
    return out;
}

json to_json(const NamedVerdict& v) {
    json pairs = json::array();
    for (const auto& [a, b] : v.relation)
        pairs.push_back(json::array({a, b}));
    json out{{"holds", v.holds}, {"iterations", v.iterations}, {"relation", pairs}};
    if (v.counterexample)
        out["counterexample"] = {{"left", v.counterexample->left},
                                 {"right", v.counterexample->right},
                                 {"action", v.counterexample->action},
                                 {"reason", v.counterexample->reason}};
    return out;
}

std::string serialize_trace(const RunTrace& trace) {
    std::string out;
    for (const auto& s : trace.steps) {
        json line{{"source", to_json(s.source)}, {"action", s.action}, {"atom", s.atom}, {"target", to_json(s.target)}};
        out += line.dump() + "\n";
    }
    return out;
}

ModelDocument parse_model(std::string_view text) {
    json doc = parse_json(text);
    std::string kind_text = token(field(doc, "", "kind"), "/kind");
    const json& version = field(doc, "", "version");
    if (!version.is_number_integer())
        schema("/version", "expected an integer");
    if (version.get<int>() != format_version)
        schema("/version", "unsupported format version " + version.dump());
    const json& body = field(doc, "", "body");
    if (!body.is_object())
        schema("/body", "expected an object");
    const std::string p = "/body";
    for (const auto& [k, n] : kind_names) {
        if (kind_text != n)
            continue;
        switch (k) {
        case ModelKind::mixed_system: return make_document(read_system(body, p, nullptr));
        case ModelKind::mmdp: return make_document(read_mmdp(body, p));
        case ModelKind::interface: return make_document(read_interface(body, p));
        case ModelKind::pa: return make_document(read_pa(body, p));
        case ModelKind::mc: return make_document(read_mc(body, p));
        case ModelKind::cmc: return make_document(read_cmc(body, p));
        case ModelKind::relation: return make_document(read_relation(body, p));
        case ModelKind::witness: return make_document(read_witness(body, p));
        }
    }
    schema("/kind", "unknown model kind '" + kind_text + "'");
}

std::string serialize_model(const ModelDocument& doc) {
    json body = std::visit(
        [](const auto& x) -> json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, MixedSystem>) return system_json(x, true);
            else if constexpr (std::is_same_v<T, Mmdp>) return mmdp_json(x);
            else if constexpr (std::is_same_v<T, MixedInterface>) return interface_json(x);
            else if constexpr (std::is_same_v<T, ProbAutomaton>) return pa_json(x);
            else if constexpr (std::is_same_v<T, MarkovChain>) return mc_json(x);
            else if constexpr (std::is_same_v<T, ConstraintMarkovChain>) return cmc_json(x);
            else if constexpr (std::is_same_v<T, StateRelation>) return to_json(x);
            else return to_json(x);
        },
        doc.body);
    json out{{"kind", kind_name(doc.kind)}, {"version", doc.version}, {"body", body}};
    return out.dump(2) + "\n";
}

ModelDocument load_model(const std::string& path) { return parse_model(read_file(path)); }

void save_model(const ModelDocument& doc, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw error("cannot write '" + path + "'");
    out << serialize_model(doc);
}

std::vector<State> parse_state_script(std::string_view text) {
    json j = parse_json(text);
    std::vector<State> out;
    std::size_t i = 0;
    for (const auto& q : array(j, ""))
        out.push_back(read_state(q, "/" + std::to_string(i++)));
    return out;
}

std::vector<std::string> parse_action_script(std::string_view text) { return tokens(parse_json(text), ""); }

} // namespace mixspec
