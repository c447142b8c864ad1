#include "oracles.hpp"

#include <map>
#include <memory>

namespace oracle {

bool transport_feasible(const std::vector<Rational>& supply, const std::vector<Rational>& demand,
                        const std::vector<std::vector<char>>& allowed) {
    Rational a, b;
    for (const auto& x : supply)
        a = a + x;
    for (const auto& y : demand)
        b = b + y;
    if (a != b)
        return false;
    std::size_t n = supply.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        Rational out, in;
        std::vector<char> reached(demand.size(), 0);
        for (std::size_t i = 0; i < n; ++i) {
            if (!(mask >> i & 1))
                continue;
            out = out + supply[i];
            for (std::size_t j = 0; j < demand.size(); ++j)
                if (allowed[i][j])
                    reached[j] = 1;
        }
        for (std::size_t j = 0; j < demand.size(); ++j)
            if (reached[j])
                in = in + demand[j];
        if (out > in)
            return false;
    }
    return true;
}

bool marginals_match(const CouplingWitness& w, const MixedSystem& s1, const MixedSystem& s2) {
    std::map<std::string, Rational> left, right;
    for (const auto& [pair, x] : w.entries) {
        if (x.is_negative())
            return false;
        if (!s1.atom(pair.first) || !s2.atom(pair.second))
            return false;
        left[pair.first] = left[pair.first] + x;
        right[pair.second] = right[pair.second] + x;
    }
    for (const auto& a : s1.atoms())
        if (left[a.id] != a.weight)
            return false;
    for (const auto& a : s2.atoms())
        if (right[a.id] != a.weight)
            return false;
    return true;
}

bool coupling_valid(const CouplingWitness& w, const MixedSystem& s1, const MixedSystem& s2, const StateRelation& rho) {
    if (!marginals_match(w, s1, s2))
        return false;
    for (const auto& [pair, x] : w.entries) {
        if (x.is_zero())
            continue;
        const Atom* a1 = s1.atom(pair.first);
        const Atom* a2 = s2.atom(pair.second);
        for (const auto& q1 : a1->row) {
            bool hit = false;
            for (const auto& q2 : a2->row)
                hit = hit || rho.pairs().count({q1, q2});
            if (!hit)
                return false;
        }
    }
    return true;
}

namespace {

struct Node {
    enum Kind { stop, step, fork, coin } kind = stop;
    std::vector<std::shared_ptr<const Node>> kids;
};
using Level = std::vector<std::shared_ptr<const Node>>;

Level shapes(std::size_t depth) {
    Level out{std::make_shared<Node>()};
    if (depth == 0)
        return out;
    Level below = shapes(depth - 1);
    for (const auto& k : below)
        out.push_back(std::make_shared<Node>(Node{Node::step, {k}}));
    for (auto kind : {Node::fork, Node::coin})
        for (const auto& k1 : below)
            for (const auto& k2 : below)
                out.push_back(std::make_shared<Node>(Node{kind, {k1, k2}}));
    return out;
}

std::size_t count_nodes(const Node& n) {
    std::size_t c = 1;
    for (const auto& k : n.kids)
        c += count_nodes(*k);
    return c;
}

State tag(std::size_t i) { return State{{"t", std::to_string(i)}}; }

std::size_t emit(const Node& n, std::size_t& next, const VariableSet& vars, const std::string& action,
                 std::map<TransitionKey, MixedSystem>& out) {
    std::size_t me = next++;
    std::vector<std::size_t> kids;
    for (const auto& k : n.kids)
        kids.push_back(emit(*k, next, vars, action, out));
    switch (n.kind) {
    case Node::stop:
        break;
    case Node::step:
        out.emplace(TransitionKey{tag(me), action}, MixedSystem::dirac(vars, tag(kids[0])));
        break;
    case Node::fork:
        out.emplace(TransitionKey{tag(me), action},
                    MixedSystem(vars, {Atom{"w", Rational(1), {tag(kids[0]), tag(kids[1])}}}));
        break;
    case Node::coin:
        out.emplace(TransitionKey{tag(me), action},
                    MixedSystem(vars, {Atom{"h", Rational(1, 2), {tag(kids[0])}}, Atom{"t", Rational(1, 2), {tag(kids[1])}}}));
        break;
    }
    return me;
}

} // namespace

std::vector<Mmdp> tree_models(std::size_t depth, const std::string& action) {
    std::vector<Mmdp> out;
    for (const auto& shape : shapes(depth)) {
        std::size_t n = count_nodes(*shape);
        std::vector<std::string> domain;
        for (std::size_t i = 0; i < n; ++i)
            domain.push_back(std::to_string(i));
        VariableSet vars({VariableDecl{"t", domain, false}});
        std::map<TransitionKey, MixedSystem> t;
        std::size_t next = 0;
        emit(*shape, next, vars, action, t);
        out.emplace_back(std::vector<std::string>{action}, vars, tag(0), std::move(t));
    }
    return out;
}

std::size_t tree_model_count(std::size_t depth) {
    std::size_t n = 1;
    for (std::size_t d = 0; d < depth; ++d)
        n = 1 + n + 2 * n * n;
    return n;
}

} // namespace oracle
