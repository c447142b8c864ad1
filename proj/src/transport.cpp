#include "mixspec/transport.hpp"

#include <deque>

#include "mixspec/errors.hpp"

namespace mixspec {

Rational CouplingWitness::at(const std::string& left, const std::string& right) const {
    auto it = entries.find({left, right});
    return it == entries.end() ? Rational() : it->second;
}

std::map<std::string, Rational> CouplingWitness::left_marginal() const {
    std::map<std::string, Rational> m;
    for (const auto& [k, v] : entries)
        m[k.first] += v;
    return m;
}

std::map<std::string, Rational> CouplingWitness::right_marginal() const {
    std::map<std::string, Rational> m;
    for (const auto& [k, v] : entries)
        m[k.second] += v;
    return m;
}

std::optional<TransportPlan> solve_transport(const std::vector<Rational>& supply,
                                             const std::vector<Rational>& demand,
                                             const std::vector<std::vector<char>>& allowed) {
    const std::size_t n = supply.size(), m = demand.size();
    Rational total, total_demand;
    for (const auto& x : supply) {
        if (x.is_negative())
            throw validation_error("negative supply " + x.str());
        total += x;
    }
    for (const auto& x : demand) {
        if (x.is_negative())
            throw validation_error("negative demand " + x.str());
        total_demand += x;
    }
    if (total != total_demand)
        throw validation_error("transport marginals carry different mass: " + total.str() + " vs " +
                               total_demand.str());

    // Zero-mass atoms carry no flow; only positive ones enter the network.
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 0; i < n; ++i)
        if (supply[i].is_positive())
            rows.push_back(i);
    for (std::size_t j = 0; j < m; ++j)
        if (demand[j].is_positive())
            cols.push_back(j);
    const std::size_t R = rows.size(), C = cols.size();

    // Node layout: 0 source, 1..R supplies, R+1..R+C demands, R+C+1 sink.
    // Edges are stored in pairs so that e ^ 1 is the reverse of e.
    const std::size_t N = R + C + 2, source = 0, sink = R + C + 1;
    struct Edge {
        std::size_t to;
        Rational residual;
    };
    std::vector<Edge> edges;
    std::vector<std::vector<std::size_t>> adj(N);
    auto link = [&](std::size_t u, std::size_t v, const Rational& c) {
        adj[u].push_back(edges.size());
        edges.push_back({v, c});
        adj[v].push_back(edges.size());
        edges.push_back({u, Rational()});
    };
    for (std::size_t i = 0; i < R; ++i)
        link(source, 1 + i, supply[rows[i]]);
    for (std::size_t j = 0; j < C; ++j)
        link(1 + R + j, sink, demand[cols[j]]);
    // No edge can carry more than the total mass, so `total` stands in for an unbounded capacity.
    std::vector<std::vector<std::ptrdiff_t>> middle(R, std::vector<std::ptrdiff_t>(C, -1));
    for (std::size_t i = 0; i < R; ++i)
        for (std::size_t j = 0; j < C; ++j)
            if (allowed[rows[i]][cols[j]]) {
                middle[i][j] = static_cast<std::ptrdiff_t>(edges.size());
                link(1 + i, 1 + R + j, total);
            }

    Rational pushed;
    while (pushed < total) {
        std::vector<std::ptrdiff_t> via(N, -1); // edge used to reach the node
        std::vector<char> reached(N, 0);
        reached[source] = 1;
        std::deque<std::size_t> queue{source};
        while (!queue.empty() && !reached[sink]) {
            std::size_t u = queue.front();
            queue.pop_front();
            for (std::size_t e : adj[u]) {
                std::size_t v = edges[e].to;
                if (!reached[v] && edges[e].residual.is_positive()) {
                    reached[v] = 1;
                    via[v] = static_cast<std::ptrdiff_t>(e);
                    queue.push_back(v);
                }
            }
        }
        if (!reached[sink])
            break;
        Rational bottleneck = total - pushed;
        for (std::size_t v = sink; v != source; v = edges[static_cast<std::size_t>(via[v]) ^ 1].to)
            if (edges[static_cast<std::size_t>(via[v])].residual < bottleneck)
                bottleneck = edges[static_cast<std::size_t>(via[v])].residual;
        for (std::size_t v = sink; v != source; v = edges[static_cast<std::size_t>(via[v]) ^ 1].to) {
            auto e = static_cast<std::size_t>(via[v]);
            edges[e].residual -= bottleneck;
            edges[e ^ 1].residual += bottleneck;
        }
        pushed += bottleneck;
    }
    if (pushed != total)
        return std::nullopt;

    TransportPlan plan(n, std::vector<Rational>(m));
    for (std::size_t i = 0; i < R; ++i)
        for (std::size_t j = 0; j < C; ++j)
            if (middle[i][j] >= 0)
                plan[rows[i]][cols[j]] = edges[static_cast<std::size_t>(middle[i][j]) ^ 1].residual;
    return plan;
}

std::optional<CouplingWitness> transport_feasible(const Marginal& mu1, const Marginal& mu2,
                                                  const std::set<AtomPair>& allowed) {
    std::vector<Rational> supply, demand;
    for (const auto& a : mu1)
        supply.push_back(a.weight);
    for (const auto& b : mu2)
        demand.push_back(b.weight);
    std::vector<std::vector<char>> mask(mu1.size(), std::vector<char>(mu2.size(), 0));
    for (std::size_t i = 0; i < mu1.size(); ++i)
        for (std::size_t j = 0; j < mu2.size(); ++j)
            mask[i][j] = allowed.count({mu1[i].id, mu2[j].id}) ? 1 : 0;
    auto plan = solve_transport(supply, demand, mask);
    if (!plan)
        return std::nullopt;
    CouplingWitness w;
    for (std::size_t i = 0; i < mu1.size(); ++i)
        for (std::size_t j = 0; j < mu2.size(); ++j)
            if ((*plan)[i][j].is_positive())
                w.entries[{mu1[i].id, mu2[j].id}] += (*plan)[i][j];
    return w;
}

std::vector<std::string> check_coupling(const CouplingWitness& w, const Marginal& mu1, const Marginal& mu2,
                                        const std::set<AtomPair>* allowed) {
    std::vector<std::string> issues;
    std::map<std::string, Rational> want1, want2;
    for (const auto& a : mu1)
        want1[a.id] += a.weight;
    for (const auto& b : mu2)
        want2[b.id] += b.weight;
    for (const auto& [k, v] : w.entries) {
        if (v.is_negative())
            issues.push_back("negative entry at (" + k.first + "," + k.second + ")");
        if (!want1.count(k.first))
            issues.push_back("unknown left atom '" + k.first + "'");
        if (!want2.count(k.second))
            issues.push_back("unknown right atom '" + k.second + "'");
        if (allowed && v.is_positive() && !allowed->count(k))
            issues.push_back("positive entry outside the allowed support at (" + k.first + "," + k.second + ")");
    }
    auto got1 = w.left_marginal();
    auto got2 = w.right_marginal();
    for (const auto& [id, v] : want1)
        if (got1[id] != v)
            issues.push_back("left marginal of '" + id + "' is " + got1[id].str() + ", expected " + v.str());
    for (const auto& [id, v] : want2)
        if (got2[id] != v)
            issues.push_back("right marginal of '" + id + "' is " + got2[id].str() + ", expected " + v.str());
    return issues;
}

} // namespace mixspec
