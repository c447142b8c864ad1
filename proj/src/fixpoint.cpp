#include "mixspec/fixpoint.hpp"

#include <algorithm>

namespace mixspec {

namespace {

std::vector<std::pair<State, std::size_t>> make_index(const std::vector<State>& states) {
    std::vector<std::pair<State, std::size_t>> idx;
    for (std::size_t i = 0; i < states.size(); ++i)
        idx.emplace_back(states[i], i);
    std::sort(idx.begin(), idx.end());
    return idx;
}

std::optional<std::size_t> lookup(const std::vector<std::pair<State, std::size_t>>& idx, const State& q) {
    auto it = std::lower_bound(idx.begin(), idx.end(), q,
                               [](const auto& entry, const State& key) { return entry.first < key; });
    if (it == idx.end() || it->first != q)
        return std::nullopt;
    return it->second;
}

} // namespace

PairSpace::PairSpace(std::vector<State> left, std::vector<State> right)
    : left_(std::move(left)), right_(std::move(right)), left_index_(make_index(left_)),
      right_index_(make_index(right_)) {}

std::optional<std::size_t> PairSpace::left_index(const State& q) const { return lookup(left_index_, q); }
std::optional<std::size_t> PairSpace::right_index(const State& q) const { return lookup(right_index_, q); }

RelationView PairSpace::view(const std::vector<char>& alive) const {
    return RelationView{
        [this, &alive](const State& a, const State& b) {
            auto i = left_index(a);
            auto j = right_index(b);
            return i && j && alive[index(*i, *j)];
        },
        [this, &alive](const State& a) {
            auto i = left_index(a);
            if (!i)
                return false;
            for (std::size_t j = 0; j < right_.size(); ++j)
                if (alive[index(*i, j)])
                    return true;
            return false;
        }};
}

StateRelation PairSpace::relation(const VariableSet& lv, const VariableSet& rv, const std::vector<char>& alive) const {
    StateRelation r(lv, rv);
    for (std::size_t p = 0; p < size(); ++p)
        if (alive[p])
            r.insert(left_state(p), right_state(p));
    return r;
}

} // namespace mixspec
