#include "mixspec/mixed_system.hpp"

#include <algorithm>

#include "mixspec/errors.hpp"

namespace mixspec {

mpz_class uniform_below(Rng& rng, const mpz_class& bound) {
    if (bound <= 0)
        throw validation_error("uniform_below needs a positive bound");
    std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
    std::size_t chunks = (bits + 63) / 64;
    mpz_class range;
    mpz_ui_pow_ui(range.get_mpz_t(), 2, 64 * chunks);
    mpz_class limit = range - range % bound;
    for (;;) {
        mpz_class x = 0;
        for (std::size_t i = 0; i < chunks; ++i) {
            std::uint64_t word = rng();
            x <<= 64;
            x += mpz_class(static_cast<unsigned long>(word >> 32)) << 32;
            x += mpz_class(static_cast<unsigned long>(word & 0xffffffffu));
        }
        if (x < limit)
            return x % bound;
    }
}

State Resolver::pick(const std::vector<State>& admissible, Rng& rng) {
    switch (kind_) {
    case Kind::min:
        return admissible.front();
    case Kind::random: {
        auto i = uniform_below(rng, mpz_class(static_cast<unsigned long>(admissible.size())));
        return admissible[i.get_ui()];
    }
    case Kind::scripted: {
        if (cursor_ >= script_.size())
            throw resolver_exhausted("scripted resolver exhausted after " + std::to_string(cursor_) + " picks");
        const State& q = script_[cursor_++];
        if (std::find(admissible.begin(), admissible.end(), q) == admissible.end())
            throw validation_error("scripted resolver state {" + q.str() + "} is not admissible");
        return q;
    }
    case Kind::prefer:
        for (const auto& q : script_)
            if (std::find(admissible.begin(), admissible.end(), q) != admissible.end())
                return q;
        return admissible.front();
    }
    return admissible.front();
}

Outcome sample_outcome(const MixedSystem& s, Rng& rng, Resolver& resolver) {
    OutcomeTable table = outcome_distribution(s);
    mpz_class common = 1;
    for (const auto& row : table)
        mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), row.weight.denominator().get_mpz_t());
    mpz_class draw = uniform_below(rng, common);
    const OutcomeRow* chosen = &table.back();
    mpz_class acc = 0;
    for (const auto& row : table) {
        acc += row.weight.numerator() * (common / row.weight.denominator());
        if (draw < acc) {
            chosen = &row;
            break;
        }
    }
    return Outcome{chosen->atom, resolver.pick(chosen->states, rng)};
}

State sample_outcome(const MixedSystem& s, std::uint64_t seed, Resolver& resolver) {
    Rng rng(seed);
    return sample_outcome(s, rng, resolver).state;
}

} // namespace mixspec
