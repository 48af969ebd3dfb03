#include "respdeg/generator.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace respdeg
{

namespace
{

// Draws from the raw engine output only; the standard distributions are not
// reproducible across library implementations.
class rng
{
    std::mt19937_64 engine_;

public:
    explicit rng(std::uint64_t seed) : engine_{ seed } {}

    std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
    bool chance(double p) { return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p; }
};

std::vector<std::string> names(const char* prefix, std::size_t n, std::size_t first = 0)
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(prefix + std::to_string(first + i));
    return out;
}

} // namespace

cgs generate_model(const generator_params& params)
{
    if (params.agents == 0 || params.states == 0 || params.actions == 0)
        throw std::invalid_argument("generated models need at least one agent, state and action");
    rng random{ params.seed };

    std::vector<profile_layout> layouts;
    std::vector<std::vector<state_id>> successors;
    for (std::size_t q = 0; q < params.states; ++q)
    {
        std::vector<std::vector<action_id>> available(params.agents);
        for (auto& acts : available)
        {
            for (std::size_t a = 0; a < params.actions; ++a)
                if (random.chance(params.density))
                    acts.emplace_back(a);
            if (acts.empty())
                acts.emplace_back(random.below(params.actions));
            while (params.max_available != 0 && acts.size() > params.max_available)
                acts.erase(acts.begin() + static_cast<std::ptrdiff_t>(random.below(acts.size())));
        }
        layouts.emplace_back(std::move(available));
        std::vector<state_id> succ(layouts.back().count());
        for (auto& s : succ)
            s = state_id{ random.below(params.states) };
        successors.push_back(std::move(succ));
    }
    return cgs{ names("a", params.agents, 1), names("q", params.states), names("x", params.actions), std::move(layouts),
                std::move(successors) };
}

state_set generate_affairs(std::size_t num_states, double density, std::uint64_t seed)
{
    rng random{ seed };
    state_set out{ num_states };
    for (std::size_t q = 0; q < num_states; ++q)
        if (random.chance(density))
            out.set(state_id{ q });
    return out;
}

} // namespace respdeg
