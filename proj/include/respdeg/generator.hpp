#pragma once

#include "respdeg/cgs.hpp"

#include <cstdint>

namespace respdeg
{

struct generator_params
{
    std::size_t agents = 2;
    std::size_t states = 3;
    std::size_t actions = 2;
    /// Probability that an action is available to an agent at a state. Empty
    /// draws are repaired with one random action.
    double density = 0.5;
    /// Cap on available actions per agent and state; 0 means no cap.
    std::size_t max_available = 0;
    std::uint64_t seed = 0;
};

/// Seeded random model with names a1.., q0.., and x0... Reproducible for a
/// given seed on every platform.
cgs generate_model(const generator_params& params);

/// Seeded random subset of the states; each state is included with
/// probability `density`.
state_set generate_affairs(std::size_t num_states, double density, std::uint64_t seed);

} // namespace respdeg
