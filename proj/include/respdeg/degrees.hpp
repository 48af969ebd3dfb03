#pragma once

#include "respdeg/responsibility.hpp"

#include <boost/rational.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace respdeg
{

/// Exact rational degree in [0, 1], kept in reduced form.
class degree_value
{
    boost::rational<std::int64_t> value_;

public:
    degree_value() = default;
    /// Throws std::domain_error outside [0, 1] or on a zero denominator.
    degree_value(std::int64_t numerator, std::int64_t denominator);

    static degree_value zero() { return {}; }
    static degree_value one() { return { 1, 1 }; }

    [[nodiscard]] std::int64_t numerator() const { return value_.numerator(); }
    [[nodiscard]] std::int64_t denominator() const { return value_.denominator(); }

    /// "0", "1", or "p/q".
    [[nodiscard]] std::string fraction() const;
    /// Fixed-point rendering with round-half-even; precision is capped at 18.
    [[nodiscard]] std::string decimal(unsigned precision = 4) const;
    /// "p/q (d.dddd)"
    [[nodiscard]] std::string to_string(unsigned precision = 4) const;

    bool operator==(const degree_value& other) const { return value_ == other.value_; }
    std::strong_ordering operator<=>(const degree_value& other) const;
};

/// Members of the responsible coalition that the query coalition lacks.
std::size_t power_difference(coalition responsible, coalition query);

struct sdr_result
{
    /// Nullopt when no coalition is responsible (the degree is undefined).
    std::optional<degree_value> value;
    /// A responsible coalition attaining the maximum: the smallest one, then
    /// the lowest bitset.
    std::optional<coalition> witness;

    [[nodiscard]] bool defined() const { return value.has_value(); }
};

/// Structural degree: the best share 1 - |R\C| / |R| of the query C over all
/// responsible coalitions R.
sdr_result sdr(const responsible_set& responsible, coalition query);
sdr_result sdr(const cgs& model, state_id state, const state_set& affairs, coalition query,
               preclusion_semantics semantics = preclusion_semantics::future_avoidance, unsigned threads = 1);

/// Full-profile path q = states[0] -> ... -> states.back() with
/// successor(states[i], profiles[i]) == states[i+1].
struct power_acquisition_sequence
{
    std::vector<action_profile> profiles;
    std::vector<state_id> states;
};

struct acquisition
{
    /// Nullopt when no state where the query can preclude is reachable.
    std::optional<std::size_t> distance;
    /// A shortest sequence; absent at distance 0 and when unreachable.
    std::optional<power_acquisition_sequence> witness;
};

/// Breadth-first search over all available full profiles from `state` to
/// the nearest state where `query` can preclude. Successors are explored in
/// ascending (state index, profile code) order so the witness is
/// deterministic. Preclusion is looked up through `cache`.
acquisition power_acquisition_distance(const preclusion_cache& cache, state_id state, coalition query);
acquisition power_acquisition_distance(const cgs& model, state_id state, const state_set& affairs, coalition query,
                                       preclusion_semantics semantics = preclusion_semantics::future_avoidance);

struct fdr_result
{
    degree_value value;
    std::optional<std::size_t> distance;
    std::optional<power_acquisition_sequence> witness;
};

/// Functional degree: 1 / (distance + 1), or 0 when unreachable.
fdr_result fdr(const preclusion_cache& cache, state_id state, coalition query);
fdr_result fdr(const cgs& model, state_id state, const state_set& affairs, coalition query,
               preclusion_semantics semantics = preclusion_semantics::future_avoidance);

std::string format_sequence(const cgs& model, const power_acquisition_sequence& seq);

} // namespace respdeg
