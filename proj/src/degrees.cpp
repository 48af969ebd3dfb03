#include "respdeg/degrees.hpp"

#include <algorithm>
#include <stdexcept>

namespace respdeg
{

degree_value::degree_value(std::int64_t numerator, std::int64_t denominator)
{
    if (denominator == 0)
        throw std::domain_error("degree with zero denominator");
    value_.assign(numerator, denominator);
    if (value_ < 0 || value_ > 1)
        throw std::domain_error("degree outside [0, 1]");
}

std::string degree_value::fraction() const
{
    if (value_.denominator() == 1)
        return std::to_string(value_.numerator());
    return std::to_string(value_.numerator()) + "/" + std::to_string(value_.denominator());
}

std::string degree_value::decimal(unsigned precision) const
{
    precision = std::min(precision, 18U);
    const auto den = static_cast<std::uint64_t>(value_.denominator());
    auto whole = static_cast<std::uint64_t>(value_.numerator()) / den;
    auto rest = static_cast<std::uint64_t>(value_.numerator()) % den;
    std::string digits;
    for (unsigned i = 0; i < precision; ++i)
    {
        rest *= 10;
        digits += static_cast<char>('0' + rest / den);
        rest %= den;
    }

    // Round half to even on the last kept digit.
    const auto last_odd = digits.empty() ? (whole & 1) != 0 : ((digits.back() - '0') & 1) != 0;
    if (2 * rest > den || (2 * rest == den && last_odd))
    {
        auto i = digits.size();
        for (; i > 0 && digits[i - 1] == '9'; --i)
            digits[i - 1] = '0';
        if (i > 0)
            ++digits[i - 1];
        else
            ++whole;
    }
    return precision == 0 ? std::to_string(whole) : std::to_string(whole) + "." + digits;
}

std::string degree_value::to_string(unsigned precision) const
{
    return fraction() + " (" + decimal(precision) + ")";
}

std::strong_ordering degree_value::operator<=>(const degree_value& other) const
{
    if (value_ < other.value_)
        return std::strong_ordering::less;
    if (value_ == other.value_)
        return std::strong_ordering::equal;
    return std::strong_ordering::greater;
}

std::size_t power_difference(coalition responsible, coalition query) { return responsible.minus(query).size(); }

sdr_result sdr(const responsible_set& responsible, coalition query)
{
    sdr_result best;
    for (auto r : responsible.coalitions)
    {
        const auto size = static_cast<std::int64_t>(r.size());
        const degree_value share{ size - static_cast<std::int64_t>(power_difference(r, query)), size };
        // Coalitions arrive in (size, bitset) order, so a strict improvement
        // keeps the first maximizer as the witness.
        if (!best.value || share > *best.value)
        {
            best.value = share;
            best.witness = r;
        }
    }
    return best;
}

sdr_result sdr(const cgs& model, state_id state, const state_set& affairs, coalition query,
               preclusion_semantics semantics, unsigned threads)
{
    return sdr(responsible_coalitions(model, state, affairs, semantics, threads), query);
}

acquisition power_acquisition_distance(const preclusion_cache& cache, state_id state, coalition query)
{
    const auto& model = cache.model();
    const auto& target = cache.winning(query);
    if (target.test(state))
        return { 0, std::nullopt };

    struct parent_link
    {
        state_id from;
        profile_code code;
    };
    std::vector<std::optional<parent_link>> parent(model.num_states());
    state_set visited{ model.num_states() };
    visited.set(state);
    std::vector<state_id> queue{ state };
    for (std::size_t head = 0; head < queue.size(); ++head)
    {
        const auto current = queue[head];
        for (const auto& [to, code] : model.edges(current))
        {
            if (visited.test(to))
                continue;
            visited.set(to);
            parent[to.value] = parent_link{ current, code };
            if (!target.test(to))
            {
                queue.push_back(to);
                continue;
            }

            power_acquisition_sequence seq;
            for (auto at = to; at != state; at = parent[at.value]->from)
            {
                seq.states.push_back(at);
                seq.profiles.push_back(model.layout(parent[at.value]->from).decode(parent[at.value]->code));
            }
            seq.states.push_back(state);
            std::reverse(seq.states.begin(), seq.states.end());
            std::reverse(seq.profiles.begin(), seq.profiles.end());
            const auto length = seq.profiles.size();
            return { length, std::move(seq) };
        }
    }
    return {};
}

acquisition power_acquisition_distance(const cgs& model, state_id state, const state_set& affairs, coalition query,
                                       preclusion_semantics semantics)
{
    const preclusion_cache cache{ model, affairs, semantics };
    return power_acquisition_distance(cache, state, query);
}

namespace
{

fdr_result to_fdr(acquisition acq)
{
    fdr_result out;
    if (acq.distance)
        out.value = degree_value{ 1, static_cast<std::int64_t>(*acq.distance) + 1 };
    out.distance = acq.distance;
    out.witness = std::move(acq.witness);
    return out;
}

} // namespace

fdr_result fdr(const preclusion_cache& cache, state_id state, coalition query)
{
    return to_fdr(power_acquisition_distance(cache, state, query));
}

fdr_result fdr(const cgs& model, state_id state, const state_set& affairs, coalition query,
               preclusion_semantics semantics)
{
    return to_fdr(power_acquisition_distance(model, state, affairs, query, semantics));
}

std::string format_sequence(const cgs& model, const power_acquisition_sequence& seq)
{
    std::string out = model.state_name(seq.states.front());
    for (std::size_t i = 0; i < seq.profiles.size(); ++i)
        out += " -(" + format_profile(model, seq.profiles[i]) + ")-> " + model.state_name(seq.states[i + 1]);
    return out;
}

} // namespace respdeg
