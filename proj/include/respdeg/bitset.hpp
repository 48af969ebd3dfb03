#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace respdeg
{

template <class Tag>
struct index_type
{
    std::uint32_t value{};

    constexpr index_type() = default;
    constexpr explicit index_type(std::size_t v) : value{ static_cast<std::uint32_t>(v) } {}

    constexpr auto operator<=>(const index_type&) const = default;
};

using agent_id = index_type<struct agent_tag>;
using state_id = index_type<struct state_tag>;
using action_id = index_type<struct action_tag>;

inline constexpr std::size_t max_agents = 64;

/// A group of agents, stored as a single machine word (bit i = agent i).
class coalition
{
    std::uint64_t bits_ = 0;

public:
    constexpr coalition() = default;
    constexpr explicit coalition(std::uint64_t bits) : bits_{ bits } {}

    static constexpr coalition first_n(std::size_t n)
    {
        return coalition{ n >= 64 ? ~std::uint64_t{ 0 } : (std::uint64_t{ 1 } << n) - 1 };
    }

    [[nodiscard]] constexpr std::uint64_t bits() const { return bits_; }
    [[nodiscard]] constexpr bool empty() const { return bits_ == 0; }
    [[nodiscard]] constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }

    [[nodiscard]] constexpr bool contains(agent_id a) const { return (bits_ >> a.value) & 1U; }
    constexpr void insert(agent_id a) { bits_ |= std::uint64_t{ 1 } << a.value; }
    constexpr void erase(agent_id a) { bits_ &= ~(std::uint64_t{ 1 } << a.value); }

    [[nodiscard]] constexpr bool is_subset_of(coalition other) const { return (bits_ & ~other.bits_) == 0; }
    [[nodiscard]] constexpr coalition minus(coalition other) const { return coalition{ bits_ & ~other.bits_ }; }
    [[nodiscard]] constexpr coalition operator|(coalition other) const { return coalition{ bits_ | other.bits_ }; }
    [[nodiscard]] constexpr coalition operator&(coalition other) const { return coalition{ bits_ & other.bits_ }; }

    [[nodiscard]] std::vector<agent_id> members() const
    {
        std::vector<agent_id> out;
        out.reserve(size());
        for (auto rest = bits_; rest != 0; rest &= rest - 1)
            out.emplace_back(static_cast<std::size_t>(std::countr_zero(rest)));
        return out;
    }

    constexpr bool operator==(const coalition&) const = default;
};

/// Report and enumeration order: cardinality first, then bitset value.
struct coalition_order
{
    constexpr bool operator()(coalition a, coalition b) const
    {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a.bits() < b.bits();
    }
};

/// All coalitions over `num_agents` agents in `coalition_order`, optionally
/// including the empty one.
std::vector<coalition> coalitions_by_size(std::size_t num_agents, bool include_empty);

/// Dense set of states.
class state_set
{
    std::vector<std::uint64_t> words_;
    std::size_t size_ = 0;

    void trim();

public:
    state_set() = default;
    explicit state_set(std::size_t universe, bool full = false);

    [[nodiscard]] std::size_t universe() const { return size_; }
    [[nodiscard]] bool test(state_id s) const { return (words_[s.value / 64] >> (s.value % 64)) & 1U; }
    void set(state_id s) { words_[s.value / 64] |= std::uint64_t{ 1 } << (s.value % 64); }
    void reset(state_id s) { words_[s.value / 64] &= ~(std::uint64_t{ 1 } << (s.value % 64)); }

    [[nodiscard]] std::size_t count() const;
    [[nodiscard]] bool none() const { return count() == 0; }
    [[nodiscard]] bool is_subset_of(const state_set& other) const;
    [[nodiscard]] bool intersects(const state_set& other) const;
    [[nodiscard]] state_set complement() const;

    state_set& operator&=(const state_set& other);
    state_set& operator|=(const state_set& other);

    [[nodiscard]] std::vector<state_id> elements() const;

    bool operator==(const state_set&) const = default;
};

} // namespace respdeg
