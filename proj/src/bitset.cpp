#include "respdeg/bitset.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace respdeg
{

std::vector<coalition> coalitions_by_size(std::size_t num_agents, bool include_empty)
{
    if (num_agents > 30)
        throw std::length_error("coalition enumeration is limited to 30 agents");
    std::vector<coalition> out;
    const std::uint64_t total = std::uint64_t{ 1 } << num_agents;
    out.reserve(total);
    for (std::uint64_t bits = include_empty ? 0 : 1; bits < total; ++bits)
        out.emplace_back(bits);
    std::stable_sort(out.begin(), out.end(), [](coalition a, coalition b) { return a.size() < b.size(); });
    return out;
}

state_set::state_set(std::size_t universe, bool full) : words_((universe + 63) / 64, full ? ~std::uint64_t{ 0 } : 0), size_{ universe }
{
    trim();
}

void state_set::trim()
{
    if (size_ % 64 != 0 && !words_.empty())
        words_.back() &= (std::uint64_t{ 1 } << (size_ % 64)) - 1;
}

std::size_t state_set::count() const
{
    std::size_t n = 0;
    for (auto w : words_)
        n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

bool state_set::is_subset_of(const state_set& other) const
{
    assert(size_ == other.size_);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i])
            return false;
    return true;
}

bool state_set::intersects(const state_set& other) const
{
    assert(size_ == other.size_);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & other.words_[i])
            return true;
    return false;
}

state_set state_set::complement() const
{
    state_set out = *this;
    for (auto& w : out.words_)
        w = ~w;
    out.trim();
    return out;
}

state_set& state_set::operator&=(const state_set& other)
{
    assert(size_ == other.size_);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= other.words_[i];
    return *this;
}

state_set& state_set::operator|=(const state_set& other)
{
    assert(size_ == other.size_);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] |= other.words_[i];
    return *this;
}

std::vector<state_id> state_set::elements() const
{
    std::vector<state_id> out;
    for (std::size_t w = 0; w < words_.size(); ++w)
        for (auto rest = words_[w]; rest != 0; rest &= rest - 1)
            out.emplace_back(w * 64 + static_cast<std::size_t>(std::countr_zero(rest)));
    return out;
}

} // namespace respdeg
