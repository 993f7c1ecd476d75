/*
 * Copyright 2026 The stabdec Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef STABDEC_COALITION_HPP
#define STABDEC_COALITION_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stabdec {

/// Agents are numbered 1..n.
using Agent = int;

inline constexpr int kMaxAgents = 64;

/**
 * A set of agents stored as a bitmask (agent i occupies bit i-1).
 *
 * The canonical order of coalitions is the numeric order of the mask. A
 * default-constructed coalition is empty; the library never hands out empty
 * coalitions, but containers need the default state.
 */
class Coalition {
public:
    using mask_type = std::uint64_t;

    constexpr Coalition() noexcept = default;
    constexpr explicit Coalition(mask_type mask) noexcept : mask_(mask) {}
    Coalition(std::initializer_list<Agent> members);

    static Coalition of(std::span<const Agent> members);
    static constexpr Coalition singleton(Agent i) noexcept { return Coalition(mask_type{1} << (i - 1)); }
    /// Every agent in 1..n.
    static constexpr Coalition all(int n) noexcept
    {
        return Coalition(n >= 64 ? ~mask_type{0} : (mask_type{1} << n) - 1);
    }

    /// Parse a compact label: one character per member, 1-9 then a-z for 10..35.
    static Coalition parse_label(std::string_view label);

    constexpr mask_type mask() const noexcept { return mask_; }
    constexpr bool empty() const noexcept { return mask_ == 0; }
    constexpr int size() const noexcept { return std::popcount(mask_); }
    constexpr bool is_singleton() const noexcept { return std::has_single_bit(mask_); }
    constexpr bool contains(Agent i) const noexcept
    {
        return i >= 1 && i <= kMaxAgents && (mask_ >> (i - 1)) & 1U;
    }
    constexpr bool intersects(Coalition other) const noexcept { return (mask_ & other.mask_) != 0; }
    constexpr bool subset_of(Coalition other) const noexcept { return (mask_ & ~other.mask_) == 0; }
    /// Smallest member; 0 for the empty coalition.
    constexpr Agent least() const noexcept { return mask_ == 0 ? 0 : std::countr_zero(mask_) + 1; }
    constexpr Agent greatest() const noexcept { return mask_ == 0 ? 0 : 64 - std::countl_zero(mask_); }

    std::vector<Agent> members() const;

    constexpr Coalition operator|(Coalition o) const noexcept { return Coalition(mask_ | o.mask_); }
    constexpr Coalition operator&(Coalition o) const noexcept { return Coalition(mask_ & o.mask_); }
    constexpr Coalition operator-(Coalition o) const noexcept { return Coalition(mask_ & ~o.mask_); }
    constexpr Coalition& operator|=(Coalition o) noexcept { mask_ |= o.mask_; return *this; }

    constexpr auto operator<=>(const Coalition&) const noexcept = default;

    /// "{1,2,5}"
    std::string to_string() const;
    /// "125" when every member is at most 35, otherwise the braced form.
    std::string label() const;

private:
    mask_type mask_ = 0;
};

/// A set of coalitions, not necessarily disjoint.
using CoalitionCollection = std::vector<Coalition>;

/// Sort by canonical order and drop duplicates.
void canonicalize(CoalitionCollection& collection);
CoalitionCollection canonical(CoalitionCollection collection);

/// Union of the members of every coalition in the collection.
Coalition agents_of(std::span<const Coalition> collection) noexcept;

/// True iff the coalitions are pairwise disjoint.
bool pairwise_disjoint(std::span<const Coalition> collection) noexcept;

/// "{12,23,13}" using compact labels, in the given order.
std::string render_collection(std::span<const Coalition> collection);

std::string agent_label(Agent i);

} // namespace stabdec

template <>
struct std::hash<stabdec::Coalition> {
    std::size_t operator()(stabdec::Coalition c) const noexcept
    {
        return std::hash<std::uint64_t>{}(c.mask());
    }
};

#endif
