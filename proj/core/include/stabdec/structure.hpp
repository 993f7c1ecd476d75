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

#ifndef STABDEC_STRUCTURE_HPP
#define STABDEC_STRUCTURE_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stabdec/coalition.hpp"
#include "stabdec/error.hpp"
#include "stabdec/game.hpp"

namespace stabdec {

/**
 * A partition of 1..n. Parts are kept sorted by least member, which is also
 * the canonical rendering order. Permissibility of the non-single parts is a
 * property relative to a game and is checked by make_structure().
 */
class CoalitionStructure {
public:
    CoalitionStructure() = default;
    /// Throws malformed_input unless `parts` partition 1..n.
    CoalitionStructure(int agents, std::vector<Coalition> parts);

    static CoalitionStructure singletons(int agents);

    int agents() const noexcept { return n_; }
    std::span<const Coalition> parts() const noexcept { return parts_; }
    Coalition coalition_of(Agent i) const;
    bool contains(Coalition c) const noexcept;
    /// Non-single parts in canonical coalition order.
    CoalitionCollection non_single() const;
    /// Number of non-single parts.
    int non_single_count() const noexcept;

    /// "{1,2} {3,4} {5} {6,7}"
    std::string to_string() const;
    /// "12 34 5 67"
    std::string label() const;

    auto operator<=>(const CoalitionStructure&) const = default;

private:
    int n_ = 0;
    std::vector<Coalition> parts_;
};

/// Build a structure and check that every non-single part is in K.
CoalitionStructure make_structure(const Game& g, std::vector<Coalition> parts);
bool is_valid_structure(const Game& g, const CoalitionStructure& pi) noexcept;

/// All inclusion-maximal pairwise-disjoint subfamilies of the non-single
/// members of `collection`, each sorted canonically, listed in lexicographic
/// order. Throws empty_collection if there are no non-single members.
std::vector<CoalitionCollection> maximal_sets(std::span<const Coalition> collection);

/// `c` breaks `collection` when some maximal set has a member meeting c and c
/// is unanimously preferred to every member of that maximal set it meets.
bool breaks(const Game& g, Coalition c, std::span<const Coalition> collection);

/// `c` breaks a collection that is already pairwise disjoint (its own unique
/// maximal set).
bool breaks_disjoint(const Game& g, Coalition c, std::span<const Coalition> disjoint);

/// Every member of c strictly prefers c to its current part. False when c is
/// already a part of pi.
bool blocks(const Game& g, Coalition c, const CoalitionStructure& pi);

bool is_stable(const Game& g, const CoalitionStructure& pi);

/**
 * Lazily yields every coalition structure of a game in canonical order.
 *
 * Recurses on the least unassigned agent, trying its singleton and then each
 * permissible coalition it leads, so each structure appears exactly once.
 * next() throws limit_exceeded when asked for more than `limit` structures.
 */
class StructureEnumerator {
public:
    StructureEnumerator(const Game& g, std::size_t limit = kDefaultLimit);

    std::optional<CoalitionStructure> next();
    std::size_t produced() const noexcept { return produced_; }

private:
    struct Frame {
        Agent agent;          // least unassigned agent at this depth
        std::size_t choice;   // 0 = singleton, k = led_by[k-1]
        Coalition assigned;   // agents assigned before this frame
        Coalition chosen;     // option taken at this depth
    };

    bool advance();

    const Game* game_;
    std::size_t limit_;
    std::size_t produced_ = 0;
    std::vector<Frame> stack_;
    bool started_ = false;
    bool done_ = false;
};

std::vector<CoalitionStructure> enumerate_structures(const Game& g, std::size_t limit = kDefaultLimit);

} // namespace stabdec

template <>
struct std::hash<stabdec::CoalitionStructure> {
    std::size_t operator()(const stabdec::CoalitionStructure& pi) const noexcept;
};

#endif
