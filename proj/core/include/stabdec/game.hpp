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

#ifndef STABDEC_GAME_HPP
#define STABDEC_GAME_HPP

#include <span>
#include <unordered_map>
#include <vector>

#include "stabdec/coalition.hpp"

namespace stabdec {

/**
 * A coalition formation game with strict preferences.
 *
 * Each agent ranks (best first) a list of coalitions that contain it; its
 * singleton must appear exactly once. Coalitions an agent does not list are
 * ranked below everything it does list, ordered among themselves by the
 * canonical coalition order (smaller mask is better), so preference is a total
 * order for every agent.
 *
 * The permissible set K holds every non-single coalition that each of its
 * members ranks above its own singleton. A Game is immutable once built.
 */
class Game {
public:
    /// rankings[i-1] is agent i's list. Throws Error on any inconsistency.
    Game(int agents, std::vector<std::vector<Coalition>> rankings);

    int agents() const noexcept { return n_; }
    Coalition everyone() const noexcept { return Coalition::all(n_); }

    std::span<const Coalition> ranking(Agent i) const;

    /// K in canonical order.
    std::span<const Coalition> permissible() const noexcept { return permissible_; }
    bool is_permissible(Coalition c) const noexcept;
    /// Permissible coalitions whose least member is i, in canonical order.
    std::span<const Coalition> permissible_led_by(Agent i) const;

    /// Strict preference of agent i, who must belong to both coalitions.
    bool prefers(Agent i, Coalition better, Coalition worse) const;

    /// Every agent in the intersection prefers `better`; vacuous when disjoint.
    bool unanimously_prefers(Coalition better, Coalition worse) const;

    /// A chain worse = D0, D1, ..., Dk = better (k >= 1) inside `universe`
    /// where each link is unanimously preferred to, and intersects, the
    /// previous one.
    bool transitively_prefers(Coalition better, Coalition worse, std::span<const Coalition> universe) const;

private:
    int listed_rank(Agent i, Coalition c) const noexcept;
    void check_agent(Agent i) const;

    int n_;
    std::vector<std::vector<Coalition>> rankings_;
    std::vector<std::unordered_map<Coalition, int>> rank_;
    std::vector<Coalition> permissible_;
    std::vector<std::vector<Coalition>> led_by_;
};

} // namespace stabdec

#endif
