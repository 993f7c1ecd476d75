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

#include "stabdec/game.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "stabdec/error.hpp"

namespace stabdec {

Game::Game(int agents, std::vector<std::vector<Coalition>> rankings)
    : n_(agents), rankings_(std::move(rankings))
{
    if (n_ < 1 || n_ > kMaxAgents)
        throw Error(Errc::agent_out_of_range, "agent count " + std::to_string(n_) + " outside 1.." +
                                                  std::to_string(kMaxAgents));
    if (rankings_.size() != static_cast<std::size_t>(n_))
        throw Error(Errc::inconsistent_ranking, "expected " + std::to_string(n_) + " rankings, got " +
                                                    std::to_string(rankings_.size()));
    const Coalition everyone = Coalition::all(n_);
    rank_.resize(static_cast<std::size_t>(n_));
    for (Agent i = 1; i <= n_; ++i) {
        const auto& list = rankings_[static_cast<std::size_t>(i - 1)];
        auto& rank = rank_[static_cast<std::size_t>(i - 1)];
        for (std::size_t pos = 0; pos < list.size(); ++pos) {
            const Coalition c = list[pos];
            if (c.empty())
                throw Error(Errc::inconsistent_ranking, "agent " + std::to_string(i) + " ranks an empty coalition");
            if (!c.subset_of(everyone))
                throw Error(Errc::agent_out_of_range, "agent " + std::to_string(i) + " ranks " + c.to_string() +
                                                          " with members beyond " + std::to_string(n_));
            if (!c.contains(i))
                throw Error(Errc::inconsistent_ranking,
                            "agent " + std::to_string(i) + " ranks " + c.to_string() + " which does not contain it");
            if (!rank.emplace(c, static_cast<int>(pos)).second)
                throw Error(Errc::inconsistent_ranking,
                            "agent " + std::to_string(i) + " ranks " + c.to_string() + " twice");
        }
        if (!rank.contains(Coalition::singleton(i)))
            throw Error(Errc::inconsistent_ranking, "agent " + std::to_string(i) + " does not rank its singleton");
    }

    // K: listed by every member above the member's singleton.
    std::vector<Coalition> candidates;
    for (const auto& list : rankings_)
        for (Coalition c : list)
            if (!c.is_singleton())
                candidates.push_back(c);
    canonicalize(candidates);
    for (Coalition c : candidates) {
        bool ok = true;
        for (Agent i : c.members()) {
            const auto& rank = rank_[static_cast<std::size_t>(i - 1)];
            auto it = rank.find(c);
            if (it == rank.end() || it->second > rank.at(Coalition::singleton(i))) {
                ok = false;
                break;
            }
        }
        if (ok)
            permissible_.push_back(c);
    }
    led_by_.resize(static_cast<std::size_t>(n_));
    for (Coalition c : permissible_)
        led_by_[static_cast<std::size_t>(c.least() - 1)].push_back(c);
}

void Game::check_agent(Agent i) const
{
    if (i < 1 || i > n_)
        throw Error(Errc::agent_out_of_range, "agent " + std::to_string(i) + " outside 1.." + std::to_string(n_));
}

std::span<const Coalition> Game::ranking(Agent i) const
{
    check_agent(i);
    return rankings_[static_cast<std::size_t>(i - 1)];
}

bool Game::is_permissible(Coalition c) const noexcept
{
    return std::binary_search(permissible_.begin(), permissible_.end(), c);
}

std::span<const Coalition> Game::permissible_led_by(Agent i) const
{
    check_agent(i);
    return led_by_[static_cast<std::size_t>(i - 1)];
}

int Game::listed_rank(Agent i, Coalition c) const noexcept
{
    const auto& rank = rank_[static_cast<std::size_t>(i - 1)];
    auto it = rank.find(c);
    return it == rank.end() ? -1 : it->second;
}

bool Game::prefers(Agent i, Coalition better, Coalition worse) const
{
    check_agent(i);
    if (!better.contains(i) || !worse.contains(i))
        throw Error(Errc::agent_not_member, "agent " + std::to_string(i) + " is not in both " +
                                                better.to_string() + " and " + worse.to_string());
    if (better == worse)
        return false;
    const int rb = listed_rank(i, better);
    const int rw = listed_rank(i, worse);
    if (rb >= 0 && rw >= 0)
        return rb < rw;
    if (rb >= 0 || rw >= 0)
        return rb >= 0;
    return better < worse;
}

bool Game::unanimously_prefers(Coalition better, Coalition worse) const
{
    if (better == worse)
        return false;
    for (Agent i : (better & worse).members())
        if (!prefers(i, better, worse))
            return false;
    return true;
}

bool Game::transitively_prefers(Coalition better, Coalition worse, std::span<const Coalition> universe) const
{
    // Breadth-first search from `worse` over "unanimously preferred and
    // intersecting" links; `better` must be reached in at least one step.
    std::vector<bool> seen(universe.size(), false);
    std::deque<Coalition> queue{worse};
    while (!queue.empty()) {
        const Coalition cur = queue.front();
        queue.pop_front();
        for (std::size_t k = 0; k < universe.size(); ++k) {
            const Coalition next = universe[k];
            if (seen[k] || !next.intersects(cur) || !unanimously_prefers(next, cur))
                continue;
            if (next == better)
                return true;
            seen[k] = true;
            queue.push_back(next);
        }
    }
    return false;
}

} // namespace stabdec
