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

#include "stabdec/structure.hpp"

#include <algorithm>

namespace stabdec {

CoalitionStructure::CoalitionStructure(int agents, std::vector<Coalition> parts)
    : n_(agents), parts_(std::move(parts))
{
    if (n_ < 1 || n_ > kMaxAgents)
        throw Error(Errc::agent_out_of_range, "agent count " + std::to_string(n_));
    Coalition seen;
    for (Coalition c : parts_) {
        if (c.empty())
            throw Error(Errc::malformed_input, "empty part in coalition structure");
        if (seen.intersects(c))
            throw Error(Errc::malformed_input, "overlapping parts at " + c.to_string());
        seen |= c;
    }
    if (seen != Coalition::all(n_))
        throw Error(Errc::malformed_input, "parts cover " + seen.to_string() + " instead of every agent 1.." +
                                               std::to_string(n_));
    std::sort(parts_.begin(), parts_.end(), [](Coalition a, Coalition b) { return a.least() < b.least(); });
}

CoalitionStructure CoalitionStructure::singletons(int agents)
{
    std::vector<Coalition> parts;
    for (Agent i = 1; i <= agents; ++i)
        parts.push_back(Coalition::singleton(i));
    return CoalitionStructure(agents, std::move(parts));
}

Coalition CoalitionStructure::coalition_of(Agent i) const
{
    for (Coalition c : parts_)
        if (c.contains(i))
            return c;
    throw Error(Errc::agent_out_of_range, "agent " + std::to_string(i) + " outside 1.." + std::to_string(n_));
}

bool CoalitionStructure::contains(Coalition c) const noexcept
{
    return std::find(parts_.begin(), parts_.end(), c) != parts_.end();
}

CoalitionCollection CoalitionStructure::non_single() const
{
    CoalitionCollection out;
    for (Coalition c : parts_)
        if (!c.is_singleton())
            out.push_back(c);
    std::sort(out.begin(), out.end());
    return out;
}

int CoalitionStructure::non_single_count() const noexcept
{
    return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [](Coalition c) { return !c.is_singleton(); }));
}

std::string CoalitionStructure::to_string() const
{
    std::string out;
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (k)
            out += ' ';
        out += parts_[k].to_string();
    }
    return out;
}

std::string CoalitionStructure::label() const
{
    std::string out;
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (k)
            out += ' ';
        out += parts_[k].label();
    }
    return out;
}

CoalitionStructure make_structure(const Game& g, std::vector<Coalition> parts)
{
    CoalitionStructure pi(g.agents(), std::move(parts));
    for (Coalition c : pi.parts())
        if (!c.is_singleton() && !g.is_permissible(c))
            throw Error(Errc::malformed_input, "part " + c.to_string() + " is not permissible");
    return pi;
}

bool is_valid_structure(const Game& g, const CoalitionStructure& pi) noexcept
{
    if (pi.agents() != g.agents())
        return false;
    return std::all_of(pi.parts().begin(), pi.parts().end(),
                       [&](Coalition c) { return c.is_singleton() || g.is_permissible(c); });
}

namespace {

// Bron-Kerbosch with pivoting over the "disjoint" graph: its maximal cliques
// are exactly the maximal pairwise-disjoint subfamilies.
class MaximalDisjointFamilies {
public:
    explicit MaximalDisjointFamilies(std::span<const Coalition> items) : items_(items) {}

    std::vector<CoalitionCollection> run()
    {
        std::vector<std::size_t> p(items_.size());
        for (std::size_t k = 0; k < p.size(); ++k)
            p[k] = k;
        std::vector<std::size_t> r;
        expand(r, p, {});
        for (auto& family : out_)
            std::sort(family.begin(), family.end());
        std::sort(out_.begin(), out_.end());
        return std::move(out_);
    }

private:
    bool disjoint(std::size_t a, std::size_t b) const { return !items_[a].intersects(items_[b]); }

    void expand(std::vector<std::size_t>& r, std::vector<std::size_t> p, std::vector<std::size_t> x)
    {
        if (p.empty() && x.empty()) {
            CoalitionCollection family;
            for (std::size_t k : r)
                family.push_back(items_[k]);
            out_.push_back(std::move(family));
            return;
        }
        // pivot: vertex of P u X with most neighbours in P
        std::size_t pivot = p.empty() ? x.front() : p.front();
        std::size_t best = 0;
        for (const auto* set : {&p, &x})
            for (std::size_t u : *set) {
                std::size_t cnt = 0;
                for (std::size_t v : p)
                    if (v != u && disjoint(u, v))
                        ++cnt;
                if (cnt > best) {
                    best = cnt;
                    pivot = u;
                }
            }
        std::vector<std::size_t> candidates;
        for (std::size_t v : p)
            if (v == pivot || !disjoint(pivot, v))
                candidates.push_back(v);
        for (std::size_t v : candidates) {
            std::vector<std::size_t> p2, x2;
            for (std::size_t u : p)
                if (u != v && disjoint(u, v))
                    p2.push_back(u);
            for (std::size_t u : x)
                if (disjoint(u, v))
                    x2.push_back(u);
            r.push_back(v);
            expand(r, std::move(p2), std::move(x2));
            r.pop_back();
            p.erase(std::find(p.begin(), p.end(), v));
            x.push_back(v);
        }
    }

    std::span<const Coalition> items_;
    std::vector<CoalitionCollection> out_;
};

} // namespace

std::vector<CoalitionCollection> maximal_sets(std::span<const Coalition> collection)
{
    CoalitionCollection items;
    for (Coalition c : collection)
        if (!c.empty() && !c.is_singleton())
            items.push_back(c);
    canonicalize(items);
    if (items.empty())
        throw Error(Errc::empty_collection, "no non-single coalition to build maximal sets from");
    if (pairwise_disjoint(items))
        return {items};
    return MaximalDisjointFamilies(items).run();
}

bool breaks_disjoint(const Game& g, Coalition c, std::span<const Coalition> disjoint)
{
    bool meets = false;
    for (Coalition m : disjoint) {
        if (!m.intersects(c) || m.is_singleton())
            continue;
        if (m == c || !g.unanimously_prefers(c, m))
            return false;
        meets = true;
    }
    return meets;
}

bool breaks(const Game& g, Coalition c, std::span<const Coalition> collection)
{
    if (std::find(collection.begin(), collection.end(), c) != collection.end())
        return false;
    bool any = false;
    for (Coalition m : collection)
        if (!m.is_singleton() && m.intersects(c))
            any = true;
    if (!any)
        return false;
    for (const auto& family : maximal_sets(collection))
        if (breaks_disjoint(g, c, family))
            return true;
    return false;
}

bool blocks(const Game& g, Coalition c, const CoalitionStructure& pi)
{
    if (c.is_singleton() || pi.contains(c))
        return false;
    for (Agent i : c.members())
        if (!g.prefers(i, c, pi.coalition_of(i)))
            return false;
    return true;
}

bool is_stable(const Game& g, const CoalitionStructure& pi)
{
    return std::none_of(g.permissible().begin(), g.permissible().end(),
                        [&](Coalition c) { return blocks(g, c, pi); });
}

StructureEnumerator::StructureEnumerator(const Game& g, std::size_t limit) : game_(&g), limit_(limit)
{
    stack_.push_back(Frame{1, 0, Coalition{}, Coalition{}});
}

bool StructureEnumerator::advance()
{
    const Coalition everyone = game_->everyone();
    while (!stack_.empty()) {
        Frame& f = stack_.back();
        const auto led = game_->permissible_led_by(f.agent);
        bool found = false;
        while (f.choice <= led.size()) {
            const std::size_t k = f.choice++;
            const Coalition option = k == 0 ? Coalition::singleton(f.agent) : led[k - 1];
            if (option.intersects(f.assigned))
                continue;
            f.chosen = option;
            found = true;
            break;
        }
        if (!found) {
            stack_.pop_back();
            continue;
        }
        const Coalition now = f.assigned | f.chosen;
        if (now == everyone)
            return true;
        stack_.push_back(Frame{(everyone - now).least(), 0, now, Coalition{}});
    }
    return false;
}

std::optional<CoalitionStructure> StructureEnumerator::next()
{
    if (done_)
        return std::nullopt;
    if (!advance()) {
        done_ = true;
        return std::nullopt;
    }
    if (++produced_ > limit_)
        throw Error(Errc::limit_exceeded, "more than " + std::to_string(limit_) + " coalition structures");
    std::vector<Coalition> parts;
    parts.reserve(stack_.size());
    for (const Frame& f : stack_)
        parts.push_back(f.chosen);
    return CoalitionStructure(game_->agents(), std::move(parts));
}

std::vector<CoalitionStructure> enumerate_structures(const Game& g, std::size_t limit)
{
    std::vector<CoalitionStructure> out;
    StructureEnumerator it(g, limit);
    while (auto pi = it.next())
        out.push_back(std::move(*pi));
    return out;
}

} // namespace stabdec

std::size_t std::hash<stabdec::CoalitionStructure>::operator()(const stabdec::CoalitionStructure& pi) const noexcept
{
    std::size_t h = 0xcbf29ce484222325ULL;
    for (stabdec::Coalition c : pi.parts()) {
        h ^= std::hash<std::uint64_t>{}(c.mask()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}
