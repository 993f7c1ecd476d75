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

#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace oracle {

namespace {

bool has(const std::vector<Mask>& v, Mask m)
{
    return std::find(v.begin(), v.end(), m) != v.end();
}

Mask part_of(const Partition& pi, int agent)
{
    for (Mask p : pi)
        if ((p >> (agent - 1)) & 1U)
            return p;
    return 0;
}

std::vector<int> members(Mask m)
{
    std::vector<int> out;
    for (int i = 1; i <= 64; ++i)
        if ((m >> (i - 1)) & 1U)
            out.push_back(i);
    return out;
}

bool single(Mask m)
{
    return m != 0 && (m & (m - 1)) == 0;
}

} // namespace

std::vector<Mask> permissible(const Game& g)
{
    std::vector<Mask> out;
    const Mask end = Mask{1} << g.agents();
    for (Mask m = 1; m < end; ++m) {
        if (single(m))
            continue;
        bool ok = true;
        for (int i : members(m))
            ok = ok && g.prefers(i, Coalition(m), Coalition::singleton(i));
        if (ok)
            out.push_back(m);
    }
    return out;
}

std::vector<Partition> structures(const Game& g)
{
    const int n = g.agents();
    const auto k = permissible(g);
    std::vector<Partition> out;
    std::vector<int> block(n, 0);
    std::function<void(int, int)> rec = [&](int i, int used) {
        if (i == n) {
            Partition pi(used, 0);
            for (int a = 0; a < n; ++a)
                pi[block[a]] |= Mask{1} << a;
            for (Mask p : pi)
                if (!single(p) && !has(k, p))
                    return;
            std::sort(pi.begin(), pi.end());
            out.push_back(pi);
            return;
        }
        for (int b = 0; b <= used; ++b) {
            block[i] = b;
            rec(i + 1, std::max(used, b + 1));
        }
    };
    rec(0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<Mask, Partition>> successors(const Game& g, const Partition& pi)
{
    std::vector<std::pair<Mask, Partition>> out;
    for (Mask c : permissible(g)) {
        if (has(pi, c))
            continue;
        bool blocks = true;
        for (int i : members(c))
            blocks = blocks && g.prefers(i, Coalition(c), Coalition(part_of(pi, i)));
        if (!blocks)
            continue;
        Partition next{c};
        for (Mask p : pi) {
            if ((p & c) == 0)
                next.push_back(p);
            else
                for (int i : members(p & ~c))
                    next.push_back(Mask{1} << (i - 1));
        }
        std::sort(next.begin(), next.end());
        out.emplace_back(c, next);
    }
    return out;
}

bool stable(const Game& g, const Partition& pi)
{
    return successors(g, pi).empty();
}

namespace {

struct FullGraph {
    std::vector<Partition> nodes;
    std::vector<std::vector<std::size_t>> adj;
};

FullGraph full_graph(const Game& g)
{
    FullGraph fg;
    fg.nodes = structures(g);
    std::map<Partition, std::size_t> index;
    for (std::size_t v = 0; v < fg.nodes.size(); ++v)
        index[fg.nodes[v]] = v;
    fg.adj.resize(fg.nodes.size());
    for (std::size_t v = 0; v < fg.nodes.size(); ++v)
        for (auto& [via, to] : successors(g, fg.nodes[v]))
            fg.adj[v].push_back(index.at(to));
    return fg;
}

std::vector<bool> reach_from(const FullGraph& fg, std::size_t v)
{
    std::vector<bool> seen(fg.nodes.size(), false);
    std::vector<std::size_t> stack{v};
    seen[v] = true;
    while (!stack.empty()) {
        const std::size_t u = stack.back();
        stack.pop_back();
        for (std::size_t w : fg.adj[u])
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
    }
    return seen;
}

} // namespace

std::set<std::set<Partition>> absorbing_sets(const Game& g)
{
    const FullGraph fg = full_graph(g);
    const std::size_t n = fg.nodes.size();
    std::vector<std::vector<bool>> reach(n);
    for (std::size_t v = 0; v < n; ++v)
        reach[v] = reach_from(fg, v);
    std::set<std::set<Partition>> out;
    for (std::size_t v = 0; v < n; ++v) {
        bool sink = true;
        std::set<Partition> members;
        for (std::size_t w = 0; w < n; ++w) {
            if (!reach[v][w])
                continue;
            members.insert(fg.nodes[w]);
            sink = sink && reach[w][v];
        }
        if (sink)
            out.insert(members);
    }
    return out;
}

std::set<std::set<Mask>> maximal_sets(const std::vector<Mask>& collection)
{
    std::vector<Mask> items;
    for (Mask m : collection)
        if (!single(m) && !has(items, m))
            items.push_back(m);
    const std::size_t k = items.size();
    std::vector<Mask> disjoint_picks;
    for (Mask pick = 1; pick < (Mask{1} << k); ++pick) {
        Mask used = 0;
        bool ok = true;
        for (std::size_t j = 0; j < k && ok; ++j)
            if ((pick >> j) & 1U) {
                ok = (used & items[j]) == 0;
                used |= items[j];
            }
        if (ok)
            disjoint_picks.push_back(pick);
    }
    std::set<std::set<Mask>> out;
    for (Mask a : disjoint_picks) {
        const bool maximal = std::none_of(disjoint_picks.begin(), disjoint_picks.end(),
                                          [&](Mask b) { return b != a && (a & b) == a; });
        if (!maximal)
            continue;
        std::set<Mask> s;
        for (std::size_t j = 0; j < k; ++j)
            if ((a >> j) & 1U)
                s.insert(items[j]);
        out.insert(s);
    }
    return out;
}

namespace {

bool has_cycle(const std::vector<std::vector<std::size_t>>& adj)
{
    enum { white, grey, black };
    std::vector<int> colour(adj.size(), white);
    std::function<bool(std::size_t)> dfs = [&](std::size_t v) {
        colour[v] = grey;
        for (std::size_t w : adj[v]) {
            if (colour[w] == grey)
                return true;
            if (colour[w] == white && dfs(w))
                return true;
        }
        colour[v] = black;
        return false;
    };
    for (std::size_t v = 0; v < adj.size(); ++v)
        if (colour[v] == white && dfs(v))
            return true;
    return false;
}

} // namespace

bool has_proper_ring(const Game& g)
{
    const auto k = permissible(g);
    std::vector<std::vector<std::size_t>> adj(k.size());
    for (std::size_t a = 0; a < k.size(); ++a)
        for (std::size_t b = 0; b < k.size(); ++b) {
            if (a == b || (k[a] & k[b]) == 0)
                continue;
            bool all = true;
            for (int i : members(k[a] & k[b]))
                all = all && g.prefers(i, Coalition(k[b]), Coalition(k[a]));
            if (all)
                adj[a].push_back(b);
        }
    return has_cycle(adj);
}

bool has_structure_cycle(const Game& g)
{
    return has_cycle(full_graph(g).adj);
}

std::vector<StableDecomposition> decompositions(const Game& g, int max_block_coalitions, bool& skipped)
{
    skipped = false;
    const int n = g.agents();
    const auto k = permissible(g);

    // Candidate non-pool parties per agent set.
    std::map<Mask, std::vector<Party>> shapes;
    auto parties_on = [&](Mask block) -> const std::vector<Party>& {
        auto it = shapes.find(block);
        if (it != shapes.end())
            return it->second;
        std::vector<Party> found;
        // Members of a ring component lie on a preference cycle inside the
        // block, so coalitions on no such cycle are left out of the search.
        std::vector<Mask> within;
        for (Mask c : k)
            if ((c & ~block) == 0)
                within.push_back(c);
        std::vector<std::vector<std::size_t>> adj(within.size());
        for (std::size_t a = 0; a < within.size(); ++a)
            for (std::size_t b = 0; b < within.size(); ++b)
                if (a != b && (within[a] & within[b]) != 0) {
                    bool all = true;
                    for (int i : members(within[a] & within[b]))
                        all = all && g.prefers(i, Coalition(within[b]), Coalition(within[a]));
                    if (all)
                        adj[a].push_back(b);
                }
        std::vector<Mask> inside;
        for (std::size_t a = 0; a < within.size(); ++a) {
            std::vector<bool> seen(within.size(), false);
            std::vector<std::size_t> stack(adj[a].begin(), adj[a].end());
            bool back = false;
            while (!stack.empty() && !back) {
                const std::size_t u = stack.back();
                stack.pop_back();
                if (u == a)
                    back = true;
                else if (!seen[u]) {
                    seen[u] = true;
                    stack.insert(stack.end(), adj[u].begin(), adj[u].end());
                }
            }
            if (back)
                inside.push_back(within[a]);
        }
        if (has(k, block))
            found.push_back(Party::single(g, Coalition(block)));
        if (static_cast<int>(inside.size()) > max_block_coalitions) {
            skipped = true;
        } else {
            for (Mask pick = 1; pick < (Mask{1} << inside.size()); ++pick) {
                if (std::popcount(pick) < 3)
                    continue;
                CoalitionCollection family;
                Mask covered = 0;
                for (std::size_t j = 0; j < inside.size(); ++j)
                    if ((pick >> j) & 1U) {
                        family.push_back(Coalition(inside[j]));
                        covered |= inside[j];
                    }
                if (covered == block && is_ring_component(g, family))
                    found.push_back(Party::ring(g, family));
            }
        }
        return shapes.emplace(block, std::move(found)).first->second;
    };

    std::vector<StableDecomposition> out;
    std::vector<int> block(n, 0);
    std::function<void(int, int)> rec = [&](int i, int used) {
        if (i == n) {
            std::vector<Mask> blocks(used, 0);
            for (int a = 0; a < n; ++a)
                blocks[block[a]] |= Mask{1} << a;
            // Each block is either the pool or a non-pool party.
            std::vector<Party> chosen;
            std::function<void(std::size_t, bool)> pick = [&](std::size_t b, bool pool_used) {
                if (b == blocks.size()) {
                    if (is_stable_decomposition(g, chosen))
                        out.emplace_back(chosen);
                    return;
                }
                if (!pool_used) {
                    chosen.push_back(Party::pool(Coalition(blocks[b])));
                    pick(b + 1, true);
                    chosen.pop_back();
                }
                for (const Party& p : parties_on(blocks[b])) {
                    chosen.push_back(p);
                    pick(b + 1, pool_used);
                    chosen.pop_back();
                }
            };
            pick(0, false);
            return;
        }
        for (int b = 0; b <= used; ++b) {
            block[i] = b;
            rec(i + 1, std::max(used, b + 1));
        }
    };
    rec(0, 0);
    std::sort(out.begin(), out.end(), [](const StableDecomposition& a, const StableDecomposition& b) {
        return a.to_string() < b.to_string();
    });
    return out;
}

Partition to_partition(const CoalitionStructure& pi)
{
    Partition out;
    for (Coalition c : pi.parts())
        out.push_back(c.mask());
    std::sort(out.begin(), out.end());
    return out;
}

std::set<Partition> to_partitions(const std::vector<CoalitionStructure>& set)
{
    std::set<Partition> out;
    for (const auto& pi : set)
        out.insert(to_partition(pi));
    return out;
}

} // namespace oracle
