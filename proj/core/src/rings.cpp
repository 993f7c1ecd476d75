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

#include "stabdec/rings.hpp"

#include <algorithm>
#include <numeric>

namespace stabdec {

bool cyclically_equal(std::span<const Coalition> a, std::span<const Coalition> b)
{
    if (a.size() != b.size())
        return false;
    if (a.empty())
        return true;
    for (std::size_t shift = 0; shift < b.size(); ++shift) {
        bool same = true;
        for (std::size_t k = 0; k < a.size() && same; ++k)
            same = a[k] == b[(k + shift) % b.size()];
        if (same)
            return true;
    }
    return false;
}

bool is_ring(const Game& g, std::span<const Coalition> sequence)
{
    const std::size_t len = sequence.size();
    if (len < 3)
        return false;
    for (std::size_t j = 0; j < len; ++j) {
        const Coalition cur = sequence[j];
        const Coalition next = sequence[(j + 1) % len];
        if (cur.is_singleton() || !g.is_permissible(cur))
            return false;
        if (!g.unanimously_prefers(next, cur))
            return false;
    }
    return true;
}

bool is_proper_ring(const Game& g, std::span<const Coalition> sequence)
{
    if (!is_ring(g, sequence))
        return false;
    for (std::size_t j = 0; j < sequence.size(); ++j)
        if (!sequence[j].intersects(sequence[(j + 1) % sequence.size()]))
            return false;
    return true;
}

std::vector<Coalition> cycle_vias(const Game& g, std::span<const CoalitionStructure> cycle)
{
    if (cycle.size() < 3)
        throw Error(Errc::not_a_cycle, "a cycle needs at least three structures");
    std::vector<Coalition> vias;
    for (std::size_t j = 0; j < cycle.size(); ++j) {
        const CoalitionStructure& from = cycle[j];
        const CoalitionStructure& to = cycle[(j + 1) % cycle.size()];
        std::optional<Coalition> formed;
        for (Coalition c : to.parts()) {
            if (c.is_singleton() || from.contains(c))
                continue;
            if (formed)
                throw Error(Errc::not_a_cycle, to.to_string() + " forms more than one coalition from " + from.to_string());
            formed = c;
        }
        if (!formed || !g.is_permissible(*formed) || !blocks(g, *formed, from) ||
            dominate_via(g, from, *formed) != to)
            throw Error(Errc::not_a_cycle, to.to_string() + " does not dominate " + from.to_string());
        vias.push_back(*formed);
    }
    return vias;
}

Ring extract_ring(std::span<const Coalition> vias, Coalition start)
{
    const std::size_t len = vias.size();
    auto first = std::find(vias.begin(), vias.end(), start);
    if (first == vias.end())
        throw Error(Errc::start_not_in_cycle, start.to_string());

    std::size_t cur = static_cast<std::size_t>(first - vias.begin());
    std::vector<Coalition> selected{start};
    // At most len distinct coalitions can be selected before one repeats.
    for (std::size_t step = 0; step <= len; ++step) {
        std::size_t next = cur;
        for (std::size_t r = 1; r <= len; ++r) {
            const std::size_t idx = (cur + r) % len;
            if (vias[idx].intersects(vias[cur])) {
                next = idx;
                break;
            }
        }
        const Coalition chosen = vias[next];
        auto seen = std::find(selected.begin(), selected.end(), chosen);
        if (seen != selected.end()) {
            Ring ring;
            ring.coalitions.assign(seen + 1, selected.end());
            ring.coalitions.push_back(chosen);
            ring.proper = ring.coalitions.size() >= 3;
            for (std::size_t j = 0; j < ring.coalitions.size() && ring.proper; ++j)
                ring.proper = ring.coalitions[j].intersects(ring.coalitions[(j + 1) % ring.coalitions.size()]);
            return ring;
        }
        selected.push_back(chosen);
        cur = next;
    }
    throw Error(Errc::verification_failed, "ring extraction did not terminate");
}

Ring extract_ring(const Game& g, std::span<const CoalitionStructure> cycle, Coalition start)
{
    const auto vias = cycle_vias(g, cycle);
    return extract_ring(vias, start);
}

namespace {

// Forward and backward reachability from the first member over
// "preferred and intersecting" links covers everything iff the family is
// strongly connected, i.e. every ordered pair is transitively preferred.
bool mutually_transitively_preferred(const Game& g, std::span<const Coalition> family)
{
    const std::size_t m = family.size();
    auto covers = [&](bool forward) {
        std::vector<bool> seen(m, false);
        std::vector<std::size_t> todo{0};
        seen[0] = true;
        std::size_t count = 1;
        while (!todo.empty()) {
            const std::size_t v = todo.back();
            todo.pop_back();
            for (std::size_t w = 0; w < m; ++w) {
                if (seen[w] || !family[v].intersects(family[w]))
                    continue;
                const bool link = forward ? g.unanimously_prefers(family[w], family[v])
                                          : g.unanimously_prefers(family[v], family[w]);
                if (link) {
                    seen[w] = true;
                    ++count;
                    todo.push_back(w);
                }
            }
        }
        return count == m;
    };
    return covers(true) && covers(false);
}

bool broken_from_within(const Game& g, std::span<const Coalition> family, const CoalitionCollection& maximal)
{
    for (Coalition r : family) {
        if (std::binary_search(maximal.begin(), maximal.end(), r))
            continue;
        if (breaks_disjoint(g, r, maximal))
            return true;
    }
    return false;
}

} // namespace

bool is_ring_component(const Game& g, std::span<const Coalition> collection)
{
    CoalitionCollection family;
    for (Coalition c : collection) {
        if (c.is_singleton() || c.empty())
            continue;
        if (!g.is_permissible(c))
            return false;
        family.push_back(c);
    }
    canonicalize(family);
    if (family.size() < 3)
        return false;
    if (!mutually_transitively_preferred(g, family))
        return false;
    for (const auto& m : maximal_sets(family))
        if (!broken_from_within(g, family, m))
            return false;
    return true;
}

RingComponent::RingComponent(const Game& g, CoalitionCollection coalitions) : coalitions_(std::move(coalitions))
{
    canonicalize(coalitions_);
    if (!is_ring_component(g, coalitions_))
        throw Error(Errc::not_a_ring_component, render_collection(coalitions_));
    maximal_ = maximal_sets(coalitions_);
    simple_ = true;
    for (const auto& m : maximal_) {
        for (Coalition r : coalitions_) {
            if (std::binary_search(m.begin(), m.end(), r) || !breaks_disjoint(g, r, m))
                continue;
            const auto met = std::count_if(m.begin(), m.end(), [r](Coalition c) { return c.intersects(r); });
            if (met != 1)
                simple_ = false;
        }
    }
    if (simple_) {
        compact_ = maximal_;
    } else {
        for (Coalition r : coalitions_)
            compact_.push_back(CoalitionCollection{r});
    }
}

bool classify_simple(const Game& g, std::span<const Coalition> collection)
{
    return RingComponent(g, CoalitionCollection(collection.begin(), collection.end())).simple();
}

std::vector<CoalitionCollection> compact_collection(const Game&, const RingComponent& rc)
{
    return {rc.compact().begin(), rc.compact().end()};
}

namespace {

std::vector<std::size_t> member_nodes(const AbsorbingSet& set, const DominationGraph& graph)
{
    std::vector<std::size_t> nodes;
    for (const auto& pi : set.members)
        nodes.push_back(graph.index_of(pi));
    return nodes;
}

} // namespace

std::vector<Ring> rings_of(const Game& g, const AbsorbingSet& set, const DominationGraph& graph)
{
    if (set.trivial())
        throw Error(Errc::trivial_absorbing_set, set.members.front().to_string());
    const auto nodes = member_nodes(set, graph);
    std::vector<bool> inside(graph.size(), false);
    for (std::size_t v : nodes)
        inside[v] = true;
    auto allowed = [&](std::size_t v) { return static_cast<bool>(inside[v]); };

    std::vector<Ring> rings;
    for (std::size_t v : nodes) {
        for (const auto& e : graph.out_edges(v)) {
            if (!inside[e.to])
                continue;
            auto back = shortest_path(
                graph, e.to, [v](std::size_t u) { return u == v; }, allowed);
            if (!back)
                throw Error(Errc::verification_failed, "edge inside an absorbing set lies on no cycle");
            std::vector<CoalitionStructure> cycle{graph.node(v)};
            for (std::size_t k = 0; k + 1 < back->size(); ++k)
                cycle.push_back(graph.node((*back)[k]));
            Ring ring = extract_ring(g, cycle, e.via);
            if (!ring.proper || !is_proper_ring(g, ring.coalitions))
                throw Error(Errc::verification_failed, "extracted sequence " + render_collection(ring.coalitions) +
                                                           " is not a ring");
            const bool known = std::any_of(rings.begin(), rings.end(), [&](const Ring& r) {
                return cyclically_equal(r.coalitions, ring.coalitions);
            });
            if (!known)
                rings.push_back(std::move(ring));
        }
    }
    return rings;
}

std::vector<RingComponent> ring_components_of(const Game& g, const AbsorbingSet& set, const DominationGraph& graph)
{
    const auto rings = rings_of(g, set, graph);

    // Union-find over rings; two rings join when they share a coalition.
    std::vector<std::size_t> parent(rings.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto root = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t a = 0; a < rings.size(); ++a)
        for (std::size_t b = a + 1; b < rings.size(); ++b) {
            const bool share = std::any_of(rings[a].coalitions.begin(), rings[a].coalitions.end(), [&](Coalition c) {
                return std::find(rings[b].coalitions.begin(), rings[b].coalitions.end(), c) !=
                       rings[b].coalitions.end();
            });
            if (share)
                parent[root(a)] = root(b);
        }

    std::vector<CoalitionCollection> families;
    std::vector<std::size_t> family_of(rings.size(), rings.size());
    for (std::size_t r = 0; r < rings.size(); ++r) {
        const std::size_t top = root(r);
        if (family_of[top] == rings.size()) {
            family_of[top] = families.size();
            families.emplace_back();
        }
        auto& fam = families[family_of[top]];
        fam.insert(fam.end(), rings[r].coalitions.begin(), rings[r].coalitions.end());
    }

    std::vector<RingComponent> out;
    // Rings through agents who are never settled can chain into a family
    // that fails condition (ii); such a family is not a component.
    for (auto& fam : families) {
        canonicalize(fam);
        if (is_ring_component(g, fam))
            out.emplace_back(g, std::move(fam));
    }
    std::sort(out.begin(), out.end(), [](const RingComponent& a, const RingComponent& b) {
        return std::lexicographical_compare(a.coalitions().begin(), a.coalitions().end(), b.coalitions().begin(),
                                            b.coalitions().end());
    });
    return out;
}

} // namespace stabdec
