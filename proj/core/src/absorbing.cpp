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

#include "stabdec/absorbing.hpp"

#include <algorithm>

namespace stabdec {

bool AbsorbingSet::contains(const CoalitionStructure& pi) const
{
    return std::binary_search(members.begin(), members.end(), pi);
}

namespace {

AbsorbingSet make_set(const DominationGraph& graph, const std::vector<std::size_t>& component)
{
    AbsorbingSet set;
    for (std::size_t v : component)
        set.members.push_back(graph.node(v));
    std::sort(set.members.begin(), set.members.end());
    return set;
}

} // namespace

AbsorbingAnalysis analyze_absorbing(const Game& g, std::size_t limit)
{
    AbsorbingAnalysis out;
    StructureEnumerator structures(g, limit);
    while (auto pi = structures.next()) {
        if (out.graph.find(*pi))
            continue;
        const CoalitionStructure seed[] = {std::move(*pi)};
        out.graph.grow(g, seed, limit);
    }
    out.scc = strongly_connected_components(out.graph);

    std::vector<std::pair<AbsorbingSet, std::size_t>> found;
    for (std::size_t c = 0; c < out.scc.components.size(); ++c)
        if (out.scc.is_sink(out.graph, c))
            found.emplace_back(make_set(out.graph, out.scc.components[c]), c);
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.first.members.front() < b.first.members.front(); });
    for (auto& [set, c] : found) {
        out.sets.push_back(std::move(set));
        out.set_components.push_back(c);
    }
    return out;
}

std::vector<AbsorbingSet> absorbing_sets(const Game& g, std::size_t limit)
{
    return analyze_absorbing(g, limit).sets;
}

Absorption reaches_absorbing(const Game& g, const CoalitionStructure& pi, std::size_t limit)
{
    // The closure of {pi} is closed under successors, so its sink SCCs are
    // absorbing sets of the whole game.
    DominationGraph graph = grow_graph(g, {pi}, limit);
    const SccDecomposition scc = strongly_connected_components(graph);
    std::vector<bool> sink(scc.components.size());
    for (std::size_t c = 0; c < sink.size(); ++c)
        sink[c] = scc.is_sink(graph, c);

    const std::size_t start = graph.index_of(pi);
    Absorption out;
    std::size_t target_component = scc.component_of[start];
    if (!sink[target_component]) {
        auto path = shortest_path(
            graph, start, [&](std::size_t v) { return sink[scc.component_of[v]]; },
            [](std::size_t) { return true; });
        if (!path)
            throw Error(Errc::verification_failed, "no absorbing set reachable from " + pi.to_string());
        for (std::size_t k = 1; k < path->size(); ++k) {
            const std::size_t from = (*path)[k - 1];
            const std::size_t to = (*path)[k];
            for (const auto& e : graph.out_edges(from))
                if (e.to == to) {
                    out.vias.push_back(e.via);
                    break;
                }
            out.path.push_back(graph.node(to));
        }
        target_component = scc.component_of[path->back()];
    }
    out.set = make_set(graph, scc.components[target_component]);
    return out;
}

} // namespace stabdec
