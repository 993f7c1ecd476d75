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

#include "stabdec/dynamics.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace stabdec {

CoalitionStructure dominate_via(const Game& g, const CoalitionStructure& pi, Coalition c)
{
    if (!g.is_permissible(c) || !blocks(g, c, pi))
        throw Error(Errc::not_blocking, c.to_string() + " does not block " + pi.to_string());
    std::vector<Coalition> parts{c};
    for (Coalition part : pi.parts()) {
        if (!part.intersects(c)) {
            parts.push_back(part);
            continue;
        }
        for (Agent j : (part - c).members())
            parts.push_back(Coalition::singleton(j));
    }
    return CoalitionStructure(pi.agents(), std::move(parts));
}

std::vector<Successor> successors(const Game& g, const CoalitionStructure& pi)
{
    std::vector<Successor> out;
    for (Coalition c : g.permissible())
        if (blocks(g, c, pi))
            out.push_back(Successor{c, dominate_via(g, pi, c)});
    return out;
}

std::optional<std::size_t> DominationGraph::find(const CoalitionStructure& pi) const
{
    auto it = index_.find(pi);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::size_t DominationGraph::index_of(const CoalitionStructure& pi) const
{
    if (auto v = find(pi))
        return *v;
    throw Error(Errc::node_not_in_graph, pi.to_string());
}

std::size_t DominationGraph::intern(const CoalitionStructure& pi, std::size_t limit, bool& fresh)
{
    auto [it, inserted] = index_.try_emplace(pi, nodes_.size());
    fresh = inserted;
    if (inserted) {
        if (nodes_.size() >= limit) {
            index_.erase(it);
            throw Error(Errc::limit_exceeded, "domination graph exceeds " + std::to_string(limit) + " nodes");
        }
        nodes_.push_back(pi);
        edges_.emplace_back();
    }
    return it->second;
}

void DominationGraph::grow(const Game& g, std::span<const CoalitionStructure> seeds, std::size_t limit)
{
    for (const auto& s : seeds) {
        bool fresh = false;
        const std::size_t v = intern(s, limit, fresh);
        if (fresh)
            seeds_.push_back(v);
    }
    // Nodes [expanded_, size()) form the BFS queue; discovery order is the
    // queue order, so numbering is deterministic.
    while (expanded_ < nodes_.size()) {
        const std::size_t v = expanded_++;
        const CoalitionStructure pi = nodes_[v];
        for (Coalition c : g.permissible()) {
            if (!blocks(g, c, pi))
                continue;
            bool fresh = false;
            const std::size_t w = intern(dominate_via(g, pi, c), limit, fresh);
            edges_[v].push_back(Edge{w, c});
            ++edge_count_;
        }
    }
}

DominationGraph grow_graph(const Game& g, std::vector<CoalitionStructure> seeds, std::size_t limit)
{
    std::sort(seeds.begin(), seeds.end());
    seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
    for (const auto& s : seeds)
        if (!is_valid_structure(g, s))
            throw Error(Errc::malformed_input, "seed " + s.to_string() + " is not a coalition structure of the game");
    DominationGraph graph;
    graph.grow(g, seeds, limit);
    return graph;
}

bool SccDecomposition::is_sink(const DominationGraph& graph, std::size_t component) const
{
    for (std::size_t v : components.at(component))
        for (const auto& e : graph.out_edges(v))
            if (component_of[e.to] != component)
                return false;
    return true;
}

SccDecomposition strongly_connected_components(const DominationGraph& graph)
{
    constexpr std::size_t unvisited = std::numeric_limits<std::size_t>::max();
    const std::size_t n = graph.size();
    SccDecomposition out;
    out.component_of.assign(n, unvisited);
    std::vector<std::size_t> index(n, unvisited), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::vector<std::pair<std::size_t, std::size_t>> call; // (node, next edge)
    std::size_t counter = 0;

    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != unvisited)
            continue;
        call.emplace_back(root, 0);
        while (!call.empty()) {
            auto& [v, edge] = call.back();
            if (edge == 0 && index[v] == unvisited) {
                index[v] = low[v] = counter++;
                stack.push_back(v);
                on_stack[v] = true;
            }
            const auto out_edges = graph.out_edges(v);
            if (edge < out_edges.size()) {
                const std::size_t w = out_edges[edge++].to;
                if (index[w] == unvisited) {
                    call.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                std::vector<std::size_t> comp;
                std::size_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    out.component_of[w] = out.components.size();
                    comp.push_back(w);
                } while (w != v);
                std::sort(comp.begin(), comp.end());
                out.components.push_back(std::move(comp));
            }
            const std::size_t finished = v;
            call.pop_back();
            if (!call.empty()) {
                const std::size_t parent = call.back().first;
                low[parent] = std::min(low[parent], low[finished]);
            }
        }
    }
    return out;
}

ReachabilityIndex::ReachabilityIndex(const DominationGraph& graph)
    : graph_(&graph), scc_(strongly_connected_components(graph))
{
    cyclic_.resize(scc_.components.size());
    for (std::size_t c = 0; c < scc_.components.size(); ++c)
        cyclic_[c] = scc_.components[c].size() > 1;
    memo_.resize(scc_.components.size());
}

const std::vector<bool>& ReachabilityIndex::reachable_from(std::size_t component) const
{
    auto& slot = memo_[component];
    if (slot)
        return *slot;
    std::vector<bool> seen(scc_.components.size(), false);
    std::vector<std::size_t> todo{component};
    seen[component] = true;
    while (!todo.empty()) {
        const std::size_t c = todo.back();
        todo.pop_back();
        for (std::size_t v : scc_.components[c])
            for (const auto& e : graph_->out_edges(v)) {
                const std::size_t d = scc_.component_of[e.to];
                if (!seen[d]) {
                    seen[d] = true;
                    todo.push_back(d);
                }
            }
    }
    slot = std::move(seen);
    return *slot;
}

bool ReachabilityIndex::dominates(std::size_t a, std::size_t b, bool strict_self) const
{
    const std::size_t ca = scc_.component_of.at(a);
    const std::size_t cb = scc_.component_of.at(b);
    if (a == b)
        return !strict_self && cyclic_[ca];
    if (ca == cb)
        return true;
    return reachable_from(cb)[ca];
}

bool transitively_dominates(const DominationGraph& graph, const CoalitionStructure& a, const CoalitionStructure& b,
                            bool strict_self)
{
    const std::size_t ia = graph.index_of(a);
    const std::size_t ib = graph.index_of(b);
    if (ia == ib && strict_self)
        return false;
    return shortest_path(
               graph, ib, [ia](std::size_t v) { return v == ia; }, [](std::size_t) { return true; })
        .has_value();
}

std::string to_dot(const DominationGraph& graph, std::span<const std::size_t> highlight)
{
    std::vector<bool> marked(graph.size(), false);
    for (std::size_t v : highlight)
        if (v < graph.size())
            marked[v] = true;
    std::ostringstream out;
    out << "digraph domination {\n";
    out << "  node [shape=box, fontname=\"monospace\"];\n";
    for (std::size_t v = 0; v < graph.size(); ++v) {
        out << "  n" << v << " [label=\"" << graph.node(v).to_string() << "\"";
        if (marked[v])
            out << ", style=filled, fillcolor=\"#f4c542\", penwidth=2";
        out << "];\n";
    }
    for (std::size_t v = 0; v < graph.size(); ++v)
        for (const auto& e : graph.out_edges(v))
            out << "  n" << v << " -> n" << e.to << " [label=\"" << e.via.to_string() << "\"];\n";
    out << "}\n";
    return out.str();
}

} // namespace stabdec
