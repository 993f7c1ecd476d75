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

#ifndef STABDEC_DYNAMICS_HPP
#define STABDEC_DYNAMICS_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "stabdec/structure.hpp"

namespace stabdec {

/// pi' dominates pi via c: c blocks pi, forms in pi', members of the parts it
/// raids become singletons, and untouched parts persist. Throws not_blocking.
CoalitionStructure dominate_via(const Game& g, const CoalitionStructure& pi, Coalition c);

struct Successor {
    Coalition via;
    CoalitionStructure to;
};

/// One entry per blocking coalition, in canonical coalition order.
std::vector<Successor> successors(const Game& g, const CoalitionStructure& pi);

/**
 * Directed graph of coalition structures; an edge from -> to labelled `via`
 * records that `to` dominates `from` via that coalition.
 *
 * Nodes are numbered in discovery order. The graph is closed under successors:
 * every structure that dominates a node is itself a node.
 */
class DominationGraph {
public:
    struct Edge {
        std::size_t to;
        Coalition via;
    };

    std::size_t size() const noexcept { return nodes_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }
    const CoalitionStructure& node(std::size_t v) const { return nodes_.at(v); }
    std::span<const CoalitionStructure> nodes() const noexcept { return nodes_; }
    std::span<const Edge> out_edges(std::size_t v) const { return edges_.at(v); }
    std::span<const std::size_t> seeds() const noexcept { return seeds_; }

    std::optional<std::size_t> find(const CoalitionStructure& pi) const;
    /// Throws node_not_in_graph.
    std::size_t index_of(const CoalitionStructure& pi) const;

    /**
     * Adds the seeds (in the given order) and breadth-first closes the graph
     * under successors. Throws limit_exceeded once the graph would exceed
     * `limit` nodes.
     */
    void grow(const Game& g, std::span<const CoalitionStructure> seeds, std::size_t limit = kDefaultLimit);

private:
    std::size_t intern(const CoalitionStructure& pi, std::size_t limit, bool& fresh);

    std::vector<CoalitionStructure> nodes_;
    std::vector<std::vector<Edge>> edges_;
    std::unordered_map<CoalitionStructure, std::size_t> index_;
    std::vector<std::size_t> seeds_;
    std::size_t expanded_ = 0;
    std::size_t edge_count_ = 0;
};

/// Closure of the canonically sorted, deduplicated seeds under successors.
DominationGraph grow_graph(const Game& g, std::vector<CoalitionStructure> seeds, std::size_t limit = kDefaultLimit);

/// Strongly connected components, numbered in reverse topological order.
struct SccDecomposition {
    std::vector<std::size_t> component_of;
    std::vector<std::vector<std::size_t>> components;

    /// No edge leaves the component.
    bool is_sink(const DominationGraph& graph, std::size_t component) const;
};

/// Iterative Tarjan; safe on long chains.
SccDecomposition strongly_connected_components(const DominationGraph& graph);

/**
 * Bulk answers to "a transitively dominates b" over a fixed graph, using the
 * SCC condensation with per-component reachability memoized on first use.
 */
class ReachabilityIndex {
public:
    explicit ReachabilityIndex(const DominationGraph& graph);

    /// A path of at least one edge leads from b to a. With `strict_self`
    /// a structure never dominates itself.
    bool dominates(std::size_t a, std::size_t b, bool strict_self = false) const;

    const SccDecomposition& scc() const noexcept { return scc_; }

private:
    const std::vector<bool>& reachable_from(std::size_t component) const;

    const DominationGraph* graph_;
    SccDecomposition scc_;
    std::vector<bool> cyclic_;
    mutable std::vector<std::optional<std::vector<bool>>> memo_;
};

/// a >>^T b on the graph: a non-empty domination path from b to a. For a == b
/// this is true iff b lies on a cycle, unless `strict_self` is set, in which
/// case it is always false. Throws node_not_in_graph.
bool transitively_dominates(const DominationGraph& graph, const CoalitionStructure& a, const CoalitionStructure& b,
                            bool strict_self = false);

/// Shortest edge path from `from` to any node accepted by `target`, restricted
/// to nodes accepted by `allowed`. Returns node indices including both ends.
template <typename Target, typename Allowed>
std::optional<std::vector<std::size_t>> shortest_path(const DominationGraph& graph, std::size_t from, Target target,
                                                      Allowed allowed);

/// Graphviz rendering; nodes listed in `highlight` are drawn filled.
std::string to_dot(const DominationGraph& graph, std::span<const std::size_t> highlight = {});

} // namespace stabdec

#include "stabdec/detail/shortest_path.hpp"

#endif
