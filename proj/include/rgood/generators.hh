#pragma once

#include <rgood/graph.hh>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rgood
{
    auto empty_graph(int n) -> Graph;
    auto path_graph(int n) -> Graph;
    auto cycle_graph(int n) -> Graph;
    auto complete_graph(int n) -> Graph;
    auto complete_multipartite(const std::vector<int> & parts) -> Graph;
    auto star_graph(int leaves) -> Graph;
    auto petersen_graph() -> Graph;

    // P_n^k: edge {i, j} iff 0 < |i - j| <= k.
    auto path_power(int n, int k) -> Graph;

    // Vertices of parts[0] first, then parts[1], and so on.
    auto disjoint_union(const std::vector<Graph> & parts) -> Graph;

    // `copies` disjoint copies of K_size.
    auto clique_union(int copies, int size) -> Graph;

    // Visits the pairs of K_n in a seeded random order and keeps each with probability p
    // while both endpoints are below the degree cap.
    auto random_bounded_degree(int n, int degree_cap, std::uint64_t seed, double p = 0.5) -> Graph;

    // Erdos-Renyi G(n, p).
    auto random_gnp(int n, double p, std::uint64_t seed) -> Graph;

    // Builds a graph from a family spec such as "path:6", "cycle:5", "complete:4",
    // "multipartite:3,1", "power:4,2", "star:4", "cliques:3,4", "petersen:",
    // "random:20,3,7[,p]", "gnp:10,0.5,7" or "empty:5". Terms joined with '+' are
    // combined by disjoint union. A seed field written as "s" takes default_seed, advanced by
    // one per term. Throws ParseError on a malformed spec.
    auto graph_from_family(const std::string & spec, std::optional<std::uint64_t> default_seed = std::nullopt) -> Graph;

    // A family spec always contains ':' (a character graph6 never uses).
    auto looks_like_family(const std::string & text) -> bool;
}
