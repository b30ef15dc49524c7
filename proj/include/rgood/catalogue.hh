#pragma once

#include <rgood/graph.hh>

#include <cstdint>
#include <vector>

namespace rgood
{
    // Canonical labelling for small graphs (order <= 11): the relabelled graph whose upper
    // triangle, read as a bit string, is lexicographically smallest among labellings that
    // respect an equitable degree refinement. Isomorphic graphs get identical results.
    auto canonical_form(const Graph & g) -> Graph;
    auto canonical_code(const Graph & g) -> std::uint64_t;

    // One representative of every isomorphism class on n vertices (n <= 9), generated by
    // vertex extension with canonical-form rejection, in ascending canonical code order.
    auto all_graphs(int n) -> std::vector<Graph>;
    auto connected_graphs(int n) -> std::vector<Graph>;
}
