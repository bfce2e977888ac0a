#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "spantree/generators.hpp"
#include "spantree/graph.hpp"
#include "spantree/weights.hpp"

namespace spantree {

/// Text graph format: header "n m", then m lines "u v" with 0 <= u < v < n,
/// then optional lines "# label NAME id".
struct EdgeListDocument {
    int n = 0;
    std::vector<Edge> edges;                         // sorted
    std::vector<std::pair<std::string, int>> labels; // sorted by name

    Graph to_graph() const;
    static EdgeListDocument from_graph(const Graph& g);
    static EdgeListDocument from_labeled(const LabeledGraph& lg);
};

EdgeListDocument parse_edge_list(std::istream& in);
EdgeListDocument parse_edge_list(const std::string& text);
std::string print_edge_list(const EdgeListDocument& doc);

/// Budget file: one line "v f(v)" per vertex, every vertex covered, f >= 2.
DegreeBudget parse_budget_file(std::istream& in, int n);
DegreeBudget parse_budget_file(const std::string& text, int n);

}  // namespace spantree
