#include "spantree/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace spantree {

namespace {

std::vector<std::string> nonempty_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        auto end = line.find_last_not_of(" \t\r");
        lines.push_back(line.substr(begin, end - begin + 1));
    }
    return lines;
}

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string t;
    while (ss >> t) out.push_back(t);
    return out;
}

int parse_int(const std::string& s, const char* what) {
    try {
        size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw parse_error(std::string("bad ") + what + ": " + s);
        return v;
    } catch (const parse_error&) {
        throw;
    } catch (const std::exception&) {
        throw parse_error(std::string("bad ") + what + ": " + s);
    }
}

}  // namespace

Graph EdgeListDocument::to_graph() const { return Graph(n, edges); }

EdgeListDocument EdgeListDocument::from_graph(const Graph& g) {
    EdgeListDocument doc;
    doc.n = g.n();
    doc.edges = g.edges();
    return doc;
}

EdgeListDocument EdgeListDocument::from_labeled(const LabeledGraph& lg) {
    EdgeListDocument doc = from_graph(lg.graph);
    for (const auto& [name, id] : lg.labels) doc.labels.emplace_back(name, id);
    std::sort(doc.labels.begin(), doc.labels.end());
    return doc;
}

EdgeListDocument parse_edge_list(std::istream& in) {
    auto lines = nonempty_lines(in);
    if (lines.empty()) throw parse_error("empty graph document");

    auto header = tokens(lines[0]);
    if (header.size() != 2) throw parse_error("expected header \"n m\"");
    EdgeListDocument doc;
    doc.n = parse_int(header[0], "vertex count");
    int m = parse_int(header[1], "edge count");
    if (doc.n < 0 || m < 0) throw parse_error("negative counts in header");

    size_t li = 1;
    std::set<Edge> seen;
    for (int i = 0; i < m; ++i, ++li) {
        if (li >= lines.size()) throw parse_error("fewer edge lines than the header promises");
        auto t = tokens(lines[li]);
        if (t.size() != 2) throw parse_error("expected edge line \"u v\": " + lines[li]);
        int u = parse_int(t[0], "edge endpoint");
        int v = parse_int(t[1], "edge endpoint");
        if (u < 0 || v < 0 || u >= doc.n || v >= doc.n)
            throw parse_error("edge endpoint out of range: " + lines[li]);
        if (u >= v) throw parse_error("edges must be written with u < v: " + lines[li]);
        if (!seen.insert({u, v}).second) throw parse_error("duplicate edge: " + lines[li]);
        doc.edges.push_back({u, v});
    }

    std::set<std::string> names;
    std::set<int> label_ids;
    for (; li < lines.size(); ++li) {
        auto t = tokens(lines[li]);
        if (t.size() != 4 || t[0] != "#" || t[1] != "label")
            throw parse_error("expected \"# label NAME id\": " + lines[li]);
        int id = parse_int(t[3], "label id");
        if (id < 0 || id >= doc.n) throw parse_error("label id out of range: " + lines[li]);
        if (!names.insert(t[2]).second) throw parse_error("duplicate label name: " + t[2]);
        if (!label_ids.insert(id).second) throw parse_error("duplicate label id: " + lines[li]);
        doc.labels.emplace_back(t[2], id);
    }
    std::sort(doc.edges.begin(), doc.edges.end());
    std::sort(doc.labels.begin(), doc.labels.end());
    return doc;
}

EdgeListDocument parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

std::string print_edge_list(const EdgeListDocument& doc) {
    std::ostringstream out;
    out << doc.n << " " << doc.edges.size() << "\n";
    auto edges = doc.edges;
    std::sort(edges.begin(), edges.end());
    for (auto [u, v] : edges) out << u << " " << v << "\n";
    auto labels = doc.labels;
    std::sort(labels.begin(), labels.end());
    for (const auto& [name, id] : labels) out << "# label " << name << " " << id << "\n";
    return out.str();
}

DegreeBudget parse_budget_file(std::istream& in, int n) {
    auto lines = nonempty_lines(in);
    std::vector<int> f(n, -1);
    for (const auto& line : lines) {
        auto t = tokens(line);
        if (t.size() != 2) throw parse_error("expected budget line \"v f\": " + line);
        int v = parse_int(t[0], "vertex id");
        int fv = parse_int(t[1], "budget");
        if (v < 0 || v >= n) throw parse_error("budget vertex out of range: " + line);
        if (f[v] != -1) throw parse_error("duplicate budget for vertex " + std::to_string(v));
        if (fv < 2) throw parse_error("budgets must be at least 2: " + line);
        f[v] = fv;
    }
    for (int v = 0; v < n; ++v)
        if (f[v] == -1) throw parse_error("no budget given for vertex " + std::to_string(v));
    return DegreeBudget(std::move(f));
}

DegreeBudget parse_budget_file(const std::string& text, int n) {
    std::istringstream in(text);
    return parse_budget_file(in, n);
}

}  // namespace spantree
