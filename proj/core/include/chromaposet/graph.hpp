#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chromaposet/rational.hpp"
#include "chromaposet/symfunc.hpp"

namespace chromaposet {

/// Raised when an operation is asked to run beyond its supported size.
struct SizeLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Graph6ParseError : std::runtime_error {
    Graph6ParseError(size_t offset, const std::string& what)
        : std::runtime_error("graph6 parse error at byte " + std::to_string(offset) + ": " + what),
          byte_offset(offset) {}
    size_t byte_offset;
};

/// Simple graph on vertices 0..n-1, adjacency stored as bitmasks.
class Graph {
public:
    explicit Graph(int n);
    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const;
    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);
    uint64_t neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
    int degree(int v) const;

    /// Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    bool is_connected() const;
    /// Vertex masks of the connected components.
    std::vector<uint64_t> component_masks() const;
    /// Subgraph induced on the mask, vertices relabeled compactly in order.
    Graph induced(uint64_t mask) const;

    Graph deleted(int u, int v) const;
    /// Contract the edge (u, v): merge v into u, drop loops and multi-edges.
    Graph contracted(int u, int v) const;

    bool operator==(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }

private:
    void check_vertex(int v) const;
    int n_;
    std::vector<uint64_t> adj_;
};

Graph disjoint_union(const Graph& a, const Graph& b);

// Named families, paper vertex conventions shifted to 0-based labels.
Graph make_complete(int n);                 // n >= 1
Graph make_path(int n);                     // n >= 1
Graph make_cycle(int n);                    // n >= 3
Graph make_star(int n);                     // n >= 4, center = n-1
Graph make_lollipop(int m, int n);          // m >= 1, n >= 0: K_m plus a path of n extra vertices

/// Unit interval graph from the weakly increasing bound sequence
/// (m_1, ..., m_{n-1}), 1-based values with i <= m_i <= n: vertices a, b are
/// adjacent whenever both lie in some interval [i, m_i].
Graph make_unit_interval(const std::vector<int>& bounds);

Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

/// Canonical relabeling: lexicographically minimal upper-triangle adjacency
/// bit-string (graph6 cell order) over all vertex permutations. n <= 8.
Graph canonical_form(const Graph& g);
std::string canonical_graph6(const Graph& g);
/// Packed upper-triangle bits of g itself (no relabeling), n <= 8.
uint32_t upper_triangle_bits(const Graph& g);

/// One canonical representative per isomorphism class, all simple graphs.
const std::vector<Graph>& enumerate_all_graphs(int n);  // 1 <= n <= 8
/// One canonical representative per isomorphism class of connected graphs,
/// in deterministic (canonical bit-string) order.
std::vector<Graph> enumerate_connected(int n);          // 1 <= n <= 8

class ChromaticPolynomial {
public:
    explicit ChromaticPolynomial(std::vector<Integer> coeffs);
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Integer>& coefficients() const { return coeffs_; }
    Integer coefficient(int power) const;
    Integer evaluate(const Integer& k) const;
    bool operator==(const ChromaticPolynomial& other) const { return coeffs_ == other.coeffs_; }
    std::string to_string() const;

private:
    std::vector<Integer> coeffs_;  // coeffs_[j] = [k^j]
};

/// Deletion-contraction with memoization on canonical form.
ChromaticPolynomial chromatic_polynomial(const Graph& g);

/// Edge-subset expansion in the power-sum basis. |E| <= 28.
SymFunc csf_power_sum(const Graph& g);
/// Stable-partition expansion in the monomial basis.
SymFunc csf_stable_partition(const Graph& g);
/// Bond-lattice Moebius expansion in the power-sum basis. Connected, n <= 7.
SymFunc csf_bond_lattice(const Graph& g);

struct SinkProfile {
    std::vector<long long> counts;  // counts[j-1] = acyclic orientations with exactly j sinks
    long long count(int sinks) const {
        return sinks >= 1 && sinks <= static_cast<int>(counts.size())
                   ? counts[static_cast<size_t>(sinks - 1)]
                   : 0;
    }
    long long total() const;
};
/// Acyclic orientations counted by sink number; direct orientation
/// enumeration up to 20 edges, sink-elimination recursion above. Connected, n <= 8.
SinkProfile sink_profile(const Graph& g);

/// Coefficient of e_(n) in the chromatic symmetric function, via the
/// chromatic polynomial. Connected input.
Rational e_top_coefficient(const Graph& g);
/// Coefficient of s_(1^n), i.e. the number of acyclic orientations.
Rational s_bottom_coefficient(const Graph& g);

int independence_number(const Graph& g);  // n <= 10
int clique_number(const Graph& g);        // n <= 10
int chromatic_number(const Graph& g);     // n <= 10

/// Edge-list text format "n; u-v, u-v, ..." (0-based vertices).
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

}  // namespace chromaposet
