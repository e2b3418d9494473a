#include "chromaposet/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace chromaposet {

Graph::Graph(int n) : n_(n), adj_(static_cast<size_t>(std::max(n, 0)), 0) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    if (n > 62) throw SizeLimitError("graphs are limited to 62 vertices");
}

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex label out of range");
}

int Graph::edge_count() const {
    int twice = 0;
    for (uint64_t mask : adj_) twice += std::popcount(mask);
    return twice / 2;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[static_cast<size_t>(u)] >> v) & 1;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loops are not allowed");
    adj_[static_cast<size_t>(u)] |= uint64_t{1} << v;
    adj_[static_cast<size_t>(v)] |= uint64_t{1} << u;
}

int Graph::degree(int v) const {
    check_vertex(v);
    return std::popcount(adj_[static_cast<size_t>(v)]);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if ((adj_[static_cast<size_t>(u)] >> v) & 1) out.emplace_back(u, v);
    return out;
}

std::vector<uint64_t> Graph::component_masks() const {
    std::vector<uint64_t> comps;
    uint64_t seen = 0;
    for (int s = 0; s < n_; ++s) {
        if ((seen >> s) & 1) continue;
        uint64_t comp = uint64_t{1} << s;
        uint64_t frontier = comp;
        while (frontier) {
            uint64_t next = 0;
            uint64_t f = frontier;
            while (f) {
                int v = std::countr_zero(f);
                f &= f - 1;
                next |= adj_[static_cast<size_t>(v)];
            }
            frontier = next & ~comp;
            comp |= next;
        }
        comps.push_back(comp);
        seen |= comp;
    }
    return comps;
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    return component_masks().size() == 1;
}

Graph Graph::induced(uint64_t mask) const {
    std::vector<int> verts;
    for (int v = 0; v < n_; ++v)
        if ((mask >> v) & 1) verts.push_back(v);
    Graph out(static_cast<int>(verts.size()));
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (has_edge(verts[i], verts[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
    return out;
}

Graph Graph::deleted(int u, int v) const {
    if (!has_edge(u, v)) throw std::invalid_argument("no such edge to delete");
    Graph out = *this;
    out.adj_[static_cast<size_t>(u)] &= ~(uint64_t{1} << v);
    out.adj_[static_cast<size_t>(v)] &= ~(uint64_t{1} << u);
    return out;
}

Graph Graph::contracted(int u, int v) const {
    if (!has_edge(u, v)) throw std::invalid_argument("no such edge to contract");
    if (u > v) std::swap(u, v);
    Graph out(n_ - 1);
    auto relabel = [&](int w) { return w < v ? w : w - 1; };
    for (auto [a, b] : edges()) {
        int x = a == v ? u : a;
        int y = b == v ? u : b;
        if (x == y) continue;
        int rx = relabel(x), ry = relabel(y);
        if (!out.has_edge(rx, ry)) out.add_edge(rx, ry);
    }
    return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph out(a.vertex_count() + b.vertex_count());
    for (auto [u, v] : a.edges()) out.add_edge(u, v);
    int shift = a.vertex_count();
    for (auto [u, v] : b.edges()) out.add_edge(u + shift, v + shift);
    return out;
}

Graph make_complete(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph make_path(int n) {
    if (n < 1) throw std::invalid_argument("path graph needs n >= 1");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle graph needs n >= 3");
    Graph g = make_path(n);
    g.add_edge(0, n - 1);
    return g;
}

Graph make_star(int n) {
    if (n < 4) throw std::invalid_argument("star graph needs n >= 4");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, n - 1);
    return g;
}

Graph make_lollipop(int m, int n) {
    if (m < 1 || n < 0) throw std::invalid_argument("lollipop needs m >= 1, n >= 0");
    Graph g = make_complete(m);
    Graph out(m + n);
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    for (int v = m - 1; v + 1 < m + n; ++v) out.add_edge(v, v + 1);
    return out;
}

Graph make_unit_interval(const std::vector<int>& bounds) {
    int n = static_cast<int>(bounds.size()) + 1;
    for (int i = 1; i < n; ++i) {
        int b = bounds[static_cast<size_t>(i - 1)];
        if (b < i || b > n)
            throw std::invalid_argument("unit interval bound out of range at position " +
                                        std::to_string(i));
        if (i > 1 && b < bounds[static_cast<size_t>(i - 2)])
            throw std::invalid_argument("unit interval bounds must be weakly increasing");
    }
    Graph g(n);
    for (int i = 1; i < n; ++i) {
        int b = bounds[static_cast<size_t>(i - 1)];
        for (int a = i; a <= b; ++a)
            for (int c = a + 1; c <= b; ++c)
                if (!g.has_edge(a - 1, c - 1)) g.add_edge(a - 1, c - 1);
    }
    return g;
}

// ---------------------------------------------------------------------------
// graph6

Graph parse_graph6(std::string_view line) {
    if (line.empty()) throw Graph6ParseError(0, "empty input");
    size_t pos = 0;
    unsigned char first = static_cast<unsigned char>(line[0]);
    if (first == 126) throw Graph6ParseError(0, "multi-byte vertex counts are not supported");
    if (first < 63 || first > 125) throw Graph6ParseError(0, "invalid vertex-count byte");
    int n = first - 63;
    ++pos;
    int cells = n * (n - 1) / 2;
    size_t expected = static_cast<size_t>((cells + 5) / 6);
    if (line.size() - pos < expected)
        throw Graph6ParseError(line.size(), "truncated adjacency data");
    if (line.size() - pos > expected)
        throw Graph6ParseError(pos + expected, "trailing bytes after adjacency data");
    Graph g(n);
    int cell = 0;
    for (size_t byte = 0; byte < expected; ++byte) {
        unsigned char c = static_cast<unsigned char>(line[pos + byte]);
        if (c < 63 || c > 126) throw Graph6ParseError(pos + byte, "byte out of graph6 range");
        int value = c - 63;
        for (int bit = 5; bit >= 0 && cell < cells; --bit, ++cell) {
            if ((value >> bit) & 1) {
                // Upper triangle, column-major: cell t covers (i, j), j >= 1, i < j.
                int j = 1;
                int t = cell;
                while (t >= j) {
                    t -= j;
                    ++j;
                }
                g.add_edge(t, j);
            }
        }
    }
    return g;
}

std::string write_graph6(const Graph& g) {
    int n = g.vertex_count();
    if (n > 62) throw SizeLimitError("graph6 writer supports up to 62 vertices");
    std::string out;
    out += static_cast<char>(63 + n);
    int cells = n * (n - 1) / 2;
    int value = 0, bits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            value = (value << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++bits == 6) {
                out += static_cast<char>(63 + value);
                value = 0;
                bits = 0;
            }
        }
    }
    if (cells % 6 != 0) out += static_cast<char>(63 + (value << (6 - bits)));
    return out;
}

// ---------------------------------------------------------------------------
// Canonical form (n <= 8): minimize the 28-bit packed upper triangle over all
// vertex permutations with prefix pruning.

namespace {

constexpr int kMaxCanonVertices = 8;

int cell_index(int i, int j) {  // i < j, column-major
    return j * (j - 1) / 2 + i;
}

uint32_t pack_bits(const Graph& g) {
    uint32_t bits = 0;
    int n = g.vertex_count();
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (g.has_edge(i, j)) bits |= uint32_t{1} << (27 - cell_index(i, j));
    return bits;
}

struct CanonSearch {
    const Graph* g;
    int n;
    uint32_t best;
    std::vector<int> perm, best_perm;
    bool have_best = false;

    void run() {
        perm.assign(static_cast<size_t>(n), -1);
        std::vector<int> identity(static_cast<size_t>(n));
        std::iota(identity.begin(), identity.end(), 0);
        best = pack_from(identity);
        best_perm = identity;
        have_best = true;
        uint64_t used = 0;
        dfs(0, 0, used);
    }

    uint32_t pack_from(const std::vector<int>& p) const {
        uint32_t bits = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                if (g->has_edge(p[static_cast<size_t>(i)], p[static_cast<size_t>(j)]))
                    bits |= uint32_t{1} << (27 - cell_index(i, j));
        return bits;
    }

    void dfs(int pos, uint32_t bits, uint64_t& used) {
        if (pos == n) {
            if (bits < best) {
                best = bits;
                best_perm = perm;
            }
            return;
        }
        for (int u = 0; u < n; ++u) {
            if ((used >> u) & 1) continue;
            uint32_t next = bits;
            for (int i = 0; i < pos; ++i)
                if (g->has_edge(perm[static_cast<size_t>(i)], u))
                    next |= uint32_t{1} << (27 - cell_index(i, pos));
            int prefix_cells = (pos + 1) * pos / 2;
            uint32_t mask = prefix_cells == 0 ? 0 : ~((uint32_t{1} << (28 - prefix_cells)) - 1);
            if ((next & mask) > (best & mask)) continue;
            perm[static_cast<size_t>(pos)] = u;
            used |= uint64_t{1} << u;
            dfs(pos + 1, next, used);
            used &= ~(uint64_t{1} << u);
        }
    }
};

Graph graph_from_bits(int n, uint32_t bits) {
    Graph g(n);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if ((bits >> (27 - cell_index(i, j))) & 1) g.add_edge(i, j);
    return g;
}

}  // namespace

uint32_t upper_triangle_bits(const Graph& g) {
    if (g.vertex_count() > kMaxCanonVertices)
        throw SizeLimitError("canonical form supports up to 8 vertices");
    return pack_bits(g);
}

Graph canonical_form(const Graph& g) {
    int n = g.vertex_count();
    if (n > kMaxCanonVertices) throw SizeLimitError("canonical form supports up to 8 vertices");
    if (n <= 1) return g;
    CanonSearch search{&g, n, 0, {}, {}, false};
    search.run();
    return graph_from_bits(n, search.best);
}

std::string canonical_graph6(const Graph& g) {
    return write_graph6(canonical_form(g));
}

const std::vector<Graph>& enumerate_all_graphs(int n) {
    if (n < 1 || n > kMaxCanonVertices)
        throw std::invalid_argument("enumerate_all_graphs supports 1 <= n <= 8");
    static std::mutex mu;
    static std::map<int, std::vector<Graph>> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;

    // Grow by vertex augmentation from the previous level, deduplicating by
    // canonical form. Level n-1 must include disconnected graphs.
    std::vector<Graph> level{Graph(1)};
    for (int k = 2; k <= n; ++k) {
        if (auto it = cache.find(k); it != cache.end()) {
            level = it->second;
            continue;
        }
        std::unordered_set<uint32_t> seen;
        std::vector<std::pair<uint32_t, Graph>> next;
        const std::vector<Graph>& prev = cache.count(k - 1) ? cache[k - 1] : level;
        for (const Graph& g : prev) {
            for (uint64_t nb = 0; nb < (uint64_t{1} << (k - 1)); ++nb) {
                Graph h(k);
                for (auto [u, v] : g.edges()) h.add_edge(u, v);
                for (int v = 0; v < k - 1; ++v)
                    if ((nb >> v) & 1) h.add_edge(v, k - 1);
                Graph canon = canonical_form(h);
                uint32_t key = pack_bits(canon);
                if (seen.insert(key).second) next.emplace_back(key, std::move(canon));
            }
        }
        std::sort(next.begin(), next.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<Graph> stored;
        stored.reserve(next.size());
        for (auto& [key, graph] : next) stored.push_back(std::move(graph));
        cache[k] = std::move(stored);
        level = cache[k];
    }
    if (n == 1) cache[1] = level;
    return cache[n];
}

std::vector<Graph> enumerate_connected(int n) {
    if (n < 1 || n > kMaxCanonVertices)
        throw std::invalid_argument("enumerate_connected supports 1 <= n <= 8");
    std::vector<Graph> out;
    for (const Graph& g : enumerate_all_graphs(n))
        if (g.is_connected()) out.push_back(g);
    return out;
}

// ---------------------------------------------------------------------------
// Chromatic polynomial

ChromaticPolynomial::ChromaticPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
    while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
    if (coeffs_.empty()) coeffs_.push_back(0);
}

Integer ChromaticPolynomial::coefficient(int power) const {
    if (power < 0 || power >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<size_t>(power)];
}

Integer ChromaticPolynomial::evaluate(const Integer& k) const {
    Integer acc = 0;
    for (size_t j = coeffs_.size(); j-- > 0;) acc = acc * k + coeffs_[j];
    return acc;
}

std::string ChromaticPolynomial::to_string() const {
    std::string out;
    for (size_t j = coeffs_.size(); j-- > 0;) {
        if (coeffs_[j] == 0) continue;
        if (!out.empty()) out += coeffs_[j] > 0 ? " + " : " - ";
        else if (coeffs_[j] < 0) out += "-";
        Integer a = abs(coeffs_[j]);
        if (a != 1 || j == 0) out += a.get_str();
        if (j >= 1) out += "k";
        if (j >= 2) out += "^" + std::to_string(j);
    }
    return out.empty() ? "0" : out;
}

namespace {

std::vector<Integer> poly_mul(const std::vector<Integer>& a, const std::vector<Integer>& b) {
    std::vector<Integer> out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

std::vector<Integer> poly_sub(std::vector<Integer> a, const std::vector<Integer>& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    return a;
}

std::vector<Integer> tree_chromatic(int n) {
    std::vector<Integer> acc{0, 1};  // k
    for (int i = 1; i < n; ++i) acc = poly_mul(acc, {-1, 1});
    return acc;
}

std::vector<Integer> complete_chromatic(int n) {
    std::vector<Integer> acc{1};
    for (int i = 0; i < n; ++i) acc = poly_mul(acc, {-i, 1});
    return acc;
}

std::mutex chi_memo_mutex;
std::unordered_map<uint64_t, std::vector<Integer>> chi_memo;

std::vector<Integer> chi_connected(const Graph& g);

std::vector<Integer> chi_any(const Graph& g) {
    std::vector<Integer> acc{1};
    for (uint64_t mask : g.component_masks()) acc = poly_mul(acc, chi_connected(g.induced(mask)));
    if (g.vertex_count() == 0) return {1};
    return acc;
}

std::vector<Integer> chi_connected(const Graph& g) {
    int n = g.vertex_count();
    int m = g.edge_count();
    if (m == n - 1) return tree_chromatic(n);
    if (m == n * (n - 1) / 2) return complete_chromatic(n);

    bool memoizable = n <= kMaxCanonVertices;
    uint64_t key = 0;
    if (memoizable) {
        key = (static_cast<uint64_t>(n) << 32) | pack_bits(canonical_form(g));
        std::lock_guard<std::mutex> lock(chi_memo_mutex);
        if (auto it = chi_memo.find(key); it != chi_memo.end()) return it->second;
    }

    // Delete-contract on an edge whose deletion keeps the graph connected;
    // one exists because the graph has a cycle.
    std::pair<int, int> pick{-1, -1};
    for (auto [u, v] : g.edges()) {
        if (g.deleted(u, v).is_connected()) {
            pick = {u, v};
            break;
        }
    }
    std::vector<Integer> result =
        poly_sub(chi_connected(g.deleted(pick.first, pick.second)),
                 chi_any(g.contracted(pick.first, pick.second)));

    if (memoizable) {
        std::lock_guard<std::mutex> lock(chi_memo_mutex);
        chi_memo.emplace(key, result);
    }
    return result;
}

}  // namespace

ChromaticPolynomial chromatic_polynomial(const Graph& g) {
    if (g.vertex_count() == 0) return ChromaticPolynomial({Integer(1)});
    return ChromaticPolynomial(chi_any(g));
}

// ---------------------------------------------------------------------------
// Chromatic symmetric function routes

SymFunc csf_power_sum(const Graph& g) {
    auto edge_list = g.edges();
    int m = static_cast<int>(edge_list.size());
    if (m > 28)
        throw SizeLimitError(
            "csf_power_sum enumerates 2^|E| edge subsets and is capped at 28 edges; "
            "use csf_stable_partition instead");
    int n = g.vertex_count();
    SymFunc out(n, Basis::P);
    std::vector<int> parent(static_cast<size_t>(n));
    std::vector<int> size(static_cast<size_t>(n));
    for (uint32_t subset = 0; subset < (uint32_t{1} << m); ++subset) {
        std::iota(parent.begin(), parent.end(), 0);
        std::fill(size.begin(), size.end(), 1);
        auto find = [&](int x) {
            while (parent[static_cast<size_t>(x)] != x) {
                parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
                x = parent[static_cast<size_t>(x)];
            }
            return x;
        };
        int picked = 0;
        for (int e = 0; e < m; ++e) {
            if (!((subset >> e) & 1)) continue;
            ++picked;
            int a = find(edge_list[static_cast<size_t>(e)].first);
            int b = find(edge_list[static_cast<size_t>(e)].second);
            if (a != b) {
                parent[static_cast<size_t>(a)] = b;
                size[static_cast<size_t>(b)] += size[static_cast<size_t>(a)];
            }
        }
        std::vector<int> comp_sizes;
        for (int v = 0; v < n; ++v)
            if (find(v) == v) comp_sizes.push_back(size[static_cast<size_t>(v)]);
        std::sort(comp_sizes.begin(), comp_sizes.end(), std::greater<>());
        out.add_coeff(Partition{std::move(comp_sizes)}, picked % 2 == 0 ? 1 : -1);
    }
    return out;
}

SymFunc csf_stable_partition(const Graph& g) {
    int n = g.vertex_count();
    std::map<Partition, Integer, PartitionCanonicalOrder> counts;
    std::vector<uint64_t> blocks;
    // Restricted-growth enumeration: vertex v joins an existing independent
    // block or opens a new one, so each stable partition is visited once.
    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            std::vector<int> sizes;
            sizes.reserve(blocks.size());
            for (uint64_t b : blocks) sizes.push_back(std::popcount(b));
            std::sort(sizes.begin(), sizes.end(), std::greater<>());
            counts[Partition{std::move(sizes)}] += 1;
            return;
        }
        uint64_t nbr = g.neighbors(v);
        for (auto& block : blocks) {
            if (block & nbr) continue;
            block |= uint64_t{1} << v;
            self(self, v + 1);
            block &= ~(uint64_t{1} << v);
        }
        blocks.push_back(uint64_t{1} << v);
        self(self, v + 1);
        blocks.pop_back();
    };
    rec(rec, 0);

    SymFunc out(n, Basis::M);
    for (const auto& [type, count] : counts)
        out.set_coeff(type, Rational(count * automorphism_factor(type)));
    return out;
}

SymFunc csf_bond_lattice(const Graph& g) {
    int n = g.vertex_count();
    if (!g.is_connected()) throw std::invalid_argument("csf_bond_lattice requires a connected graph");
    if (n > 7) throw SizeLimitError("csf_bond_lattice is capped at 7 vertices");

    // All connected partitions (every block induces a connected subgraph).
    std::vector<std::vector<uint64_t>> elements;
    std::vector<uint64_t> blocks;
    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            for (uint64_t b : blocks)
                if (!g.induced(b).is_connected()) return;
            elements.push_back(blocks);
            return;
        }
        for (auto& block : blocks) {
            block |= uint64_t{1} << v;
            self(self, v + 1);
            block &= ~(uint64_t{1} << v);
        }
        blocks.push_back(uint64_t{1} << v);
        self(self, v + 1);
        blocks.pop_back();
    };
    rec(rec, 0);

    // Order by decreasing block count so refinements precede their coarsenings.
    std::sort(elements.begin(), elements.end(),
              [](const auto& a, const auto& b) { return a.size() > b.size(); });

    auto refines = [](const std::vector<uint64_t>& fine, const std::vector<uint64_t>& coarse) {
        for (uint64_t fb : fine) {
            bool inside = false;
            for (uint64_t cb : coarse)
                if ((fb & ~cb) == 0) {
                    inside = true;
                    break;
                }
            if (!inside) return false;
        }
        return true;
    };

    // Moebius values from the bottom (all singletons) by the recursive sum rule.
    std::vector<Integer> mu(elements.size());
    for (size_t i = 0; i < elements.size(); ++i) {
        if (elements[i].size() == static_cast<size_t>(n)) {
            mu[i] = 1;
            continue;
        }
        Integer total = 0;
        for (size_t j = 0; j < i; ++j)
            if (elements[j].size() > elements[i].size() && refines(elements[j], elements[i]))
                total += mu[j];
        mu[i] = -total;
    }

    SymFunc out(n, Basis::P);
    for (size_t i = 0; i < elements.size(); ++i) {
        std::vector<int> sizes;
        for (uint64_t b : elements[i]) sizes.push_back(std::popcount(b));
        std::sort(sizes.begin(), sizes.end(), std::greater<>());
        out.add_coeff(Partition{std::move(sizes)}, Rational(mu[i]));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Acyclic orientations

long long SinkProfile::total() const {
    long long t = 0;
    for (long long c : counts) t += c;
    return t;
}

namespace {

SinkProfile sink_profile_enumerate(const Graph& g) {
    auto edge_list = g.edges();
    int m = static_cast<int>(edge_list.size());
    int n = g.vertex_count();
    SinkProfile profile;
    profile.counts.assign(static_cast<size_t>(n), 0);
    for (uint32_t dirs = 0; dirs < (uint32_t{1} << m); ++dirs) {
        std::vector<int> outdeg(static_cast<size_t>(n), 0);
        std::vector<uint64_t> outs(static_cast<size_t>(n), 0);
        for (int e = 0; e < m; ++e) {
            auto [u, v] = edge_list[static_cast<size_t>(e)];
            int from = ((dirs >> e) & 1) ? v : u;
            int to = ((dirs >> e) & 1) ? u : v;
            ++outdeg[static_cast<size_t>(from)];
            outs[static_cast<size_t>(from)] |= uint64_t{1} << to;
        }
        int sinks = 0;
        for (int v = 0; v < n; ++v)
            if (outdeg[static_cast<size_t>(v)] == 0) ++sinks;
        // Acyclicity: repeatedly remove vertices with no outgoing edges.
        uint64_t alive = (n == 64) ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
        std::vector<int> live_outdeg = outdeg;
        bool progress = true;
        while (alive && progress) {
            progress = false;
            for (int v = 0; v < n; ++v) {
                if (!((alive >> v) & 1) || live_outdeg[static_cast<size_t>(v)] != 0) continue;
                alive &= ~(uint64_t{1} << v);
                progress = true;
                for (int u = 0; u < n; ++u)
                    if ((alive >> u) & 1 && (outs[static_cast<size_t>(u)] >> v) & 1)
                        --live_outdeg[static_cast<size_t>(u)];
            }
        }
        if (alive == 0) ++profile.counts[static_cast<size_t>(sinks - 1)];
    }
    return profile;
}

// Acyclic orientations are in bijection with sequences of nonempty disjoint
// independent sets (S_1, S_2, ...) covering V where every vertex of S_i has a
// neighbor in S_{i-1}; S_1 is the sink set.
SinkProfile sink_profile_elimination(const Graph& g) {
    int n = g.vertex_count();
    std::unordered_map<uint32_t, long long> memo;

    auto rec = [&](auto&& self, uint64_t remaining, uint64_t prev) -> long long {
        if (remaining == 0) return 1;
        uint32_t key = static_cast<uint32_t>(remaining) << 8 | static_cast<uint32_t>(prev);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        long long total = 0;
        // Nonempty independent subsets S of `remaining` whose every vertex
        // has a neighbor in `prev`.
        std::vector<int> eligible;
        for (int v = 0; v < n; ++v)
            if (((remaining >> v) & 1) && (g.neighbors(v) & prev)) eligible.push_back(v);
        int k = static_cast<int>(eligible.size());
        for (uint32_t pick = 1; pick < (uint32_t{1} << k); ++pick) {
            uint64_t set = 0;
            bool independent = true;
            for (int i = 0; i < k && independent; ++i) {
                if (!((pick >> i) & 1)) continue;
                int v = eligible[static_cast<size_t>(i)];
                if (g.neighbors(v) & set) independent = false;
                set |= uint64_t{1} << v;
            }
            if (independent) total += self(self, remaining & ~set, set);
        }
        memo.emplace(key, total);
        return total;
    };

    SinkProfile profile;
    profile.counts.assign(static_cast<size_t>(n), 0);
    uint64_t all = (uint64_t{1} << n) - 1;
    for (uint64_t first = 1; first <= all; ++first) {
        bool independent = true;
        uint64_t set = 0;
        for (int v = 0; v < n && independent; ++v) {
            if (!((first >> v) & 1)) continue;
            if (g.neighbors(v) & set) independent = false;
            set |= uint64_t{1} << v;
        }
        if (!independent || set != first) continue;
        int sinks = std::popcount(first);
        profile.counts[static_cast<size_t>(sinks - 1)] += rec(rec, all & ~first, first);
    }
    return profile;
}

}  // namespace

SinkProfile sink_profile(const Graph& g) {
    if (!g.is_connected()) throw std::invalid_argument("sink_profile requires a connected graph");
    if (g.vertex_count() > 8) throw SizeLimitError("sink_profile is capped at 8 vertices");
    if (g.edge_count() <= 20) return sink_profile_enumerate(g);
    return sink_profile_elimination(g);
}

Rational e_top_coefficient(const Graph& g) {
    if (!g.is_connected()) throw std::invalid_argument("e_top_coefficient requires a connected graph");
    int n = g.vertex_count();
    Integer linear = chromatic_polynomial(g).coefficient(1);
    Integer value = Integer(n) * linear;
    if ((n - 1) % 2 != 0) value = -value;
    return Rational(value);
}

Rational s_bottom_coefficient(const Graph& g) {
    if (!g.is_connected())
        throw std::invalid_argument("s_bottom_coefficient requires a connected graph");
    int n = g.vertex_count();
    Integer value = chromatic_polynomial(g).evaluate(-1);
    if (n % 2 != 0) value = -value;
    return Rational(value);
}

// ---------------------------------------------------------------------------
// Classical parameters (exact search, n <= 10)

namespace {

void check_parameter_size(const Graph& g, const char* what) {
    if (g.vertex_count() > 10)
        throw SizeLimitError(std::string(what) + " uses exact search, capped at 10 vertices");
}

}  // namespace

int independence_number(const Graph& g) {
    check_parameter_size(g, "independence_number");
    int n = g.vertex_count();
    int best = 0;
    for (uint64_t s = 0; s < (uint64_t{1} << n); ++s) {
        bool independent = true;
        for (int v = 0; v < n && independent; ++v)
            if (((s >> v) & 1) && (g.neighbors(v) & s)) independent = false;
        if (independent) best = std::max(best, std::popcount(s));
    }
    return best;
}

int clique_number(const Graph& g) {
    check_parameter_size(g, "clique_number");
    int n = g.vertex_count();
    Graph complement(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) complement.add_edge(u, v);
    return independence_number(complement);
}

int chromatic_number(const Graph& g) {
    check_parameter_size(g, "chromatic_number");
    int n = g.vertex_count();
    if (n == 0) return 0;
    // Greedy-seeded exhaustive search: vertices in decreasing-degree order,
    // standard backtracking with at most one fresh color per step.
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<int> color(static_cast<size_t>(n), -1);
    auto feasible = [&](auto&& self, int pos, int k) -> bool {
        if (pos == n) return true;
        int v = order[static_cast<size_t>(pos)];
        int used = 0;
        for (int u = 0; u < n; ++u)
            if (color[static_cast<size_t>(u)] >= 0) used = std::max(used, color[static_cast<size_t>(u)] + 1);
        int limit = std::min(k, used + 1);
        for (int c = 0; c < limit; ++c) {
            bool ok = true;
            uint64_t nbr = g.neighbors(v);
            for (int u = 0; u < n && ok; ++u)
                if (((nbr >> u) & 1) && color[static_cast<size_t>(u)] == c) ok = false;
            if (!ok) continue;
            color[static_cast<size_t>(v)] = c;
            if (self(self, pos + 1, k)) return true;
            color[static_cast<size_t>(v)] = -1;
        }
        return false;
    };
    for (int k = 1; k <= n; ++k) {
        std::fill(color.begin(), color.end(), -1);
        if (feasible(feasible, 0, k)) return k;
    }
    return n;
}

// ---------------------------------------------------------------------------
// Edge-list text format

Graph parse_edge_list(std::string_view text) {
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    auto read_int = [&]() -> int {
        skip_ws();
        size_t start = i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
        if (i == start) throw std::invalid_argument("edge list: expected an integer");
        int v = 0;
        for (size_t k = start; k < i; ++k) v = v * 10 + (text[k] - '0');
        return v;
    };
    int n = read_int();
    skip_ws();
    if (i >= text.size() || text[i] != ';')
        throw std::invalid_argument("edge list: expected ';' after the vertex count");
    ++i;
    Graph g(n);
    skip_ws();
    while (i < text.size()) {
        int u = read_int();
        skip_ws();
        if (i >= text.size() || text[i] != '-')
            throw std::invalid_argument("edge list: expected '-' between endpoints");
        ++i;
        int v = read_int();
        g.add_edge(u, v);
        skip_ws();
        if (i < text.size()) {
            if (text[i] != ',') throw std::invalid_argument("edge list: expected ',' between edges");
            ++i;
            skip_ws();
        }
    }
    return g;
}

std::string format_edge_list(const Graph& g) {
    std::string out = std::to_string(g.vertex_count()) + ";";
    bool first = true;
    for (auto [u, v] : g.edges()) {
        out += first ? " " : ", ";
        out += std::to_string(u) + "-" + std::to_string(v);
        first = false;
    }
    return out;
}

}  // namespace chromaposet
