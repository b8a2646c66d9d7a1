#include "hypersample/hypergraph.hpp"
#include "hypersample/errors.hpp"
#include "hypersample/rng.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace hypersample {

std::vector<std::uint32_t> VertexSubset::to_vector() const {
    std::vector<std::uint32_t> out;
    out.reserve(count_);
    for (std::uint32_t v = 0; v < n_; ++v)
        if (contains(v)) out.push_back(v);
    return out;
}

VertexSubset VertexSubset::full(std::uint32_t n) {
    VertexSubset s(n);
    for (std::uint32_t v = 0; v < n; ++v) s.add(v);
    return s;
}

VertexSubset VertexSubset::of(std::uint32_t n, std::span<const std::uint32_t> vertices) {
    VertexSubset s(n);
    for (std::uint32_t v : vertices) {
        if (v >= n) raise(errc::out_of_range_vertex, "VertexSubset: vertex id out of range");
        s.add(v);
    }
    return s;
}

BigRat DegreeProfile::average_degree() const {
    BigInt total = 0;
    for (const auto& e : entries) total += BigInt(e.degree) * e.count;
    return BigRat(total, BigInt(n));
}

Hypergraph::Hypergraph(std::uint32_t n, std::vector<std::vector<std::uint32_t>> edges,
                       EdgeSemantics semantics)
    : n_(n), edges_(std::move(edges)), semantics_(semantics) {
    if (n_ == 0) raise(errc::invalid_argument, "Hypergraph: vertex count must be positive");
    degrees_.assign(n_, 0);
    for (const auto& e : edges_) {
        for (std::uint32_t v : e) {
            if (v >= n_) raise(errc::out_of_range_vertex, "Hypergraph: vertex id out of range");
            ++degrees_[v];
        }
        incidences_ += e.size();
    }
    if (semantics_ == EdgeSemantics::sets) {
        std::vector<std::uint32_t> scratch;
        for (const auto& e : edges_) {
            scratch.assign(e.begin(), e.end());
            std::sort(scratch.begin(), scratch.end());
            if (std::adjacent_find(scratch.begin(), scratch.end()) != scratch.end())
                raise(errc::duplicate_vertex_in_edge, "Hypergraph: duplicate vertex within an edge");
        }
    }
}

BigRat Hypergraph::average_uniformity() const {
    if (edges_.empty()) return 0;
    return BigRat(BigInt(incidences_), BigInt(edges_.size()));
}

BigRat Hypergraph::average_degree() const { return BigRat(BigInt(incidences_), BigInt(n_)); }

BigRat Hypergraph::sparsity() const { return BigRat(BigInt(edges_.size()), BigInt(n_)); }

std::uint32_t Hypergraph::max_uniformity() const {
    std::size_t best = 0;
    for (const auto& e : edges_) best = std::max(best, e.size());
    return static_cast<std::uint32_t>(best);
}

std::uint32_t Hypergraph::min_uniformity() const {
    if (edges_.empty()) return 0;
    std::size_t best = edges_.front().size();
    for (const auto& e : edges_) best = std::min(best, e.size());
    return static_cast<std::uint32_t>(best);
}

std::uint32_t Hypergraph::max_degree() const {
    std::uint32_t best = 0;
    for (std::uint32_t d : degrees_) best = std::max(best, d);
    return best;
}

std::uint32_t Hypergraph::min_degree() const {
    std::uint32_t best = degrees_.empty() ? 0 : degrees_.front();
    for (std::uint32_t d : degrees_) best = std::min(best, d);
    return best;
}

bool Hypergraph::is_regular() const {
    if (degrees_.empty()) return false;
    std::uint32_t d = degrees_.front();
    if (d == 0) return false;
    for (std::uint32_t x : degrees_)
        if (x != d) return false;
    return true;
}

bool Hypergraph::is_uniform() const {
    if (edges_.empty()) return true;
    std::size_t k = edges_.front().size();
    for (const auto& e : edges_)
        if (e.size() != k) return false;
    return true;
}

DegreeProfile Hypergraph::degree_profile() const {
    std::vector<std::uint32_t> sorted = degrees_;
    std::sort(sorted.begin(), sorted.end());
    DegreeProfile profile;
    profile.n = n_;
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        profile.entries.push_back({sorted[i], j - i});
        i = j;
    }
    return profile;
}

void Hypergraph::validate() const {
    std::uint64_t incidences = 0;
    std::vector<std::uint32_t> scratch;
    for (const auto& e : edges_) {
        for (std::uint32_t v : e)
            if (v >= n_) raise(errc::out_of_range_vertex, "validate: vertex id out of range");
        if (semantics_ == EdgeSemantics::sets) {
            scratch.assign(e.begin(), e.end());
            std::sort(scratch.begin(), scratch.end());
            if (std::adjacent_find(scratch.begin(), scratch.end()) != scratch.end())
                raise(errc::duplicate_vertex_in_edge, "validate: duplicate vertex within an edge");
        }
        incidences += e.size();
    }
    if (incidences != incidences_)
        raise(errc::invalid_argument, "validate: incidence count mismatch");
    // Handshake identity r * k_bar = d_bar, exact in rationals.
    if (!edges_.empty()) {
        if (sparsity() * average_uniformity() != average_degree())
            raise(errc::invalid_argument, "validate: handshake identity violated");
    }
}

Hypergraph Hypergraph::dual() const {
    if (edges_.empty())
        raise(errc::empty_edge_set, "dual: hypergraph with no edges has no dual vertex set");
    std::vector<std::vector<std::uint32_t>> dual_edges(n_);
    for (std::uint32_t v = 0; v < n_; ++v) dual_edges[v].reserve(degrees_[v]);
    for (std::size_t i = 0; i < edges_.size(); ++i)
        for (std::uint32_t v : edges_[i]) dual_edges[v].push_back(static_cast<std::uint32_t>(i));
    return Hypergraph(static_cast<std::uint32_t>(edges_.size()), std::move(dual_edges), semantics_);
}

std::string Hypergraph::to_text() const {
    std::string out;
    out += std::to_string(n_);
    out += ' ';
    out += std::to_string(edges_.size());
    out += '\n';
    for (const auto& e : edges_) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(e[i]);
        }
        out += '\n';
    }
    return out;
}

std::string Hypergraph::digest() const {
    const std::string text = to_text();
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

Hypergraph Hypergraph::from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    auto next_data_line = [&](std::string& out_line) {
        while (std::getline(in, out_line)) {
            if (!out_line.empty() && out_line.front() == '#') continue;
            return true;
        }
        return false;
    };
    if (!next_data_line(line)) raise(errc::io_error, "hypergraph text: missing header line");
    std::uint64_t n = 0, m = 0;
    {
        std::istringstream header(line);
        if (!(header >> n >> m)) raise(errc::io_error, "hypergraph text: bad header line");
    }
    std::vector<std::vector<std::uint32_t>> edges;
    edges.reserve(m);
    std::vector<std::uint32_t> edge;
    for (std::uint64_t i = 0; i < m; ++i) {
        if (!next_data_line(line)) raise(errc::io_error, "hypergraph text: missing edge line");
        edge.clear();
        const char* p = line.data();
        const char* end = p + line.size();
        while (p < end) {
            while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
            if (p >= end) break;
            std::uint32_t v = 0;
            auto [next, ec] = std::from_chars(p, end, v);
            if (ec != std::errc()) raise(errc::io_error, "hypergraph text: bad vertex id");
            edge.push_back(v);
            p = next;
        }
        edges.push_back(edge);
    }
    bool repeats = false;
    std::vector<std::uint32_t> scratch;
    for (const auto& e : edges) {
        scratch.assign(e.begin(), e.end());
        std::sort(scratch.begin(), scratch.end());
        if (std::adjacent_find(scratch.begin(), scratch.end()) != scratch.end()) {
            repeats = true;
            break;
        }
    }
    return Hypergraph(static_cast<std::uint32_t>(n), std::move(edges),
                      repeats ? EdgeSemantics::sequences : EdgeSemantics::sets);
}

Hypergraph Hypergraph::read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(errc::io_error, "cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return from_text(buffer.str());
}

void Hypergraph::write_file(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) raise(errc::io_error, "cannot open " + path + " for writing");
    out << to_text();
    if (!out) raise(errc::io_error, "write failed for " + path);
}

Hypergraph Hypergraph::complete_uniform(std::uint32_t n, std::uint32_t k) {
    if (k > n) raise(errc::infeasible_parameters, "complete_uniform: k must not exceed n");
    std::vector<std::vector<std::uint32_t>> edges;
    std::vector<std::uint32_t> combo(k);
    for (std::uint32_t i = 0; i < k; ++i) combo[i] = i;
    if (k == 0) {
        edges.push_back({});
    } else {
        for (;;) {
            edges.push_back(combo);
            // next lexicographic k-combination of [0, n)
            std::int64_t i = static_cast<std::int64_t>(k) - 1;
            while (i >= 0 && combo[i] == n - k + i) --i;
            if (i < 0) break;
            ++combo[i];
            for (std::size_t j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
        }
    }
    return Hypergraph(n, std::move(edges));
}

Hypergraph Hypergraph::random_regular_uniform(std::uint32_t n, std::uint32_t k, std::uint32_t d,
                                              std::uint64_t seed) {
    if (k == 0 || d == 0) raise(errc::infeasible_parameters, "random_regular_uniform: k, d >= 1");
    if (k > n) raise(errc::infeasible_parameters, "random_regular_uniform: k must not exceed n");
    const std::uint64_t stubs = static_cast<std::uint64_t>(n) * d;
    if (stubs % k != 0)
        raise(errc::infeasible_parameters, "random_regular_uniform: n*d must be divisible by k");
    const std::uint64_t m = stubs / k;

    std::vector<std::uint32_t> pool(stubs);
    Rng rng(seed);
    const int max_attempts = 10000;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        // d stubs per vertex, paired into k-sized groups by a Fisher-Yates
        // shuffle; the whole shuffle is resampled when a group repeats a
        // vertex.
        std::size_t idx = 0;
        for (std::uint32_t v = 0; v < n; ++v)
            for (std::uint32_t j = 0; j < d; ++j) pool[idx++] = v;
        for (std::uint64_t i = 0; i + 1 < stubs; ++i) {
            std::uint64_t j = i + rng.below(stubs - i);
            std::swap(pool[i], pool[j]);
        }
        bool clash = false;
        for (std::uint64_t e = 0; e < m && !clash; ++e) {
            for (std::uint64_t a = e * k; a < (e + 1) * k && !clash; ++a)
                for (std::uint64_t b = a + 1; b < (e + 1) * k; ++b)
                    if (pool[a] == pool[b]) {
                        clash = true;
                        break;
                    }
        }
        if (clash) continue;
        std::vector<std::vector<std::uint32_t>> edges(m);
        for (std::uint64_t e = 0; e < m; ++e)
            edges[e].assign(pool.begin() + e * k, pool.begin() + (e + 1) * k);
        return Hypergraph(n, std::move(edges));
    }
    raise(errc::generation_retries_exceeded,
          "random_regular_uniform: no duplicate-free pairing found");
}

Hypergraph Hypergraph::walk_hypergraph(const std::vector<std::vector<std::uint32_t>>& adjacency,
                                       std::uint32_t k) {
    const std::uint32_t n = static_cast<std::uint32_t>(adjacency.size());
    if (n == 0 || k == 0) raise(errc::infeasible_parameters, "walk_hypergraph: n, k >= 1");
    std::size_t degree = adjacency.front().size();
    for (const auto& neighbors : adjacency) {
        if (neighbors.size() != degree)
            raise(errc::infeasible_parameters, "walk_hypergraph: graph must be regular");
        for (std::uint32_t u : neighbors)
            if (u >= n) raise(errc::out_of_range_vertex, "walk_hypergraph: bad adjacency entry");
    }
    if (degree == 0 && k > 1)
        raise(errc::infeasible_parameters, "walk_hypergraph: isolated vertices admit no walks");

    // All walks (v_0, ..., v_{k-1}); m = n * degree^(k-1).
    std::vector<std::vector<std::uint32_t>> edges;
    std::vector<std::uint32_t> walk(k);
    std::vector<std::uint32_t> choice(k, 0);
    for (std::uint32_t start = 0; start < n; ++start) {
        std::fill(choice.begin(), choice.end(), 0);
        for (;;) {
            walk[0] = start;
            for (std::uint32_t step = 1; step < k; ++step)
                walk[step] = adjacency[walk[step - 1]][choice[step]];
            edges.push_back(walk);
            std::int64_t i = static_cast<std::int64_t>(k) - 1;
            while (i >= 1 && choice[i] + 1 == degree) {
                choice[i] = 0;
                --i;
            }
            if (i < 1) break;
            ++choice[i];
        }
    }
    return Hypergraph(n, std::move(edges), EdgeSemantics::sequences);
}

Hypergraph Hypergraph::singleton_repeated(std::uint32_t n, std::uint32_t r) {
    if (r == 0) raise(errc::infeasible_parameters, "singleton_repeated: r >= 1");
    std::vector<std::vector<std::uint32_t>> edges;
    edges.reserve(static_cast<std::size_t>(n) * r);
    for (std::uint32_t v = 0; v < n; ++v)
        for (std::uint32_t copy = 0; copy < r; ++copy) edges.push_back({v});
    return Hypergraph(n, std::move(edges));
}

std::vector<std::vector<std::uint32_t>> Hypergraph::cycle_adjacency(std::uint32_t n) {
    if (n < 3) raise(errc::infeasible_parameters, "cycle_adjacency: n >= 3");
    std::vector<std::vector<std::uint32_t>> adj(n);
    for (std::uint32_t v = 0; v < n; ++v) adj[v] = {(v + n - 1) % n, (v + 1) % n};
    return adj;
}

std::uint64_t edges_confined(const Hypergraph& h, const VertexSubset& a) {
    std::uint64_t count = 0;
    for (const auto& e : h.edges()) {
        bool inside = true;
        for (std::uint32_t v : e)
            if (!a.contains(v)) {
                inside = false;
                break;
            }
        count += inside;
    }
    return count;
}

VertexSubset vertices_covered(const Hypergraph& h, std::span<const std::uint32_t> edge_indices) {
    VertexSubset covered(h.vertex_count());
    for (std::uint32_t i : edge_indices) {
        if (i >= h.edge_count()) raise(errc::index_out_of_range, "vertices_covered: bad edge index");
        for (std::uint32_t v : h.edge(i)) covered.add(v);
    }
    return covered;
}

RatPmf hits_distribution(const Hypergraph& h, const VertexSubset& a) {
    if (h.edge_count() == 0) raise(errc::empty_edge_set, "hits_distribution: no edges");
    std::vector<std::uint64_t> tally(h.max_uniformity() + 1, 0);
    for (const auto& e : h.edges()) {
        std::size_t hits = 0;
        for (std::uint32_t v : e) hits += a.contains(v);
        ++tally[hits];
    }
    RatPmf pmf;
    pmf.offset = 0;
    pmf.mass.resize(tally.size());
    const BigInt m(h.edge_count());
    for (std::size_t i = 0; i < tally.size(); ++i) pmf.mass[i] = BigRat(BigInt(tally[i]), m);
    return pmf;
}

} // namespace hypersample
