#pragma once

#include "hypersample/distributions.hpp"
#include "hypersample/numeric.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hypersample {

// Vertex membership bitset over [0, n) with a cached cardinality.
class VertexSubset {
public:
    VertexSubset() = default;
    explicit VertexSubset(std::uint32_t n) : n_(n), words_((n + 63) / 64, 0) {}

    std::uint32_t universe_size() const { return n_; }
    std::uint32_t count() const { return count_; }
    bool contains(std::uint32_t v) const { return (words_[v >> 6] >> (v & 63)) & 1; }

    void add(std::uint32_t v) {
        std::uint64_t bit = 1ULL << (v & 63);
        if (!(words_[v >> 6] & bit)) {
            words_[v >> 6] |= bit;
            ++count_;
        }
    }

    void remove(std::uint32_t v) {
        std::uint64_t bit = 1ULL << (v & 63);
        if (words_[v >> 6] & bit) {
            words_[v >> 6] &= ~bit;
            --count_;
        }
    }

    void clear() {
        std::fill(words_.begin(), words_.end(), 0);
        count_ = 0;
    }

    std::vector<std::uint32_t> to_vector() const;

    static VertexSubset full(std::uint32_t n);
    static VertexSubset of(std::uint32_t n, std::span<const std::uint32_t> vertices);

private:
    std::uint32_t n_ = 0;
    std::uint32_t count_ = 0;
    std::vector<std::uint64_t> words_;
};

// Multiset of distinct vertex degrees with the fraction of vertices carrying
// each; fractions are exact rationals with denominator n.
struct DegreeProfile {
    struct Entry {
        std::uint32_t degree;
        std::uint64_t count;
    };
    std::vector<Entry> entries; // ascending by degree
    std::uint64_t n = 0;

    BigRat fraction(std::size_t i) const {
        return BigRat(entries[i].count, n);
    }
    BigRat average_degree() const;
};

// Whether edges are vertex sets (ids distinct within an edge) or vertex
// sequences (repetitions allowed, occurrences carry multiplicity). Walk
// hypergraphs use sequences.
enum class EdgeSemantics { sets, sequences };

// Immutable incidence structure: n vertices, edges as vertex-id lists.
// Duplicate hyperedges and empty hyperedges are allowed; an empty edge is
// confined to every vertex subset. Safe to share across threads.
class Hypergraph {
public:
    Hypergraph(std::uint32_t n, std::vector<std::vector<std::uint32_t>> edges,
               EdgeSemantics semantics = EdgeSemantics::sets);

    std::uint32_t vertex_count() const { return n_; }
    std::uint64_t edge_count() const { return edges_.size(); }
    const std::vector<std::uint32_t>& edge(std::size_t i) const { return edges_[i]; }
    const std::vector<std::vector<std::uint32_t>>& edges() const { return edges_; }
    EdgeSemantics semantics() const { return semantics_; }

    // Incidence statistics. Degrees count vertex occurrences, so for
    // sequence edges a repeated vertex contributes its multiplicity; this
    // keeps the handshake identity r * k_bar = d_bar exact.
    std::uint64_t incidence_count() const { return incidences_; }
    BigRat average_uniformity() const; // k_bar = I/m
    BigRat average_degree() const;     // d_bar = I/n
    BigRat sparsity() const;           // r = m/n
    std::uint32_t max_uniformity() const;
    std::uint32_t max_degree() const;
    std::uint32_t min_degree() const;
    std::uint32_t min_uniformity() const;
    bool is_regular() const;
    bool is_uniform() const;
    const std::vector<std::uint32_t>& degrees() const { return degrees_; }
    DegreeProfile degree_profile() const;

    // Re-checks every structural invariant, including the handshake
    // identity in exact rationals. Construction already validates; this is
    // the public entry point for data read from untrusted files.
    void validate() const;

    // Vertices and hyperedges swap roles; incidences are preserved.
    Hypergraph dual() const;

    // 64-bit FNV-1a digest of the canonical text serialization.
    std::string digest() const;

    std::string to_text() const;
    static Hypergraph from_text(const std::string& text);
    static Hypergraph read_file(const std::string& path);
    void write_file(const std::string& path) const;

    // Generators. All are deterministic given the seed.
    static Hypergraph complete_uniform(std::uint32_t n, std::uint32_t k);
    static Hypergraph random_regular_uniform(std::uint32_t n, std::uint32_t k, std::uint32_t d,
                                             std::uint64_t seed);
    static Hypergraph walk_hypergraph(const std::vector<std::vector<std::uint32_t>>& adjacency,
                                      std::uint32_t k);
    static Hypergraph singleton_repeated(std::uint32_t n, std::uint32_t r);

    // Adjacency helpers for walk generation: cycle graph C_n and a random
    // d-regular multigraph (configuration model on half-edges).
    static std::vector<std::vector<std::uint32_t>> cycle_adjacency(std::uint32_t n);

private:
    std::uint32_t n_;
    std::vector<std::vector<std::uint32_t>> edges_;
    EdgeSemantics semantics_;
    std::uint64_t incidences_ = 0;
    std::vector<std::uint32_t> degrees_;
};

// Number of edges with all vertices inside A. Confinement probability is
// count / m.
std::uint64_t edges_confined(const Hypergraph& h, const VertexSubset& a);

// Union of the vertex sets of the edges indexed by B.
VertexSubset vertices_covered(const Hypergraph& h, std::span<const std::uint32_t> edge_indices);

// Law of |e ∩ A| over a uniformly random edge e, exact. Sequence edges count
// occurrences with multiplicity.
RatPmf hits_distribution(const Hypergraph& h, const VertexSubset& a);

} // namespace hypersample
