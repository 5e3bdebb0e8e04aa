#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Circulant model of K_n: vertices 1..n on a circle, edges classified by the
// circular distance they span ("type"). Everything downstream (verification,
// constructions, search) is phrased in these terms.

namespace sepath {

using Vertex = int;  // standard 1-based labels

// A state the underlying combinatorics rules out. Reaching one is a bug in a
// construction step, not bad user input.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

inline int max_edge_type(int n) { return n / 2; }

void require_order(int n);             // n >= 2
void require_vertex(int n, Vertex v);  // v in [1..n]

// Reduce an arbitrary integer to the standard label range [1..n].
Vertex wrap_vertex(int n, long long v);

// Circular distance between two vertices: min(|u-v|, n-|u-v|).
int cd(int n, Vertex u, Vertex v);

// Type of the edge {u,v}; rejects u == v and out-of-range labels.
int edge_type(int n, Vertex u, Vertex v);

// An edge identified by starting vertex and type: endpoints {start, start+etype}.
// For etype < n/2 the start is unique; for etype == n/2 (even n) the canonical
// start is the smaller label, but distance queries consider both endpoints.
struct TypedEdge {
    Vertex start = 0;
    int etype = 0;
    bool operator==(const TypedEdge&) const = default;
};

TypedEdge make_typed_edge(int n, Vertex u, Vertex v);
std::pair<Vertex, Vertex> typed_edge_endpoints(int n, const TypedEdge& e);

// Circular distance between the starting vertices of two edges; minimum over
// both admissible starts for edges of type n/2.
int cd_edges(int n, const TypedEdge& e, const TypedEdge& f);

// Alternative labeling for odd n: 0, 1, ..., (n-1)/2, -(n-1)/2, ..., -1
// clockwise. Anchored so that signed 0 is standard n (hence signed s is
// standard s for s in [1,(n-1)/2]).
struct SignedLabeling {
    explicit SignedLabeling(int n);
    int order() const { return n_; }
    int half() const { return (n_ - 1) / 2; }
    Vertex to_standard(int s) const;
    int to_signed(Vertex v) const;

private:
    int n_;
};

// An ordered, repetition-free vertex sequence with at least one edge.
struct PathSeq {
    int n = 0;
    std::vector<Vertex> verts;

    PathSeq() = default;
    PathSeq(int order, std::vector<Vertex> vs);

    int edge_count() const { return static_cast<int>(verts.size()) - 1; }
    std::vector<std::pair<Vertex, Vertex>> edge_list() const;
    bool operator==(const PathSeq&) const = default;
};

// Every vertex shifted by `shift` (mod n); preserves edge types.
PathSeq rotate(const PathSeq& path, int shift);

// Canonical edge index: lexicographic over sorted endpoint pairs.
long long edge_index(int n, Vertex u, Vertex v);
std::pair<Vertex, Vertex> edge_at_index(int n, long long idx);

// Membership set over the canonical edge indices of one K_n.
class EdgeSet {
public:
    explicit EdgeSet(int n);
    int order() const { return n_; }
    long long universe_size() const { return static_cast<long long>(n_) * (n_ - 1) / 2; }
    std::size_t size() const { return count_; }
    bool contains(Vertex u, Vertex v) const;
    bool insert(Vertex u, Vertex v);  // returns false if already present
    std::vector<std::pair<Vertex, Vertex>> edges() const;  // ascending index order

private:
    int n_;
    std::size_t count_ = 0;
    std::vector<std::uint64_t> bits_;
};

EdgeSet path_edge_set(const PathSeq& path);

struct DecomposeFailure {
    enum class Kind { DegreeViolation, Cycle };
    Kind kind = Kind::DegreeViolation;
    Vertex witness_vertex = 0;          // a vertex of degree >= 3
    std::vector<Vertex> witness_cycle;  // vertices of one cycle, in walk order
};

struct DecomposeResult {
    bool ok = false;
    std::vector<PathSeq> paths;  // maximal paths, sorted by smaller endpoint
    DecomposeFailure failure{};
};

// Succeeds iff the edge set is a linear forest (max degree 2, acyclic) and
// returns its maximal paths; isolated vertices are omitted. Deterministic:
// each path is oriented from its smaller endpoint and paths are listed by
// that endpoint ascending.
DecomposeResult decompose_linear_forest(const EdgeSet& s);

// An ordered list of paths over one K_n. Order is stable: signatures depend
// on the index order.
struct PathFamily {
    int n = 0;
    std::vector<PathSeq> paths;

    PathFamily() = default;
    explicit PathFamily(int order) : n(order) { require_order(order); }
    void add(PathSeq p);
};

}  // namespace sepath
