#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "sepath/core.hpp"

// Certification of path families. The workhorse is the per-edge signature:
// bit i of an edge's signature is set iff the edge lies on path i. A family
// weakly separates K_n iff all n(n-1)/2 signatures are pairwise distinct,
// and strongly separates iff no signature is a subset of another.

namespace sepath {

constexpr std::size_t kDefaultWitnessCap = 32;

// All edge signatures of one family, stored as a flat bit matrix
// (universe_size rows of `words` 64-bit words each). Row order follows the
// canonical edge index; bit order follows the family's path order.
class Signatures {
public:
    static Signatures build(const PathFamily& family);

    int order() const { return n_; }
    std::size_t family_size() const { return family_; }
    std::size_t words_per_edge() const { return words_; }
    long long edge_count() const { return static_cast<long long>(n_) * (n_ - 1) / 2; }

    const std::uint64_t* row(long long edge) const { return data_.data() + static_cast<std::size_t>(edge) * words_; }
    bool bit(long long edge, std::size_t path) const;
    int popcount(long long edge) const;
    bool equal(long long e1, long long e2) const;
    bool subset(long long e1, long long e2) const;  // sig(e1) subseteq sig(e2)

private:
    int n_ = 2;
    std::size_t family_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> data_;
};

// Worker cap honoring SEPATH_THREADS (>= 1).
unsigned worker_cap();

using EdgePair = std::array<Vertex, 2>;

struct SeparationReport {
    bool separating = false;
    enum class Mode { Weak, Strong } mode = Mode::Weak;
    std::size_t family_size = 0;
    std::vector<std::pair<EdgePair, EdgePair>> unseparated_pairs;  // capped
    std::size_t unseparated_total = 0;                             // exact
    std::vector<EdgePair> uncovered_edges;                         // capped
    std::size_t uncovered_total = 0;                               // exact
};

Signatures signatures(const PathFamily& family);

SeparationReport verify_weak(const PathFamily& family, std::size_t witness_cap = kDefaultWitnessCap);
SeparationReport verify_strong(const PathFamily& family, std::size_t witness_cap = kDefaultWitnessCap);

// Independent O(m^2 * |family|) oracle: for every pair of edges, scan the
// family for a path containing exactly one of them. Kept for cross-checks.
SeparationReport verify_weak_naive(const PathFamily& family, std::size_t witness_cap = kDefaultWitnessCap);

struct GeneratorReport {
    bool even_order = false;
    bool gp1 = false;  // every type present
    bool gp2 = false;  // at most one once-type, none more than twice
    bool gp3 = false;  // same-type pair distances distinct across types
    std::vector<int> missing_types;                       // GP1 witnesses
    std::vector<int> once_types;                          // types appearing exactly once
    std::vector<int> overfull_types;                      // types appearing 3+ times
    struct DistanceClash {
        int type_a = 0, type_b = 0, distance = 0;
    };
    std::vector<DistanceClash> gp3_clashes;
    std::vector<std::pair<int, int>> half_spaced_types;   // even n: (type, distance n/2) pairs

    bool is_generator() const { return gp1 && gp2 && gp3; }
};

// Evaluates the generator-path conditions (odd and even variants).
GeneratorReport check_generator(const PathSeq& path);

// Partition of the edge types of K_n into F (doubled, distance-clean) and D.
struct FSplit {
    int n = 0;
    std::vector<int> f_types;  // ascending
    std::vector<int> d_types;  // ascending

    FSplit() = default;
    FSplit(int order, std::vector<int> f, std::vector<int> d);  // validates the partition
    std::size_t d_with_one() const;  // |D ∪ {1}|
};

struct FSeparatorReport {
    bool covers_all_types = false;    // condition 1
    bool f_types_doubled = false;     // condition 2
    bool f_distances_clean = false;   // condition 3 (GP3 restricted to F)
    std::vector<int> missing_types;
    std::vector<std::pair<int, std::size_t>> wrong_count_types;  // (type, count != 2) in F
    std::vector<GeneratorReport::DistanceClash> clashes;

    bool pass() const { return covers_all_types && f_types_doubled && f_distances_clean; }
};

FSeparatorReport check_f_separator(const EdgeSet& edges, const FSplit& split);
FSeparatorReport check_f_separator(const PathSeq& path, const FSplit& split);

// Types whose edges sit at perfectly even gaps around the circle — the one
// configuration rotations cannot separate. Empty result means the
// rotations-plus-fixings hypothesis holds.
std::vector<int> equally_spaced_types(const PathSeq& path);

// For odd n: 0 if {u,v} lies in the anchor matching M_0 = {(-i,i)}, else the
// type of the vertex-0 edge of the unique rotated matching containing {u,v}.
int crossing_number(int n, Vertex u, Vertex v);

struct LbDiagnostics {
    std::size_t uncovered = 0;                     // edges on no path
    std::size_t in_every_path = 0;                 // edges on all paths
    std::vector<std::size_t> unique_per_path;      // edges on exactly that path
    std::map<std::size_t, std::size_t> multiplicity_histogram;
};

LbDiagnostics lb_diagnostics(const PathFamily& family);

}  // namespace sepath
