#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sepath/core.hpp"
#include "sepath/verify.hpp"

// Constructive machinery: the small-order catalog, the primitive-root
// construction for prime orders and its +1 extension, the fixing paths
// Q_x/Q_x', the linear-forest pipeline that assembles an F-separator path,
// and the four-case dispatcher that covers every order from 44 up.

namespace sepath {

// Verbatim catalog path for 2 <= n <= 20; each passes check_generator.
PathSeq catalog_generator(int n);

bool is_prime(long long n);  // deterministic trial division; desk scale

// Least g >= 2 with multiplicative order p-1 modulo the odd prime p.
long long smallest_primitive_root(long long p);

// The path (p, g, g+g^2, ..., sum of g^i for i = 1..p-2) on K_p: one 1-type
// edge in the middle, every other type exactly twice.
PathSeq prime_generator(long long p);

// The unique 1-type edge of prime_generator(p), as standard labels.
std::pair<Vertex, Vertex> prime_generator_one_type_edge(long long p);

// Family of p+1 paths separating K_{p+1}: the unrotated base path, p-1
// rotations each extended by a pendant edge to the new vertex, and the
// 1-type cycle minus the base path's 1-type edge.
PathFamily prime_plus_one(long long p);

// Two paths covering every x-type edge of K_n using only types {1, x}.
// For x = n/2 the cycle structure degenerates; Q_x falls back to a single
// 1-type link and Q_x' alone carries all x-type edges.
std::pair<PathSeq, PathSeq> fixing_paths(int n, int x);

using SignedEdge = std::pair<int, int>;  // endpoints in signed labels

// The linear forest L = M0 ∪ R ∪ B on K_n (signed coordinates).
//   M0: the maximal matching (-i, i), one edge of every type.
//   R = R1 ∪ R2: the top r+2 edge types, one edge each.
//   B: types x_b down to (x_b+1)/2, one edge each.
struct LinearForestTrace {
    int n = 0;
    int x_b = 0;  // largest type (2*i_b+3, i_b even) at most (n-1)/4
    int r = 0;    // |R2|
    int t = 0;    // |B| = (x_b+1)/2
    std::vector<SignedEdge> m0, r1, r2, b;

    EdgeSet edge_set() const;  // standard labels
    std::vector<SignedEdge> rb_edges() const;
};

// Requires n >= 13 odd with (n-1)/2 not divisible by 3.
LinearForestTrace build_linear_forest(int n);

// Where the forest's path endpoints fall, segment by segment, next to the
// expected ranges. Derived from the built forest, never assumed; callers
// log disagreements rather than patching them.
struct SegmentCensus {
    struct Row {
        const char* segment;
        int actual = 0;
        int expect_lo = 0;
        int expect_hi = 0;
        bool in_range() const { return expect_lo <= actual && actual <= expect_hi; }
    };
    std::vector<Row> rows;
    int endpoint_total = 0;
    int path_count = 0;
};

SegmentCensus segment_census(const LinearForestTrace& trace);

// Connector bookkeeping for one pipeline run.
struct ConnectTrace {
    std::vector<SignedEdge> c_b;                  // 2-type joins among T^- chains
    std::vector<SignedEdge> c_0;                  // 2-type joins among T^+ endpoints
    std::vector<std::vector<SignedEdge>> c_levels;  // C_1..C_l joins in U^-
    std::optional<SignedEdge> special_5_7;
    SignedEdge edge_0_3{0, 3};
    std::optional<SignedEdge> e_v;
    std::vector<SignedEdge> e_m;                  // 1-type joins inside M^+
    std::vector<SignedEdge> c_a_rest;             // final even-type joins
};

struct FSeparatorResult {
    PathSeq p;
    FSplit split;
    LinearForestTrace forest;
    ConnectTrace connectors;
};

// Joins the forest into a single path with no equally spaced types and
// computes the F/D split from the result. Public entry requires n >= 45.
FSeparatorResult connect_forest(const LinearForestTrace& trace);

// Best-effort entry for small orders (host x_b >= 7, so n >= 29); callers
// must verify the outcome themselves.
FSeparatorResult connect_forest_unchecked(const LinearForestTrace& trace);

// n rotations of the F-separator path plus fixing paths for D ∪ {1}.
// Requires odd n and no equally spaced types.
PathFamily rotations_plus_fixings(const FSeparatorResult& result);

enum class Method {
    Catalog,
    Prime,
    PrimePlusOne,
    MainTheoremCase1,
    MainTheoremCase2,
    MainTheoremCase3,
    MainTheoremCase4,
    Search,
    TrivialEdges,
};

const char* method_name(Method m);
std::optional<Method> method_from_name(const std::string& name);

struct ConstructionProvenance {
    Method method = Method::TrivialEdges;
    std::size_t size = 0;
    std::optional<long long> bound_claimed;  // ceiling of the applicable bound
};

// Ceilings of the real-valued size bounds, for reporting and acceptance.
long long d_bound_ceiling(int n);        // (5n + 16 log2 n + 167) / 32
long long theorem_bound_ceiling(int n);  // (21n + 16 log2 n + 232) / 16

// Four-case dispatcher for n >= 44; output is verified before returning.
std::pair<PathFamily, ConstructionProvenance> theorem_family(int n);

struct TheoremOutput {
    PathFamily family;
    ConstructionProvenance provenance;
    FSeparatorResult host;  // the pipeline result the family is built around
};

// Same as theorem_family but keeps the host construction for tracing.
TheoremOutput theorem_family_traced(int n);

// Smallest verified family among the applicable methods, with the trivial
// all-single-edges family as final fallback. Always re-verified.
std::pair<PathFamily, ConstructionProvenance> construct_best(int n);

// All n(n-1)/2 single-edge paths.
PathFamily trivial_edge_family(int n);

}  // namespace sepath
