#include "sepath/core.hpp"

#include <algorithm>
#include <array>

namespace sepath {

void require_order(int n) {
    if (n < 2) throw std::invalid_argument("order must be at least 2, got " + std::to_string(n));
}

void require_vertex(int n, Vertex v) {
    if (v < 1 || v > n)
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range [1.." +
                                    std::to_string(n) + "]");
}

Vertex wrap_vertex(int n, long long v) {
    long long m = (v - 1) % n;
    if (m < 0) m += n;
    return static_cast<Vertex>(m + 1);
}

int cd(int n, Vertex u, Vertex v) {
    require_order(n);
    require_vertex(n, u);
    require_vertex(n, v);
    int d = std::abs(u - v);
    return std::min(d, n - d);
}

int edge_type(int n, Vertex u, Vertex v) {
    if (u == v) throw std::invalid_argument("an edge needs two distinct endpoints");
    return cd(n, u, v);
}

TypedEdge make_typed_edge(int n, Vertex u, Vertex v) {
    int x = edge_type(n, u, v);
    if (2 * x == n) return TypedEdge{std::min(u, v), x};
    // unique start: the endpoint whose clockwise step of x lands on the other
    if (wrap_vertex(n, static_cast<long long>(u) + x) == v) return TypedEdge{u, x};
    return TypedEdge{v, x};
}

std::pair<Vertex, Vertex> typed_edge_endpoints(int n, const TypedEdge& e) {
    require_vertex(n, e.start);
    if (e.etype < 1 || e.etype > max_edge_type(n))
        throw std::invalid_argument("edge type " + std::to_string(e.etype) + " out of range");
    return {e.start, wrap_vertex(n, static_cast<long long>(e.start) + e.etype)};
}

int cd_edges(int n, const TypedEdge& e, const TypedEdge& f) {
    auto starts = [&](const TypedEdge& t) {
        std::array<Vertex, 2> s{t.start, t.start};
        if (2 * t.etype == n) s[1] = wrap_vertex(n, static_cast<long long>(t.start) + t.etype);
        return s;
    };
    auto se = starts(e);
    auto sf = starts(f);
    int best = n;
    for (Vertex a : se)
        for (Vertex b : sf) best = std::min(best, cd(n, a, b));
    return best;
}

SignedLabeling::SignedLabeling(int n) : n_(n) {
    require_order(n);
    if (n % 2 == 0) throw std::invalid_argument("signed labeling is defined for odd orders only");
}

Vertex SignedLabeling::to_standard(int s) const {
    if (s < -half() || s > half())
        throw std::invalid_argument("signed label " + std::to_string(s) + " out of range");
    return s >= 1 ? s : s + n_;
}

int SignedLabeling::to_signed(Vertex v) const {
    require_vertex(n_, v);
    return v <= half() ? v : v - n_;
}

PathSeq::PathSeq(int order, std::vector<Vertex> vs) : n(order), verts(std::move(vs)) {
    require_order(n);
    if (verts.size() < 2) throw std::invalid_argument("a path needs at least one edge");
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (Vertex v : verts) {
        require_vertex(n, v);
        if (seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("repeated vertex " + std::to_string(v) + " in path");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

std::vector<std::pair<Vertex, Vertex>> PathSeq::edge_list() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(verts.size() - 1);
    for (std::size_t i = 0; i + 1 < verts.size(); ++i) out.emplace_back(verts[i], verts[i + 1]);
    return out;
}

PathSeq rotate(const PathSeq& path, int shift) {
    std::vector<Vertex> vs;
    vs.reserve(path.verts.size());
    for (Vertex v : path.verts) vs.push_back(wrap_vertex(path.n, static_cast<long long>(v) + shift));
    return PathSeq(path.n, std::move(vs));
}

long long edge_index(int n, Vertex u, Vertex v) {
    if (u == v) throw std::invalid_argument("an edge needs two distinct endpoints");
    require_vertex(n, u);
    require_vertex(n, v);
    if (u > v) std::swap(u, v);
    long long a = u, b = v, nn = n;
    return (a - 1) * (2 * nn - a) / 2 + (b - a - 1);
}

std::pair<Vertex, Vertex> edge_at_index(int n, long long idx) {
    long long m = static_cast<long long>(n) * (n - 1) / 2;
    if (idx < 0 || idx >= m) throw std::invalid_argument("edge index out of range");
    // first endpoint u is the largest with base(u) <= idx
    long long u = 1;
    while ((u)*(2LL * n - (u + 1)) / 2 <= idx) ++u;  // base(u+1) = u*(2n-u-1)/2
    long long base = (u - 1) * (2LL * n - u) / 2;
    return {static_cast<Vertex>(u), static_cast<Vertex>(u + 1 + (idx - base))};
}

EdgeSet::EdgeSet(int n) : n_(n) {
    require_order(n);
    bits_.assign(static_cast<std::size_t>((universe_size() + 63) / 64), 0);
}

bool EdgeSet::contains(Vertex u, Vertex v) const {
    long long i = edge_index(n_, u, v);
    return (bits_[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1u;
}

bool EdgeSet::insert(Vertex u, Vertex v) {
    long long i = edge_index(n_, u, v);
    std::uint64_t& w = bits_[static_cast<std::size_t>(i >> 6)];
    std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (w & mask) return false;
    w |= mask;
    ++count_;
    return true;
}

std::vector<std::pair<Vertex, Vertex>> EdgeSet::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(count_);
    for (long long i = 0; i < universe_size(); ++i)
        if ((bits_[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1u)
            out.push_back(edge_at_index(n_, i));
    return out;
}

EdgeSet path_edge_set(const PathSeq& path) {
    EdgeSet s(path.n);
    for (auto [u, v] : path.edge_list()) s.insert(u, v);
    return s;
}

DecomposeResult decompose_linear_forest(const EdgeSet& s) {
    const int n = s.order();
    std::vector<std::array<Vertex, 2>> adj(static_cast<std::size_t>(n) + 1, {0, 0});
    std::vector<int> deg(static_cast<std::size_t>(n) + 1, 0);

    DecomposeResult res;
    for (auto [u, v] : s.edges()) {
        for (Vertex w : {u, v}) {
            if (deg[static_cast<std::size_t>(w)] == 2) {
                res.failure = {DecomposeFailure::Kind::DegreeViolation, w, {}};
                return res;
            }
        }
        adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(deg[static_cast<std::size_t>(u)]++)] = v;
        adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(deg[static_cast<std::size_t>(v)]++)] = u;
    }

    std::vector<char> visited(static_cast<std::size_t>(n) + 1, 0);
    auto walk = [&](Vertex start) {
        std::vector<Vertex> seq{start};
        visited[static_cast<std::size_t>(start)] = 1;
        Vertex prev = 0, cur = start;
        while (true) {
            Vertex next = 0;
            for (int k = 0; k < deg[static_cast<std::size_t>(cur)]; ++k) {
                Vertex cand = adj[static_cast<std::size_t>(cur)][static_cast<std::size_t>(k)];
                if (cand != prev) { next = cand; break; }
            }
            if (next == 0) break;
            seq.push_back(next);
            visited[static_cast<std::size_t>(next)] = 1;
            prev = cur;
            cur = next;
        }
        return seq;
    };

    for (Vertex v = 1; v <= n; ++v)
        if (deg[static_cast<std::size_t>(v)] == 1 && !visited[static_cast<std::size_t>(v)])
            res.paths.emplace_back(n, walk(v));

    // anything with unvisited edges now lies on a cycle
    for (Vertex v = 1; v <= n; ++v) {
        if (deg[static_cast<std::size_t>(v)] > 0 && !visited[static_cast<std::size_t>(v)]) {
            std::vector<Vertex> cyc{v};
            visited[static_cast<std::size_t>(v)] = 1;
            Vertex prev = 0, cur = v;
            while (true) {
                Vertex next = adj[static_cast<std::size_t>(cur)][0] != prev
                                  ? adj[static_cast<std::size_t>(cur)][0]
                                  : adj[static_cast<std::size_t>(cur)][1];
                if (next == v) break;
                cyc.push_back(next);
                visited[static_cast<std::size_t>(next)] = 1;
                prev = cur;
                cur = next;
            }
            res.failure = {DecomposeFailure::Kind::Cycle, 0, std::move(cyc)};
            return res;
        }
    }

    res.ok = true;
    return res;
}

void PathFamily::add(PathSeq p) {
    if (n == 0) n = p.n;
    if (p.n != n) throw std::invalid_argument("family paths must share one order");
    paths.push_back(std::move(p));
}

}  // namespace sepath
