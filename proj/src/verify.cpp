#include "sepath/verify.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <cstring>
#include <numeric>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace sepath {

unsigned worker_cap() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("SEPATH_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1) return static_cast<unsigned>(std::min<long>(v, 256));
    }
    return hw;
}

Signatures Signatures::build(const PathFamily& family) {
    Signatures s;
    s.n_ = family.n == 0 ? 2 : family.n;
    s.family_ = family.paths.size();
    s.words_ = std::max<std::size_t>(1, (s.family_ + 63) / 64);
    s.data_.assign(static_cast<std::size_t>(s.edge_count()) * s.words_, 0);

    // Parallel fill: path-index blocks of 64 map to disjoint signature words,
    // so workers never touch the same word and the merge is deterministic.
    auto fill_block = [&](std::size_t word_lo, std::size_t word_hi) {
        for (std::size_t w = word_lo; w < word_hi; ++w) {
            std::size_t p_lo = w * 64, p_hi = std::min(s.family_, p_lo + 64);
            for (std::size_t p = p_lo; p < p_hi; ++p) {
                std::uint64_t mask = std::uint64_t{1} << (p - p_lo);
                for (auto [u, v] : family.paths[p].edge_list()) {
                    long long e = edge_index(s.n_, u, v);
                    s.data_[static_cast<std::size_t>(e) * s.words_ + w] |= mask;
                }
            }
        }
    };

    std::size_t blocks = (s.family_ + 63) / 64;
    unsigned workers = std::min<unsigned>(worker_cap(), static_cast<unsigned>(blocks));
    if (workers <= 1 || blocks <= 1) {
        fill_block(0, blocks);
    } else {
        std::vector<std::thread> pool;
        std::size_t per = (blocks + workers - 1) / workers;
        for (unsigned t = 0; t < workers; ++t) {
            std::size_t lo = t * per, hi = std::min(blocks, lo + per);
            if (lo >= hi) break;
            pool.emplace_back(fill_block, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    return s;
}

bool Signatures::bit(long long edge, std::size_t path) const {
    return (row(edge)[path >> 6] >> (path & 63)) & 1u;
}

int Signatures::popcount(long long edge) const {
    const std::uint64_t* r = row(edge);
    int c = 0;
    for (std::size_t w = 0; w < words_; ++w) c += std::popcount(r[w]);
    return c;
}

bool Signatures::equal(long long e1, long long e2) const {
    return std::memcmp(row(e1), row(e2), words_ * sizeof(std::uint64_t)) == 0;
}

bool Signatures::subset(long long e1, long long e2) const {
    const std::uint64_t *a = row(e1), *b = row(e2);
    for (std::size_t w = 0; w < words_; ++w)
        if (a[w] & ~b[w]) return false;
    return true;
}

Signatures signatures(const PathFamily& family) { return Signatures::build(family); }

namespace {

EdgePair edge_pair(int n, long long idx) {
    auto [u, v] = edge_at_index(n, idx);
    return {u, v};
}

void collect_uncovered(const Signatures& sig, SeparationReport& rep, std::size_t cap) {
    for (long long e = 0; e < sig.edge_count(); ++e) {
        if (sig.popcount(e) == 0) {
            ++rep.uncovered_total;
            if (rep.uncovered_edges.size() < cap) rep.uncovered_edges.push_back(edge_pair(sig.order(), e));
        }
    }
}

}  // namespace

SeparationReport verify_weak(const PathFamily& family, std::size_t witness_cap) {
    Signatures sig = Signatures::build(family);
    SeparationReport rep;
    rep.mode = SeparationReport::Mode::Weak;
    rep.family_size = family.paths.size();

    const long long m = sig.edge_count();
    std::vector<long long> order(static_cast<std::size_t>(m));
    std::iota(order.begin(), order.end(), 0);
    const std::size_t words = sig.words_per_edge();
    std::sort(order.begin(), order.end(), [&](long long a, long long b) {
        const std::uint64_t *ra = sig.row(a), *rb = sig.row(b);
        for (std::size_t w = 0; w < words; ++w)
            if (ra[w] != rb[w]) return ra[w] < rb[w];
        return a < b;
    });

    for (long long i = 0; i < m;) {
        long long j = i + 1;
        while (j < m && sig.equal(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)])) ++j;
        long long g = j - i;
        if (g > 1) {
            rep.unseparated_total += static_cast<std::size_t>(g * (g - 1) / 2);
            for (long long a = i; a < j && rep.unseparated_pairs.size() < witness_cap; ++a)
                for (long long b = a + 1; b < j && rep.unseparated_pairs.size() < witness_cap; ++b)
                    rep.unseparated_pairs.emplace_back(edge_pair(sig.order(), order[static_cast<std::size_t>(a)]),
                                                       edge_pair(sig.order(), order[static_cast<std::size_t>(b)]));
        }
        i = j;
    }

    collect_uncovered(sig, rep, witness_cap);
    rep.separating = rep.unseparated_total == 0;
    return rep;
}

SeparationReport verify_strong(const PathFamily& family, std::size_t witness_cap) {
    Signatures sig = Signatures::build(family);
    SeparationReport rep;
    rep.mode = SeparationReport::Mode::Strong;
    rep.family_size = family.paths.size();

    const long long m = sig.edge_count();
    // bucket edges by popcount; subset relations only cross from lower to
    // higher counts, and within a count subset means equality
    std::vector<std::vector<long long>> buckets(family.paths.size() + 1);
    for (long long e = 0; e < m; ++e) buckets[static_cast<std::size_t>(sig.popcount(e))].push_back(e);

    auto witness = [&](long long a, long long b) {
        ++rep.unseparated_total;
        if (rep.unseparated_pairs.size() < witness_cap)
            rep.unseparated_pairs.emplace_back(edge_pair(sig.order(), a), edge_pair(sig.order(), b));
    };

    for (std::size_t pa = 0; pa < buckets.size(); ++pa) {
        const auto& ba = buckets[pa];
        if (ba.empty()) continue;
        for (std::size_t i = 0; i < ba.size(); ++i)
            for (std::size_t j = i + 1; j < ba.size(); ++j)
                if (sig.equal(ba[i], ba[j])) witness(ba[i], ba[j]);
        for (std::size_t pb = pa + 1; pb < buckets.size(); ++pb)
            for (long long a : ba)
                for (long long b : buckets[pb])
                    if (sig.subset(a, b)) witness(a, b);
    }

    collect_uncovered(sig, rep, witness_cap);
    rep.separating = rep.unseparated_total == 0;
    return rep;
}

SeparationReport verify_weak_naive(const PathFamily& family, std::size_t witness_cap) {
    SeparationReport rep;
    rep.mode = SeparationReport::Mode::Weak;
    rep.family_size = family.paths.size();
    const int n = family.n == 0 ? 2 : family.n;
    const long long m = static_cast<long long>(n) * (n - 1) / 2;

    std::vector<std::unordered_set<long long>> members(family.paths.size());
    for (std::size_t p = 0; p < family.paths.size(); ++p)
        for (auto [u, v] : family.paths[p].edge_list()) members[p].insert(edge_index(n, u, v));

    std::vector<char> covered(static_cast<std::size_t>(m), 0);
    for (const auto& set : members)
        for (long long e : set) covered[static_cast<std::size_t>(e)] = 1;
    for (long long e = 0; e < m; ++e) {
        if (!covered[static_cast<std::size_t>(e)]) {
            ++rep.uncovered_total;
            if (rep.uncovered_edges.size() < witness_cap) rep.uncovered_edges.push_back(edge_pair(n, e));
        }
    }

    for (long long a = 0; a < m; ++a) {
        for (long long b = a + 1; b < m; ++b) {
            bool separated = false;
            for (const auto& set : members) {
                if (set.count(a) != set.count(b)) { separated = true; break; }
            }
            if (!separated) {
                ++rep.unseparated_total;
                if (rep.unseparated_pairs.size() < witness_cap)
                    rep.unseparated_pairs.emplace_back(edge_pair(n, a), edge_pair(n, b));
            }
        }
    }
    rep.separating = rep.unseparated_total == 0;
    return rep;
}

namespace {

// starts of every edge of the path, grouped by type
std::vector<std::vector<TypedEdge>> edges_by_type(const PathSeq& path) {
    std::vector<std::vector<TypedEdge>> by_type(static_cast<std::size_t>(max_edge_type(path.n)) + 1);
    for (auto [u, v] : path.edge_list())
        by_type[static_cast<std::size_t>(edge_type(path.n, u, v))].push_back(make_typed_edge(path.n, u, v));
    return by_type;
}

std::vector<std::vector<TypedEdge>> edges_by_type(const EdgeSet& s) {
    std::vector<std::vector<TypedEdge>> by_type(static_cast<std::size_t>(max_edge_type(s.order())) + 1);
    for (auto [u, v] : s.edges())
        by_type[static_cast<std::size_t>(edge_type(s.order(), u, v))].push_back(make_typed_edge(s.order(), u, v));
    return by_type;
}

// GP3 bookkeeping over a chosen set of types: pairwise same-type distances
// must not repeat across different types; for even n no same-type pair may
// sit at distance exactly n/2.
struct Gp3Check {
    std::vector<GeneratorReport::DistanceClash> clashes;
    std::vector<std::pair<int, int>> half_spaced;
    bool clean = true;

    void run(int n, const std::vector<std::vector<TypedEdge>>& by_type, const std::vector<int>& types) {
        std::unordered_map<int, int> owner;  // distance -> first type using it
        const bool even = n % 2 == 0;
        for (int x : types) {
            const auto& es = by_type[static_cast<std::size_t>(x)];
            std::unordered_set<int> own_distances;  // dedupe within one type
            for (std::size_t i = 0; i < es.size(); ++i) {
                for (std::size_t j = i + 1; j < es.size(); ++j) {
                    int d = cd_edges(n, es[i], es[j]);
                    if (even && 2 * d == n) {
                        half_spaced.emplace_back(x, d);
                        clean = false;
                    }
                    if (own_distances.count(d)) continue;
                    own_distances.insert(d);
                    auto [it, inserted] = owner.emplace(d, x);
                    if (!inserted && it->second != x) {
                        clashes.push_back({it->second, x, d});
                        clean = false;
                    }
                }
            }
        }
    }
};

}  // namespace

GeneratorReport check_generator(const PathSeq& path) {
    const int n = path.n;
    const int tmax = max_edge_type(n);
    const bool even = n % 2 == 0;
    auto by_type = edges_by_type(path);

    GeneratorReport rep;
    rep.even_order = even;

    for (int x = 1; x <= tmax; ++x) {
        std::size_t c = by_type[static_cast<std::size_t>(x)].size();
        if (c == 0) rep.missing_types.push_back(x);
        if (c == 1) rep.once_types.push_back(x);
        if (c > 2) rep.overfull_types.push_back(x);
    }
    rep.gp1 = rep.missing_types.empty();

    std::size_t once_counted = 0;
    for (int x : rep.once_types)
        if (!(even && 2 * x == n)) ++once_counted;  // even n: type n/2 exempt from the once-rule
    rep.gp2 = once_counted <= 1 && rep.overfull_types.empty();

    std::vector<int> multi;
    for (int x = 1; x <= tmax; ++x)
        if (by_type[static_cast<std::size_t>(x)].size() >= 2) multi.push_back(x);
    Gp3Check gp3;
    gp3.run(n, by_type, multi);
    rep.gp3 = gp3.clean;
    rep.gp3_clashes = std::move(gp3.clashes);
    rep.half_spaced_types = std::move(gp3.half_spaced);
    return rep;
}

FSplit::FSplit(int order, std::vector<int> f, std::vector<int> d)
    : n(order), f_types(std::move(f)), d_types(std::move(d)) {
    require_order(n);
    std::sort(f_types.begin(), f_types.end());
    std::sort(d_types.begin(), d_types.end());
    std::vector<char> seen(static_cast<std::size_t>(max_edge_type(n)) + 1, 0);
    auto mark = [&](int x) {
        if (x < 1 || x > max_edge_type(n))
            throw std::invalid_argument("type " + std::to_string(x) + " out of range");
        if (seen[static_cast<std::size_t>(x)])
            throw std::invalid_argument("type " + std::to_string(x) + " appears twice in the split");
        seen[static_cast<std::size_t>(x)] = 1;
    };
    for (int x : f_types) mark(x);
    for (int x : d_types) mark(x);
    for (int x = 1; x <= max_edge_type(n); ++x)
        if (!seen[static_cast<std::size_t>(x)])
            throw std::invalid_argument("type " + std::to_string(x) + " missing from the split");
}

std::size_t FSplit::d_with_one() const {
    std::size_t c = d_types.size();
    if (!std::binary_search(d_types.begin(), d_types.end(), 1)) ++c;
    return c;
}

namespace {

FSeparatorReport f_separator_impl(int n, const std::vector<std::vector<TypedEdge>>& by_type,
                                  const FSplit& split) {
    if (split.n != n) throw std::invalid_argument("split and edge set disagree on the order");
    FSeparatorReport rep;
    for (int x = 1; x <= max_edge_type(n); ++x)
        if (by_type[static_cast<std::size_t>(x)].empty()) rep.missing_types.push_back(x);
    rep.covers_all_types = rep.missing_types.empty();

    for (int x : split.f_types) {
        std::size_t c = by_type[static_cast<std::size_t>(x)].size();
        if (c != 2) rep.wrong_count_types.emplace_back(x, c);
    }
    rep.f_types_doubled = rep.wrong_count_types.empty();

    Gp3Check gp3;
    gp3.run(n, by_type, split.f_types);
    rep.f_distances_clean = gp3.clean;
    rep.clashes = std::move(gp3.clashes);
    return rep;
}

}  // namespace

FSeparatorReport check_f_separator(const EdgeSet& edges, const FSplit& split) {
    return f_separator_impl(edges.order(), edges_by_type(edges), split);
}

FSeparatorReport check_f_separator(const PathSeq& path, const FSplit& split) {
    return f_separator_impl(path.n, edges_by_type(path), split);
}

std::vector<int> equally_spaced_types(const PathSeq& path) {
    const int n = path.n;
    auto by_type = edges_by_type(path);
    std::vector<int> out;
    for (int x = 1; x <= max_edge_type(n); ++x) {
        const auto& es = by_type[static_cast<std::size_t>(x)];
        std::size_t m = es.size();
        if (m < 2) continue;
        // Type n/2 edges live on a half-length cycle: each edge is determined
        // by its start mod n/2, and rotation by n/2 fixes the whole class.
        const int circle = (2 * x == n) ? n / 2 : n;
        if (circle % static_cast<int>(m) != 0) continue;
        const int gap = circle / static_cast<int>(m);
        std::vector<int> starts;
        starts.reserve(m);
        for (const auto& e : es) starts.push_back((e.start - 1) % circle);
        std::sort(starts.begin(), starts.end());
        bool spaced = true;
        for (std::size_t i = 0; i + 1 < starts.size(); ++i)
            if (starts[i + 1] - starts[i] != gap) { spaced = false; break; }
        if (spaced) out.push_back(x);
    }
    return out;
}

int crossing_number(int n, Vertex u, Vertex v) {
    if (n % 2 == 0) throw std::invalid_argument("crossing numbers are defined for odd orders only");
    SignedLabeling lab(n);
    (void)edge_type(n, u, v);
    // {u,v} lies in the rotated matching M_k with 2k = s(u)+s(v); the edge of
    // M_k at signed 0 is (0, 2k), whose type is the crossing number.
    long long sum = lab.to_signed(u) + lab.to_signed(v);
    int k2 = static_cast<int>(((sum % n) + n) % n);
    return std::min(k2, n - k2);
}

LbDiagnostics lb_diagnostics(const PathFamily& family) {
    Signatures sig = Signatures::build(family);
    LbDiagnostics d;
    d.unique_per_path.assign(family.paths.size(), 0);
    for (long long e = 0; e < sig.edge_count(); ++e) {
        int pc = sig.popcount(e);
        ++d.multiplicity_histogram[static_cast<std::size_t>(pc)];
        if (pc == 0) ++d.uncovered;
        if (static_cast<std::size_t>(pc) == family.paths.size() && !family.paths.empty()) ++d.in_every_path;
        if (pc == 1) {
            for (std::size_t p = 0; p < family.paths.size(); ++p)
                if (sig.bit(e, p)) { ++d.unique_per_path[p]; break; }
        }
    }
    return d;
}

}  // namespace sepath
