#include "sepath/search.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>

#include "sepath/verify.hpp"

namespace sepath {

namespace {

struct BudgetClock {
    long long max_nodes;
    std::chrono::steady_clock::time_point deadline{};
    bool timed = false;
    long long nodes = 0;
    bool exceeded = false;

    explicit BudgetClock(const SearchBudget& b) : max_nodes(b.max_nodes) {
        if (b.wall_time_limit.count() > 0) {
            timed = true;
            deadline = std::chrono::steady_clock::now() + b.wall_time_limit;
        }
    }

    // returns false once the budget is gone
    bool tick() {
        if (exceeded) return false;
        if (++nodes > max_nodes) { exceeded = true; return false; }
        if (timed && (nodes & 1023) == 0 && std::chrono::steady_clock::now() > deadline) {
            exceeded = true;
            return false;
        }
        return true;
    }
};

struct GeneratorSearcher {
    int n, tmax;
    bool even;
    BudgetClock clock;

    std::vector<char> used;
    std::vector<Vertex> seq;
    std::vector<int> count;           // per type
    std::vector<TypedEdge> first_of;  // first edge seen per type
    std::map<int, int> dist_owner;    // pair distance -> type
    int once = 0;                     // once-types, excluding n/2 for even n
    int missing;                      // types with no edge yet (excluding n/2 for even n)
    bool half_missing;                // even n: no n/2 edge yet

    explicit GeneratorSearcher(int order, const SearchBudget& budget)
        : n(order), tmax(max_edge_type(order)), even(order % 2 == 0), clock(budget),
          used(static_cast<std::size_t>(order) + 1, 0),
          count(static_cast<std::size_t>(tmax) + 1, 0),
          first_of(static_cast<std::size_t>(tmax) + 1),
          missing(even ? tmax - 1 : tmax), half_missing(even) {}

    bool counts_once(int x) const { return !(even && 2 * x == n); }

    bool accept() const {
        return missing == 0 && !half_missing && once <= 1;
    }

    // minimum edges still required vs. vertices still available
    bool feasible() const {
        int room = n - static_cast<int>(seq.size());
        int need = missing + (half_missing ? 1 : 0);
        int to_double = once + missing - 1;
        if (to_double > 0) need += to_double;
        return need <= room;
    }

    bool extend() {
        if (accept()) return true;
        if (!clock.tick()) return false;
        if (!feasible()) return false;
        const Vertex last = seq.back();
        for (Vertex w = 1; w <= n; ++w) {
            if (used[static_cast<std::size_t>(w)]) continue;
            int x = edge_type(n, last, w);
            if (count[static_cast<std::size_t>(x)] >= 2) continue;

            TypedEdge e = make_typed_edge(n, last, w);
            bool new_dist = false;
            int d = 0;
            if (count[static_cast<std::size_t>(x)] == 1) {
                d = cd_edges(n, first_of[static_cast<std::size_t>(x)], e);
                if (even && 2 * d == n) continue;  // same-type pair across the diameter
                auto it = dist_owner.find(d);
                if (it != dist_owner.end() && it->second != x) continue;
                if (it == dist_owner.end()) new_dist = true;
            } else {
                first_of[static_cast<std::size_t>(x)] = e;
                if (counts_once(x)) { --missing; ++once; }
                else half_missing = false;
            }

            if (count[static_cast<std::size_t>(x)] == 1 && counts_once(x)) --once;
            ++count[static_cast<std::size_t>(x)];
            if (new_dist) dist_owner.emplace(d, x);
            used[static_cast<std::size_t>(w)] = 1;
            seq.push_back(w);

            if (extend()) return true;

            seq.pop_back();
            used[static_cast<std::size_t>(w)] = 0;
            if (new_dist) dist_owner.erase(d);
            --count[static_cast<std::size_t>(x)];
            if (count[static_cast<std::size_t>(x)] == 1 && counts_once(x)) ++once;
            if (count[static_cast<std::size_t>(x)] == 0) {
                if (counts_once(x)) { ++missing; --once; }
                else half_missing = true;
            }
            if (clock.exceeded) return false;
        }
        return false;
    }
};

}  // namespace

GeneratorSearchResult search_generator(int n, const SearchBudget& budget) {
    require_order(n);
    if (n < 2) throw std::invalid_argument("generator search needs n >= 2");

    GeneratorSearcher s(n, budget);
    GeneratorSearchResult res;

    // rotation symmetry pins the start at 1; reflection symmetry lets the
    // first step run clockwise
    s.seq.push_back(1);
    s.used[1] = 1;
    for (Vertex w = 2; w <= 1 + max_edge_type(n) && !s.clock.exceeded; ++w) {
        int x = w - 1;  // clockwise step length = type
        TypedEdge e = make_typed_edge(n, 1, w);
        s.first_of[static_cast<std::size_t>(x)] = e;
        if (s.counts_once(x)) { --s.missing; ++s.once; }
        else s.half_missing = false;
        ++s.count[static_cast<std::size_t>(x)];
        s.used[static_cast<std::size_t>(w)] = 1;
        s.seq.push_back(w);

        if (s.extend()) {
            res.outcome = SearchOutcome::Found;
            res.path = PathSeq(n, s.seq);
            res.nodes_visited = s.clock.nodes;
            return res;
        }

        s.seq.pop_back();
        s.used[static_cast<std::size_t>(w)] = 0;
        --s.count[static_cast<std::size_t>(x)];
        if (s.counts_once(x)) { ++s.missing; --s.once; }
        else s.half_missing = true;
    }

    res.outcome = s.clock.exceeded ? SearchOutcome::BudgetExceeded : SearchOutcome::Exhausted;
    res.nodes_visited = s.clock.nodes;
    return res;
}

namespace {

// all paths of K_n as edge masks, canonical up to reversal, lexicographic
struct PathPool {
    int n;
    std::vector<std::vector<Vertex>> seqs;
    std::vector<std::uint16_t> masks;

    explicit PathPool(int order) : n(order) {
        std::vector<Vertex> cur;
        std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
        grow(cur, used);
    }

    void grow(std::vector<Vertex>& cur, std::vector<char>& used) {
        if (cur.size() >= 2) {
            std::vector<Vertex> rev(cur.rbegin(), cur.rend());
            if (cur <= rev) {
                seqs.push_back(cur);
                std::uint16_t m = 0;
                for (std::size_t i = 0; i + 1 < cur.size(); ++i)
                    m = static_cast<std::uint16_t>(m | (1u << edge_index(n, cur[i], cur[i + 1])));
                masks.push_back(m);
            }
        }
        if (cur.size() == static_cast<std::size_t>(n)) return;
        for (Vertex w = 1; w <= n; ++w) {
            if (used[static_cast<std::size_t>(w)]) continue;
            used[static_cast<std::size_t>(w)] = 1;
            cur.push_back(w);
            grow(cur, used);
            cur.pop_back();
            used[static_cast<std::size_t>(w)] = 0;
        }
    }
};

struct ExactSearcher {
    const PathPool& pool;
    int m;  // edges of K_n
    int k;  // target family size
    BudgetClock& clock;
    std::vector<std::uint16_t> sig;  // per-edge signature, bit d set by depth-d path
    std::vector<std::size_t> chosen;

    ExactSearcher(const PathPool& p, int edges, int target, BudgetClock& c)
        : pool(p), m(edges), k(target), clock(c), sig(static_cast<std::size_t>(edges), 0) {}

    bool classes_fit(int depth) const {
        // every signature class must be splittable into singletons by the
        // remaining k - depth paths
        int budget_bits = k - depth;
        std::map<std::uint32_t, int> count;
        for (int e = 0; e < m; ++e) {
            int c = ++count[sig[static_cast<std::size_t>(e)]];
            if (budget_bits >= 16) continue;
            if (c > (1 << budget_bits)) return false;
        }
        return true;
    }

    bool dfs(std::size_t next, int depth) {
        if (depth == k) return classes_fit(depth);
        if (!clock.tick()) return false;
        for (std::size_t i = next; i + static_cast<std::size_t>(k - depth) <= pool.seqs.size(); ++i) {
            std::uint16_t mask = pool.masks[i];
            for (int e = 0; e < m; ++e)
                sig[static_cast<std::size_t>(e)] = static_cast<std::uint16_t>(
                    (sig[static_cast<std::size_t>(e)] << 1) | ((mask >> e) & 1u));
            chosen.push_back(i);
            bool ok = classes_fit(depth + 1) && dfs(i + 1, depth + 1);
            if (ok) return true;
            chosen.pop_back();
            for (int e = 0; e < m; ++e)
                sig[static_cast<std::size_t>(e)] = static_cast<std::uint16_t>(sig[static_cast<std::size_t>(e)] >> 1);
            if (clock.exceeded) return false;
        }
        return false;
    }
};

}  // namespace

ExactMinResult exact_min_sps(int n, const SearchBudget& budget) {
    if (n < 2 || n > 5)
        throw std::invalid_argument("exact search is supported for 2 <= n <= 5 only; larger orders blow up combinatorially");

    ExactMinResult res;
    res.family = PathFamily(n);
    const int m = n * (n - 1) / 2;

    if (n == 2) {  // a single edge has no partner to be separated from
        res.outcome = SearchOutcome::Found;
        res.size = 0;
        return res;
    }

    PathPool pool(n);
    BudgetClock clock(budget);
    int k = 0;
    while ((1 << k) < m) ++k;  // pigeonhole: 2^k distinct signatures needed

    for (; k <= m; ++k) {
        ExactSearcher searcher(pool, m, k, clock);
        if (searcher.dfs(0, 0)) {
            res.outcome = SearchOutcome::Found;
            res.size = k;
            for (std::size_t i : searcher.chosen) res.family.add(PathSeq(n, pool.seqs[i]));
            res.nodes_visited = clock.nodes;
            return res;
        }
        if (clock.exceeded) {
            res.outcome = SearchOutcome::BudgetExceeded;
            res.nodes_visited = clock.nodes;
            return res;
        }
    }
    throw InternalError("single-edge family should have terminated the deepening");
}

}  // namespace sepath
