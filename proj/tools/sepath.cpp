// Command-line surface: construct families, verify them, run the exact
// searches, and emit range reports and figures.
//
// Exit codes: 0 success / separating, 1 semantic failure (not separating,
// bound violated, nothing found), 2 usage or format error.

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "sepath/construct.hpp"
#include "sepath/core.hpp"
#include "sepath/family_io.hpp"
#include "sepath/search.hpp"
#include "sepath/verify.hpp"

using namespace sepath;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSemantic = 1;
constexpr int kExitUsage = 2;

struct BuildOutcome {
    PathFamily family;
    ConstructionProvenance provenance;
    std::optional<FSeparatorResult> host;  // set when the pipeline ran
};

BuildOutcome build_family(int n, const std::string& method, const SearchBudget& budget) {
    BuildOutcome out;
    if (method == "auto") {
        auto [fam, prov] = construct_best(n);
        out.family = std::move(fam);
        out.provenance = prov;
        return out;
    }
    if (method == "catalog") {
        if (n < 2 || n > 20) throw std::invalid_argument("catalog covers 2 <= n <= 20 only");
        PathSeq p = catalog_generator(n);
        out.family = PathFamily(n);
        for (int i = 0; i < n; ++i) out.family.add(rotate(p, i));
        out.provenance = {Method::Catalog, out.family.paths.size(), n};
        return out;
    }
    if (method == "prime") {
        if (n % 2 == 0 || !is_prime(n))
            throw std::invalid_argument(std::to_string(n) + " is not an odd prime");
        PathSeq p = prime_generator(n);
        out.family = PathFamily(n);
        for (int i = 0; i < n; ++i) out.family.add(rotate(p, i));
        out.provenance = {Method::Prime, out.family.paths.size(), n};
        return out;
    }
    if (method == "prime-plus-one") {
        if (n < 4 || (n - 1) % 2 == 0 || !is_prime(n - 1))
            throw std::invalid_argument(std::to_string(n) + " - 1 is not an odd prime");
        out.family = prime_plus_one(n - 1);
        out.provenance = {Method::PrimePlusOne, out.family.paths.size(), n};
        return out;
    }
    if (method == "main") {
        TheoremOutput thm = theorem_family_traced(n);  // validates n >= 44
        out.family = std::move(thm.family);
        out.provenance = thm.provenance;
        out.host = std::move(thm.host);
        return out;
    }
    if (method == "search") {
        auto res = search_generator(n, budget);
        if (res.outcome != SearchOutcome::Found)
            throw std::runtime_error(res.outcome == SearchOutcome::Exhausted
                                         ? "no generator path exists for this order"
                                         : "search budget exhausted before finding a generator");
        out.family = PathFamily(n);
        for (int i = 0; i < n; ++i) out.family.add(rotate(*res.path, i));
        out.provenance = {Method::Search, out.family.paths.size(), n};
        return out;
    }
    throw std::invalid_argument("unknown method: " + method);
}

int cmd_construct(int n, const std::string& method, const std::string& out_path, bool with_trace,
                  const SearchBudget& budget) {
    BuildOutcome built;
    try {
        built = build_family(n, method, budget);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitSemantic;
    }

    auto rep = verify_weak(built.family);
    FamilyFile file;
    file.family = built.family;
    file.method = method_name(built.provenance.method);
    file.bound_claimed = built.provenance.bound_claimed;
    if (with_trace && built.host) file.trace = trace_to_json(*built.host);

    std::ostream* info = &std::cout;
    if (out_path.empty()) {
        std::cout << family_to_json(file).dump(2) << '\n';
        info = &std::cerr;
    } else {
        save_family(file, out_path);
    }
    *info << "n=" << n << " method=" << file.method << " size=" << built.family.paths.size();
    if (built.provenance.bound_claimed) *info << " bound=" << *built.provenance.bound_claimed;
    *info << " separating=" << (rep.separating ? "true" : "false") << '\n';
    return rep.separating ? kExitOk : kExitSemantic;
}

int cmd_verify(const std::string& path, const std::string& mode, bool cross_check, bool quiet,
               bool diagnostics) {
    FamilyFile file;
    try {
        file = load_family(path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    if (mode == "strong" && file.family.n > 100)
        std::cerr << "note: strong verification is quadratic in the edge count; "
                  << "expect a wait at this order\n";
    SeparationReport rep =
        mode == "strong" ? verify_strong(file.family) : verify_weak(file.family);
    if (cross_check && mode == "weak") {
        auto naive = verify_weak_naive(file.family);
        if (naive.separating != rep.separating || naive.unseparated_total != rep.unseparated_total) {
            std::cerr << "error: signature verifier and naive oracle disagree\n";
            return kExitSemantic;
        }
    }
    if (!quiet) {
        nlohmann::json j = report_to_json(rep);
        if (diagnostics) {
            auto d = lb_diagnostics(file.family);
            nlohmann::json dj;
            dj["uncovered"] = d.uncovered;
            dj["in_every_path"] = d.in_every_path;
            dj["unique_per_path"] = d.unique_per_path;
            nlohmann::json hist;
            for (auto [mult, count] : d.multiplicity_histogram) hist[std::to_string(mult)] = count;
            dj["multiplicity_histogram"] = std::move(hist);
            j["diagnostics"] = std::move(dj);
        }
        std::cout << j.dump(2) << '\n';
    }
    return rep.separating ? kExitOk : kExitSemantic;
}

int cmd_exact_min(int n, const SearchBudget& budget) {
    ExactMinResult res;
    try {
        res = exact_min_sps(n, budget);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    if (res.outcome != SearchOutcome::Found) {
        std::cerr << "error: budget exceeded before certification\n";
        return kExitSemantic;
    }
    nlohmann::json j;
    j["n"] = n;
    j["minimum"] = res.size;
    j["nodes_visited"] = res.nodes_visited;
    nlohmann::json w = nlohmann::json::array();
    for (const auto& p : res.family.paths) w.push_back(p.verts);
    j["witness"] = std::move(w);
    std::cout << j.dump(2) << '\n';
    return kExitOk;
}

long long best_known_bound(int n) {
    long long best = static_cast<long long>(n) * (n - 1) / 2;  // every edge alone
    if (n <= 20) best = std::min<long long>(best, n);
    if (n % 2 == 1 && is_prime(n)) best = std::min<long long>(best, n);
    if (n >= 4 && is_prime(n - 1) && (n - 1) % 2 == 1) best = std::min<long long>(best, n);
    if (n >= 44) best = std::min(best, theorem_bound_ceiling(n));
    best = std::min<long long>(best, 2LL * n + 4);  // known probabilistic bound
    return best;
}

int cmd_report(int from, int to, const std::string& out_path, const std::string& figures_dir,
               const std::string& figure_format) {
    if (from < 2 || to < from) {
        std::cerr << "error: need 2 <= from <= to\n";
        return kExitUsage;
    }
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "error: cannot open " << out_path << '\n';
        return kExitUsage;
    }
    out << "n,method,size,lower_bound,upper_bound,separating\n";
    for (int n = from; n <= to; ++n) {
        auto [fam, prov] = construct_best(n);
        bool sep = verify_weak(fam).separating;
        out << n << ',' << method_name(prov.method) << ',' << prov.size << ',' << (n - 1) << ','
            << best_known_bound(n) << ',' << (sep ? "true" : "false") << '\n';
        if (!figures_dir.empty()) {
            std::filesystem::create_directories(figures_dir);
            std::string ext = figure_format == "dot" ? ".dot" : ".svg";
            std::ofstream fig(figures_dir + "/family_" + std::to_string(n) + ext);
            fig << (figure_format == "dot" ? family_to_dot(fam) : family_to_svg(fam));
        }
    }
    if (!out) {
        std::cerr << "error: writing " << out_path << " failed\n";
        return kExitSemantic;
    }
    return kExitOk;
}

int cmd_figure(const std::string& family_path, const std::string& out_path) {
    FamilyFile file;
    try {
        file = load_family(family_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "error: cannot open " << out_path << '\n';
        return kExitUsage;
    }
    if (out_path.size() >= 4 && out_path.substr(out_path.size() - 4) == ".dot")
        out << family_to_dot(file.family);
    else
        out << family_to_svg(file.family);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"separating path systems for complete graphs: construct, verify, search, report"};
    app.require_subcommand(1);

    long long max_nodes = 0;
    long long time_limit_ms = 0;
    auto budget = [&]() {
        SearchBudget b;
        if (max_nodes > 0) b.max_nodes = max_nodes;
        if (time_limit_ms > 0) b.wall_time_limit = std::chrono::milliseconds(time_limit_ms);
        return b;
    };

    int n = 0;
    std::string method = "auto", out_path, family_path, mode = "weak";
    bool with_trace = false, cross_check = false, quiet = false, diagnostics = false;
    int from = 2, to = 20;
    std::string figures_dir, figure_format = "svg";

    auto* construct = app.add_subcommand("construct", "build a separating path system for K_n");
    construct->add_option("--n", n, "number of vertices")->required();
    construct->add_option("--method", method,
                          "auto|catalog|prime|prime-plus-one|main|search (default auto)")
        ->check(CLI::IsMember({"auto", "catalog", "prime", "prime-plus-one", "main", "search"}));
    construct->add_option("--out", out_path, "output family file (stdout when omitted)");
    construct->add_flag("--trace", with_trace, "embed the construction trace when available");
    construct->add_option("--max-nodes", max_nodes, "search node budget");
    construct->add_option("--time-limit-ms", time_limit_ms, "search wall-clock budget");

    auto* verify = app.add_subcommand("verify", "verify a family file");
    verify->add_option("--family", family_path, "family file")->required();
    verify->add_option("--mode", mode, "weak|strong (default weak)")
        ->check(CLI::IsMember({"weak", "strong"}));
    verify->add_flag("--cross-check", cross_check, "also run the naive pairwise oracle");
    verify->add_flag("--quiet", quiet, "suppress the JSON report");
    verify->add_flag("--diagnostics", diagnostics, "include coverage and multiplicity diagnostics");

    auto* exact = app.add_subcommand("exact-min", "certify f(K_n) exactly (2 <= n <= 5)");
    exact->add_option("--n", n, "number of vertices")->required();
    exact->add_option("--max-nodes", max_nodes, "search node budget");
    exact->add_option("--time-limit-ms", time_limit_ms, "search wall-clock budget");

    auto* report = app.add_subcommand("report", "CSV report over a range of orders");
    report->add_option("--from", from, "first order")->required();
    report->add_option("--to", to, "last order")->required();
    report->add_option("--out", out_path, "CSV output path")->required();
    report->add_option("--figures", figures_dir, "also emit one figure per order into this directory");
    report->add_option("--figure-format", figure_format, "dot|svg (default svg)")
        ->check(CLI::IsMember({"dot", "svg"}));

    auto* figure = app.add_subcommand("figure", "emit a circular-layout figure for a family file");
    figure->add_option("--family", family_path, "family file")->required();
    figure->add_option("--out", out_path, "output file (.dot or .svg)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (construct->parsed()) return cmd_construct(n, method, out_path, with_trace, budget());
        if (verify->parsed()) return cmd_verify(family_path, mode, cross_check, quiet, diagnostics);
        if (exact->parsed()) return cmd_exact_min(n, budget());
        if (report->parsed()) return cmd_report(from, to, out_path, figures_dir, figure_format);
        if (figure->parsed()) return cmd_figure(family_path, out_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitSemantic;
    }
    return kExitUsage;
}
