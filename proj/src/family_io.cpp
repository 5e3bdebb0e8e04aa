#include "sepath/family_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace sepath {

using nlohmann::json;

json family_to_json(const FamilyFile& f) {
    json j;
    j["format_version"] = f.format_version;
    j["n"] = f.family.n;
    json paths = json::array();
    for (const auto& p : f.family.paths) paths.push_back(p.verts);
    j["paths"] = std::move(paths);
    json meta;
    meta["method"] = f.method;
    meta["size"] = f.family.paths.size();
    meta["bound_claimed"] = f.bound_claimed ? json(*f.bound_claimed) : json(nullptr);
    if (f.trace) meta["trace"] = *f.trace;
    j["meta"] = std::move(meta);
    return j;
}

FamilyFile family_from_json(const json& j) {
    FamilyFile f;
    try {
        f.format_version = j.at("format_version").get<int>();
        int n = j.at("n").get<int>();
        require_order(n);
        f.family = PathFamily(n);
        const json& paths = j.at("paths");
        if (!paths.is_array()) throw std::invalid_argument("\"paths\" must be an array");
        for (std::size_t i = 0; i < paths.size(); ++i) {
            try {
                f.family.add(PathSeq(n, paths[i].get<std::vector<Vertex>>()));
            } catch (const std::exception& e) {
                throw std::invalid_argument("path " + std::to_string(i) + ": " + e.what());
            }
        }
        if (j.contains("meta")) {
            const json& meta = j.at("meta");
            f.method = meta.value("method", std::string("unknown"));
            if (meta.contains("bound_claimed") && !meta.at("bound_claimed").is_null())
                f.bound_claimed = meta.at("bound_claimed").get<long long>();
            if (meta.contains("size") &&
                meta.at("size").get<std::size_t>() != f.family.paths.size())
                throw std::invalid_argument("meta.size disagrees with the number of paths");
            if (meta.contains("trace")) f.trace = meta.at("trace");
        }
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("malformed family file: ") + e.what());
    }
    return f;
}

void save_family(const FamilyFile& f, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << family_to_json(f).dump(2) << '\n';
    if (!out) throw std::runtime_error("write to " + path + " failed");
}

FamilyFile load_family(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("invalid JSON in ") + path + ": " + e.what());
    }
    return family_from_json(j);
}

namespace {

json edge_json(const EdgePair& e) { return json::array({e[0], e[1]}); }

}  // namespace

json report_to_json(const SeparationReport& rep) {
    json j;
    j["separating"] = rep.separating;
    j["mode"] = rep.mode == SeparationReport::Mode::Weak ? "weak" : "strong";
    j["family_size"] = rep.family_size;
    json pairs = json::array();
    for (const auto& [a, b] : rep.unseparated_pairs) pairs.push_back(json::array({edge_json(a), edge_json(b)}));
    j["unseparated_pairs"] = std::move(pairs);
    j["unseparated_total"] = rep.unseparated_total;
    json unc = json::array();
    for (const auto& e : rep.uncovered_edges) unc.push_back(edge_json(e));
    j["uncovered_edges"] = std::move(unc);
    j["uncovered_total"] = rep.uncovered_total;
    return j;
}

json trace_to_json(const FSeparatorResult& res) {
    SignedLabeling lab(res.forest.n);
    auto edges = [&](const std::vector<SignedEdge>& es) {
        json arr = json::array();
        for (auto [a, b] : es) arr.push_back(json::array({lab.to_standard(a), lab.to_standard(b)}));
        return arr;
    };
    json j;
    j["host_n"] = res.forest.n;
    j["x_b"] = res.forest.x_b;
    j["r"] = res.forest.r;
    j["t"] = res.forest.t;
    j["m0"] = edges(res.forest.m0);
    j["r1"] = edges(res.forest.r1);
    j["r2"] = edges(res.forest.r2);
    j["b"] = edges(res.forest.b);
    j["c_b"] = edges(res.connectors.c_b);
    j["c_0"] = edges(res.connectors.c_0);
    json lv = json::array();
    for (const auto& level : res.connectors.c_levels) lv.push_back(edges(level));
    j["c_levels"] = std::move(lv);
    j["special_5_7"] = res.connectors.special_5_7
                           ? edges({*res.connectors.special_5_7})[0]
                           : json(nullptr);
    j["edge_0_3"] = edges({res.connectors.edge_0_3})[0];
    j["e_v"] = res.connectors.e_v ? edges({*res.connectors.e_v})[0] : json(nullptr);
    j["e_m"] = edges(res.connectors.e_m);
    j["c_a"] = edges(res.connectors.c_a_rest);
    j["f_types"] = res.split.f_types;
    j["d_types"] = res.split.d_types;
    return j;
}

namespace {

struct Point {
    double x, y;
};

Point vertex_pos(int n, Vertex v, double radius) {
    double angle = 2.0 * M_PI * (v - 1) / n - M_PI / 2.0;
    return {radius * std::cos(angle), radius * std::sin(angle)};
}

std::string hsv_color(std::size_t index, std::size_t total) {
    double h = total == 0 ? 0.0 : static_cast<double>(index) / static_cast<double>(total);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f 0.75 0.80", h);
    return buf;
}

}  // namespace

std::string family_to_dot(const PathFamily& family) {
    std::ostringstream os;
    os << "graph separating_family {\n";
    os << "  layout=neato;\n  node [shape=circle, fixedsize=true, width=0.28, fontsize=10];\n";
    const int n = family.n == 0 ? 2 : family.n;
    for (Vertex v = 1; v <= n; ++v) {
        Point p = vertex_pos(n, v, 4.0);
        char buf[96];
        std::snprintf(buf, sizeof buf, "  v%d [label=\"%d\", pos=\"%.3f,%.3f!\"];\n", v, v, p.x, p.y);
        os << buf;
    }
    for (std::size_t i = 0; i < family.paths.size(); ++i) {
        os << "  // path " << i << "\n";
        for (auto [u, v] : family.paths[i].edge_list())
            os << "  v" << u << " -- v" << v << " [color=\"" << hsv_color(i, family.paths.size())
               << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

std::string family_to_svg(const PathFamily& family) {
    const int n = family.n == 0 ? 2 : family.n;
    const double size = 640.0, radius = 280.0, cx = size / 2, cy = size / 2;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
       << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
    os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (std::size_t i = 0; i < family.paths.size(); ++i) {
        double hue = family.paths.empty() ? 0.0 : 360.0 * i / family.paths.size();
        char color[48];
        std::snprintf(color, sizeof color, "hsl(%.0f, 70%%, 45%%)", hue);
        for (auto [u, v] : family.paths[i].edge_list()) {
            Point a = vertex_pos(n, u, radius), b = vertex_pos(n, v, radius);
            char buf[256];
            std::snprintf(buf, sizeof buf,
                          "  <line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"%s\" "
                          "stroke-width=\"1.4\" stroke-opacity=\"0.8\"/>\n",
                          cx + a.x, cy + a.y, cx + b.x, cy + b.y, color);
            os << buf;
        }
    }
    for (Vertex v = 1; v <= n; ++v) {
        Point p = vertex_pos(n, v, radius);
        char buf[256];
        std::snprintf(buf, sizeof buf,
                      "  <circle cx=\"%.1f\" cy=\"%.1f\" r=\"3.2\" fill=\"black\"/>\n"
                      "  <text x=\"%.1f\" y=\"%.1f\" font-size=\"11\" text-anchor=\"middle\">%d</text>\n",
                      cx + p.x, cy + p.y, cx + p.x * 1.08, cy + p.y * 1.08 + 4, v);
        os << buf;
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace sepath
