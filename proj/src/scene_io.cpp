#include "alphagon/scene_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace alphagon {

namespace {

using nlohmann::json;

void append_escaped(std::string& out, const std::string& s) {
    out.push_back('"');
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                    out += buf;
                } else {
                    out.push_back(ch);
                }
        }
    }
    out.push_back('"');
}

void append_point(std::string& out, Point p) {
    out += '[';
    out += format_double(p.x);
    out += ',';
    out += format_double(p.y);
    out += ']';
}

void append_edge_ref(std::string& out, const EdgeRef& e) {
    out += '[';
    append_escaped(out, e.u);
    out += ',';
    append_escaped(out, e.v);
    out += ']';
}

Point parse_point(const json& j) {
    if (!j.is_array() || j.size() != 2) {
        throw std::invalid_argument("scene_from_json: point must be a pair");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

EdgeRef parse_edge_ref(const json& j) {
    if (!j.is_array() || j.size() != 2) {
        throw std::invalid_argument("scene_from_json: edge must be an id pair");
    }
    return {j[0].get<std::string>(), j[1].get<std::string>()};
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string scene_to_json(const Scene& s) {
    const Collection& c = s.coll;
    std::string out;
    out.reserve(256 + 96 * c.shapes.size());
    out += "{\n  \"template\": {";
    if (c.tpl.kind == TemplateKind::regular) {
        out += "\"kind\": \"regular\", \"n\": ";
        out += std::to_string(c.tpl.n);
        out += ", \"rotation\": ";
        out += format_double(c.tpl.rotation);
    } else {
        out += "\"kind\": \"convex\", \"vertices\": [";
        for (size_t i = 0; i < c.tpl.verts.size(); ++i) {
            if (i) out += ',';
            append_point(out, c.tpl.verts[i]);
        }
        out += ']';
    }
    out += "},\n  \"alpha\": ";
    out += format_double(c.alpha);
    out += ",\n  \"homothets\": [";
    for (size_t i = 0; i < c.shapes.size(); ++i) {
        const Homothet& h = c.shapes[i];
        out += i ? ",\n    " : "\n    ";
        out += "{\"id\": ";
        append_escaped(out, h.id);
        out += ", \"scale\": ";
        out += format_double(h.scale);
        out += ", \"translate\": ";
        append_point(out, h.translate);
        out += '}';
    }
    out += c.shapes.empty() ? "]" : "\n  ]";

    if (s.blueprint) {
        const Blueprint& b = *s.blueprint;
        out += ",\n  \"blueprint\": {\n    \"blueprint_version\": ";
        out += std::to_string(b.version);
        out += ",\n    \"parameters\": {";
        bool first = true;
        for (const auto& [k, v] : b.parameters) {
            if (!first) out += ", ";
            first = false;
            append_escaped(out, k);
            out += ": ";
            out += format_double(v);
        }
        out += "},\n    \"exhaustive\": ";
        out += b.exhaustive ? "true" : "false";
        out += ",\n    \"intended_edges\": [";
        for (size_t i = 0; i < b.intended_edges.size(); ++i) {
            if (i) out += ',';
            append_edge_ref(out, b.intended_edges[i]);
        }
        out += ']';
        if (b.designated_edge) {
            out += ",\n    \"designated_edge\": ";
            append_edge_ref(out, *b.designated_edge);
        }
        out += ",\n    \"intended_crossings\": [";
        for (size_t i = 0; i < b.intended_crossings.size(); ++i) {
            if (i) out += ',';
            out += '[';
            append_edge_ref(out, b.intended_crossings[i].a);
            out += ',';
            append_edge_ref(out, b.intended_crossings[i].b);
            out += ']';
        }
        out += "],\n    \"grid_map\": [";
        for (size_t i = 0; i < b.grid_map.size(); ++i) {
            const GridVertexRef& g = b.grid_map[i];
            if (i) out += ',';
            out += "[";
            out += std::to_string(g.row);
            out += ',';
            out += std::to_string(g.col);
            out += ',';
            append_escaped(out, g.id);
            out += ']';
        }
        out += "],\n    \"grid_paths\": [";
        for (size_t i = 0; i < b.grid_paths.size(); ++i) {
            const GridPathRef& g = b.grid_paths[i];
            if (i) out += ',';
            out += "{\"from\": [";
            out += std::to_string(g.r1);
            out += ',';
            out += std::to_string(g.c1);
            out += "], \"to\": [";
            out += std::to_string(g.r2);
            out += ',';
            out += std::to_string(g.c2);
            out += "], \"ids\": [";
            for (size_t k = 0; k < g.ids.size(); ++k) {
                if (k) out += ',';
                append_escaped(out, g.ids[k]);
            }
            out += "]}";
        }
        out += "],\n    \"cells\": [";
        for (size_t i = 0; i < b.cells.size(); ++i) {
            const CellRef& cell = b.cells[i];
            if (i) out += ',';
            out += "{\"row\": ";
            out += std::to_string(cell.row);
            out += ", \"col\": ";
            out += std::to_string(cell.col);
            out += ", \"boundary\": [";
            for (size_t k = 0; k < cell.boundary.size(); ++k) {
                if (k) out += ',';
                append_escaped(out, cell.boundary[k]);
            }
            out += "]}";
        }
        out += "]\n  }";
    }
    out += "\n}\n";
    return out;
}

Scene scene_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("scene_from_json: parse error: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("scene_from_json: root must be an object");
    if (!j.contains("template") || !j.contains("alpha") || !j.contains("homothets")) {
        throw std::invalid_argument("scene_from_json: template, alpha, homothets are required");
    }

    Scene s;
    const json& jt = j["template"];
    std::string kind = jt.value("kind", "regular");
    if (kind == "regular") {
        s.coll.tpl = make_regular_template(jt.at("n").get<int>(), jt.value("rotation", 0.0));
    } else if (kind == "convex") {
        std::vector<Point> verts;
        for (const auto& pv : jt.at("vertices")) verts.push_back(parse_point(pv));
        s.coll.tpl = validate_irregular_template(verts);
        // Stored vertices that are already canonical are kept verbatim so a
        // save/load cycle reproduces the file bit for bit.
        if (s.coll.tpl.verts.size() == verts.size()) {
            double ext = 2.0 * s.coll.tpl.circumradius;
            bool close = true;
            for (size_t i = 0; i < verts.size(); ++i) {
                if (std::abs(verts[i].x - s.coll.tpl.verts[i].x) > 1e-9 * ext ||
                    std::abs(verts[i].y - s.coll.tpl.verts[i].y) > 1e-9 * ext) {
                    close = false;
                    break;
                }
            }
            if (close) s.coll.tpl.verts = verts;
        }
    } else {
        throw std::invalid_argument("scene_from_json: unknown template kind " + kind);
    }
    s.coll.alpha = j.at("alpha").get<double>();
    if (s.coll.alpha < 0.0 || s.coll.alpha > 1.0) {
        throw std::invalid_argument("scene_from_json: alpha must lie in [0,1]");
    }

    for (const auto& jh : j.at("homothets")) {
        Homothet h;
        h.id = jh.at("id").get<std::string>();
        h.scale = jh.at("scale").get<double>();
        if (!(h.scale > 0.0)) {
            throw std::invalid_argument("scene_from_json: scale must be positive");
        }
        h.translate = parse_point(jh.at("translate"));
        if (s.coll.index_of(h.id) >= 0) {
            throw std::invalid_argument("scene_from_json: duplicate id " + h.id);
        }
        s.coll.shapes.push_back(std::move(h));
    }

    if (j.contains("blueprint")) {
        const json& jb = j["blueprint"];
        Blueprint b;
        b.version = jb.value("blueprint_version", 1);
        if (jb.contains("parameters")) {
            for (auto it = jb["parameters"].begin(); it != jb["parameters"].end(); ++it) {
                b.parameters[it.key()] = it.value().get<double>();
            }
        }
        b.exhaustive = jb.value("exhaustive", false);
        if (jb.contains("intended_edges")) {
            for (const auto& je : jb["intended_edges"]) b.intended_edges.push_back(parse_edge_ref(je));
        }
        if (jb.contains("designated_edge")) {
            b.designated_edge = parse_edge_ref(jb["designated_edge"]);
        }
        if (jb.contains("intended_crossings")) {
            for (const auto& jc : jb["intended_crossings"]) {
                if (!jc.is_array() || jc.size() != 2) {
                    throw std::invalid_argument("scene_from_json: crossing must pair two edges");
                }
                b.intended_crossings.push_back({parse_edge_ref(jc[0]), parse_edge_ref(jc[1])});
            }
        }
        if (jb.contains("grid_map")) {
            for (const auto& jg : jb["grid_map"]) {
                if (!jg.is_array() || jg.size() != 3) {
                    throw std::invalid_argument("scene_from_json: grid_map entry must be [row,col,id]");
                }
                b.grid_map.push_back({jg[0].get<int>(), jg[1].get<int>(), jg[2].get<std::string>()});
            }
        }
        if (jb.contains("grid_paths")) {
            for (const auto& jg : jb["grid_paths"]) {
                GridPathRef g;
                const auto& from = jg.at("from");
                const auto& to = jg.at("to");
                g.r1 = from.at(0).get<int>();
                g.c1 = from.at(1).get<int>();
                g.r2 = to.at(0).get<int>();
                g.c2 = to.at(1).get<int>();
                for (const auto& id : jg.at("ids")) g.ids.push_back(id.get<std::string>());
                b.grid_paths.push_back(std::move(g));
            }
        }
        if (jb.contains("cells")) {
            for (const auto& jc : jb["cells"]) {
                CellRef cell;
                cell.row = jc.at("row").get<int>();
                cell.col = jc.at("col").get<int>();
                for (const auto& id : jc.at("boundary")) cell.boundary.push_back(id.get<std::string>());
                b.cells.push_back(std::move(cell));
            }
        }
        s.blueprint = std::move(b);
    }
    return s;
}

void save_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("save_text: cannot open " + path);
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw std::runtime_error("save_text: write failed for " + path);
}

std::string load_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("load_text: cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string graph_to_edge_list(const Graph& g) {
    std::string out;
    out += "# vertices ";
    out += std::to_string(g.n);
    out += '\n';
    for (auto [u, v] : g.edges) {
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

Graph graph_from_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int declared = -1;
    std::vector<std::pair<int, int>> edges;
    int max_vertex = -1;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream hs(line.substr(1));
            std::string word;
            if (hs >> word && word == "vertices") {
                hs >> declared;
            }
            continue;
        }
        std::istringstream ls(line);
        int u, v;
        if (!(ls >> u >> v)) {
            throw std::invalid_argument("graph_from_edge_list: bad line: " + line);
        }
        if (u < 0 || v < 0) {
            throw std::invalid_argument("graph_from_edge_list: negative vertex");
        }
        edges.push_back({u, v});
        max_vertex = std::max({max_vertex, u, v});
    }
    Graph g(std::max(declared, max_vertex + 1));
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

std::uint64_t fnv1a64(const void* data, std::size_t len) {
    const unsigned char* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = 1469598103934665603ull;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 1099511628211ull;
    }
    return h;
}

std::string file_digest_hex(const std::string& path) {
    std::string text = load_text(path);
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(text.data(), text.size())));
    return buf;
}

}  // namespace alphagon
