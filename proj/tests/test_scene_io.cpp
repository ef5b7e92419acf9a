#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <string>
#include <vector>

#include "alphagon/scene.hpp"
#include "alphagon/scene_io.hpp"
#include "alphagon/svg.hpp"

using namespace alphagon;

namespace {

Scene sample_scene(bool with_blueprint) {
    Scene s;
    s.coll.tpl = make_regular_template(6, 0.12345);
    s.coll.alpha = 0.5;
    s.coll.shapes = {{"a", 1.0, {0.0, 0.0}},
                     {"b", 0.3333333333333333, {1.25, -2.5}},
                     {"c", 2.0, {1e-7, 3.0}}};
    if (with_blueprint) {
        Blueprint b;
        b.parameters = {{"alpha", 0.5}, {"k", 3.0}};
        b.exhaustive = true;
        b.intended_edges = {{"a", "b"}, {"b", "c"}};
        b.designated_edge = EdgeRef{"a", "b"};
        b.intended_crossings = {{{"a", "b"}, {"b", "c"}}};
        b.grid_map = {{0, 0, "a"}, {0, 1, "b"}, {1, 0, "c"}};
        b.grid_paths = {{0, 0, 0, 1, {"a", "b"}}};
        b.cells = {{0, 0, {"a", "b", "c"}}};
        s.blueprint = std::move(b);
    }
    return s;
}

}  // namespace

TEST_CASE("scene json round trip is bit identical") {
    for (bool bp : {false, true}) {
        Scene s = sample_scene(bp);
        std::string j1 = scene_to_json(s);
        Scene s2 = scene_from_json(j1);
        std::string j2 = scene_to_json(s2);
        CHECK(j1 == j2);
        REQUIRE(s2.coll.shapes.size() == 3);
        CHECK(s2.coll.shapes[1].scale == s.coll.shapes[1].scale);
        CHECK(s2.coll.shapes[2].translate.x == s.coll.shapes[2].translate.x);
        CHECK(s2.coll.tpl.rotation == s.coll.tpl.rotation);
        CHECK(s2.blueprint.has_value() == bp);
        if (bp) {
            CHECK(s2.blueprint->exhaustive);
            CHECK(s2.blueprint->intended_edges.size() == 2);
            CHECK(s2.blueprint->designated_edge->u == "a");
            CHECK(s2.blueprint->intended_crossings.size() == 1);
            CHECK(s2.blueprint->grid_map.size() == 3);
            CHECK(s2.blueprint->grid_paths[0].ids.size() == 2);
            CHECK(s2.blueprint->cells[0].boundary.size() == 3);
            CHECK(s2.blueprint->parameters.at("k") == 3.0);
        }
    }
}

TEST_CASE("convex template serialization stabilizes after one pass") {
    Scene s;
    s.coll.tpl = validate_irregular_template({{0, 0}, {1, 0}, {0.9, 0.6}, {0, 1}});
    s.coll.alpha = 0.25;
    s.coll.shapes = {{"only", 1.5, {0.5, 0.5}}};
    Scene s2 = scene_from_json(scene_to_json(s));
    std::string j2 = scene_to_json(s2);
    Scene s3 = scene_from_json(j2);
    CHECK(scene_to_json(s3) == j2);
    CHECK(s2.coll.tpl.kind == TemplateKind::convex);
    CHECK(s2.coll.tpl.n == 4);
}

TEST_CASE("scene parsing rejects malformed input") {
    CHECK_THROWS_AS(scene_from_json("not json"), std::invalid_argument);
    CHECK_THROWS_AS(scene_from_json("{}"), std::invalid_argument);
    CHECK_THROWS_AS(scene_from_json(R"({"template":{"kind":"regular","n":6},"alpha":1.5,)"
                                    R"("homothets":[]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(scene_from_json(R"({"template":{"kind":"regular","n":6},"alpha":0.5,)"
                                    R"("homothets":[{"id":"a","scale":-1,"translate":[0,0]}]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(scene_from_json(R"({"template":{"kind":"regular","n":6},"alpha":0.5,)"
                                    R"("homothets":[{"id":"a","scale":1,"translate":[0,0]},)"
                                    R"({"id":"a","scale":1,"translate":[3,0]}]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(scene_from_json(R"({"template":{"kind":"weird"},"alpha":0.5,)"
                                    R"("homothets":[]})"),
                    std::invalid_argument);
}

TEST_CASE("scene parsing accepts fields in any order") {
    Scene s = scene_from_json(R"({
        "homothets": [{"translate": [2, 1], "id": "z", "scale": 0.5}],
        "alpha": 0.75,
        "template": {"rotation": 0.0, "n": 5, "kind": "regular"}
    })");
    CHECK(s.coll.tpl.n == 5);
    CHECK(s.coll.alpha == 0.75);
    CHECK(s.coll.shapes[0].id == "z");
    CHECK(s.coll.shapes[0].translate.y == 1.0);
}

TEST_CASE("edge list round trip") {
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(3, 4);
    std::string text = graph_to_edge_list(g);
    Graph g2 = graph_from_edge_list(text);
    CHECK(g2.n == 5);
    CHECK(g2.edge_count() == 3);
    CHECK(g2.has_edge(0, 1));
    CHECK(g2.has_edge(3, 4));
    // isolated trailing vertex survives through the header
    Graph g3(4);
    g3.add_edge(0, 1);
    CHECK(graph_from_edge_list(graph_to_edge_list(g3)).n == 4);
    CHECK_THROWS_AS(graph_from_edge_list("0 x"), std::invalid_argument);
}

TEST_CASE("file io and digests") {
    std::string path = "io_test_tmp.json";
    Scene s = sample_scene(true);
    std::string payload = scene_to_json(s);
    save_text(path, payload);
    CHECK(load_text(path) == payload);
    std::string d1 = file_digest_hex(path);
    CHECK(d1.size() == 16);
    save_text(path, payload + " ");
    CHECK(file_digest_hex(path) != d1);
    std::remove(path.c_str());
    CHECK_THROWS_AS(load_text("definitely_missing_file.json"), std::runtime_error);

    CHECK(fnv1a64("", 0) == 1469598103934665603ull);
    std::string abc = "abc";
    CHECK(fnv1a64(abc.data(), abc.size()) == fnv1a64("abc", 3));
    CHECK(fnv1a64("abc", 3) != fnv1a64("abd", 3));
}

TEST_CASE("format_double survives round trips") {
    for (double v : {0.1, 1.0 / 3.0, 1e-300, 123456789.123456789, -0.0, 2.0}) {
        CHECK(std::stod(format_double(v)) == v);
    }
}

TEST_CASE("svg rendering produces well formed output") {
    Scene s = sample_scene(false);
    RenderOptions opt;
    opt.show_crossings = true;
    opt.show_free_area = true;
    std::string svg = render_scene_svg(s, opt);
    CHECK(svg.find("<svg") == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find("<polygon") != std::string::npos);
    CHECK(svg.find("min free") != std::string::npos);

    std::string csv = threshold_csv(3, 12);
    CHECK(csv.find("n,s,m_star") == 0);
    CHECK(csv.find("6,0.5,") != std::string::npos);
    CHECK_THROWS_AS(threshold_csv(10, 9), std::invalid_argument);

    std::string plot = threshold_svg(3, 30);
    CHECK(plot.find("<svg") == 0);
    CHECK(plot.find("polyline") != std::string::npos);
    CHECK_THROWS_AS(threshold_svg(5, 4), std::invalid_argument);
    CHECK_THROWS_AS(threshold_svg(2, 10), std::invalid_argument);
}
