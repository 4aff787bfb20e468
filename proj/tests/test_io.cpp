#include <doctest.h>

#include "wrt/manifold_spec.hpp"
#include "wrt/plumbing.hpp"
#include "wrt/spectrum.hpp"
#include "wrt/sweep.hpp"

#include <json.hpp>

using namespace wrt;

TEST_CASE("plumbing json round-trip") {
    auto g = parse_manifold("seifert:-2;3/2,5/4");
    auto text = plumbing_to_json(g);
    auto back = plumbing_from_json(text);
    REQUIRE(back.vertices.size() == g.vertices.size());
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        CHECK(back.vertices[i].id == g.vertices[i].id);
        CHECK(back.vertices[i].framing == g.vertices[i].framing);
    }
    CHECK(back.edges == g.edges);

    CHECK_THROWS(plumbing_from_json("{\"vertices\":[{\"id\":0,\"framing\":1},"
                                    "{\"id\":0,\"framing\":2}],\"edges\":[]}")); // dup id
}

TEST_CASE("sweep csv round-trip") {
    KSweep s = k_sweep(Family::su2, parse_manifold("lens:3,1"), 10, 30, SweepNorm::raw);
    auto text = sweep_to_csv(s, 17);
    KSweep back = sweep_from_csv(text);
    REQUIRE(back.k_values == s.k_values);
    for (std::size_t i = 0; i < s.values.size(); ++i) {
        // 17 significant digits round-trip doubles exactly
        CHECK(back.values[i].real() == s.values[i].real());
        CHECK(back.values[i].imag() == s.values[i].imag());
    }
    CHECK_THROWS(sweep_from_csv("not a header\n1,2,3\n"));
}

TEST_CASE("spectrum json shape") {
    KSweep s = k_sweep(Family::su2, parse_manifold("lens:2,1"), 20, 84, SweepNorm::divided_by_s3);
    auto ps = phase_spectrum(s, 0.05, 8);
    auto j = nlohmann::json::parse(spectrum_to_json(ps));
    CHECK(j.contains("peaks"));
    CHECK(j["window"][0] == 20);
    CHECK(j["window"][1] == 84);
    REQUIRE(!j["peaks"].empty());
    bool half = false;
    for (const auto& p : j["peaks"])
        if (p["loc"] == "1/2") half = true;
    CHECK(half); // the RP^3 phase snaps to the rational 1/2
}

TEST_CASE("manifold shorthand grammar") {
    CHECK(parse_manifold("s3").vertices.empty());
    CHECK(parse_manifold("s1xs2").vertices.size() == 1);
    CHECK(parse_manifold("lens:7,3").vertices.size() ==
          negative_continued_fraction(7, 3).size());
    CHECK(parse_manifold("poincare").vertices.size() == 8);
    CHECK(parse_manifold("sigma235").vertices.size() == 4);
    CHECK_THROWS(parse_manifold("bogus"));
    CHECK_THROWS(parse_manifold("lens:4,2"));
    CHECK_THROWS(parse_manifold("@/nonexistent/file.json"));
}

TEST_CASE("builtin manifold library covers the standard examples") {
    auto j = nlohmann::json::parse(builtin_manifolds_json());
    for (const char* name : {"s3", "s1xs2", "lens_2_1", "lens_5_2", "poincare", "sigma235_star"})
        CHECK(j.contains(name));
    // each entry re-parses as a valid plumbing graph
    for (const auto& [name, body] : j.items()) {
        auto g = plumbing_from_json(body.dump());
        g.validate();
    }
}
