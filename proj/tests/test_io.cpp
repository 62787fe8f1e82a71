#include <cstdio>
#include <filesystem>

#include "doctest.h"
#include "lemni/io.hpp"

using namespace lemni;

TEST_CASE("configuration json roundtrip, explicit roots") {
    RootConfiguration c({{Complex(0.25, -0.5), 2}, {Complex(-0.1, 0.0), 1}},
                        ConstraintTag::UnitDisc);
    RootConfiguration back = io::parse_config(io::config_to_json(c));
    CHECK(back.degree() == c.degree());
    CHECK(back.tag() == c.tag());
    REQUIRE(back.roots().size() == c.roots().size());
    for (size_t i = 0; i < c.roots().size(); ++i) {
        CHECK(back.roots()[i].location == c.roots()[i].location);  // shortest round-trip floats
        CHECK(back.roots()[i].multiplicity == c.roots()[i].multiplicity);
    }
}

TEST_CASE("configuration json, angles shorthand") {
    RootConfiguration c =
        io::parse_config(R"({"angles_over_2pi":[0.0,0.25,0.5],"mults":[1,2,1]})");
    CHECK(c.degree() == 4);
    CHECK(c.tag() == ConstraintTag::UnitCircle);
    CHECK(std::abs(c.roots()[1].location - Complex(0.0, 1.0)) < 1e-15);

    CHECK_THROWS(io::parse_config("not json"));
    CHECK_THROWS(io::parse_config(R"({"angles_over_2pi":[0.0],"mults":[1,2]})"));
}

TEST_CASE("measure json roundtrip") {
    CircleMeasure m;
    m.coeffs = {Complex(0.25, -0.125), Complex(0.0, 0.0625)};
    CircleMeasure back = io::parse_measure(io::measure_to_json(m));
    REQUIRE(back.coeffs.size() == m.coeffs.size());
    for (size_t i = 0; i < m.coeffs.size(); ++i) CHECK(back.coeffs[i] == m.coeffs[i]);
}

TEST_CASE("trace csv roundtrip") {
    std::vector<TraceRow> rows(2);
    rows[0] = {0, {0.0, 0.25, 0.75}, 1, 0, 1, 1.8325, 0.004};
    rows[1] = {1, {0.0, 0.5}, 1, 1, 0, 2.0001, 0.003};
    std::vector<TraceRow> back = io::parse_trace_csv(io::trace_csv(rows));
    REQUIRE(back.size() == 2);
    CHECK(back[0].candidate_id == 0);
    CHECK(back[0].angles_over_2pi == rows[0].angles_over_2pi);
    CHECK(back[0].q == 1);
    CHECK(back[0].r == 1);
    CHECK(back[1].area_mean == rows[1].area_mean);
    CHECK(back[1].area_std == rows[1].area_std);
}

TEST_CASE("search report json roundtrip") {
    SearchReport rep{RootConfiguration::roots_of_unity(3), AreaEstimate{1.778, 0.002, 4, 20000, 2.0, 7},
                     42, {{0.0, 1.0 / 3.0, 2.0 / 3.0}}, {}, 7};
    SearchReport back = io::parse_report(io::report_to_json(rep, "trace.csv"));
    CHECK(back.best.degree() == 3);
    CHECK(back.best_area.mean == rep.best_area.mean);
    CHECK(back.best_area.stddev == rep.best_area.stddev);
    CHECK(back.evaluated == 42);
    CHECK(back.seed == 7);
    REQUIRE(back.ties.size() == 1);
    CHECK(back.ties[0].size() == 3);
}

TEST_CASE("area csv schema") {
    io::AreaRow row{"erdos-3", "triangular", AreaEstimate{1.778, 0.002, 6, 100000, 2.0, 11}};
    std::string csv = io::area_csv({row});
    CHECK(csv.substr(0, csv.find('\n')) == "spec_id,kind,p,T,seed,radius,mean,stddev");
    CHECK(csv.find("erdos-3,triangular,100000,6,11,2,1.778,0.002") != std::string::npos);
}

TEST_CASE("fnv1a known vectors") {
    CHECK(io::fnv1a("") == 0xcbf29ce484222325ULL);
    CHECK(io::fnv1a("a") == 0xaf63dc4c8601ec8cULL);
    CHECK(io::fnv1a("foobar") == 0x85944171f73967e8ULL);
}

TEST_CASE("manifest and file io") {
    namespace fs = std::filesystem;
    fs::path tmp = fs::temp_directory_path() / "lemnikit_io_test.txt";
    io::write_file(tmp.string(), "hello\n");
    CHECK(io::read_file(tmp.string()) == "hello\n");
    fs::remove(tmp);
    CHECK_THROWS(io::read_file((tmp / "missing").string()));

    std::string manifest = io::manifest_json("lemnikit area --n 3", 9,
                                             {{"out.area.csv", io::fnv1a("data")}});
    CHECK(manifest.find("lemnikit area --n 3") != std::string::npos);
    CHECK(manifest.find("out.area.csv") != std::string::npos);
    CHECK(manifest.find("timestamp_unix_ms") != std::string::npos);
}
