#include "doctest.h"
#include "mp/catalog.hpp"
#include "mp/coloring.hpp"
#include "mp/mpole_io.hpp"
#include "mp/multipole.hpp"

using namespace mp;

TEST_CASE("parse examples") {
    Multipole v = parse_mpole_text("vertices 1\nsemi 0\nsemi 0\nsemi 0\n");
    CHECK(v == make_vertex_pole());

    Multipole min4 = parse_mpole_text("vertices 0\nfree\nfree\n");
    CHECK(min4 == make_minimal(4));

    CHECK_THROWS_AS(parse_mpole_text("vertices 1\nsemi 0\nsemi 0\n"), ParseError);
    CHECK_THROWS_AS(parse_mpole_text("vertices 1\nedge 0 0\nsemi 0\n"), ParseError);
    CHECK_THROWS_AS(parse_mpole_text("semi 0\n"), ParseError);
    CHECK_THROWS_AS(parse_mpole_text("vertices 1\nbogus\n"), ParseError);
}

TEST_CASE("comments and line numbers") {
    Multipole v = parse_mpole_text("# a vertex pole\nvertices 1\nsemi 0 # one\nsemi 0\nsemi 0\n");
    CHECK(v.m() == 3);
    try {
        parse_mpole_text("vertices 1\nsemi 0\nedge 0 7\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }
}

TEST_CASE("roundtrip is idempotent") {
    for (const auto& entry : generate_up_to(5, 5)) {
        std::string once = write_mpole_text(entry.multipole);
        Multipole back = parse_mpole_text(once);
        std::string twice = write_mpole_text(back);
        CHECK(once == twice);
        CHECK(states(back) == states(entry.multipole));
    }
}

TEST_CASE("pair tags express non-adjacent free halves") {
    // free-edge halves separated by an attached semiedge in the ordering
    Multipole m;
    m.vertex_count = 1;
    m.semiedges = {Semiedge::free_paired(2), Semiedge::attached(0),
                   Semiedge::free_paired(0), Semiedge::attached(0),
                   Semiedge::attached(0)};
    REQUIRE(validate(m).empty());
    std::string text = write_mpole_text(m);
    CHECK(parse_mpole_text(text) == m);
}

TEST_CASE("stateset serialization") {
    StateSet set = states(make_minimal(4));
    CHECK(stateset_text(set) == "1111\n1122\n");
    CHECK(stateset_json(set) ==
          R"({"count":2,"m":4,"states":["1111","1122"]})");
}
