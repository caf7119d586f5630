#include <set>

#include "doctest.h"
#include "mp/catalog.hpp"
#include "mp/coloring.hpp"
#include "mp/multipole.hpp"
#include "oracles.hpp"

using namespace mp;

TEST_CASE("singleton classes") {
    auto v = generate({3, 1, false, false, {}});
    REQUIRE(v.size() == 1);
    CHECK(oracle::isomorphic(v[0].multipole, make_vertex_pole()));

    auto e = generate({2, 0, false, false, {}});
    REQUIRE(e.size() == 1);
    CHECK(oracle::isomorphic(e[0].multipole, make_free_edge()));
}

TEST_CASE("counts match the labeled-enumeration oracle") {
    struct Case {
        int m, n;
        bool connected, colorable;
    };
    for (const Case& c : {Case{4, 2, false, false}, Case{4, 2, true, false},
                          Case{3, 3, false, false}, Case{5, 3, false, true},
                          Case{4, 4, false, false}, Case{2, 2, false, false}}) {
        CAPTURE(c.m);
        CAPTURE(c.n);
        auto got = generate({c.m, c.n, c.connected, c.colorable, {}});
        CHECK(static_cast<int>(got.size()) ==
              oracle::catalog_count(c.m, c.n, c.connected, c.colorable));
    }
}

TEST_CASE("m=4 n=2 contents") {
    auto entries = generate({4, 2, false, false, {}});
    bool has_tree = false, has_digon_plus_e = false;
    Multipole digon_e = disjoint_union(join(make_tree({0}), 0, 2), make_free_edge());
    for (const auto& e : entries) {
        if (oracle::isomorphic(e.multipole, make_tree({0}))) has_tree = true;
        if (oracle::isomorphic(e.multipole, digon_e)) has_digon_plus_e = true;
    }
    CHECK(has_tree);
    CHECK(has_digon_plus_e);
}

TEST_CASE("generate_up_to") {
    auto a = generate_up_to(4, 0);
    REQUIRE(a.size() == 1);
    CHECK(oracle::isomorphic(a[0].multipole, make_minimal(4)));

    auto b = generate_up_to(5, 1);
    REQUIRE(b.size() == 1);
    CHECK(oracle::isomorphic(b[0].multipole, make_minimal(5)));

    int lib = 0;
    for (int n = 1; n <= 3; n += 2)
        lib += oracle::catalog_count(5, n, false, true);
    CHECK(static_cast<int>(generate_up_to(5, 3, false, true).size()) == lib);
}

TEST_CASE("entries are pairwise non-isomorphic and valid") {
    auto entries = generate_up_to(5, 5);
    for (size_t i = 0; i < entries.size(); ++i) {
        const Multipole& m = entries[i].multipole;
        CHECK(validate(m).empty());
        int c = components(m).component_count;
        CHECK(m.n() >= m.m() - 2 * c);
        CHECK((m.n() == m.m() - 2 * c) == is_forest(m));
        for (size_t j = i + 1; j < entries.size(); ++j)
            CHECK(!oracle::isomorphic(m, entries[j].multipole));
    }
}

TEST_CASE("random multipoles land in the catalog") {
    auto entries = generate({5, 3, false, false, {}});
    std::set<std::string> certs;
    for (const auto& e : entries) certs.insert(e.certificate);
    for (int trial = 0; trial < 500; ++trial) {
        Multipole r = random_multipole(5, 3, 777 + trial);
        CHECK(validate(r).empty());
        CHECK(certs.count(canonical_certificate(r, CertMode::IgnoreSemiedgeLabels)) == 1);
    }
}

TEST_CASE("determinism across worker counts") {
    auto one = generate_up_to(5, 5, false, false, 1);
    auto four = generate_up_to(5, 5, false, false, 4);
    REQUIRE(one.size() == four.size());
    for (size_t i = 0; i < one.size(); ++i) {
        CHECK(one[i].certificate == four[i].certificate);
        CHECK(one[i].multipole == four[i].multipole);
    }
}
