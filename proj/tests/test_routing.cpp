#include "qrwa/routing.hpp"

#include "qrwa/oracle.hpp"

#include "doctest.h"
#include "test_graphs.hpp"

#include <random>

using namespace qrwa;

namespace {

Topology triangle() {
    return Topology(3, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 0, 1.0}}, 4, 2);
}

}  // namespace

TEST_CASE("k shortest paths on the default network, 0 -> 3") {
    const Topology topo = Topology::make_default();
    const auto paths = k_shortest_paths(topo, 0, 3, 3);
    REQUIRE(paths.size() == 3);
    CHECK(paths[0].links == std::vector<LinkId>{12});  // the chord
    CHECK(paths[0].length_km == doctest::Approx(10.0));
    CHECK(paths[1].links == std::vector<LinkId>{0, 2, 4});  // ring arc via 1, 2
    CHECK(paths[1].length_km == doctest::Approx(30.0));
    CHECK(paths[2].links == std::vector<LinkId>{11, 9, 7});  // ring arc via 5, 4
    CHECK(paths[2].length_km == doctest::Approx(30.0));
}

TEST_CASE("k larger than the number of routes") {
    const Topology topo = Topology::parse("nodes 2\nwavelengths 2 1\nlink 0 1 5\n");
    const auto paths = k_shortest_paths(topo, 0, 1, 5);
    REQUIRE(paths.size() == 1);
    CHECK(paths[0].length_km == doctest::Approx(5.0));
}

TEST_CASE("disconnected pair yields an empty list") {
    const Topology topo = Topology(4, {{0, 1, 1.0}, {2, 3, 1.0}}, 4, 2);
    CHECK(k_shortest_paths(topo, 0, 2, 3).empty());
    CHECK(all_simple_paths(topo, 0, 2, 16).empty());
}

TEST_CASE("endpoint validation") {
    const Topology topo = Topology::make_default();
    CHECK_THROWS_AS(k_shortest_paths(topo, 0, 0, 3), std::invalid_argument);
    CHECK_THROWS_AS(k_shortest_paths(topo, 0, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(all_simple_paths(topo, 0, 6, 4), std::invalid_argument);
    CHECK_THROWS_AS(all_simple_paths(topo, 0, 3, 0), std::invalid_argument);
}

TEST_CASE("all simple paths on a triangle") {
    const auto paths = all_simple_paths(triangle(), 0, 1, 16);
    REQUIRE(paths.size() == 2);
    CHECK(paths[0].length_km == doctest::Approx(1.0));
    CHECK(paths[0].links.size() == 1);
    CHECK(paths[1].length_km == doctest::Approx(2.0));
    CHECK(paths[1].links.size() == 2);
}

TEST_CASE("cap truncates to the shortest routes") {
    const Topology topo = Topology::make_default();
    const auto all = all_simple_paths(topo, 0, 3, 1 << 20);
    CHECK(all.size() == oracle::brute_force_paths(topo, 0, 3).size());
    const auto capped = all_simple_paths(topo, 0, 3, 1);
    REQUIRE(capped.size() == 1);
    CHECK(capped[0] == all[0]);
}

TEST_CASE("shared quantum link counting") {
    const Topology topo = Topology::make_default();
    const Path chord{{12}, 10.0};      // 0 -> 3
    const Path chord_rev{{13}, 10.0};  // 3 -> 0
    const Path arc{{0, 2, 4}, 30.0};   // 0 -> 1 -> 2 -> 3

    CHECK(shared_quantum_links(topo, chord, {}) == 0);

    const std::vector<Lightpath> on_chord{
        testutil::make_lightpath(0, LightpathKind::QKCh, chord, 0, 0, 3)};
    CHECK(shared_quantum_links(topo, chord, on_chord) == 1);
    CHECK(shared_quantum_links(topo, chord_rev, on_chord) == 1);  // fiber-level
    CHECK(shared_quantum_links(topo, arc, on_chord) == 0);

    const std::vector<Lightpath> on_arc{
        testutil::make_lightpath(1, LightpathKind::QKCh, arc, 0, 0, 3)};
    CHECK(shared_quantum_links(topo, arc, on_arc) == 3);

    // classical entries are ignored
    const std::vector<Lightpath> classical_only{
        testutil::make_lightpath(2, LightpathKind::TDCh, chord, 0, 0, 3)};
    CHECK(shared_quantum_links(topo, chord, classical_only) == 0);
}

TEST_CASE("shared length between classical and quantum routes") {
    const Topology line = testutil::line_topology(4);  // 0-1-2-3-4, 10 km hops
    const auto fwd = all_simple_paths(line, 0, 4, 4);
    REQUIRE(fwd.size() == 1);
    const Path whole = fwd[0];

    SUBCASE("disjoint routes share nothing") {
        const Path first_hop{{0}, 10.0};
        const Path last_hop{{6}, 10.0};
        CHECK(shared_length_km(line, first_hop, last_hop) == doctest::Approx(0.0));
    }
    SUBCASE("identical 4-hop routes share 40 km") {
        CHECK(shared_length_km(line, whole, whole) == doctest::Approx(40.0));
    }
    SUBCASE("counter-propagating 2-hop routes share 20 km") {
        const Path fwd2{{0, 2}, 20.0};              // 0 -> 1 -> 2
        const auto rev = all_simple_paths(line, 2, 0, 4);
        REQUIRE(rev.size() == 1);                   // 2 -> 1 -> 0
        CHECK(shared_length_km(line, rev[0], fwd2) == doctest::Approx(20.0));
    }
}

TEST_CASE("enumeration agrees with the brute-force oracle on random graphs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const Topology topo = testutil::random_connected_topology(rng);
        const auto n = static_cast<std::uint64_t>(topo.node_count());
        const NodeId s = static_cast<NodeId>(rng() % n);
        NodeId d = static_cast<NodeId>(rng() % (n - 1));
        if (d >= s) ++d;

        const auto expected = oracle::brute_force_paths(topo, s, d);
        const auto actual = all_simple_paths(topo, s, d, 1 << 20);
        REQUIRE(actual == expected);

        const int k = 1 + static_cast<int>(rng() % 6);
        const auto first_k = k_shortest_paths(topo, s, d, k);
        REQUIRE(first_k.size() == std::min(expected.size(), static_cast<std::size_t>(k)));
        for (std::size_t i = 0; i < first_k.size(); ++i) {
            CHECK(first_k[i] == expected[i]);
        }

        for (std::size_t i = 1; i < actual.size(); ++i) {
            CHECK(actual[i - 1].length_km <= actual[i].length_km);
            CHECK(!path_less(actual[i], actual[i - 1]));
        }
    }
}

TEST_CASE("overlap count is monotone in the established set") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const Topology topo = testutil::random_connected_topology(rng);
        const auto n = static_cast<std::uint64_t>(topo.node_count());
        const NodeId s = static_cast<NodeId>(rng() % n);
        NodeId d = static_cast<NodeId>(rng() % (n - 1));
        if (d >= s) ++d;
        const auto paths = all_simple_paths(topo, s, d, 64);
        if (paths.empty()) continue;
        const Path& probe = paths[rng() % paths.size()];

        std::vector<Lightpath> established;
        int last = shared_quantum_links(topo, probe, established);
        CHECK(last == 0);
        for (int grow = 0; grow < 6; ++grow) {
            const NodeId a = static_cast<NodeId>(rng() % n);
            NodeId b = static_cast<NodeId>(rng() % (n - 1));
            if (b >= a) ++b;
            const auto candidates = all_simple_paths(topo, a, b, 8);
            if (candidates.empty()) continue;
            established.push_back(testutil::make_lightpath(
                grow, LightpathKind::QKCh, candidates[rng() % candidates.size()], 0, a, b));
            const int now = shared_quantum_links(topo, probe, established);
            CHECK(now >= last);
            CHECK(now <= probe.hops());
            last = now;
        }
    }
}

TEST_CASE("shared length is symmetric as a fiber intersection") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        const Topology topo = testutil::random_connected_topology(rng);
        const auto n = static_cast<std::uint64_t>(topo.node_count());
        const NodeId s = static_cast<NodeId>(rng() % n);
        NodeId d = static_cast<NodeId>(rng() % (n - 1));
        if (d >= s) ++d;
        const auto paths = all_simple_paths(topo, s, d, 32);
        if (paths.size() < 2) continue;
        const Path& a = paths[rng() % paths.size()];
        const Path& b = paths[rng() % paths.size()];
        CHECK(shared_length_km(topo, a, b) == doctest::Approx(shared_length_km(topo, b, a)));
    }
}
