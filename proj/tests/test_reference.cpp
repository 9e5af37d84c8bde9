#include <doctest.h>

#include <set>

#include "polyemb/constructions.hpp"
#include "polyemb/iso.hpp"
#include "polyemb/reference.hpp"
#include "polyemb/search.hpp"

using namespace polyemb;

TEST_CASE("brute force on the named graphs") {
    auto k4 = brute_force_polyhedral(named_graph("k4"));
    REQUIRE(k4.size() == 1);
    CHECK(genus(k4[0]) == 0);

    CHECK(brute_force_polyhedral(named_graph("k33")).empty());
    CHECK(brute_force_polyhedral(named_graph("petersen")).empty());

    auto hea = brute_force_polyhedral(named_graph("heawood"));
    CHECK(hea.size() == 8);
    for (const auto& r : hea) CHECK(genus(r) == 1);
}

TEST_CASE("brute force systems have vertex 0 at the reference rotation") {
    for (const auto& r : brute_force_polyhedral(named_graph("heawood"))) {
        CHECK(r.flips[0] == 0);
        CHECK(is_polyhedral(r));
        CHECK(dual_is_simple(r));
    }
}

TEST_CASE("minimum genus of the named graphs") {
    CHECK(min_genus(named_graph("k4")) == 0);
    CHECK(min_genus(named_graph("prism")) == 0);
    CHECK(min_genus(named_graph("k33")) == 1);
    CHECK(min_genus(named_graph("petersen")) == 1);
    CHECK(min_genus(named_graph("heawood")) == 1);
}

TEST_CASE("genus profiles") {
    CubicGraph pet = named_graph("petersen");
    GenusProfile prof = genus_profile(pet);
    CHECK(prof.total == 512);
    long long sum = 0;
    for (auto [g, c] : prof.counts) {
        CHECK(g >= 0);
        sum += c;
    }
    CHECK(sum == prof.total);
    CHECK(prof.min_genus == 1);
    // Petersen has no polyhedral embedding in any genus
    for (auto [g, c] : prof.polyhedral) CHECK(c == 0);

    GenusProfile hea = genus_profile(named_graph("heawood"));
    CHECK(hea.total == 8192);
    CHECK(hea.min_genus == 1);
    CHECK(hea.polyhedral.at(1) == 8);
    long long poly_total = 0;
    for (auto [g, c] : hea.polyhedral) poly_total += c;
    CHECK(poly_total == 8);
}

TEST_CASE("every polyhedral embedding sits at or above the minimum genus") {
    for (int n = 4; n <= 10; n += 2)
        for (const CubicGraph& g : gen_cubic(n)) {
            auto embs = brute_force_polyhedral(g);
            if (embs.empty()) continue;
            int mg = min_genus(g);
            int smallest = genus(embs[0]);
            for (const auto& r : embs) smallest = std::min(smallest, genus(r));
            CHECK(smallest >= mg);
            CHECK(smallest == mg);  // no not-min-genus embeddings at this size
        }
}

TEST_CASE("generator counts match the published census") {
    CHECK(gen_cubic(4).size() == 1);
    CHECK(gen_cubic(6).size() == 2);
    CHECK(gen_cubic(8).size() == 5);
    CHECK(gen_cubic(10).size() == 19);
    CHECK(gen_cubic(12).size() == 85);
    CHECK(gen_cubic(14).size() == 509);
}

TEST_CASE("generator output is isomorph-free, valid and deterministic") {
    auto a = gen_cubic(10);
    auto b = gen_cubic(10);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
    std::set<CanonicalCode> codes;
    for (const auto& g : a) {
        CHECK(g.n == 10);
        CHECK(connectivity_class(g) != Connectivity::disconnected);
        CHECK(codes.insert(canon_graph(g)).second);
    }
}

TEST_CASE("search equals brute force as flip sets on every graph up to n=12") {
    auto norm = [](const RotationSystem& r) {
        std::string s(r.flips.begin(), r.flips.end());
        if (s[0]) for (auto& c : s) c ^= 1;
        return s;
    };
    for (int n = 4; n <= 12; n += 2)
        for (const CubicGraph& g : gen_cubic(n)) {
            std::set<std::string> a, b;
            for (const auto& r : brute_force_polyhedral(g)) a.insert(norm(r));
            for (const auto& r : enumerate_polyhedral(g).embeddings) b.insert(norm(r));
            CHECK(a == b);
        }
}
