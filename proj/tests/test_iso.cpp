#include <doctest.h>

#include <set>

#include "polyemb/constructions.hpp"
#include "polyemb/iso.hpp"
#include "polyemb/reference.hpp"
#include "polyemb/search.hpp"
#include "test_util.hpp"

using namespace polyemb;

namespace {

std::vector<int> random_perm(int n, std::mt19937& rng) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

CubicGraph relabel(const CubicGraph& g, const std::vector<int>& p) {
    std::vector<std::array<int, 3>> adj(g.n);
    for (int v = 0; v < g.n; ++v)
        for (int s = 0; s < 3; ++s) adj[p[v]][s] = p[g.adj[v][s]];
    return make_cubic_graph(g.n, std::move(adj));
}

RotationSystem relabel(const RotationSystem& r, const std::vector<int>& p) {
    RotationSystem out{relabel(r.graph, p), std::vector<std::uint8_t>(r.graph.n, 0)};
    for (int v = 0; v < r.graph.n; ++v) out.flips[p[v]] = r.flips[v];
    return out;
}

}  // namespace

TEST_CASE("embedded codes are invariant under relabeling") {
    std::mt19937 rng(31337);
    HexTorus ht = hex_torus(3);
    std::vector<RotationSystem> samples{ht.rs, mirror(ht.rs),
                                        RotationSystem{named_graph("k4"), {0, 1, 0, 1}}};
    for (const auto& hrot : enumerate_polyhedral(named_graph("heawood")).embeddings)
        samples.push_back(hrot);
    for (const auto& r : samples) {
        CanonicalCode base_m = canon_embedded(r, true);
        CanonicalCode base_o = canon_embedded(r, false);
        for (int rep = 0; rep < 10; ++rep) {
            RotationSystem rr = relabel(r, random_perm(r.graph.n, rng));
            CHECK(canon_embedded(rr, true) == base_m);
            CHECK(canon_embedded(rr, false) == base_o);
        }
        CHECK(canon_embedded(mirror(r), true) == base_m);
    }
}

TEST_CASE("oriented codes separate what mirror-inclusive codes merge") {
    std::mt19937 rng(5);
    int chiral = 0;
    for (int rep = 0; rep < 200; ++rep) {
        CubicGraph g = testutil::random_cubic(10, rng);
        std::vector<std::uint8_t> flips(10);
        for (auto& f : flips) f = rng() & 1;
        RotationSystem r{g, flips};
        CanonicalCode with_mirror = canon_embedded(r, true);
        CHECK(with_mirror == canon_embedded(mirror(r), true));
        if (canon_embedded(r, false) != canon_embedded(mirror(r), false)) ++chiral;
    }
    CHECK(chiral > 0);  // chirality exists and the oriented variant sees it
}

TEST_CASE("the 8 Heawood torus embeddings are one embedded-isomorphism class") {
    auto res = enumerate_polyhedral(named_graph("heawood"));
    REQUIRE(res.embeddings.size() == 8);
    std::set<CanonicalCode> codes;
    for (const auto& r : res.embeddings) codes.insert(canon_embedded(r, true));
    CHECK(codes.size() == 1);
}

TEST_CASE("abstract codes: invariance and separation") {
    std::mt19937 rng(2025);
    for (const char* name : {"k4", "prism", "k33", "petersen", "heawood"}) {
        CubicGraph g = named_graph(name);
        CanonicalCode base = canon_graph(g);
        for (int rep = 0; rep < 10; ++rep)
            CHECK(canon_graph(relabel(g, random_perm(g.n, rng))) == base);
    }
    CHECK(canon_graph(named_graph("k33")) != canon_graph(named_graph("prism")));

    // 19 isomorphism classes on 10 vertices keep 19 distinct codes.
    std::set<CanonicalCode> codes;
    for (const CubicGraph& g : gen_cubic(10)) codes.insert(canon_graph(g));
    CHECK(codes.size() == 19);
}

TEST_CASE("codes of random relabelings collapse to the class representative") {
    std::mt19937 rng(909);
    for (int n = 4; n <= 12; n += 2) {
        auto graphs = gen_cubic(n);
        std::set<CanonicalCode> codes;
        for (const auto& g : graphs) codes.insert(canon_graph(g));
        CHECK(codes.size() == graphs.size());
        for (int rep = 0; rep < 5; ++rep) {
            const CubicGraph& g = graphs[rng() % graphs.size()];
            CHECK(codes.count(canon_graph(relabel(g, random_perm(n, rng)))));
        }
    }
}

TEST_CASE("distinct embedded classes never exceed the embedding count") {
    for (const char* name : {"heawood", "prism", "k4"}) {
        auto res = enumerate_polyhedral(named_graph(name));
        std::set<CanonicalCode> codes;
        for (const auto& r : res.embeddings) codes.insert(canon_embedded(r, true));
        CHECK((long long)codes.size() <= res.summary.total);
    }
}

TEST_CASE("hex encoding of codes") {
    CHECK(to_hex(std::string("\x00\x0f\xab", 3)) == "000fab");
    CanonicalCode c = canon_graph(named_graph("k4"));
    std::string h = to_hex(c);
    CHECK(h.size() == 2 * c.size());
    CHECK(h.find_first_not_of("0123456789abcdef") == std::string::npos);
}
