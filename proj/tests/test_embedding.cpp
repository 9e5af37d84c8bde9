#include <doctest.h>

#include <map>
#include <set>
#include <sstream>

#include "polyemb/constructions.hpp"
#include "polyemb/embedding.hpp"
#include "polyemb/reference.hpp"
#include "test_util.hpp"

using namespace polyemb;

namespace {

RotationSystem tetrahedron() {
    // 0:(1,2,3) 1:(0,3,2) 2:(0,1,3) 3:(0,2,1)
    return RotationSystem{named_graph("k4"), {0, 1, 0, 1}};
}

RotationSystem ascending_k4() { return reference_rotation(named_graph("k4")); }

// Test-local face tracer working directly on neighbor lists.
std::multiset<int> face_lengths_oracle(const RotationSystem& r) {
    int n = r.graph.n;
    std::vector<std::array<int, 3>> rot(n);
    for (int v = 0; v < n; ++v) rot[v] = r.rotation(v);
    std::set<std::pair<int, int>> seen;
    std::multiset<int> lengths;
    for (int v = 0; v < n; ++v)
        for (int s = 0; s < 3; ++s) {
            if (seen.count({v, rot[v][s]})) continue;
            int len = 0, a = v, b = rot[v][s];
            while (!seen.count({a, b})) {
                seen.insert({a, b});
                ++len;
                int i = 0;
                while (rot[b][i] != a) ++i;
                int c = rot[b][(i + 1) % 3];
                a = b;
                b = c;
            }
            lengths.insert(len);
        }
    return lengths;
}

std::multiset<int> face_lengths(const FaceSet& fs) {
    std::multiset<int> out;
    for (const auto& f : fs.faces) out.insert((int)f.darts.size());
    return out;
}

}  // namespace

TEST_CASE("tetrahedron embedding: 4 triangles, genus 0, polyhedral") {
    RotationSystem r = tetrahedron();
    FaceSet fs = trace_faces(r);
    CHECK(fs.faces.size() == 4);
    CHECK(face_lengths(fs) == std::multiset<int>{3, 3, 3, 3});
    CHECK(fs.genus == 0);
    CHECK(genus(r) == 0);
    CHECK(is_polyhedral(r));
    CHECK(dual_is_simple(r));
    CHECK(!find_obstruction(r, VertexSet{}).has_value());
}

TEST_CASE("ascending-rotation K4: faces 4+8, genus 1, not polyhedral") {
    RotationSystem r = ascending_k4();
    FaceSet fs = trace_faces(r);
    CHECK(face_lengths(fs) == std::multiset<int>{4, 8});
    CHECK(face_lengths(fs) == face_lengths_oracle(r));
    CHECK(fs.genus == 1);
    CHECK(!is_polyhedral(r));
    CHECK(!dual_is_simple(r));
}

TEST_CASE("obstruction choice on the ascending K4") {
    RotationSystem r = ascending_k4();
    auto ob = find_obstruction(r, VertexSet{});
    REQUIRE(ob.has_value());
    CHECK(ob->kind == Obstruction::Kind::repeated_vertex);
    CHECK(ob->face_a == 1);  // the 8-face
    CHECK(ob->vertices == std::vector<int>{0, 1, 2});

    VertexSet all;
    for (int v = 0; v < 4; ++v) all.add(v);
    auto ob2 = find_obstruction(r, all);
    REQUIRE(ob2.has_value());
    CHECK(ob2->vertex_set.subset_of(all));  // backtrack signal

    auto first = first_obstruction(r);
    REQUIRE(first.has_value());
    CHECK(first->kind == Obstruction::Kind::repeated_vertex);
}

TEST_CASE("face partition properties on random rotation systems") {
    std::mt19937 rng(99);
    for (int rep = 0; rep < 300; ++rep) {
        int n = 4 + 2 * (int)(rng() % 7);
        CubicGraph g = testutil::random_cubic(n, rng);
        std::vector<std::uint8_t> flips(n);
        for (int v = 0; v < n; ++v) flips[v] = rng() & 1;
        RotationSystem r{g, flips};
        FaceSet fs = trace_faces(r);
        int total = 0;
        std::vector<int> seen(3 * n, 0);
        for (const auto& f : fs.faces) {
            total += (int)f.darts.size();
            for (int d : f.darts) ++seen[d];
            CHECK(f.darts.front() == *std::min_element(f.darts.begin(), f.darts.end()));
        }
        CHECK(total == 3 * n);
        CHECK(std::count(seen.begin(), seen.end(), 1) == 3 * n);
        // Euler consistency
        int chi = n - 3 * n / 2 + (int)fs.faces.size();
        CHECK((2 - chi) % 2 == 0);
        CHECK(fs.genus >= 0);
        CHECK(face_lengths(fs) == face_lengths_oracle(r));
    }
}

TEST_CASE("polyhedrality equals dual simplicity on all systems up to n=10") {
    for (int n = 4; n <= 10; n += 2) {
        for (const CubicGraph& g : gen_cubic(n)) {
            for (unsigned long long mask = 0; mask < (1ULL << (n - 1)); ++mask) {
                std::vector<std::uint8_t> flips(n, 0);
                for (int v = 1; v < n; ++v) flips[v] = (mask >> (v - 1)) & 1;
                RotationSystem r{g, flips};
                CHECK(is_polyhedral(r) == dual_is_simple(r));
                CHECK(is_polyhedral(r) == !find_obstruction(r, VertexSet{}).has_value());
            }
        }
    }
}

TEST_CASE("mirror is an involution preserving genus and polyhedrality") {
    std::mt19937 rng(4242);
    for (int rep = 0; rep < 100; ++rep) {
        int n = 4 + 2 * (int)(rng() % 6);
        CubicGraph g = testutil::random_cubic(n, rng);
        std::vector<std::uint8_t> flips(n);
        for (int v = 0; v < n; ++v) flips[v] = rng() & 1;
        RotationSystem r{g, flips};
        RotationSystem m = mirror(r);
        CHECK(same_embedding(mirror(m), r));
        CHECK(genus(m) == genus(r));
        CHECK(is_polyhedral(m) == is_polyhedral(r));
    }
    CHECK(genus(mirror(tetrahedron())) == 0);
}

TEST_CASE("petrie_switch basics") {
    RotationSystem r = tetrahedron();
    CHECK(same_embedding(petrie_switch(r, VertexSet{}), r));
    VertexSet all;
    for (int v = 0; v < 4; ++v) all.add(v);
    CHECK(same_embedding(petrie_switch(r, all), mirror(r)));
    std::mt19937 rng(7);
    for (int rep = 0; rep < 50; ++rep) {
        CubicGraph g = testutil::random_cubic(10, rng);
        RotationSystem s = reference_rotation(g);
        VertexSet set;
        for (int v = 0; v < 10; ++v)
            if (rng() & 1) set.add(v);
        CHECK(same_embedding(petrie_switch(petrie_switch(s, set), set), s));
    }
}

TEST_CASE("rot format round trip and layout") {
    RotationSystem r = tetrahedron();
    std::string text = write_rot_string(r);
    CHECK(text == "n 4 genus 0\n0: 1 2 3\n1: 0 3 2\n2: 0 1 3\n3: 0 2 1\n");
    std::istringstream in(text);
    auto blocks = parse_rot(in);
    REQUIRE(blocks.size() == 1);
    CHECK(same_embedding(blocks[0], r));

    // multiple blocks, comments, headers re-verified
    std::istringstream multi("# tetrahedron and its mirror\n" + write_rot_string(r) + "\n" +
                             write_rot_string(mirror(r)));
    auto both = parse_rot(multi);
    REQUIRE(both.size() == 2);
    CHECK(same_embedding(both[0], r));
    CHECK(same_embedding(both[1], mirror(r)));
}

TEST_CASE("rot round trips on every brute-force embedding up to n=8") {
    for (int n = 4; n <= 8; n += 2)
        for (const CubicGraph& g : gen_cubic(n))
            for (const RotationSystem& r : brute_force_polyhedral(g)) {
                std::istringstream in(write_rot_string(r));
                auto back = parse_rot(in);
                REQUIRE(back.size() == 1);
                CHECK(same_embedding(back[0], r));
            }
}

TEST_CASE("rot parse errors") {
    auto parse_str = [](const std::string& s) {
        std::istringstream in(s);
        return parse_rot(in);
    };
    CHECK_THROWS_AS(parse_str("n 4 genus 0\n0: 1 2\n1: 0 3 2\n2: 0 1 3\n3: 0 2 1\n"), RotError);
    CHECK_THROWS_AS(parse_str("n 4 genus 0\n0: 1 2 3\n1: 0 3 2\n2: 0 1 3\n9: 0 2 1\n"), RotError);
    CHECK_THROWS_AS(parse_str("n 4 genus 1\n0: 1 2 3\n1: 0 3 2\n2: 0 1 3\n3: 0 2 1\n"), RotError);
    CHECK_THROWS_AS(parse_str("n 4 genus 0\n0: 1 2 3\n1: 0 3 2\n2: 0 1 3\n"), RotError);
    CHECK_THROWS_AS(parse_str("n 4 genus 0\n0: 1 2 3\n0: 1 3 2\n1: 0 3 2\n2: 0 1 3\n3: 0 2 1\n"),
                    RotError);
    // neighbor set asymmetric
    CHECK_THROWS_AS(parse_str("n 4 genus 0\n0: 1 2 3\n1: 0 3 2\n2: 0 1 3\n3: 1 2 0\n"), RotError);
    std::istringstream empty("");
    CHECK(parse_rot(empty).empty());
}

TEST_CASE("small-cycle and hexagon validators accept known polyhedral embeddings") {
    RotationSystem tet = tetrahedron();
    SmallCycleSet k4cycles = small_cycles(tet.graph);
    CHECK(small_cycles_facial(tet, k4cycles));
    CHECK(hexagon_rule_holds(tet, k4cycles));

    HexTorus ht = hex_torus(4);
    SmallCycleSet hcycles = small_cycles(ht.rs.graph);
    CHECK(small_cycles_facial(ht.rs, hcycles));
    CHECK(hexagon_rule_holds(ht.rs, hcycles));
    // The Petrie switch is polyhedral but its hexagons are non-facial, so
    // the 3-3 rule is what admits it.
    RotationSystem petrie = petrie_switch(ht.rs, ht.part_zero);
    CHECK(hexagon_rule_holds(petrie, hcycles));
}
