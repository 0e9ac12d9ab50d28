#include <doctest.h>

#include "hullforge/constructions.hpp"
#include "hullforge/eaqec.hpp"

using namespace hullforge;

TEST_CASE("css_from_hull on numeric inputs") {
    // Hermitian self-dual [6,3,4] over GF(4), h = 0
    auto [a, b] = css_from_hull(6, 3, 4, 4, 0, 2);
    CHECK(a == EaqecParams{6, 3, 4, 3, 2, false});
    CHECK(b == EaqecParams{6, 3, 4, 3, 2, false});
    // [10,5,6] over GF(9), h = 2
    auto [c, d] = css_from_hull(10, 5, 6, 6, 2, 3);
    CHECK(c == EaqecParams{10, 3, 6, 3, 3, false});
    CHECK(d == EaqecParams{10, 3, 6, 3, 3, false});
    // h = k: the first output carries no logical qudits
    auto [e, g] = css_from_hull(4, 2, 2, 2, 2, 2);
    CHECK(e.k == 0);
    CHECK(e.c == 0);  // n - k - h = 0
    CHECK(g.k == 0);
    CHECK(g.c == 0);
    CHECK_THROWS_AS(css_from_hull(4, 3, 2, 2, 2, 2), PreconditionFailed);  // h > n - k
    CHECK_THROWS_AS(css_from_hull(6, 2, 2, 2, 3, 2), PreconditionFailed);  // h > k
}

TEST_CASE("the two CSS outputs are swap-symmetric") {
    for (size_t n : {6u, 10u})
        for (size_t k = 1; k < n; ++k)
            for (size_t h = 0; h <= std::min(k, n - k); ++h) {
                auto [a, b] = css_from_hull(n, k, 3, 4, h, 5);
                auto [c, d] = css_from_hull(n, n - k, 4, 3, h, 5);
                CHECK(b == c);
                CHECK(a == d);
            }
}

TEST_CASE("css_from_hull from an actual code") {
    const Field& f2 = Field::get(2, 1);
    LinearCode c = LinearCode::from_generator(GFMatrix(f2, 1, 2, {1, 1}));  // [2,1,2], h = 1
    auto [a, b] = css_from_hull(c, Kind::euclidean);
    CHECK(a == EaqecParams{2, 0, 2, 0, 2, false});
    CHECK(b == EaqecParams{2, 0, 2, 0, 2, false});
    // Hermitian: base field order of the outputs is q0
    const Field& f4 = Field::get(2, 2);
    LinearCode sd = LinearCode::from_generator(GFMatrix(f4, 2, 4, {1, 1, 0, 0, 0, 0, 1, 1}));
    REQUIRE(sd.predicate(Predicate::hermitian_self_dual));
    auto [ha, hb] = css_from_hull(sd, Kind::hermitian);
    CHECK(ha == EaqecParams{4, 0, 2, 0, 2, false});
    CHECK(hb == EaqecParams{4, 0, 2, 0, 2, false});
}

TEST_CASE("quantum Singleton cap") {
    for (size_t h = 0; h <= 4; ++h) {
        EaqecParams p{8, 4 - h, 4, 4 - h, 2, false};
        CHECK(singleton_k_max(p) == 6 - h);
    }
    CHECK(singleton_k_max({6, 3, 4, 3, 2, false}) == 3);
    CHECK(singleton_k_max({4, 1, 4, 0, 2, false}) == std::nullopt);  // d > (n+2)/2
    CHECK(singleton_k_max({6, 0, 4, 0, 2, false}) == 0);
}

TEST_CASE("Singleton classification") {
    CHECK(classify({6, 3, 4, 3, 2, false}) == SingletonClass::mds);          // 11 = 11
    CHECK(classify({10, 5, 5, 5, 8, true}) == SingletonClass::almost_mds);   // 15 = 15
    CHECK(classify({6, 1, 2, 0, 2, false}) == SingletonClass::other);        // 5 < 6
    CHECK(classify({4, 4, 3, 0, 2, false}) == SingletonClass::bound_violated);
    CHECK(std::string(to_string(SingletonClass::mds)) == "MDS");
    CHECK(std::string(to_string(SingletonClass::almost_mds)) == "almostMDS");
    CHECK(std::string(to_string(SingletonClass::other)) == "other");
    CHECK(std::string(to_string(SingletonClass::bound_violated)) == "boundViolated");
}

TEST_CASE("table_emit symbolic format is byte-exact") {
    CHECK(table_emit({{6, 3, 4, 2}}, true) == "[[6, 3-h, 4, 3-h]]_2\tsingleton=3-h\n");
    CHECK(table_emit({{28, 14, 11, 5}}, true) == "[[28, 14-h, 11, 14-h]]_5\tsingleton=22-h\n");
    CHECK(table_emit({{8, 4, 4, 2}}, true) == "[[8, 4-h, 4, 4-h]]_2\tsingleton=6-h\n");
    CHECK(table_emit({}, true).empty());
    CHECK(table_emit({}, false).empty());
    CHECK_THROWS_AS(table_emit({{6, 2, 4, 2}}, true), PreconditionFailed);  // n != 2k
}

TEST_CASE("table_emit numeric mode walks every h") {
    std::string out = table_emit({{6, 3, 4, 2}}, false);
    CHECK(out ==
          "[[6, 3, 4, 3]]_2\tsingleton=3\n"
          "[[6, 2, 4, 2]]_2\tsingleton=2\n"
          "[[6, 1, 4, 1]]_2\tsingleton=1\n"
          "[[6, 0, 4, 0]]_2\tsingleton=0\n");
}

TEST_CASE("closed-form families") {
    EaqecParams c72 = family_params(Family::cor72, 7, 3, 1, 3);
    CHECK(c72 == EaqecParams{7, 3, 4, 2, 8, false});
    CHECK(classify(c72) == SingletonClass::mds);
    CHECK(family_params(Family::cor72, 7, 3, 3, 3).c == 0);  // h = k: no entanglement
    EaqecParams c73 = family_params(Family::cor73, 10, 0, 0, 3);
    CHECK(c73 == EaqecParams{10, 5, 5, 5, 8, true});
    CHECK(c73.d_is_lower_bound);
    CHECK(classify(c73) == SingletonClass::almost_mds);
    CHECK_THROWS_AS(family_params(Family::cor72, 8, 3, 0, 3), PreconditionFailed);   // n > q-1
    CHECK_THROWS_AS(family_params(Family::cor72, 7, 4, 0, 3), PreconditionFailed);   // k > n/2
    CHECK_THROWS_AS(family_params(Family::cor72, 3, 1, 2, 3), PreconditionFailed);   // h > k
    CHECK_THROWS_AS(family_params(Family::cor72, 3, 1, 0, 1), PreconditionFailed);   // q < 4
    CHECK_THROWS_AS(family_params(Family::cor73, 9, 0, 0, 3), PreconditionFailed);   // odd n
    CHECK_THROWS_AS(family_params(Family::cor73, 10, 0, 6, 3), PreconditionFailed);  // h > n/2
    CHECK_THROWS_AS(family_params(Family::cor73, 2, 0, 0, 3), PreconditionFailed);   // n < 4
}

TEST_CASE("cor72 parameters are reproduced end-to-end from constructed codes") {
    const Field& f = Field::get(2, 3);
    std::vector<uint32_t> pts = {1, 2, 3, 4, 5, 6, 7};
    for (size_t k = 1; k <= 3; ++k)
        for (size_t h = 0; h <= k; ++h) {
            HullCodeWitness r = grs_with_hull(f, pts, k, h);
            auto derived = css_from_hull(r.code, Kind::euclidean);
            CHECK(derived.second == family_params(Family::cor72, 7, k, h, 3));
            CHECK(classify(derived.second) == SingletonClass::mds);
            CHECK(classify(derived.first) != SingletonClass::bound_violated);
        }
}
