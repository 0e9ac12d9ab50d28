#include <doctest.h>

#include "hullforge/code.hpp"
#include "hullforge/constructions.hpp"

using namespace hullforge;

namespace {

uint64_t lcg(uint64_t& s) { return s = s * 6364136223846793005ULL + 1442695040888963407ULL; }

LinearCode random_code(const Field& f, size_t k, size_t n, uint64_t& s) {
    GFMatrix g(f, k, n);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < n; ++j) g.set(i, j, static_cast<uint32_t>(lcg(s) >> 33) % f.q());
    return LinearCode::from_generator(g);
}

LinearCode rep2(const Field& f) {  // the [2,1] code {(x, x)}
    return LinearCode::from_generator(GFMatrix(f, 1, 2, {1, 1}));
}

}  // namespace

TEST_CASE("from_generator canonicalizes and drops dependent rows") {
    const Field& f = Field::get(2, 1);
    LinearCode dup = LinearCode::from_generator(GFMatrix(f, 2, 2, {1, 1, 1, 1}));
    CHECK(dup.k() == 1);
    CHECK(dup == rep2(f));
    CHECK(LinearCode::full_space(f, 3).k() == 3);
    CHECK(LinearCode::zero_code(f, 3).k() == 0);
    CHECK(LinearCode::full_space(f, 3).generator() == GFMatrix::identity(f, 3));
}

TEST_CASE("duals of the extreme codes") {
    const Field& f = Field::get(3, 1);
    CHECK(LinearCode::full_space(f, 4).dual() == LinearCode::zero_code(f, 4));
    CHECK(LinearCode::zero_code(f, 4).dual() == LinearCode::full_space(f, 4));
}

TEST_CASE("dual of the [3,1] all-ones code over GF(4)") {
    const Field& f = Field::get(2, 2);
    LinearCode c = LinearCode::from_generator(GFMatrix(f, 1, 3, {1, 1, 1}));
    LinearCode d = c.dual();
    CHECK(d.k() == 2);
    CHECK(c.dual_distance() == 2);
    CHECK(c.hull_dim(Kind::euclidean) == 0);  // 1+1+1 = 1 != 0 in GF(4)
    CHECK(c.predicate(Predicate::lcd));
    CHECK(c.hull_dim(Kind::hermitian) == 0);
    CHECK(c.predicate(Predicate::hermitian_lcd));
}

TEST_CASE("double dual is the identity (both kinds)") {
    uint64_t s = 5;
    for (const Field* fp : {&Field::get(2, 2), &Field::get(3, 1), &Field::get(3, 2)}) {
        const Field& f = *fp;
        for (int rep = 0; rep < 15; ++rep) {
            LinearCode c = random_code(f, 2, 5, s);
            CHECK(c.dual().dual() == c);
            CHECK(c.dual().k() == 5 - c.k());
            if (f.has_hermitian()) CHECK(c.hermitian_dual().hermitian_dual() == c);
        }
    }
}

TEST_CASE("hull of the binary repetition code of length 2") {
    const Field& f = Field::get(2, 1);
    LinearCode c = rep2(f);
    auto [h, dim] = c.hull(Kind::euclidean);
    CHECK(dim == 1);
    CHECK(h == c);  // self-dual
    CHECK(c.predicate(Predicate::self_dual));
    CHECK(c.predicate(Predicate::self_orthogonal));
    CHECK(!c.predicate(Predicate::lcd));
}

TEST_CASE("hull of the [2,1] code over GF(3) is trivial") {
    const Field& f = Field::get(3, 1);
    LinearCode c = rep2(f);  // 1 + 1 = 2 != 0
    CHECK(c.hull_dim(Kind::euclidean) == 0);
    CHECK(c.predicate(Predicate::lcd));
    CHECK(!c.predicate(Predicate::self_orthogonal));
}

TEST_CASE("hull dimension agrees with a brute-force codeword intersection") {
    uint64_t s = 31;
    for (const Field* fp : {&Field::get(2, 1), &Field::get(3, 1), &Field::get(2, 2)}) {
        const Field& f = *fp;
        for (int rep = 0; rep < 25; ++rep) {
            LinearCode c = random_code(f, 2, 4, s);
            LinearCode d = c.dual();
            uint64_t in_both = 0;
            c.for_each_codeword([&](const std::vector<uint32_t>& w, const std::vector<uint32_t>&) {
                if (d.contains_word(w)) ++in_both;
                return true;
            });
            uint64_t expect = 1;
            for (size_t i = 0; i < c.hull_dim(Kind::euclidean); ++i) expect *= f.q();
            CHECK(in_both == expect);
        }
    }
}

TEST_CASE("distance by enumeration") {
    const Field& f5 = Field::get(5, 1);
    CHECK(rs(f5, {0, 1, 2, 3}, 2).distance() == 3);  // MDS [4,2,3]
    const Field& f2 = Field::get(2, 1);
    LinearCode repn = LinearCode::from_generator(GFMatrix(f2, 1, 5, {1, 1, 1, 1, 1}));
    CHECK(repn.distance() == 5);
    CHECK(LinearCode::zero_code(f2, 5).distance() == 0);
    CHECK(LinearCode::full_space(f2, 5).distance() == 1);
    CHECK(repn.dual_distance() == 2);
}

TEST_CASE("singleton bound holds on random codes") {
    uint64_t s = 77;
    const Field& f = Field::get(2, 2);
    for (int rep = 0; rep < 20; ++rep) {
        LinearCode c = random_code(f, 3, 6, s);
        if (c.k() == 0) continue;
        CHECK(c.distance() <= c.n() - c.k() + 1);
    }
}

TEST_CASE("weight distribution of a direct sum of two repetition blocks") {
    const Field& f = Field::get(2, 1);
    LinearCode c = LinearCode::from_generator(GFMatrix(f, 2, 4, {1, 1, 0, 0, 0, 0, 1, 1}));
    CHECK(c.weight_distribution().counts == std::vector<uint64_t>{1, 0, 2, 0, 1});
    CHECK(rep2(f).weight_distribution().counts == std::vector<uint64_t>{1, 0, 1});
}

TEST_CASE("weight distribution sums to q^k and is scaling/permutation invariant") {
    uint64_t s = 13;
    const Field& f = Field::get(2, 2);
    for (int rep = 0; rep < 10; ++rep) {
        LinearCode c = random_code(f, 2, 4, s);
        auto w = c.weight_distribution();
        uint64_t total = 0;
        for (uint64_t a : w.counts) total += a;
        uint64_t expect = 1;
        for (size_t i = 0; i < c.k(); ++i) expect *= f.q();
        CHECK(total == expect);
        CHECK(c.scale({2, 3, 1, 2}).weight_distribution().counts == w.counts);
        LinearCode perm = LinearCode::from_generator(c.generator().permute_cols({3, 1, 0, 2}));
        CHECK(perm.weight_distribution().counts == w.counts);
    }
}

TEST_CASE("MacWilliams self-dual identity") {
    const Field& f2 = Field::get(2, 1);
    const Field& f4 = Field::get(2, 2);
    const Field& f3 = Field::get(3, 1);
    CHECK(macwilliams_selfdual_check(rep2(f2).weight_distribution(), 2));
    LinearCode i2i2 = LinearCode::from_generator(GFMatrix(f4, 2, 4, {1, 0, 1, 0, 0, 1, 0, 1}));
    CHECK(i2i2.predicate(Predicate::self_dual));
    CHECK(macwilliams_selfdual_check(i2i2.weight_distribution(), 4));
    // {00,11} over GF(3) is not self-dual, yet its distribution (1,0,2)
    // satisfies the identity: the check is necessary, not sufficient
    CHECK(macwilliams_selfdual_check(rep2(f3).weight_distribution(), 3));
    // a [4,2] binary code whose distribution genuinely violates it
    LinearCode bad = LinearCode::from_generator(GFMatrix(f2, 2, 4, {1, 1, 1, 0, 0, 0, 0, 1}));
    CHECK(!macwilliams_selfdual_check(bad.weight_distribution(), 2));
}

TEST_CASE("scaling duality identities") {
    uint64_t s = 201;
    const Field& f = Field::get(2, 2);
    std::vector<uint32_t> v = {2, 3, 1, 2};
    std::vector<uint32_t> vinv, vconjinv;
    for (uint32_t x : v) {
        vinv.push_back(f.inv(x));
        vconjinv.push_back(f.conj(f.inv(x)));  // = x^{-q0}
    }
    for (int rep = 0; rep < 15; ++rep) {
        LinearCode c = random_code(f, 2, 4, s);
        CHECK(c.scale(v).dual() == c.dual().scale(vinv));
        CHECK(c.scale(v).hermitian_dual() == c.hermitian_dual().scale(vconjinv));
        // scaling preserves [n, k, d]
        CHECK(c.scale(v).k() == c.k());
        CHECK(c.scale(v).distance() == c.distance());
    }
}

TEST_CASE("scaling changes the hull: {00,11} over GF(4)") {
    const Field& f = Field::get(2, 2);
    LinearCode c = rep2(f);
    CHECK(c.hull_dim(Kind::euclidean) == 1);
    CHECK(c.scale({2, 1}).hull_dim(Kind::euclidean) == 0);  // w^2 + 1 = 2 != 0
    CHECK_THROWS_AS(c.scale({0, 1}), NotFullWeight);
    CHECK_THROWS_AS(c.scale({1}), ShapeMismatch);
}

TEST_CASE("shortening") {
    const Field& f4 = Field::get(2, 2);
    const Field& f2 = Field::get(2, 1);
    CHECK(LinearCode::full_space(f2, 3).shorten(1) == LinearCode::full_space(f2, 2));
    CHECK(rep2(f2).shorten(0) == LinearCode::zero_code(f2, 1));
    LinearCode d = LinearCode::from_generator(GFMatrix(f4, 1, 3, {1, 1, 1})).dual();
    CHECK(d.shorten(0) == rep2(f4));  // words (0, b, b) with coordinate 0 deleted
    CHECK_THROWS_AS(d.shorten(3), IndexOutOfRange);
}

TEST_CASE("Schur products") {
    const Field& f = Field::get(2, 3);
    LinearCode rs73 = rs(f, {1, 2, 3, 4, 5, 6, 7}, 3);
    CHECK(schur_product(rs73, rs73).k() == 5);  // RS Schur square has dimension 2k-1
    const Field& f4 = Field::get(2, 2);
    LinearCode c = LinearCode::from_generator(GFMatrix(f4, 2, 4, {1, 1, 0, 0, 0, 0, 1, 1}));
    CHECK(schur_product(c, c) == c);  // {(x,x)} blocks are idempotent
    LinearCode ones = LinearCode::from_generator(GFMatrix(f4, 1, 4, {1, 1, 1, 1}));
    uint64_t s = 3;
    LinearCode r = random_code(f4, 2, 4, s);
    CHECK(schur_product(ones, r) == r);
}

TEST_CASE("full_weight_codeword finds the lexicographically first witness") {
    const Field& f = Field::get(3, 1);
    CHECK(LinearCode::full_space(f, 3).full_weight_codeword() ==
          std::vector<uint32_t>{1, 1, 1});
    CHECK(LinearCode::zero_code(f, 3).full_weight_codeword() == std::nullopt);
    const Field& f2 = Field::get(2, 1);
    LinearCode no_full = LinearCode::from_generator(GFMatrix(f2, 1, 3, {1, 1, 0}));
    CHECK(no_full.full_weight_codeword() == std::nullopt);
    LinearCode two_blocks =
        LinearCode::from_generator(GFMatrix(f2, 2, 4, {1, 1, 0, 0, 0, 0, 1, 1}));
    CHECK(two_blocks.full_weight_codeword() == std::vector<uint32_t>{1, 1, 1, 1});
}

TEST_CASE("standard form") {
    const Field& f = Field::get(2, 2);
    LinearCode c = LinearCode::from_generator(GFMatrix(f, 2, 4, {1, 0, 2, 3, 0, 1, 1, 2}));
    StandardForm sf = c.standard_form();
    CHECK(sf.perm == std::vector<size_t>{0, 1, 2, 3});
    CHECK(sf.p == GFMatrix(f, 2, 2, {2, 3, 1, 2}));
    // pivot not in front: permutation moves it there
    LinearCode c2 = LinearCode::from_generator(GFMatrix(f, 1, 2, {0, 1}));
    StandardForm sf2 = c2.standard_form();
    CHECK(sf2.perm == std::vector<size_t>{1, 0});
    LinearCode sd = LinearCode::from_generator(GFMatrix(f, 2, 4, {1, 0, 1, 0, 0, 1, 0, 1}));
    CHECK(sd.predicate(Predicate::self_dual));
    StandardForm sf3 = sd.standard_form();  // internally verifies P P^T = -I
    CHECK(sf3.p == GFMatrix::identity(f, 2));
}

TEST_CASE("contains and contains_word") {
    const Field& f = Field::get(2, 1);
    LinearCode c = LinearCode::from_generator(GFMatrix(f, 2, 4, {1, 1, 0, 0, 0, 0, 1, 1}));
    CHECK(c.contains_word({1, 1, 1, 1}));
    CHECK(!c.contains_word({1, 0, 0, 0}));
    CHECK(c.contains(LinearCode::from_generator(GFMatrix(f, 1, 4, {1, 1, 1, 1}))));
    CHECK(LinearCode::full_space(f, 4).contains(c));
    CHECK(!c.contains(LinearCode::full_space(f, 4)));
}

TEST_CASE("hermitian predicates over GF(4)") {
    const Field& f = Field::get(2, 2);
    // (1, 1): 1*conj(1) + 1*conj(1) = 0 -> Hermitian self-dual [2,1]
    LinearCode c = rep2(f);
    CHECK(c.predicate(Predicate::hermitian_self_dual));
    CHECK(c.predicate(Predicate::hermitian_self_orthogonal));
    CHECK(c.hull_dim(Kind::hermitian) == 1);
    const Field& f2 = Field::get(2, 1);
    CHECK_THROWS_AS(rep2(f2).hull_dim(Kind::hermitian), NoHermitianStructure);
}

TEST_CASE("enumeration refuses past the 2^24 cutoff") {
    const Field& f = Field::get(2, 3);
    CHECK_THROWS_AS(LinearCode::check_enumerable(f, 9), TooLargeToEnumerate);  // 8^9 > 2^24
    CHECK_NOTHROW(LinearCode::check_enumerable(f, 8));                         // 8^8 = 2^24
    CHECK_THROWS_AS(LinearCode::full_space(f, 9).distance(), TooLargeToEnumerate);
}

TEST_CASE("for_each_codeword visits q^k words in lexicographic message order") {
    const Field& f = Field::get(3, 1);
    LinearCode c = LinearCode::full_space(f, 2);
    std::vector<std::vector<uint32_t>> seen;
    c.for_each_codeword([&](const std::vector<uint32_t>& w, const std::vector<uint32_t>& msg) {
        CHECK(w == msg);  // identity generator
        seen.push_back(w);
        return true;
    });
    REQUIRE(seen.size() == 9);
    CHECK(seen.front() == std::vector<uint32_t>{0, 0});
    CHECK(seen[1] == std::vector<uint32_t>{0, 1});
    CHECK(seen[3] == std::vector<uint32_t>{1, 0});
    CHECK(seen.back() == std::vector<uint32_t>{2, 2});
    // early stop
    size_t count = 0;
    bool finished = c.for_each_codeword([&](const auto&, const auto&) { return ++count < 4; });
    CHECK(!finished);
    CHECK(count == 4);
}
