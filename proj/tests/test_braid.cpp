#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qa/braid.hpp"

using namespace qa;

namespace {

const std::string kT12533 =
    "1,1,2,2,1,2,2,2,2,2,2,2,2,2,1,2,2,3,2,1,1,2,2,1,3,2,2";

const std::string kO940487 =
    "1,2,1,3,3,2,2,3,4,3,2,1,3,2,1,3,2,4,2,4,1,4,2,1,3,2,3,4,3,4,3,2";

BraidWord random_word(std::mt19937& rng, int n, int maxlen) {
    std::uniform_int_distribution<int> len_d(0, maxlen);
    std::uniform_int_distribution<int> gen_d(1, n - 1);
    std::uniform_int_distribution<int> sign_d(0, 1);
    std::vector<int> ls;
    const int len = len_d(rng);
    for (int i = 0; i < len; ++i) {
        int g = gen_d(rng);
        ls.push_back(sign_d(rng) ? g : -g);
    }
    return BraidWord(n, std::move(ls));
}

BraidWord half_twist(int n) {
    std::vector<int> ls;
    for (int k = n - 1; k >= 1; --k)
        for (int i = 1; i <= k; ++i) ls.push_back(i);
    return BraidWord(n, std::move(ls));
}

}  // namespace

TEST_CASE("compose") {
    CHECK(compose(BraidWord(3, {1}), BraidWord(3, {2})) == BraidWord(3, {1, 2}));
    BraidWord w(4, {1, -2, 3});
    CHECK(compose(w, BraidWord(4, {})) == w);
    CHECK(compose(BraidWord(3, {1}), BraidWord(3, {-1})) == BraidWord(3, {1, -1}));
    CHECK_THROWS_AS(compose(BraidWord(3, {1}), BraidWord(4, {1})), braid_error);
}

TEST_CASE("inverse") {
    CHECK(inverse(BraidWord(3, {1, 2})) == BraidWord(3, {-2, -1}));
    CHECK(inverse(BraidWord(3, {})) == BraidWord(3, {}));
    CHECK(inverse(BraidWord(4, {-3, 2})) == BraidWord(4, {-2, 3}));
}

TEST_CASE("free_reduce") {
    CHECK(free_reduce(BraidWord(2, {1, -1})) == BraidWord(2, {}));
    CHECK(free_reduce(BraidWord(3, {1, 2, -2, -1})) == BraidWord(3, {}));
    CHECK(free_reduce(BraidWord(3, {1, 2, 1})) == BraidWord(3, {1, 2, 1}));
}

TEST_CASE("conjugate") {
    BraidWord w(4, {1, 3});
    CHECK(conjugate(w, BraidWord(4, {})) == w);
    CHECK(conjugate(BraidWord(3, {1}), BraidWord(3, {2})) == BraidWord(3, {-2, 1, 2}));
}

TEST_CASE("flip / mirror / reverse basics") {
    BraidWord w = expand("3,3,2,2,3,-1,-2,(1,2,3)^8", 4);
    CHECK(flip(w) == expand("1,1,2,2,1,-3,-2,(3,2,1)^8", 4));
    CHECK(mirror(expand("1,1,2,2,1,-3,-2,(3,2,1)^8", 4)) ==
          expand("-1,-1,-2,-2,-1,3,2,(-3,-2,-1)^8", 4));
    CHECK(flip(flip(w)) == w);
    CHECK(mirror(mirror(w)) == w);
    CHECK(reverse(reverse(w)) == w);
    CHECK(flip(BraidWord(4, {2})) == BraidWord(4, {2}));
    CHECK(mirror(BraidWord(3, {})) == BraidWord(3, {}));
    CHECK(reverse(BraidWord(4, {1, 2, 3})) == BraidWord(4, {3, 2, 1}));
}

TEST_CASE("full_twist") {
    CHECK(full_twist(4, 0) == BraidWord(4, {}));
    CHECK(full_twist(3, 1).size() == 6);
    CHECK(equals(full_twist(4, -2), expand("(-3,-2,-1)^8", 4)) == Decision::Yes);
    CHECK(equals(full_twist(6, 2), expand("(1,2,3,4,5)^12", 6)) == Decision::Yes);
}

TEST_CASE("permutation and exponent_sum") {
    CHECK(permutation(BraidWord(3, {})).is_identity());
    CHECK(permutation(BraidWord(2, {1})).images() == std::vector<int>{2, 1});
    BraidWord gamma = expand(kT12533, 4);
    CHECK(permutation(gamma).cycle_count() == 1);
    CHECK(exponent_sum(gamma) == 27);
    CHECK(exponent_sum(inverse(gamma)) == -27);
    CHECK(exponent_sum(BraidWord(3, {1, -2})) == 0);
}

TEST_CASE("is_trivial") {
    CHECK(is_trivial(BraidWord(3, {1, 2, 1, -2, -1, -2})) == Decision::Yes);
    CHECK(is_trivial(BraidWord(4, {1, 3, -1, -3})) == Decision::Yes);
    CHECK(is_trivial(BraidWord(2, {1})) == Decision::No);
    ReduceOptions tight;
    tight.max_steps = 1;
    CHECK(is_trivial(BraidWord(4, {1, 2, 1, -2, -1, -2, 1, 2, 1, -2, -1, -2}), tight) ==
          Decision::Undecided);
}

TEST_CASE("equals") {
    CHECK(equals(BraidWord(3, {1, 2, 1}), BraidWord(3, {2, 1, 2})) == Decision::Yes);
    CHECK(equals(BraidWord(3, {1}), BraidWord(3, {2})) == Decision::No);
    CHECK(equals(reverse(BraidWord(3, {1, 2, 1})), BraidWord(3, {1, 2, 1})) == Decision::Yes);
}

TEST_CASE("printed conjugation identities") {
    BraidWord gamma = expand(kT12533, 4);
    BraidWord alpha = expand("-2,-2,-3,-1,-2,3,3,-1", 4);
    CHECK(equals(conjugate(gamma, alpha), expand("3,3,2,2,3,-1,-2,(1,2,3)^8", 4)) ==
          Decision::Yes);

    BraidWord g487 = expand(kO940487, 5);
    BraidWord ap = expand("-3,1,2,3", 5);
    CHECK(equals(conjugate(g487, ap),
                 expand("(1,2,3,4)^5,2,1,3,2,4,3,3,4,4,3,2,1", 5)) == Decision::Yes);
}

TEST_CASE("stabilize / destabilize") {
    CHECK(stabilize(BraidWord(1, {})) == BraidWord(2, {1}));
    CHECK(destabilize(BraidWord(3, {1, 2})) == BraidWord(2, {1}));
    CHECK_THROWS_AS(destabilize(BraidWord(3, {2, 2})), braid_error);
    BraidWord w(4, {1, -2, 3, 1});
    CHECK(destabilize(stabilize(w)) == w);
}

TEST_CASE("expand parser") {
    CHECK(expand("(1,2,3)^2", 4) == BraidWord(4, {1, 2, 3, 1, 2, 3}));
    CHECK(expand("(1,2)^-1", 3) == BraidWord(3, {-2, -1}));
    CHECK(expand("(-3,-2,-1)^8,-2,-2,-1,3,2,-1,-1", 4).size() == 31);
    CHECK(expand("", 4) == BraidWord(4, {}));
    CHECK(expand(" ( 1 , 2 ) ^ 2 , -3 ", 4) == BraidWord(4, {1, 2, 1, 2, -3}));
    CHECK(expand("((1,2)^2,3)^-1", 4) == BraidWord(4, {-3, -2, -1, -2, -1}));
    CHECK_THROWS_AS(expand("(1,2", 4), braid_error);
    CHECK_THROWS_AS(expand("1,,2", 4), braid_error);
    CHECK_THROWS_AS(expand("0", 4), braid_error);
    CHECK_THROWS_AS(expand("5", 4), braid_error);
}

TEST_CASE("normal form basics") {
    CHECK(normal_form(BraidWord(4, {})).trivial());
    CHECK(is_trivial_nf(BraidWord(3, {1, 2, 1, -2, -1, -2})));
    CHECK_FALSE(is_trivial_nf(BraidWord(2, {1})));
    CHECK(equals_nf(BraidWord(3, {1, 2, 1}), BraidWord(3, {2, 1, 2})));
    NormalForm d = normal_form(half_twist(4));
    CHECK(d.delta_power == 1);
    CHECK(d.factors.empty());
    NormalForm dinv = normal_form(inverse(half_twist(4)));
    CHECK(dinv.delta_power == -1);
    CHECK(dinv.factors.empty());
}

TEST_CASE("property: equals-preserving free reduction, involutions") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 2 + trial % 4;
        BraidWord w = random_word(rng, n, 14);
        CHECK(equals(w, free_reduce(w)) == Decision::Yes);
        CHECK(flip(flip(w)) == w);
        CHECK(mirror(mirror(w)) == w);
        CHECK(reverse(reverse(w)) == w);
        CHECK(permutation(compose(w, inverse(w))).is_identity());
    }
}

TEST_CASE("property: full twist centrality") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + trial % 5;
        BraidWord w = random_word(rng, n, 20);
        for (int k : {1, -1}) {
            BraidWord ft = full_twist(n, k);
            CHECK(equals(compose(w, ft), compose(ft, w)) == Decision::Yes);
        }
    }
}

TEST_CASE("property: flip is conjugation by the half twist") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + trial % 4;
        BraidWord w = random_word(rng, n, 10);
        CHECK(equals(flip(w), conjugate(w, half_twist(n))) == Decision::Yes);
    }
}

TEST_CASE("property: handle reduction agrees with normal form") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 2000; ++trial) {
        int n = 2 + trial % 4;
        BraidWord w = random_word(rng, n, 16);
        Decision hr = is_trivial(w);
        REQUIRE(hr != Decision::Undecided);
        CHECK((hr == Decision::Yes) == is_trivial_nf(w));
    }
}
