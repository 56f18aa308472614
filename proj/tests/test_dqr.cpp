#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>

#include "knothom/dqr.hpp"

using namespace knothom;

namespace {
auto sorted(std::vector<DqrElement> v) {
    std::sort(v.begin(), v.end(), [](DqrElement a, DqrElement b) {
        return a.v != b.v ? a.v < b.v : a.i < b.i;
    });
    return v;
}
}  // namespace

TEST_CASE("D(5,2) is the dihedral group of order 10") {
    auto D = DqrGroup::make(5, 2);
    CHECK(D->order() == 10);
    CHECK(D->zeta() == 4);  // -1 mod 5
    DqrElement rho{1, 0}, sigma{0, 1};
    CHECK(D->conj(rho, sigma) == D->inv(rho));  // sigma rho sigma^-1 = rho^-1
    CHECK(D->elem_order(rho) == 5);
    CHECK(D->elem_order(sigma) == 2);
}

TEST_CASE("worked products in D(5,2)") {
    auto D = DqrGroup::make(5, 2);
    // rho^2 sigma . rho^4 = rho^3 sigma: (2,1)(4,0) = (2 + (-1)*4, 1) = (3,1)
    CHECK(D->mul({2, 1}, {4, 0}) == DqrElement{3, 1});
    // rho^3 . sigma = (3,1)
    CHECK(D->mul({3, 0}, {0, 1}) == DqrElement{3, 1});
    CHECK(D->parse("rho^2*sigma") == DqrElement{2, 1});
    CHECK(D->parse("rho^3 sigma") == DqrElement{3, 1});
    CHECK(D->parse("1") == D->identity());
    CHECK(D->format({3, 1}) == "(v=[3], i=1)");
    CHECK(D->parse("(v=[3], i=1)") == DqrElement{3, 1});
}

TEST_CASE("group laws and element orders, exhaustively") {
    for (auto [q, r] : std::vector<std::pair<int, int>>{{2, 5}, {5, 2}, {2, 3}, {3, 2}}) {
        auto D = DqrGroup::make(q, r);
        for (const auto& g : D->enumerate()) {
            CHECK(D->mul(g, D->inv(g)) == D->identity());
            int closed = D->elem_order(g);
            CHECK(closed == D->elem_order_brute(g));
            CHECK((closed == 1 || closed == q || closed == r));
            // orders divide {1, q, r}
            CHECK(D->pow(g, static_cast<long long>(q) * r) == D->identity());
        }
    }
}

TEST_CASE("enumeration sizes") {
    CHECK(DqrGroup::make(5, 2)->enumerate().size() == 10);
    CHECK(DqrGroup::make(2, 3)->enumerate().size() == 12);
    CHECK(DqrGroup::make(2, 5)->enumerate().size() == 80);
}

TEST_CASE("conjugacy classes: closed form equals brute force") {
    for (auto [q, r] : std::vector<std::pair<int, int>>{
             {2, 3}, {2, 5}, {3, 2}, {5, 2}, {3, 5}, {2, 7}}) {
        auto D = DqrGroup::make(q, r);
        for (const auto& g : D->enumerate())
            REQUIRE(sorted(D->conjugacy_class(g)) == D->conjugacy_class_brute(g));
    }
}

TEST_CASE("conjugacy class shapes in D(2,5)") {
    auto D = DqrGroup::make(2, 5);
    CHECK(D->conjugacy_class(D->identity()) == std::vector<DqrElement>{D->identity()});
    DqrElement v{3, 0};
    auto cls = D->conjugacy_class(v);
    CHECK(cls.size() == 5);  // the zeta-orbit of v
    auto fibre = D->conjugacy_class({0, 1});
    CHECK(fibre.size() == 16);  // everything with i = 1
    for (const auto& h : fibre) CHECK(h.i == 1);
}

TEST_CASE("commuting classification") {
    auto D = DqrGroup::make(5, 2);
    DqrElement rho{1, 0}, sigma{0, 1};
    CHECK(D->commute_classify(rho, sigma).kind == CommuteKind::NotCommuting);
    CHECK(D->commute_classify({1, 0}, {3, 0}).kind == CommuteKind::BothInV);
    auto D25 = DqrGroup::make(2, 5);
    DqrElement g{1, 1};
    auto cc = D25->commute_classify(g, D25->pow(g, 2));
    CHECK(cc.kind == CommuteKind::SameCyclicOrderR);
    CHECK(cc.base_is_first);
    CHECK(cc.exponent == 2);
    // the shift map is a homomorphism onto Z/r with kernel V
    for (const auto& a : D25->enumerate())
        for (const auto& b : {DqrElement{5, 2}, DqrElement{9, 4}, DqrElement{3, 0}})
            CHECK(D25->shift(D25->mul(a, b)) == (D25->shift(a) + D25->shift(b)) % 5);
}

TEST_CASE("classification matches the structure lemma on every commuting pair") {
    auto D = DqrGroup::make(2, 5);
    for (const auto& g : D->enumerate())
        for (const auto& h : D->enumerate()) {
            bool commuting = D->mul(g, h) == D->mul(h, g);
            auto cc = D->commute_classify(g, h);
            REQUIRE(commuting == (cc.kind != CommuteKind::NotCommuting));
            if (cc.kind == CommuteKind::BothInV) REQUIRE((g.i == 0 && h.i == 0));
            if (cc.kind == CommuteKind::SameCyclicOrderR) {
                DqrElement base = cc.base_is_first ? g : h;
                DqrElement other = cc.base_is_first ? h : g;
                REQUIRE(D->pow(base, cc.exponent) == other);
            }
        }
}

TEST_CASE("D(2,3) has the order profile of A4") {
    auto D = DqrGroup::make(2, 3);
    std::map<int, int> profile;
    for (const auto& g : D->enumerate()) profile[D->elem_order(g)]++;
    CHECK(profile == std::map<int, int>{{1, 1}, {2, 3}, {3, 8}});
}

TEST_CASE("error paths") {
    CHECK_THROWS_AS(DqrGroup::make(2, 2), std::invalid_argument);  // q = r
    CHECK_THROWS_AS(DqrGroup::make(4, 3), std::invalid_argument);  // q not prime
    CHECK_THROWS_AS(DqrGroup::make(2, 31), std::invalid_argument);  // beyond the bound
    auto D = DqrGroup::make(2, 5);
    CHECK_THROWS_AS(D->parse("rho^2"), std::invalid_argument);  // alias needs r = 2
}
