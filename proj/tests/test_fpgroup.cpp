#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "knothom/fpgroup.hpp"
#include "knothom/groups.hpp"

using namespace knothom;

namespace {

std::vector<ElemId> images_for(const Presentation& p,
                               const std::vector<std::pair<std::string, ElemId>>& named) {
    std::vector<ElemId> out(p.generators.size(), 0);
    for (const auto& [name, id] : named) out[p.generator_index(name)] = id;
    return out;
}

bool satisfies(const Presentation& p, const std::vector<ElemId>& images, const FiniteGroup& H) {
    return std::all_of(p.relators.begin(), p.relators.end(), [&](const Word& r) {
        return evaluate_word(r, std::span<const ElemId>(images), H) == H.identity();
    });
}

std::set<std::vector<int>> relator_key(const Presentation& p) {
    std::set<std::vector<int>> out;
    for (const auto& r : p.relators) out.insert(free_reduce(r).letters);
    return out;
}

}  // namespace

TEST_CASE("word calculus") {
    Word u{{1, 2}}, v{{-2, 3}};
    CHECK(word_concat(u, v).letters == std::vector<int>{1, 2, -2, 3});
    CHECK(free_reduce(word_concat(u, v)).letters == std::vector<int>{1, 3});
    CHECK(free_reduce(free_reduce(word_concat(u, v))).letters == std::vector<int>{1, 3});
    CHECK(word_inverse(u).letters == std::vector<int>{-2, -1});
    CHECK(word_pow(u, -2).letters == std::vector<int>{-2, -1, -2, -1});
    CHECK(free_reduce(word_concat(u, word_inverse(u))).letters.empty());
}

TEST_CASE("evaluate_word is a monoid homomorphism on concatenation") {
    auto H = symmetric_group(4);
    Presentation p;
    p.generators = {"a", "c"};
    std::vector<ElemId> images{7, 11};
    Word empty;
    CHECK(evaluate_word(empty, std::span<const ElemId>(images), *H) == H->identity());
    for (const Word& u : {Word{{1, 2}}, Word{{-1}}, Word{{2, 2, -1}}})
        for (const Word& v : {Word{{-2, 1}}, Word{{1}}, Word{{}}}) {
            ElemId lhs = evaluate_word(word_concat(u, v), std::span<const ElemId>(images), *H);
            ElemId rhs = H->mul(evaluate_word(u, std::span<const ElemId>(images), *H),
                                evaluate_word(v, std::span<const ElemId>(images), *H));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("trefoil presentations") {
    auto ac = trefoil_presentation(TrefoilVariant::Ac, Chirality::Right);
    CHECK(ac.generators == std::vector<std::string>{"a", "c"});
    CHECK(ac.relators.size() == 1);
    CHECK(ac.meridian.letters == std::vector<int>{1});
    REQUIRE(ac.longitude.has_value());

    auto xy = trefoil_presentation(TrefoilVariant::Xy, Chirality::Right);
    CHECK(xy.generators == std::vector<std::string>{"x", "y"});
    CHECK(free_reduce(xy.relators[0]).letters == std::vector<int>{1, 1, 1, -2, -2});

    // Tietze sanity: images with aca = cac make ab = bc = ca consistent under
    // b := a^-1 (ca); transpositions a = (0 1), c = (0 2) in S3 satisfy the
    // braid relation
    auto S3 = symmetric_group(3);
    ElemId A = 0, C = 0;
    for (ElemId g = 0; g < S3->order(); ++g) {
        if (S3->element_str(g) == "(0 1)") A = g;
        if (S3->element_str(g) == "(0 2)") C = g;
    }
    auto img = images_for(ac, {{"a", A}, {"c", C}});
    REQUIRE(satisfies(ac, img, *S3));
    ElemId B = S3->mul(S3->inv(A), S3->mul(C, A));
    CHECK(S3->mul(A, B) == S3->mul(C, A));           // ab = ca
    CHECK(S3->mul(B, C) == S3->mul(C, A));           // bc = ca
    // the abc form is satisfied by (A, B, C)
    auto abc = trefoil_presentation(TrefoilVariant::Abc, Chirality::Right);
    CHECK(satisfies(abc, images_for(abc, {{"a", A}, {"b", B}, {"c", C}}), *S3));
    // and the longitude commutes with the meridian on these images
    ElemId lam = evaluate_word(*ac.longitude, std::span<const ElemId>(img), *S3);
    CHECK(S3->mul(lam, A) == S3->mul(A, lam));
}

TEST_CASE("G_n presentations of the square and granny knots") {
    auto sk = gn_presentation(Knot::SK, 2);
    auto gk = gn_presentation(Knot::GK, 2);
    CHECK(sk.generators == std::vector<std::string>{"a", "c", "f", "nu"});
    CHECK(sk.relators.size() == 4);
    CHECK(gk.relators.size() == 4);

    auto ks = relator_key(sk), kg = relator_key(gk);
    std::vector<std::vector<int>> diff;
    std::set_symmetric_difference(ks.begin(), ks.end(), kg.begin(), kg.end(),
                                  std::back_inserter(diff));
    CHECK(diff.size() == 2);  // they differ exactly in the final relator

    // defined words x = ca, w = fa
    CHECK(sk.defined_words.front().first == "x");
    CHECK(sk.defined_words.front().second.letters == std::vector<int>{2, 1});
    CHECK_THROWS_AS(gn_presentation(Knot::SK, 0), std::invalid_argument);
}

TEST_CASE("Wirtinger presentations from diagrams") {
    KnotDiagram d = trefoil_diagram(Chirality::Right);
    auto p = wirtinger_gn(d, 1);
    CHECK(p.generators.size() == 3);
    CHECK(p.relators.size() == 3);
    auto p2 = wirtinger_gn(d, 2);
    CHECK(p2.relators[0].letters.size() == 2 * 2 + 2);  // x_j^-2 x_i x_j^2 x_k^-1

    KnotDiagram empty;
    CHECK_THROWS_AS(wirtinger_gn(empty, 1), std::invalid_argument);
    KnotDiagram bad = d;
    bad.crossings[0].out = 1;  // arc 1 now closes twice, arc 2 never
    CHECK_THROWS_AS(wirtinger_gn(bad, 1), std::invalid_argument);
    KnotDiagram oob = d;
    oob.crossings[0].over = 9;
    CHECK_THROWS_AS(wirtinger_gn(oob, 1), std::invalid_argument);

    // diagram JSON round trip
    auto j = d.to_json();
    KnotDiagram back = KnotDiagram::from_json(j);
    CHECK(back.arcs == d.arcs);
    CHECK(back.crossings.size() == d.crossings.size());
}

TEST_CASE("presentation JSON round trip") {
    auto sk = gn_presentation(Knot::SK, 3);
    auto j = sk.to_json();
    auto back = Presentation::from_json(j);
    CHECK(back.generators == sk.generators);
    CHECK(back.relators == sk.relators);
    CHECK(back.meridian == sk.meridian);
    REQUIRE(back.longitude.has_value());
    CHECK(*back.longitude == *sk.longitude);
    CHECK(j["relators"][0] ==
          nlohmann::json({"a", "c", "a", "-c", "-a", "-c"}));
}

TEST_CASE("peripheral G_n construction") {
    auto base = trefoil_presentation(TrefoilVariant::Ac, Chirality::Right);
    auto g2 = gn_from_peripheral(base, 2);
    CHECK(g2.generators.back() == "nu");
    CHECK(g2.relators.size() == base.relators.size() + 2);
    auto xy = trefoil_presentation(TrefoilVariant::Xy, Chirality::Right);
    CHECK_NOTHROW(gn_from_peripheral(xy, 3));
}
