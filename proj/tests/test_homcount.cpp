#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "knothom/homcount.hpp"

using namespace knothom;

namespace {

// independent oracle for the trefoil count: scan all ordered pairs directly
std::uint64_t trefoil_count_oracle(const FiniteGroup& H) {
    std::uint64_t count = 0;
    for (ElemId a = 0; a < H.order(); ++a)
        for (ElemId c = 0; c < H.order(); ++c)
            if (H.mul(H.mul(a, c), a) == H.mul(H.mul(c, a), c)) ++count;
    return count;
}

Presentation common_group_presentation() {
    Presentation p;
    p.name = "G";
    p.generators = {"a", "c", "f"};
    std::vector<std::string> r1{"a", "c", "a", "-c", "-a", "-c"};
    std::vector<std::string> r2{"a", "f", "a", "-f", "-a", "-f"};
    p.relators = {p.word_from_names(r1), p.word_from_names(r2)};
    p.meridian = p.word_from_names(std::vector<std::string>{"a"});
    return p;
}

}  // namespace

TEST_CASE("trefoil homomorphisms into S3: 12, from the pair oracle") {
    auto S3 = symmetric_group(3);
    CHECK(trefoil_count_oracle(*S3) == 12);  // 6 diagonal + 6 transposition pairs
    auto p = trefoil_presentation(TrefoilVariant::Ac, Chirality::Right);
    for (Strategy s : {Strategy::Naive, Strategy::Pruned, Strategy::ClassReduced})
        CHECK(count_homs(p, *S3, s).total == 12);
}

TEST_CASE("counting into the trivial group") {
    auto T = trivial_group();
    CHECK(count_homs(gn_presentation(Knot::SK, 2), *T, Strategy::Pruned).total == 1);
    CHECK(count_homs(gn_presentation(Knot::GK, 5), *T, Strategy::Naive).total == 1);
}

TEST_CASE("strategies agree, with identical class breakdowns") {
    auto p = trefoil_presentation(TrefoilVariant::Ac, Chirality::Right);
    for (const auto& H : {symmetric_group(3), dihedral_group(5), symmetric_group(4)}) {
        auto naive = count_homs(p, *H, Strategy::Naive);
        auto pruned = count_homs(p, *H, Strategy::Pruned);
        auto reduced = count_homs(p, *H, Strategy::ClassReduced);
        CHECK(naive.total == pruned.total);
        CHECK(naive.total == reduced.total);
        CHECK(naive.by_first_class == pruned.by_first_class);
        CHECK(naive.by_first_class == reduced.by_first_class);
        mpz_class sum = 0;
        for (const auto& [rep, cnt] : naive.by_first_class) sum += cnt;
        CHECK(sum == naive.total);
    }
}

TEST_CASE("G_2(SK) and G_2(GK) have equal counts into small groups") {
    for (const auto& H : {symmetric_group(3), alternating_group(4)}) {
        auto sk = count_homs(gn_presentation(Knot::SK, 2), *H, Strategy::Pruned);
        auto gk = count_homs(gn_presentation(Knot::GK, 2), *H, Strategy::Pruned);
        CHECK(sk.total == gk.total);
    }
}

TEST_CASE("structured counting agrees with the generic search") {
    for (Knot k : {Knot::SK, Knot::GK}) {
        auto H = alternating_group(4);
        auto generic = count_homs(gn_presentation(k, 2), *H, Strategy::Pruned);
        auto structured = count_homs_gn_structured(k, 2, *H);
        CHECK(structured.total == generic.total);
        CHECK(structured.by_first_class == generic.by_first_class);
    }
}

TEST_CASE("n = 1 counts collapse to the common group G") {
    for (const auto& H : {symmetric_group(3), dihedral_group(5), alternating_group(4)}) {
        auto g = count_homs(common_group_presentation(), *H, Strategy::Pruned);
        auto sk1 = count_homs(gn_presentation(Knot::SK, 1), *H, Strategy::Pruned);
        auto gk1 = count_homs(gn_presentation(Knot::GK, 1), *H, Strategy::Pruned);
        CHECK(g.total == sk1.total);
        CHECK(g.total == gk1.total);
    }
}

TEST_CASE("enumeration is deterministic and lexicographic") {
    auto p = trefoil_presentation(TrefoilVariant::Ac, Chirality::Right);
    auto S3 = symmetric_group(3);
    auto homs = enumerate_homs(p, *S3);
    CHECK(homs.size() == 12);
    CHECK(std::is_sorted(homs.begin(), homs.end()));
    CHECK(enumerate_homs(p, *S3) == homs);
    CHECK(enumerate_homs(p, *trivial_group()).size() == 1);
}

TEST_CASE("product groups multiply counts") {
    auto p = trefoil_presentation(TrefoilVariant::Ac, Chirality::Right);
    auto A = symmetric_group(3);
    auto B = dihedral_group(5);
    auto AB = product_group(A, B);
    auto ca = count_homs(p, *A, Strategy::Pruned).total;
    auto cb = count_homs(p, *B, Strategy::Pruned).total;
    CHECK(count_homs(p, *AB, Strategy::Pruned).total == ca * cb);
}

TEST_CASE("Wirtinger counts match the peripheral presentations") {
    auto S3 = symmetric_group(3);
    auto tref = trefoil_presentation(TrefoilVariant::Ac, Chirality::Right);
    auto diagram = trefoil_diagram(Chirality::Right);
    CHECK(count_homs(wirtinger_gn(diagram, 1), *S3, Strategy::Pruned).total ==
          count_homs(tref, *S3, Strategy::Pruned).total);
    for (const auto& H : {symmetric_group(3), alternating_group(4), dihedral_group(5)}) {
        auto via_diagram = count_homs(wirtinger_gn(diagram, 2), *H, Strategy::Pruned);
        auto via_peripheral = count_homs(gn_from_peripheral(tref, 2), *H, Strategy::Pruned);
        CHECK(via_diagram.total == via_peripheral.total);
    }
}

TEST_CASE("budget produces an error, never a wrong count") {
    SearchConfig tiny;
    tiny.budget_nodes = 10;
    CHECK_THROWS_AS(
        count_homs(gn_presentation(Knot::SK, 2), *symmetric_group(4), Strategy::Naive, tiny),
        BudgetExceeded);
    CHECK_THROWS_AS(count_homs_gn_structured(Knot::SK, 2, *symmetric_group(4), tiny),
                    BudgetExceeded);
}

TEST_CASE("worker counts never change a report") {
    auto p = gn_presentation(Knot::GK, 2);
    auto H = symmetric_group(4);
    SearchConfig one, three;
    one.workers = 1;
    three.workers = 3;
    auto r1 = count_homs(p, *H, Strategy::Pruned, one);
    auto r3 = count_homs(p, *H, Strategy::Pruned, three);
    CHECK(r1.total == r3.total);
    CHECK(r1.nodes == r3.nodes);
    CHECK(r1.by_first_class == r3.by_first_class);
    auto s1 = count_homs_gn_structured(Knot::SK, 2, *H, one);
    auto s3 = count_homs_gn_structured(Knot::SK, 2, *H, three);
    CHECK(s1.total == s3.total);
    CHECK(s1.nodes == s3.nodes);
}

TEST_CASE("group spec mini-language") {
    CHECK(parse_group_spec("S3")->order() == 6);
    CHECK(parse_group_spec("A5")->order() == 60);
    CHECK(parse_group_spec("A6")->order() == 360);
    CHECK(parse_group_spec("D(7)")->order() == 14);
    CHECK(parse_group_spec("DQR(2,5)")->order() == 80);
    CHECK(parse_group_spec("PSL(2,5)")->order() == 60);
    CHECK(parse_group_spec("H(3,5,2)")->order() == 120000);
    CHECK(parse_group_spec("trivial")->order() == 1);
    auto klein = parse_group_spec("perm:[(0,1)(2,3);(0,2)(1,3)]");
    CHECK(klein->order() == 4);
    CHECK_THROWS_AS(parse_group_spec("Q8"), std::invalid_argument);
}

TEST_CASE("report JSON carries totals as decimal strings") {
    auto rep = count_homs(trefoil_presentation(TrefoilVariant::Ac, Chirality::Right),
                          *symmetric_group(3), Strategy::Pruned);
    auto j = rep.to_json();
    CHECK(j["total"] == "12");
    CHECK(j["schema"] == "1");
}
