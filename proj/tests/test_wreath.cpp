#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "knothom/wreath.hpp"

using namespace knothom;

namespace {

// the worked H(3,5,2) elements: alpha = ((rho, rho^2 sigma, rho^3, rho^4 sigma), a-hat)
// with a-hat = (0 1 2)(inf), beta = ((rho^3, rho, rho^4, sigma), b-hat) with
// b-hat = (0 inf)(1 2)
struct Worked {
    std::shared_ptr<const WreathGroup> W;
    WreathElement alpha, beta;

    Worked() {
        W = WreathGroup::make(3, 5, 2);
        const DqrGroup& D = W->base();
        auto el = [&](const char* s) { return D.parse(s); };
        alpha = W->make_element({el("rho"), el("rho^2 sigma"), el("rho^3"), el("rho^4 sigma")},
                                W->top().from_matrix(1, 0, 1, 1));
        beta = W->make_element({el("rho^3"), el("rho"), el("rho^4"), el("sigma")},
                               W->top().from_matrix(0, -1, 1, 0));
    }
};

}  // namespace

TEST_CASE("worked example: products, inverses, abelianisations") {
    Worked w;
    const WreathGroup& W = *w.W;
    const DqrGroup& D = W.base();
    auto el = [&](const char* s) { return D.parse(s); };

    WreathElement gamma = W.mul(w.alpha, w.beta);
    WreathElement gamma_expected =
        W.make_element({el("rho^2"), el("rho^3 sigma"), el("rho"), el("rho^4")},
                       W.top().from_matrix(0, -1, 1, -1));
    CHECK(gamma == gamma_expected);

    WreathElement alpha_inv_expected =
        W.make_element({el("rho^2"), el("rho^4"), el("rho^2 sigma"), el("rho^4 sigma")},
                       W.top().inv(W.top().from_matrix(1, 0, 1, 1)));
    CHECK(W.inv(w.alpha) == alpha_inv_expected);
    CHECK(W.mul(w.alpha, W.inv(w.alpha)) == W.identity());

    CHECK(W.total_shift(w.alpha) == 0);
    CHECK(W.total_shift(w.beta) == 1);
    CHECK(W.total_shift(gamma) == 1);
    CHECK(W.shift_vector(w.alpha) == std::vector<int>{0, 1, 0, 1});

    // delta = ((rho^3, rho, 1, rho^3), .) has net rotation rho^2
    WreathElement delta = W.make_element({el("rho^3"), el("rho"), el("1"), el("rho^3")},
                                         W.top().identity());
    CHECK(W.total_v(delta) == 2);

    // the cycle-product beta_0 beta_inf = rho^3 sigma
    CHECK(W.cycle_product(w.beta, 0) == el("rho^3 sigma"));
    CHECK(W.cycle_product(W.identity(), 2) == D.identity());
    // alpha's cycle-product at 0 runs over the 3-cycle
    CHECK(W.cycle_product(w.alpha, 0) == D.mul(D.mul(el("rho"), el("rho^2 sigma")), el("rho^3")));
}

TEST_CASE("standard form recognition and construction") {
    Worked w;
    const WreathGroup& W = *w.W;
    const DqrGroup& D = W.base();
    auto el = [&](const char* s) { return D.parse(s); };
    std::uint16_t a_hat = W.top().from_matrix(1, 0, 1, 1);

    CHECK(W.is_standard_form(W.identity()));
    CHECK(W.is_reduced_standard_form(W.identity()));
    WreathElement std_alpha = W.make_element(
        {el("sigma"), el("sigma"), el("sigma"), el("rho^4 sigma")}, a_hat);
    CHECK(W.is_standard_form(std_alpha));
    WreathElement not_std = W.make_element({el("rho"), el("1"), el("1"), el("1")}, a_hat);
    CHECK_FALSE(W.is_standard_form(not_std));

    // alpha is conjugate to ((sigma, sigma, sigma, rho^4 sigma), a-hat), and the
    // deterministic orbit-representative rule produces exactly that element
    auto cert = W.to_reduced_standard_form(w.alpha);
    CHECK(cert.gamma == std_alpha);
    CHECK(cert.gamma.top == w.alpha.top);
    CHECK(W.conj(w.alpha, cert.conjugator) == cert.gamma);
    CHECK(cert.orbit_reps == std::vector<std::uint32_t>{0, 3});

    // a fixed point of the procedure
    auto cert2 = W.to_reduced_standard_form(std_alpha);
    CHECK(cert2.gamma == std_alpha);

    // beta cannot be conjugated to standard form: its cycle-product has no
    // square root in D(5,2)
    CHECK_THROWS_AS(W.to_reduced_standard_form(w.beta), StandardFormError);
    try {
        W.to_reduced_standard_form(w.beta);
    } catch (const StandardFormError& e) {
        CHECK(e.cycle == std::vector<std::uint32_t>{0, 3});
        CHECK(e.length == 2);
        CHECK(e.prod_order == 2);
    }
}

TEST_CASE("conjugation into the xi-wreath subgroup") {
    Worked w;
    const WreathGroup& W = *w.W;
    const DqrGroup& D = W.base();
    auto el = [&](const char* s) { return D.parse(s); };
    std::uint16_t a_hat = W.top().from_matrix(1, 0, 1, 1);

    // alpha conjugates further to ((sigma, sigma, sigma, sigma), a-hat)
    auto std_cert = W.to_reduced_standard_form(w.alpha);
    auto xi_cert = W.conjugate_into_xi_wreath(std_cert.gamma);
    CHECK(xi_cert.gamma == W.constant_xi(1, a_hat));
    CHECK(W.conj(std_cert.gamma, xi_cert.conjugator) == xi_cert.gamma);

    // already inside the subgroup: unchanged
    auto again = W.conjugate_into_xi_wreath(xi_cert.gamma);
    CHECK(again.gamma == xi_cert.gamma);

    WreathElement order_q = W.make_element({el("rho"), el("rho"), el("rho"), el("rho")},
                                           W.top().identity());
    CHECK_THROWS_AS(W.conjugate_into_xi_wreath(order_q), std::invalid_argument);
}

TEST_CASE("homomorphism properties of the projections, sampled") {
    Worked w;
    const WreathGroup& W = *w.W;
    std::mt19937_64 rng(7);
    for (int t = 0; t < 300; ++t) {
        WreathElement x = W.random_element(rng), y = W.random_element(rng);
        WreathElement xy = W.mul(x, y);
        CHECK(xy.top == W.top().mul(x.top, y.top));
        CHECK(W.total_shift(xy) == (W.total_shift(x) + W.total_shift(y)) % W.base().r());
        CHECK(W.mul(W.mul(x, y), w.alpha) == W.mul(x, W.mul(y, w.alpha)));
    }
}

TEST_CASE("cycle-product shift law pi_{i.t}(a) = a_i^-1 pi_i(a) a_i") {
    auto W = WreathGroup::make(3, 2, 5);
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        WreathElement a = W->random_element(rng);
        for (std::uint32_t i = 0; i < W->points(); ++i) {
            std::uint32_t next = W->top().act(i, a.top);
            CHECK(W->cycle_product(a, next) ==
                  W->base().conj(W->cycle_product(a, i), W->base().inv(a.base[i])));
        }
    }
}

TEST_CASE("power identity per point") {
    auto W = WreathGroup::make(3, 5, 2);
    std::mt19937_64 rng(13);
    for (int t = 0; t < 200; ++t) {
        WreathElement g = W->random_element(rng);
        for (long long m : {1, 2, 3, 6})
            for (const auto& pt : W->check_power_cycle_products(g, m)) CHECK(pt.pass);
        // trivial-top elements reduce to the componentwise power
        WreathElement flat = W->random_element(rng);
        flat.top = W->top().identity();
        WreathElement cube = W->pow(flat, 3);
        for (std::uint32_t i = 0; i < W->points(); ++i)
            CHECK(cube.base[i] == W->base().pow(flat.base[i], 3));
    }
}

TEST_CASE("trivial-top centraliser enumeration") {
    auto W = WreathGroup::make(3, 2, 5);
    const DqrGroup& D = W->base();
    // the standard-form meridian of the (3,2,5) demonstration
    WreathElement alpha = W->constant_xi(3, W->top().from_matrix(1, 0, 1, 1));
    alpha.base[3] = D.identity();
    CHECK(W->trivial_top_centralizer_size(alpha) == 400);  // 5 on the 3-cycle, 80 at inf
    auto centre = W->trivial_top_centralizer(alpha);
    CHECK(centre.size() == 400);
    for (const auto& b : centre) {
        CHECK(b.top == W->top().identity());
        CHECK(W->commute(b, alpha));
    }
    WreathElement member = W->constant_xi(1, W->top().identity());
    member.base[3] = D.identity();
    CHECK(std::find(centre.begin(), centre.end(), member) != centre.end());
    CHECK(W->commute(member, alpha));

    WreathElement outside = alpha;
    outside.base[0].v = 1;  // no longer inside the xi-wreath subgroup
    CHECK_THROWS_AS(W->trivial_top_centralizer(outside), std::invalid_argument);
}

TEST_CASE("serialisation round trip") {
    Worked w;
    const WreathGroup& W = *w.W;
    auto j = W.to_json(w.alpha);
    CHECK(W.from_json(j) == w.alpha);
    // string-alias entries are accepted on input
    nlohmann::json alias = {{"base", {"rho", "rho^2*sigma", "rho^3", "rho^4*sigma"}},
                            {"top", "[[1,0],[1,1]]"}};
    CHECK(W.from_json(alias) == w.alpha);
}

TEST_CASE("error paths") {
    CHECK_THROWS_AS(WreathGroup::make(4, 5, 2), std::invalid_argument);
    CHECK_THROWS_AS(WreathGroup::make(5, 5, 2), std::invalid_argument);
    auto W = WreathGroup::make(3, 5, 2);
    CHECK_THROWS_AS(W->make_element({}, 0), std::invalid_argument);
    WreathElement with_shift = W->constant_xi(1, W->top().identity());
    CHECK_THROWS_AS(W->total_v(with_shift), std::invalid_argument);
}
