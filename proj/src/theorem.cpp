#include "knothom/theorem.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

#include "knothom/util.hpp"

namespace knothom {

nlohmann::json Params::to_json() const {
    return {{"n", n}, {"p", p}, {"q", q}, {"r", r}};
}

namespace {

std::uint64_t psl_order_formula(int p) {
    std::uint64_t pp = p;
    return pp * (pp - 1) * (pp + 1) / (p == 2 ? 1 : 2);
}

}  // namespace

void validate_params(const Params& params) {
    const auto [n, p, q, r] = params;
    if (n < 2) throw std::invalid_argument("params: n must be >= 2");
    for (int x : {p, q, r})
        if (!is_prime(x)) throw std::invalid_argument("params: p, q, r must be prime");
    if (p == q || q == r || p == r)
        throw std::invalid_argument("params: p, q, r must be distinct");
    if (n % q != 0) throw std::invalid_argument("params: q must divide n");
    if (std::gcd(p, n) != 1) throw std::invalid_argument("params: p must be co-prime to n");
    if (std::gcd(r, n) != 1) throw std::invalid_argument("params: r must be co-prime to n");
    if (psl_order_formula(p) % static_cast<std::uint64_t>(r) == 0)
        throw std::invalid_argument("params: r must not divide |PSL(2,p)|");
    if (std::gcd(r, 6) != 1)
        throw std::logic_error("params: r coprime to |PSL(2,p)| forces r coprime to 6");
}

std::vector<int> psl_orders_prime(int p, int max_p) {
    if (!is_prime(p) || p > max_p)
        throw std::invalid_argument("psl_orders_prime: p out of range");
    auto mul2 = [p](const std::array<int, 4>& x, const std::array<int, 4>& y) {
        return std::array<int, 4>{
            (x[0] * y[0] + x[1] * y[2]) % p, (x[0] * y[1] + x[1] * y[3]) % p,
            (x[2] * y[0] + x[3] * y[2]) % p, (x[2] * y[1] + x[3] * y[3]) % p};
    };
    auto canonical = [p](const std::array<int, 4>& x) {
        if (p == 2) return true;
        for (int e : x) {
            if (e == 0) continue;
            return e <= (p - 1) / 2;
        }
        return true;
    };
    std::set<int> orders;
    const std::array<int, 4> id{1, 0, 0, 1};
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
            for (int c = 0; c < p; ++c)
                for (int d = 0; d < p; ++d) {
                    if (mod_reduce(a * d - b * c, p) != 1) continue;
                    std::array<int, 4> m{a, b, c, d};
                    if (!canonical(m)) continue;
                    std::array<int, 4> acc = m;
                    int ord = 1;
                    auto is_id = [&](const std::array<int, 4>& x) {
                        if (p == 2) return x == id;
                        return x == id || (x[0] == p - 1 && x[1] == 0 && x[2] == 0 && x[3] == p - 1);
                    };
                    while (!is_id(acc)) {
                        acc = mul2(acc, m);
                        ++ord;
                    }
                    orders.insert(ord);
                }
    return {orders.begin(), orders.end()};
}

Params select_primes(int n, int prime_search_bound) {
    if (n < 2) throw std::invalid_argument("select_primes: n must be >= 2");
    Params out;
    out.n = n;
    if (n % 30 != 0) {
        for (int p = 2;; ++p)
            if (is_prime(p) && std::gcd(p, n) == 1) {
                out.p = p;
                break;
            }
        if (out.p > 5)
            throw std::logic_error("select_primes: least co-prime prime exceeded 5 for 30 !| n");
        for (int q = 2;; ++q)
            if (is_prime(q) && n % q == 0) {
                out.q = q;
                break;
            }
    } else {
        for (int q = 5;; ++q)
            if (is_prime(q) && n % q == 0) {
                out.q = q;
                break;
            }
        bool found = false;
        for (int p = 2; p <= prime_search_bound; ++p) {
            if (!is_prime(p) || std::gcd(p, n) != 1) continue;
            int m8 = p % 8, m5 = p % 5, m9 = p % 9, mq = p % out.q;
            if (m8 != 3 && m8 != 5) continue;
            if (m5 == 0 || m5 == 1 || m5 == 4) continue;
            if (m9 == 0 || m9 == 1 || m9 == 8) continue;
            if (mq == 0 || mq == 1 || mq == out.q - 1) continue;
            // the congruences are sufficient; re-verify by exhaustive scan
            auto orders = psl_orders_prime(p);
            auto has = [&](int m) {
                return std::find(orders.begin(), orders.end(), m) != orders.end();
            };
            if (has(4) || has(5) || has(9) || has(out.q))
                throw std::logic_error(
                    "select_primes: congruence-selected p failed the order scan");
            out.p = p;
            found = true;
            break;
        }
        if (!found)
            throw std::runtime_error("select_primes: no admissible p within search bound " +
                                     std::to_string(prime_search_bound));
    }
    std::uint64_t psl_order = psl_order_formula(out.p);
    for (int r = 2;; ++r)
        if (is_prime(r) && std::gcd(r, n) == 1 &&
            psl_order % static_cast<std::uint64_t>(r) != 0) {
            out.r = r;
            break;
        }
    validate_params(out);
    return out;
}

TheoremContext make_context(const Params& params, std::uint64_t max_base_order) {
    validate_params(params);
    TheoremContext ctx;
    ctx.params = params;
    ctx.group = WreathGroup::make(params.p, params.q, params.r, max_base_order);
    const PslGroup& psl = ctx.group->top();
    if (params.n % 30 == 0) {
        for (int m : {4, 5, 9, params.q})
            if (psl.has_element_of_order(m))
                throw std::logic_error("make_context: PSL(2,p) has a forbidden element order");
    }
    // The divisibility constraints alone do not pin down the analysis regime:
    // every n-th root tau of a nontrivial n-th power must have order co-prime
    // to qr (true at the selected parameters; verified here, not assumed).
    for (std::uint32_t t = 0; t < psl.order(); ++t) {
        auto tau = static_cast<std::uint16_t>(t);
        if (psl.pow(tau, params.n) == psl.identity()) continue;
        int ord = psl.element_order(tau);
        if (std::gcd(ord, params.q * params.r) != 1)
            throw std::invalid_argument(
                "make_context: PSL(2,p) has an n-th root of order " + std::to_string(ord) +
                " not co-prime to qr; these parameters are outside the analysed regime");
    }
    return ctx;
}

MapRootPair make_map_root_pair(const TheoremContext& ctx, WreathElement a, WreathElement c,
                               WreathElement f, WreathElement eta) {
    const WreathGroup& W = *ctx.group;
    auto braid = [&](const WreathElement& x, const WreathElement& y) {
        return W.mul(W.mul(x, y), x) == W.mul(W.mul(y, x), y);
    };
    if (!braid(a, c)) throw std::invalid_argument("map-root pair: aca = cac fails");
    if (!braid(a, f)) throw std::invalid_argument("map-root pair: afa = faf fails");
    if (!(W.pow(eta, ctx.params.n) == a))
        throw std::invalid_argument("map-root pair: eta^n != image of a");
    return {std::move(a), std::move(c), std::move(f), std::move(eta)};
}

nlohmann::json pair_to_json(const TheoremContext& ctx, const MapRootPair& pair) {
    const WreathGroup& W = *ctx.group;
    return {{"params", ctx.params.to_json()},
            {"rho", {{"a", W.to_json(pair.a_img)}, {"c", W.to_json(pair.c_img)},
                     {"f", W.to_json(pair.f_img)}}},
            {"eta", W.to_json(pair.eta)}};
}

MapRootPair pair_from_json(const TheoremContext& ctx, const nlohmann::json& j) {
    const WreathGroup& W = *ctx.group;
    return make_map_root_pair(ctx, W.from_json(j.at("rho").at("a")),
                              W.from_json(j.at("rho").at("c")),
                              W.from_json(j.at("rho").at("f")), W.from_json(j.at("eta")));
}

std::vector<RootFamily> nth_roots(const TheoremContext& ctx, const WreathElement& alpha) {
    const WreathGroup& W = *ctx.group;
    const PslGroup& psl = W.top();
    const DqrGroup& D = W.base();
    const int n = ctx.params.n, r = ctx.params.r;
    if (!W.in_xi_wreath(alpha) || !W.is_reduced_standard_form(alpha))
        throw std::invalid_argument(
            "nth_roots: alpha must be in the xi-wreath subgroup in reduced standard form");
    if (alpha.top == psl.identity())
        throw std::invalid_argument("nth_roots: top of alpha must be nontrivial");

    std::vector<RootFamily> out;
    for (std::uint32_t t = 0; t < psl.order(); ++t) {
        auto tau = static_cast<std::uint16_t>(t);
        if (psl.pow(tau, n) != alpha.top) continue;
        RootFamily fam;
        fam.tau = tau;
        auto orbits = W.top_orbits(tau);
        fam.constant_on_tau_orbits = true;
        for (const auto& cyc : orbits)
            for (auto pt : cyc)
                if (!(alpha.base[pt] == alpha.base[cyc[0]])) fam.constant_on_tau_orbits = false;
        if (!fam.constant_on_tau_orbits) {
            fam.total = 0;
            out.push_back(std::move(fam));
            continue;
        }
        fam.total = 1;
        for (const auto& cyc : orbits) {
            CycleFamily cf;
            cf.cycle = cyc;
            cf.length = static_cast<int>(cyc.size());
            cf.d = static_cast<int>(std::gcd(static_cast<long long>(cf.length), static_cast<long long>(n)));
            DqrElement aj = alpha.base[cyc[0]];
            if (aj == D.identity()) {
                cf.zero_case = true;
                mpz_class dq(D.order());
                mpz_class count = 1;
                for (int j = 0; j + 1 < cf.d; ++j) count *= dq;
                count *= mpz_class(D.v_size());
                cf.solutions = count;
            } else {
                cf.zero_case = false;
                cf.forced_exponent = static_cast<int>(
                    mod_reduce(static_cast<long long>(D.shift(aj)) * cf.d % r *
                                   mod_inverse(n, r),
                               r));
                mpz_class count = 1;
                for (int j = 0; j + 1 < cf.d; ++j) count *= r;
                cf.solutions = count;
            }
            fam.total *= cf.solutions;
            fam.cycles.push_back(std::move(cf));
        }
        out.push_back(std::move(fam));
    }
    return out;
}

std::vector<WreathElement> enumerate_root_family(const TheoremContext& ctx,
                                                 const WreathElement& alpha,
                                                 const RootFamily& family,
                                                 std::uint64_t budget) {
    const WreathGroup& W = *ctx.group;
    const DqrGroup& D = W.base();
    const int r = ctx.params.r;
    if (!family.constant_on_tau_orbits) return {};
    if (family.total > budget)
        throw BudgetExceeded("enumerate_root_family: family size exceeds budget");

    // per-cycle solution lists; each entry holds the d values on the free slots
    std::vector<std::vector<std::vector<DqrElement>>> cycle_solutions;
    for (const auto& cf : family.cycles) {
        std::vector<std::vector<DqrElement>> sols;
        if (!cf.zero_case) {
            std::uint64_t free_count = 1;
            for (int j = 0; j + 1 < cf.d; ++j) free_count *= r;
            for (std::uint64_t idx = 0; idx < free_count; ++idx) {
                std::vector<DqrElement> vals(cf.d);
                std::uint64_t rest = idx;
                long long sum = 0;
                for (int j = 0; j + 1 < cf.d; ++j) {
                    auto e = static_cast<long long>(rest % r);
                    rest /= r;
                    vals[j] = D.xi_pow(e);
                    sum += e;
                }
                vals[cf.d - 1] = D.xi_pow(cf.forced_exponent - sum);
                sols.push_back(std::move(vals));
            }
        } else {
            std::uint64_t free_count = 1;
            for (int j = 0; j + 1 < cf.d; ++j) free_count *= D.order();
            for (std::uint64_t idx = 0; idx < free_count; ++idx) {
                std::vector<DqrElement> prefix(cf.d - 1);
                std::uint64_t rest = idx;
                DqrElement prod = D.identity();
                for (int j = 0; j + 2 < cf.d + 1; ++j) {
                    prefix[j] = D.element(rest % D.order());
                    rest /= D.order();
                    prod = D.mul(prod, prefix[j]);
                }
                auto last_shift = static_cast<std::uint32_t>(
                    mod_reduce(-static_cast<long long>(prod.i), r));
                for (std::uint64_t w = 0; w < D.v_size(); ++w) {
                    std::vector<DqrElement> vals = prefix;
                    vals.push_back({static_cast<std::uint32_t>(w), last_shift});
                    sols.push_back(std::move(vals));
                }
            }
        }
        cycle_solutions.push_back(std::move(sols));
    }

    // cartesian product over cycles, first cycle most significant
    std::vector<WreathElement> out;
    std::vector<std::size_t> digit(cycle_solutions.size(), 0);
    while (true) {
        WreathElement eta = W.identity();
        eta.top = family.tau;
        for (std::size_t ci = 0; ci < family.cycles.size(); ++ci) {
            const auto& cf = family.cycles[ci];
            const auto& vals = cycle_solutions[ci][digit[ci]];
            for (std::size_t m = 0; m < cf.cycle.size(); ++m)
                eta.base[cf.cycle[m]] = vals[m % cf.d];
        }
        if (!(W.pow(eta, ctx.params.n) == alpha))
            throw std::logic_error("enumerate_root_family: candidate failed eta^n = alpha");
        out.push_back(std::move(eta));
        std::size_t ci = cycle_solutions.size();
        while (ci-- > 0) {
            if (++digit[ci] < cycle_solutions[ci].size()) break;
            digit[ci] = 0;
            if (ci == 0) return out;
        }
        if (cycle_solutions.empty()) return out;
    }
}

std::vector<WreathElement> nth_roots_oracle(const TheoremContext& ctx,
                                            const WreathElement& alpha, std::uint16_t tau,
                                            const SearchConfig& config) {
    const WreathGroup& W = *ctx.group;
    const PslGroup& psl = W.top();
    const DqrGroup& D = W.base();
    const int n = ctx.params.n;
    if (psl.pow(tau, n) != alpha.top) return {};

    const std::size_t pts = W.points();
    std::uint64_t tuples = 1;
    for (std::size_t j = 0; j < pts; ++j) {
        tuples *= D.order();
        if (tuples > config.budget())
            throw BudgetExceeded("nth_roots_oracle: tuple scan exceeds node budget");
    }

    // permutations of tau^0 .. tau^{n-1}; (eta^n)_i = prod_k eta_{i.tau^k}
    std::vector<std::vector<std::uint32_t>> tp(n);
    for (int k = 0; k < n; ++k) tp[k] = psl.permutation(psl.pow(tau, k));

    const std::uint64_t dsz = D.order();
    const std::uint64_t per_first = tuples / dsz;
    std::vector<std::vector<WreathElement>> found(dsz);

    parallel_indexed(dsz, config.workers, [&](std::size_t first) {
        std::vector<DqrElement> base(pts);
        base[0] = D.element(first);
        for (std::uint64_t rest = 0; rest < per_first; ++rest) {
            std::uint64_t v = rest;
            for (std::size_t j = pts; j-- > 1;) {
                base[j] = D.element(v % dsz);
                v /= dsz;
            }
            bool ok = true;
            for (std::size_t i = 0; i < pts && ok; ++i) {
                DqrElement acc = base[tp[0][i]];
                for (int k = 1; k < n; ++k) acc = D.mul(acc, base[tp[k][i]]);
                ok = acc == alpha.base[i];
            }
            if (ok) {
                WreathElement eta = W.identity();
                eta.base = base;
                eta.top = tau;
                found[first].push_back(std::move(eta));
            }
        }
    });

    std::vector<WreathElement> out;
    for (auto& chunk : found)
        for (auto& e : chunk) out.push_back(std::move(e));
    return out;
}

LongitudeReport longitude_classify(const TheoremContext& ctx, const WreathElement& a_img,
                                   const WreathElement& c_img) {
    const WreathGroup& W = *ctx.group;
    const DqrGroup& D = W.base();
    const auto [n, p, q, r] = ctx.params;
    if (!(W.mul(W.mul(a_img, c_img), a_img) == W.mul(W.mul(c_img, a_img), c_img)))
        throw std::invalid_argument("longitude_classify: aca = cac fails on the images");
    if (!W.in_xi_wreath(a_img) || !W.is_reduced_standard_form(a_img) ||
        a_img.top == W.top().identity())
        throw std::invalid_argument(
            "longitude_classify: alpha must be xi-wreath, reduced standard, nontrivial top");

    LongitudeReport rep;
    rep.epsilon = W.pow(W.mul(c_img, a_img), 3);  // x = ca
    if (rep.epsilon == W.pow(a_img, 6)) {
        rep.branch = LongitudeBranch::Power;
        return rep;
    }
    const WreathElement& eps = rep.epsilon;
    rep.expected_shift = static_cast<int>(
        mod_reduce(6LL * W.total_shift(a_img) % r * mod_inverse(p + 1, r), r));
    auto fail = [&](const std::string& s) { rep.failures.push_back(s); };
    if (eps.top != W.top().identity()) fail("top of epsilon is nontrivial");
    for (std::uint32_t i = 0; i < W.points(); ++i)
        if (!(eps.base[W.top().act(i, a_img.top)] == eps.base[i])) {
            fail("epsilon not constant on top orbits of alpha");
            break;
        }
    auto cls = D.conjugacy_class(eps.base[0]);
    for (std::uint32_t i = 1; i < W.points(); ++i)
        if (std::find(cls.begin(), cls.end(), eps.base[i]) == cls.end()) {
            fail("conjugacy class of epsilon_i varies over the projective line");
            break;
        }
    for (std::uint32_t i = 0; i < W.points(); ++i)
        if (D.shift(eps.base[i]) != rep.expected_shift) {
            fail("[epsilon_i] != 6[[alpha]]/(p+1)");
            break;
        }
    for (std::uint32_t i = 0; i < W.points(); ++i)
        if (!(a_img.base[i] == D.identity()) &&
            !(eps.base[i] == D.xi_pow(rep.expected_shift))) {
            fail("epsilon_i != xi^{6[[alpha]]/(p+1)} at a point with alpha_i != 1");
            break;
        }
    rep.branch = rep.failures.empty() ? LongitudeBranch::Constant
                                      : LongitudeBranch::Counterexample;
    return rep;
}

nlohmann::json OrbitReport::to_json() const {
    return {{"schema", "1"},         {"kind", "orbit"},
            {"calpha_size", calpha_size}, {"orbit_size", orbit_size},
            {"stabilizer_size", stabilizer_size}, {"sk_count", sk_count},
            {"gk_count", gk_count}};
}

OrbitReport orbit_compatibility(const TheoremContext& ctx, const MapRootPair& pair,
                                std::uint64_t budget) {
    const WreathGroup& W = *ctx.group;
    const WreathElement& alpha = pair.a_img;
    if (!W.in_xi_wreath(alpha) || !W.is_reduced_standard_form(alpha) ||
        alpha.top == W.top().identity())
        throw std::invalid_argument(
            "orbit_compatibility: alpha must be xi-wreath, reduced standard, nontrivial top");

    WreathElement eps = W.pow(W.mul(pair.c_img, alpha), 3);   // rho(x^3), x = ca
    WreathElement delta = W.pow(W.mul(pair.f_img, alpha), 3); // rho(w^3), w = fa

    auto centre = W.trivial_top_centralizer(alpha, budget);
    OrbitReport rep;
    rep.calpha_size = centre.size();

    auto key_of = [&](const WreathElement& e) {
        std::vector<std::uint64_t> k{e.top};
        for (const auto& g : e.base) {
            k.push_back(g.v);
            k.push_back(g.i);
        }
        return k;
    };
    std::set<std::vector<std::uint64_t>> seen;
    for (const auto& beta : centre) {
        WreathElement f_conj = W.conj(pair.f_img, beta);
        if (!seen.insert(key_of(f_conj)).second) continue;
        WreathElement delta_b = W.conj(delta, beta);
        if (W.commute(W.mul(eps, W.inv(delta_b)), pair.eta)) ++rep.sk_count;
        if (W.commute(W.mul(eps, delta_b), pair.eta)) ++rep.gk_count;
    }
    rep.orbit_size = seen.size();
    if (rep.orbit_size == 0 || rep.calpha_size % rep.orbit_size != 0)
        throw std::logic_error("orbit_compatibility: orbit size does not divide |C_alpha|");
    rep.stabilizer_size = rep.calpha_size / rep.orbit_size;
    if (rep.gk_count > rep.sk_count)
        throw std::logic_error(
            "orbit_compatibility: gk_count > sk_count — this falsifies statement I");
    return rep;
}

Realization realization(const TheoremContext& ctx) {
    const WreathGroup& W = *ctx.group;
    const PslGroup& psl = W.top();
    const DqrGroup& D = W.base();
    const auto [n, p, q, r] = ctx.params;

    std::uint16_t top_x = psl.from_matrix(0, -1, 1, 1);
    std::uint16_t top_y = psl.from_matrix(0, -1, 1, 0);
    std::uint16_t top_a = psl.mul(top_y, psl.inv(top_x));
    if (top_a != psl.from_matrix(1, 0, 1, 1))
        throw std::logic_error("realization: unexpected top for the meridian image");

    WreathElement chi = W.constant_xi(2, top_x);
    WreathElement psi = W.constant_xi(3, top_y);
    psi.base[0] = D.xi_pow(4);
    psi.base[W.points() - 1] = D.xi_pow(2);
    if (!(W.pow(chi, 3) == W.pow(psi, 2)))
        throw std::logic_error("realization: chi^3 != psi^2, not a homomorphism");

    WreathElement a_raw = W.mul(psi, W.inv(chi));
    WreathElement a_expected = W.constant_xi(1, top_a);
    a_expected.base[0] = D.xi_pow(2);
    a_expected.base[W.points() - 1] = D.identity();
    if (!(a_raw == a_expected))
        throw std::logic_error("realization: psi chi^-1 disagrees with the displayed value");

    auto cert = W.to_reduced_standard_form(a_raw);
    long long std_exp = mod_reduce(static_cast<long long>(p + 1) * mod_inverse(p, r), r);
    WreathElement alpha = W.constant_xi(std_exp, top_a);
    alpha.base[W.points() - 1] = D.identity();
    if (!(cert.gamma == alpha))
        throw std::logic_error("realization: standard form disagrees with the displayed meridian");

    Realization out;
    out.a_img = cert.gamma;
    WreathElement c_raw = W.mul(chi, W.inv(a_raw));  // c = x a^-1
    out.c_img = W.conj(c_raw, cert.conjugator);
    out.f_img = out.c_img;
    out.epsilon = W.pow(W.mul(out.c_img, out.a_img), 3);
    out.delta = W.pow(W.mul(out.f_img, out.a_img), 3);
    if (!(out.epsilon == W.constant_xi(6, psl.identity())) || !(out.epsilon == out.delta))
        throw std::logic_error("realization: rho(x^3) disagrees with the displayed value");

    long long root_exp =
        mod_reduce(static_cast<long long>(p + 1) * mod_inverse(static_cast<long long>(n) * p % r, r), r);
    long long k = mod_inverse(n, p);
    std::uint16_t tau = psl.pow(top_a, k);
    for (std::uint64_t v = 0; v < D.v_size(); ++v) {
        WreathElement eta = W.constant_xi(root_exp, tau);
        eta.base[W.points() - 1] = DqrElement{static_cast<std::uint32_t>(v), 0};
        if (!(W.pow(eta, n) == out.a_img))
            throw std::logic_error("realization: eta_v^n != alpha");
        out.roots.push_back(std::move(eta));
    }
    return out;
}

TrivialTopReport trivial_top_analysis(const TheoremContext& ctx, const WreathElement& a_img,
                                      const WreathElement& c_img, const WreathElement& f_img,
                                      std::span<const WreathElement> roots) {
    const WreathGroup& W = *ctx.group;
    TrivialTopReport rep;
    if (a_img.top != W.top().identity())
        throw std::invalid_argument("trivial_top_analysis: top of rho(a) must be trivial");
    auto braid = [&](const WreathElement& x, const WreathElement& y) {
        return W.mul(W.mul(x, y), x) == W.mul(W.mul(y, x), y);
    };
    // with a trivial top, the factoring lemma forces rho(f) = rho(c) = rho(a);
    // anything else is reported, not assumed away (it would signal a bug or a
    // {q,r} = {2,3} parameter slip)
    if (!braid(a_img, c_img) || !braid(a_img, f_img) || !(c_img == a_img) ||
        !(f_img == a_img)) {
        rep.forced_images_hold = false;
        rep.violation = "images of c and f are forced to equal the image of a, got a=" +
                        W.format(a_img) + " c=" + W.format(c_img) + " f=" + W.format(f_img);
        return rep;
    }
    rep.forced_images_hold = true;
    WreathElement eps = W.pow(a_img, 6);  // rho(x^3) = rho(w^3) = rho(a)^6
    rep.all_compatible_both = true;
    for (const auto& eta : roots) {
        ++rep.roots_checked;
        if (!(W.pow(eta, ctx.params.n) == a_img))
            throw std::invalid_argument("trivial_top_analysis: supplied eta is not a root");
        bool both = W.commute(eps, eta);
        // epsilon = delta here, so SK needs [eps eps^-1, eta] = 1 (trivial) and
        // GK needs [eps^2, eta] = 1; both reduce to eps commuting with eta
        if (!both || !W.commute(W.mul(eps, eps), eta)) rep.all_compatible_both = false;
    }
    return rep;
}

}  // namespace knothom
