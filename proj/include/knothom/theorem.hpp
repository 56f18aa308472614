#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "knothom/homcount.hpp"
#include "knothom/wreath.hpp"

#include "json.hpp"

namespace knothom {

/// Theorem parameters: q | n, gcd(p,n) = gcd(r,n) = 1, r coprime to |PSL(2,p)|.
struct Params {
    int n = 0, p = 0, q = 0, r = 0;
    nlohmann::json to_json() const;
};

/// Arithmetic constraints only (no group is built).
void validate_params(const Params& params);

/// Prime selection per the strategy section; for 30 | n the congruence
/// candidates are re-verified by an exhaustive PSL(2,p) order scan.
Params select_primes(int n, int prime_search_bound = 10000);

/// Element orders of PSL(2,p) by direct scan without group tables; usable for
/// the larger p arising in the 30 | n search.
std::vector<int> psl_orders_prime(int p, int max_p = 1000);

struct TheoremContext {
    Params params;
    std::shared_ptr<const WreathGroup> group;
};

TheoremContext make_context(const Params& params,
                            std::uint64_t max_base_order = DqrGroup::kDefaultMaxOrder);

/// A hom G -> H given by the images of a, c, f (meridian image shared by both
/// trefoil factors), plus a candidate n-th root of the meridian image.
/// Constructing one re-verifies the braid relations and eta^n = a.
struct MapRootPair {
    WreathElement a_img, c_img, f_img, eta;
};

MapRootPair make_map_root_pair(const TheoremContext& ctx, WreathElement a, WreathElement c,
                               WreathElement f, WreathElement eta);
nlohmann::json pair_to_json(const TheoremContext& ctx, const MapRootPair& pair);
MapRootPair pair_from_json(const TheoremContext& ctx, const nlohmann::json& j);

/// Per-cycle root constraints for a fixed top root tau: on a tau-cycle of
/// length l with d = gcd(l, n), the d free entries multiply to alpha_j^{d/n}
/// in <xi> (alpha_j != 1) or land in V (alpha_j = 1).
struct CycleFamily {
    std::vector<std::uint32_t> cycle;
    int length = 0;
    int d = 1;
    bool zero_case = false;
    int forced_exponent = 0;  // nonzero case: [alpha_j] * d / n mod r
    mpz_class solutions;
};

struct RootFamily {
    std::uint16_t tau = 0;
    bool constant_on_tau_orbits = false;
    std::vector<CycleFamily> cycles;
    mpz_class total = 0;
};

/// All root families of alpha (one per tau with tau^n = top of alpha).
/// Requires alpha in the xi-wreath subgroup, reduced standard form, top != 1.
std::vector<RootFamily> nth_roots(const TheoremContext& ctx, const WreathElement& alpha);

/// Materialises a family; every eta is re-verified by direct multiplication.
std::vector<WreathElement> enumerate_root_family(const TheoremContext& ctx,
                                                 const WreathElement& alpha,
                                                 const RootFamily& family,
                                                 std::uint64_t budget = 1u << 22);

/// Independent brute-force oracle: scans every base tuple over the fixed top.
std::vector<WreathElement> nth_roots_oracle(const TheoremContext& ctx,
                                            const WreathElement& alpha, std::uint16_t tau,
                                            const SearchConfig& config = {});

enum class LongitudeBranch { Power, Constant, Counterexample };

struct LongitudeReport {
    LongitudeBranch branch = LongitudeBranch::Counterexample;
    WreathElement epsilon;
    int expected_shift = 0;  // 6 [[alpha]] / (p+1) mod r
    std::vector<std::string> failures;
};

/// Classifies epsilon = rho(x^3) for a hom T -> H with rho(a) = alpha:
/// either the power branch epsilon = alpha^6, or the constant branch with all
/// five listed properties; anything else comes back as a counterexample.
LongitudeReport longitude_classify(const TheoremContext& ctx, const WreathElement& a_img,
                                   const WreathElement& c_img);

struct OrbitReport {
    std::uint64_t calpha_size = 0, orbit_size = 0, stabilizer_size = 0;
    std::uint64_t sk_count = 0, gk_count = 0;
    nlohmann::json to_json() const;
};

/// Enumerates the centraliser action beta . (rho_c, rho_f) = (rho_c,
/// beta rho_f beta^-1) on distinct orbit members and counts SK/GK
/// compatibility by direct multiplication. Throws if gk_count > sk_count
/// (that would falsify statement I or reveal a bug).
OrbitReport orbit_compatibility(const TheoremContext& ctx, const MapRootPair& pair,
                                std::uint64_t budget = 1u << 22);

struct Realization {
    WreathElement a_img, c_img, f_img, epsilon, delta;
    std::vector<WreathElement> roots;  // eta_v indexed by v in field order
};

/// The explicit SK witness: chi_i = xi^2, psi = (xi^4 at 0, xi^2 at inf, xi^3
/// elsewhere) over the standard tops, conjugated so that rho(a) is the
/// standard-form meridian; every eta_v is re-verified.
Realization realization(const TheoremContext& ctx);

struct TrivialTopReport {
    bool forced_images_hold = false;
    std::string violation;
    std::uint64_t roots_checked = 0;
    bool all_compatible_both = false;
};

/// The top-trivial regime: verifies rho(f) = rho(c) = rho(a) and that every
/// supplied root gives a pair compatible for both knots.
TrivialTopReport trivial_top_analysis(const TheoremContext& ctx, const WreathElement& a_img,
                                      const WreathElement& c_img, const WreathElement& f_img,
                                      std::span<const WreathElement> roots = {});

}  // namespace knothom
