#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "knothom/theorem.hpp"

#include "json.hpp"

namespace knothom {

struct VerificationReport {
    std::string check;
    nlohmann::json params;
    std::uint64_t instances_checked = 0;
    std::vector<std::string> counterexamples;
    std::vector<std::string> notes;
    double wall_ms = 0;

    bool ok() const { return counterexamples.empty(); }
    nlohmann::json to_json() const;
};

struct VerifyOptions {
    int workers = 1;
    // test-harness hook: corrupt the conjugacy closed form so the failure
    // path of the suites is exercised end to end
    bool inject_bug = false;
};

/// Exhaustive check of the D(q,r) structure lemma: orders, commuting pairs,
/// conjugacy closed forms, and the braid-pair condition (whose failure is
/// expected, and asserted, exactly for {q,r} = {2,3}).
VerificationReport verify_dqr_lemma(int q, int r, const VerifyOptions& opts = {});

/// x^3 = y^2 in PSL(2,q) forces x^3 = y^2 = 1 or the canonical witness
/// z = y x^-1 with z^2 = x, z^3 = y; scans all |PSL|^2 pairs.
VerificationReport verify_dichotomy(int q, const VerifyOptions& opts = {});

/// Pairs with x^3 = y^2 = 1, no square/cube witness, and ord(yx^-1) > 6
/// generate the whole group and act transitively on the projective line.
VerificationReport verify_transitivity(int p, const VerifyOptions& opts = {});

/// Upper-triangular refinement: X^3 = Y^2 in SL(2,q) with a^2 - ab + b^2 != 0
/// admits an upper-triangular Z with Z^2 = X, Z^3 = Y.
VerificationReport verify_caseii_remark(int q, const VerifyOptions& opts = {});

/// Seeded sampling of the wreath lemmas: standard-form certificates,
/// conjugation into the xi-wreath subgroup, centraliser characterisation,
/// and the power identity at m in {1,2,3} (plus m = n, with the n-th power
/// pipeline and top-order constraints, when theorem parameters are supplied).
VerificationReport verify_wreath_lemmas(int p, int q, int r, std::optional<int> n,
                                        std::uint64_t samples, std::uint64_t seed,
                                        const VerifyOptions& opts = {});

/// The exceptional-case paragraph: with every alpha_i trivial and p+1 = 0 mod
/// q, rho(x^3) commutes with every n-th root of alpha.
VerificationReport verify_exceptional_case(const Params& params, std::uint64_t pair_budget,
                                           std::uint64_t seed, const VerifyOptions& opts = {});

/// All suites at desk-scale defaults.
std::vector<VerificationReport> verify_all(std::uint64_t samples, std::uint64_t seed,
                                           const VerifyOptions& opts = {});

}  // namespace knothom
