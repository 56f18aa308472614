#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "knothom/dqr.hpp"
#include "knothom/psl.hpp"

#include "json.hpp"

namespace knothom {

/// Element of H(p,q,r) = D(q,r) wr PSL(2,p): a base tuple indexed by the
/// projective points (0, ..., p-1, inf) and a top PSL element id.
struct WreathElement {
    std::vector<DqrElement> base;
    std::uint16_t top = 0;
    bool operator==(const WreathElement&) const = default;
};

/// Conjugation certificate: gamma = conjugator * source * conjugator^-1,
/// re-multiplied on construction.
struct StandardFormCertificate {
    WreathElement gamma;
    WreathElement conjugator;
    std::vector<std::uint32_t> orbit_reps;
};

/// Raised when the standard-form hypothesis fails: some cycle length shares a
/// factor with the order of its cycle-product.
struct StandardFormError : std::runtime_error {
    StandardFormError(std::string msg, std::vector<std::uint32_t> cycle_, int length_, int order_)
        : std::runtime_error(std::move(msg)), cycle(std::move(cycle_)), length(length_),
          prod_order(order_) {}
    std::vector<std::uint32_t> cycle;
    int length;
    int prod_order;
};

struct PowerCheckPoint {
    std::uint32_t point;
    bool pass;
    DqrElement direct;   // cycle product of gamma^m at the point
    DqrElement derived;  // (cycle product of gamma)^(m / gcd(l, m))
};

/// The wreath product H(p,q,r) over the projective line of F_p.
class WreathGroup {
public:
    static std::shared_ptr<const WreathGroup> make(
        int p, int q, int r, std::uint64_t max_base_order = DqrGroup::kDefaultMaxOrder);

    int p() const { return p_; }
    std::size_t points() const { return static_cast<std::size_t>(p_) + 1; }
    const DqrGroup& base() const { return *base_; }
    std::shared_ptr<const DqrGroup> base_ptr() const { return base_; }
    const PslGroup& top() const { return *top_; }
    std::shared_ptr<const PslGroup> top_ptr() const { return top_; }
    DqrElement xi() const { return base_->xi(); }

    WreathElement identity() const;
    WreathElement make_element(std::vector<DqrElement> base_tuple, std::uint16_t top) const;
    /// all base entries equal to xi^e
    WreathElement constant_xi(long long e, std::uint16_t top) const;

    WreathElement mul(const WreathElement& a, const WreathElement& b) const;
    WreathElement inv(const WreathElement& a) const;
    WreathElement pow(const WreathElement& a, long long e) const;
    /// conjugate of g by h: h g h^-1
    WreathElement conj(const WreathElement& g, const WreathElement& h) const;
    bool commute(const WreathElement& a, const WreathElement& b) const;

    /// ordered product of base entries along the top-cycle through `point`
    DqrElement cycle_product(const WreathElement& a, std::uint32_t point) const;
    int cycle_length(std::uint16_t top, std::uint32_t point) const;
    /// disjoint cycles of a top element; each starts at its smallest point,
    /// cycles ordered by that representative
    std::vector<std::vector<std::uint32_t>> top_orbits(std::uint16_t top) const;

    bool is_standard_form(const WreathElement& a) const;
    bool is_reduced_standard_form(const WreathElement& a) const;

    /// Conjugates to reduced standard form with an explicit conjugator
    /// (requires each cycle length co-prime to its cycle-product order).
    StandardFormCertificate to_reduced_standard_form(const WreathElement& a) const;

    /// Conjugates a standard-form element with base orders in {1, r} into the
    /// subgroup <xi> wr PSL (the A(p,r) of the construction).
    StandardFormCertificate conjugate_into_xi_wreath(const WreathElement& a) const;
    bool in_xi_wreath(const WreathElement& a) const;

    /// the [.] map: per-point shifts mod r plus the untouched top
    std::vector<int> shift_vector(const WreathElement& a) const;
    /// the [[.]] abelianisation to Z/r
    int total_shift(const WreathElement& a) const;
    /// the ||.|| abelianisation of V wr PSL to V; requires all shifts zero
    std::uint32_t total_v(const WreathElement& a) const;

    /// All beta with trivial top commuting with alpha, for alpha in the
    /// xi-wreath subgroup in reduced standard form; every returned element is
    /// re-verified to commute by direct multiplication.
    std::vector<WreathElement> trivial_top_centralizer(const WreathElement& alpha,
                                                       std::uint64_t budget = 1u << 22) const;
    std::uint64_t trivial_top_centralizer_size(const WreathElement& alpha) const;

    /// Per-point check of the power identity
    /// pi_i(gamma^m) = pi_i(gamma)^{m / gcd(l_i, m)}.
    std::vector<PowerCheckPoint> check_power_cycle_products(const WreathElement& gamma,
                                                            long long m) const;

    WreathElement random_element(std::mt19937_64& rng) const;

    nlohmann::json to_json(const WreathElement& a) const;
    WreathElement from_json(const nlohmann::json& j) const;
    std::string format(const WreathElement& a) const;

private:
    WreathGroup(int p, std::shared_ptr<const DqrGroup> base, std::shared_ptr<const PslGroup> top);

    int p_;
    std::shared_ptr<const DqrGroup> base_;
    std::shared_ptr<const PslGroup> top_;
};

}  // namespace knothom
