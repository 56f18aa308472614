#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "knothom/ffield.hpp"

namespace knothom {

/// Factors q = p^k and builds F_q; rejects non prime powers.
std::shared_ptr<const Field> make_prime_power_field(
    int q, std::uint64_t max_order = Field::kDefaultMaxOrder);

/// Sign-canonical unimodular 2x2 matrix over F_q, entries as field indices in
/// row order a,b,c,d.
struct PslElement {
    std::array<std::uint32_t, 4> m{0, 0, 0, 0};
    bool operator==(const PslElement&) const = default;
};

/// PSL(2, F_q) with its right action on the projective line.
///
/// The group is fully enumerated at construction (desk-scale q only) and all
/// element arithmetic is table-backed. Points of P^1 are indexed 0..q-1 by
/// field-element index, with q standing for the point at infinity, matching
/// the tuple convention (0, 1, ..., p-1, inf). The action is the fractional
/// linear transformation z -> (az+c)/(bz+d) coming from row vectors acted on
/// the right, evaluated in homogeneous coordinates so infinity needs no
/// special case; z.(gh) = (z.g).h.
class PslGroup {
public:
    static constexpr std::uint64_t kDefaultMaxQ = 16;

    static std::shared_ptr<const PslGroup> make(std::shared_ptr<const Field> field,
                                                std::uint64_t max_q = kDefaultMaxQ);
    /// q a prime power; builds the field internally
    static std::shared_ptr<const PslGroup> make(int q, std::uint64_t max_q = kDefaultMaxQ);

    const Field& field() const { return *field_; }
    std::shared_ptr<const Field> field_ptr() const { return field_; }
    std::uint64_t q() const { return field_->order(); }
    std::size_t order() const { return elements_.size(); }
    std::size_t points() const { return static_cast<std::size_t>(q()) + 1; }
    std::uint32_t infinity() const { return static_cast<std::uint32_t>(q()); }

    std::uint16_t identity() const { return identity_; }
    std::uint16_t mul(std::uint16_t a, std::uint16_t b) const {
        return mul_[static_cast<std::size_t>(a) * elements_.size() + b];
    }
    std::uint16_t inv(std::uint16_t a) const { return inv_[a]; }
    std::uint16_t pow(std::uint16_t a, long long e) const;
    int element_order(std::uint16_t a) const { return order_of_[a]; }
    bool has_element_of_order(int m) const;

    const PslElement& element(std::uint16_t id) const { return elements_[id]; }
    std::uint16_t id_of(const PslElement& raw) const;  ///< canonicalises, then looks up
    PslElement canonicalize(PslElement e) const;
    /// convenience for prime fields: entries as integers, any residues
    std::uint16_t from_matrix(long long a, long long b, long long c, long long d) const;

    /// right action of element `g` on point `z`
    std::uint32_t act(std::uint32_t z, std::uint16_t g) const {
        return perms_[static_cast<std::size_t>(g) * points() + z];
    }
    /// the permutation i -> i.g over the fixed point order
    std::vector<std::uint32_t> permutation(std::uint16_t g) const;

    std::string format(std::uint16_t id) const;      ///< "[[a,b],[c,d]]"
    std::string format_cycles(std::uint16_t g) const;  ///< "(0 1 2)(inf)"
    std::uint16_t parse(const std::string& s) const;
    std::string point_name(std::uint32_t z) const;

private:
    explicit PslGroup(std::shared_ptr<const Field> field);

    std::uint64_t key_of(const PslElement& e) const;
    std::uint32_t act_raw(std::uint32_t z, const PslElement& e) const;

    std::shared_ptr<const Field> field_;
    std::vector<PslElement> elements_;
    std::vector<std::uint64_t> keys_;    // sorted copy for id lookup
    std::vector<std::uint16_t> key_ids_;
    std::vector<std::uint16_t> mul_;
    std::vector<std::uint16_t> inv_;
    std::vector<std::uint32_t> perms_;
    std::vector<int> order_of_;
    std::uint16_t identity_ = 0;
};

}  // namespace knothom
