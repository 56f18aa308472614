#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "knothom/ffield.hpp"
#include "knothom/util.hpp"

namespace knothom {

/// Element (v, i) of D(q,r) = V x| Z/r with V the additive group of
/// F_{q^{r-1}}; v is a field-element index, i a reduced residue mod r.
struct DqrElement {
    std::uint32_t v = 0;
    std::uint32_t i = 0;
    bool operator==(const DqrElement&) const = default;
};

enum class CommuteKind { BothInV, SameCyclicOrderR, NotCommuting };

/// Result of classifying a commuting pair per the D(q,r) structure lemma:
/// either both elements lie in V, or they share a cyclic subgroup of order r
/// (with `other = base^exponent`, base being whichever input has order r).
struct CommuteClass {
    CommuteKind kind = CommuteKind::NotCommuting;
    bool base_is_first = true;
    int exponent = 0;
};

/// The base group D(q,r) with multiplication (v,i)(w,j) = (v + zeta^i w, i+j),
/// zeta the canonical element of multiplicative order r in F_{q^{r-1}}.
class DqrGroup {
public:
    static constexpr std::uint64_t kDefaultMaxOrder = 1u << 20;

    static std::shared_ptr<const DqrGroup> make(int q, int r,
                                                std::uint64_t max_order = kDefaultMaxOrder);

    int q() const { return q_; }
    int r() const { return r_; }
    std::uint64_t order() const { return order_; }  ///< q^{r-1} * r
    std::uint64_t v_size() const { return field_->order(); }
    const Field& vfield() const { return *field_; }
    std::shared_ptr<const Field> vfield_ptr() const { return field_; }
    std::uint32_t zeta() const { return zeta_; }

    DqrElement identity() const { return {}; }
    DqrElement xi() const { return {0, 1}; }          ///< the canonical shift generator (0,1)
    DqrElement xi_pow(long long e) const { return {0, static_cast<std::uint32_t>(mod_reduce(e, r_))}; }

    DqrElement mul(DqrElement a, DqrElement b) const {
        return {field_->add(a.v, zeta_mul_[a.i][b.v]),
                (a.i + b.i) % static_cast<std::uint32_t>(r_)};
    }
    DqrElement inv(DqrElement a) const {
        std::uint32_t j = (static_cast<std::uint32_t>(r_) - a.i) % static_cast<std::uint32_t>(r_);
        return {field_->neg(zeta_mul_[j][a.v]), j};
    }
    DqrElement pow(DqrElement a, long long e) const;
    /// conjugate of g by h: h g h^-1
    DqrElement conj(DqrElement g, DqrElement h) const { return mul(mul(h, g), inv(h)); }

    /// closed form: the order is 1, q, or r
    int elem_order(DqrElement g) const;
    int elem_order_brute(DqrElement g) const;

    /// image in Z/r under the quotient map (written [g] in serialised reports)
    int shift(DqrElement g) const { return static_cast<int>(g.i); }

    std::vector<DqrElement> conjugacy_class(DqrElement g) const;        ///< closed form
    std::vector<DqrElement> conjugacy_class_brute(DqrElement g) const;  ///< oracle

    CommuteClass commute_classify(DqrElement g, DqrElement h) const;

    std::vector<DqrElement> enumerate() const;
    std::uint64_t index_of(DqrElement g) const {
        return static_cast<std::uint64_t>(g.v) * r_ + g.i;
    }
    DqrElement element(std::uint64_t idx) const {
        return {static_cast<std::uint32_t>(idx / r_), static_cast<std::uint32_t>(idx % r_)};
    }

    std::string format(DqrElement g) const;  ///< "(v=[coeffs], i=k)"
    /// accepts "(v=[...], i=k)" and, for r = 2, the dihedral alias rho^a*sigma^b
    DqrElement parse(const std::string& s) const;

    bool same(const DqrGroup& other) const { return q_ == other.q_ && r_ == other.r_; }

private:
    DqrGroup(int q, int r, std::shared_ptr<const Field> field);

    int q_, r_;
    std::uint64_t order_;
    std::shared_ptr<const Field> field_;
    std::uint32_t zeta_;
    std::vector<std::vector<std::uint32_t>> zeta_mul_;  // [e][v] = zeta^e * v
};

}  // namespace knothom
