#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace knothom {

/// Arithmetic in F_{q^k} as polynomial residues mod a fixed monic irreducible.
///
/// Elements are addressed by index in [0, q^k): the index encodes the
/// coefficient vector low degree first, index = sum coeffs[j] * q^j. The
/// modulus is the lexicographically smallest monic irreducible of degree k,
/// coefficients compared low-degree-first, so construction is deterministic
/// and serialised encodings are reproducible across runs.
class Field {
public:
    static constexpr std::uint64_t kDefaultMaxOrder = 1u << 20;

    static std::shared_ptr<const Field> make(int q, int k,
                                             std::uint64_t max_order = kDefaultMaxOrder);

    int q() const { return q_; }
    int k() const { return k_; }
    std::uint64_t order() const { return order_; }
    /// k+1 coefficients, low degree first, leading coefficient 1.
    const std::vector<int>& modulus() const { return modulus_; }

    std::uint32_t zero() const { return 0; }
    std::uint32_t one() const { return 1; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;  ///< throws on zero
    std::uint32_t pow(std::uint32_t a, long long e) const;

    std::vector<int> coeffs(std::uint32_t a) const;
    std::uint32_t from_coeffs(const std::vector<int>& c) const;

    /// low-degree-first lexicographic comparison of coefficient vectors
    bool lex_less(std::uint32_t a, std::uint32_t b) const;

    /// Smallest (in lex coefficient order) element of exact multiplicative
    /// order r; requires r prime and r | order-1.
    std::uint32_t zeta_of_order(int r) const;

    int multiplicative_order(std::uint32_t a) const;

    /// "[1,0,1,1]" — decimal coefficient list, low degree first
    std::string format(std::uint32_t a) const;
    /// bare integer for prime fields, coefficient list otherwise
    std::string format_short(std::uint32_t a) const;
    std::uint32_t parse(const std::string& s) const;

    bool same(const Field& other) const {
        return q_ == other.q_ && k_ == other.k_ && modulus_ == other.modulus_;
    }

private:
    Field(int q, int k, std::vector<int> modulus);

    int q_;
    int k_;
    std::uint64_t order_;
    std::vector<int> modulus_;
    std::vector<std::uint64_t> qpow_;  // q^0 .. q^k
};

}  // namespace knothom
