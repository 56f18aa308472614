#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "knothom/dqr.hpp"
#include "knothom/psl.hpp"
#include "knothom/wreath.hpp"

namespace knothom {

using ElemId = std::uint32_t;

struct ConjugacyData {
    std::vector<ElemId> class_of;   // element -> class index
    std::vector<ElemId> reps;       // class index -> representative (smallest id)
    std::vector<std::uint64_t> sizes;
};

/// Uniform handle over a finite group: enumeration by dense ids, mul/inv,
/// and lazily computed conjugacy data. Handles are immutable and safe to
/// share across threads.
class FiniteGroup {
public:
    virtual ~FiniteGroup() = default;
    virtual std::uint64_t order() const = 0;
    virtual ElemId mul(ElemId a, ElemId b) const = 0;
    virtual ElemId inv(ElemId a) const = 0;
    virtual ElemId identity() const = 0;
    virtual std::string name() const = 0;
    virtual std::string element_str(ElemId a) const { return std::to_string(a); }

    ElemId pow(ElemId a, long long e) const;

    /// conjugacy classes by brute-force orbit scan (order^2 products);
    /// throws BudgetExceeded if that is over budget
    const ConjugacyData& conjugacy(std::uint64_t budget = 1u << 26) const;

private:
    mutable std::once_flag conj_once_;
    mutable ConjugacyData conj_;
};

std::shared_ptr<const FiniteGroup> trivial_group();
std::shared_ptr<const FiniteGroup> symmetric_group(int m);
std::shared_ptr<const FiniteGroup> alternating_group(int m);
std::shared_ptr<const FiniteGroup> dihedral_group(int k);  ///< order 2k
std::shared_ptr<const FiniteGroup> permutation_group(int degree,
                                                     std::vector<std::vector<std::uint32_t>> gens);
std::shared_ptr<const FiniteGroup> dqr_group_handle(std::shared_ptr<const DqrGroup> g);
std::shared_ptr<const FiniteGroup> psl_group_handle(std::shared_ptr<const PslGroup> g);
std::shared_ptr<const FiniteGroup> wreath_group_handle(std::shared_ptr<const WreathGroup> g);
std::shared_ptr<const FiniteGroup> product_group(std::shared_ptr<const FiniteGroup> a,
                                                 std::shared_ptr<const FiniteGroup> b);

/// Mini-language: trivial | S3..S8 | A3..A8 | D(k) | DQR(q,r) | PSL(2,q) |
/// H(p,q,r) | perm:[(0 1 2)(3 4); ...]
std::shared_ptr<const FiniteGroup> parse_group_spec(const std::string& spec);

}  // namespace knothom
