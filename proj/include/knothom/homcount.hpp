#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "knothom/fpgroup.hpp"
#include "knothom/groups.hpp"

#include "json.hpp"

namespace knothom {

enum class Strategy { Naive, Pruned, ClassReduced };

std::string strategy_name(Strategy s);
Strategy parse_strategy(const std::string& s);

struct SearchConfig {
    std::uint64_t budget_nodes = 0;  // 0 means: take the default / env value
    int workers = 1;

    std::uint64_t budget() const;
    static std::uint64_t default_budget();  // env KNOTHOM_BUDGET or 10^9
};

/// Exact homomorphism count. Totals are arbitrary precision; a run either
/// completes exactly or throws BudgetExceeded, never returns a partial count.
struct HomCountReport {
    std::string presentation, group, strategy;
    mpz_class total = 0;
    /// per conjugacy class of the image of the first generator, keyed by the
    /// class representative, in class order
    std::vector<std::pair<std::string, mpz_class>> by_first_class;
    std::uint64_t nodes = 0;
    double wall_ms = 0;

    nlohmann::json to_json() const;
};

HomCountReport count_homs(const Presentation& pres, const FiniteGroup& H, Strategy strategy,
                          const SearchConfig& config = {});

/// Every satisfying generator-image tuple, in lexicographic order of element
/// ids with the first generator most significant.
std::vector<std::vector<ElemId>> enumerate_homs(const Presentation& pres, const FiniteGroup& H,
                                                const SearchConfig& config = {});

/// Counts Hom(G_n(knot), H) by the peripheral pipeline: pick nu, set
/// a = nu^n, scan braid partners c and f, test the longitude relator.
HomCountReport count_homs_gn_structured(Knot knot, int n, const FiniteGroup& H,
                                        const SearchConfig& config = {});

}  // namespace knothom
