#include "knothom/homcount.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <span>

#include "knothom/util.hpp"

namespace knothom {

std::string strategy_name(Strategy s) {
    switch (s) {
        case Strategy::Naive: return "naive";
        case Strategy::Pruned: return "pruned";
        case Strategy::ClassReduced: return "class-reduced";
    }
    return "?";
}

Strategy parse_strategy(const std::string& s) {
    if (s == "naive") return Strategy::Naive;
    if (s == "pruned") return Strategy::Pruned;
    if (s == "class-reduced" || s == "class_reduced") return Strategy::ClassReduced;
    throw std::invalid_argument("unknown strategy: " + s);
}

std::uint64_t SearchConfig::default_budget() {
    if (const char* env = std::getenv("KNOTHOM_BUDGET")) {
        char* end = nullptr;
        std::uint64_t v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 1'000'000'000ull;
}

std::uint64_t SearchConfig::budget() const {
    return budget_nodes ? budget_nodes : default_budget();
}

nlohmann::json HomCountReport::to_json() const {
    nlohmann::json j;
    j["schema"] = "1";
    j["kind"] = "homcount";
    j["presentation"] = presentation;
    j["group"] = group;
    j["strategy"] = strategy;
    j["total"] = total.get_str();
    nlohmann::json cls = nlohmann::json::object();
    for (const auto& [rep, cnt] : by_first_class) cls[rep] = cnt.get_str();
    j["by_first_class"] = cls;
    j["nodes"] = nodes;
    j["wall_ms"] = wall_ms;
    return j;
}

namespace {

struct SearchPlan {
    std::vector<int> assign_order;               // depth -> generator index
    std::vector<int> depth_of;                   // generator index -> depth
    std::vector<std::vector<int>> check_at;      // depth -> relator indices fully assigned there
    std::vector<const Word*> relators;
};

// depth at which a relator becomes fully assigned
int completion_depth(const Word& w, const std::vector<int>& depth_of) {
    int d = -1;
    for (int letter : w.letters) d = std::max(d, depth_of[std::abs(letter) - 1]);
    return d;
}

// Greedy ordering: repeatedly pick the generator that completes the most
// relators, breaking ties by relator participation and then index. `fix_first`
// pins generator 0 to depth 0 (class reduction ranges over its classes).
std::vector<int> choose_order(const Presentation& p, bool fix_first) {
    int n = static_cast<int>(p.generators.size());
    std::vector<int> order;
    std::vector<bool> used(n, false);
    if (fix_first) {
        order.push_back(0);
        used[0] = true;
    }
    while (static_cast<int>(order.size()) < n) {
        int best = -1, best_completed = -1, best_touched = -1;
        for (int g = 0; g < n; ++g) {
            if (used[g]) continue;
            int completed = 0, touched = 0;
            for (const auto& rel : p.relators) {
                bool uses_g = false, all_assigned = true;
                for (int letter : rel.letters) {
                    int gi = std::abs(letter) - 1;
                    if (gi == g) uses_g = true;
                    else if (!used[gi]) all_assigned = false;
                }
                if (uses_g) {
                    ++touched;
                    if (all_assigned) ++completed;
                }
            }
            if (completed > best_completed ||
                (completed == best_completed && touched > best_touched)) {
                best = g;
                best_completed = completed;
                best_touched = touched;
            }
        }
        order.push_back(best);
        used[best] = true;
    }
    return order;
}

SearchPlan make_plan(const Presentation& p, Strategy strategy) {
    SearchPlan plan;
    int n = static_cast<int>(p.generators.size());
    switch (strategy) {
        case Strategy::Naive:
            plan.assign_order.resize(n);
            std::iota(plan.assign_order.begin(), plan.assign_order.end(), 0);
            break;
        case Strategy::Pruned:
            plan.assign_order = choose_order(p, false);
            break;
        case Strategy::ClassReduced:
            plan.assign_order = choose_order(p, true);
            break;
    }
    plan.depth_of.resize(n);
    for (int d = 0; d < n; ++d) plan.depth_of[plan.assign_order[d]] = d;
    plan.check_at.resize(n);
    for (std::size_t ri = 0; ri < p.relators.size(); ++ri) {
        plan.relators.push_back(&p.relators[ri]);
        int d = completion_depth(p.relators[ri], plan.depth_of);
        // a relator with no letters is vacuous
        if (d >= 0) plan.check_at[strategy == Strategy::Naive ? n - 1 : d].push_back(
            static_cast<int>(ri));
    }
    return plan;
}

class Dfs {
public:
    Dfs(const SearchPlan& plan, const FiniteGroup& H, std::uint64_t budget)
        : plan_(plan), H_(H), budget_(budget), images_(plan.depth_of.size()) {}

    // counts completions under a fixed top-level value
    std::uint64_t run_with_top(ElemId top,
                               std::vector<std::vector<ElemId>>* sink = nullptr) {
        count_ = 0;
        sink_ = sink;
        images_[plan_.assign_order[0]] = top;
        ++nodes_;
        if (passes(0)) descend(1);
        return count_;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    bool passes(int depth) const {
        for (int ri : plan_.check_at[depth]) {
            const Word& w = *plan_.relators[ri];
            ElemId acc = H_.identity();
            for (int letter : w.letters) {
                int g = std::abs(letter) - 1;
                acc = H_.mul(acc, letter > 0 ? images_[g] : H_.inv(images_[g]));
            }
            if (acc != H_.identity()) return false;
        }
        return true;
    }

    void descend(int depth) {
        if (depth == static_cast<int>(images_.size())) {
            ++count_;
            if (sink_) sink_->push_back(images_);
            return;
        }
        std::uint64_t n = H_.order();
        for (ElemId h = 0; h < n; ++h) {
            images_[plan_.assign_order[depth]] = h;
            if (++nodes_ > budget_) throw BudgetExceeded("hom search exceeded node budget");
            if (passes(depth)) descend(depth + 1);
        }
    }

    const SearchPlan& plan_;
    const FiniteGroup& H_;
    std::uint64_t budget_;
    std::vector<ElemId> images_;
    std::uint64_t count_ = 0, nodes_ = 0;
    std::vector<std::vector<ElemId>>* sink_ = nullptr;
};

}  // namespace

HomCountReport count_homs(const Presentation& pres, const FiniteGroup& H, Strategy strategy,
                          const SearchConfig& config) {
    Timer timer;
    HomCountReport rep;
    rep.presentation = pres.name;
    rep.group = H.name();
    rep.strategy = strategy_name(strategy);
    if (pres.generators.empty()) {
        rep.total = 1;  // the empty map
        rep.wall_ms = timer.ms();
        return rep;
    }

    const std::uint64_t budget = config.budget();
    const ConjugacyData& classes = H.conjugacy(budget);
    SearchPlan plan = make_plan(pres, strategy);
    const bool first_is_g0 = plan.assign_order[0] == 0;

    // top-level candidates: whole group, or class representatives
    std::vector<ElemId> tops;
    if (strategy == Strategy::ClassReduced)
        tops.assign(classes.reps.begin(), classes.reps.end());
    else {
        tops.resize(H.order());
        std::iota(tops.begin(), tops.end(), 0);
    }

    std::vector<mpz_class> subtotal(tops.size());
    std::vector<std::uint64_t> subnodes(tops.size(), 0);
    std::vector<std::vector<mpz_class>> per_class(tops.size());
    std::exception_ptr error;
    std::mutex error_mu;

    parallel_indexed(tops.size(), config.workers, [&](std::size_t ti) {
        try {
            Dfs dfs(plan, H, budget);
            std::vector<std::vector<ElemId>> sols;
            bool need_sols = !first_is_g0 && strategy != Strategy::ClassReduced;
            std::uint64_t c = dfs.run_with_top(tops[ti], need_sols ? &sols : nullptr);
            per_class[ti].assign(classes.reps.size(), 0);
            if (strategy == Strategy::ClassReduced) {
                subtotal[ti] = mpz_class(c) * mpz_class(classes.sizes[classes.class_of[tops[ti]]]);
                per_class[ti][classes.class_of[tops[ti]]] = subtotal[ti];
            } else if (first_is_g0) {
                subtotal[ti] = c;
                per_class[ti][classes.class_of[tops[ti]]] = c;
            } else {
                subtotal[ti] = c;
                for (const auto& sol : sols) per_class[ti][classes.class_of[sol[0]]] += 1;
            }
            subnodes[ti] = dfs.nodes();
        } catch (...) {
            std::scoped_lock lk(error_mu);
            if (!error) error = std::current_exception();
        }
    });
    if (error) std::rethrow_exception(error);

    std::vector<mpz_class> class_totals(classes.reps.size());
    for (std::size_t ti = 0; ti < tops.size(); ++ti) {
        rep.total += subtotal[ti];
        rep.nodes += subnodes[ti];
        for (std::size_t ci = 0; ci < class_totals.size(); ++ci)
            class_totals[ci] += per_class[ti][ci];
    }
    if (rep.nodes > budget) throw BudgetExceeded("hom search exceeded node budget");
    for (std::size_t ci = 0; ci < class_totals.size(); ++ci)
        if (class_totals[ci] != 0)
            rep.by_first_class.emplace_back(H.element_str(classes.reps[ci]), class_totals[ci]);
    rep.wall_ms = timer.ms();
    return rep;
}

std::vector<std::vector<ElemId>> enumerate_homs(const Presentation& pres, const FiniteGroup& H,
                                                const SearchConfig& config) {
    if (pres.generators.empty()) return {{}};
    // presentation order with early relator checks: output is in lexicographic
    // order of the image tuples
    SearchPlan plan = make_plan(pres, Strategy::Naive);
    for (std::size_t ri = 0; ri < pres.relators.size(); ++ri) {
        // re-home each relator at its true completion depth for pruning
        auto& last = plan.check_at.back();
        last.erase(std::remove(last.begin(), last.end(), static_cast<int>(ri)), last.end());
        int d = completion_depth(pres.relators[ri], plan.depth_of);
        if (d >= 0) plan.check_at[d].push_back(static_cast<int>(ri));
    }
    for (auto& v : plan.check_at) std::sort(v.begin(), v.end());
    std::vector<std::vector<ElemId>> out;
    Dfs dfs(plan, H, config.budget());
    for (ElemId h = 0; h < H.order(); ++h) dfs.run_with_top(h, &out);
    return out;
}

HomCountReport count_homs_gn_structured(Knot knot, int n, const FiniteGroup& H,
                                        const SearchConfig& config) {
    Timer timer;
    Presentation pres = gn_presentation(knot, n);
    const Word& longitude_rel = pres.relators.back();
    const std::uint64_t budget = config.budget();
    const ConjugacyData& classes = H.conjugacy(budget);
    const std::uint64_t order = H.order();

    // braid partners of a, memoised per image of a (a = nu^n repeats)
    std::vector<std::vector<ElemId>> partners(order);
    std::vector<char> partners_done(order, 0);
    std::mutex partners_mu;
    auto braid_partners = [&](ElemId a) -> const std::vector<ElemId>& {
        {
            std::scoped_lock lk(partners_mu);
            if (partners_done[a]) return partners[a];
        }
        std::vector<ElemId> out;
        for (ElemId c = 0; c < order; ++c) {
            ElemId lhs = H.mul(H.mul(a, c), a);
            ElemId rhs = H.mul(H.mul(c, a), c);
            if (lhs == rhs) out.push_back(c);
        }
        std::scoped_lock lk(partners_mu);
        if (!partners_done[a]) {
            partners[a] = std::move(out);
            partners_done[a] = 1;
        }
        return partners[a];
    };

    std::vector<std::uint64_t> subtotal(order, 0), subnodes(order, 0);
    std::vector<ElemId> a_of(order);
    std::exception_ptr error;
    std::mutex error_mu;

    parallel_indexed(order, config.workers, [&](std::size_t nu_) {
        try {
            auto nu = static_cast<ElemId>(nu_);
            ElemId a = H.pow(nu, n);
            a_of[nu_] = a;
            std::uint64_t nodes = 1;
            std::uint64_t count = 0;
            const auto& cs = braid_partners(a);
            nodes += order;  // the c-scan
            std::vector<ElemId> images(4);
            images[0] = a;
            images[3] = nu;
            for (ElemId c : cs) {
                images[1] = c;
                nodes += order;  // the f-scan
                for (ElemId f : braid_partners(a)) {
                    images[2] = f;
                    ++nodes;
                    ElemId val = evaluate_word(longitude_rel, std::span<const ElemId>(images), H);
                    if (val == H.identity()) ++count;
                }
                if (nodes > budget)
                    throw BudgetExceeded("structured count exceeded node budget");
            }
            subtotal[nu_] = count;
            subnodes[nu_] = nodes;
        } catch (...) {
            std::scoped_lock lk(error_mu);
            if (!error) error = std::current_exception();
        }
    });
    if (error) std::rethrow_exception(error);

    HomCountReport rep;
    rep.presentation = pres.name;
    rep.group = H.name();
    rep.strategy = "structured";
    std::vector<mpz_class> class_totals(classes.reps.size());
    std::uint64_t total_nodes = 0;
    for (std::size_t nu = 0; nu < order; ++nu) {
        rep.total += mpz_class(subtotal[nu]);
        class_totals[classes.class_of[a_of[nu]]] += mpz_class(subtotal[nu]);
        total_nodes += subnodes[nu];
    }
    if (total_nodes > budget) throw BudgetExceeded("structured count exceeded node budget");
    rep.nodes = total_nodes;
    for (std::size_t ci = 0; ci < class_totals.size(); ++ci)
        if (class_totals[ci] != 0)
            rep.by_first_class.emplace_back(H.element_str(classes.reps[ci]), class_totals[ci]);
    rep.wall_ms = timer.ms();
    return rep;
}

}  // namespace knothom
