#include "knothom/groups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "knothom/util.hpp"

namespace knothom {

ElemId FiniteGroup::pow(ElemId a, long long e) const {
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    ElemId acc = identity(), base = a;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

const ConjugacyData& FiniteGroup::conjugacy(std::uint64_t budget) const {
    std::call_once(conj_once_, [&] {
        std::uint64_t n = order();
        if (n * n > budget)
            throw BudgetExceeded("conjugacy: order^2 scan exceeds budget for " + name());
        conj_.class_of.assign(n, static_cast<ElemId>(-1));
        for (ElemId g = 0; g < n; ++g) {
            if (conj_.class_of[g] != static_cast<ElemId>(-1)) continue;
            ElemId cls = static_cast<ElemId>(conj_.reps.size());
            conj_.reps.push_back(g);
            std::uint64_t size = 0;
            for (ElemId h = 0; h < n; ++h) {
                ElemId c = mul(mul(h, g), inv(h));
                if (conj_.class_of[c] == static_cast<ElemId>(-1)) {
                    conj_.class_of[c] = cls;
                    ++size;
                }
            }
            conj_.sizes.push_back(size);
        }
    });
    return conj_;
}

namespace {

// ---------------------------------------------------------------- permutation

using Perm = std::vector<std::uint32_t>;

Perm perm_compose(const Perm& p, const Perm& q) {  // left to right: i -> q[p[i]]
    Perm out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = q[p[i]];
    return out;
}

Perm perm_inverse(const Perm& p) {
    Perm out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[p[i]] = static_cast<std::uint32_t>(i);
    return out;
}

std::string perm_cycles(const Perm& p) {
    std::ostringstream os;
    std::vector<bool> done(p.size(), false);
    bool any = false;
    for (std::uint32_t s = 0; s < p.size(); ++s) {
        if (done[s] || p[s] == s) {
            done[s] = true;
            continue;
        }
        any = true;
        os << '(' << s;
        done[s] = true;
        for (std::uint32_t z = p[s]; z != s; z = p[z]) {
            os << ' ' << z;
            done[z] = true;
        }
        os << ')';
    }
    return any ? os.str() : "e";
}

class PermGroup final : public FiniteGroup {
public:
    struct Complete {};  // tag: the element list is already the whole group

    PermGroup(std::string name, int degree, std::vector<Perm> generators)
        : PermGroup(std::move(name), degree, close_under_products(degree, generators), Complete{}) {}

    PermGroup(std::string name, int degree, std::vector<Perm> elements, Complete)
        : name_(std::move(name)) {
        Perm id(degree);
        std::iota(id.begin(), id.end(), 0);
        if (std::find(elements.begin(), elements.end(), id) == elements.end())
            elements.push_back(id);
        std::sort(elements.begin(), elements.end());
        elements_ = std::move(elements);
        std::uint64_t n = elements_.size();
        if (n * n <= (1u << 24)) {
            table_.resize(n * n);
            for (std::uint64_t i = 0; i < n; ++i)
                for (std::uint64_t j = 0; j < n; ++j)
                    table_[i * n + j] = lookup(perm_compose(elements_[i], elements_[j]));
        }
        inv_.resize(n);
        for (std::uint64_t i = 0; i < n; ++i) inv_[i] = lookup(perm_inverse(elements_[i]));
        identity_ = lookup(id);
    }

    std::uint64_t order() const override { return elements_.size(); }
    ElemId mul(ElemId a, ElemId b) const override {
        if (!table_.empty()) return table_[static_cast<std::uint64_t>(a) * elements_.size() + b];
        return lookup(perm_compose(elements_[a], elements_[b]));
    }
    ElemId inv(ElemId a) const override { return inv_[a]; }
    ElemId identity() const override { return identity_; }
    std::string name() const override { return name_; }
    std::string element_str(ElemId a) const override { return perm_cycles(elements_[a]); }

private:
    static std::vector<Perm> close_under_products(int degree, const std::vector<Perm>& gens) {
        Perm id(degree);
        std::iota(id.begin(), id.end(), 0);
        std::vector<Perm> closure{id};
        for (std::size_t head = 0; head < closure.size(); ++head)
            for (const auto& g : gens) {
                Perm next = perm_compose(closure[head], g);
                if (std::find(closure.begin(), closure.end(), next) == closure.end())
                    closure.push_back(next);
            }
        return closure;
    }

    ElemId lookup(const Perm& p) const {
        auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
        return static_cast<ElemId>(it - elements_.begin());
    }

    std::string name_;
    std::vector<Perm> elements_;
    std::vector<ElemId> table_, inv_;
    ElemId identity_ = 0;
};

// ---------------------------------------------------------------- small cases

class TrivialGroup final : public FiniteGroup {
public:
    std::uint64_t order() const override { return 1; }
    ElemId mul(ElemId, ElemId) const override { return 0; }
    ElemId inv(ElemId) const override { return 0; }
    ElemId identity() const override { return 0; }
    std::string name() const override { return "trivial"; }
    std::string element_str(ElemId) const override { return "e"; }
};

// order 2k, elements (rot, flip) with id = flip*k + rot
class DihedralGroup final : public FiniteGroup {
public:
    explicit DihedralGroup(int k) : k_(k) {
        if (k < 1) throw std::invalid_argument("dihedral_group: k must be >= 1");
    }
    std::uint64_t order() const override { return 2ull * k_; }
    ElemId mul(ElemId a, ElemId b) const override {
        int ra = static_cast<int>(a % k_), fa = static_cast<int>(a / k_);
        int rb = static_cast<int>(b % k_), fb = static_cast<int>(b / k_);
        int rot = mod_reduce(fa ? ra - rb : ra + rb, k_);
        return static_cast<ElemId>((fa ^ fb) * k_ + rot);
    }
    ElemId inv(ElemId a) const override {
        int r = static_cast<int>(a % k_), f = static_cast<int>(a / k_);
        return f ? a : static_cast<ElemId>(mod_reduce(-r, k_));
    }
    ElemId identity() const override { return 0; }
    std::string name() const override { return "D(" + std::to_string(k_) + ")"; }
    std::string element_str(ElemId a) const override {
        int r = static_cast<int>(a % k_), f = static_cast<int>(a / k_);
        if (!r && !f) return "e";
        std::string s;
        if (r) s += "rho^" + std::to_string(r);
        if (f) s += (s.empty() ? "" : "*") + std::string("sigma");
        return s;
    }

private:
    int k_;
};

// ---------------------------------------------------------------- adapters

class DqrFinite final : public FiniteGroup {
public:
    explicit DqrFinite(std::shared_ptr<const DqrGroup> g) : g_(std::move(g)) {}
    std::uint64_t order() const override { return g_->order(); }
    ElemId mul(ElemId a, ElemId b) const override {
        return static_cast<ElemId>(g_->index_of(g_->mul(g_->element(a), g_->element(b))));
    }
    ElemId inv(ElemId a) const override {
        return static_cast<ElemId>(g_->index_of(g_->inv(g_->element(a))));
    }
    ElemId identity() const override { return 0; }
    std::string name() const override {
        return "DQR(" + std::to_string(g_->q()) + "," + std::to_string(g_->r()) + ")";
    }
    std::string element_str(ElemId a) const override { return g_->format(g_->element(a)); }
    const DqrGroup& group() const { return *g_; }

private:
    std::shared_ptr<const DqrGroup> g_;
};

class PslFinite final : public FiniteGroup {
public:
    explicit PslFinite(std::shared_ptr<const PslGroup> g) : g_(std::move(g)) {}
    std::uint64_t order() const override { return g_->order(); }
    ElemId mul(ElemId a, ElemId b) const override {
        return g_->mul(static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b));
    }
    ElemId inv(ElemId a) const override { return g_->inv(static_cast<std::uint16_t>(a)); }
    ElemId identity() const override { return g_->identity(); }
    std::string name() const override { return "PSL(2," + std::to_string(g_->q()) + ")"; }
    std::string element_str(ElemId a) const override {
        return g_->format(static_cast<std::uint16_t>(a));
    }

private:
    std::shared_ptr<const PslGroup> g_;
};

class WreathFinite final : public FiniteGroup {
public:
    explicit WreathFinite(std::shared_ptr<const WreathGroup> g) : g_(std::move(g)) {
        std::uint64_t n = g_->top().order();
        for (std::size_t i = 0; i < g_->points(); ++i) {
            n *= g_->base().order();
            if (n > (1ull << 32))
                throw std::invalid_argument("wreath_group_handle: group too large to index");
        }
        order_ = n;
    }
    std::uint64_t order() const override { return order_; }
    ElemId mul(ElemId a, ElemId b) const override {
        return encode(g_->mul(decode(a), decode(b)));
    }
    ElemId inv(ElemId a) const override { return encode(g_->inv(decode(a))); }
    ElemId identity() const override { return encode(g_->identity()); }
    std::string name() const override {
        return "H(" + std::to_string(g_->p()) + "," + std::to_string(g_->base().q()) + "," +
               std::to_string(g_->base().r()) + ")";
    }
    std::string element_str(ElemId a) const override { return g_->format(decode(a)); }

    ElemId encode(const WreathElement& e) const {
        std::uint64_t idx = 0;
        for (const auto& d : e.base) idx = idx * g_->base().order() + g_->base().index_of(d);
        return static_cast<ElemId>(idx * g_->top().order() + e.top);
    }
    WreathElement decode(ElemId id) const {
        WreathElement out = g_->identity();
        std::uint64_t idx = id;
        out.top = static_cast<std::uint16_t>(idx % g_->top().order());
        idx /= g_->top().order();
        for (std::size_t j = g_->points(); j-- > 0;) {
            out.base[j] = g_->base().element(idx % g_->base().order());
            idx /= g_->base().order();
        }
        return out;
    }

private:
    std::shared_ptr<const WreathGroup> g_;
    std::uint64_t order_ = 0;
};

class ProductGroup final : public FiniteGroup {
public:
    ProductGroup(std::shared_ptr<const FiniteGroup> a, std::shared_ptr<const FiniteGroup> b)
        : a_(std::move(a)), b_(std::move(b)) {
        if (a_->order() * b_->order() > (1ull << 32))
            throw std::invalid_argument("product_group: too large to index");
    }
    std::uint64_t order() const override { return a_->order() * b_->order(); }
    ElemId mul(ElemId x, ElemId y) const override {
        std::uint64_t nb = b_->order();
        return static_cast<ElemId>(a_->mul(x / nb, y / nb) * nb + b_->mul(x % nb, y % nb));
    }
    ElemId inv(ElemId x) const override {
        std::uint64_t nb = b_->order();
        return static_cast<ElemId>(a_->inv(x / nb) * nb + b_->inv(x % nb));
    }
    ElemId identity() const override {
        return static_cast<ElemId>(a_->identity() * b_->order() + b_->identity());
    }
    std::string name() const override { return a_->name() + "x" + b_->name(); }
    std::string element_str(ElemId x) const override {
        std::uint64_t nb = b_->order();
        return "(" + a_->element_str(x / nb) + "," + b_->element_str(x % nb) + ")";
    }

private:
    std::shared_ptr<const FiniteGroup> a_, b_;
};

std::vector<Perm> all_perms(int m, bool even_only) {
    Perm id(m);
    std::iota(id.begin(), id.end(), 0);
    std::vector<Perm> out;
    Perm p = id;
    do {
        if (even_only) {
            int inversions = 0;
            for (int i = 0; i < m; ++i)
                for (int j = i + 1; j < m; ++j)
                    if (p[i] > p[j]) ++inversions;
            if (inversions % 2) continue;
        }
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace

std::shared_ptr<const FiniteGroup> trivial_group() { return std::make_shared<TrivialGroup>(); }

std::shared_ptr<const FiniteGroup> symmetric_group(int m) {
    if (m < 1 || m > 8) throw std::invalid_argument("symmetric_group: supported degrees 1..8");
    return std::make_shared<PermGroup>("S" + std::to_string(m), m, all_perms(m, false),
                                       PermGroup::Complete{});
}

std::shared_ptr<const FiniteGroup> alternating_group(int m) {
    if (m < 3 || m > 8) throw std::invalid_argument("alternating_group: supported degrees 3..8");
    return std::make_shared<PermGroup>("A" + std::to_string(m), m, all_perms(m, true),
                                       PermGroup::Complete{});
}

std::shared_ptr<const FiniteGroup> dihedral_group(int k) {
    return std::make_shared<DihedralGroup>(k);
}

std::shared_ptr<const FiniteGroup> permutation_group(
    int degree, std::vector<std::vector<std::uint32_t>> gens) {
    for (const auto& g : gens)
        if (g.size() != static_cast<std::size_t>(degree))
            throw std::invalid_argument("permutation_group: generator degree mismatch");
    std::ostringstream nm;
    nm << "perm<" << degree << ">";
    return std::make_shared<PermGroup>(nm.str(), degree, std::move(gens));
}

std::shared_ptr<const FiniteGroup> dqr_group_handle(std::shared_ptr<const DqrGroup> g) {
    return std::make_shared<DqrFinite>(std::move(g));
}

std::shared_ptr<const FiniteGroup> psl_group_handle(std::shared_ptr<const PslGroup> g) {
    return std::make_shared<PslFinite>(std::move(g));
}

std::shared_ptr<const FiniteGroup> wreath_group_handle(std::shared_ptr<const WreathGroup> g) {
    return std::make_shared<WreathFinite>(std::move(g));
}

std::shared_ptr<const FiniteGroup> product_group(std::shared_ptr<const FiniteGroup> a,
                                                 std::shared_ptr<const FiniteGroup> b) {
    return std::make_shared<ProductGroup>(std::move(a), std::move(b));
}

std::shared_ptr<const FiniteGroup> parse_group_spec(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s == "trivial" || s == "1") return trivial_group();
    auto args_of = [&](const std::string& prefix) -> std::vector<int> {
        std::vector<int> out;
        std::string inner = s.substr(prefix.size() + 1, s.size() - prefix.size() - 2);
        std::istringstream is(inner);
        std::string tok;
        while (std::getline(is, tok, ',')) out.push_back(std::stoi(tok));
        return out;
    };
    if (s.size() == 2 && s[0] == 'S' && std::isdigit(static_cast<unsigned char>(s[1])))
        return symmetric_group(s[1] - '0');
    if (s.size() == 2 && s[0] == 'A' && std::isdigit(static_cast<unsigned char>(s[1])))
        return alternating_group(s[1] - '0');
    if (s.rfind("D(", 0) == 0 && s.back() == ')') return dihedral_group(args_of("D")[0]);
    if (s.rfind("DQR(", 0) == 0 && s.back() == ')') {
        auto a = args_of("DQR");
        if (a.size() != 2) throw std::invalid_argument("group spec: DQR(q,r)");
        return dqr_group_handle(DqrGroup::make(a[0], a[1]));
    }
    if (s.rfind("PSL(", 0) == 0 && s.back() == ')') {
        auto a = args_of("PSL");
        if (a.size() != 2 || a[0] != 2) throw std::invalid_argument("group spec: PSL(2,q)");
        return psl_group_handle(PslGroup::make(a[1]));
    }
    if (s.rfind("H(", 0) == 0 && s.back() == ')') {
        auto a = args_of("H");
        if (a.size() != 3) throw std::invalid_argument("group spec: H(p,q,r)");
        return wreath_group_handle(WreathGroup::make(a[0], a[1], a[2]));
    }
    if (s.rfind("perm:[", 0) == 0 && s.back() == ']') {
        std::string inner = s.substr(6, s.size() - 7);
        std::vector<std::vector<std::vector<std::uint32_t>>> gens_cycles;
        std::istringstream is(inner);
        std::string gen;
        std::uint32_t degree = 0;
        while (std::getline(is, gen, ';')) {
            std::vector<std::vector<std::uint32_t>> cycles;
            std::string cur;
            for (char c : gen) {
                if (c == '(') {
                    cur.clear();
                } else if (c == ')') {
                    std::vector<std::uint32_t> cyc;
                    std::istringstream cs(cur);
                    std::string t;
                    while (std::getline(cs, t, ','))
                        if (!t.empty()) cyc.push_back(static_cast<std::uint32_t>(std::stoul(t)));
                    for (auto v : cyc) degree = std::max(degree, v + 1);
                    cycles.push_back(std::move(cyc));
                } else {
                    cur += c;
                }
            }
            gens_cycles.push_back(std::move(cycles));
        }
        std::vector<Perm> gens;
        for (const auto& cycles : gens_cycles) {
            Perm p(degree);
            std::iota(p.begin(), p.end(), 0);
            for (const auto& cyc : cycles)
                for (std::size_t j = 0; j < cyc.size(); ++j)
                    p[cyc[j]] = cyc[(j + 1) % cyc.size()];
            gens.push_back(std::move(p));
        }
        return std::make_shared<PermGroup>(raw, static_cast<int>(degree), std::move(gens));
    }
    throw std::invalid_argument("unrecognised group spec: " + raw);
}

}  // namespace knothom
