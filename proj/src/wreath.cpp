#include "knothom/wreath.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "knothom/util.hpp"

namespace knothom {

WreathGroup::WreathGroup(int p, std::shared_ptr<const DqrGroup> base,
                         std::shared_ptr<const PslGroup> top)
    : p_(p), base_(std::move(base)), top_(std::move(top)) {}

std::shared_ptr<const WreathGroup> WreathGroup::make(int p, int q, int r,
                                                     std::uint64_t max_base_order) {
    if (!is_prime(p)) throw std::invalid_argument("WreathGroup: p must be prime");
    if (p == q || p == r) throw std::invalid_argument("WreathGroup: p, q, r must be distinct");
    auto base = DqrGroup::make(q, r, max_base_order);
    auto top = PslGroup::make(p);
    return std::shared_ptr<const WreathGroup>(new WreathGroup(p, std::move(base), std::move(top)));
}

WreathElement WreathGroup::identity() const {
    return {std::vector<DqrElement>(points()), top_->identity()};
}

WreathElement WreathGroup::make_element(std::vector<DqrElement> base_tuple,
                                        std::uint16_t top) const {
    if (base_tuple.size() != points())
        throw std::invalid_argument("WreathGroup: base tuple must have p+1 entries");
    return {std::move(base_tuple), top};
}

WreathElement WreathGroup::constant_xi(long long e, std::uint16_t top) const {
    return {std::vector<DqrElement>(points(), base_->xi_pow(e)), top};
}

WreathElement WreathGroup::mul(const WreathElement& a, const WreathElement& b) const {
    WreathElement out;
    out.base.resize(points());
    for (std::uint32_t i = 0; i < points(); ++i)
        out.base[i] = base_->mul(a.base[i], b.base[top_->act(i, a.top)]);
    out.top = top_->mul(a.top, b.top);
    return out;
}

WreathElement WreathGroup::inv(const WreathElement& a) const {
    WreathElement out;
    out.base.resize(points());
    std::uint16_t tinv = top_->inv(a.top);
    for (std::uint32_t i = 0; i < points(); ++i)
        out.base[i] = base_->inv(a.base[top_->act(i, tinv)]);
    out.top = tinv;
    return out;
}

WreathElement WreathGroup::pow(const WreathElement& a, long long e) const {
    if (e < 0) return pow(inv(a), -e);
    WreathElement acc = identity(), b = a;
    while (e > 0) {
        if (e & 1) acc = mul(acc, b);
        b = mul(b, b);
        e >>= 1;
    }
    return acc;
}

WreathElement WreathGroup::conj(const WreathElement& g, const WreathElement& h) const {
    return mul(mul(h, g), inv(h));
}

bool WreathGroup::commute(const WreathElement& a, const WreathElement& b) const {
    return mul(a, b) == mul(b, a);
}

int WreathGroup::cycle_length(std::uint16_t top, std::uint32_t point) const {
    int len = 1;
    for (std::uint32_t z = top_->act(point, top); z != point; z = top_->act(z, top)) ++len;
    return len;
}

DqrElement WreathGroup::cycle_product(const WreathElement& a, std::uint32_t point) const {
    DqrElement prod = a.base[point];
    for (std::uint32_t z = top_->act(point, a.top); z != point; z = top_->act(z, a.top))
        prod = base_->mul(prod, a.base[z]);
    return prod;
}

std::vector<std::vector<std::uint32_t>> WreathGroup::top_orbits(std::uint16_t top) const {
    std::vector<std::vector<std::uint32_t>> orbits;
    std::vector<bool> done(points(), false);
    for (std::uint32_t start = 0; start < points(); ++start) {
        if (done[start]) continue;
        std::vector<std::uint32_t> cyc{start};
        done[start] = true;
        for (std::uint32_t z = top_->act(start, top); z != start; z = top_->act(z, top)) {
            cyc.push_back(z);
            done[z] = true;
        }
        orbits.push_back(std::move(cyc));
    }
    return orbits;
}

bool WreathGroup::is_standard_form(const WreathElement& a) const {
    for (std::uint32_t i = 0; i < points(); ++i)
        if (!(a.base[top_->act(i, a.top)] == a.base[i])) return false;
    return true;
}

bool WreathGroup::is_reduced_standard_form(const WreathElement& a) const {
    if (!is_standard_form(a)) return false;
    for (const auto& cyc : top_orbits(a.top)) {
        DqrElement g = a.base[cyc[0]];
        bool power_trivial = base_->pow(g, static_cast<long long>(cyc.size())) == base_->identity();
        if (power_trivial != (g == base_->identity())) return false;
    }
    return true;
}

namespace {

// the constructive conjugator of the standard-form lemma: delta has trivial
// top and delta_{j.t^m} = a_j a_{j.t} ... a_{j.t^{m-1}} for orbit reps j
WreathElement partial_products_conjugator(const WreathGroup& W, const WreathElement& a,
                                          const std::vector<std::vector<std::uint32_t>>& orbits) {
    WreathElement delta = W.identity();
    for (const auto& cyc : orbits) {
        DqrElement acc = W.base().identity();
        for (std::size_t m = 1; m <= cyc.size(); ++m) {
            acc = W.base().mul(acc, a.base[cyc[m - 1]]);
            delta.base[cyc[m % cyc.size()]] = acc;
        }
    }
    return delta;
}

}  // namespace

StandardFormCertificate WreathGroup::to_reduced_standard_form(const WreathElement& a) const {
    auto orbits = top_orbits(a.top);

    WreathElement gamma = identity();
    gamma.top = a.top;
    for (const auto& cyc : orbits) {
        DqrElement prod = cycle_product(a, cyc[0]);
        int ord = base_->elem_order(prod);
        int len = static_cast<int>(cyc.size());
        if (std::gcd(len, ord) != 1) {
            std::ostringstream os;
            os << "cycle (" << top_->point_name(cyc[0]);
            for (std::size_t j = 1; j < cyc.size(); ++j) os << ' ' << top_->point_name(cyc[j]);
            os << ") has length " << len << " not co-prime to cycle-product order " << ord;
            throw StandardFormError(os.str(), cyc, len, ord);
        }
        DqrElement root = ord == 1 ? base_->identity()
                                   : base_->pow(prod, mod_inverse(len, ord));
        for (auto pt : cyc) gamma.base[pt] = root;
    }

    WreathElement d_a = partial_products_conjugator(*this, a, orbits);
    WreathElement d_g = partial_products_conjugator(*this, gamma, orbits);
    WreathElement conjugator = mul(inv(d_g), d_a);

    StandardFormCertificate cert;
    cert.gamma = std::move(gamma);
    cert.conjugator = std::move(conjugator);
    for (const auto& cyc : orbits) cert.orbit_reps.push_back(cyc[0]);
    if (!(conj(a, cert.conjugator) == cert.gamma))
        throw std::logic_error("to_reduced_standard_form: certificate failed re-multiplication");
    if (!is_reduced_standard_form(cert.gamma))
        throw std::logic_error("to_reduced_standard_form: output not in reduced standard form");
    return cert;
}

StandardFormCertificate WreathGroup::conjugate_into_xi_wreath(const WreathElement& a) const {
    if (!is_standard_form(a))
        throw std::invalid_argument("conjugate_into_xi_wreath: input must be in standard form");
    auto orbits = top_orbits(a.top);
    WreathElement beta = identity();
    for (const auto& cyc : orbits) {
        DqrElement g = a.base[cyc[0]];
        int ord = base_->elem_order(g);
        if (ord == base_->q())
            throw std::invalid_argument(
                "conjugate_into_xi_wreath: base entry of order q at point " +
                top_->point_name(cyc[0]));
        DqrElement b = base_->identity();
        if (ord != 1) {
            // solve b g b^-1 = xi^[g] in closed form: b = (-v / (1 - zeta^i), 0)
            const Field& F = base_->vfield();
            std::uint32_t denom = F.sub(F.one(), F.pow(base_->zeta(), g.i));
            b = {F.neg(F.mul(g.v, F.inv(denom))), 0};
        }
        for (auto pt : cyc) beta.base[pt] = b;
    }
    StandardFormCertificate cert;
    cert.gamma = conj(a, beta);
    cert.conjugator = std::move(beta);
    for (const auto& cyc : orbits) cert.orbit_reps.push_back(cyc[0]);
    if (!in_xi_wreath(cert.gamma))
        throw std::logic_error("conjugate_into_xi_wreath: output escaped the xi-wreath subgroup");
    if (!is_standard_form(cert.gamma))
        throw std::logic_error("conjugate_into_xi_wreath: output not in standard form");
    if (is_reduced_standard_form(a) && !is_reduced_standard_form(cert.gamma))
        throw std::logic_error("conjugate_into_xi_wreath: reducedness was not preserved");
    return cert;
}

bool WreathGroup::in_xi_wreath(const WreathElement& a) const {
    for (const auto& g : a.base)
        if (g.v != 0) return false;
    return true;
}

std::vector<int> WreathGroup::shift_vector(const WreathElement& a) const {
    std::vector<int> out(points());
    for (std::uint32_t i = 0; i < points(); ++i) out[i] = base_->shift(a.base[i]);
    return out;
}

int WreathGroup::total_shift(const WreathElement& a) const {
    int s = 0;
    for (const auto& g : a.base) s += base_->shift(g);
    return s % base_->r();
}

std::uint32_t WreathGroup::total_v(const WreathElement& a) const {
    const Field& F = base_->vfield();
    std::uint32_t s = 0;
    for (const auto& g : a.base) {
        if (g.i != 0)
            throw std::invalid_argument("total_v: element is not in the V-wreath subgroup");
        s = F.add(s, g.v);
    }
    return s;
}

std::uint64_t WreathGroup::trivial_top_centralizer_size(const WreathElement& alpha) const {
    std::uint64_t size = 1;
    for (const auto& cyc : top_orbits(alpha.top))
        size *= alpha.base[cyc[0]] == base_->identity() ? base_->order()
                                                        : static_cast<std::uint64_t>(base_->r());
    return size;
}

std::vector<WreathElement> WreathGroup::trivial_top_centralizer(const WreathElement& alpha,
                                                                std::uint64_t budget) const {
    if (!in_xi_wreath(alpha) || !is_reduced_standard_form(alpha))
        throw std::invalid_argument(
            "trivial_top_centralizer: alpha must be in the xi-wreath subgroup in reduced "
            "standard form");
    auto orbits = top_orbits(alpha.top);
    std::uint64_t size = trivial_top_centralizer_size(alpha);
    if (size > budget) throw BudgetExceeded("trivial_top_centralizer: enumeration over budget");

    // digits: per orbit, xi-powers where alpha is nontrivial, all of D(q,r)
    // where it is trivial; re-verify each candidate by direct multiplication
    std::vector<std::uint64_t> radix;
    for (const auto& cyc : orbits)
        radix.push_back(alpha.base[cyc[0]] == base_->identity()
                            ? base_->order()
                            : static_cast<std::uint64_t>(base_->r()));
    std::vector<WreathElement> out;
    out.reserve(size);
    for (std::uint64_t idx = 0; idx < size; ++idx) {
        WreathElement beta = identity();
        std::uint64_t rest = idx;
        for (std::size_t oi = orbits.size(); oi-- > 0;) {
            std::uint64_t digit = rest % radix[oi];
            rest /= radix[oi];
            DqrElement val = alpha.base[orbits[oi][0]] == base_->identity()
                                 ? base_->element(digit)
                                 : base_->xi_pow(static_cast<long long>(digit));
            for (auto pt : orbits[oi]) beta.base[pt] = val;
        }
        if (!commute(beta, alpha))
            throw std::logic_error("trivial_top_centralizer: candidate failed commutation check");
        out.push_back(std::move(beta));
    }
    return out;
}

std::vector<PowerCheckPoint> WreathGroup::check_power_cycle_products(const WreathElement& gamma,
                                                                     long long m) const {
    WreathElement alpha = pow(gamma, m);
    std::vector<PowerCheckPoint> out;
    for (std::uint32_t i = 0; i < points(); ++i) {
        long long len = cycle_length(gamma.top, i);
        DqrElement direct = cycle_product(alpha, i);
        DqrElement derived = base_->pow(cycle_product(gamma, i), m / std::gcd(len, m));
        out.push_back({i, direct == derived, direct, derived});
    }
    return out;
}

WreathElement WreathGroup::random_element(std::mt19937_64& rng) const {
    WreathElement out = identity();
    for (auto& g : out.base) {
        g.v = static_cast<std::uint32_t>(rng() % base_->v_size());
        g.i = static_cast<std::uint32_t>(rng() % base_->r());
    }
    out.top = static_cast<std::uint16_t>(rng() % top_->order());
    return out;
}

nlohmann::json WreathGroup::to_json(const WreathElement& a) const {
    nlohmann::json base = nlohmann::json::array();
    for (const auto& g : a.base)
        base.push_back({{"v", base_->vfield().coeffs(g.v)}, {"i", g.i}});
    return {{"base", base}, {"top", top_->format(a.top)}};
}

WreathElement WreathGroup::from_json(const nlohmann::json& j) const {
    WreathElement out;
    for (const auto& g : j.at("base")) {
        DqrElement e;
        if (g.is_string()) {
            e = base_->parse(g.get<std::string>());
        } else {
            e.v = base_->vfield().from_coeffs(g.at("v").get<std::vector<int>>());
            e.i = static_cast<std::uint32_t>(mod_reduce(g.at("i").get<int>(), base_->r()));
        }
        out.base.push_back(e);
    }
    if (out.base.size() != points())
        throw std::invalid_argument("WreathElement: base tuple must have p+1 entries");
    out.top = top_->parse(j.at("top").get<std::string>());
    return out;
}

std::string WreathGroup::format(const WreathElement& a) const {
    std::ostringstream os;
    os << "((";
    for (std::uint32_t i = 0; i < points(); ++i) {
        if (i) os << ", ";
        os << base_->format(a.base[i]);
    }
    os << "), " << top_->format(a.top) << ')';
    return os.str();
}

}  // namespace knothom
