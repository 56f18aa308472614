#include "knothom/dqr.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace knothom {

DqrGroup::DqrGroup(int q, int r, std::shared_ptr<const Field> field)
    : q_(q), r_(r), field_(std::move(field)) {
    order_ = field_->order() * static_cast<std::uint64_t>(r_);
    zeta_ = field_->zeta_of_order(r_);
    zeta_mul_.resize(r_);
    for (int e = 0; e < r_; ++e) {
        std::uint32_t ze = field_->pow(zeta_, e);
        zeta_mul_[e].resize(field_->order());
        for (std::uint64_t v = 0; v < field_->order(); ++v)
            zeta_mul_[e][v] = field_->mul(ze, static_cast<std::uint32_t>(v));
    }
}

std::shared_ptr<const DqrGroup> DqrGroup::make(int q, int r, std::uint64_t max_order) {
    if (!is_prime(q) || !is_prime(r)) throw std::invalid_argument("DqrGroup: q, r must be prime");
    if (q == r) throw std::invalid_argument("DqrGroup: q and r must be distinct");
    auto field = Field::make(q, r - 1, max_order);
    if (field->order() * static_cast<std::uint64_t>(r) > max_order)
        throw std::invalid_argument("DqrGroup: group order exceeds configured bound");
    return std::shared_ptr<const DqrGroup>(new DqrGroup(q, r, std::move(field)));
}

DqrElement DqrGroup::pow(DqrElement a, long long e) const {
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    DqrElement acc = identity(), base = a;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

int DqrGroup::elem_order(DqrElement g) const {
    if (g.i != 0) return r_;
    return g.v == 0 ? 1 : q_;
}

int DqrGroup::elem_order_brute(DqrElement g) const {
    DqrElement acc = g;
    int m = 1;
    while (!(acc == identity())) {
        acc = mul(acc, g);
        ++m;
    }
    return m;
}

std::vector<DqrElement> DqrGroup::conjugacy_class(DqrElement g) const {
    std::vector<DqrElement> out;
    if (g == identity()) {
        out.push_back(g);
    } else if (g.i == 0) {
        // order q: the zeta-orbit of v
        for (int e = 0; e < r_; ++e) out.push_back({zeta_mul_[e][g.v], 0});
        std::sort(out.begin(), out.end(),
                  [](DqrElement a, DqrElement b) { return a.v < b.v; });
        out.erase(std::unique(out.begin(), out.end()), out.end());
    } else {
        // order r: the whole fibre over [g]
        for (std::uint64_t v = 0; v < field_->order(); ++v)
            out.push_back({static_cast<std::uint32_t>(v), g.i});
    }
    return out;
}

std::vector<DqrElement> DqrGroup::conjugacy_class_brute(DqrElement g) const {
    std::vector<DqrElement> out;
    for (std::uint64_t idx = 0; idx < order_; ++idx) {
        DqrElement c = conj(g, element(idx));
        if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    }
    std::sort(out.begin(), out.end(), [](DqrElement a, DqrElement b) {
        return a.v != b.v ? a.v < b.v : a.i < b.i;
    });
    return out;
}

CommuteClass DqrGroup::commute_classify(DqrElement g, DqrElement h) const {
    if (!(mul(g, h) == mul(h, g))) return {CommuteKind::NotCommuting, true, 0};
    if (g.i == 0 && h.i == 0) return {CommuteKind::BothInV, true, 0};
    // one of them has order r; the other is a power of it
    if (g.i != 0) {
        DqrElement acc = identity();
        for (int k = 0; k < r_; ++k) {
            if (acc == h) return {CommuteKind::SameCyclicOrderR, true, k};
            acc = mul(acc, g);
        }
    } else {
        DqrElement acc = identity();
        for (int k = 0; k < r_; ++k) {
            if (acc == g) return {CommuteKind::SameCyclicOrderR, false, k};
            acc = mul(acc, h);
        }
    }
    throw std::logic_error("commute_classify: commuting pair outside the structure lemma");
}

std::vector<DqrElement> DqrGroup::enumerate() const {
    std::vector<DqrElement> out;
    out.reserve(order_);
    for (std::uint64_t idx = 0; idx < order_; ++idx) out.push_back(element(idx));
    return out;
}

std::string DqrGroup::format(DqrElement g) const {
    std::ostringstream os;
    os << "(v=" << field_->format(g.v) << ", i=" << g.i << ')';
    return os.str();
}

DqrElement DqrGroup::parse(const std::string& s) const {
    std::string t;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '*') t += ch;
    if (t.empty()) throw std::invalid_argument("DqrGroup::parse: empty");
    if (t[0] == '(') {
        auto vpos = t.find("v=");
        auto ipos = t.find("i=");
        if (vpos == std::string::npos || ipos == std::string::npos)
            throw std::invalid_argument("DqrGroup::parse: expected (v=[...], i=k)");
        auto vend = t.find(']', vpos);
        std::uint32_t v = field_->parse(t.substr(vpos + 2, vend - vpos - 1));
        int i = std::stoi(t.substr(ipos + 2));
        return {v, static_cast<std::uint32_t>(mod_reduce(i, r_))};
    }
    // dihedral alias for r = 2: rho^a sigma^b with rho = (1,0), sigma = (0,1)
    if (r_ != 2 && t != "1")
        throw std::invalid_argument("DqrGroup::parse: rho/sigma alias only defined for r = 2");
    if (t == "1") return identity();
    DqrElement out = identity();
    std::size_t pos = 0;
    auto read_power = [&](const std::string& name, DqrElement gen) {
        if (t.compare(pos, name.size(), name) != 0) return;
        pos += name.size();
        long long e = 1;
        if (pos < t.size() && t[pos] == '^') {
            std::size_t used = 0;
            e = std::stoll(t.substr(pos + 1), &used);
            pos += 1 + used;
        }
        out = mul(out, pow(gen, e));
    };
    read_power("rho", {field_->one(), 0});
    read_power("sigma", {0, 1});
    if (pos != t.size()) throw std::invalid_argument("DqrGroup::parse: trailing input: " + s);
    return out;
}

}  // namespace knothom
