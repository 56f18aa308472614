#include "knothom/psl.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "knothom/util.hpp"

namespace knothom {

PslGroup::PslGroup(std::shared_ptr<const Field> field) : field_(std::move(field)) {
    const Field& F = *field_;
    const std::uint64_t n = F.order();

    // enumerate: scan (a,b,c,d) with det 1, canonicalise, dedupe in scan order
    std::vector<std::uint64_t> seen;
    for (std::uint64_t a = 0; a < n; ++a)
        for (std::uint64_t b = 0; b < n; ++b)
            for (std::uint64_t c = 0; c < n; ++c)
                for (std::uint64_t d = 0; d < n; ++d) {
                    auto A = static_cast<std::uint32_t>(a), B = static_cast<std::uint32_t>(b),
                         C = static_cast<std::uint32_t>(c), D = static_cast<std::uint32_t>(d);
                    if (F.sub(F.mul(A, D), F.mul(B, C)) != F.one()) continue;
                    PslElement e = canonicalize(PslElement{{A, B, C, D}});
                    std::uint64_t key = key_of(e);
                    if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
                        seen.push_back(key);
                        elements_.push_back(e);
                    }
                }

    keys_ = seen;
    key_ids_.resize(keys_.size());
    std::vector<std::size_t> perm(keys_.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(),
              [&](std::size_t x, std::size_t y) { return seen[x] < seen[y]; });
    std::vector<std::uint64_t> sorted_keys(keys_.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
        sorted_keys[i] = seen[perm[i]];
        key_ids_[i] = static_cast<std::uint16_t>(perm[i]);
    }
    keys_ = std::move(sorted_keys);

    const std::size_t g = elements_.size();
    identity_ = id_of(PslElement{{F.one(), 0, 0, F.one()}});

    perms_.resize(g * points());
    for (std::size_t i = 0; i < g; ++i)
        for (std::uint32_t z = 0; z < points(); ++z)
            perms_[i * points() + z] = act_raw(z, elements_[i]);

    mul_.resize(g * g);
    for (std::size_t i = 0; i < g; ++i) {
        const PslElement& x = elements_[i];
        for (std::size_t j = 0; j < g; ++j) {
            const PslElement& y = elements_[j];
            PslElement p;
            p.m[0] = F.add(F.mul(x.m[0], y.m[0]), F.mul(x.m[1], y.m[2]));
            p.m[1] = F.add(F.mul(x.m[0], y.m[1]), F.mul(x.m[1], y.m[3]));
            p.m[2] = F.add(F.mul(x.m[2], y.m[0]), F.mul(x.m[3], y.m[2]));
            p.m[3] = F.add(F.mul(x.m[2], y.m[1]), F.mul(x.m[3], y.m[3]));
            mul_[i * g + j] = id_of(p);
        }
    }

    inv_.resize(g);
    order_of_.assign(g, 0);
    for (std::size_t i = 0; i < g; ++i) {
        const PslElement& x = elements_[i];
        // adjugate of a det-1 matrix
        PslElement a{{x.m[3], F.neg(x.m[1]), F.neg(x.m[2]), x.m[0]}};
        inv_[i] = id_of(a);
        std::uint16_t acc = static_cast<std::uint16_t>(i);
        int m = 1;
        while (acc != identity_) {
            acc = mul(acc, static_cast<std::uint16_t>(i));
            ++m;
        }
        order_of_[i] = m;
    }
}

std::shared_ptr<const PslGroup> PslGroup::make(std::shared_ptr<const Field> field,
                                               std::uint64_t max_q) {
    if (field->order() > max_q)
        throw std::invalid_argument("PslGroup::make: q exceeds configured bound");
    return std::shared_ptr<const PslGroup>(new PslGroup(std::move(field)));
}

std::shared_ptr<const Field> make_prime_power_field(int q, std::uint64_t max_order) {
    if (q < 2) throw std::invalid_argument("make_prime_power_field: q must be >= 2");
    int p = 2;
    while (q % p != 0) {
        ++p;
        if (p > q) throw std::invalid_argument("make_prime_power_field: q is not a prime power");
    }
    int k = 0, rest = q;
    while (rest > 1) {
        if (rest % p != 0)
            throw std::invalid_argument("make_prime_power_field: q is not a prime power");
        rest /= p;
        ++k;
    }
    return Field::make(p, k, max_order);
}

std::shared_ptr<const PslGroup> PslGroup::make(int q, std::uint64_t max_q) {
    return make(make_prime_power_field(q), max_q);
}

std::uint64_t PslGroup::key_of(const PslElement& e) const {
    const std::uint64_t n = field_->order();
    return ((e.m[0] * n + e.m[1]) * n + e.m[2]) * n + e.m[3];
}

PslElement PslGroup::canonicalize(PslElement e) const {
    const Field& F = *field_;
    if (F.q() == 2) return e;  // -M = M in characteristic 2
    for (int j = 0; j < 4; ++j) {
        if (e.m[j] == 0) continue;
        if (!F.lex_less(e.m[j], F.neg(e.m[j])))
            for (auto& x : e.m) x = F.neg(x);
        return e;
    }
    return e;
}

std::uint16_t PslGroup::id_of(const PslElement& raw) const {
    PslElement e = canonicalize(raw);
    std::uint64_t key = key_of(e);
    auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
    if (it == keys_.end() || *it != key)
        throw std::invalid_argument("PslGroup::id_of: matrix is not unimodular over this field");
    return key_ids_[static_cast<std::size_t>(it - keys_.begin())];
}

std::uint16_t PslGroup::from_matrix(long long a, long long b, long long c, long long d) const {
    if (field_->k() != 1)
        throw std::invalid_argument("PslGroup::from_matrix: integer entries need a prime field");
    auto r = [&](long long v) { return static_cast<std::uint32_t>(mod_reduce(v, field_->q())); };
    return id_of(PslElement{{r(a), r(b), r(c), r(d)}});
}

std::uint32_t PslGroup::act_raw(std::uint32_t z, const PslElement& e) const {
    const Field& F = *field_;
    // homogeneous row vector [x:y].M = [x a + y c : x b + y d], z = x/y
    std::uint32_t x, y;
    if (z == infinity()) {
        x = F.one();
        y = 0;
    } else {
        x = z;
        y = F.one();
    }
    std::uint32_t nx = F.add(F.mul(x, e.m[0]), F.mul(y, e.m[2]));
    std::uint32_t ny = F.add(F.mul(x, e.m[1]), F.mul(y, e.m[3]));
    if (ny == 0) return infinity();
    return F.mul(nx, F.inv(ny));
}

std::uint16_t PslGroup::pow(std::uint16_t a, long long e) const {
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    std::uint16_t acc = identity_, base = a;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

bool PslGroup::has_element_of_order(int m) const {
    for (std::size_t i = 0; i < elements_.size(); ++i)
        if (order_of_[i] == m) return true;
    return false;
}

std::vector<std::uint32_t> PslGroup::permutation(std::uint16_t g) const {
    auto begin = perms_.begin() + static_cast<std::ptrdiff_t>(g) * points();
    return std::vector<std::uint32_t>(begin, begin + points());
}

std::string PslGroup::point_name(std::uint32_t z) const {
    return z == infinity() ? "inf" : field_->format_short(z);
}

std::string PslGroup::format(std::uint16_t id) const {
    const PslElement& e = elements_[id];
    std::ostringstream os;
    os << "[[" << field_->format_short(e.m[0]) << ',' << field_->format_short(e.m[1]) << "],["
       << field_->format_short(e.m[2]) << ',' << field_->format_short(e.m[3]) << "]]";
    return os.str();
}

std::string PslGroup::format_cycles(std::uint16_t g) const {
    std::ostringstream os;
    std::vector<bool> done(points(), false);
    for (std::uint32_t start = 0; start < points(); ++start) {
        if (done[start]) continue;
        os << '(' << point_name(start);
        done[start] = true;
        for (std::uint32_t z = act(start, g); z != start; z = act(z, g)) {
            os << ' ' << point_name(z);
            done[z] = true;
        }
        os << ')';
    }
    return os.str();
}

std::uint16_t PslGroup::parse(const std::string& s) const {
    // accepts "[[a,b],[c,d]]" with entries readable by Field::parse
    std::vector<std::string> entries;
    std::string cur;
    int depth = 0;
    for (char ch : s) {
        if (ch == '[') {
            ++depth;
            if (depth == 3) cur += ch;
        } else if (ch == ']') {
            if (depth == 3) cur += ch;
            --depth;
            if (depth == 1 && !cur.empty()) {
                entries.push_back(cur);
                cur.clear();
            }
        } else if (ch == ',' && depth == 2) {
            entries.push_back(cur);
            cur.clear();
        } else if (ch == ',' && depth == 1) {
            // separator between the two rows
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    if (!cur.empty()) entries.push_back(cur);
    if (entries.size() != 4) throw std::invalid_argument("PslGroup::parse: expected [[a,b],[c,d]]");
    PslElement e;
    for (int j = 0; j < 4; ++j) e.m[j] = field_->parse(entries[j]);
    return id_of(e);
}

}  // namespace knothom
