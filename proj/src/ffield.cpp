#include "knothom/ffield.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "knothom/util.hpp"

namespace knothom {

namespace {

// dense low-degree-first coefficient vectors; trailing zeros allowed
using Poly = std::vector<int>;

int degree(const Poly& p) {
    for (int d = static_cast<int>(p.size()) - 1; d >= 0; --d)
        if (p[d] != 0) return d;
    return -1;
}

// remainder of a mod b, b nonzero with invertible leading coefficient
Poly poly_rem(Poly a, const Poly& b, int q) {
    int db = degree(b);
    int lead_inv = static_cast<int>(mod_inverse(b[db], q));
    for (int da = degree(a); da >= db; da = degree(a)) {
        int factor = a[da] * lead_inv % q;
        for (int j = 0; j <= db; ++j) {
            int idx = da - db + j;
            a[idx] = mod_reduce(a[idx] - factor * b[j], q);
        }
    }
    return a;
}

bool is_irreducible(const Poly& m, int k, int q) {
    // trial division by every monic polynomial of degree 1..k/2
    for (int d = 1; 2 * d <= k; ++d) {
        std::uint64_t count = pow_u64(q, d);
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Poly div(d + 1, 0);
            std::uint64_t rest = idx;
            for (int j = 0; j < d; ++j) {
                div[j] = static_cast<int>(rest % q);
                rest /= q;
            }
            div[d] = 1;
            if (degree(poly_rem(m, div, q)) < 0) return false;
        }
    }
    return true;
}

}  // namespace

Field::Field(int q, int k, std::vector<int> modulus)
    : q_(q), k_(k), modulus_(std::move(modulus)) {
    qpow_.resize(k_ + 1);
    qpow_[0] = 1;
    for (int j = 1; j <= k_; ++j) qpow_[j] = qpow_[j - 1] * q_;
    order_ = qpow_[k_];
}

std::shared_ptr<const Field> Field::make(int q, int k, std::uint64_t max_order) {
    if (!is_prime(q)) throw std::invalid_argument("Field::make: q must be prime");
    if (k < 1) throw std::invalid_argument("Field::make: k must be positive");
    std::uint64_t order = 1;
    for (int j = 0; j < k; ++j) {
        order *= static_cast<std::uint64_t>(q);
        if (order > max_order)
            throw std::invalid_argument("Field::make: field order exceeds configured bound");
    }
    // scan monic degree-k candidates in lex order of (c_0, ..., c_{k-1}),
    // c_0 compared first
    for (std::uint64_t idx = 0; idx < order; ++idx) {
        Poly m(k + 1, 0);
        std::uint64_t rest = idx;
        for (int j = k - 1; j >= 0; --j) {  // c_0 is the most significant digit of idx
            m[j] = static_cast<int>(rest % q);
            rest /= q;
        }
        m[k] = 1;
        if (k == 1 || is_irreducible(m, k, q))
            return std::shared_ptr<const Field>(new Field(q, k, std::move(m)));
    }
    throw std::logic_error("Field::make: no irreducible polynomial found");
}

std::vector<int> Field::coeffs(std::uint32_t a) const {
    std::vector<int> c(k_);
    for (int j = 0; j < k_; ++j) {
        c[j] = static_cast<int>(a % q_);
        a /= q_;
    }
    return c;
}

std::uint32_t Field::from_coeffs(const std::vector<int>& c) const {
    if (c.size() > static_cast<std::size_t>(k_))
        throw std::invalid_argument("Field::from_coeffs: too many coefficients");
    std::uint64_t a = 0;  // low-degree-first: index = sum c[j] * q^j
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (c[j] < 0 || c[j] >= q_)
            throw std::invalid_argument("Field::from_coeffs: coefficient not a reduced residue");
        a += static_cast<std::uint64_t>(c[j]) * qpow_[j];
    }
    return static_cast<std::uint32_t>(a);
}

std::uint32_t Field::add(std::uint32_t a, std::uint32_t b) const {
    if (q_ == 2) return a ^ b;
    std::uint32_t out = 0;
    for (int j = 0; j < k_; ++j) {
        out += static_cast<std::uint32_t>((a % q_ + b % q_) % q_) *
               static_cast<std::uint32_t>(qpow_[j]);
        a /= q_;
        b /= q_;
    }
    return out;
}

std::uint32_t Field::neg(std::uint32_t a) const {
    if (q_ == 2) return a;
    std::uint32_t out = 0;
    for (int j = 0; j < k_; ++j) {
        out += static_cast<std::uint32_t>((q_ - a % q_) % q_) *
               static_cast<std::uint32_t>(qpow_[j]);
        a /= q_;
    }
    return out;
}

std::uint32_t Field::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t Field::mul(std::uint32_t a, std::uint32_t b) const {
    if (k_ == 1) return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % q_);
    std::vector<int> ca = coeffs(a), cb = coeffs(b);
    std::vector<int> prod(2 * k_ - 1, 0);
    for (int i = 0; i < k_; ++i) {
        if (ca[i] == 0) continue;
        for (int j = 0; j < k_; ++j)
            prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % q_;
    }
    // reduce mod the monic modulus
    for (int d = 2 * k_ - 2; d >= k_; --d) {
        int c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (int j = 0; j < k_; ++j)
            prod[d - k_ + j] = mod_reduce(prod[d - k_ + j] - c * modulus_[j], q_);
    }
    std::uint64_t out = 0;
    for (int j = 0; j < k_; ++j) out += static_cast<std::uint64_t>(prod[j]) * qpow_[j];
    return static_cast<std::uint32_t>(out);
}

std::uint32_t Field::pow(std::uint32_t a, long long e) const {
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    std::uint32_t acc = one(), base = a;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

std::uint32_t Field::inv(std::uint32_t a) const {
    if (a == 0) throw std::invalid_argument("Field::inv: zero is not invertible");
    return pow(a, static_cast<long long>(order_) - 2);
}

bool Field::lex_less(std::uint32_t a, std::uint32_t b) const {
    for (int j = 0; j < k_; ++j) {
        int da = static_cast<int>(a % q_), db = static_cast<int>(b % q_);
        if (da != db) return da < db;
        a /= q_;
        b /= q_;
    }
    return false;
}

std::uint32_t Field::zeta_of_order(int r) const {
    if (!is_prime(r)) throw std::invalid_argument("zeta_of_order: r must be prime");
    if ((order_ - 1) % static_cast<std::uint64_t>(r) != 0)
        throw std::invalid_argument("zeta_of_order: r does not divide order - 1");
    // scan in lex coefficient order: c_0 is the most significant digit of ridx
    for (std::uint64_t ridx = 0; ridx < order_; ++ridx) {
        std::uint64_t e = 0, rest = ridx;
        for (int j = 0; j < k_; ++j) {  // digit for c_{k-1-j}
            e += (rest % q_) * qpow_[k_ - 1 - j];
            rest /= q_;
        }
        auto cand = static_cast<std::uint32_t>(e);
        if (cand == 0 || cand == one()) continue;
        if (pow(cand, r) == one()) return cand;  // r prime, so the order is exactly r
    }
    throw std::logic_error("zeta_of_order: no element of the requested order");
}

int Field::multiplicative_order(std::uint32_t a) const {
    if (a == 0) throw std::invalid_argument("multiplicative_order: zero");
    std::uint32_t acc = a;
    int m = 1;
    while (acc != one()) {
        acc = mul(acc, a);
        ++m;
    }
    return m;
}

std::string Field::format(std::uint32_t a) const {
    std::ostringstream os;
    os << '[';
    auto c = coeffs(a);
    for (int j = 0; j < k_; ++j) {
        if (j) os << ',';
        os << c[j];
    }
    os << ']';
    return os.str();
}

std::string Field::format_short(std::uint32_t a) const {
    if (k_ == 1) return std::to_string(a);
    return format(a);
}

std::uint32_t Field::parse(const std::string& s) const {
    std::size_t pos = 0;
    auto skip_ws = [&] { while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos; };
    skip_ws();
    if (pos < s.size() && s[pos] == '[') {
        ++pos;
        std::vector<int> c;
        while (true) {
            skip_ws();
            if (pos < s.size() && s[pos] == ']') { ++pos; break; }
            std::size_t used = 0;
            int v = std::stoi(s.substr(pos), &used);
            pos += used;
            c.push_back(mod_reduce(v, q_));
            skip_ws();
            if (pos < s.size() && s[pos] == ',') ++pos;
        }
        return from_coeffs(c);
    }
    std::size_t used = 0;
    long long v = std::stoll(s.substr(pos), &used);
    if (k_ != 1) throw std::invalid_argument("Field::parse: bare integer only valid in prime fields");
    return static_cast<std::uint32_t>(mod_reduce(v, q_));
}

}  // namespace knothom
