#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace knothom {

// Thrown when a search or enumeration exceeds its node budget. Callers get
// either an exact answer or this; never a truncated count.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// least nonnegative residue
inline long long mod_reduce(long long a, long long m) {
    long long v = a % m;
    return v < 0 ? v + m : v;
}

// multiplicative inverse mod m (m > 1, gcd(a, m) = 1)
inline long long mod_inverse(long long a, long long m) {
    long long t = 0, new_t = 1, r = m, new_r = mod_reduce(a, m);
    while (new_r != 0) {
        long long quot = r / new_r;
        t -= quot * new_t;
        std::swap(t, new_t);
        r -= quot * new_r;
        std::swap(r, new_r);
    }
    if (r != 1) throw std::invalid_argument("mod_inverse: not invertible");
    return mod_reduce(t, m);
}

inline std::uint64_t pow_u64(std::uint64_t b, unsigned e) {
    std::uint64_t acc = 1;
    while (e--) acc *= b;
    return acc;
}

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        auto d = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration<double, std::milli>(d).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

// Runs fn(i) for i in [0, count) across `workers` threads. Each index writes
// only its own output slot, so the merged result is schedule-independent.
inline void parallel_indexed(std::size_t count, int workers,
                             const std::function<void(std::size_t)>& fn) {
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::size_t nw = std::min<std::size_t>(workers, count);
    for (std::size_t w = 0; w < nw; ++w) {
        pool.emplace_back([&, w]() {
            for (std::size_t i = w; i < count; i += nw) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace knothom
