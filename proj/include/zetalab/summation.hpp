#pragma once

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <thread>
#include <vector>

namespace zetalab {

/// Neumaier-compensated accumulator. The compensation term also absorbs the
/// case |x| > |sum|, which plain Kahan loses.
class compensated_sum {
public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// Pairwise reduction in a fixed binary-tree order. Used to combine per-block
/// partial sums so the result does not depend on how blocks were scheduled.
inline double pairwise_reduce(std::vector<double> v) {
    if (v.empty()) return 0.0;
    std::size_t m = v.size();
    while (m > 1) {
        std::size_t h = 0;
        for (std::size_t i = 0; i + 1 < m; i += 2) v[h++] = v[i] + v[i + 1];
        if (m & 1) v[h++] = v[m - 1];
        m = h;
    }
    return v[0];
}

/// Worker cap requested via CLI; 0 means "use the environment/default".
inline unsigned& thread_override() {
    static unsigned cap = 0;
    return cap;
}

inline unsigned effective_threads() {
    if (thread_override() >= 1) return thread_override();
    if (const char* e = std::getenv("ZETA_LAB_THREADS")) {
        const long v = std::strtol(e, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    const unsigned h = std::thread::hardware_concurrency();
    return h ? h : 1;
}

/// Runs fn(block_index) for block_index in [0, blocks). Blocks are assigned
/// to workers in contiguous stripes; each fn writes only to its own output
/// slot, so the combined result is identical for every worker count.
template <class Fn>
void for_each_block(std::size_t blocks, Fn&& fn) {
    const unsigned want = effective_threads();
    if (want <= 1 || blocks <= 1) {
        for (std::size_t b = 0; b < blocks; ++b) fn(b);
        return;
    }
    const unsigned workers = static_cast<unsigned>(
        std::min<std::size_t>(want, blocks));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t b = w; b < blocks; b += workers) fn(b);
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace zetalab
