#include "qhscatter/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <stdexcept>
#include <thread>

namespace qhs {

std::vector<double> SweepSpec::points() const {
    if (!(std::isfinite(lo) && std::isfinite(hi) && lo < hi))
        throw std::invalid_argument("sweep: need finite lo < hi");
    if (count < 2) throw std::invalid_argument("sweep: need count >= 2");
    if (scale == Scale::log && lo <= 0.0)
        throw std::invalid_argument("sweep: log scale needs lo > 0");

    std::vector<double> out(static_cast<std::size_t>(count));
    const double n1 = static_cast<double>(count - 1);
    for (int i = 0; i < count; ++i) {
        const double f = static_cast<double>(i) / n1;
        out[static_cast<std::size_t>(i)] =
            scale == Scale::linear ? lo + (hi - lo) * f
                                   : lo * std::pow(hi / lo, f);
    }
    out.front() = lo;
    out.back() = hi;
    return out;
}

SweepSpec parse_sweep(const std::string& text, SweepSpec::Scale scale) {
    SweepSpec s;
    s.scale = scale;
    char trailing = '\0';
    const int got = std::sscanf(text.c_str(), "%lf:%lf:%d%c", &s.lo, &s.hi,
                                &s.count, &trailing);
    if (got != 3)
        throw std::invalid_argument("sweep: expected lo:hi:count, got '" + text + "'");
    return s;
}

unsigned sweep_thread_cap() {
    if (const char* env = std::getenv("QHSCATTER_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1 && v <= 4096)
            return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1u;
}

void parallel_index_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    if (n == 0) return;
    const std::size_t workers =
        std::min<std::size_t>(sweep_thread_cap(), n);
    if (workers == 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }

    const std::size_t block = (n + workers - 1) / workers;
    std::vector<std::exception_ptr> failures(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) {
        pool.emplace_back([&, t] {
            const std::size_t begin = t * block;
            const std::size_t end = std::min(n, begin + block);
            for (std::size_t i = begin; i < end; ++i) {
                try {
                    fn(i);
                } catch (...) {
                    failures[t] = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    for (const auto& f : failures)
        if (f) std::rethrow_exception(f);
}

} // namespace qhs
