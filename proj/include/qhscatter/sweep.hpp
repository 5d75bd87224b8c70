#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

// Parameter sweeps and the deterministic worker pool behind them.  Output
// order never depends on scheduling: every index writes only its own slot
// and emission happens after the join, so runs are byte-identical for any
// thread count.

namespace qhs {

struct SweepSpec {
    enum class Scale { linear, log };

    double lo = 0.0;
    double hi = 1.0;
    int count = 2;
    Scale scale = Scale::linear;

    // Monotone grid from lo to hi inclusive; log scale is geometric.
    // Throws std::invalid_argument on lo >= hi, count < 2, or a log sweep
    // with lo <= 0.
    std::vector<double> points() const;
};

// Parses "lo:hi:count".  Validation happens in points(); this only demands
// three well-formed fields.
SweepSpec parse_sweep(const std::string& text,
                      SweepSpec::Scale scale = SweepSpec::Scale::linear);

// Worker cap: QHSCATTER_THREADS when set to an integer >= 1, otherwise the
// hardware concurrency (at least 1).  Unusable values fall back to the
// default.
unsigned sweep_thread_cap();

// Runs fn(0..n-1) across up to sweep_thread_cap() threads in contiguous
// index blocks.  If any call throws, the exception for the lowest failing
// block is rethrown after all threads join.
void parallel_index_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace qhs
