#ifndef LIESYM_OPTIONS_HPP
#define LIESYM_OPTIONS_HPP

#include <cstdint>

namespace liesym {

/// Global knobs shared by the verification suites.  All sampling draws from
/// a stream seeded with `seed`, so reports are reproducible.
struct Options {
    unsigned max_order = 6;          // jet order cap
    unsigned precision_bits = 128;   // mantissa bits for numeric fallback
    unsigned samples = 8;            // sample points for numeric zero tests
    unsigned pole_retries = 32;      // resamples before giving up at poles
    std::uint64_t seed = 0;
};

Options& options();

} // namespace liesym

#endif
