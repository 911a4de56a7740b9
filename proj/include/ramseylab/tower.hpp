#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ramseylab {

/// t_1(x) = x, t_{i+1}(x) = 2^{t_i(x)}. Values that would reach or exceed
/// 2^63 are reported with exact = false instead of overflowing silently.
struct TowerValue {
    bool exact = true;
    std::uint64_t value = 0;  // meaningful only when exact

    std::string to_string() const {
        return exact ? std::to_string(value) : std::string(">=2^63 (too large)");
    }
};

inline TowerValue tower(int i, std::uint64_t x) {
    if (i < 1) throw std::invalid_argument("tower: level must be >= 1");
    TowerValue t{true, x};
    for (int level = 2; level <= i; ++level) {
        if (!t.exact || t.value >= 63) return {false, 0};
        t.value = std::uint64_t{1} << t.value;
    }
    return t;
}

}  // namespace ramseylab
