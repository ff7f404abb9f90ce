#pragma once

#include <cstdint>

namespace homcat {

/// Per-session knobs. Values are read at call sites; nothing global is mutated.
struct SessionConfig {
    std::uint32_t prime = 101;
    int stabilization_window = 3;  // s equal consecutive values
    int stabilization_cap = 24;    // give up past this depth
    int settling_margin = 4;       // periods of slack before the periodic ansatz kicks in
    int model_margin = 6;          // extra depth for projective-complex models
    std::uint64_t seed = 2024;
    bool machine_readable = false;
};

inline const SessionConfig& default_config() {
    static const SessionConfig cfg{};
    return cfg;
}

}  // namespace homcat
