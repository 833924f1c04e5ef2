#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace jck {

// Seeded-randomness and verification knobs shared by every module.
// Identical configs produce bit-identical outputs.
struct RunConfig {
    std::uint64_t seed = 0;
    long sample_bound = 10;         // entries of "general" vectors lie in [-B, B]
    int samples = 20;               // per-certificate sample count
    int retry_limit = 16;           // resampling budget for degenerate draws
    int symbolic_dim_threshold = 8; // above this, Jordan identity is sampled by default

    void validate() const {
        if (sample_bound <= 0 || samples <= 0 || retry_limit <= 0 || symbolic_dim_threshold <= 0)
            throw std::invalid_argument("RunConfig: all parameters must be positive");
    }

    // Environment overrides (JCK_ prefix); explicit flags win over these.
    static RunConfig from_env() {
        RunConfig c;
        if (const char* s = std::getenv("JCK_SEED")) c.seed = std::stoull(s);
        if (const char* s = std::getenv("JCK_SAMPLES")) c.samples = std::stoi(s);
        if (const char* s = std::getenv("JCK_BOUND")) c.sample_bound = std::stol(s);
        if (const char* s = std::getenv("JCK_RETRY_LIMIT")) c.retry_limit = std::stoi(s);
        if (const char* s = std::getenv("JCK_SYMBOLIC_DIM")) c.symbolic_dim_threshold = std::stoi(s);
        c.validate();
        return c;
    }
};

} // namespace jck
