#pragma once

// Seeded random site generation for fuzzing and differential testing.

#include "apollo/core.hpp"

#include <random>
#include <vector>

namespace apollo {

struct Bounds {
    int lo = -10, hi = 10;  // center coordinates
    int rmax = 5;           // radii in (0, rmax]
    int max_den = 16;       // denominators drawn from 1..max_den
};

Site random_site(std::mt19937_64& rng, const std::string& id, const Bounds& b = {});

// n sites, pairwise distinct and pairwise non-contained. Returns false when
// `max_attempts` draws were not enough.
bool random_sites(std::mt19937_64& rng, int n, std::vector<Site>& out, const Bounds& b = {},
                  int max_attempts = 1000, int* attempts_used = nullptr);

}  // namespace apollo
