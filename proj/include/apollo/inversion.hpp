#pragma once

#include "apollo/core.hpp"

#include <span>
#include <string>
#include <vector>

namespace APOLLO_NS {

// Image of a radius-reduced site under inversion about the pole center.
struct InvertedSite {
    Scalar u, v, w;
    Scalar rho;  // may be negative
    Scalar pbar;
    std::string source_id;
    std::string pole_id;

    Point3 center() const { return {u, v, w}; }
};

InvertedSite invert(const Site& s, const Site& pole);
std::vector<InvertedSite> invert(std::span<const Site> sites, const Site& pole);

// Column letters: u v w p (rho) 1, with the implicit-ones rule of minor_d.
Scalar minor_d(std::span<const InvertedSite> sites, std::string_view cols);

}  // namespace APOLLO_NS
