#pragma once

// High-precision numerical ground truth. Works directly in Z-space on a
// parametrization of the trisector; never calls the exact kernel.

#include "apollo/order.hpp"

#include <array>
#include <optional>
#include <vector>

namespace apollo::oracle {

struct Config {
    unsigned precision_bits = 256;
    int margin_log2 = -80;   // abstain below 2^margin_log2
    int sample_count = 512;  // trisector sampling density (0 disables)
};

struct NumericVertex {
    std::array<double, 3> center;
    double radius;
    VertexLabelKind label;
    double tau;  // position along the oriented trisector (angle if elliptic)
};

std::optional<std::vector<NumericVertex>> numeric_apollonius_spheres(const Site& i, const Site& j,
                                                                     const Site& k, const Site& a,
                                                                     const Config& cfg = {});
std::optional<ConeRelation> numeric_incone(const Site& a, const Site& b, const Site& c,
                                           const Config& cfg = {});
std::optional<TrisectorKind> numeric_tritype(const Site& i, const Site& j, const Site& k,
                                             const Config& cfg = {});
// Whether the trisector carries any externally tangent sphere; an elliptic
// conic can lie entirely on the negative-radius branch.
std::optional<bool> numeric_trisector_exists(const Site& i, const Site& j, const Site& k,
                                             const Config& cfg = {});
std::optional<SignPair> numeric_distance(const Site& i, const Site& j, const Site& k, const Site& a,
                                         const Config& cfg = {});
std::optional<ExistenceCount> numeric_existence(const Site& i, const Site& j, const Site& k,
                                                const Site& a, const Config& cfg = {});
std::optional<ShadowKind> numeric_shadow(const Site& i, const Site& j, const Site& k, const Site& a,
                                         const Config& cfg = {});
std::optional<Sign> numeric_insphere(const Site& i, const Site& j, const Site& k, const Site& a,
                                     const Site& b, const Config& cfg = {});
std::optional<VertexOrdering> numeric_order(const Site& i, const Site& j, const Site& k, const Site& a,
                                            const Site& b, const Config& cfg = {});
std::optional<ConflictOutcome> numeric_conflict(const Site& i, const Site& j, const Site& k,
                                                const Site& l, const Site& m, const Site& q,
                                                const Config& cfg = {});
std::optional<ConflictOutcome> numeric_right_conflict(const Site& i, const Site& j, const Site& k,
                                                      const Site& l, const Site& q,
                                                      const Config& cfg = {});
std::optional<ConflictOutcome> numeric_left_conflict(const Site& i, const Site& j, const Site& k,
                                                     const Site& m, const Site& q,
                                                     const Config& cfg = {});
// Edge validity as seen numerically (both vertices exist, ordered, and the
// open edge avoids both shadows).
std::optional<bool> numeric_valid_edge(const Site& i, const Site& j, const Site& k, const Site& l,
                                       const Site& m, const Config& cfg = {});
// Semi-infinite edge (v_ijkn, +inf) when `right`, else (-inf, v_ikjn).
std::optional<bool> numeric_valid_infinite_edge(const Site& i, const Site& j, const Site& k, const Site& n,
                                                bool right, const Config& cfg = {});

}  // namespace apollo::oracle
