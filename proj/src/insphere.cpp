#include "apollo/insphere.hpp"

#include "apollo/errors.hpp"
#include "kernel.hpp"

#ifndef APOLLO_EPSILON_FIELD

namespace apollo {

const char* to_string(VertexLabelKind k) {
    return k == VertexLabelKind::Vijka ? "Vijka" : "Vikja";
}

}  // namespace apollo

#endif

namespace APOLLO_NS {

QuadExt ApolloniusVertex::coordinate(int c) const {
    const QuadExt& num = c == 0 ? x : (c == 1 ? y : z);
    return num / w;
}

namespace {

const detail::Root& find_vertex(const detail::FourSolve& fs, Sign label, const Site& i, const Site& j,
                                const Site& k, const Site& a) {
    const detail::Root* r = fs.vertex(label);
    if (!r)
        fail(ErrorKind::NoSuchVertex, std::string("no vertex ") +
                                          (label == Sign::Positive ? "v_ijka" : "v_ikja") + " for (" +
                                          i.id + "," + j.id + "," + k.id + "," + a.id + ")");
    return *r;
}

}  // namespace

ApolloniusVertex vertex_coordinates(const Site& i, const Site& j, const Site& k, const Site& a,
                                    VertexLabelKind label) {
    auto fs = detail::solve_four(i, j, k, a);
    Sign want = label == VertexLabelKind::Vijka ? Sign::Positive : Sign::Negative;
    const auto& root = find_vertex(fs, want, i, j, k, a);
    ApolloniusVertex v;
    v.label = {label, {i.id, j.id, k.id, a.id}};
    detail::back_map(root.plane, *fs.pole, v.x, v.y, v.z, v.w);
    return v;
}

Sign insphere(const Site& i, const Site& j, const Site& k, const Site& a, const Site& b) {
    auto fs = detail::solve_four(i, j, k, a);
    const auto& root = find_vertex(fs, Sign::Positive, i, j, k, a);
    return detail::membership(root.plane, *fs.pole, b);
}

}  // namespace APOLLO_NS
