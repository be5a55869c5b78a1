#pragma once

#include "apollo/apollo.hpp"

namespace fx {

inline apollo::Site S(const char* id, const char* x, const char* y, const char* z, const char* r) {
    return apollo::make_site(id, x, y, z, r);
}

// unit spheres; the trisector is the line (1, 3/4, t) oriented towards +z
inline apollo::Site ti() { return S("i", "0", "0", "0", "1"); }
inline apollo::Site tj() { return S("j", "2", "0", "0", "1"); }
inline apollo::Site tk() { return S("k", "1", "2", "0", "1"); }

}  // namespace fx
