#pragma once

// The exact kernel is compiled twice: over Q (namespace apollo) and over the
// ordered field Q(eps) of rational functions in an infinitesimal eps
// (namespace apollo::eps), which evaluates predicates on symbolically
// inflated sites. Field-independent types always live in namespace apollo.

#ifdef APOLLO_EPSILON_FIELD
#define APOLLO_NS apollo::eps
#else
#define APOLLO_NS apollo
#endif
