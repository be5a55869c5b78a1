#include "apollo/sampling.hpp"

namespace apollo {

namespace {

Scalar draw(std::mt19937_64& rng, long lo, long hi, long den) {
    std::uniform_int_distribution<long> d(lo * den, hi * den);
    Scalar q(d(rng), den);
    q.canonicalize();
    return q;
}

}  // namespace

Site random_site(std::mt19937_64& rng, const std::string& id, const Bounds& b) {
    std::uniform_int_distribution<long> dd(1, b.max_den);
    Site s;
    s.id = id;
    s.c.x = draw(rng, b.lo, b.hi, dd(rng));
    s.c.y = draw(rng, b.lo, b.hi, dd(rng));
    s.c.z = draw(rng, b.lo, b.hi, dd(rng));
    long den = dd(rng);
    std::uniform_int_distribution<long> dr(1, b.rmax * den);
    s.r = Scalar(dr(rng), den);
    s.r.canonicalize();
    return s;
}

bool random_sites(std::mt19937_64& rng, int n, std::vector<Site>& out, const Bounds& b, int max_attempts,
                  int* attempts_used) {
    static const char* names[] = {"i", "j", "k", "a", "b", "c", "d", "e"};
    out.clear();
    int attempts = 0;
    while (static_cast<int>(out.size()) < n) {
        if (attempts >= max_attempts) {
            if (attempts_used) *attempts_used = attempts;
            return false;
        }
        ++attempts;
        std::string id = out.size() < 8 ? names[out.size()] : "s" + std::to_string(out.size());
        Site s = random_site(rng, id, b);
        bool ok = true;
        for (const auto& t : out)
            if (s.same_sphere(t) || is_hidden(s, t) || is_hidden(t, s)) ok = false;
        if (ok) out.push_back(s);
    }
    if (attempts_used) *attempts_used = attempts;
    return true;
}

}  // namespace apollo
