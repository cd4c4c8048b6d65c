#include "meester.hpp"

#include "reconstruct.hpp"

#include <algorithm>

namespace farey {

MeesterTrace meester(const RatVec& v, std::size_t max_steps) {
    const std::size_t n = v.size();
    if (n < 2) throw Error("meester needs dimension >= 2");
    std::size_t positive = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (v[i] < 0) throw Error("meester needs non-negative coordinates");
        if (v[i] > 0) ++positive;
    }
    if (positive == 0) throw Error("meester needs at least one positive coordinate");

    MeesterTrace trace;
    trace.cf.dimension = static_cast<int>(n);
    trace.states.push_back(v);

    RatVec cur = v;
    SlotWalker w(static_cast<int>(n));
    // Coordinates that are zero on input were never alive.
    for (std::size_t i = 0; i < n; ++i)
        if (cur[i] == 0) {
            trace.cf.drops.push_back({0, static_cast<int>(i) + 1});
            w.kill(static_cast<int>(i) + 1);
        }
    auto nonzero_count = [&] {
        std::size_t k = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (cur[i] != 0) ++k;
        return k;
    };
    while (nonzero_count() > 1) {
        if (trace.cf.length() >= max_steps) {
            trace.cf.terminated = false;
            return trace;
        }
        int j = w.next();
        // a = min over the other non-zero coordinates of floor(v_k / v_j)
        bool first = true;
        Int a = 0;
        for (std::size_t k = 0; k < n; ++k) {
            if (k + 1 == static_cast<std::size_t>(j) || cur[k] == 0) continue;
            Int q = floor_div(cur[k], cur[j - 1]);
            if (first || q < a) a = q;
            first = false;
        }
        for (std::size_t k = 0; k < n; ++k) {
            if (k + 1 == static_cast<std::size_t>(j) || cur[k] == 0) continue;
            cur[k] -= Rat(a) * cur[j - 1];
        }
        trace.cf.elements.push_back(a);
        trace.states.push_back(cur);
        for (std::size_t k = 0; k < n; ++k)
            if (cur[k] == 0 && w.alive(static_cast<int>(k) + 1)) {
                trace.cf.drops.push_back({trace.cf.length(), static_cast<int>(k) + 1});
                w.kill(static_cast<int>(k) + 1);
            }
        std::sort(trace.cf.drops.begin(), trace.cf.drops.end());
    }
    trace.cf.terminated = true;
    // Coordinates that were zero on input and never got a turn.
    int pennant = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (cur[i] != 0) pennant = static_cast<int>(i) + 1;
    trace.cf.infer_terminal_drops(pennant);
    return trace;
}

MeesterTrace meester(const IntVec& v, std::size_t max_steps) {
    return meester(RatVec(v), max_steps);
}

IntVec convergent(const FareyCF& cf, std::size_t i) {
    if (i > cf.length()) throw Error("convergent index out of range");
    FareyCF prefix;
    prefix.dimension = cf.dimension;
    prefix.elements.assign(cf.elements.begin(), cf.elements.begin() + static_cast<long>(i));
    for (const auto& d : cf.drops)
        if (d.step <= i) prefix.drops.push_back(d);
    prefix.terminated = true;
    auto ns = nose_stretch(prefix, cf.dimension);
    return ns.pennant;
}

} // namespace farey
