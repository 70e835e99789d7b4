// Builds the ternary HKM code for h = 1 and h = 3 and compares with the closed form.

#include <cstdio>

#include "defset/defset.hpp"

int main() {
    using namespace defset;
    for (unsigned h : {1u, 3u}) {
        const DefiningSetCode C(hkm_set(h));
        const auto E = weight_enumerator(C);
        const auto P = predict_hkm(h);
        std::printf("h=%u  [%llu,%u,%llu]  %s  %s\n", h, static_cast<unsigned long long>(E.n), E.k,
                    static_cast<unsigned long long>(minimum_distance(E)), to_polynomial(E.counts).c_str(),
                    P.matches(E) ? "matches" : "MISMATCH");
    }
}
