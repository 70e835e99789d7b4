// Walsh spectra of a few quadratic trace functions on GF(2^6) and the codes of their supports.

#include <cstdio>

#include "defset/defset.hpp"

int main() {
    using namespace defset;
    const Field F(2, 6);
    for (const char* expr : {"1@3", "a@2,a@3", "1@5", "1@3,1@9"}) {
        const FuncSpec f = parse_funcspec(F, expr, FuncTarget::Trace);
        const auto s = walsh_transform(F, f);
        const auto cls = classify_spectrum(s);
        const unsigned r = quadratic_rank(F, f).rank;
        const auto E = weight_enumerator(DefiningSetCode(boolean_support(F, f)));
        std::printf("%-24s rank %u  %-10s fhat(0)=%-4lld n=%-3llu k=%u  %s\n", to_string(F, f).c_str(), r,
                    to_string(cls.kind).c_str(), static_cast<long long>(s.values[0]),
                    static_cast<unsigned long long>(E.n), E.k, to_polynomial(E.counts).c_str());
    }
}
