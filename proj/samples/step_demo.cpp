// Reflection and transmission off an electric step, across the Klein threshold.

#include <cstdio>

#include "qkg/qkg.hpp"

int main() {
    using namespace qkg;

    const LinearPhase phase{{0, 0, 0.3, 0}, 0.4};
    std::printf("%8s %10s %10s %10s %10s\n", "a0", "beta", "refl", "trans", "sum");
    for (double a0 : {-0.8, -0.4, 0.0, 0.5, 1.0}) {
        const auto s = electric_step_setup(1.0, a0, phase, 2.0, 2.0, EnergySign::positive);
        const auto r = solve(s);
        std::printf("%8.2f %10.5f %10.5f %10.5f %10.2e\n", a0, r.beta, r.refl_coeff, r.trans_coeff,
                    r.refl_coeff + r.trans_coeff - 1.0);
    }
    const auto k = solve_matching(-0.5, 0, 0);
    std::printf("Klein regime, beta = -0.5: refl = %g, trans = %g\n", k.refl_coeff, k.trans_coeff);
}
