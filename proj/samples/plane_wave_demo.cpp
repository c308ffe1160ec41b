// Build a free quaternionic plane wave, check it numerically, print its current.

#include <cstdio>

#include "qkg/qkg.hpp"

int main() {
    using namespace qkg;

    const LinearPhase phase{{0, 0, 0.3, 0}, 0.2};
    const auto s = build_solution(1.0, phase, {0.5, 0, 0}, {0, 0, 0.7}, EnergySign::positive,
                                  EnergySign::negative, 0.4);
    std::printf("k0 = (%.6f, %.3f, %.3f, %.3f)\n", s.k[0][0], s.k[0][1], s.k[0][2], s.k[0][3]);
    std::printf("k1 = (%.6f, %.3f, %.3f, %.3f)\n", s.k[1][0], s.k[1][1], s.k[1][2], s.k[1][3]);

    const auto f = [&](const FourVector& x) { return evaluate(s, x); };
    const FourVector x{0.1, 0.2, -0.3, 0.4};
    std::vector<double> r;
    for (double h : fd::default_spacings) {
        r.push_back(fd::kg_residual(f, s.mass, x, {h}));
        std::printf("h = %-6g  |(box + m^2) Phi| = %.3e\n", h, r.back());
    }
    std::printf("observed order %.3f\n", fd::convergence_order(fd::default_spacings, r).order);

    for (double t : {0.0, 0.5, 1.0}) {
        const auto J = current_free(s, {t, 0, 0, 0});
        std::printf("t = %.1f  J = (%+.5f, %+.5f, %+.5f, %+.5f)\n", t, J[0], J[1], J[2], J[3]);
    }
}
