#include "geoclique/pentagon.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace geoclique {

PentagonConstants pentagon_constants() {
    PentagonConstants pc{};
    const double pi = M_PI;
    pc.radius = 1.0 / (2.0 * std::sin(2 * pi / 5));  // unit diagonals
    pc.side = 1.0 / (2.0 * std::cos(pi / 5));
    pc.ot = pc.radius * std::cos(pi / 5);
    pc.tr = std::sqrt(1.0 - std::pow(pc.radius * std::sin(pi / 5), 2));
    // Perpendicular reach h of a unit circle around a corner, measured over
    // the extended side line: (s + cot(3*pi/10)*h)^2 + h^2 = 1.
    const double cot = 1.0 / std::tan(3 * pi / 10);
    const double qa = 1.0 + cot * cot;
    const double qb = 2.0 * pc.side * cot;
    const double qc = pc.side * pc.side - 1.0;
    pc.h = (-qb + std::sqrt(qb * qb - 4 * qa * qc)) / (2 * qa);
    pc.alpha = std::asin(pc.tr);
    pc.gamma = std::asin(pc.h);
    pc.a0_1 = (pc.alpha - pc.gamma) / 2;
    pc.a0_2 = pc.side * (pc.ot + pc.tr) / 4;
    pc.a0_3 = pc.side * (pc.h + pc.ot) / 2;
    pc.area_A = 10 * (pc.a0_1 - pc.a0_2 + pc.a0_3);
    pc.b_max = 1.0 / std::sqrt(pc.area_A);
    pc.two_colour_constant = (1.0 + std::sqrt(3.0) / 2) * std::pow(2.0, 3.5) * std::pow(3.0, -0.75);
    return pc;
}

void print_pentagon_constants(const PentagonConstants& pc, std::ostream& out) {
    char buf[64];
    auto emit = [&](const char* key, double v) {
        std::snprintf(buf, sizeof buf, "%s=%.6f\n", key, v);
        out << buf;
    };
    emit("a", pc.radius);
    emit("s", pc.side);
    emit("ot", pc.ot);
    emit("tr", pc.tr);
    emit("h", pc.h);
    emit("alpha", pc.alpha);
    emit("gamma", pc.gamma);
    emit("a0_1", pc.a0_1);
    emit("a0_2", pc.a0_2);
    emit("a0_3", pc.a0_3);
    emit("area_A", pc.area_A);
    emit("b_max", pc.b_max);
    emit("two_colour_constant", pc.two_colour_constant);
}

}  // namespace geoclique
