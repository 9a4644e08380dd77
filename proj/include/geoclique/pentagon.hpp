#pragma once

#include <iosfwd>

namespace geoclique {

/// Closed-form constants of the regular pentagon with unit diagonals, and
/// of the lens regions around its sides whose union must stay point-free
/// for the pentagon's five sides to be triangle-free edges. area_A is the
/// area of that union; b_max = area_A^{-1/2} is the largest threshold
/// coefficient (in units of sqrt(log n)) for which such configurations
/// still appear, and two_colour_constant = (1+sqrt(3)/2)*2^{7/2}*3^{-3/4}
/// is the coefficient above which the hexagonal-cell two-colouring works.
struct PentagonConstants {
    double radius;     // centre to corner, a
    double side;       // s
    double ot;         // centre to side midpoint (apothem)
    double tr;         // side midpoint to the unit circle around a corner
    double h;          // perpendicular reach of that circle over the side line
    double alpha;      // arcsin(tr)
    double gamma;      // arcsin(h)
    double a0_1;       // circular sector piece, (alpha - gamma)/2
    double a0_2;       // triangle piece, s*(ot + tr)/4
    double a0_3;       // triangle piece, s*(h + ot)/2
    double area_A;     // 10 * (a0_1 - a0_2 + a0_3)
    double b_max;      // area_A^{-1/2}
    double two_colour_constant;
};

PentagonConstants pentagon_constants();

/// key=value lines, 6 decimal places, stable order.
void print_pentagon_constants(const PentagonConstants& pc, std::ostream& out);

}  // namespace geoclique
