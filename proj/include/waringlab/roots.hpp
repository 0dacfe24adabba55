#pragma once

// Certified root enclosures and rational ball arithmetic.

#include <optional>
#include <vector>

#include "waringlab/matrix.hpp"
#include "waringlab/upoly.hpp"

namespace waringlab {

/// Upper bound on sqrt(x) for x >= 0 (exact when x is a perfect square).
Rational sqrt_upper(const Rational& x);
/// Upper bound on |z|.
Rational abs_upper(const Scalar& z);
/// Rounds to the nearest multiple of 2^-bits.
Rational round_dyadic(const Rational& x, unsigned bits);

/// Disk {z : |z - center| <= radius} in C; radius 0 means center is an exact root.
struct Ball {
    Scalar center;
    Rational radius{0};

    bool exact() const { return sgn(radius) == 0; }
    bool contains_zero() const;
    Rational width() const { return 2 * radius; }
};

Ball operator+(const Ball& a, const Ball& b);
Ball operator-(const Ball& a, const Ball& b);
Ball operator*(const Ball& a, const Ball& b);
/// Re-centers on a 2^-bits grid, absorbing the shift into the radius.
Ball tidy(const Ball& b, unsigned bits);

/// Encloses every root of a square-free polynomial over Q(i) in pairwise disjoint
/// disks, each holding exactly one root (Weierstrass inclusion). Roots that are
/// Gaussian rationals are recognised and returned with radius 0.
/// Throws when certification fails.
std::vector<Ball> isolate_complex_roots(const CPoly& p, const Rational& max_radius);

/// Encloses the solution of A x = b for every A in the ball matrix (square, rows of
/// balls). nullopt when the preconditioned contraction test fails.
std::optional<std::vector<Ball>> enclose_linear_solution(const std::vector<std::vector<Ball>>& a,
                                                         std::span<const Scalar> b);

}  // namespace waringlab
