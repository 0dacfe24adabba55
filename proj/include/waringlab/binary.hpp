#pragma once

// Waring rank of binary forms: Sylvester's apolar kernels, exact complex rank,
// certified real rank, and exact or interval decompositions.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "waringlab/forms.hpp"
#include "waringlab/matrix.hpp"
#include "waringlab/points.hpp"
#include "waringlab/roots.hpp"
#include "waringlab/upoly.hpp"

namespace waringlab {

/// f = sum_k C(d,k) c_k x^(d-k) y^k, stored by the scaled coefficients c_k.
class BinaryForm {
public:
    explicit BinaryForm(Vector scaled);
    static BinaryForm from_homogeneous(const HomogeneousForm& f);

    unsigned degree() const { return static_cast<unsigned>(c_.size()) - 1; }
    const Vector& scaled() const { return c_; }
    HomogeneousForm to_homogeneous() const;
    bool is_real() const;
    bool is_zero() const;

    friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

private:
    Vector c_;
};

/// Apolar forms G(s,t) = sum_j g_j s^(r-j) t^j are stored as (g_0..g_r). The point
/// [1:z] of P^1 (the linear form x + z y) is a root when g(z) = 0 for g(t) = G(1,t),
/// and [0:1] (the form y) is a root when g_r = 0.
using ApolarForm = Vector;

/// Kernel of the (d-r+1) x (r+1) Hankel matrix H[i][j] = c_(i+j).
std::vector<ApolarForm> hankel_kernel(const BinaryForm& f, unsigned r);
/// No repeated root on P^1.
bool apolar_squarefree(const ApolarForm& g);
/// Real, with r distinct real roots on P^1.
bool apolar_real_split(const ApolarForm& g);

/// Support points followed by coefficients: f = sum_j lambda_j L_j^d.
struct BinaryDecomposition {
    unsigned rank = 0;
    FieldTag field = FieldTag::GaussianRational;
    bool exact = true;
    ApolarForm generator;
    /// Root z_j for each finite point [1:z_j]; the point [0:1] comes last when at_infinity.
    std::vector<Ball> roots;
    bool at_infinity = false;
    std::vector<Ball> coeffs;
    /// Largest radius of the coefficients of sum lambda_j L_j^d - f (0 in exact mode).
    Rational residual_radius = 0;

    /// Points of P^1 as [s:t]; exact mode only.
    std::vector<ProjectivePoint> exact_points() const;
    Vector exact_coeffs() const;
};

/// Recomputes sum lambda_j L_j^d - f with ball arithmetic; true when every
/// coefficient contains 0 with width below `max_width` (exact equality in exact mode).
bool check_reconstruction(const BinaryForm& f, const BinaryDecomposition& dec, const Rational& max_width,
                          Rational* width = nullptr);

/// Decomposition supported on the roots of a square-free apolar form.
BinaryDecomposition decompose_with(const BinaryForm& f, const ApolarForm& g, FieldTag field);

/// Why a candidate rank was accepted or rejected.
enum class RankStep { Found, NoKernel, GcdExcluded, GeneratorExcluded, PencilExcluded, Gap };
const char* to_string(RankStep s);

struct RankResult {
    unsigned rank = 0;
    BinaryDecomposition decomposition;
    /// Every smaller candidate rank was excluded exactly.
    bool certified = true;
    std::vector<std::pair<unsigned, RankStep>> steps;
};

/// Smallest r whose apolar kernel holds a square-free form. Throws Error for f = 0.
RankResult complex_rank(const BinaryForm& f);
/// Smallest r >= complex rank whose apolar kernel holds a real form with r distinct
/// real roots. `hints` are real points [s:t] tried first as candidate supports.
/// Throws Error for f = 0 or non-real f.
RankResult real_rank(const BinaryForm& f, std::span<const ProjectivePoint> hints = {});

/// F(phi_0(s,t), ..., phi_m(s,t)) for binary quadrics phi_i given by their coefficients
/// of s^2, st, t^2. Throws Error when the phi_i share a root.
BinaryForm pullback_conic(const HomogeneousForm& f, std::span<const Vector> phi);

/// Apolar form with the given roots (points [s:t] of P^1).
ApolarForm apolar_from_points(std::span<const ProjectivePoint> points);

}  // namespace waringlab
