#pragma once

#include <string>
#include <vector>

#include "hec/polyring.hpp"

namespace hec {

/* A nonsingular 2x2 matrix (a b; c d) over GF(2^n), used as a
   representative of its PGL_2 class. The canonical class form scales
   the first nonzero entry in scan order (a, b, c, d) to 1; stabilizer
   computations rescale representatives away from canonical form so the
   twisted action fixes the target polynomial exactly. */
struct ProjMatrix {
    fe a = 1, b = 0, c = 0, d = 1;

    static ProjMatrix identity() { return {}; }
    friend bool operator==(const ProjMatrix&, const ProjMatrix&) = default;
};

fe pm_det(const ProjMatrix& A, const Field& F);
/// Matrix product A*B (the composite that acts as "A first, then B").
ProjMatrix pm_mul(const ProjMatrix& A, const ProjMatrix& B, const Field& F);
ProjMatrix pm_scale(const ProjMatrix& A, fe lambda, const Field& F);
ProjMatrix pm_canonical(const ProjMatrix& A, const Field& F);
std::string pm_str(const ProjMatrix& A);

/// All q^3 - q canonical PGL_2 class representatives.
std::vector<ProjMatrix> pgl2_classes(const Field& F);

/// The twisted action (cx+d)^m f((ax+b)/(cx+d)), expanded as
/// sum_i f_i (ax+b)^i (cx+d)^(m-i). Requires deg f <= m; linear and
/// invertible on polynomials of degree <= m.
Poly psi_m(const ProjMatrix& A, const Poly& f, int m);

/// psi_{g+1} followed by monic rescaling; a right PGL_2 action on the
/// monic polynomials of degree <= g+1 when gcd(g+1, 2^n - 1) = 1.
Poly act_monic(const ProjMatrix& A, const Poly& f, int g);

/// One representative per orbit of the monic polynomials of degree
/// <= g+1 under act_monic: the minimal element in the canonical
/// polynomial order (degree, then serialized coefficients).
std::vector<Poly> monic_orbit_reps(int g, const Field& F);

/// Full orbit of one monic polynomial (used by tests and Burnside checks).
std::vector<Poly> monic_orbit(const Poly& f, int g);

/// All PGL_2 classes fixing v under the monic action, each rescaled to
/// the unique GL_2 representative with psi_{g+1}(A, v) = v exactly.
std::vector<ProjMatrix> stabilizer(const Poly& v, int g, const Field& F);

void require_genus_field(int g, const Field& F);  // throws on gcd violation

}  // namespace hec
