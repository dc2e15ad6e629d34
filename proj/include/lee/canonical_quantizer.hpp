// canonical_quantizer.hpp — turning diagonalized tilde variables into canonical
// pairs: the Bopp-shift ansatz solver for non-commuting tables, the relabeling
// path for already-canonical tables, and the decoupled one-dimensional modes.

#pragma once

#include "lee/phase_algebra.hpp"

namespace lee {

// Coefficients of the shift ansatz
//   Xt = a1 X + b1 P_Y,  Yt = a2 Y + b2 P_X,
//   Pt_X = a3 P_X + b3 Y,  Pt_Y = a4 P_Y + b4 X,
// where (X, Y, P_X, P_Y) are canonical. b3, b4 are the free parameters.
struct BoppSolution {
    double a1, a2, a3, a4;
    double b1, b2, b3, b4;
};

enum class ModeRegime { Standard, Inverted };

// One decoupled quadratic mode H = 1/2 (p_coeff P^2 + q_coeff Q^2).
struct DecoupledMode {
    double p_coeff;
    double q_coeff;
    ModeRegime regime;

    // Classifies by sign: standard needs p > 0 and q > 0, inverted needs
    // p*q < 0; anything else is rejected.
    static DecoupledMode make(double p, double q);

    // sqrt(p_coeff * q_coeff); standard modes only.
    double omega() const;
};

// H = H_X + relative_sign * H_Y with commuting one-dimensional modes.
struct DecoupledHamiltonian {
    DecoupledMode mode_x;
    DecoupledMode mode_y;
    int relative_sign;  // -1 only arises on the relabeling path
};

// True iff the table can feed solve_bopp: the two structural zeros
// [Xt, Pt_Y] = [Yt, Pt_X] = 0 hold, the four remaining entries are nonzero,
// and they are pairwise consistent ([Xt,Yt] = [Pt_X,Pt_Y],
// [Xt,Pt_X] = -[Yt,Pt_Y]). All comparisons at 1e-12.
bool bopp_admissible(const CommutatorTable& table);

// True iff the table is canonical up to the sign flip of the X pair:
// [Xt, Pt_X] = -i, [Yt, Pt_Y] = +i, every other entry 0 (1e-12).
bool relabel_admissible(const CommutatorTable& table);

// Solves the ansatz against the table with a1 = a4 = 0:
//   b1 = -t13/b3, b2 = -t24/b4, a3 = -t34/b4, a2 = -t12/b1,
// writing T_jk = i t_jk. Throws std::invalid_argument("ansatz inadmissible")
// if the table fails bopp_admissible, std::invalid_argument("degenerate shift")
// if b3 or b4 is zero.
BoppSolution solve_bopp(const CommutatorTable& table, double b3, double b4);

// The ansatz matrix W with (Xt, Yt, Pt_X, Pt_Y) = W (X, Y, P_X, P_Y).
Matrix4 bopp_matrix(const BoppSolution& bopp);

// Substitutes the ansatz into H = 1/2 (E1 Xt^2 + E2 Yt^2 + E3 Pt_X^2 + E4 Pt_Y^2)
// and collects the decoupled modes; cross terms beyond 1e-12 raise
// std::runtime_error("decoupling failed"). relative_sign is +1.
DecoupledHamiltonian decouple_case1(const Vector4& hd_diag, const BoppSolution& bopp);

// Applies the renaming X = Pt_X, P_X = Xt, Y = Yt, P_Y = Pt_Y to a table that
// passes relabel_admissible, else throws
// std::invalid_argument("not directly canonical"). If the resulting Y mode has
// a negative momentum coefficient, a factor -1 is pulled out:
// relative_sign = -1 and mode_y = (-E4, -E2).
DecoupledHamiltonian relabel_case2(const CommutatorTable& table, const Vector4& hd_diag);

// True iff the table equals the canonical structure [X,P_X] = [Y,P_Y] = i,
// all other entries 0, at 1e-12 per entry.
bool verify_canonical(const CommutatorTable& table);

}  // namespace lee
