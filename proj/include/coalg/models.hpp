#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "coalg/cotor.hpp"
#include "coalg/hopf.hpp"
#include "coalg/poly.hpp"
#include "coalg/report.hpp"

namespace coalg::models {

using cotor::CotorTable;
using hopf::ComoduleAlgebra;
using hopf::Flavor;
using poly::BiDegree;
using poly::Poly;

// Built-in comodule-algebra models. Generator bidegrees:
//   gl:N       c_1..c_N with |c_i| = (i, i), coefficients over x2          (lambda1)
//   sp:2N      q_1..q_N with |q_i| = (2i, 2i), coefficients over x2^2      (lambda2)
//   so:2R      u_2..u_{2R}, |u_{2a}| = (a, a), |u_{2a+1}| = (a, a+1)       (lambda2)
//   o:2R       same with the extra square-zero-free generator u_1 of (0, 1)
//   o2_power:R s_1..s_R of (0, 1) and t_1..t_R of (1, 1)                   (lambda2)
//   gl_sing:N  c_1..c_N with |c_i| = (2i, 0), coefficients over t          (sing_gm)
//   sp_sing:2N q_1..q_N with |q_i| = (4i, 0), coefficients over z^4        (sing_z2)
ComoduleAlgebra make_gl(int n);
ComoduleAlgebra make_sp(int two_n);
ComoduleAlgebra make_so(int two_r);
ComoduleAlgebra make_o(int two_r);
ComoduleAlgebra make_o2_power(int r);
ComoduleAlgebra make_gl_sing(int n);
ComoduleAlgebra make_sp_sing(int two_n);
// The coefficient Hopf algebra coacting on itself by its comultiplication:
// gm (lambda1), mu2 (lambda2), sing_z2 (sing_z2), sing_cx (sing_gm).
ComoduleAlgebra make_self(Flavor f);
// Ground field with the unit coaction.
ComoduleAlgebra make_trivial(Flavor f);

// Parses a model id: one of the builders above spelled as in the comment
// (gm | mu2 | sing_z2 | sing_cx | trivial:<flavor> | gl:N | sp:2N | so:2R |
// o:2R | o2_power:R | gl_sing:N | sp_sing:2N), or @path to a JSON model
// file. Throws std::invalid_argument on malformed ids or parameters.
ComoduleAlgebra make_model(const std::string& id);

// Model-file ingestion. Schema:
//   {"hopf": "lambda1", "variables": [{"name": "c1", "deg": [1, 1]},
//    {"name": "w", "deg": [1, 0], "cap": 1}, ...],
//    "coaction": {"c1": [[[["x2", 1]], [["c1", 1]]], ...], ...}}
// where a monomial is a sorted list of [variable, exponent] pairs and each
// generator maps to a list of (coefficient monomial, algebra monomial) pairs.
ComoduleAlgebra model_from_json(const std::string& text, const std::string& name);

// Representative ids covering every built-in family, used by axiom sweeps.
std::vector<std::string> catalog_sample();

// Substitution u_{2a} -> e_a(t_1..t_r), u_{2a+1} -> sum_j s_j e_a(t minus
// t_j) into the o2_power:r variables; p lives in the o:2r model's algebra.
Poly o2r_pullback(const Poly& p, int r);

// The substitution above intertwines the o:2r and o2_power:r coactions
// (checked on all basis monomials up to max_total).
Report check_o2_square(int r, int max_total);

// Even Chern classes restrict to the symplectic classes: c_{2h} -> q_h,
// c_{2h+1} -> 0 over x2 -> x2 intertwines gl:2n with sp:2n.
Report check_gl_sp_restriction(int n, int max_total);

// Basis rule x1^e x2^i -> z^{2i+e} is a coalgebra isomorphism from the
// lambda2 descriptor to the sing_z2 one, degreewise up to max_total.
Report check_lambda2_z2_transport(int max_total);

// Finite presentation of the target cohomology ring of one of the quotient
// families, with variables graded by Hodge bidegree.
//   pgl: x2 (1,1), x3 (1,2), b_h (4h,4h) for 1 < h <= 2m+1, y_I at
//        (2d(I)-1, 2d(I)-1) for nonempty I in {2..2m+1}; relations:
//        x3 y_I = 0, the y_I y_J expansion over nonempty K in I, and the
//        duplicate-index reduction y_{h,h,L} = y_L b_h + y_{h u L} y_h x2.
//   pso: x2 (1,1), b_h (2h,2h), y_I at (d(I)-1, d(I)); relations:
//        x2 y_I = 0, the single-removal y_I y_J expansion, and the
//        reduction y_{h,h,L} = y_L b_h.
// Empty index families at m = 0 leave free polynomial rings.
struct TargetPresentation {
  std::string family;
  int m = 0;
  poly::PresentedAlgebra algebra;
};

TargetPresentation target_presentation(const std::string& family, int m);

// Variable name used for the y class of a duplicate-free index list: digits
// concatenated after "y", underscore-separated when an index exceeds 9.
std::string y_symbol(const std::vector<int>& indices);

// Dimension-comparison evidence that the spectral sequence collapses:
//   pgl: poincare series of the pgl presentation == total dims of the
//        cotor table of (lambda1, gl:4m+2);
//   pso: same against (lambda2, so:4m+2);
//   psp: total dims over (lambda2, sp:4m+2) == those over
//        (sing_z2, sp_sing:4m+2).
// One report line per comparison; the first mismatching degree and both
// values go into the detail field.
Report degeneration_check(const std::string& group, int m, int max_total, int threads = 1);

// Dimensions keyed by Hodge bidegree (a, b_internal + s).
using HodgeTable = std::map<std::pair<int, int>, std::size_t>;

HodgeTable hodge_table(const CotorTable& ct);
// Entry (i, i+j), i.e. the dimension in cohomological degree j against the
// i-th symmetric power; zero when absent.
std::size_t rep_dims(const HodgeTable& ht, int i, int j);
// Every Hodge entry with a > b vanishes.
Report check_hodge_positivity(const CotorTable& ct);

// Number of ways to write i - j as gamma_1 + sum_{h=2}^{2m+1} (4h) beta_h
// with nonnegative integers; requires j >= 1; zero when i < j.
std::size_t pgl_counting_formula(int m, int i, int j);

// Dimensions of the non-pure primitives of so:4m+2, keyed by internal
// bidegree (i, i+j) with j >= 1 and total <= max_total.
std::map<std::pair<int, int>, std::size_t> pso_nonpure_table(int m, int max_total);

// The table above equals the non-pure part (a != b) of the Hodge table of
// the cotor run for (lambda2, so:4m+2) at the same truncation.
Report check_pso_nonpure(int m, int max_total, int threads = 1);

}  // namespace coalg::models
