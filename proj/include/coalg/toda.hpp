#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coalg/hopf.hpp"
#include "coalg/poly.hpp"
#include "coalg/report.hpp"

namespace coalg::toda {

using hopf::ComoduleAlgebra;
using poly::BiDegree;
using poly::Poly;

// A bihomogeneous element a# with d_q(a#) = 1 and d_h(a#) = 0 for every
// h > q, where q is a power of two. Such an element splits the comodule
// algebra additively as F2[a#] (x) P_qA.
struct SharpElement {
  Poly element;
  int q = 0;
};

// Largest i with d_i(p) nonzero, or 0 when only d_0 survives. Finite because
// d_i lowers the internal bidegree by the bidegree of the i-th coefficient
// monomial.
int max_d_index(const ComoduleAlgebra& ca, const Poly& p);

// Whether d_i(p) = 0 for every i >= q.
bool in_pq(const ComoduleAlgebra& ca, int q, const Poly& p);

// Membership of x in the principal ideal generated by the bihomogeneous g.
bool in_principal_ideal(const ComoduleAlgebra& ca, const Poly& g, const Poly& x);

// Searches for a sharp element, smallest q first. For each admissible q the
// candidate bidegree is forced (the bidegree of the index-q coefficient
// monomial); generators of that bidegree are tried first, then every GF(2)
// combination of the monomial basis there. Returns the first hit, or empty.
std::optional<SharpElement> find_sharp(const ComoduleAlgebra& ca, int max_q);

// Basis of the bidegree-deg piece of P_qA = intersection of ker d_i, i >= q.
std::vector<Poly> pq_basis(const ComoduleAlgebra& ca, const SharpElement& sharp, BiDegree deg);
std::vector<Poly> pq_basis_total(const ComoduleAlgebra& ca, const SharpElement& sharp, int total);

// All bases of P_qA with total degree at most max_total, keyed by bidegree.
// Empty pieces are omitted.
struct PqBasis {
  int q = 0;
  std::map<BiDegree, std::vector<Poly>> basis;
};
PqBasis pq_basis_table(const ComoduleAlgebra& ca, const SharpElement& sharp, int max_total);

// Writes a bihomogeneous a as sum_j sharp^j b_j with every b_j in P_qA by
// repeatedly peeling the top nonvanishing d-index, and returns the j = 0
// component. Acts as the identity on P_qA, and the result is congruent to a
// modulo the ideal (sharp).
Poly canonical_lift(const ComoduleAlgebra& ca, const SharpElement& sharp, const Poly& a);

// The product transported from A/(sharp) to P_2A. Requires q = 2 and both
// operands in P_2A. When the coefficient Hopf algebra has the square-zero
// generator, P_2A is closed under the plain product and nothing is added;
// otherwise the correction term d_1(a) d_1(b) sharp restores membership.
Poly star(const ComoduleAlgebra& ca, const SharpElement& sharp, const Poly& a, const Poly& b);

// Dimension of ker d_1 / im d_1 on P_2A, per total degree 0..max_total.
// Requires q = 2. Every total in range appears as a key.
std::map<int, std::size_t> d1_cohomology(const ComoduleAlgebra& ca, const SharpElement& sharp,
                                         int max_total);

// Canonical lifts of the generators, keyed by the numeric suffix of the
// generator name. The sharp generator is kept as is, every other even-index
// generator is replaced by its canonical lift, and each odd-index generator
// by d_1 of the even lift one index up.
struct BarGenerators {
  std::vector<int> indices;           // ascending
  std::map<int, std::string> name;    // index -> original generator name
  std::map<int, Poly> lift;
};
BarGenerators bar_generators(const ComoduleAlgebra& ca, const SharpElement& sharp);

// b_h: the star square of the lift at index 2h; when the coefficients are of
// full polynomial type the cross term (index-1 lift) * lift(2h) * lift(2h-1)
// is added. Requires 1 < h and 2h within the generator range. The result is
// checked to be primitive.
Poly build_b(const ComoduleAlgebra& ca, const SharpElement& sharp, const BarGenerators& bar,
             int h);

// y_I: d_1 of the star product of the even lifts at indices 2i, i in I, for
// a strictly increasing I with entries > 1. The empty I yields zero. The
// result is checked to be primitive.
Poly build_y(const ComoduleAlgebra& ca, const SharpElement& sharp, const BarGenerators& bar,
             const std::vector<int>& I);

// Substitutes images for the presentation variables inside each relation and
// reports whether the result vanishes identically in the comodule algebra.
// A relation using a variable without an image is reported as skipped (such
// classes live one level above the algebra itself).
Report verify_relations(const poly::PolyAlgebra& pres, const std::vector<Poly>& relations,
                        const std::map<std::string, Poly>& images, const ComoduleAlgebra& ca);

// End-to-end driver for one quotient family ("pgl" or "pso") at parameter m:
// builds the catalog model, finds the sharp element, constructs the lifts and
// the b/y classes, checks congruences, primitivity and every applicable
// relation of the target presentation.
Report verify_family_relations(const std::string& family, int m);

// Everything the structure pass produces for one model, for printing.
struct StructureData {
  SharpElement sharp;
  BarGenerators bars;                            // empty when q != 2
  std::vector<std::pair<std::string, Poly>> b;   // ("b2", ...) ascending h
  std::vector<std::pair<std::string, Poly>> y;   // ("y23", ...) subset order
};
StructureData compute_structure(const ComoduleAlgebra& ca, int max_q = 64);

}  // namespace coalg::toda
