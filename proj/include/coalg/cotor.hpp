#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "coalg/hopf.hpp"
#include "coalg/poly.hpp"
#include "coalg/report.hpp"

namespace coalg::cotor {

using hopf::ComoduleAlgebra;
using hopf::HopfDescriptor;
using poly::AlgebraPtr;
using poly::BiDegree;
using poly::Monomial;
using poly::Poly;

// Cohomological degree s plus the internal bidegree (a, b). The differential
// of both complexes has tridegree (1, 0, 0). The display total s + a + b and
// the Hodge pair (a, b + s) are derived bookkeeping.
struct TriDegree {
  int s = 0;
  int a = 0;
  int b = 0;

  int total() const { return s + a + b; }
  std::pair<int, int> hodge() const { return {a, b + s}; }
  auto operator<=>(const TriDegree&) const = default;
};

// Cohomology dimensions of one run, keyed by tridegree. Only nonzero entries
// are stored. Entries are exact for total <= max_total and s <= max_s.
struct CotorTable {
  std::string model;
  std::string method;
  int max_total = 0;
  int max_s = 0;
  std::map<TriDegree, std::size_t> dims;

  std::size_t dim(TriDegree t) const;
  std::map<int, std::size_t> total_dims() const;
  std::map<std::pair<int, int>, std::size_t> hodge_dims() const;
  // Rows sorted by (total, s, a, b); header s,a,b,total,hodge_a,hodge_b,dim.
  std::string to_csv() const;
  std::string to_json() const;
};

// Tridegrees on which the two tables disagree, restricted to the range where
// both are exact. Sorted by (total, s, a, b).
std::vector<TriDegree> table_differences(const CotorTable& x, const CotorTable& y);

// The polynomial ring R on one z generator per transgressive basis monomial
// of the Hopf algebra, together with the map theta sending that monomial to
// its z and every other basis monomial to zero. A z named z<k> has display
// total k = 1 + (internal total of its source monomial); generators are
// included while that total stays within max_total.
class TwistingCochain {
public:
  static TwistingCochain make(hopf::Flavor f, int max_total);

  hopf::Flavor flavor() const { return flavor_; }
  const HopfDescriptor& hopf() const { return hopf_; }
  const AlgebraPtr& ring() const { return R_; }
  std::size_t count() const { return idx_.size(); }
  // d-operator index of the source basis monomial of z variable v.
  int d_index(std::size_t v) const { return idx_[v]; }

  Poly theta(const Monomial& lambda_mono) const;

  // sum over the comultiplication of theta (x) theta vanishes on every basis
  // monomial up to the stated total degree; this is the defining identity of
  // a twisting cochain here, since the Hopf algebra carries no differential.
  Report check_identity(int max_total) const;

private:
  TwistingCochain(hopf::Flavor f, AlgebraPtr R, std::vector<int> idx);
  hopf::Flavor flavor_;
  HopfDescriptor hopf_;
  AlgebraPtr R_;
  std::vector<int> idx_;
};

// Small complex R (x) A with differential r (x) m -> sum_v z_v r (x)
// d_{j_v}(m) over the z generators of the twisting cochain. Monomials are
// enumerated once up to the display total; cohomology is read off bucket by
// bucket.
class TwistedComplex {
public:
  TwistedComplex(ComoduleAlgebra ca, int max_total);

  const ComoduleAlgebra& comodule() const { return ca_; }
  const TwistingCochain& cochain() const { return th_; }
  const AlgebraPtr& ring() const { return RA_.combined; }
  int max_total() const { return max_total_; }

  TriDegree tri_degree(const Monomial& m) const;
  Poly differential(const Monomial& m) const;
  Poly differential(const Poly& p) const;

  // Enumerated monomials of one tridegree, or nullptr when the bucket is
  // empty or outside the enumerated range.
  const std::vector<Monomial>* bucket(TriDegree t) const;

  // z-part / algebra-part inclusions into the combined ring.
  Poly embed_ring(const Poly& zpart) const;
  Poly embed_alg(const Poly& apart) const;

  Report check_d_squared() const;
  bool is_cocycle(const Poly& p) const;
  // p must be homogeneous of one tridegree within the enumerated range.
  bool is_boundary(const Poly& p) const;

  // Cohomology dimensions for every tridegree with total <= max_total.
  // Matrices are assembled sequentially; ranks may be taken on several
  // threads, and the result is identical for any thread count.
  CotorTable cotor(int threads = 1) const;

private:
  ComoduleAlgebra ca_;
  TwistingCochain th_;
  hopf::TensorAlgebra RA_;
  int max_total_;
  std::map<TriDegree, std::vector<Monomial>> buckets_;
};

// Cycle-level product of classes represented as (z-part, primitive algebra
// part): the twisted differential vanishes on R (x) PA, so the class product
// is componentwise. Throws when an algebra part is not primitive.
std::pair<Poly, Poly> product_on_rpa(const TwistedComplex& tc, const std::pair<Poly, Poly>& x,
                                     const std::pair<Poly, Poly>& y);

// Cotor of the coefficient Hopf algebra coacting on itself by comultiplication
// is one copy of the ground field in tridegree (0, 0, 0); this witnesses the
// exactness of the twisted model for the given flavor.
Report check_twisted_acyclicity(hopf::Flavor f, int max_total);

// Independent computation of the same table from the reduced cobar complex
// Lbar^(x)s (x) A. Exact for total <= max_total and s <= max_s.
CotorTable cotor_cobar(const ComoduleAlgebra& ca, int max_total, int max_s, int threads = 1);

// d-square check for the cobar differential, over all enumerated cochains.
Report check_cobar_d_squared(const ComoduleAlgebra& ca, int max_total, int max_s);

}  // namespace coalg::cotor
