#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "coalg/poly.hpp"
#include "coalg/report.hpp"

namespace coalg::hopf {

using poly::AlgebraPtr;
using poly::BiDegree;
using poly::GradedVariable;
using poly::Monomial;
using poly::Poly;
using poly::PolyAlgebra;

// The four coefficient Hopf algebras handled by the engine. All are
// primitively generated over GF(2):
//   lambda1: one generator x2 of bidegree (1,1), polynomial
//   lambda2: x1 of (1,0) with x1^2 = 0, x2 of (1,1) polynomial
//   sing_z2: one generator z of (1,0), polynomial
//   sing_gm: one generator t of (2,0), polynomial
enum class Flavor { lambda1, lambda2, sing_z2, sing_gm };

std::string flavor_name(Flavor f);
std::optional<Flavor> flavor_from_name(const std::string& s);

// Tensor product of two free graded algebras, realized as one combined
// variable list (left block first). Right-hand names get primes appended on
// collision.
struct TensorAlgebra {
  AlgebraPtr combined;
  std::size_t left_arity = 0;

  std::size_t right_arity() const { return combined->arity() - left_arity; }
  Monomial embed_left(const Monomial& m) const;
  Monomial embed_right(const Monomial& m) const;
  std::pair<Monomial, Monomial> split(const Monomial& m) const;
};

TensorAlgebra tensor(const AlgebraPtr& left, const AlgebraPtr& right);

// Exponent block copy into a wider algebra at the given variable offset.
Monomial embed_at(const Monomial& m, std::size_t offset, std::size_t target_arity);
Poly embed_poly(const PolyAlgebra& dst, const Poly& p, std::size_t offset);

// Multiplicative graded-algebra map determined by generator images.
class Homomorphism {
public:
  Homomorphism(AlgebraPtr src, AlgebraPtr dst, std::vector<Poly> gen_images);

  const AlgebraPtr& src() const { return src_; }
  const AlgebraPtr& dst() const { return dst_; }
  const Poly& gen_image(std::size_t i) const { return images_[i]; }

  Poly apply(const Monomial& m) const;
  Poly apply(const Poly& p) const;

private:
  AlgebraPtr src_;
  AlgebraPtr dst_;
  std::vector<Poly> images_;
  mutable std::unordered_map<Monomial, Poly, poly::MonoHash> memo_;
};

// One of the four coefficient Hopf algebras, with its comultiplication into
// the doubled algebra and the basis indexing used by the d-operators.
class HopfDescriptor {
public:
  static HopfDescriptor make(Flavor f);

  Flavor flavor() const { return flavor_; }
  const AlgebraPtr& algebra() const { return alg_; }
  const TensorAlgebra& doubled() const { return dbl_; }

  Poly delta(const Poly& p) const { return delta_->apply(p); }
  Poly delta(const Monomial& m) const { return delta_->apply(m); }

  // Basis monomial carrying d-operator index i:
  //   lambda1: x2^i          lambda2: x1^e x2^j at i = 2j + e
  //   sing_z2: z^i           sing_gm: t^i
  Monomial lambda_of_index(int i) const;
  std::optional<int> index_of_lambda(const Monomial& m) const;
  // Largest index whose basis monomial has bidegree <= avail componentwise.
  int max_index_within(BiDegree avail) const;
  // Indices i1, i2 with lambda_{i1} * lambda_{i2} = lambda_{i1+i2} nonzero.
  bool index_pair_ok(int i1, int i2) const;

private:
  HopfDescriptor(Flavor f, AlgebraPtr alg);
  Flavor flavor_;
  AlgebraPtr alg_;
  TensorAlgebra dbl_;
  std::shared_ptr<const Homomorphism> delta_;
};

// A graded commutative algebra with a left coaction of one of the coefficient
// Hopf algebras, extended multiplicatively from generator images.
class ComoduleAlgebra {
public:
  ComoduleAlgebra(HopfDescriptor h, AlgebraPtr a, std::vector<Poly> coaction_gen_images,
                  std::string name);

  const HopfDescriptor& hopf() const { return hopf_; }
  const AlgebraPtr& algebra() const { return A_; }
  const TensorAlgebra& lambda_tensor_a() const { return LA_; }
  const std::string& name() const { return name_; }
  const Poly& coaction_gen(std::size_t i) const { return phi_->gen_image(i); }

  Poly coaction(const Poly& p) const { return phi_->apply(p); }
  Poly coaction(const Monomial& m) const { return phi_->apply(m); }

  // Component of the coaction along the index-i basis monomial of the Hopf
  // algebra; d_0 is the identity.
  Poly d_op(int i, const Monomial& m) const;
  Poly d_op(int i, const Poly& p) const;

  // Basis of {p : coaction(p) = 1 (x) p} in the given bidegree.
  std::vector<Poly> primitive_basis(BiDegree deg) const;
  bool is_primitive(const Poly& p) const;

private:
  HopfDescriptor hopf_;
  AlgebraPtr A_;
  TensorAlgebra LA_;
  std::string name_;
  std::shared_ptr<const Homomorphism> phi_;
  // Per generator: d-index -> coefficient polynomial, from its coaction image.
  std::vector<std::map<int, Poly>> gen_d_;
  mutable std::map<int, std::unordered_map<Monomial, Poly, poly::MonoHash>> d_memo_;
};

// Axiom suites. All run over the full monomial basis up to the stated total
// degree and report one line per verified identity family.
Report check_hopf_axioms(const HopfDescriptor& h, int max_total);
Report check_comodule_axioms(const ComoduleAlgebra& ca, int max_total);

// Checks that (f, g) intertwines the coactions: (g (x) f) o phi_src =
// phi_dst o f, where f maps the underlying algebras and g the Hopf algebras.
Report check_comodule_map(const ComoduleAlgebra& src, const ComoduleAlgebra& dst,
                          const Homomorphism& f, const Homomorphism& g, int max_total);

// d-operator identities: composition rule d_i d_j = C(i+j, i) d_{i+j}, the
// flavor-specific product expansions, and the 3-term cyclic identity for d_1
// (sampled triples).
Report check_d_operator_identities(const ComoduleAlgebra& ca, int max_total);

// Degreewise coalgebra isomorphism check for a linear rule on basis
// monomials: degree preservation, bijectivity, counit and comultiplication
// compatibility up to the stated total degree.
Report check_coalgebra_iso(const HopfDescriptor& src, const HopfDescriptor& dst,
                           const std::function<Poly(const Monomial&)>& rule, int max_total);

}  // namespace coalg::hopf
