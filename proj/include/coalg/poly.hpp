#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "coalg/gf2.hpp"

namespace coalg::poly {

// Internal bidegree. Singly graded objects use b = 0 throughout.
struct BiDegree {
  int a = 0;
  int b = 0;

  int total() const { return a + b; }
  BiDegree operator+(BiDegree o) const { return {a + o.a, b + o.b}; }
  BiDegree operator-(BiDegree o) const { return {a - o.a, b - o.b}; }
  auto operator<=>(const BiDegree&) const = default;
};

using Exp = std::uint16_t;

struct GradedVariable {
  std::string name;
  BiDegree deg;
  // Maximum allowed exponent; exceeding it makes a product vanish (cap 1
  // encodes a square-zero variable). nullopt = unbounded.
  std::optional<Exp> cap;
};

// Finitely generated free commutative algebra over GF(2) with bigraded
// variables and optional nilpotency caps. Immutable once built.
class PolyAlgebra {
public:
  explicit PolyAlgebra(std::vector<GradedVariable> vars);

  std::size_t arity() const { return vars_.size(); }
  const GradedVariable& var(std::size_t i) const { return vars_[i]; }
  // Index of a variable name, or -1.
  long index_of(const std::string& name) const;

private:
  std::vector<GradedVariable> vars_;
};

using AlgebraPtr = std::shared_ptr<const PolyAlgebra>;

// Exponent vector over a fixed algebra; e.size() == arity.
struct Monomial {
  std::vector<Exp> e;

  bool operator==(const Monomial&) const = default;
  bool is_one() const;
};

BiDegree mono_degree(const PolyAlgebra& alg, const Monomial& m);
int mono_total(const PolyAlgebra& alg, const Monomial& m);

// Graded lexicographic order pinned to the variable declaration order:
// compare total degree first, ties by the exponent vector lexicographically.
bool mono_less(const PolyAlgebra& alg, const Monomial& x, const Monomial& y);

struct MonoHash {
  std::size_t operator()(const Monomial& m) const;
};

// Polynomial = finite set of monomials; GF(2) coefficients are implicit and
// addition is symmetric difference. Terms are kept sorted by mono_less.
class Poly {
public:
  Poly() = default;

  static Poly zero() { return Poly(); }
  static Poly one(const PolyAlgebra& alg);
  static Poly monomial(Monomial m);
  static Poly variable(const PolyAlgebra& alg, std::size_t i);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Monomial>& terms() const { return terms_; }

  bool operator==(const Poly&) const = default;

private:
  std::vector<Monomial> terms_;
  friend Poly add(const PolyAlgebra&, const Poly&, const Poly&);
  friend Poly from_terms(const PolyAlgebra&, std::vector<Monomial>);
};

// Builds a Poly from an arbitrary term list, cancelling duplicate pairs.
Poly from_terms(const PolyAlgebra& alg, std::vector<Monomial> terms);

Poly add(const PolyAlgebra& alg, const Poly& x, const Poly& y);
// Product with cap enforcement: any term exceeding a variable cap is dropped.
Poly multiply(const PolyAlgebra& alg, const Poly& x, const Poly& y);
Poly multiply_mono(const PolyAlgebra& alg, const Poly& x, const Monomial& m);
Poly power(const PolyAlgebra& alg, const Poly& x, unsigned k);

// Degree queries. A zero polynomial is homogeneous of every degree.
bool is_homogeneous(const PolyAlgebra& alg, const Poly& p, BiDegree* deg_out);
bool is_homogeneous_total(const PolyAlgebra& alg, const Poly& p, int* total_out);

// All monomials of the exact bidegree / exact total / total at most T,
// sorted by mono_less. Every variable must have positive total degree.
std::vector<Monomial> monomial_basis(const PolyAlgebra& alg, BiDegree deg);
std::vector<Monomial> monomial_basis_total(const PolyAlgebra& alg, int total);
std::vector<Monomial> monomial_basis_upto(const PolyAlgebra& alg, int max_total);

// Same enumeration against explicit per-variable weights (used where a
// variable's bookkeeping weight differs from its internal degree).
std::vector<Monomial> monomial_basis_weighted(const PolyAlgebra& alg,
                                              const std::vector<int>& weights, int exact,
                                              bool up_to);

std::string to_string(const PolyAlgebra& alg, const Monomial& m);
std::string to_string(const PolyAlgebra& alg, const Poly& p);

// Convenience constructor: {{"c1", 2}, {"c2", 1}} -> c1^2 c2. Throws on
// unknown names.
Monomial make_mono(const PolyAlgebra& alg, const std::vector<std::pair<std::string, Exp>>& factors);

// Quotient of a PolyAlgebra by homogeneous relations. Dimensions are computed
// degreewise: dim of the span of all monomial multiples of the relations is
// subtracted from the count of basis monomials.
class PresentedAlgebra {
public:
  PresentedAlgebra(AlgebraPtr alg, std::vector<Poly> relations);

  const AlgebraPtr& algebra() const { return alg_; }
  const std::vector<Poly>& relations() const { return rels_; }

  // Relations must be homogeneous in the queried grading; throws otherwise.
  std::size_t graded_dim(BiDegree deg) const;
  std::size_t graded_dim_total(int total) const;
  // Coefficients of the Poincare series by total degree, 0..max_total.
  std::vector<std::size_t> poincare_coeffs(int max_total) const;

private:
  AlgebraPtr alg_;
  std::vector<Poly> rels_;
};

}  // namespace coalg::poly
