#include "coalg/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace coalg::poly {

PolyAlgebra::PolyAlgebra(std::vector<GradedVariable> vars) : vars_(std::move(vars)) {
  for (const auto& v : vars_) {
    if (v.deg.total() <= 0) throw std::invalid_argument("variable " + v.name + " needs positive total degree");
    if (v.deg.a < 0 || v.deg.b < 0) throw std::invalid_argument("variable " + v.name + " has a negative degree component");
  }
  for (std::size_t i = 0; i < vars_.size(); ++i)
    for (std::size_t j = i + 1; j < vars_.size(); ++j)
      if (vars_[i].name == vars_[j].name) throw std::invalid_argument("duplicate variable name " + vars_[i].name);
}

long PolyAlgebra::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name) return static_cast<long>(i);
  return -1;
}

bool Monomial::is_one() const {
  return std::all_of(e.begin(), e.end(), [](Exp x) { return x == 0; });
}

BiDegree mono_degree(const PolyAlgebra& alg, const Monomial& m) {
  BiDegree d;
  for (std::size_t i = 0; i < m.e.size(); ++i) {
    d.a += m.e[i] * alg.var(i).deg.a;
    d.b += m.e[i] * alg.var(i).deg.b;
  }
  return d;
}

int mono_total(const PolyAlgebra& alg, const Monomial& m) { return mono_degree(alg, m).total(); }

bool mono_less(const PolyAlgebra& alg, const Monomial& x, const Monomial& y) {
  int tx = mono_total(alg, x), ty = mono_total(alg, y);
  if (tx != ty) return tx < ty;
  return x.e < y.e;
}

std::size_t MonoHash::operator()(const Monomial& m) const {
  std::size_t h = 1469598103934665603ull;
  for (Exp x : m.e) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

Poly Poly::one(const PolyAlgebra& alg) {
  Poly p;
  p.terms_.push_back(Monomial{std::vector<Exp>(alg.arity(), 0)});
  return p;
}

Poly Poly::monomial(Monomial m) {
  Poly p;
  p.terms_.push_back(std::move(m));
  return p;
}

Poly Poly::variable(const PolyAlgebra& alg, std::size_t i) {
  Monomial m{std::vector<Exp>(alg.arity(), 0)};
  m.e[i] = 1;
  return monomial(std::move(m));
}

Poly from_terms(const PolyAlgebra& alg, std::vector<Monomial> terms) {
  std::sort(terms.begin(), terms.end(),
            [&alg](const Monomial& x, const Monomial& y) { return mono_less(alg, x, y); });
  Poly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back() == t)
      p.terms_.pop_back();  // mod 2 cancellation
    else
      p.terms_.push_back(std::move(t));
  }
  return p;
}

Poly add(const PolyAlgebra& alg, const Poly& x, const Poly& y) {
  std::vector<Monomial> terms;
  terms.reserve(x.terms_.size() + y.terms_.size());
  terms.insert(terms.end(), x.terms_.begin(), x.terms_.end());
  terms.insert(terms.end(), y.terms_.begin(), y.terms_.end());
  return from_terms(alg, std::move(terms));
}

namespace {

// Product of two monomials, or nullopt when a cap is exceeded.
std::optional<Monomial> mono_mul(const PolyAlgebra& alg, const Monomial& x, const Monomial& y) {
  Monomial r{std::vector<Exp>(x.e.size())};
  for (std::size_t i = 0; i < x.e.size(); ++i) {
    unsigned s = unsigned(x.e[i]) + unsigned(y.e[i]);
    const auto& cap = alg.var(i).cap;
    if (cap && s > *cap) return std::nullopt;
    if (s > 0xffffu) throw std::overflow_error("exponent overflow");
    r.e[i] = static_cast<Exp>(s);
  }
  return r;
}

}  // namespace

Poly multiply(const PolyAlgebra& alg, const Poly& x, const Poly& y) {
  std::vector<Monomial> terms;
  terms.reserve(x.terms().size() * y.terms().size());
  for (const auto& mx : x.terms())
    for (const auto& my : y.terms())
      if (auto r = mono_mul(alg, mx, my)) terms.push_back(std::move(*r));
  return from_terms(alg, std::move(terms));
}

Poly multiply_mono(const PolyAlgebra& alg, const Poly& x, const Monomial& m) {
  std::vector<Monomial> terms;
  terms.reserve(x.terms().size());
  for (const auto& mx : x.terms())
    if (auto r = mono_mul(alg, mx, m)) terms.push_back(std::move(*r));
  return from_terms(alg, std::move(terms));
}

Poly power(const PolyAlgebra& alg, const Poly& x, unsigned k) {
  Poly r = Poly::one(alg);
  for (unsigned i = 0; i < k; ++i) r = multiply(alg, r, x);
  return r;
}

bool is_homogeneous(const PolyAlgebra& alg, const Poly& p, BiDegree* deg_out) {
  if (p.is_zero()) return true;
  BiDegree d = mono_degree(alg, p.terms().front());
  for (const auto& t : p.terms())
    if (mono_degree(alg, t) != d) return false;
  if (deg_out) *deg_out = d;
  return true;
}

bool is_homogeneous_total(const PolyAlgebra& alg, const Poly& p, int* total_out) {
  if (p.is_zero()) return true;
  int t0 = mono_total(alg, p.terms().front());
  for (const auto& t : p.terms())
    if (mono_total(alg, t) != t0) return false;
  if (total_out) *total_out = t0;
  return true;
}

namespace {

// Recursive enumeration over declaration order. target interpretation:
// exact bidegree, exact weighted total, or weighted total bounded above.
void enumerate(const PolyAlgebra& alg, std::size_t i, BiDegree remaining, Monomial& cur,
               std::vector<Monomial>& out) {
  if (remaining.a < 0 || remaining.b < 0) return;
  if (i == alg.arity()) {
    if (remaining.a == 0 && remaining.b == 0) out.push_back(cur);
    return;
  }
  const auto& v = alg.var(i);
  Exp max_e = v.cap ? *v.cap : Exp(0xffff);
  BiDegree rem = remaining;
  for (Exp e = 0;; ++e) {
    cur.e[i] = e;
    enumerate(alg, i + 1, rem, cur, out);
    if (e == max_e) break;
    rem = rem - v.deg;
    if (rem.a < 0 || rem.b < 0) break;
  }
  cur.e[i] = 0;
}

void enumerate_weighted(const PolyAlgebra& alg, const std::vector<int>& w, std::size_t i,
                        int remaining, bool up_to, Monomial& cur, std::vector<Monomial>& out) {
  if (remaining < 0) return;
  if (i == alg.arity()) {
    if (up_to || remaining == 0) out.push_back(cur);
    return;
  }
  Exp max_e = alg.var(i).cap ? *alg.var(i).cap : Exp(0xffff);
  int rem = remaining;
  for (Exp e = 0;; ++e) {
    cur.e[i] = e;
    enumerate_weighted(alg, w, i + 1, rem, up_to, cur, out);
    if (e == max_e) break;
    rem -= w[i];
    if (rem < 0) break;
  }
  cur.e[i] = 0;
}

std::vector<Monomial> sorted_by_order(const PolyAlgebra& alg, std::vector<Monomial> v) {
  std::sort(v.begin(), v.end(),
            [&alg](const Monomial& x, const Monomial& y) { return mono_less(alg, x, y); });
  return v;
}

}  // namespace

std::vector<Monomial> monomial_basis(const PolyAlgebra& alg, BiDegree deg) {
  std::vector<Monomial> out;
  Monomial cur{std::vector<Exp>(alg.arity(), 0)};
  enumerate(alg, 0, deg, cur, out);
  return sorted_by_order(alg, std::move(out));
}

std::vector<Monomial> monomial_basis_weighted(const PolyAlgebra& alg, const std::vector<int>& weights,
                                              int target, bool up_to) {
  if (weights.size() != alg.arity()) throw std::invalid_argument("weight vector arity mismatch");
  for (int w : weights)
    if (w <= 0) throw std::invalid_argument("weights must be positive");
  std::vector<Monomial> out;
  Monomial cur{std::vector<Exp>(alg.arity(), 0)};
  enumerate_weighted(alg, weights, 0, target, up_to, cur, out);
  return sorted_by_order(alg, std::move(out));
}

namespace {
std::vector<int> total_weights(const PolyAlgebra& alg) {
  std::vector<int> w(alg.arity());
  for (std::size_t i = 0; i < alg.arity(); ++i) w[i] = alg.var(i).deg.total();
  return w;
}
}  // namespace

std::vector<Monomial> monomial_basis_total(const PolyAlgebra& alg, int total) {
  return monomial_basis_weighted(alg, total_weights(alg), total, false);
}

std::vector<Monomial> monomial_basis_upto(const PolyAlgebra& alg, int max_total) {
  return monomial_basis_weighted(alg, total_weights(alg), max_total, true);
}

std::string to_string(const PolyAlgebra& alg, const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.e.size(); ++i) {
    if (m.e[i] == 0) continue;
    if (!s.empty()) s += " ";
    s += alg.var(i).name;
    if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
  }
  return s.empty() ? "1" : s;
}

std::string to_string(const PolyAlgebra& alg, const Poly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& t : p.terms()) {
    if (!s.empty()) s += " + ";
    s += to_string(alg, t);
  }
  return s;
}

Monomial make_mono(const PolyAlgebra& alg, const std::vector<std::pair<std::string, Exp>>& factors) {
  Monomial m{std::vector<Exp>(alg.arity(), 0)};
  for (const auto& [name, e] : factors) {
    long i = alg.index_of(name);
    if (i < 0) throw std::invalid_argument("unknown variable " + name);
    m.e[static_cast<std::size_t>(i)] = static_cast<Exp>(m.e[static_cast<std::size_t>(i)] + e);
  }
  return m;
}

PresentedAlgebra::PresentedAlgebra(AlgebraPtr alg, std::vector<Poly> relations)
    : alg_(std::move(alg)), rels_(std::move(relations)) {
  if (!alg_) throw std::invalid_argument("null algebra");
  for (const auto& r : rels_)
    if (r.is_zero()) throw std::invalid_argument("zero relation");
}

std::size_t PresentedAlgebra::graded_dim(BiDegree deg) const {
  const auto& A = *alg_;
  auto basis = monomial_basis(A, deg);
  if (basis.empty()) return 0;
  auto index_of = [&](const Monomial& m) -> long {
    auto it = std::lower_bound(basis.begin(), basis.end(), m,
                               [&A](const Monomial& x, const Monomial& y) { return mono_less(A, x, y); });
    if (it == basis.end() || !(*it == m)) return -1;
    return it - basis.begin();
  };
  gf2::RowSpace span(basis.size());
  for (const auto& r : rels_) {
    BiDegree rd;
    if (!is_homogeneous(A, r, &rd)) throw std::invalid_argument("relation not bihomogeneous");
    BiDegree mult = deg - rd;
    if (mult.a < 0 || mult.b < 0) continue;
    for (const auto& m : monomial_basis(A, mult)) {
      Poly p = multiply_mono(A, r, m);
      if (p.is_zero()) continue;
      gf2::BitVector row(basis.size());
      for (const auto& t : p.terms()) {
        long j = index_of(t);
        if (j < 0) throw std::logic_error("relation multiple left the graded piece");
        row.set(static_cast<std::size_t>(j));
      }
      span.add(std::move(row));
    }
  }
  return gf2::quotient_dim(basis.size(), span);
}

std::size_t PresentedAlgebra::graded_dim_total(int total) const {
  const auto& A = *alg_;
  auto basis = monomial_basis_total(A, total);
  if (basis.empty()) return 0;
  auto index_of = [&](const Monomial& m) -> long {
    auto it = std::lower_bound(basis.begin(), basis.end(), m,
                               [&A](const Monomial& x, const Monomial& y) { return mono_less(A, x, y); });
    if (it == basis.end() || !(*it == m)) return -1;
    return it - basis.begin();
  };
  gf2::RowSpace span(basis.size());
  for (const auto& r : rels_) {
    int rt = 0;
    if (!is_homogeneous_total(A, r, &rt)) throw std::invalid_argument("relation not homogeneous in total degree");
    if (total - rt < 0) continue;
    for (const auto& m : monomial_basis_total(A, total - rt)) {
      Poly p = multiply_mono(A, r, m);
      if (p.is_zero()) continue;
      gf2::BitVector row(basis.size());
      for (const auto& t : p.terms()) {
        long j = index_of(t);
        if (j < 0) throw std::logic_error("relation multiple left the graded piece");
        row.set(static_cast<std::size_t>(j));
      }
      span.add(std::move(row));
    }
  }
  return gf2::quotient_dim(basis.size(), span);
}

std::vector<std::size_t> PresentedAlgebra::poincare_coeffs(int max_total) const {
  std::vector<std::size_t> out;
  out.reserve(static_cast<std::size_t>(max_total) + 1);
  for (int t = 0; t <= max_total; ++t) out.push_back(graded_dim_total(t));
  return out;
}

}  // namespace coalg::poly
