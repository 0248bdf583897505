#include "coalg/hopf.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace coalg::hopf {

using poly::add;
using poly::Exp;
using poly::is_homogeneous;
using poly::is_homogeneous_total;
using poly::mono_degree;
using poly::mono_total;
using poly::monomial_basis;
using poly::monomial_basis_total;
using poly::monomial_basis_upto;
using poly::multiply;

std::string flavor_name(Flavor f) {
  switch (f) {
    case Flavor::lambda1: return "lambda1";
    case Flavor::lambda2: return "lambda2";
    case Flavor::sing_z2: return "sing_z2";
    case Flavor::sing_gm: return "sing_gm";
  }
  return "?";
}

std::optional<Flavor> flavor_from_name(const std::string& s) {
  if (s == "lambda1") return Flavor::lambda1;
  if (s == "lambda2") return Flavor::lambda2;
  if (s == "sing_z2") return Flavor::sing_z2;
  if (s == "sing_gm") return Flavor::sing_gm;
  return std::nullopt;
}

Monomial embed_at(const Monomial& m, std::size_t offset, std::size_t target_arity) {
  Monomial r{std::vector<Exp>(target_arity, 0)};
  for (std::size_t i = 0; i < m.e.size(); ++i) r.e[offset + i] = m.e[i];
  return r;
}

Poly embed_poly(const PolyAlgebra& dst, const Poly& p, std::size_t offset) {
  std::vector<Monomial> terms;
  terms.reserve(p.terms().size());
  for (const auto& t : p.terms()) terms.push_back(embed_at(t, offset, dst.arity()));
  return poly::from_terms(dst, std::move(terms));
}

Monomial TensorAlgebra::embed_left(const Monomial& m) const {
  return embed_at(m, 0, combined->arity());
}

Monomial TensorAlgebra::embed_right(const Monomial& m) const {
  return embed_at(m, left_arity, combined->arity());
}

std::pair<Monomial, Monomial> TensorAlgebra::split(const Monomial& m) const {
  Monomial l{std::vector<Exp>(left_arity, 0)};
  Monomial r{std::vector<Exp>(combined->arity() - left_arity, 0)};
  for (std::size_t i = 0; i < left_arity; ++i) l.e[i] = m.e[i];
  for (std::size_t i = left_arity; i < m.e.size(); ++i) r.e[i - left_arity] = m.e[i];
  return {std::move(l), std::move(r)};
}

TensorAlgebra tensor(const AlgebraPtr& left, const AlgebraPtr& right) {
  std::vector<GradedVariable> vars;
  std::set<std::string> used;
  for (std::size_t i = 0; i < left->arity(); ++i) {
    vars.push_back(left->var(i));
    used.insert(vars.back().name);
  }
  for (std::size_t i = 0; i < right->arity(); ++i) {
    GradedVariable v = right->var(i);
    while (used.count(v.name)) v.name += "'";
    used.insert(v.name);
    vars.push_back(std::move(v));
  }
  return TensorAlgebra{std::make_shared<PolyAlgebra>(std::move(vars)), left->arity()};
}

Homomorphism::Homomorphism(AlgebraPtr src, AlgebraPtr dst, std::vector<Poly> gen_images)
    : src_(std::move(src)), dst_(std::move(dst)), images_(std::move(gen_images)) {
  if (images_.size() != src_->arity())
    throw std::invalid_argument("homomorphism needs one image per source variable");
}

Poly Homomorphism::apply(const Monomial& m) const {
  if (m.is_one()) return Poly::one(*dst_);
  auto it = memo_.find(m);
  if (it != memo_.end()) return it->second;
  std::size_t v = 0;
  while (m.e[v] == 0) ++v;
  Monomial rest = m;
  rest.e[v] -= 1;
  Poly out = multiply(*dst_, apply(rest), images_[v]);
  memo_.emplace(m, out);
  return out;
}

Poly Homomorphism::apply(const Poly& p) const {
  Poly out;
  for (const auto& t : p.terms()) out = add(*dst_, out, apply(t));
  return out;
}

HopfDescriptor::HopfDescriptor(Flavor f, AlgebraPtr alg)
    : flavor_(f), alg_(std::move(alg)), dbl_(tensor(alg_, alg_)) {
  std::vector<Poly> images;
  for (std::size_t i = 0; i < alg_->arity(); ++i) {
    Poly left = Poly::monomial(dbl_.embed_left(Poly::variable(*alg_, i).terms()[0]));
    Poly right = Poly::monomial(dbl_.embed_right(Poly::variable(*alg_, i).terms()[0]));
    images.push_back(add(*dbl_.combined, left, right));
  }
  delta_ = std::make_shared<const Homomorphism>(alg_, dbl_.combined, std::move(images));
}

HopfDescriptor HopfDescriptor::make(Flavor f) {
  std::vector<GradedVariable> vars;
  switch (f) {
    case Flavor::lambda1: vars = {{"x2", {1, 1}, std::nullopt}}; break;
    case Flavor::lambda2: vars = {{"x1", {1, 0}, Exp(1)}, {"x2", {1, 1}, std::nullopt}}; break;
    case Flavor::sing_z2: vars = {{"z", {1, 0}, std::nullopt}}; break;
    case Flavor::sing_gm: vars = {{"t", {2, 0}, std::nullopt}}; break;
  }
  return HopfDescriptor(f, std::make_shared<PolyAlgebra>(std::move(vars)));
}

Monomial HopfDescriptor::lambda_of_index(int i) const {
  if (i < 0) throw std::invalid_argument("negative d index");
  switch (flavor_) {
    case Flavor::lambda1:
    case Flavor::sing_z2:
    case Flavor::sing_gm: return Monomial{{static_cast<Exp>(i)}};
    case Flavor::lambda2: return Monomial{{static_cast<Exp>(i & 1), static_cast<Exp>(i >> 1)}};
  }
  throw std::logic_error("unreachable");
}

std::optional<int> HopfDescriptor::index_of_lambda(const Monomial& m) const {
  switch (flavor_) {
    case Flavor::lambda1:
    case Flavor::sing_z2:
    case Flavor::sing_gm: return static_cast<int>(m.e[0]);
    case Flavor::lambda2:
      if (m.e[0] > 1) return std::nullopt;
      return 2 * static_cast<int>(m.e[1]) + static_cast<int>(m.e[0]);
  }
  return std::nullopt;
}

int HopfDescriptor::max_index_within(BiDegree avail) const {
  int best = 0;
  const int scan = 2 * (avail.a + avail.b) + 4;
  for (int i = 1; i <= scan; ++i) {
    BiDegree d = mono_degree(*alg_, lambda_of_index(i));
    if (d.a <= avail.a && d.b <= avail.b) best = i;
  }
  return best;
}

bool HopfDescriptor::index_pair_ok(int i1, int i2) const {
  if (flavor_ == Flavor::lambda2) return !((i1 & 1) && (i2 & 1));
  return true;
}

ComoduleAlgebra::ComoduleAlgebra(HopfDescriptor h, AlgebraPtr a,
                                 std::vector<Poly> coaction_gen_images, std::string name)
    : hopf_(std::move(h)), A_(std::move(a)), LA_(tensor(hopf_.algebra(), A_)), name_(std::move(name)) {
  if (coaction_gen_images.size() != A_->arity())
    throw std::invalid_argument("coaction needs one image per generator");
  for (std::size_t i = 0; i < A_->arity(); ++i) {
    BiDegree d;
    if (!is_homogeneous(*LA_.combined, coaction_gen_images[i], &d) ||
        (!coaction_gen_images[i].is_zero() && d != A_->var(i).deg))
      throw std::invalid_argument("coaction image of " + A_->var(i).name +
                                  " is not homogeneous of the generator degree");
  }
  phi_ = std::make_shared<const Homomorphism>(A_, LA_.combined, std::move(coaction_gen_images));
  gen_d_.resize(A_->arity());
  for (std::size_t i = 0; i < A_->arity(); ++i) {
    for (const auto& t : phi_->gen_image(i).terms()) {
      auto [lm, am] = LA_.split(t);
      auto idx = hopf_.index_of_lambda(lm);
      if (!idx) throw std::logic_error("coaction term outside the Hopf basis");
      auto& slot = gen_d_[i][*idx];
      slot = add(*A_, slot, Poly::monomial(am));
    }
  }
}

Poly ComoduleAlgebra::d_op(int i, const Monomial& m) const {
  if (i < 0) throw std::invalid_argument("negative d index");
  if (m.is_one()) return i == 0 ? Poly::one(*A_) : Poly();
  auto& memo = d_memo_[i];
  auto it = memo.find(m);
  if (it != memo.end()) return it->second;

  std::size_t v = 0;
  while (m.e[v] == 0) ++v;
  Monomial rest = m;
  rest.e[v] -= 1;

  Poly out;
  for (int i1 = 0; i1 <= i; ++i1) {
    if (!hopf_.index_pair_ok(i1, i - i1)) continue;
    auto g = gen_d_[v].find(i1);
    if (g == gen_d_[v].end()) continue;
    Poly tail = d_op(i - i1, rest);
    if (tail.is_zero()) continue;
    out = add(*A_, out, multiply(*A_, g->second, tail));
  }
  memo.emplace(m, out);
  return out;
}

Poly ComoduleAlgebra::d_op(int i, const Poly& p) const {
  Poly out;
  for (const auto& t : p.terms()) out = add(*A_, out, d_op(i, t));
  return out;
}

bool ComoduleAlgebra::is_primitive(const Poly& p) const {
  Poly expect;
  for (const auto& t : p.terms())
    expect = add(*LA_.combined, expect, Poly::monomial(LA_.embed_right(t)));
  return coaction(p) == expect;
}

std::vector<Poly> ComoduleAlgebra::primitive_basis(BiDegree deg) const {
  auto basis = monomial_basis(*A_, deg);
  if (basis.empty()) return {};
  // phi(m) - 1 (x) m, expressed over the union of occurring monomials.
  std::vector<Poly> reduced;
  reduced.reserve(basis.size());
  std::vector<Monomial> all_terms;
  for (const auto& m : basis) {
    Poly q = add(*LA_.combined, coaction(m), Poly::monomial(LA_.embed_right(m)));
    reduced.push_back(q);
    for (const auto& t : q.terms()) all_terms.push_back(t);
  }
  std::sort(all_terms.begin(), all_terms.end(),
            [this](const Monomial& x, const Monomial& y) { return mono_less(*LA_.combined, x, y); });
  all_terms.erase(std::unique(all_terms.begin(), all_terms.end()), all_terms.end());
  auto row_of = [&](const Monomial& t) {
    auto it = std::lower_bound(all_terms.begin(), all_terms.end(), t,
                               [this](const Monomial& x, const Monomial& y) {
                                 return mono_less(*LA_.combined, x, y);
                               });
    return static_cast<std::size_t>(it - all_terms.begin());
  };
  gf2::BitMatrix mat(all_terms.size(), basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c)
    for (const auto& t : reduced[c].terms()) mat.set(row_of(t), c);
  std::vector<Poly> out;
  for (const auto& k : gf2::kernel_basis(mat)) {
    std::vector<Monomial> terms;
    for (std::size_t c = 0; c < basis.size(); ++c)
      if (k.get(c)) terms.push_back(basis[c]);
    out.push_back(poly::from_terms(*A_, std::move(terms)));
  }
  return out;
}

Report check_hopf_axioms(const HopfDescriptor& h, int max_total) {
  Report r;
  const auto& L = *h.algebra();
  const auto& dbl = h.doubled();
  const std::size_t n = L.arity();
  TensorAlgebra triple = tensor(dbl.combined, h.algebra());
  const auto& T3 = *triple.combined;

  std::vector<Poly> im1, im2, imE1, imE2;
  for (std::size_t k = 0; k < n; ++k) {
    im1.push_back(embed_poly(T3, h.delta(Poly::variable(L, k)), 0));
    im2.push_back(Poly::variable(T3, k));
    imE1.push_back(Poly());                  // counit kills the left factor
    imE2.push_back(Poly::variable(L, k));
  }
  for (std::size_t k = 0; k < n; ++k) {
    im1.push_back(Poly::variable(T3, 2 * n + k));
    im2.push_back(embed_poly(T3, h.delta(Poly::variable(L, k)), n));
    imE1.push_back(Poly::variable(L, k));
    imE2.push_back(Poly());
  }
  Homomorphism delta_left(dbl.combined, triple.combined, im1);
  Homomorphism delta_right(dbl.combined, triple.combined, im2);
  Homomorphism counit_left(dbl.combined, h.algebra(), imE1);
  Homomorphism counit_right(dbl.combined, h.algebra(), imE2);

  bool coassoc = true, counit = true, graded = true;
  for (const auto& m : monomial_basis_upto(L, max_total)) {
    Poly d = h.delta(m);
    if (delta_left.apply(d) != delta_right.apply(d)) coassoc = false;
    Poly back = counit_left.apply(d);
    Poly back2 = counit_right.apply(d);
    if (back != Poly::monomial(m) || back2 != Poly::monomial(m)) counit = false;
    BiDegree dd;
    if (!is_homogeneous(*dbl.combined, d, &dd) || dd != mono_degree(L, m)) graded = false;
  }
  r.add("comultiplication coassociativity", coassoc);
  r.add("counit identities", counit);
  r.add("comultiplication preserves the bigrading", graded);

  bool prim = true;
  for (std::size_t k = 0; k < n; ++k) {
    Poly expect = add(*dbl.combined,
                      Poly::monomial(dbl.embed_left(Poly::variable(L, k).terms()[0])),
                      Poly::monomial(dbl.embed_right(Poly::variable(L, k).terms()[0])));
    if (h.delta(Poly::variable(L, k)) != expect) prim = false;
  }
  r.add("generators are primitive", prim);
  return r;
}

Report check_comodule_axioms(const ComoduleAlgebra& ca, int max_total) {
  Report r;
  const auto& h = ca.hopf();
  const auto& A = *ca.algebra();
  const auto& LA = ca.lambda_tensor_a();
  const std::size_t L = h.algebra()->arity();
  const std::size_t nA = A.arity();

  TensorAlgebra triple = tensor(h.doubled().combined, ca.algebra());
  const auto& T3 = *triple.combined;

  std::vector<Poly> im1, im2, imE;
  for (std::size_t k = 0; k < L; ++k) {
    im1.push_back(embed_poly(T3, h.delta(Poly::variable(*h.algebra(), k)), 0));
    im2.push_back(Poly::variable(T3, k));
    imE.push_back(Poly());
  }
  for (std::size_t j = 0; j < nA; ++j) {
    im1.push_back(Poly::variable(T3, 2 * L + j));
    // (1 (x) phi): move the Hopf block right by L, the algebra block to 2L.
    Poly shifted;
    for (const auto& t : ca.coaction_gen(j).terms()) {
      auto [lm, am] = LA.split(t);
      Monomial tm{std::vector<Exp>(T3.arity(), 0)};
      for (std::size_t i = 0; i < L; ++i) tm.e[L + i] = lm.e[i];
      for (std::size_t i = 0; i < nA; ++i) tm.e[2 * L + i] = am.e[i];
      shifted = add(T3, shifted, Poly::monomial(tm));
    }
    im2.push_back(shifted);
    imE.push_back(Poly::variable(A, j));
  }
  Homomorphism lhs(LA.combined, triple.combined, im1);
  Homomorphism rhs(LA.combined, triple.combined, im2);
  Homomorphism counit(LA.combined, ca.algebra(), imE);

  bool coassoc = true, cou = true, graded = true;
  for (const auto& m : monomial_basis_upto(A, max_total)) {
    Poly p = ca.coaction(m);
    if (lhs.apply(p) != rhs.apply(p)) coassoc = false;
    if (counit.apply(p) != Poly::monomial(m)) cou = false;
    BiDegree d;
    if (!is_homogeneous(*LA.combined, p, &d) || d != mono_degree(A, m)) graded = false;
  }
  r.add("coaction coassociativity", coassoc);
  r.add("coaction counit identity", cou);
  r.add("coaction preserves the bigrading", graded);
  return r;
}

Report check_comodule_map(const ComoduleAlgebra& src, const ComoduleAlgebra& dst,
                          const Homomorphism& f, const Homomorphism& g, int max_total) {
  Report r;
  const auto& As = *src.algebra();
  const std::size_t Ls = src.hopf().algebra()->arity();
  const std::size_t Ld = dst.hopf().algebra()->arity();
  const auto& LAd = *dst.lambda_tensor_a().combined;

  std::vector<Poly> images;
  for (std::size_t k = 0; k < Ls; ++k) images.push_back(embed_poly(LAd, g.gen_image(k), 0));
  for (std::size_t j = 0; j < As.arity(); ++j) images.push_back(embed_poly(LAd, f.gen_image(j), Ld));
  Homomorphism gf(src.lambda_tensor_a().combined, dst.lambda_tensor_a().combined, images);

  bool ok = true;
  for (const auto& m : monomial_basis_upto(As, max_total))
    if (gf.apply(src.coaction(m)) != dst.coaction(f.apply(m))) ok = false;
  r.add("map intertwines the coactions", ok);
  return r;
}

Report check_d_operator_identities(const ComoduleAlgebra& ca, int max_total) {
  Report r;
  const auto& A = *ca.algebra();
  const auto& h = ca.hopf();
  auto basis = monomial_basis_upto(A, max_total);

  bool comp = true;
  for (const auto& m : basis) {
    BiDegree dm = mono_degree(A, m);
    int bound = h.max_index_within(dm);
    for (int j = 0; j <= bound; ++j) {
      Poly dj = ca.d_op(j, m);
      for (int i = 0; i + j <= bound; ++i) {
        Poly lhs = ca.d_op(i, dj);
        Poly rhs = gf2::binom_odd(i + j, i) ? ca.d_op(i + j, m) : Poly();
        if (lhs != rhs) comp = false;
      }
    }
  }
  r.add("composition rule d_i d_j = C(i+j, i) d_{i+j}", comp);

  bool mult = true;
  for (const auto& m1 : basis) {
    int t1 = mono_total(A, m1);
    if (t1 == 0 || 2 * t1 > max_total) continue;
    for (const auto& m2 : basis) {
      int t2 = mono_total(A, m2);
      if (t2 == 0 || t1 + t2 > max_total) continue;
      Poly prod = multiply(A, Poly::monomial(m1), Poly::monomial(m2));
      int bound = h.max_index_within(mono_degree(A, m1) + mono_degree(A, m2));
      for (int hh = 0; hh <= bound; ++hh) {
        Poly lhs = ca.d_op(hh, prod);
        Poly rhs;
        for (int i1 = 0; i1 <= hh; ++i1) {
          if (!h.index_pair_ok(i1, hh - i1)) continue;
          rhs = add(A, rhs, multiply(A, ca.d_op(i1, m1), ca.d_op(hh - i1, m2)));
        }
        if (lhs != rhs) mult = false;
      }
    }
  }
  r.add("product expansion of the d-operators", mult);

  // d1(ab)d1(c) + d1(bc)d1(a) + d1(ac)d1(b) = d1(d1(abc)) = 0, any flavor.
  bool cyc = true;
  std::size_t seen = 0;
  for (const auto& ma : basis) {
    for (const auto& mb : basis) {
      for (const auto& mc : basis) {
        if (mono_total(A, ma) + mono_total(A, mb) + mono_total(A, mc) > max_total) continue;
        if (++seen > 2000) break;
        auto pa = Poly::monomial(ma), pb = Poly::monomial(mb), pc = Poly::monomial(mc);
        Poly s = multiply(A, ca.d_op(1, multiply(A, pa, pb)), ca.d_op(1, pc));
        s = add(A, s, multiply(A, ca.d_op(1, multiply(A, pb, pc)), ca.d_op(1, pa)));
        s = add(A, s, multiply(A, ca.d_op(1, multiply(A, pa, pc)), ca.d_op(1, pb)));
        if (!s.is_zero()) cyc = false;
      }
    }
  }
  r.add("cyclic three-term identity for d_1", cyc);
  return r;
}

Report check_coalgebra_iso(const HopfDescriptor& src, const HopfDescriptor& dst,
                           const std::function<Poly(const Monomial&)>& rule, int max_total) {
  Report r;
  const auto& Ls = *src.algebra();
  const auto& Ld = *dst.algebra();
  const auto& dbl_d = dst.doubled();

  bool dims = true, graded = true, bij = true, comult = true, cou = true;
  for (int t = 0; t <= max_total; ++t) {
    auto bs = monomial_basis_total(Ls, t);
    auto bd = monomial_basis_total(Ld, t);
    if (bs.size() != bd.size()) dims = false;
    auto col_of = [&](const Monomial& m) {
      auto it = std::lower_bound(bd.begin(), bd.end(), m, [&Ld](const Monomial& x, const Monomial& y) {
        return mono_less(Ld, x, y);
      });
      return static_cast<std::size_t>(it - bd.begin());
    };
    gf2::RowSpace span(bd.size());
    for (const auto& m : bs) {
      Poly p = rule(m);
      int pt = 0;
      if (!is_homogeneous_total(Ld, p, &pt) || (!p.is_zero() && pt != t)) graded = false;
      gf2::BitVector v(bd.size());
      for (const auto& term : p.terms()) v.set(col_of(term));
      if (!span.add(std::move(v))) bij = false;

      Poly lhs = dst.delta(p);
      Poly rhs;
      Poly dm = src.delta(m);
      for (const auto& term : dm.terms()) {
        auto [mu, nu] = src.doubled().split(term);
        Poly piece = multiply(*dbl_d.combined, embed_poly(*dbl_d.combined, rule(mu), 0),
                              embed_poly(*dbl_d.combined, rule(nu), Ld.arity()));
        rhs = add(*dbl_d.combined, rhs, piece);
      }
      if (lhs != rhs) comult = false;
      if (t == 0 && p != Poly::one(Ld)) cou = false;
    }
  }
  r.add("degreewise dimensions agree", dims);
  r.add("rule preserves total degree", graded);
  r.add("rule is degreewise bijective", bij);
  r.add("rule commutes with comultiplication", comult);
  r.add("rule preserves the counit", cou);
  return r;
}

}  // namespace coalg::hopf
