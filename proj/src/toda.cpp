#include "coalg/toda.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "coalg/gf2.hpp"
#include "coalg/models.hpp"

namespace coalg::toda {

using gf2::BitMatrix;
using gf2::BitVector;
using hopf::Flavor;
using poly::Monomial;

namespace {

using MonoIndex = std::unordered_map<Monomial, std::size_t, poly::MonoHash>;

MonoIndex index_of(const std::vector<Monomial>& mons) {
  MonoIndex idx;
  for (std::size_t i = 0; i < mons.size(); ++i) idx.emplace(mons[i], i);
  return idx;
}

BitVector coords(const Poly& p, const MonoIndex& idx, std::size_t n) {
  BitVector v(n);
  for (const auto& t : p.terms()) v.set(idx.at(t));
  return v;
}

void require_power_of_two(int q) {
  if (q < 1 || (q & (q - 1)) != 0)
    throw std::invalid_argument("sharp index must be a power of two");
}

// Componentwise bidegree envelope of the terms of p.
BiDegree envelope(const poly::PolyAlgebra& alg, const Poly& p) {
  BiDegree env{0, 0};
  for (const auto& t : p.terms()) {
    BiDegree d = poly::mono_degree(alg, t);
    env.a = std::max(env.a, d.a);
    env.b = std::max(env.b, d.b);
  }
  return env;
}

}  // namespace

int max_d_index(const ComoduleAlgebra& ca, const Poly& p) {
  if (p.is_zero()) return 0;
  int bound = ca.hopf().max_index_within(envelope(*ca.algebra(), p));
  for (int i = bound; i >= 1; --i)
    if (!ca.d_op(i, p).is_zero()) return i;
  return 0;
}

bool in_pq(const ComoduleAlgebra& ca, int q, const Poly& p) {
  return max_d_index(ca, p) < q;
}

bool in_principal_ideal(const ComoduleAlgebra& ca, const Poly& g, const Poly& x) {
  const auto& alg = *ca.algebra();
  if (x.is_zero()) return true;
  BiDegree dg, dx;
  if (g.is_zero() || !poly::is_homogeneous(alg, g, &dg) || !poly::is_homogeneous(alg, x, &dx))
    throw std::invalid_argument("ideal membership needs bihomogeneous nonzero data");
  BiDegree rem = dx - dg;
  if (rem.a < 0 || rem.b < 0) return false;
  auto mult = poly::monomial_basis(alg, rem);
  if (mult.empty()) return false;
  auto ambient = poly::monomial_basis(alg, dx);
  auto idx = index_of(ambient);
  BitMatrix M(ambient.size(), mult.size());
  for (std::size_t c = 0; c < mult.size(); ++c) {
    Poly prod = poly::multiply_mono(alg, g, mult[c]);
    for (const auto& t : prod.terms()) M.set(idx.at(t), c);
  }
  return gf2::solve(M, coords(x, idx, ambient.size())).has_value();
}

std::optional<SharpElement> find_sharp(const ComoduleAlgebra& ca, int max_q) {
  const auto& alg = *ca.algebra();
  const auto& h = ca.hopf();
  const Poly unit = Poly::one(alg);

  auto passes = [&](const Poly& cand, int q) {
    return !cand.is_zero() && ca.d_op(q, cand) == unit && max_d_index(ca, cand) == q;
  };

  // The square-zero coefficient flavor needs an even index.
  int q0 = (h.flavor() == Flavor::lambda2) ? 2 : 1;
  for (int q = q0; q <= max_q; q *= 2) {
    BiDegree want = poly::mono_degree(*h.algebra(), h.lambda_of_index(q));
    for (std::size_t i = 0; i < alg.arity(); ++i) {
      if (alg.var(i).deg != want) continue;
      Poly g = Poly::variable(alg, i);
      if (passes(g, q)) return SharpElement{g, q};
    }
    auto mons = poly::monomial_basis(alg, want);
    if (mons.size() > 20) continue;  // combination search stays in small spans
    for (unsigned mask = 1; mask < (1u << mons.size()); ++mask) {
      std::vector<Monomial> take;
      for (std::size_t j = 0; j < mons.size(); ++j)
        if (mask >> j & 1) take.push_back(mons[j]);
      if (take.size() == 1) {
        unsigned sum = 0;
        for (poly::Exp e : take[0].e) sum += e;
        if (sum == 1) continue;  // bare generator, already tried
      }
      Poly cand = poly::from_terms(alg, std::move(take));
      if (passes(cand, q)) return SharpElement{cand, q};
    }
  }
  return std::nullopt;
}

std::vector<Poly> pq_basis(const ComoduleAlgebra& ca, const SharpElement& sharp, BiDegree deg) {
  require_power_of_two(sharp.q);
  const auto& alg = *ca.algebra();
  const auto& h = ca.hopf();
  if (deg.a < 0 || deg.b < 0) return {};
  auto mons = poly::monomial_basis(alg, deg);
  if (mons.empty()) return {};

  // One constraint block per d-index >= q that can act in this bidegree.
  int bound = h.max_index_within(deg);
  struct Block {
    int i;
    std::size_t offset;
    std::vector<Monomial> image;
    MonoIndex idx;
  };
  std::vector<Block> blocks;
  std::size_t rows = 0;
  for (int i = sharp.q; i <= bound; ++i) {
    BiDegree tgt = deg - poly::mono_degree(*h.algebra(), h.lambda_of_index(i));
    auto image = poly::monomial_basis(alg, tgt);
    if (image.empty()) continue;
    auto idx = index_of(image);
    blocks.push_back({i, rows, std::move(image), std::move(idx)});
    rows += blocks.back().image.size();
  }
  if (blocks.empty()) {
    std::vector<Poly> out;
    out.reserve(mons.size());
    for (const auto& m : mons) out.push_back(Poly::monomial(m));
    return out;
  }

  BitMatrix M(rows, mons.size());
  for (std::size_t c = 0; c < mons.size(); ++c)
    for (const auto& bl : blocks) {
      Poly im = ca.d_op(bl.i, Poly::monomial(mons[c]));
      for (const auto& t : im.terms()) M.set(bl.offset + bl.idx.at(t), c);
    }

  std::vector<Poly> out;
  for (const auto& v : gf2::kernel_basis(M)) {
    std::vector<Monomial> take;
    for (std::size_t c = 0; c < mons.size(); ++c)
      if (v.get(c)) take.push_back(mons[c]);
    out.push_back(poly::from_terms(alg, std::move(take)));
  }
  return out;
}

std::vector<Poly> pq_basis_total(const ComoduleAlgebra& ca, const SharpElement& sharp, int total) {
  std::vector<Poly> out;
  for (int a = 0; a <= total; ++a) {
    auto piece = pq_basis(ca, sharp, {a, total - a});
    out.insert(out.end(), piece.begin(), piece.end());
  }
  return out;
}

PqBasis pq_basis_table(const ComoduleAlgebra& ca, const SharpElement& sharp, int max_total) {
  PqBasis out;
  out.q = sharp.q;
  for (int t = 0; t <= max_total; ++t)
    for (int a = 0; a <= t; ++a) {
      BiDegree d{a, t - a};
      auto piece = pq_basis(ca, sharp, d);
      if (!piece.empty()) out.basis.emplace(d, std::move(piece));
    }
  return out;
}

Poly canonical_lift(const ComoduleAlgebra& ca, const SharpElement& sharp, const Poly& a) {
  require_power_of_two(sharp.q);
  const auto& alg = *ca.algebra();
  BiDegree deg;
  if (!poly::is_homogeneous(alg, a, &deg))
    throw std::invalid_argument("canonical lift needs a bihomogeneous input");
  Poly cur = a;
  int prev = -1;
  while (true) {
    int top = max_d_index(ca, cur);
    if (top < sharp.q) return cur;
    if (prev >= 0 && top >= prev)
      throw std::invalid_argument("peeling does not terminate; the sharp element is invalid");
    prev = top;
    int j = top / sharp.q;
    Poly b = ca.d_op(sharp.q * j, cur);
    cur = poly::add(alg, cur, poly::multiply(alg, poly::power(alg, sharp.element, unsigned(j)), b));
  }
}

Poly star(const ComoduleAlgebra& ca, const SharpElement& sharp, const Poly& a, const Poly& b) {
  if (sharp.q != 2) throw std::invalid_argument("star product needs a sharp element of index 2");
  if (!in_pq(ca, 2, a) || !in_pq(ca, 2, b))
    throw std::invalid_argument("star operands must lie in P_2");
  const auto& alg = *ca.algebra();
  Poly ab = poly::multiply(alg, a, b);
  if (ca.hopf().flavor() == Flavor::lambda2) return ab;
  Poly corr = poly::multiply(alg, poly::multiply(alg, ca.d_op(1, a), ca.d_op(1, b)), sharp.element);
  return poly::add(alg, ab, corr);
}

std::map<int, std::size_t> d1_cohomology(const ComoduleAlgebra& ca, const SharpElement& sharp,
                                         int max_total) {
  if (sharp.q != 2) throw std::invalid_argument("the d_1 complex lives on P_2; need index 2");
  const auto& alg = *ca.algebra();
  const auto& h = ca.hopf();
  BiDegree shift = poly::mono_degree(*h.algebra(), h.lambda_of_index(1));

  // Per bidegree: dimension of the P_2 piece and the rank of d_1 leaving it.
  std::map<std::pair<int, int>, std::pair<std::size_t, std::size_t>> piece;
  int reach = max_total + shift.total();
  for (int t = 0; t <= reach; ++t)
    for (int a = 0; a <= t; ++a) {
      BiDegree d{a, t - a};
      auto B = pq_basis(ca, sharp, d);
      if (B.empty()) continue;
      std::size_t r = 0;
      BiDegree tgt = d - shift;
      if (tgt.a >= 0 && tgt.b >= 0) {
        auto image = poly::monomial_basis(alg, tgt);
        if (!image.empty()) {
          auto idx = index_of(image);
          BitMatrix M(B.size(), image.size());
          for (std::size_t k = 0; k < B.size(); ++k) {
            Poly im = ca.d_op(1, B[k]);
            for (const auto& term : im.terms()) M.set(k, idx.at(term));
          }
          r = gf2::rank(M);
        }
      }
      piece[{d.a, d.b}] = {B.size(), r};
    }

  std::map<int, std::size_t> out;
  for (int t = 0; t <= max_total; ++t) out[t] = 0;
  for (const auto& [key, dims] : piece) {
    BiDegree d{key.first, key.second};
    if (d.total() > max_total) continue;
    std::size_t ker = dims.first - dims.second;
    auto src = piece.find({d.a + shift.a, d.b + shift.b});
    std::size_t img = (src == piece.end()) ? 0 : src->second.second;
    if (img > ker) throw std::logic_error("d_1 image escapes its kernel; comodule data corrupt");
    out[d.total()] += ker - img;
  }
  return out;
}

BarGenerators bar_generators(const ComoduleAlgebra& ca, const SharpElement& sharp) {
  if (sharp.q != 2)
    throw std::invalid_argument("generator lifts use the d_1 pairing; need a sharp of index 2");
  const auto& alg = *ca.algebra();

  BarGenerators out;
  std::map<int, std::size_t> pos;
  for (std::size_t i = 0; i < alg.arity(); ++i) {
    const std::string& n = alg.var(i).name;
    std::size_t cut = n.find_last_not_of("0123456789") + 1;
    if (cut >= n.size())
      throw std::invalid_argument("generator lifts need names ending in a numeric index");
    int idx = std::stoi(n.substr(cut));
    if (!pos.emplace(idx, i).second)
      throw std::invalid_argument("generator lifts need distinct numeric indices");
    out.name[idx] = n;
  }

  for (const auto& [idx, i] : pos) {
    out.indices.push_back(idx);
    if (idx % 2 != 0) continue;
    Poly v = Poly::variable(alg, i);
    out.lift[idx] = (v == sharp.element) ? v : canonical_lift(ca, sharp, v);
  }
  for (const auto& [idx, i] : pos) {
    if (idx % 2 == 0) continue;
    auto up = out.lift.find(idx + 1);
    if (up == out.lift.end())
      throw std::invalid_argument("odd generator index " + std::to_string(idx) +
                                  " has no even partner");
    out.lift[idx] = ca.d_op(1, up->second);
  }
  return out;
}

Poly build_b(const ComoduleAlgebra& ca, const SharpElement& sharp, const BarGenerators& bar,
             int h) {
  const auto& alg = *ca.algebra();
  auto lift_at = [&](int idx) -> const Poly& {
    auto it = bar.lift.find(idx);
    if (it == bar.lift.end()) throw std::out_of_range("b index out of range");
    return it->second;
  };
  if (h < 2) throw std::out_of_range("b index out of range");
  const Poly& even = lift_at(2 * h);
  Poly out = star(ca, sharp, even, even);
  if (ca.hopf().flavor() != Flavor::lambda2) {
    Poly cross = poly::multiply(alg, poly::multiply(alg, lift_at(1), even), lift_at(2 * h - 1));
    out = poly::add(alg, out, cross);
  }
  if (!ca.is_primitive(out)) throw std::logic_error("constructed b class is not primitive");
  return out;
}

Poly build_y(const ComoduleAlgebra& ca, const SharpElement& sharp, const BarGenerators& bar,
             const std::vector<int>& I) {
  if (I.empty()) return Poly::zero();
  for (std::size_t k = 0; k < I.size(); ++k) {
    if (I[k] < 2 || (k && I[k] <= I[k - 1])) throw std::out_of_range("y index set out of range");
    if (!bar.lift.count(2 * I[k])) throw std::out_of_range("y index set out of range");
  }
  Poly acc = bar.lift.at(2 * I[0]);
  for (std::size_t k = 1; k < I.size(); ++k) acc = star(ca, sharp, acc, bar.lift.at(2 * I[k]));
  Poly out = ca.d_op(1, acc);
  if (!ca.is_primitive(out)) throw std::logic_error("constructed y class is not primitive");
  return out;
}

Report verify_relations(const poly::PolyAlgebra& pres, const std::vector<Poly>& relations,
                        const std::map<std::string, Poly>& images, const ComoduleAlgebra& ca) {
  const auto& alg = *ca.algebra();
  Report r;
  if (relations.empty()) {
    r.add("no relations to check", true);
    return r;
  }
  for (const Poly& rel : relations) {
    std::string label = "relation " + poly::to_string(pres, rel) + " vanishes after substitution";
    bool applicable = true;
    for (const auto& term : rel.terms())
      for (std::size_t i = 0; i < pres.arity(); ++i)
        if (term.e[i] > 0 && !images.count(pres.var(i).name)) applicable = false;
    if (!applicable) {
      r.add(label, true, "skipped: uses a class with no image inside the algebra");
      continue;
    }
    Poly sum = Poly::zero();
    for (const auto& term : rel.terms()) {
      Poly prod = Poly::one(alg);
      for (std::size_t i = 0; i < pres.arity(); ++i)
        if (term.e[i] > 0)
          prod = poly::multiply(alg, prod,
                                poly::power(alg, images.at(pres.var(i).name), term.e[i]));
      sum = poly::add(alg, sum, prod);
    }
    r.add(label, sum.is_zero(), sum.is_zero() ? "" : "residue " + poly::to_string(alg, sum));
  }
  return r;
}

Report verify_family_relations(const std::string& family, int m) {
  if (family != "pgl" && family != "pso")
    throw std::invalid_argument("unknown structure family: " + family);
  if (m < 0) throw std::invalid_argument("the family parameter must be nonnegative");

  ComoduleAlgebra model = (family == "pgl") ? models::make_gl(4 * m + 2) : models::make_so(4 * m + 2);
  const auto& alg = *model.algebra();
  auto tp = models::target_presentation(family, m);

  Report r;
  auto sh = find_sharp(model, 16);
  r.add(model.name() + ": sharp element of index 2 found", sh.has_value() && sh->q == 2,
        sh ? poly::to_string(alg, sh->element) + ", index " + std::to_string(sh->q) : "none");
  if (!sh || sh->q != 2) return r;

  BarGenerators bar = bar_generators(model, *sh);
  for (int idx : bar.indices) {
    const Poly& lift = bar.lift.at(idx);
    Poly orig = Poly::variable(alg, std::size_t(alg.index_of(bar.name.at(idx))));
    if (lift == sh->element) continue;
    r.add(bar.name.at(idx) + ": lift lies in P_2", in_pq(model, 2, lift));
    // Odd lifts of the polynomial-type flavor are pinned by d_1, not by the
    // congruence; skip the congruence line for them.
    if (idx % 2 == 0 || model.hopf().flavor() == Flavor::lambda2)
      r.add(bar.name.at(idx) + ": lift congruent to the generator modulo the sharp element",
            in_principal_ideal(model, sh->element, poly::add(alg, lift, orig)));
  }

  int top = 2 * m + 1;
  std::map<std::string, Poly> images;
  if (family == "pgl") images["x2"] = bar.lift.at(1);
  for (int h = 2; h <= top; ++h) {
    Poly b = build_b(model, *sh, bar, h);
    r.add("b" + std::to_string(h) + " is primitive", model.is_primitive(b));
    images["b" + std::to_string(h)] = std::move(b);
  }
  for (unsigned mask = 1; mask < (1u << (2 * m)); ++mask) {
    std::vector<int> I;
    for (int t = 0; t < 2 * m; ++t)
      if (mask >> t & 1) I.push_back(2 + t);
    Poly y = build_y(model, *sh, bar, I);
    r.add(models::y_symbol(I) + " is primitive", model.is_primitive(y));
    if (I.size() == 1)
      r.add(models::y_symbol(I) + " equals the odd lift at index " + std::to_string(2 * I[0] - 1),
            y == bar.lift.at(2 * I[0] - 1));
    images[models::y_symbol(I)] = std::move(y);
  }

  r.merge(verify_relations(*tp.algebra.algebra(), tp.algebra.relations(), images, model));
  return r;
}

StructureData compute_structure(const ComoduleAlgebra& ca, int max_q) {
  auto sh = find_sharp(ca, max_q);
  if (!sh) throw std::invalid_argument("no sharp element found within the index bound");
  StructureData out{*sh, {}, {}, {}};
  if (sh->q != 2) return out;
  try {
    out.bars = bar_generators(ca, *sh);
  } catch (const std::invalid_argument&) {
    return out;  // unsuitable generator naming: report the sharp element only
  }
  int top = 1;
  while (out.bars.lift.count(2 * (top + 1))) ++top;
  bool cross = ca.hopf().flavor() != Flavor::lambda2;
  for (int h = 2; h <= top; ++h) {
    if (cross && (!out.bars.lift.count(1) || !out.bars.lift.count(2 * h - 1))) break;
    out.b.emplace_back("b" + std::to_string(h), build_b(ca, *sh, out.bars, h));
  }
  int span = 1 + int(out.b.size());  // largest h with a built b class
  for (unsigned mask = 1; mask < (1u << (span - 1)); ++mask) {
    std::vector<int> I;
    for (int t = 0; t < span - 1; ++t)
      if (mask >> t & 1) I.push_back(2 + t);
    out.y.emplace_back(models::y_symbol(I), build_y(ca, *sh, out.bars, I));
  }
  return out;
}

}  // namespace coalg::toda
