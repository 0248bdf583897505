#include "coalg/cotor.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace coalg::cotor {

using hopf::embed_poly;
using poly::add;
using poly::Exp;
using poly::from_terms;
using poly::GradedVariable;
using poly::mono_degree;
using poly::mono_less;
using poly::monomial_basis_upto;
using poly::monomial_basis_weighted;
using poly::multiply;
using poly::PolyAlgebra;

std::size_t CotorTable::dim(TriDegree t) const {
  auto it = dims.find(t);
  return it == dims.end() ? 0 : it->second;
}

std::map<int, std::size_t> CotorTable::total_dims() const {
  std::map<int, std::size_t> out;
  for (const auto& [k, d] : dims) out[k.total()] += d;
  return out;
}

std::map<std::pair<int, int>, std::size_t> CotorTable::hodge_dims() const {
  std::map<std::pair<int, int>, std::size_t> out;
  for (const auto& [k, d] : dims) out[k.hodge()] += d;
  return out;
}

namespace {

std::vector<std::pair<TriDegree, std::size_t>> sorted_entries(const CotorTable& t) {
  std::vector<std::pair<TriDegree, std::size_t>> es(t.dims.begin(), t.dims.end());
  std::sort(es.begin(), es.end(), [](const auto& l, const auto& r) {
    return std::tuple(l.first.total(), l.first.s, l.first.a, l.first.b) <
           std::tuple(r.first.total(), r.first.s, r.first.a, r.first.b);
  });
  return es;
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string CotorTable::to_csv() const {
  std::string out = "s,a,b,total,hodge_a,hodge_b,dim\n";
  for (const auto& [k, d] : sorted_entries(*this)) {
    out += std::to_string(k.s) + "," + std::to_string(k.a) + "," + std::to_string(k.b) + "," +
           std::to_string(k.total()) + "," + std::to_string(k.hodge().first) + "," +
           std::to_string(k.hodge().second) + "," + std::to_string(d) + "\n";
  }
  return out;
}

std::string CotorTable::to_json() const {
  std::string out = "{\"model\":\"" + json_escape(model) + "\",\"method\":\"" + json_escape(method) +
                    "\",\"max_total\":" + std::to_string(max_total) +
                    ",\"max_s\":" + std::to_string(max_s) + ",\"entries\":[";
  bool first = true;
  for (const auto& [k, d] : sorted_entries(*this)) {
    if (!first) out += ",";
    first = false;
    out += "{\"s\":" + std::to_string(k.s) + ",\"a\":" + std::to_string(k.a) +
           ",\"b\":" + std::to_string(k.b) + ",\"total\":" + std::to_string(k.total()) +
           ",\"hodge_a\":" + std::to_string(k.hodge().first) +
           ",\"hodge_b\":" + std::to_string(k.hodge().second) + ",\"dim\":" + std::to_string(d) +
           "}";
  }
  out += "]}\n";
  return out;
}

std::vector<TriDegree> table_differences(const CotorTable& x, const CotorTable& y) {
  int t_cap = std::min(x.max_total, y.max_total);
  int s_cap = std::min(x.max_s, y.max_s);
  std::vector<TriDegree> keys;
  for (const auto& [k, d] : x.dims) keys.push_back(k);
  for (const auto& [k, d] : y.dims) keys.push_back(k);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  std::vector<TriDegree> out;
  for (const auto& k : keys) {
    if (k.total() > t_cap || k.s > s_cap) continue;
    if (x.dim(k) != y.dim(k)) out.push_back(k);
  }
  std::sort(out.begin(), out.end(), [](const TriDegree& l, const TriDegree& r) {
    return std::tuple(l.total(), l.s, l.a, l.b) < std::tuple(r.total(), r.s, r.a, r.b);
  });
  return out;
}

TwistingCochain::TwistingCochain(hopf::Flavor f, AlgebraPtr R, std::vector<int> idx)
    : flavor_(f), hopf_(HopfDescriptor::make(f)), R_(std::move(R)), idx_(std::move(idx)) {}

TwistingCochain TwistingCochain::make(hopf::Flavor f, int max_total) {
  auto h = HopfDescriptor::make(f);
  // d-operator indices of the transgressive basis monomials, in ascending
  // display total: x1 (lambda2 only) and the 2-power exponents of the
  // polynomial generator.
  std::vector<int> candidates;
  const int cap = 4 * std::max(max_total, 1) + 4;
  switch (f) {
    case hopf::Flavor::lambda1:
    case hopf::Flavor::sing_z2:
    case hopf::Flavor::sing_gm:
      for (int p = 1; p <= cap; p *= 2) candidates.push_back(p);
      break;
    case hopf::Flavor::lambda2:
      candidates.push_back(1);                                  // x1
      for (int p = 2; p <= cap; p *= 2) candidates.push_back(p);  // x2^(p/2)
      break;
  }
  std::vector<GradedVariable> vars;
  std::vector<int> idx;
  for (int i : candidates) {
    BiDegree internal = mono_degree(*h.algebra(), h.lambda_of_index(i));
    int display = 1 + internal.total();
    if (display > max_total) break;
    vars.push_back({"z" + std::to_string(display), internal, std::nullopt});
    idx.push_back(i);
  }
  return TwistingCochain(f, std::make_shared<PolyAlgebra>(std::move(vars)), std::move(idx));
}

Poly TwistingCochain::theta(const Monomial& lambda_mono) const {
  auto oi = hopf_.index_of_lambda(lambda_mono);
  if (!oi) return Poly();
  for (std::size_t v = 0; v < idx_.size(); ++v)
    if (idx_[v] == *oi) return Poly::variable(*R_, v);
  return Poly();
}

Report TwistingCochain::check_identity(int max_total) const {
  Report r;
  const auto& L = *hopf_.algebra();
  bool ok = true;
  std::size_t checked = 0;
  for (const auto& mu : monomial_basis_upto(L, max_total)) {
    Poly dm = hopf_.delta(mu);
    Poly sum;
    for (const auto& term : dm.terms()) {
      auto [left, right] = hopf_.doubled().split(term);
      sum = add(*R_, sum, multiply(*R_, theta(left), theta(right)));
    }
    if (!sum.is_zero()) ok = false;
    ++checked;
  }
  r.add("theta convolved with itself vanishes on the comultiplication", ok,
        std::to_string(checked) + " basis monomials");
  return r;
}

TwistedComplex::TwistedComplex(ComoduleAlgebra ca, int max_total)
    // The differential raises the display total by one, so the cochain ring
    // must carry the z generators one step past the enumerated range; without
    // them the outgoing rank at the top total is undercounted.
    : ca_(std::move(ca)),
      th_(TwistingCochain::make(ca_.hopf().flavor(), max_total + 1)),
      RA_(hopf::tensor(th_.ring(), ca_.algebra())),
      max_total_(max_total) {
  std::vector<int> weights;
  for (std::size_t v = 0; v < th_.count(); ++v)
    weights.push_back(1 + th_.ring()->var(v).deg.total());
  for (std::size_t j = 0; j < ca_.algebra()->arity(); ++j)
    weights.push_back(ca_.algebra()->var(j).deg.total());
  for (auto& m : monomial_basis_weighted(*RA_.combined, weights, max_total_, true))
    buckets_[tri_degree(m)].push_back(std::move(m));
  // A coaction that fails coassociativity breaks the composition rule for the
  // d-operators and with it d^2 = 0; refuse to hand out such a complex.
  for (const auto& [key, monos] : buckets_)
    for (const auto& m : monos)
      if (!differential(differential(m)).is_zero())
        throw std::invalid_argument("twisted differential fails d^2 = 0 on " +
                                    to_string(*RA_.combined, m) + " for model " + ca_.name());
}

TriDegree TwistedComplex::tri_degree(const Monomial& m) const {
  int s = 0;
  for (std::size_t v = 0; v < th_.count(); ++v) s += m.e[v];
  BiDegree d = mono_degree(*RA_.combined, m);
  return {s, d.a, d.b};
}

Poly TwistedComplex::differential(const Monomial& m) const {
  const std::size_t nz = th_.count();
  const auto& A = *ca_.algebra();
  Monomial am{std::vector<Exp>(A.arity(), 0)};
  for (std::size_t j = 0; j < A.arity(); ++j) am.e[j] = m.e[nz + j];
  std::vector<Monomial> out;
  for (std::size_t v = 0; v < nz; ++v) {
    Poly d = ca_.d_op(th_.d_index(v), am);
    for (const auto& t : d.terms()) {
      Monomial r = m;
      r.e[v] += 1;
      for (std::size_t j = 0; j < A.arity(); ++j) r.e[nz + j] = t.e[j];
      out.push_back(std::move(r));
    }
  }
  return from_terms(*RA_.combined, std::move(out));
}

Poly TwistedComplex::differential(const Poly& p) const {
  Poly out;
  for (const auto& t : p.terms()) out = add(*RA_.combined, out, differential(t));
  return out;
}

const std::vector<Monomial>* TwistedComplex::bucket(TriDegree t) const {
  auto it = buckets_.find(t);
  return it == buckets_.end() ? nullptr : &it->second;
}

Poly TwistedComplex::embed_ring(const Poly& zpart) const {
  return embed_poly(*RA_.combined, zpart, 0);
}

Poly TwistedComplex::embed_alg(const Poly& apart) const {
  return embed_poly(*RA_.combined, apart, th_.count());
}

Report TwistedComplex::check_d_squared() const {
  Report r;
  bool ok = true;
  std::size_t checked = 0;
  for (const auto& [key, monos] : buckets_) {
    for (const auto& m : monos) {
      if (!differential(differential(m)).is_zero()) ok = false;
      ++checked;
    }
  }
  r.add("twisted differential squares to zero", ok, std::to_string(checked) + " monomials");
  return r;
}

bool TwistedComplex::is_cocycle(const Poly& p) const { return differential(p).is_zero(); }

std::pair<Poly, Poly> product_on_rpa(const TwistedComplex& tc, const std::pair<Poly, Poly>& x,
                                     const std::pair<Poly, Poly>& y) {
  const auto& ca = tc.comodule();
  if (!ca.is_primitive(x.second) || !ca.is_primitive(y.second))
    throw std::invalid_argument("algebra part is not primitive");
  return {multiply(*tc.cochain().ring(), x.first, y.first),
          multiply(*ca.algebra(), x.second, y.second)};
}

bool TwistedComplex::is_boundary(const Poly& p) const {
  if (p.is_zero()) return true;
  TriDegree key = tri_degree(p.terms()[0]);
  for (const auto& t : p.terms())
    if (tri_degree(t) != key) throw std::invalid_argument("element is not tri-homogeneous");
  if (key.total() > max_total_) throw std::invalid_argument("element is outside the enumerated range");
  if (!is_cocycle(p)) throw std::invalid_argument("element is not a cocycle");
  const auto* sources = bucket({key.s - 1, key.a, key.b});
  if (!sources) return false;

  std::vector<Poly> images;
  images.reserve(sources->size());
  std::vector<Monomial> rows;
  for (const auto& src : *sources) {
    images.push_back(differential(src));
    for (const auto& t : images.back().terms()) rows.push_back(t);
  }
  for (const auto& t : p.terms()) rows.push_back(t);
  std::sort(rows.begin(), rows.end(), [this](const Monomial& x, const Monomial& y) {
    return mono_less(*RA_.combined, x, y);
  });
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  auto row_of = [&](const Monomial& t) {
    auto it = std::lower_bound(rows.begin(), rows.end(), t,
                               [this](const Monomial& x, const Monomial& y) {
                                 return mono_less(*RA_.combined, x, y);
                               });
    return static_cast<std::size_t>(it - rows.begin());
  };
  gf2::BitMatrix mat(rows.size(), sources->size());
  for (std::size_t c = 0; c < images.size(); ++c)
    for (const auto& t : images[c].terms()) mat.set(row_of(t), c);
  gf2::BitVector rhs(rows.size());
  for (const auto& t : p.terms()) rhs.flip(row_of(t));
  return gf2::solve(mat, rhs).has_value();
}

CotorTable TwistedComplex::cotor(int threads) const {
  // Matrix assembly touches the memoized d-operators, so it stays on one
  // thread; the rank pass is order-free and may fan out.
  std::vector<TriDegree> keys;
  std::vector<gf2::BitMatrix> mats;
  std::vector<std::size_t> sizes;
  for (const auto& [key, monos] : buckets_) {
    std::vector<Poly> images;
    images.reserve(monos.size());
    std::vector<Monomial> rows;
    for (const auto& m : monos) {
      images.push_back(differential(m));
      for (const auto& t : images.back().terms()) rows.push_back(t);
    }
    std::sort(rows.begin(), rows.end(), [this](const Monomial& x, const Monomial& y) {
      return mono_less(*RA_.combined, x, y);
    });
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    gf2::BitMatrix mat(rows.size(), monos.size());
    for (std::size_t c = 0; c < images.size(); ++c)
      for (const auto& t : images[c].terms()) {
        auto it = std::lower_bound(rows.begin(), rows.end(), t,
                                   [this](const Monomial& x, const Monomial& y) {
                                     return mono_less(*RA_.combined, x, y);
                                   });
        mat.set(static_cast<std::size_t>(it - rows.begin()), c);
      }
    keys.push_back(key);
    sizes.push_back(monos.size());
    mats.push_back(std::move(mat));
  }

  std::vector<std::size_t> ranks(mats.size(), 0);
  int nt = std::max(1, threads);
  if (nt == 1) {
    for (std::size_t i = 0; i < mats.size(); ++i) ranks[i] = gf2::rank(std::move(mats[i]));
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= mats.size()) return;
        ranks[i] = gf2::rank(std::move(mats[i]));
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < nt; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::map<TriDegree, std::size_t> rank_of;
  for (std::size_t i = 0; i < keys.size(); ++i) rank_of[keys[i]] = ranks[i];

  CotorTable out;
  out.model = ca_.name();
  out.method = "twisted";
  out.max_total = max_total_;
  out.max_s = max_total_;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    TriDegree below{keys[i].s - 1, keys[i].a, keys[i].b};
    std::size_t cut = ranks[i];
    auto it = rank_of.find(below);
    if (it != rank_of.end()) cut += it->second;
    if (sizes[i] > cut) out.dims[keys[i]] = sizes[i] - cut;
  }
  return out;
}

Report check_twisted_acyclicity(hopf::Flavor f, int max_total) {
  Report r;
  auto h = HopfDescriptor::make(f);
  std::vector<Poly> images;
  for (std::size_t i = 0; i < h.algebra()->arity(); ++i)
    images.push_back(h.delta(Poly::variable(*h.algebra(), i)));
  ComoduleAlgebra self(h, h.algebra(), std::move(images), flavor_name(f) + "-self");
  TwistedComplex tc(std::move(self), max_total);
  CotorTable t = tc.cotor();
  bool ok = t.dims.size() == 1 && t.dim({0, 0, 0}) == 1;
  std::string detail;
  for (const auto& [k, d] : t.dims)
    if (k != TriDegree{0, 0, 0})
      detail += "stray class at s=" + std::to_string(k.s) + ",a=" + std::to_string(k.a) +
                ",b=" + std::to_string(k.b) + "; ";
  r.add("twisted model of " + flavor_name(f) + " resolves the ground field", ok, detail);
  return r;
}

// ---- reduced cobar model ----

namespace {

struct Tuple {
  std::vector<Monomial> letters;
  Monomial m;

  bool operator==(const Tuple&) const = default;
};

struct TupleLess {
  bool operator()(const Tuple& x, const Tuple& y) const {
    if (x.letters.size() != y.letters.size()) return x.letters.size() < y.letters.size();
    for (std::size_t i = 0; i < x.letters.size(); ++i)
      if (x.letters[i].e != y.letters[i].e) return x.letters[i].e < y.letters[i].e;
    return x.m.e < y.m.e;
  }
};

// Differential terms of one cochain, already cancelled mod 2.
std::vector<Tuple> cobar_diff(const ComoduleAlgebra& ca, const Tuple& t) {
  const auto& h = ca.hopf();
  std::vector<Tuple> out;
  for (std::size_t i = 0; i < t.letters.size(); ++i) {
    Poly dm = h.delta(t.letters[i]);
    for (const auto& term : dm.terms()) {
      auto [mu, nu] = h.doubled().split(term);
      if (mu.is_one() || nu.is_one()) continue;
      Tuple nt;
      nt.letters.reserve(t.letters.size() + 1);
      nt.letters.insert(nt.letters.end(), t.letters.begin(), t.letters.begin() + i);
      nt.letters.push_back(std::move(mu));
      nt.letters.push_back(std::move(nu));
      nt.letters.insert(nt.letters.end(), t.letters.begin() + i + 1, t.letters.end());
      nt.m = t.m;
      out.push_back(std::move(nt));
    }
  }
  Poly phi = ca.coaction(t.m);
  for (const auto& term : phi.terms()) {
    auto [lam, am] = ca.lambda_tensor_a().split(term);
    if (lam.is_one()) continue;
    Tuple nt;
    nt.letters = t.letters;
    nt.letters.push_back(std::move(lam));
    nt.m = std::move(am);
    out.push_back(std::move(nt));
  }
  std::sort(out.begin(), out.end(), TupleLess{});
  // cancel equal pairs
  std::vector<Tuple> reduced;
  for (std::size_t i = 0; i < out.size();) {
    std::size_t j = i;
    while (j < out.size() && out[j] == out[i]) ++j;
    if ((j - i) % 2) reduced.push_back(std::move(out[i]));
    i = j;
  }
  return reduced;
}

struct CobarBuckets {
  std::map<TriDegree, std::vector<Tuple>> buckets;
};

CobarBuckets enumerate_cobar(const ComoduleAlgebra& ca, int max_total, int max_s) {
  const auto& L = *ca.hopf().algebra();
  const auto& A = *ca.algebra();
  std::vector<Monomial> letters;
  std::vector<BiDegree> letter_deg;
  for (auto& m : monomial_basis_upto(L, max_total)) {
    if (m.is_one()) continue;
    letter_deg.push_back(mono_degree(L, m));
    letters.push_back(std::move(m));
  }
  auto abase = monomial_basis_upto(A, max_total);

  CobarBuckets out;
  std::vector<Monomial> word;
  std::function<void(int, BiDegree)> rec = [&](int s, BiDegree acc) {
    // close the word with every algebra monomial that still fits
    for (const auto& am : abase) {
      BiDegree d = acc + mono_degree(A, am);
      if (s + d.total() > max_total) continue;
      Tuple t;
      t.letters = word;
      t.m = am;
      out.buckets[TriDegree{s, d.a, d.b}].push_back(std::move(t));
    }
    if (s == max_s) return;
    for (std::size_t i = 0; i < letters.size(); ++i) {
      BiDegree d = acc + letter_deg[i];
      if (s + 1 + d.total() > max_total) continue;
      word.push_back(letters[i]);
      rec(s + 1, d);
      word.pop_back();
    }
  };
  rec(0, BiDegree{0, 0});
  for (auto& [key, v] : out.buckets) std::sort(v.begin(), v.end(), TupleLess{});
  return out;
}

}  // namespace

CotorTable cotor_cobar(const ComoduleAlgebra& ca, int max_total, int max_s, int threads) {
  CobarBuckets cb = enumerate_cobar(ca, max_total, max_s);

  std::vector<TriDegree> keys;
  std::vector<gf2::BitMatrix> mats;
  std::vector<std::size_t> sizes;
  for (const auto& [key, tuples] : cb.buckets) {
    std::vector<std::vector<Tuple>> images;
    images.reserve(tuples.size());
    std::vector<Tuple> rows;
    for (const auto& t : tuples) {
      images.push_back(cobar_diff(ca, t));
      for (const auto& im : images.back()) rows.push_back(im);
    }
    std::sort(rows.begin(), rows.end(), TupleLess{});
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    auto row_of = [&](const Tuple& t) {
      auto it = std::lower_bound(rows.begin(), rows.end(), t, TupleLess{});
      return static_cast<std::size_t>(it - rows.begin());
    };
    gf2::BitMatrix mat(rows.size(), tuples.size());
    for (std::size_t c = 0; c < images.size(); ++c)
      for (const auto& im : images[c]) mat.set(row_of(im), c);
    keys.push_back(key);
    sizes.push_back(tuples.size());
    mats.push_back(std::move(mat));
  }

  std::vector<std::size_t> ranks(mats.size(), 0);
  int nt = std::max(1, threads);
  if (nt == 1) {
    for (std::size_t i = 0; i < mats.size(); ++i) ranks[i] = gf2::rank(std::move(mats[i]));
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= mats.size()) return;
        ranks[i] = gf2::rank(std::move(mats[i]));
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < nt; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::map<TriDegree, std::size_t> rank_of;
  for (std::size_t i = 0; i < keys.size(); ++i) rank_of[keys[i]] = ranks[i];

  CotorTable out;
  out.model = ca.name();
  out.method = "cobar";
  out.max_total = max_total;
  out.max_s = max_s;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    TriDegree below{keys[i].s - 1, keys[i].a, keys[i].b};
    std::size_t cut = ranks[i];
    auto it = rank_of.find(below);
    if (it != rank_of.end()) cut += it->second;
    if (sizes[i] > cut) out.dims[keys[i]] = sizes[i] - cut;
  }
  return out;
}

Report check_cobar_d_squared(const ComoduleAlgebra& ca, int max_total, int max_s) {
  Report r;
  CobarBuckets cb = enumerate_cobar(ca, max_total, max_s);
  bool ok = true;
  std::size_t checked = 0;
  for (const auto& [key, tuples] : cb.buckets) {
    for (const auto& t : tuples) {
      std::vector<Tuple> twice;
      for (const auto& im : cobar_diff(ca, t)) {
        auto dd = cobar_diff(ca, im);
        twice.insert(twice.end(), dd.begin(), dd.end());
      }
      std::sort(twice.begin(), twice.end(), TupleLess{});
      bool zero = true;
      for (std::size_t i = 0; i < twice.size();) {
        std::size_t j = i;
        while (j < twice.size() && twice[j] == twice[i]) ++j;
        if ((j - i) % 2) zero = false;
        i = j;
      }
      if (!zero) ok = false;
      ++checked;
    }
  }
  r.add("cobar differential squares to zero", ok, std::to_string(checked) + " cochains");
  return r;
}

}  // namespace coalg::cotor
