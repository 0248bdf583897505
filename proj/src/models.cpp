#include "coalg/models.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "coalg/gf2.hpp"

namespace coalg::models {

using hopf::Homomorphism;
using hopf::HopfDescriptor;
using hopf::TensorAlgebra;
using poly::AlgebraPtr;
using poly::Exp;
using poly::GradedVariable;
using poly::Monomial;
using poly::PolyAlgebra;
using poly::PresentedAlgebra;

namespace {

// lambda-block exponents (x) one algebra variable (a_var < 0 means the unit).
Monomial basis_term(const TensorAlgebra& LA, const std::vector<Exp>& lam, long a_var, Exp a_exp = 1) {
  Monomial m{std::vector<Exp>(LA.combined->arity(), 0)};
  for (std::size_t i = 0; i < lam.size(); ++i) m.e[i] = lam[i];
  if (a_var >= 0) m.e[LA.left_arity + static_cast<std::size_t>(a_var)] = a_exp;
  return m;
}

// Shared builder for the four families whose coaction reads
// phi(g_i) = sum over i1+i2 = i of C(n - i2, i1) lambda(i1) (x) g_{i2}.
ComoduleAlgebra chern_like(hopf::Flavor f, const std::string& prefix, int n,
                           const std::function<BiDegree(int)>& deg_of,
                           const std::function<std::vector<Exp>(int)>& lam_of,
                           const std::string& name) {
  auto h = HopfDescriptor::make(f);
  std::vector<GradedVariable> vars;
  for (int i = 1; i <= n; ++i) vars.push_back({prefix + std::to_string(i), deg_of(i), std::nullopt});
  auto A = std::make_shared<PolyAlgebra>(std::move(vars));
  auto LA = hopf::tensor(h.algebra(), A);
  std::vector<Poly> images;
  for (int i = 1; i <= n; ++i) {
    std::vector<Monomial> terms;
    for (int i1 = 0; i1 <= i; ++i1) {
      int i2 = i - i1;
      if (!gf2::binom_odd(n - i2, i1)) continue;
      terms.push_back(basis_term(LA, lam_of(i1), i2 - 1));
    }
    images.push_back(poly::from_terms(*LA.combined, std::move(terms)));
  }
  return ComoduleAlgebra(h, A, std::move(images), name);
}

// u_1..u_{2r} (with_u1) or u_2..u_{2r}; u_0 = 1, and u_1 = 0 when absent.
ComoduleAlgebra euler_like(int two_r, bool with_u1, const std::string& name) {
  int r = two_r / 2;
  auto h = HopfDescriptor::make(Flavor::lambda2);
  std::vector<GradedVariable> vars;
  for (int k = with_u1 ? 1 : 2; k <= two_r; ++k)
    vars.push_back({"u" + std::to_string(k), {k / 2, (k + 1) / 2}, std::nullopt});
  auto A = std::make_shared<PolyAlgebra>(std::move(vars));
  auto LA = hopf::tensor(h.algebra(), A);

  auto term = [&](Exp e1, Exp e2, int k, std::vector<Monomial>& out) {
    if (k < 0 || (k == 1 && !with_u1)) return;
    out.push_back(basis_term(LA, {e1, e2}, k == 0 ? -1 : k - (with_u1 ? 1 : 2)));
  };

  std::vector<Poly> images;
  for (int k = with_u1 ? 1 : 2; k <= two_r; ++k) {
    std::vector<Monomial> terms;
    if (k % 2 == 0) {
      int a = k / 2;
      for (int i = 0; i <= a; ++i) {
        int j = a - i;
        if (!gf2::binom_odd(r - j, i)) continue;
        term(0, static_cast<Exp>(i), 2 * j, terms);
        term(1, static_cast<Exp>(i), 2 * j - 1, terms);
      }
    } else {
      int a = (k - 1) / 2;
      for (int i = 0; i <= a; ++i) {
        int j = a - i;
        if (!gf2::binom_odd(r - 1 - j, i)) continue;
        term(0, static_cast<Exp>(i), 2 * j + 1, terms);
      }
    }
    images.push_back(poly::from_terms(*LA.combined, std::move(terms)));
  }
  return ComoduleAlgebra(h, A, std::move(images), name);
}

[[noreturn]] void bad_model(const std::string& msg) { throw std::invalid_argument(msg); }

int parse_param(const std::string& id, const std::string& tail) {
  if (tail.empty() || tail.size() > 4 ||
      !std::all_of(tail.begin(), tail.end(), [](char c) { return c >= '0' && c <= '9'; }))
    bad_model("model id '" + id + "' needs a small positive integer parameter");
  return std::stoi(tail);
}

}  // namespace

ComoduleAlgebra make_gl(int n) {
  if (n < 1) bad_model("gl:<n> needs n >= 1");
  return chern_like(
      Flavor::lambda1, "c", n, [](int i) { return BiDegree{i, i}; },
      [](int i1) { return std::vector<Exp>{static_cast<Exp>(i1)}; }, "gl:" + std::to_string(n));
}

ComoduleAlgebra make_sp(int two_n) {
  if (two_n < 2 || two_n % 2) bad_model("sp:<2n> needs an even parameter >= 2");
  return chern_like(
      Flavor::lambda2, "q", two_n / 2, [](int i) { return BiDegree{2 * i, 2 * i}; },
      [](int i1) { return std::vector<Exp>{0, static_cast<Exp>(2 * i1)}; },
      "sp:" + std::to_string(two_n));
}

ComoduleAlgebra make_so(int two_r) {
  if (two_r < 2 || two_r % 2) bad_model("so:<2r> needs an even parameter >= 2");
  return euler_like(two_r, false, "so:" + std::to_string(two_r));
}

ComoduleAlgebra make_o(int two_r) {
  if (two_r < 2 || two_r % 2) bad_model("o:<2r> needs an even parameter >= 2");
  return euler_like(two_r, true, "o:" + std::to_string(two_r));
}

ComoduleAlgebra make_o2_power(int r) {
  if (r < 1) bad_model("o2_power:<r> needs r >= 1");
  auto h = HopfDescriptor::make(Flavor::lambda2);
  std::vector<GradedVariable> vars;
  for (int i = 1; i <= r; ++i) vars.push_back({"s" + std::to_string(i), {0, 1}, std::nullopt});
  for (int i = 1; i <= r; ++i) vars.push_back({"t" + std::to_string(i), {1, 1}, std::nullopt});
  auto A = std::make_shared<PolyAlgebra>(std::move(vars));
  auto LA = hopf::tensor(h.algebra(), A);
  std::vector<Poly> images;
  for (int i = 0; i < r; ++i)
    images.push_back(Poly::monomial(basis_term(LA, {0, 0}, i)));  // s_i primitive
  for (int i = 0; i < r; ++i)
    images.push_back(poly::from_terms(*LA.combined, {basis_term(LA, {0, 0}, r + i),
                                                     basis_term(LA, {0, 1}, -1),
                                                     basis_term(LA, {1, 0}, i)}));
  return ComoduleAlgebra(h, A, std::move(images), "o2_power:" + std::to_string(r));
}

ComoduleAlgebra make_gl_sing(int n) {
  if (n < 1) bad_model("gl_sing:<n> needs n >= 1");
  return chern_like(
      Flavor::sing_gm, "c", n, [](int i) { return BiDegree{2 * i, 0}; },
      [](int i1) { return std::vector<Exp>{static_cast<Exp>(i1)}; },
      "gl_sing:" + std::to_string(n));
}

ComoduleAlgebra make_sp_sing(int two_n) {
  if (two_n < 2 || two_n % 2) bad_model("sp_sing:<2n> needs an even parameter >= 2");
  return chern_like(
      Flavor::sing_z2, "q", two_n / 2, [](int i) { return BiDegree{4 * i, 0}; },
      [](int i1) { return std::vector<Exp>{static_cast<Exp>(4 * i1)}; },
      "sp_sing:" + std::to_string(two_n));
}

ComoduleAlgebra make_self(Flavor f) {
  static const std::map<Flavor, std::string> names = {{Flavor::lambda1, "gm"},
                                                      {Flavor::lambda2, "mu2"},
                                                      {Flavor::sing_z2, "sing_z2"},
                                                      {Flavor::sing_gm, "sing_cx"}};
  auto h = HopfDescriptor::make(f);
  auto A = h.algebra();
  std::vector<Poly> images;
  for (std::size_t i = 0; i < A->arity(); ++i) images.push_back(h.delta(Poly::variable(*A, i)));
  return ComoduleAlgebra(h, A, std::move(images), names.at(f));
}

ComoduleAlgebra make_trivial(Flavor f) {
  auto h = HopfDescriptor::make(f);
  auto A = std::make_shared<PolyAlgebra>(std::vector<GradedVariable>{});
  return ComoduleAlgebra(h, A, {}, "trivial:" + hopf::flavor_name(f));
}

ComoduleAlgebra make_model(const std::string& id) {
  if (!id.empty() && id[0] == '@') {
    std::ifstream in(id.substr(1));
    if (!in) bad_model("cannot read model file '" + id.substr(1) + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return model_from_json(text.str(), id);
  }
  if (id == "gm") return make_self(Flavor::lambda1);
  if (id == "mu2") return make_self(Flavor::lambda2);
  if (id == "sing_z2") return make_self(Flavor::sing_z2);
  if (id == "sing_cx") return make_self(Flavor::sing_gm);

  auto colon = id.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 >= id.size())
    bad_model("unknown model id '" + id + "'");
  std::string family = id.substr(0, colon);
  std::string tail = id.substr(colon + 1);
  if (family == "trivial") {
    auto f = hopf::flavor_from_name(tail);
    if (!f) bad_model("trivial:<flavor> needs one of lambda1, lambda2, sing_z2, sing_gm");
    return make_trivial(*f);
  }
  int p = parse_param(id, tail);
  if (family == "gl") return make_gl(p);
  if (family == "sp") return make_sp(p);
  if (family == "so") return make_so(p);
  if (family == "o") return make_o(p);
  if (family == "o2_power") return make_o2_power(p);
  if (family == "gl_sing") return make_gl_sing(p);
  if (family == "sp_sing") return make_sp_sing(p);
  bad_model("unknown model id '" + id + "'");
}

namespace {

// [["x2", 1], ...] -> exponent vector over alg; accumulates repeats, checks caps.
std::vector<Exp> parse_mono(const nlohmann::json& j, const PolyAlgebra& alg,
                            const std::string& where) {
  if (!j.is_array()) bad_model(where + ": monomial must be a list of [variable, exponent] pairs");
  std::vector<Exp> e(alg.arity(), 0);
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
        !pair[1].is_number_integer())
      bad_model(where + ": monomial entries must be [variable, exponent] pairs");
    long idx = alg.index_of(pair[0].get<std::string>());
    if (idx < 0) bad_model(where + ": unknown variable '" + pair[0].get<std::string>() + "'");
    long exp = pair[1].get<long>();
    if (exp < 1 || exp > 0xffff) bad_model(where + ": exponent out of range");
    e[static_cast<std::size_t>(idx)] = static_cast<Exp>(e[static_cast<std::size_t>(idx)] + exp);
    const auto& cap = alg.var(static_cast<std::size_t>(idx)).cap;
    if (cap && e[static_cast<std::size_t>(idx)] > *cap)
      bad_model(where + ": exponent of '" + pair[0].get<std::string>() + "' exceeds its cap");
  }
  return e;
}

}  // namespace

ComoduleAlgebra model_from_json(const std::string& text, const std::string& name) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    bad_model(std::string("model file is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("hopf") || !j.contains("variables") || !j.contains("coaction"))
    bad_model("model file needs the fields hopf, variables, coaction");
  if (!j["hopf"].is_string()) bad_model("hopf must be a flavor name");
  auto f = hopf::flavor_from_name(j["hopf"].get<std::string>());
  if (!f) bad_model("unknown hopf flavor '" + j["hopf"].get<std::string>() + "'");
  auto h = HopfDescriptor::make(*f);

  if (!j["variables"].is_array()) bad_model("variables must be a list");
  std::vector<GradedVariable> vars;
  std::set<std::string> seen;
  for (const auto& v : j["variables"]) {
    if (!v.is_object() || !v.contains("name") || !v.contains("deg") || !v["name"].is_string() ||
        !v["deg"].is_array() || v["deg"].size() != 2 || !v["deg"][0].is_number_integer() ||
        !v["deg"][1].is_number_integer())
      bad_model("each variable needs a name and a deg pair [a, b]");
    GradedVariable gv{v["name"].get<std::string>(),
                      {v["deg"][0].get<int>(), v["deg"][1].get<int>()},
                      std::nullopt};
    if (gv.name.empty() || !seen.insert(gv.name).second)
      bad_model("variable names must be nonempty and distinct");
    if (gv.deg.a < 0 || gv.deg.b < 0 || gv.deg.total() < 1)
      bad_model("variable '" + gv.name + "' needs a nonnegative bidegree of positive total");
    if (v.contains("cap")) {
      if (!v["cap"].is_number_integer() || v["cap"].get<long>() < 1 ||
          v["cap"].get<long>() > 0xffff)
        bad_model("variable '" + gv.name + "' has an invalid cap");
      gv.cap = static_cast<Exp>(v["cap"].get<long>());
    }
    vars.push_back(std::move(gv));
  }
  auto A = std::make_shared<PolyAlgebra>(std::move(vars));
  auto LA = hopf::tensor(h.algebra(), A);

  if (!j["coaction"].is_object()) bad_model("coaction must map generator names to term lists");
  for (const auto& [key, val] : j["coaction"].items())
    if (A->index_of(key) < 0) bad_model("coaction names unknown variable '" + key + "'");

  std::vector<Poly> images;
  for (std::size_t i = 0; i < A->arity(); ++i) {
    const std::string& g = A->var(i).name;
    if (!j["coaction"].contains(g)) bad_model("coaction is missing generator '" + g + "'");
    const auto& entry = j["coaction"][g];
    if (!entry.is_array()) bad_model("coaction of '" + g + "' must be a list of term pairs");
    std::vector<Monomial> terms;
    for (const auto& t : entry) {
      if (!t.is_array() || t.size() != 2)
        bad_model("coaction of '" + g + "': each term is a [coefficient, algebra] monomial pair");
      auto le = parse_mono(t[0], *h.algebra(), "coaction of '" + g + "'");
      auto ae = parse_mono(t[1], *A, "coaction of '" + g + "'");
      Monomial m{std::vector<Exp>(LA.combined->arity(), 0)};
      std::copy(le.begin(), le.end(), m.e.begin());
      std::copy(ae.begin(), ae.end(), m.e.begin() + static_cast<long>(LA.left_arity));
      terms.push_back(std::move(m));
    }
    Poly img = poly::from_terms(*LA.combined, std::move(terms));
    // Counit law: the coefficient-degree-zero part must be exactly 1 (x) g.
    Poly unit_part;
    for (const auto& t : img.terms())
      if (LA.split(t).first.is_one()) unit_part = add(*LA.combined, unit_part, Poly::monomial(t));
    Monomial gm{std::vector<Exp>(LA.combined->arity(), 0)};
    gm.e[LA.left_arity + i] = 1;
    if (unit_part != Poly::monomial(gm))
      bad_model("coaction of '" + g + "' must contain the term 1 (x) " + g +
                " and no other term with trivial coefficient");
    images.push_back(std::move(img));
  }
  return ComoduleAlgebra(h, A, std::move(images), name);
}

std::vector<std::string> catalog_sample() {
  return {"gm",          "mu2",       "sing_z2",   "sing_cx",          "trivial:lambda1",
          "trivial:lambda2", "trivial:sing_z2", "trivial:sing_gm", "gl:2",
          "gl:4",        "gl:6",      "sp:2",      "sp:6",             "so:2",
          "so:4",        "so:6",      "o:2",       "o:4",              "o:6",
          "o2_power:1",  "o2_power:2", "o2_power:3", "gl_sing:3",      "sp_sing:6"};
}

namespace {

// Images of u_1..u_{2r} (resp. u_2..) in the s,t-variables: u_{2a} goes to the
// a-th elementary symmetric polynomial in the t's, u_{2a+1} to the sum over j
// of s_j times the a-th elementary symmetric polynomial in the t's without t_j.
std::vector<Poly> pullback_images(const PolyAlgebra& o_alg, const PolyAlgebra& st_alg, int r) {
  auto t_var = [&](int j) { return Poly::variable(st_alg, static_cast<std::size_t>(r + j)); };
  // elem[a] after processing a prefix of the t's; skip < 0 keeps every t.
  auto elementary = [&](int skip) {
    std::vector<Poly> e(static_cast<std::size_t>(r) + 1);
    e[0] = Poly::one(st_alg);
    for (int j = 0; j < r; ++j) {
      if (j == skip) continue;
      for (int a = r; a >= 1; --a)
        e[static_cast<std::size_t>(a)] =
            add(st_alg, e[static_cast<std::size_t>(a)],
                multiply(st_alg, e[static_cast<std::size_t>(a) - 1], t_var(j)));
    }
    return e;
  };
  auto full = elementary(-1);
  std::vector<Poly> images;
  for (std::size_t i = 0; i < o_alg.arity(); ++i) {
    int k = std::stoi(o_alg.var(i).name.substr(1));
    if (k % 2 == 0) {
      images.push_back(full[static_cast<std::size_t>(k / 2)]);
    } else {
      int a = (k - 1) / 2;
      Poly sum;
      for (int jj = 0; jj < r; ++jj) {
        auto without = elementary(jj);
        sum = add(st_alg, sum,
                  multiply(st_alg, Poly::variable(st_alg, static_cast<std::size_t>(jj)),
                           without[static_cast<std::size_t>(a)]));
      }
      images.push_back(std::move(sum));
    }
  }
  return images;
}

}  // namespace

Poly o2r_pullback(const Poly& p, int r) {
  auto src = make_o(2 * r);
  auto dst = make_o2_power(r);
  Homomorphism f(src.algebra(), dst.algebra(), pullback_images(*src.algebra(), *dst.algebra(), r));
  return f.apply(p);
}

Report check_o2_square(int r, int max_total) {
  auto src = make_o(2 * r);
  auto dst = make_o2_power(r);
  Homomorphism f(src.algebra(), dst.algebra(), pullback_images(*src.algebra(), *dst.algebra(), r));
  std::vector<Poly> gid;
  for (std::size_t i = 0; i < src.hopf().algebra()->arity(); ++i)
    gid.push_back(Poly::variable(*dst.hopf().algebra(), i));
  Homomorphism g(src.hopf().algebra(), dst.hopf().algebra(), std::move(gid));
  return hopf::check_comodule_map(src, dst, f, g, max_total);
}

Report check_gl_sp_restriction(int n, int max_total) {
  auto src = make_gl(2 * n);
  auto dst = make_sp(2 * n);
  std::vector<Poly> fim;
  for (int k = 1; k <= 2 * n; ++k)
    fim.push_back(k % 2 ? Poly::zero()
                        : Poly::variable(*dst.algebra(), static_cast<std::size_t>(k / 2 - 1)));
  Homomorphism f(src.algebra(), dst.algebra(), std::move(fim));
  Homomorphism g(src.hopf().algebra(), dst.hopf().algebra(),
                 {Poly::variable(*dst.hopf().algebra(), 1)});
  return hopf::check_comodule_map(src, dst, f, g, max_total);
}

Report check_lambda2_z2_transport(int max_total) {
  auto src = HopfDescriptor::make(Flavor::lambda2);
  auto dst = HopfDescriptor::make(Flavor::sing_z2);
  auto rule = [&dst](const Monomial& m) {
    Monomial out{{static_cast<Exp>(2 * m.e[1] + m.e[0])}};
    (void)dst;
    return Poly::monomial(std::move(out));
  };
  return hopf::check_coalgebra_iso(src, dst, rule, max_total);
}

namespace {

// Shared state for expanding the relation families of one presentation.
struct PresCtx {
  AlgebraPtr alg;
  bool pgl = false;  // else pso
  int m = 0;
  std::map<std::vector<int>, Poly> y_memo;

  Poly var(const std::string& n) const {
    long i = alg->index_of(n);
    if (i < 0) throw std::logic_error("presentation variable missing: " + n);
    return Poly::variable(*alg, static_cast<std::size_t>(i));
  }

  static std::string y_name(const std::vector<int>& idx) {
    bool wide = std::any_of(idx.begin(), idx.end(), [](int v) { return v > 9; });
    std::string s = "y";
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (wide && k) s += "_";
      s += std::to_string(idx[k]);
    }
    return s;
  }

  // Reduction of a y symbol with a sorted index multiset: empty gives 0, a
  // duplicated h peels off as y_L b_h (plus y_{h u L} y_h x2 in the pgl case),
  // and a duplicate-free multiset is a generator.
  Poly y_of(const std::vector<int>& idx) {
    if (idx.empty()) return Poly::zero();
    auto it = y_memo.find(idx);
    if (it != y_memo.end()) return it->second;
    Poly out;
    bool reduced = false;
    for (std::size_t p = 0; p + 1 < idx.size(); ++p) {
      if (idx[p] != idx[p + 1]) continue;
      int h = idx[p];
      std::vector<int> both(idx), one(idx);
      both.erase(both.begin() + static_cast<long>(p), both.begin() + static_cast<long>(p) + 2);
      one.erase(one.begin() + static_cast<long>(p));
      out = multiply(*alg, y_of(both), var("b" + std::to_string(h)));
      if (pgl)
        out = add(*alg, out,
                  multiply(*alg, multiply(*alg, y_of(one), var("y" + std::to_string(h))),
                           var("x2")));
      reduced = true;
      break;
    }
    if (!reduced) out = var(y_name(idx));
    y_memo[idx] = out;
    return out;
  }
};

std::vector<int> subset_of_mask(unsigned mask) {
  std::vector<int> out;
  for (int t = 0; mask; ++t, mask >>= 1)
    if (mask & 1) out.push_back(2 + t);
  return out;
}

}  // namespace

std::string y_symbol(const std::vector<int>& indices) { return PresCtx::y_name(indices); }

namespace {

}  // namespace

TargetPresentation target_presentation(const std::string& family, int m) {
  bool pgl = family == "pgl";
  if (!pgl && family != "pso") throw std::invalid_argument("unknown presentation family '" + family + "'");
  if (m < 0) throw std::invalid_argument("presentation needs m >= 0");

  int nidx = 2 * m;  // index set {2, ..., 2m+1}
  std::vector<GradedVariable> vars;
  vars.push_back({"x2", {1, 1}, std::nullopt});
  if (pgl) vars.push_back({"x3", {1, 2}, std::nullopt});
  for (int h = 2; h <= 2 * m + 1; ++h)
    vars.push_back({"b" + std::to_string(h),
                    pgl ? BiDegree{4 * h, 4 * h} : BiDegree{2 * h, 2 * h}, std::nullopt});
  for (unsigned mask = 1; mask < (1u << nidx); ++mask) {
    auto I = subset_of_mask(mask);
    int d = 0;
    for (int v : I) d += v;
    vars.push_back({PresCtx::y_name(I),
                    pgl ? BiDegree{2 * d - 1, 2 * d - 1} : BiDegree{d - 1, d}, std::nullopt});
  }
  auto alg = std::make_shared<PolyAlgebra>(std::move(vars));

  PresCtx ctx{alg, pgl, m, {}};
  std::vector<Poly> rels;
  std::set<std::string> dedup;
  auto push = [&](const Poly& p) {
    if (!p.is_zero() && dedup.insert(poly::to_string(*alg, p)).second) rels.push_back(p);
  };

  Poly killer = ctx.var(pgl ? "x3" : "x2");
  for (unsigned mi = 1; mi < (1u << nidx); ++mi) {
    auto I = subset_of_mask(mi);
    push(multiply(*alg, killer, ctx.var(PresCtx::y_name(I))));

    for (unsigned mj = 1; mj < (1u << nidx); ++mj) {
      auto J = subset_of_mask(mj);
      Poly rel = multiply(*alg, ctx.var(PresCtx::y_name(I)), ctx.var(PresCtx::y_name(J)));
      if (pgl) {
        // y_I y_J = sum over nonempty K in I of y_{(I-K) u J} prod_{k in K} y_k x2^{|K|-1}
        for (unsigned k = mi; k; k = (k - 1) & mi) {
          auto K = subset_of_mask(k);
          std::vector<int> rest = subset_of_mask(mi & ~k);
          for (int v : J) rest.push_back(v);
          std::sort(rest.begin(), rest.end());
          Poly term = ctx.y_of(rest);
          for (int v : K) term = multiply(*alg, term, ctx.var("y" + std::to_string(v)));
          term = multiply(*alg, term,
                          poly::power(*alg, ctx.var("x2"), static_cast<unsigned>(K.size()) - 1));
          rel = add(*alg, rel, term);
        }
      } else {
        // y_I y_J = sum over p in I of y_{(I u J) - p} y_p, for |I| >= 2
        if (I.size() < 2) continue;
        std::vector<int> concat(I);
        for (int v : J) concat.push_back(v);
        std::sort(concat.begin(), concat.end());
        for (std::size_t pi = 0; pi < I.size(); ++pi) {
          std::vector<int> rest(concat);
          rest.erase(std::find(rest.begin(), rest.end(), I[pi]));
          rel = add(*alg, rel,
                    multiply(*alg, ctx.y_of(rest), ctx.var("y" + std::to_string(I[pi]))));
        }
      }
      push(rel);
    }
  }
  return {family, m, PresentedAlgebra(alg, std::move(rels))};
}

namespace {

std::vector<std::size_t> totals_vec(const CotorTable& ct, int max_total) {
  std::vector<std::size_t> v(static_cast<std::size_t>(max_total) + 1, 0);
  for (const auto& [t, d] : ct.total_dims())
    if (t <= max_total) v[static_cast<std::size_t>(t)] = d;
  return v;
}

Report compare_totals(const std::string& what, const std::vector<std::size_t>& lhs,
                      const std::vector<std::size_t>& rhs) {
  Report r;
  for (std::size_t t = 0; t < lhs.size(); ++t) {
    if (lhs[t] != rhs[t]) {
      r.add(what, false,
            "first mismatch at total degree " + std::to_string(t) + ": " + std::to_string(lhs[t]) +
                " vs " + std::to_string(rhs[t]));
      return r;
    }
  }
  r.add(what, true);
  return r;
}

}  // namespace

Report degeneration_check(const std::string& group, int m, int max_total, int threads) {
  if (group == "pgl" || group == "pso") {
    auto tp = target_presentation(group, m);
    auto pres = tp.algebra.poincare_coeffs(max_total);
    auto model = group == "pgl" ? make_gl(4 * m + 2) : make_so(4 * m + 2);
    cotor::TwistedComplex tc(model, max_total);
    auto ct = tc.cotor(threads);
    return compare_totals(group + " presentation series equals cotor totals of " + model.name() +
                              " through degree " + std::to_string(max_total),
                          pres, totals_vec(ct, max_total));
  }
  if (group == "psp") {
    cotor::TwistedComplex hodge_side(make_sp(4 * m + 2), max_total);
    cotor::TwistedComplex sing_side(make_sp_sing(4 * m + 2), max_total);
    auto ct1 = hodge_side.cotor(threads);
    auto ct2 = sing_side.cotor(threads);
    return compare_totals("cotor totals of sp:" + std::to_string(4 * m + 2) +
                              " equal those of sp_sing:" + std::to_string(4 * m + 2) +
                              " through degree " + std::to_string(max_total),
                          totals_vec(ct1, max_total), totals_vec(ct2, max_total));
  }
  throw std::invalid_argument("unknown degeneration family '" + group + "'");
}

HodgeTable hodge_table(const CotorTable& ct) { return ct.hodge_dims(); }

std::size_t rep_dims(const HodgeTable& ht, int i, int j) {
  auto it = ht.find({i, i + j});
  return it == ht.end() ? 0 : it->second;
}

Report check_hodge_positivity(const CotorTable& ct) {
  Report r;
  for (const auto& [t, d] : ct.dims) {
    auto [a, b] = t.hodge();
    if (d && a > b) {
      r.add("hodge table of " + ct.model + " vanishes above the diagonal", false,
            "nonzero entry at hodge bidegree (" + std::to_string(a) + ", " + std::to_string(b) +
                ")");
      return r;
    }
  }
  r.add("hodge table of " + ct.model + " vanishes above the diagonal", true);
  return r;
}

std::size_t pgl_counting_formula(int m, int i, int j) {
  if (j < 1) throw std::invalid_argument("counting formula needs j >= 1");
  if (i < j) return 0;
  int target = i - j;
  std::vector<int> parts{1};
  for (int h = 2; h <= 2 * m + 1; ++h) parts.push_back(4 * h);
  std::vector<std::size_t> ways(static_cast<std::size_t>(target) + 1, 0);
  ways[0] = 1;
  for (int p : parts)
    for (int v = p; v <= target; ++v) ways[static_cast<std::size_t>(v)] += ways[static_cast<std::size_t>(v - p)];
  return ways[static_cast<std::size_t>(target)];
}

std::map<std::pair<int, int>, std::size_t> pso_nonpure_table(int m, int max_total) {
  auto ca = make_so(4 * m + 2);
  std::map<std::pair<int, int>, std::size_t> out;
  for (int a = 0; 2 * a + 1 <= max_total; ++a) {
    for (int b = a + 1; a + b <= max_total; ++b) {
      auto dim = ca.primitive_basis({a, b}).size();
      if (dim) out[{a, b}] = dim;
    }
  }
  return out;
}

Report check_pso_nonpure(int m, int max_total, int threads) {
  auto prim = pso_nonpure_table(m, max_total);
  cotor::TwistedComplex tc(make_so(4 * m + 2), max_total);
  auto hd = tc.cotor(threads).hodge_dims();
  std::map<std::pair<int, int>, std::size_t> nonpure;
  for (const auto& [hb, d] : hd)
    if (d && hb.first != hb.second && hb.first + hb.second <= max_total) nonpure[hb] = d;

  Report r;
  std::string what = "non-pure hodge entries of so:" + std::to_string(4 * m + 2) +
                     " match its non-pure primitives through degree " + std::to_string(max_total);
  if (prim == nonpure) {
    r.add(what, true);
    return r;
  }
  for (const auto& [k, v] : prim) {
    auto it = nonpure.find(k);
    if (it == nonpure.end() || it->second != v) {
      r.add(what, false,
            "bidegree (" + std::to_string(k.first) + ", " + std::to_string(k.second) +
                "): primitives " + std::to_string(v) + " vs hodge " +
                std::to_string(it == nonpure.end() ? 0 : it->second));
      return r;
    }
  }
  for (const auto& [k, v] : nonpure) {
    if (!prim.count(k)) {
      r.add(what, false,
            "bidegree (" + std::to_string(k.first) + ", " + std::to_string(k.second) +
                "): primitives 0 vs hodge " + std::to_string(v));
      return r;
    }
  }
  return r;
}

}  // namespace coalg::models
