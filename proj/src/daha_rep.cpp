#include "daha1/daha_rep.hpp"

#include <sstream>

namespace daha1 {

std::string gen_name(Gen g) {
  switch (g) {
    case Gen::s: return "s";
    case Gen::p: return "p";
    case Gen::p_inv: return "p^-1";
    case Gen::pi: return "pi";
    case Gen::T: return "T";
    case Gen::T_inv: return "T^-1";
    case Gen::X: return "X";
    case Gen::X_inv: return "X^-1";
    case Gen::Y: return "Y";
    case Gen::Y_inv: return "Y^-1";
  }
  return "?";
}

GaussianTwisted apply_generator(Gen g, const GaussianTwisted& f) {
  const int e = f.gaussian_power;
  const RatQT ue = RatQT::u_pow(e);
  switch (g) {
    case Gen::p:
      // p(gamma) = q^{1/4} X gamma
      return {e, apply_generator(Gen::p, f.base).shifted(e).scaled(ue)};
    case Gen::p_inv:
      return {e, apply_generator(Gen::p_inv, f.base).shifted(-e).scaled(ue)};
    case Gen::pi:
      return {e, apply_generator(Gen::pi, f.base).shifted(-e).scaled(ue)};
    case Gen::Y:
      return apply_generator(Gen::pi, apply_generator(Gen::T, f));
    case Gen::Y_inv:
      return apply_generator(Gen::T_inv, apply_generator(Gen::pi, f));
    default:
      // s fixes gamma, T and X commute with it
      return {e, apply_generator(g, f.base)};
  }
}

LaurentPoly apply_expr(const OpExpr& e, const LaurentPoly& f) {
  LaurentPoly total;
  for (const auto& term : e) {
    LaurentPoly h = f;
    for (auto it = term.word.rbegin(); it != term.word.rend(); ++it) h = apply_generator(*it, h);
    total += h.scaled(term.scalar);
  }
  return total;
}

std::vector<Relation> daha_relations() {
  using G = Gen;
  RatQT c = RatQT::v_pow(1) - RatQT::v_pow(-1);
  return {
      {"TXT=X^-1", {{1, {G::T, G::X, G::T}}}, {{1, {G::X_inv}}}},
      {"TY^-1T=Y", {{1, {G::T, G::Y_inv, G::T}}}, {{1, {G::Y}}}},
      {"Y^-1X^-1YXT^2=q^-1/2", {{1, {G::Y_inv, G::X_inv, G::Y, G::X, G::T, G::T}}}, {{RatQT::u_pow(-2), {}}}},
      {"(T-t^1/2)(T+t^-1/2)=0", {{1, {G::T, G::T}}}, {{c, {G::T}}, {1, {}}}},
      {"TT^-1=1", {{1, {G::T, G::T_inv}}}, {{1, {}}}},
      {"T^-1T=1", {{1, {G::T_inv, G::T}}}, {{1, {}}}},
      {"XX^-1=1", {{1, {G::X, G::X_inv}}}, {{1, {}}}},
      {"X^-1X=1", {{1, {G::X_inv, G::X}}}, {{1, {}}}},
      {"YY^-1=1", {{1, {G::Y, G::Y_inv}}}, {{1, {}}}},
      {"Y^-1Y=1", {{1, {G::Y_inv, G::Y}}}, {{1, {}}}},
  };
}

OpExpr GeneratorImages::image_of(Gen g) const {
  for (const auto& [k, e] : images)
    if (k == g) return e;
  return {{1, {g}}};
}

OpExpr GeneratorImages::substitute(const OpExpr& e) const {
  OpExpr out;
  for (const auto& term : e) {
    OpExpr acc{{term.scalar, {}}};
    for (Gen g : term.word) {
      OpExpr img = image_of(g), next;
      for (const auto& a : acc)
        for (const auto& b : img) {
          OpTerm t{a.scalar * b.scalar, a.word};
          t.word.insert(t.word.end(), b.word.begin(), b.word.end());
          next.push_back(std::move(t));
        }
      acc = std::move(next);
    }
    out.insert(out.end(), acc.begin(), acc.end());
  }
  return out;
}

GeneratorImages tau_plus_images() {
  return {{{Gen::Y, {{RatQT::u_pow(-1), {Gen::X, Gen::Y}}}},
           {Gen::Y_inv, {{RatQT::u_pow(1), {Gen::Y_inv, Gen::X_inv}}}}}};
}

GeneratorImages tau_plus_inverse_images() {
  return {{{Gen::Y, {{RatQT::u_pow(1), {Gen::X_inv, Gen::Y}}}},
           {Gen::Y_inv, {{RatQT::u_pow(-1), {Gen::Y_inv, Gen::X}}}}}};
}

GeneratorImages fourier_images() {
  return {{{Gen::Y, {{1, {Gen::X_inv}}}},
           {Gen::Y_inv, {{1, {Gen::X}}}},
           {Gen::X, {{1, {Gen::T, Gen::Y_inv, Gen::T_inv}}}},
           {Gen::X_inv, {{1, {Gen::T, Gen::Y, Gen::T_inv}}}}}};
}

namespace {

struct Sweep {
  int checked = 0;
  std::vector<std::string> violations;

  void report_into(CheckReport& r) const {
    r.params["checked"] = checked;
    r.lhs = "violations=" + std::to_string(violations.size());
    r.rhs = std::string("violations=0");
    r.pass = violations.empty();
    std::ostringstream os;
    for (std::size_t i = 0; i < violations.size() && i < 8; ++i) os << (i ? "; " : "") << violations[i];
    r.detail = os.str();
  }
};

// Every relation, transported by the images, evaluated on X^m for |m| <= deg.
Sweep sweep_relations(const GeneratorImages* images, int deg) {
  std::vector<Relation> rels = daha_relations();
  if (images)
    for (auto& r : rels) {
      r.lhs = images->substitute(r.lhs);
      r.rhs = images->substitute(r.rhs);
    }
  const int width = 2 * deg + 1;
  std::vector<std::vector<std::string>> bad(width);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < width; ++i) {
    int m = i - deg;
    LaurentPoly xm = LaurentPoly::monomial(m);
    for (const auto& rel : rels)
      if (apply_expr(rel.lhs, xm) != apply_expr(rel.rhs, xm)) bad[i].push_back(rel.name + " on X^" + std::to_string(m));
  }
  Sweep s;
  s.checked = width * static_cast<int>(rels.size());
  for (auto& b : bad) s.violations.insert(s.violations.end(), b.begin(), b.end());
  return s;
}

}  // namespace

CheckReport check_daha_relations(int deg) {
  Stopwatch sw;
  CheckReport r;
  r.check_id = "daha_relations";
  r.params["deg"] = deg;
  sweep_relations(nullptr, deg).report_into(r);
  r.runtime_ms = sw.ms();
  return r;
}

CheckReport check_tau_plus_gaussian(int deg) {
  Stopwatch sw;
  CheckReport r;
  r.check_id = "tau_plus_gaussian";
  r.params["deg"] = deg;
  GeneratorImages fwd = tau_plus_images(), back = tau_plus_inverse_images();
  Sweep s = sweep_relations(&fwd, deg);
  const Gen gens[] = {Gen::T, Gen::T_inv, Gen::X, Gen::X_inv, Gen::Y, Gen::Y_inv};
  for (int m = -deg; m <= deg; ++m) {
    LaurentPoly xm = LaurentPoly::monomial(m);
    for (Gen g : gens) {
      // gamma g gamma^{-1} = tau_+(g)
      GaussianTwisted a = apply_generator(g, GaussianTwisted{-1, xm});
      bool ok = a.gaussian_power == -1 && a.base == apply_expr(fwd.image_of(g), xm);
      // gamma^{-1} g gamma = tau_+^{-1}(g)
      GaussianTwisted b = apply_generator(g, GaussianTwisted{1, xm});
      ok = ok && b.gaussian_power == 1 && b.base == apply_expr(back.image_of(g), xm);
      ++s.checked;
      if (!ok) s.violations.push_back("conjugation of " + gen_name(g) + " on X^" + std::to_string(m));
    }
  }
  s.report_into(r);
  r.runtime_ms = sw.ms();
  return r;
}

CheckReport check_fourier_automorphism(int deg) {
  Stopwatch sw;
  CheckReport r;
  r.check_id = "fourier_automorphism";
  r.params["deg"] = deg;
  GeneratorImages img = fourier_images();
  sweep_relations(&img, deg).report_into(r);
  r.runtime_ms = sw.ms();
  return r;
}

}  // namespace daha1
