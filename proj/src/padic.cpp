#include "daha1/padic.hpp"

#include <sstream>

#include "daha1/daha_rep.hpp"
#include "daha1/macdonald.hpp"
#include "daha1/poly_io.hpp"

namespace daha1 {

namespace {

constexpr int kPi = -1;

std::vector<int> generators(const AHAWord& w) {
  std::vector<int> g;
  if (w.delta) g.push_back(kPi);
  g.insert(g.end(), w.letters.begin(), w.letters.end());
  return g;
}

RatQT hecke_c() { return RatQT::v_pow(1) - RatQT::v_pow(-1); }

std::string word_string(const AHAWord& w) {
  std::ostringstream os;
  os << "[";
  bool first = true;
  if (w.delta) {
    os << "pi";
    first = false;
  }
  for (int i : w.letters) {
    os << (first ? "" : " ") << "s" << i;
    first = false;
  }
  os << "]";
  return os.str();
}

}  // namespace

AHAWord group_mul_gen(int g, const AHAWord& w) {
  if (g == kPi) return AHAWord{1 - w.delta, w.letters};
  // s_g pi^delta = pi^delta s_{g xor delta}
  int i = g ^ w.delta;
  AHAWord r = w;
  if (!r.letters.empty() && r.letters.front() == i)
    r.letters.erase(r.letters.begin());
  else
    r.letters.insert(r.letters.begin(), i);
  return r;
}

AHAWord group_mul(const AHAWord& a, const AHAWord& b) {
  AHAWord r = b;
  auto g = generators(a);
  for (auto it = g.rbegin(); it != g.rend(); ++it) r = group_mul_gen(*it, r);
  return r;
}

AHAWord group_inverse(const AHAWord& w) {
  AHAWord r{w.delta, {}};
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r.letters.push_back(*it ^ w.delta);
  return r;
}

AHAWord n_omega(int n) {
  // omega = pi s_1, omega^{-1} = s_1 pi
  const AHAWord omega{1, {1}}, omega_inv = group_inverse(omega);
  AHAWord r;
  for (int i = 0; i < std::abs(n); ++i) r = group_mul(n > 0 ? omega : omega_inv, r);
  return r;
}

std::vector<AHAWord> words_up_to(int max_len) {
  std::vector<AHAWord> out;
  for (int delta : {0, 1}) {
    out.push_back(AHAWord{delta, {}});
    for (int l = 1; l <= max_len; ++l)
      for (int start : {0, 1}) {
        AHAWord w{delta, {}};
        for (int i = 0; i < l; ++i) w.letters.push_back(start ^ (i % 2));
        out.push_back(w);
      }
  }
  return out;
}

AHAElem AHAElem::basis(const AHAWord& w, const RatQT& c) {
  AHAElem e;
  e.add_term(w, c);
  return e;
}

AHAElem AHAElem::T_inv(int i) { return T(i) - identity().scaled(hecke_c()); }
AHAElem AHAElem::Y() { return pi() * T(1); }
AHAElem AHAElem::Y_inv() { return T_inv(1) * pi(); }

AHAElem AHAElem::Y_pow(int m) {
  AHAElem step = m > 0 ? Y() : Y_inv(), r = identity();
  for (int i = 0; i < std::abs(m); ++i) r = step * r;
  return r;
}

AHAElem AHAElem::symmetrizer() {
  const RatQT v = RatQT::v_pow(1);
  return (identity() + T(1).scaled(v)).scaled(RatQT(1) / (RatQT(1) + v * v));
}

void AHAElem::add_term(const AHAWord& w, const RatQT& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = c_.try_emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) c_.erase(it);
  }
}

RatQT AHAElem::coeff(const AHAWord& w) const {
  auto it = c_.find(w);
  return it == c_.end() ? RatQT() : it->second;
}

AHAElem& AHAElem::operator+=(const AHAElem& o) {
  for (const auto& [w, c] : o.c_) add_term(w, c);
  return *this;
}

AHAElem AHAElem::scaled(const RatQT& s) const {
  AHAElem r;
  if (s.is_zero()) return r;
  for (const auto& [w, c] : c_) r.add_term(w, c * s);
  return r;
}

AHAElem AHAElem::left_gen(int g) const {
  AHAElem r;
  for (const auto& [w, c] : c_) {
    if (g == kPi) {
      r.add_term(AHAWord{1 - w.delta, w.letters}, c);
      continue;
    }
    int i = g ^ w.delta;
    if (!w.letters.empty() && w.letters.front() == i) {
      // T_i T_{s_i u} = (v - 1/v) T_{s_i u} + T_u
      r.add_term(w, c * hecke_c());
      r.add_term(AHAWord{w.delta, std::vector<int>(w.letters.begin() + 1, w.letters.end())}, c);
    } else {
      AHAWord u = w;
      u.letters.insert(u.letters.begin(), i);
      r.add_term(u, c);
    }
  }
  return r;
}

AHAElem AHAElem::operator*(const AHAElem& o) const {
  AHAElem r;
  for (const auto& [w, c] : c_) {
    AHAElem p = o;
    auto g = generators(w);
    for (auto it = g.rbegin(); it != g.rend(); ++it) p = p.left_gen(*it);
    r += p.scaled(c);
  }
  return r;
}

std::string AHAElem::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : c_) {
    os << (first ? "" : " + ") << "(" << c.to_string() << ")*" << word_string(w);
    first = false;
  }
  return os.str();
}

RatQT aha_trace(const AHAElem& a) { return a.coeff(AHAWord{}); }

AHAElem star(const AHAElem& a) {
  AHAElem r;
  for (const auto& [w, c] : a.terms()) r.add_term(group_inverse(w), c);
  return r;
}

AHAElem SphericalVector::element() const {
  AHAElem r;
  for (const auto& [m, c] : coeffs.terms()) r += AHAElem::Y_pow(m).scaled(c);
  return r * AHAElem::symmetrizer();
}

std::string SphericalVector::to_string() const {
  std::string s = daha1::to_string(coeffs);
  for (char& ch : s)
    if (ch == 'X') ch = 'Y';
  return "(" + s + ")*P+";
}

SphericalVector spherical_coordinates(const AHAElem& a) {
  if (a.is_zero()) return {};
  int N = 0;
  for (const auto& [w, c] : a.terms()) N = std::max(N, w.length());
  N += 1;
  const int cols = 2 * N + 1;
  std::vector<AHAElem> basis;
  for (int m = -N; m <= N; ++m) basis.push_back(AHAElem::Y_pow(m) * AHAElem::symmetrizer());
  // one equation per word
  std::map<AHAWord, int> row_of;
  auto note = [&](const AHAElem& e) {
    for (const auto& [w, c] : e.terms()) row_of.try_emplace(w, static_cast<int>(row_of.size()));
  };
  for (const auto& b : basis) note(b);
  note(a);
  const int rows = static_cast<int>(row_of.size());
  std::vector<std::vector<RatQT>> M(rows, std::vector<RatQT>(cols + 1));
  for (int j = 0; j < cols; ++j)
    for (const auto& [w, c] : basis[j].terms()) M[row_of[w]][j] = c;
  for (const auto& [w, c] : a.terms()) M[row_of[w]][cols] = c;

  std::vector<int> pivot_col;
  int r = 0;
  for (int j = 0; j < cols && r < rows; ++j) {
    int p = r;
    while (p < rows && M[p][j].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(M[p], M[r]);
    RatQT inv = M[r][j].inv();
    for (int jj = j; jj <= cols; ++jj) M[r][jj] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || M[i][j].is_zero()) continue;
      RatQT f = M[i][j];
      for (int jj = j; jj <= cols; ++jj)
        if (!M[r][jj].is_zero()) M[i][jj] -= f * M[r][jj];
    }
    pivot_col.push_back(j);
    ++r;
  }
  for (int i = r; i < rows; ++i)
    if (!M[i][cols].is_zero()) throw NonDivisible("element does not lie in H P_+");
  SphericalVector s;
  for (int i = 0; i < r; ++i) s.coeffs.add_term(pivot_col[i] - N, M[i][cols]);
  return s;
}

AHAElem matsumoto_psi_element(int n) {
  return (AHAElem::basis(n_omega(n)) * AHAElem::symmetrizer()).scaled(RatQT::v_pow(-std::abs(n)));
}

SphericalVector matsumoto_psi(int n) { return spherical_coordinates(matsumoto_psi_element(n)); }

AHAElem primed_spherical(const LaurentPoly& f) {
  SphericalVector s;
  for (const auto& [m, c] : f.terms()) s.coeffs.add_term(m, rat_q0_limit(c).invert_v());
  return s.element();
}

RatQT mu0_pair(const LaurentPoly& f, const LaurentPoly& g) {
  LaurentPoly F = f * apply_generator(Gen::T, g);
  const RatQT t = RatQT::v_pow(2);
  RatQT s;
  for (const auto& [e, c] : F.terms()) {
    // mu_0 = 1 + sum_{j>=1} (t^j - t^{j-1}) X^{2j}
    if (e > 0 || e % 2) continue;
    int j = -e / 2;
    RatQT w = j == 0 ? RatQT(1) : t.pow(j) - t.pow(j - 1);
    s += rat_q0_limit(c) * w;
  }
  return s;
}

CheckReport check_plancherel(const LaurentPoly& f, const LaurentPoly& g) {
  Stopwatch sw;
  RatQT lhs = mu0_pair(f, g).invert_v();
  const RatQT v = RatQT::v_pow(1);
  RatQT rhs = (v + v.inv()) * aha_trace(primed_spherical(f) * star(primed_spherical(g)));
  Json p;
  p["f"] = to_string(f);
  p["g"] = to_string(g);
  CheckReport r = exact_report("plancherel", p, lhs.to_string(), rhs.to_string(), lhs == rhs);
  r.runtime_ms = sw.ms();
  return r;
}

CheckReport check_e_limit(int n) {
  Stopwatch sw;
  const LaurentPoly& E = epoly(n).poly;
  RatQT val;
  for (const auto& [m, c] : E.terms()) val += c * RatQT::v_pow(-m);
  SphericalVector lim;
  for (const auto& [m, c] : E.terms()) lim.coeffs.add_term(m, rat_q0_limit(c / val).invert_v());
  AHAElem lhs = lim.element(), rhs = matsumoto_psi_element(n);
  Json p;
  p["n"] = n;
  CheckReport r = exact_report("e_limit", p, spherical_coordinates(lhs).to_string(), matsumoto_psi(n).to_string(),
                               lhs == rhs);
  r.runtime_ms = sw.ms();
  return r;
}

CheckReport check_length_additivity(int max_len) {
  Stopwatch sw;
  auto words = words_up_to(max_len);
  int checked = 0;
  std::vector<std::string> bad;
  for (const auto& a : words)
    for (const auto& b : words) {
      AHAWord ab = group_mul(a, b);
      if (ab.length() != a.length() + b.length()) continue;
      ++checked;
      if (!(AHAElem::basis(a) * AHAElem::basis(b) == AHAElem::basis(ab)))
        bad.push_back(word_string(a) + "*" + word_string(b));
    }
  Json p;
  p["max_len"] = max_len;
  p["checked"] = checked;
  CheckReport r = exact_report("length_additivity", p, "violations=" + std::to_string(bad.size()), "violations=0",
                               bad.empty());
  for (std::size_t i = 0; i < bad.size() && i < 8; ++i) r.detail += (i ? "; " : "") + bad[i];
  r.runtime_ms = sw.ms();
  return r;
}

CheckReport check_symmetrizer_idempotent() {
  Stopwatch sw;
  AHAElem P = AHAElem::symmetrizer();
  AHAElem PP = P * P;
  CheckReport r = exact_report("symmetrizer_idempotent", Json::object(), PP.to_string(), P.to_string(), PP == P);
  r.runtime_ms = sw.ms();
  return r;
}

}  // namespace daha1
