#include "daha1/bipoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

namespace daha1 {

namespace {

mpz_class sym_mod(const mpz_class& h, const mpz_class& xi) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), h.get_mpz_t(), xi.get_mpz_t());
  if (2 * r > xi) r -= xi;
  return r;
}

mpz_class next_xi(const mpz_class& xi) {
  mpz_class s = sqrt(sqrt(xi));
  return xi * 73794 * s / 27011;
}

inline std::uint64_t key_of(std::uint32_t ev, std::uint32_t eu) {
  return (static_cast<std::uint64_t>(ev) << 32) | eu;
}

}  // namespace

// ---------------------------------------------------------------- UPoly

UPoly UPoly::constant(const mpz_class& c) { return UPoly(std::vector<mpz_class>{c}); }

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::operator+(const UPoly& o) const {
  std::vector<mpz_class> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return UPoly(std::move(r));
}

UPoly UPoly::operator-(const UPoly& o) const {
  std::vector<mpz_class> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return UPoly(std::move(r));
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

UPoly UPoly::operator*(const UPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<mpz_class> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      mpz_addmul(r[i + j].get_mpz_t(), c_[i].get_mpz_t(), o.c_[j].get_mpz_t());
  }
  return UPoly(std::move(r));
}

UPoly UPoly::scaled(const mpz_class& s) const {
  if (s == 0) return {};
  UPoly r = *this;
  for (auto& x : r.c_) x *= s;
  return r;
}

UPoly UPoly::shifted(int k) const {
  if (is_zero()) return {};
  std::vector<mpz_class> r(c_.size() + k);
  for (std::size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
  return UPoly(std::move(r));
}

mpz_class UPoly::content() const {
  mpz_class g = 0;
  for (const auto& x : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

UPoly UPoly::primitive() const {
  if (is_zero()) return {};
  mpz_class g = content();
  if (lead() < 0) g = -g;
  UPoly r = *this;
  for (auto& x : r.c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return r;
}

mpz_class UPoly::eval(const mpz_class& x) const {
  mpz_class r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

mpz_class UPoly::max_norm() const {
  mpz_class m = 0;
  for (const auto& x : c_) {
    mpz_class a = abs(x);
    if (a > m) m = a;
  }
  return m;
}

std::optional<UPoly> UPoly::divexact(const UPoly& o) const {
  if (o.is_zero()) return std::nullopt;
  if (is_zero()) return UPoly{};
  int dn = degree(), dd = o.degree();
  if (dn < dd) return std::nullopt;
  std::vector<mpz_class> r = c_;
  std::vector<mpz_class> q(dn - dd + 1);
  const mpz_class& lc = o.lead();
  for (int i = dn - dd; i >= 0; --i) {
    mpz_class& top = r[i + dd];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
    mpz_divexact(q[i].get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
    for (int j = 0; j <= dd; ++j) mpz_submul(r[i + j].get_mpz_t(), q[i].get_mpz_t(), o.c_[j].get_mpz_t());
  }
  for (int i = 0; i < dd; ++i)
    if (r[i] != 0) return std::nullopt;
  return UPoly(std::move(q));
}

UPoly UPoly::pseudo_rem(const UPoly& o) const {
  UPoly r = *this;
  int dd = o.degree();
  while (!r.is_zero() && r.degree() >= dd) {
    mpz_class lr = r.lead();
    r = r.scaled(o.lead()) - o.scaled(lr).shifted(r.degree() - dd);
  }
  return r;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  if (a.is_zero()) return b.is_zero() ? UPoly{} : b.scaled(b.lead() < 0 ? -1 : 1);
  if (b.is_zero()) return a.scaled(a.lead() < 0 ? -1 : 1);
  mpz_class c;
  mpz_class ca = a.content(), cb = b.content();
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  UPoly A = a.primitive(), B = b.primitive();
  if (A.degree() == 0 || B.degree() == 0) return UPoly::constant(c);
  if (A == B) return A.scaled(c);

  mpz_class na = A.max_norm(), nb = B.max_norm();
  mpz_class xi = 2 * std::min(na, nb) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    mpz_class fa = A.eval(xi), fb = B.eval(xi);
    if (fa != 0 && fb != 0) {
      mpz_class h;
      mpz_gcd(h.get_mpz_t(), fa.get_mpz_t(), fb.get_mpz_t());
      std::vector<mpz_class> digits;
      while (h != 0) {
        mpz_class d = sym_mod(h, xi);
        digits.push_back(d);
        h = (h - d) / xi;
      }
      UPoly H = UPoly(std::move(digits)).primitive();
      if (!H.is_zero() && A.divexact(H) && B.divexact(H)) return H.scaled(c);
    }
    xi = next_xi(xi);
  }

  // Primitive PRS.
  while (!B.is_zero()) {
    UPoly r = A.pseudo_rem(B);
    A = B;
    B = r.is_zero() ? r : r.primitive();
  }
  return A.primitive().scaled(c);
}

// ---------------------------------------------------------------- BiPoly

BiPoly BiPoly::constant(const mpz_class& c) { return monomial(c, 0, 0); }

BiPoly BiPoly::monomial(const mpz_class& c, std::uint32_t eu, std::uint32_t ev) {
  BiPoly p;
  if (c != 0) p.t_.push_back({ev, eu, c});
  return p;
}

BiPoly BiPoly::from_terms(std::vector<Term> terms) {
  BiPoly p;
  p.t_ = std::move(terms);
  p.normalize();
  return p;
}

BiPoly BiPoly::from_u(const UPoly& u, std::uint32_t ev) {
  BiPoly p;
  for (int i = u.degree(); i >= 0; --i)
    if (u[i] != 0) p.t_.push_back({ev, static_cast<std::uint32_t>(i), u[i]});
  return p;
}

void BiPoly::normalize() {
  std::sort(t_.begin(), t_.end(), [](const Term& a, const Term& b) {
    return key_of(a.ev, a.eu) > key_of(b.ev, b.eu);
  });
  std::vector<Term> out;
  out.reserve(t_.size());
  for (auto& t : t_) {
    if (!out.empty() && out.back().ev == t.ev && out.back().eu == t.eu)
      out.back().c += t.c;
    else
      out.push_back(std::move(t));
    if (out.back().c == 0) out.pop_back();
  }
  t_ = std::move(out);
}

bool BiPoly::is_one() const { return t_.size() == 1 && t_[0].ev == 0 && t_[0].eu == 0 && t_[0].c == 1; }

int BiPoly::deg_v() const { return t_.empty() ? -1 : static_cast<int>(t_.front().ev); }

int BiPoly::deg_u() const {
  int d = -1;
  for (const auto& t : t_) d = std::max(d, static_cast<int>(t.eu));
  return d;
}

std::uint32_t BiPoly::min_eu() const {
  std::uint32_t m = UINT32_MAX;
  for (const auto& t : t_) m = std::min(m, t.eu);
  return t_.empty() ? 0 : m;
}

std::uint32_t BiPoly::min_ev() const { return t_.empty() ? 0 : t_.back().ev; }

BiPoly BiPoly::operator+(const BiPoly& o) const {
  BiPoly r;
  r.t_.reserve(t_.size() + o.t_.size());
  std::size_t i = 0, j = 0;
  while (i < t_.size() || j < o.t_.size()) {
    if (j == o.t_.size()) {
      r.t_.push_back(t_[i++]);
    } else if (i == t_.size()) {
      r.t_.push_back(o.t_[j++]);
    } else {
      auto ki = key_of(t_[i].ev, t_[i].eu), kj = key_of(o.t_[j].ev, o.t_[j].eu);
      if (ki > kj) {
        r.t_.push_back(t_[i++]);
      } else if (kj > ki) {
        r.t_.push_back(o.t_[j++]);
      } else {
        mpz_class s = t_[i].c + o.t_[j].c;
        if (s != 0) r.t_.push_back({t_[i].ev, t_[i].eu, s});
        ++i;
        ++j;
      }
    }
  }
  return r;
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& t : r.t_) t.c = -t.c;
  return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const { return *this + (-o); }

BiPoly BiPoly::scaled(const mpz_class& s) const {
  if (s == 0) return {};
  BiPoly r = *this;
  for (auto& t : r.t_) t.c *= s;
  return r;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  const BiPoly& small = t_.size() <= o.t_.size() ? *this : o;
  const BiPoly& big = t_.size() <= o.t_.size() ? o : *this;
  if (small.t_.size() == 1) {
    const Term& m = small.t_[0];
    BiPoly r = big;
    for (auto& t : r.t_) {
      t.ev += m.ev;
      t.eu += m.eu;
      t.c *= m.c;
    }
    return r;
  }
  std::unordered_map<std::uint64_t, mpz_class> acc;
  acc.reserve(small.t_.size() * big.t_.size());
  for (const auto& a : small.t_)
    for (const auto& b : big.t_) {
      auto& slot = acc[key_of(a.ev + b.ev, a.eu + b.eu)];
      mpz_addmul(slot.get_mpz_t(), a.c.get_mpz_t(), b.c.get_mpz_t());
    }
  BiPoly r;
  r.t_.reserve(acc.size());
  for (auto& [k, c] : acc)
    if (c != 0) r.t_.push_back({static_cast<std::uint32_t>(k >> 32), static_cast<std::uint32_t>(k & 0xffffffffu), std::move(c)});
  std::sort(r.t_.begin(), r.t_.end(), [](const Term& a, const Term& b) {
    return key_of(a.ev, a.eu) > key_of(b.ev, b.eu);
  });
  return r;
}

bool BiPoly::operator==(const BiPoly& o) const {
  if (t_.size() != o.t_.size()) return false;
  for (std::size_t i = 0; i < t_.size(); ++i)
    if (t_[i].ev != o.t_[i].ev || t_[i].eu != o.t_[i].eu || t_[i].c != o.t_[i].c) return false;
  return true;
}

BiPoly BiPoly::unshift(std::uint32_t du, std::uint32_t dv) const {
  BiPoly r = *this;
  for (auto& t : r.t_) {
    t.eu -= du;
    t.ev -= dv;
  }
  return r;
}

BiPoly BiPoly::reverse_v() const {
  if (is_zero()) return {};
  std::uint32_t d = t_.front().ev;
  BiPoly r = *this;
  for (auto& t : r.t_) t.ev = d - t.ev;
  r.normalize();
  return r;
}

UPoly BiPoly::at_u_zero() const {
  std::vector<mpz_class> c(is_zero() ? 0 : deg_v() + 1);
  for (const auto& t : t_)
    if (t.eu == 0) c[t.ev] = t.c;
  return UPoly(std::move(c));
}

mpz_class BiPoly::content() const {
  mpz_class g = 0;
  for (const auto& t : t_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

BiPoly BiPoly::primitive() const {
  if (is_zero()) return {};
  mpz_class g = content();
  if (lead().c < 0) g = -g;
  if (g == 1) return *this;
  BiPoly r = *this;
  for (auto& t : r.t_) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
  return r;
}

std::optional<BiPoly> BiPoly::divexact(const BiPoly& o) const {
  if (o.is_zero()) return std::nullopt;
  if (is_zero()) return BiPoly{};
  if (o.is_constant()) {
    const mpz_class& d = o.t_[0].c;
    BiPoly r = *this;
    for (auto& t : r.t_) {
      if (!mpz_divisible_p(t.c.get_mpz_t(), d.get_mpz_t())) return std::nullopt;
      mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), d.get_mpz_t());
    }
    return r;
  }
  int qdv = deg_v() - o.deg_v(), qdu = deg_u() - o.deg_u();
  if (qdv < 0 || qdu < 0) return std::nullopt;
  if (min_eu() < o.min_eu() || min_ev() < o.min_ev()) return std::nullopt;

  std::map<std::uint64_t, mpz_class, std::greater<>> rem;
  for (const auto& t : t_) rem.emplace(key_of(t.ev, t.eu), t.c);
  const Term& lb = o.lead();
  std::vector<Term> q;
  mpz_class qc;
  while (!rem.empty()) {
    auto it = rem.begin();
    std::uint32_t ev = static_cast<std::uint32_t>(it->first >> 32);
    std::uint32_t eu = static_cast<std::uint32_t>(it->first & 0xffffffffu);
    if (ev < lb.ev || eu < lb.eu) return std::nullopt;
    std::uint32_t qev = ev - lb.ev, qeu = eu - lb.eu;
    if (static_cast<int>(qev) > qdv || static_cast<int>(qeu) > qdu) return std::nullopt;
    if (!mpz_divisible_p(it->second.get_mpz_t(), lb.c.get_mpz_t())) return std::nullopt;
    mpz_divexact(qc.get_mpz_t(), it->second.get_mpz_t(), lb.c.get_mpz_t());
    rem.erase(it);
    for (std::size_t j = 1; j < o.t_.size(); ++j) {
      const Term& b = o.t_[j];
      auto [slot, inserted] = rem.try_emplace(key_of(b.ev + qev, b.eu + qeu));
      mpz_submul(slot->second.get_mpz_t(), qc.get_mpz_t(), b.c.get_mpz_t());
      if (slot->second == 0) rem.erase(slot);
    }
    q.push_back({qev, qeu, qc});
  }
  BiPoly r;
  r.t_ = std::move(q);
  return r;
}

std::vector<UPoly> BiPoly::v_coeffs() const {
  if (is_zero()) return {};
  std::vector<std::vector<mpz_class>> raw(deg_v() + 1);
  for (const auto& t : t_) {
    auto& row = raw[t.ev];
    if (row.size() <= t.eu) row.resize(t.eu + 1);
    row[t.eu] = t.c;
  }
  std::vector<UPoly> out;
  out.reserve(raw.size());
  for (auto& r : raw) out.emplace_back(std::move(r));
  return out;
}

BiPoly BiPoly::from_v_coeffs(const std::vector<UPoly>& c) {
  BiPoly p;
  for (int ev = static_cast<int>(c.size()) - 1; ev >= 0; --ev)
    for (int eu = c[ev].degree(); eu >= 0; --eu)
      if (c[ev][eu] != 0) p.t_.push_back({static_cast<std::uint32_t>(ev), static_cast<std::uint32_t>(eu), c[ev][eu]});
  return p;
}

UPoly BiPoly::eval_v(const mpz_class& x) const {
  auto rows = v_coeffs();
  UPoly r;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) r = r.scaled(x) + *it;
  return r;
}

std::complex<double> BiPoly::eval(std::complex<double> u, std::complex<double> v) const {
  if (is_zero()) return 0.0;
  int du = deg_u(), dv = deg_v();
  std::vector<std::complex<double>> pu(du + 1), pv(dv + 1);
  pu[0] = pv[0] = 1.0;
  for (int i = 1; i <= du; ++i) pu[i] = pu[i - 1] * u;
  for (int i = 1; i <= dv; ++i) pv[i] = pv[i - 1] * v;
  std::complex<double> s = 0.0;
  for (const auto& t : t_) s += t.c.get_d() * pu[t.eu] * pv[t.ev];
  return s;
}

double BiPoly::abs_eval(double au, double av) const {
  double s = 0.0;
  for (const auto& t : t_) s += std::abs(t.c.get_d()) * std::pow(au, t.eu) * std::pow(av, t.ev);
  return s;
}

std::string BiPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : t_) {
    if (!first) os << (t.c < 0 ? " - " : " + ");
    else if (t.c < 0) os << "-";
    first = false;
    mpz_class a = abs(t.c);
    bool unit = (a == 1) && (t.eu != 0 || t.ev != 0);
    if (!unit) os << a.get_str();
    if (t.eu) os << (unit ? "" : "*") << "u" << (t.eu > 1 ? "^" + std::to_string(t.eu) : "");
    if (t.ev) os << ((unit && !t.eu) ? "" : "*") << "v" << (t.ev > 1 ? "^" + std::to_string(t.ev) : "");
  }
  return os.str();
}

// ---------------------------------------------------------------- gcd

namespace {

using VPoly = std::vector<UPoly>;  // coefficients in v, each a polynomial in u

void vtrim(VPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UPoly vcontent(const VPoly& p) {
  UPoly g;
  for (const auto& c : p) {
    g = gcd(g, c);
    if (g.degree() == 0 && g[0] == 1) break;
  }
  return g;
}

VPoly vdiv_content(const VPoly& p, const UPoly& c) {
  VPoly r;
  r.reserve(p.size());
  for (const auto& x : p) r.push_back(*x.divexact(c));
  return r;
}

VPoly vprem(VPoly a, const VPoly& b) {
  int db = static_cast<int>(b.size()) - 1;
  const UPoly& lb = b.back();
  while (!a.empty() && static_cast<int>(a.size()) - 1 >= db) {
    UPoly la = a.back();
    int shift = static_cast<int>(a.size()) - 1 - db;
    for (auto& x : a) x = x * lb;
    for (int j = 0; j <= db; ++j) a[j + shift] = a[j + shift] - la * b[j];
    vtrim(a);
  }
  return a;
}

BiPoly swap_uv(const BiPoly& p) {
  std::vector<BiPoly::Term> t;
  t.reserve(p.size());
  for (const auto& x : p.terms()) t.push_back({x.eu, x.ev, x.c});
  return BiPoly::from_terms(std::move(t));
}

BiPoly sign_normalized(const BiPoly& p) { return (!p.is_zero() && p.lead().c < 0) ? -p : p; }

BiPoly gcd_prs_primitive(const BiPoly& a, const BiPoly& b) {
  VPoly A = a.v_coeffs(), B = b.v_coeffs();
  UPoly ca = vcontent(A), cb = vcontent(B);
  UPoly cg = gcd(ca, cb);
  A = vdiv_content(A, ca);
  B = vdiv_content(B, cb);
  if (A.size() < B.size()) std::swap(A, B);
  while (!B.empty()) {
    VPoly r = vprem(A, B);
    A = std::move(B);
    if (!r.empty()) r = vdiv_content(r, vcontent(r));
    B = std::move(r);
  }
  A = vdiv_content(A, vcontent(A));
  return sign_normalized(BiPoly::from_v_coeffs(A) * BiPoly::from_u(cg));
}

BiPoly gcd_nonmonomial(const BiPoly& A, const BiPoly& B, bool allow_heuristic);

BiPoly gcd_heuristic(const BiPoly& A, const BiPoly& B) {
  mpz_class na = 0, nb = 0;
  for (const auto& t : A.terms()) na = std::max(na, mpz_class(abs(t.c)));
  for (const auto& t : B.terms()) nb = std::max(nb, mpz_class(abs(t.c)));
  mpz_class xi = 2 * std::min(na, nb) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    UPoly fa = A.eval_v(xi), fb = B.eval_v(xi);
    if (!fa.is_zero() && !fb.is_zero()) {
      UPoly h = gcd(fa, fb);
      VPoly digits;
      while (!h.is_zero()) {
        std::vector<mpz_class> d(h.degree() + 1);
        for (int i = 0; i <= h.degree(); ++i) d[i] = sym_mod(h[i], xi);
        UPoly dp(std::move(d));
        digits.push_back(dp);
        h = *(h - dp).divexact(UPoly::constant(xi));
      }
      BiPoly H = BiPoly::from_v_coeffs(digits).primitive();
      if (!H.is_zero() && A.divexact(H) && B.divexact(H)) return H;
    }
    xi = next_xi(xi);
  }
  return gcd_prs_primitive(A, B);
}

// A and B primitive over Z and not divisible by u or v.
BiPoly gcd_nonmonomial(const BiPoly& A, const BiPoly& B, bool allow_heuristic) {
  if (A.is_constant() || B.is_constant()) return BiPoly::constant(1);
  if (A == B) return A;
  if (A.deg_v() == 0 && B.deg_v() == 0) {
    UPoly ua = A.v_coeffs()[0], ub = B.v_coeffs()[0];
    return BiPoly::from_u(gcd(ua, ub));
  }
  if (A.deg_v() == 0 || B.deg_v() == 0) {
    const BiPoly& uonly = A.deg_v() == 0 ? A : B;
    const BiPoly& other = A.deg_v() == 0 ? B : A;
    UPoly g = uonly.v_coeffs()[0];
    for (const auto& c : other.v_coeffs()) {
      g = gcd(g, c);
      if (g.degree() == 0) break;
    }
    return BiPoly::from_u(g);
  }
  if (A.deg_u() == 0 || B.deg_u() == 0) {
    // One argument lies in Z[v]; work with v as the inner variable.
    return sign_normalized(swap_uv(gcd_nonmonomial(swap_uv(A), swap_uv(B), allow_heuristic)));
  }
  if (!allow_heuristic) return gcd_prs_primitive(A, B);
  return gcd_heuristic(A, B);
}

}  // namespace

static BiPoly gcd_impl(const BiPoly& a, const BiPoly& b, bool allow_heuristic) {
  if (a.is_zero()) return sign_normalized(b);
  if (b.is_zero()) return sign_normalized(a);
  std::uint32_t mu = std::min(a.min_eu(), b.min_eu());
  std::uint32_t mv = std::min(a.min_ev(), b.min_ev());
  mpz_class c;
  mpz_class ca = a.content(), cb = b.content();
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  BiPoly A = a.unshift(a.min_eu(), a.min_ev()).primitive();
  BiPoly B = b.unshift(b.min_eu(), b.min_ev()).primitive();
  BiPoly g = gcd_nonmonomial(A, B, allow_heuristic);
  return sign_normalized(g * BiPoly::monomial(c, mu, mv));
}

BiPoly gcd(const BiPoly& a, const BiPoly& b) { return gcd_impl(a, b, true); }

BiPoly gcd_reference(const BiPoly& a, const BiPoly& b) { return gcd_impl(a, b, false); }

}  // namespace daha1
