#include "daha1/macdonald.hpp"

#include <memory>

namespace daha1 {

namespace {

template <class V>
class Memo {
 public:
  template <class Make>
  const V& get(int key, Make make) {
    {
      std::shared_lock lock(mu_);
      auto it = table_.find(key);
      if (it != table_.end()) return *it->second;
    }
    auto fresh = std::make_unique<V>(make());
    std::unique_lock lock(mu_);
    auto [it, inserted] = table_.try_emplace(key, std::move(fresh));
    return *it->second;
  }

 private:
  std::shared_mutex mu_;
  std::map<int, std::unique_ptr<V>> table_;
};

Memo<EPoly>& e_memo() {
  static Memo<EPoly> m;
  return m;
}

Memo<LaurentPoly>& p_memo() {
  static Memo<LaurentPoly> m;
  return m;
}

}  // namespace

const EPoly& epoly(int n) {
  return e_memo().get(n, [n] {
    EPoly e;
    e.n = n;
    e.poly = solve_epoly(ExactDomain{}, n);
    e.sharp = SpectralExponent{n};
    e.eigenvalue = e.sharp.eigenvalue(ExactDomain{});
    return e;
  });
}

const LaurentPoly& ppoly(int n) {
  return p_memo().get(n, [n] {
    if (n < 0) throw std::invalid_argument("ppoly: need n >= 0");
    const LaurentPoly& e = epoly(n).poly;
    ExactDomain dom;
    LaurentPoly s = symmetrize(dom, e);
    return s.scaled(s.coeff(n).inv());
  });
}

RatQT eval_at_trho(const LaurentPoly& f, RhoSign sign) {
  int dir = sign == RhoSign::minus ? -1 : 1;
  RatQT s;
  for (const auto& [n, c] : f.terms()) s += c * RatQT::v_pow(dir * n);
  return s;
}

}  // namespace daha1
