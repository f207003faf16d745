#include "kronctrl/poly.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace kronctrl {

Poly::Poly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { normalize(); }

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Poly::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(Rational(static_cast<long>(i)) * coeffs_[i]);
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  const Rational inv = Rational(1) / leading();
  return inv * *this;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return Poly();
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  return Poly(std::move(out));
}

Poly operator*(const Rational& scale, const Poly& p) {
  std::vector<Rational> out = p.coeffs_;
  for (auto& c : out) c *= scale;
  return Poly(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Rational& c = p.coefficients()[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    const Rational mag = c.sign() < 0 ? -c : c;
    if (i == 0 || mag != Rational(1)) os << mag;
    if (i > 0) os << "s";
    if (i > 1) os << "^" << i;
    first = false;
  }
  return os;
}

std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw std::domain_error("polynomial division by zero");
  if (num.degree() < den.degree()) return {Poly(), num};
  std::vector<Rational> rem = num.coefficients();
  std::vector<Rational> quot(static_cast<std::size_t>(num.degree() - den.degree() + 1));
  const std::size_t dd = static_cast<std::size_t>(den.degree());
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational factor = rem[k + dd] / den.leading();
    quot[k] = factor;
    if (factor.is_zero()) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= factor * den.coefficients()[j];
  }
  rem.resize(dd);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

namespace {

// Integer coefficients of a rational polynomial, scaled to be primitive.
std::vector<mpz_class> primitive_integer(const Poly& p) {
  mpz_class den = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.raw().get_den_mpz_t());
  std::vector<mpz_class> out;
  mpz_class content = 0;
  for (const auto& c : p.coefficients()) {
    mpz_class v = c.raw().get_num() * (den / c.raw().get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    out.push_back(std::move(v));
  }
  if (content != 0 && content != 1)
    for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
  return out;
}

Poly from_integers(const std::vector<mpz_class>& coeffs) {
  std::vector<Rational> r;
  r.reserve(coeffs.size());
  for (const auto& c : coeffs) r.emplace_back(mpq_class(c));
  return Poly(std::move(r));
}

class SturmSequence {
 public:
  explicit SturmSequence(const Poly& squarefree) {
    chain_.push_back(squarefree);
    chain_.push_back(squarefree.derivative());
    while (!chain_.back().is_zero()) {
      Poly r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
      chain_.push_back(Rational(-1) * r);
    }
    chain_.pop_back();
  }

  int variations(const Rational& x) const {
    int count = 0;
    int last = 0;
    for (const auto& p : chain_) {
      const int s = p(x).sign();
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  }

  // Distinct real roots in the open interval (lo - 1/2, hi + 1/2).
  int count(const mpz_class& lo, const mpz_class& hi) const {
    const Rational half(1, 2);
    return variations(Rational(mpq_class(lo)) - half) - variations(Rational(mpq_class(hi)) + half);
  }

 private:
  std::vector<Poly> chain_;
};

void collect_integer_roots(const Poly& h, const SturmSequence& sturm, const mpz_class& lo, const mpz_class& hi,
                           int count, std::vector<mpz_class>& out) {
  if (count <= 0) return;
  if (lo == hi) {
    if (h(Rational(mpq_class(lo))).is_zero()) out.push_back(lo);
    return;
  }
  mpz_class mid;
  mpz_fdiv_q_2exp(mid.get_mpz_t(), mpz_class(lo + hi).get_mpz_t(), 1);
  const int left = sturm.count(lo, mid);
  collect_integer_roots(h, sturm, lo, mid, left, out);
  collect_integer_roots(h, sturm, mid + 1, hi, count - left, out);
}

}  // namespace

RationalRoots rational_roots(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("rational_roots of the zero polynomial");
  RationalRoots result;

  std::vector<mpz_class> f = primitive_integer(p);
  std::size_t zero_mult = 0;
  while (f[zero_mult] == 0) ++zero_mult;
  f.erase(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(zero_mult));
  if (f.back() < 0)
    for (auto& c : f) c = -c;

  // Any rational root r/s of f satisfies s | lead, so t = lead·x turns f into
  // a monic integer polynomial g whose rational roots are integers.
  const std::size_t n = f.size() - 1;
  const mpz_class lead = f.back();
  std::vector<Rational> candidates;
  if (n > 0) {
    std::vector<mpz_class> g(n + 1);
    mpz_class scale = 1;
    for (std::size_t i = n; i-- > 0;) {
      g[i] = f[i] * scale;
      scale *= lead;
    }
    g[n] = 1;
    const Poly gp = from_integers(g);
    const Poly h = divmod(gp, gcd(gp, gp.derivative())).first.monic();

    mpz_class bound = 0;
    for (std::size_t i = 0; i < static_cast<std::size_t>(h.degree()); ++i) {
      mpz_class c = abs(h.coefficients()[i].raw().get_num());
      if (c > bound) bound = c;
    }
    bound += 1;

    const SturmSequence sturm(h);
    std::vector<mpz_class> ints;
    collect_integer_roots(h, sturm, -bound, bound, sturm.count(-bound, bound), ints);
    for (const auto& t : ints) candidates.emplace_back(mpq_class(t, lead));
  }

  if (zero_mult > 0) result.roots.push_back({Rational(0), zero_mult});
  std::size_t total = zero_mult;
  for (const auto& r : candidates) {
    Poly rest = p;
    std::size_t mult = 0;
    for (;;) {
      auto [q, rem] = divmod(rest, Poly::linear(r));
      if (!rem.is_zero()) break;
      rest = std::move(q);
      ++mult;
    }
    if (mult > 0) {
      result.roots.push_back({r, mult});
      total += mult;
    }
  }
  std::sort(result.roots.begin(), result.roots.end(),
            [](const RationalRoot& a, const RationalRoot& b) { return a.value < b.value; });
  result.fully_factored = total == static_cast<std::size_t>(p.degree());
  return result;
}

}  // namespace kronctrl
