#include "kronctrl/linalg.hpp"

#include <utility>

#include "kronctrl/error.hpp"

namespace kronctrl {

namespace {

// Row echelon form computed by fraction-free (Bareiss) elimination on the
// denominator-cleared rows. The pivot in each column is the first nonzero
// entry at or below the current pivot row.
struct Echelon {
  std::vector<std::vector<mpz_class>> rows;
  std::vector<std::size_t> pivot_cols;
};

Echelon bareiss_echelon(const Mat& m) {
  Echelon e;
  const std::size_t nr = m.rows();
  const std::size_t nc = m.cols();
  e.rows.assign(nr, std::vector<mpz_class>(nc));
  for (std::size_t r = 0; r < nr; ++r) {
    mpz_class den = 1;
    for (std::size_t c = 0; c < nc; ++c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m(r, c).raw().get_den_mpz_t());
    for (std::size_t c = 0; c < nc; ++c) e.rows[r][c] = m(r, c).raw().get_num() * (den / m(r, c).raw().get_den());
  }

  mpz_class prev = 1;
  std::size_t k = 0;
  for (std::size_t col = 0; col < nc && k < nr; ++col) {
    std::size_t p = k;
    while (p < nr && e.rows[p][col] == 0) ++p;
    if (p == nr) continue;
    std::swap(e.rows[k], e.rows[p]);
    const mpz_class& pivot = e.rows[k][col];
    for (std::size_t i = k + 1; i < nr; ++i) {
      auto& row = e.rows[i];
      for (std::size_t j = col + 1; j < nc; ++j) {
        row[j] = pivot * row[j] - row[col] * e.rows[k][j];
        mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), prev.get_mpz_t());
      }
      row[col] = 0;
    }
    prev = pivot;
    e.pivot_cols.push_back(col);
    ++k;
  }
  return e;
}

void normalize_leading(RowVec& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) {
      const Rational inv = Rational(1) / v[i];
      v *= inv;
      return;
    }
  }
}

}  // namespace

std::size_t rank(const Mat& m) {
  if (m.rows() > m.cols()) return bareiss_echelon(m.transpose()).pivot_cols.size();
  return bareiss_echelon(m).pivot_cols.size();
}

std::vector<RowVec> null_space(const Mat& m) {
  const Echelon e = bareiss_echelon(m);
  const std::size_t nc = m.cols();
  std::vector<bool> is_pivot(nc, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;

  std::vector<RowVec> basis;
  for (std::size_t f = 0; f < nc; ++f) {
    if (is_pivot[f]) continue;
    RowVec x(nc);
    x[f] = 1;
    for (std::size_t k = e.pivot_cols.size(); k-- > 0;) {
      const std::size_t pc = e.pivot_cols[k];
      mpq_class s = 0;
      for (std::size_t j = pc + 1; j < nc; ++j) {
        if (e.rows[k][j] != 0 && !x[j].is_zero()) s += mpq_class(e.rows[k][j]) * x[j].raw();
      }
      x[pc] = Rational(mpq_class(-s / mpq_class(e.rows[k][pc])));
    }
    normalize_leading(x);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<RowVec> left_null_space(const Mat& m) { return null_space(m.transpose()); }

Poly charpoly(const Mat& m) {
  if (!m.is_square()) throw DimensionMismatch("characteristic polynomial needs a square matrix");
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
  const std::size_t n = m.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  Mat acc(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    acc = m * acc;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += c[n - k + 1];
    const Mat prod = m * acc;
    Rational trace(0);
    for (std::size_t i = 0; i < n; ++i) trace += prod(i, i);
    c[n - k] = -trace / Rational(static_cast<long>(k));
  }
  return Poly(std::move(c));
}

Mat evaluate(const Poly& p, const Mat& m) {
  if (!m.is_square()) throw DimensionMismatch("polynomial evaluation needs a square matrix");
  Mat acc(m.rows(), m.cols());
  const auto& coeffs = p.coefficients();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = shift(acc * m, -*it);
  return acc;
}

std::size_t span_rank(std::span<const RowVec> vectors) {
  if (vectors.empty()) return 0;
  return rank(Mat::from_rows(vectors));
}

bool linearly_independent(std::span<const RowVec> vectors) { return span_rank(vectors) == vectors.size(); }

bool in_span(std::span<const RowVec> basis, const RowVec& v) {
  if (v.is_zero()) return true;
  std::vector<RowVec> all(basis.begin(), basis.end());
  const std::size_t before = span_rank(all);
  all.push_back(v);
  return span_rank(all) == before;
}

bool same_span(std::span<const RowVec> a, std::span<const RowVec> b) {
  const std::size_t ra = span_rank(a);
  if (ra != span_rank(b)) return false;
  std::vector<RowVec> all(a.begin(), a.end());
  all.insert(all.end(), b.begin(), b.end());
  return span_rank(all) == ra;
}

}  // namespace kronctrl
