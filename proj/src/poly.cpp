#include "dklein/poly.hpp"

#include <string>

namespace dklein {

static const Scalar kZero{};

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::monomial(int k, const Scalar& c) {
  Poly p;
  if (!c.is_zero()) {
    p.c_.assign(k + 1, Scalar(0));
    p.c_[k] = c;
  }
  return p;
}

Poly Poly::from_coeffs(std::vector<Scalar> coeffs) {
  Poly p;
  p.c_ = std::move(coeffs);
  p.trim();
  return p;
}

const Scalar& Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
  return c_[k];
}

const Scalar& Poly::leading() const {
  if (is_zero()) throw zero_element_error("leading coefficient of 0");
  return c_.back();
}

Scalar Poly::evaluate(const Scalar& x) const {
  Scalar acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::compose(const Poly& inner) const {
  Poly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * inner + Poly(*it);
  return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()), Scalar(0));
  for (size_t k = 0; k < c.size(); ++k)
    c[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
  return Poly::from_coeffs(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator-(const Poly& a) {
  std::vector<Scalar> c = a.c_;
  for (auto& x : c) x = -x;
  return Poly::from_coeffs(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1, Scalar(0));
  for (size_t p = 0; p < a.c_.size(); ++p) {
    if (a.c_[p].is_zero()) continue;
    for (size_t q = 0; q < b.c_.size(); ++q) c[p + q] += a.c_[p] * b.c_[q];
  }
  return Poly::from_coeffs(std::move(c));
}

Poly operator*(const Scalar& c, const Poly& a) { return Poly(c) * a; }

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) throw division_by_zero();
  Poly rem = *this;
  std::vector<Scalar> quot;
  if (degree() >= d.degree())
    quot.assign(degree() - d.degree() + 1, Scalar(0));
  Scalar lead_inv = d.leading().inv();
  while (!rem.is_zero() && rem.degree() >= d.degree()) {
    int shift = rem.degree() - d.degree();
    Scalar f = rem.leading() * lead_inv;
    quot[shift] = f;
    rem = rem - Poly::monomial(shift, f) * d;
  }
  return {Poly::from_coeffs(std::move(quot)), rem};
}

Poly subst_neg_s_s1(const Poly& f) {
  /* t -> -s^2 - s */
  return f.compose(Poly::from_coeffs({Scalar(0), Scalar(-1), Scalar(-1)}));
}

std::pair<Poly, Poly> parity_split(const Poly& f) {
  std::vector<Scalar> even(f.coeffs().size(), Scalar(0));
  std::vector<Scalar> odd(f.coeffs().size(), Scalar(0));
  for (size_t k = 0; k < f.coeffs().size(); ++k)
    (k % 2 == 0 ? even : odd)[k] = f.coeffs()[k];
  return {Poly::from_coeffs(std::move(even)), Poly::from_coeffs(std::move(odd))};
}

/* Exact Gaussian elimination for a system with a unique solution; rows may
 * exceed columns, in which case the extra equations must be consistent. */
static std::vector<Scalar> solve_linear(std::vector<std::vector<Scalar>> m,
                                        std::vector<Scalar> rhs) {
  const size_t rows = m.size();
  const size_t cols = rows == 0 ? 0 : m[0].size();
  size_t pivot_row = 0;
  std::vector<size_t> pivot_of_col(cols, SIZE_MAX);
  for (size_t col = 0; col < cols && pivot_row < rows; ++col) {
    size_t sel = SIZE_MAX;
    for (size_t r = pivot_row; r < rows; ++r)
      if (!m[r][col].is_zero()) {
        sel = r;
        break;
      }
    if (sel == SIZE_MAX) continue;
    std::swap(m[sel], m[pivot_row]);
    std::swap(rhs[sel], rhs[pivot_row]);
    Scalar inv = m[pivot_row][col].inv();
    for (size_t c = col; c < cols; ++c) m[pivot_row][c] *= inv;
    rhs[pivot_row] *= inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || m[r][col].is_zero()) continue;
      Scalar f = m[r][col];
      for (size_t c = col; c < cols; ++c) m[r][c] -= f * m[pivot_row][c];
      rhs[r] -= f * rhs[pivot_row];
    }
    pivot_of_col[col] = pivot_row;
    ++pivot_row;
  }
  for (size_t r = pivot_row; r < rows; ++r)
    if (!rhs[r].is_zero())
      throw invariant_violation("linear system inconsistent");
  std::vector<Scalar> x(cols, Scalar(0));
  for (size_t col = 0; col < cols; ++col) {
    if (pivot_of_col[col] == SIZE_MAX)
      throw invariant_violation("linear system underdetermined");
    x[col] = rhs[pivot_of_col[col]];
  }
  return x;
}

Poly solve_p_from_q(const Poly& q) {
  const int n = q.degree();
  if (n < 3) throw precondition_error("Q must have degree >= 3");
  if (!q.is_monic()) throw precondition_error("Q must be monic");
  const Poly a = subst_neg_s_s1(q);
  const Poly s1 = Poly::from_coeffs({Scalar(1), Scalar(1)});  // s + 1
  const Poly iota = Poly::from_coeffs({Scalar(0), Scalar(-1), Scalar(-1)});

  /* Odd-power coefficients s^1, s^3, ..., s^(2n-1) of
   * a(s) + sum_k p_k * (s+1) * iota^k must vanish. */
  std::vector<std::vector<Scalar>> mat(n, std::vector<Scalar>(n, Scalar(0)));
  std::vector<Scalar> rhs(n, Scalar(0));
  Poly basis = s1;  // (s+1) * iota^k, starting at k = 0
  for (int k = 0; k < n; ++k) {
    for (int r = 0; r < n; ++r) mat[r][k] = basis.coeff(2 * r + 1);
    basis = basis * iota;
  }
  for (int r = 0; r < n; ++r) rhs[r] = -a.coeff(2 * r + 1);

  Poly p = Poly::from_coeffs(solve_linear(std::move(mat), std::move(rhs)));
  if (p.degree() != n - 1 || p.leading() != Scalar(n))
    throw invariant_violation("solved P has wrong leading term");
  Poly check = a + s1 * subst_neg_s_s1(p);
  if (!parity_split(check).second.is_zero())
    throw invariant_violation("solved P fails the evenness condition");
  return p;
}

Poly solve_q_from_p(const Poly& p) {
  const int n = p.degree() + 1;
  if (n < 3) throw precondition_error("P must have degree >= 2");
  if (p.leading() != Scalar(n))
    throw precondition_error("leading coefficient of P must equal deg P + 1");
  const Poly s1 = Poly::from_coeffs({Scalar(1), Scalar(1)});
  const Poly iota = Poly::from_coeffs({Scalar(0), Scalar(-1), Scalar(-1)});

  /* Known part: (s+1)P(-s(s+1)) + (-s(s+1))^n  (Q monic, zero constant).
   * Unknowns q_1..q_(n-1) multiply iota^k. */
  Poly iota_pows = iota;
  std::vector<Poly> basis(n);  // basis[k] = iota^k for k = 1..n-1, then ^n
  Poly cur = Poly(Scalar(1));
  for (int k = 1; k <= n; ++k) {
    cur = cur * iota;
    if (k < n) basis[k] = cur;
  }
  Poly known = s1 * subst_neg_s_s1(p) + cur;

  std::vector<std::vector<Scalar>> mat(n, std::vector<Scalar>(n - 1, Scalar(0)));
  std::vector<Scalar> rhs(n, Scalar(0));
  for (int k = 1; k < n; ++k)
    for (int r = 0; r < n; ++r) mat[r][k - 1] = basis[k].coeff(2 * r + 1);
  for (int r = 0; r < n; ++r) rhs[r] = -known.coeff(2 * r + 1);

  std::vector<Scalar> sol = solve_linear(std::move(mat), std::move(rhs));
  std::vector<Scalar> qc(n + 1, Scalar(0));
  for (int k = 1; k < n; ++k) qc[k] = sol[k - 1];
  qc[n] = Scalar(1);
  Poly q = Poly::from_coeffs(std::move(qc));
  Poly check = subst_neg_s_s1(q) + s1 * subst_neg_s_s1(p);
  if (!parity_split(check).second.is_zero())
    throw invariant_violation("solved Q fails the evenness condition");
  return q;
}

std::pair<Poly, Poly> rho_mu(const Poly& p) {
  const Poly neg_s = Poly::monomial(1, Scalar(-1));
  const Poly s_plus_1 = Poly::from_coeffs({Scalar(1), Scalar(1)});
  const Poly neg_s_minus_1 = Poly::from_coeffs({Scalar(-1), Scalar(-1)});

  Poly rnum = p.compose(neg_s) - p;
  std::vector<Scalar> rc;
  for (int k = 1; k <= rnum.degree(); ++k)
    rc.push_back(rnum.coeff(k) * Scalar(Rational(1, 2)));
  if (!rnum.coeff(0).is_zero())
    throw invariant_violation("rho numerator not divisible by s");
  Poly rho = Poly::from_coeffs(std::move(rc));

  Poly mnum = p.compose(neg_s_minus_1) - p.compose(s_plus_1);
  auto [mq, mr] = mnum.divmod(s_plus_1);
  if (!mr.is_zero())
    throw invariant_violation("mu numerator not divisible by s+1");
  Poly mu = Scalar(Rational(1, 2)) * mq;
  return {rho, mu};
}

/* Writes a polynomial g(s) lying in the image of t -> -s(s+1) back as a
 * polynomial in t, by peeling leading coefficients. */
static Poly invert_subst(Poly g) {
  std::vector<Scalar> out;
  while (!g.is_zero()) {
    int d = g.degree();
    if (d % 2 != 0)
      throw invariant_violation("polynomial not in the image of t -> -s(s+1)");
    int k = d / 2;
    Scalar c = g.leading();
    if (k % 2 != 0) c = -c;  // (-s^2-s)^k has leading coefficient (-1)^k
    if (static_cast<int>(out.size()) < k + 1) out.resize(k + 1, Scalar(0));
    out[k] = c;
    g = g - subst_neg_s_s1(Poly::monomial(k, c));
  }
  return Poly::from_coeffs(std::move(out));
}

std::pair<Poly, Poly> alpha_beta(const Poly& f) {
  const Poly fbar = subst_neg_s_s1(f);
  auto [rho, mu] = rho_mu(fbar);
  const Poly two_s_1 = Poly::from_coeffs({Scalar(1), Scalar(2)});  // 2s + 1
  auto [bq, br] = (mu - rho).divmod(two_s_1);
  if (!br.is_zero())
    throw invariant_violation("beta solve: division by 2s+1 not exact");
  Poly beta_bar = bq;
  Poly alpha_bar = rho + Poly::variable() * beta_bar;
  Poly alpha = invert_subst(alpha_bar);
  Poly beta = invert_subst(beta_bar);
  if (subst_neg_s_s1(alpha) - Poly::variable() * subst_neg_s_s1(beta) != rho)
    throw invariant_violation("alpha/beta defining identity failed");
  return {alpha, beta};
}

static Scalar binom(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Scalar(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return Scalar(Rational(r));
}

std::pair<Poly, Poly> pq_polys(int m) {
  if (m < 2) throw precondition_error("pq_polys requires m >= 2");
  const Rational quarter(1, 4);
  std::vector<Scalar> pc, qc;
  Rational pow(1);
  for (int i = 0; i <= (m - 1) / 2; ++i) {
    pc.push_back(binom(m - i - 1, i) * Scalar(pow));
    pow *= quarter;
  }
  pow = 1;
  for (int i = 0; i <= m / 2; ++i) {
    qc.push_back((binom(m - i, i) + binom(m - i - 1, i - 1)) * Scalar(pow));
    pow *= quarter;
  }
  return {Poly::from_coeffs(std::move(pc)), Poly::from_coeffs(std::move(qc))};
}

void OpPoly::trim() {
  for (auto& row : c_)
    while (!row.empty() && row.back().is_zero()) row.pop_back();
  while (!c_.empty() && c_.back().empty()) c_.pop_back();
}

OpPoly OpPoly::constant(const Scalar& c) {
  OpPoly p;
  p.c_ = {{c}};
  p.trim();
  return p;
}

OpPoly OpPoly::S() {
  OpPoly p;
  p.c_ = {{}, {Scalar(1)}};
  return p;
}

OpPoly OpPoly::T() {
  OpPoly p;
  p.c_ = {{Scalar(0), Scalar(1)}};
  return p;
}

int OpPoly::deg_t_at(int a) const {
  if (a < 0 || a >= static_cast<int>(c_.size())) return -1;
  int d = -1;
  for (int b = 0; b < static_cast<int>(c_[a].size()); ++b)
    if (!c_[a][b].is_zero()) d = b;
  return d;
}

Scalar OpPoly::coeff(int a, int b) const {
  if (a < 0 || a >= static_cast<int>(c_.size())) return Scalar(0);
  if (b < 0 || b >= static_cast<int>(c_[a].size())) return Scalar(0);
  return c_[a][b];
}

OpPoly operator+(const OpPoly& x, const OpPoly& y) {
  OpPoly r;
  size_t rows = std::max(x.c_.size(), y.c_.size());
  r.c_.resize(rows);
  for (size_t a = 0; a < rows; ++a) {
    size_t cols = std::max(a < x.c_.size() ? x.c_[a].size() : 0,
                           a < y.c_.size() ? y.c_[a].size() : 0);
    r.c_[a].assign(cols, Scalar(0));
    for (size_t b = 0; b < cols; ++b)
      r.c_[a][b] = x.coeff(static_cast<int>(a), static_cast<int>(b)) +
                   y.coeff(static_cast<int>(a), static_cast<int>(b));
  }
  r.trim();
  return r;
}

OpPoly operator*(const OpPoly& x, const OpPoly& y) {
  OpPoly r;
  if (x.is_zero() || y.is_zero()) return r;
  for (size_t ax = 0; ax < x.c_.size(); ++ax)
    for (size_t bx = 0; bx < x.c_[ax].size(); ++bx) {
      if (x.c_[ax][bx].is_zero()) continue;
      for (size_t ay = 0; ay < y.c_.size(); ++ay)
        for (size_t by = 0; by < y.c_[ay].size(); ++by) {
          if (y.c_[ay][by].is_zero()) continue;
          size_t a = ax + ay, b = bx + by;
          if (r.c_.size() <= a) r.c_.resize(a + 1);
          if (r.c_[a].size() <= b) r.c_[a].resize(b + 1, Scalar(0));
          r.c_[a][b] += x.c_[ax][bx] * y.c_[ay][by];
        }
    }
  r.trim();
  return r;
}

OpPoly operator*(const Scalar& c, const OpPoly& x) {
  return OpPoly::constant(c) * x;
}

OpPoly f_poly(int m) {
  if (m < 0) throw precondition_error("f_poly requires m >= 0");
  if (m == 0) return OpPoly::S();
  Scalar m2(Rational(mpz_class(m) * m));
  return OpPoly::S() * OpPoly::S() + (Scalar(-2) * m2) * OpPoly::S() +
         OpPoly::constant(m2 * (m2 - Scalar(1))) + (Scalar(4) * m2) * OpPoly::T();
}

OpPoly f_product(int m) {
  OpPoly r = f_poly(0);
  for (int i = 1; i <= m; ++i) r = r * f_poly(i);
  return r;
}

}  // namespace dklein
