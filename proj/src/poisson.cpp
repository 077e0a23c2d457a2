#include "dklein/poisson.hpp"

namespace dklein {

CPoly CPoly::variable(char name) {
  switch (name) {
    case 'X': return term({1, 0, 0}, Scalar(1));
    case 'Y': return term({0, 1, 0}, Scalar(1));
    case 'Z': return term({0, 0, 1}, Scalar(1));
    default: throw precondition_error("unknown variable");
  }
}

CPoly CPoly::term(const Exps& e, const Scalar& c) {
  CPoly p;
  p.add_term(e, c);
  return p;
}

void CPoly::add_term(const Exps& e, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CPoly CPoly::derivative(int axis) const {
  CPoly r;
  for (const auto& [e, c] : terms_) {
    if (e[axis] == 0) continue;
    Exps d = e;
    --d[axis];
    r.add_term(d, Scalar(e[axis]) * c);
  }
  return r;
}

CPoly operator+(const CPoly& f, const CPoly& g) {
  CPoly r = f;
  for (const auto& [e, c] : g.terms_) r.add_term(e, c);
  return r;
}

CPoly operator-(const CPoly& f, const CPoly& g) { return f + (-g); }

CPoly operator-(const CPoly& f) {
  CPoly r;
  for (const auto& [e, c] : f.terms_) r.terms_.emplace(e, -c);
  return r;
}

CPoly operator*(const CPoly& f, const CPoly& g) {
  CPoly r;
  for (const auto& [ef, cf] : f.terms_)
    for (const auto& [eg, cg] : g.terms_)
      r.add_term({ef[0] + eg[0], ef[1] + eg[1], ef[2] + eg[2]}, cf * cg);
  return r;
}

CPoly operator*(const Scalar& c, const CPoly& f) {
  CPoly r;
  if (c.is_zero()) return r;
  for (const auto& [e, fc] : f.terms_) r.terms_.emplace(e, c * fc);
  return r;
}

CPoly bracket_phi(const CPoly& f, const CPoly& g, const CPoly& phi) {
  CPoly fx = f.derivative(0), fy = f.derivative(1), fz = f.derivative(2);
  CPoly gx = g.derivative(0), gy = g.derivative(1), gz = g.derivative(2);
  CPoly xy = phi.derivative(2);       // {X,Y}
  CPoly xz = -phi.derivative(1);      // {X,Z}
  CPoly yz = phi.derivative(0);       // {Y,Z}
  return (fx * gy - fy * gx) * xy + (fx * gz - fz * gx) * xz +
         (fy * gz - fz * gy) * yz;
}

CPoly reduce_z2(const CPoly& f, const CPoly& z2_image) {
  CPoly cur = f;
  for (;;) {
    CPoly high, low;
    for (const auto& [e, c] : cur.terms()) {
      if (e[2] >= 2)
        high.add_term({e[0], e[1], e[2] - 2}, c);
      else
        low.add_term(e, c);
    }
    if (high.is_zero()) return low;
    cur = low + high * z2_image;
  }
}

static const CPoly& limit_z2_image() {
  static const CPoly img = -(CPoly::variable('X') * CPoly::variable('Y') *
                             CPoly::variable('Y'));
  return img;
}

CPoly bracket_gr_limit(const CPoly& f, const CPoly& g) {
  /* phi = XY^2 + Z^2 yields exactly {X,Y}=2Z, {X,Z}=-2XY, {Y,Z}=Y^2. */
  CPoly phi = CPoly::variable('X') * CPoly::variable('Y') * CPoly::variable('Y') +
              CPoly::variable('Z') * CPoly::variable('Z');
  return reduce_z2(bracket_phi(f, g, phi), limit_z2_image());
}

CPoly hamiltonian_iterate(const CPoly& x, const CPoly& y, int m) {
  CPoly r = y;
  for (int k = 0; k < m; ++k) r = bracket_gr_limit(x, r);
  return r;
}

CPoly phi_poly(int n) {
  CPoly x = CPoly::variable('X'), y = CPoly::variable('Y'),
        z = CPoly::variable('Z');
  return CPoly::term({n, 0, 0}, Scalar(1)) + x * y * y + z * z;
}

/* Symbol of the weighted-degree-d part of x: u^i v^j w^k -> X^i Y^j Z^k. */
static CPoly symbol_at_degree(const AlgebraSpec& spec, const Element& x,
                              int d) {
  const int n = spec.n();
  CPoly s;
  for (const auto& [m, c] : x.terms())
    if (4 * m.i + (2 * n - 2) * m.j + 2 * n * m.k == d)
      s.add_term({m.i, m.j, m.k}, c);
  return s;
}

bool semiclassical_check(const AlgebraSpec& spec, const Element& x,
                         const Element& y) {
  if (x.is_zero() || y.is_zero())
    throw zero_element_error("semiclassical check requires nonzero elements");
  const int dx = degree_standard(spec, x);
  const int dy = degree_standard(spec, y);
  const int d = dx + dy - 2;

  CPoly expected =
      bracket_phi(symbol_at_degree(spec, x, dx), symbol_at_degree(spec, y, dy),
                  phi_poly(spec.n()));
  if (spec.kind() == AlgebraKind::D) {
    /* Quotient by the symbol of the defining relation: Z^2 = -X^n - XY^2. */
    CPoly z2img = -(CPoly::term({spec.n(), 0, 0}, Scalar(1)) +
                    CPoly::variable('X') * CPoly::variable('Y') *
                        CPoly::variable('Y'));
    expected = reduce_z2(expected, z2img);
  }

  Element c = commutator(spec, x, y);
  if (expected.is_zero())
    return c.is_zero() || degree_standard(spec, c) < d;
  if (c.is_zero() || degree_standard(spec, c) != d) return false;
  return symbol_at_degree(spec, c, d) == expected;
}

}  // namespace dklein
