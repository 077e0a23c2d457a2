#include "dklein/algebra.hpp"

namespace dklein {

AlgebraSpec AlgebraSpec::make(AlgebraKind kind, const Poly& qp,
                              const Scalar& gamma) {
  AlgebraSpec s;
  s.kind_ = kind;
  s.gamma_ = gamma;
  if (kind == AlgebraKind::D) {
    if (qp.degree() < 3) throw precondition_error("Q must have degree >= 3");
    if (!qp.is_monic()) throw precondition_error("Q must be monic");
    s.q_ = qp;
    s.p_ = solve_p_from_q(qp);
    s.n_ = qp.degree();
  } else {
    if (qp.degree() < 2)
      throw precondition_error("P must have degree >= 2");
    if (qp.leading() != Scalar(qp.degree() + 1))
      throw precondition_error("P must have leading term n*t^(n-1)");
    s.p_ = qp;
    s.n_ = qp.degree() + 1;
  }
  return s;
}

AlgebraSpec AlgebraSpec::unchecked(AlgebraKind kind, Poly q, Poly p,
                                   Scalar gamma) {
  AlgebraSpec s;
  s.kind_ = kind;
  s.q_ = std::move(q);
  s.p_ = std::move(p);
  s.gamma_ = std::move(gamma);
  s.n_ = kind == AlgebraKind::D ? s.q_.degree() : s.p_.degree() + 1;
  return s;
}

const Poly& AlgebraSpec::q() const {
  if (kind_ != AlgebraKind::D)
    throw precondition_error("H-algebra spec has no Q");
  return q_;
}

Element Element::scalar(const Scalar& c) { return term(Monomial{}, c); }

Element Element::generator(char name) {
  Monomial m;
  switch (name) {
    case 'u': m.i = 1; break;
    case 'v': m.j = 1; break;
    case 'w': m.k = 1; break;
    default: throw precondition_error("unknown generator");
  }
  return term(m, Scalar(1));
}

Element Element::term(const Monomial& m, const Scalar& c) {
  Element e;
  e.add_term(m, c);
  return e;
}

void Element::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Element operator+(const Element& x, const Element& y) {
  Element r = x;
  for (const auto& [m, c] : y.terms_) r.add_term(m, c);
  return r;
}

Element operator-(const Element& x, const Element& y) { return x + (-y); }

Element operator-(const Element& x) {
  Element r;
  for (const auto& [m, c] : x.terms_) r.terms_.emplace(m, -c);
  return r;
}

Element operator*(const Scalar& c, const Element& x) {
  Element r;
  if (c.is_zero()) return r;
  for (const auto& [m, xc] : x.terms_) r.terms_.emplace(m, c * xc);
  return r;
}

namespace {

using Parts = std::vector<std::pair<std::string, Scalar>>;

/* Appends the words of a scalar polynomial in u: coeff_a * u^a. */
void append_poly_words(Parts& parts, const Poly& p, const Scalar& factor) {
  for (int a = 0; a <= p.degree(); ++a) {
    Scalar c = factor * p.coeff(a);
    if (!c.is_zero()) parts.emplace_back(std::string(a, 'u'), c);
  }
}

struct RuleTable {
  Parts vu, wu, wv, ww;
};

RuleTable build_rules(const AlgebraSpec& spec) {
  RuleTable t;
  t.vu = {{"uv", Scalar(1)}, {"w", Scalar(-2)}};
  t.wu = {{"uw", Scalar(1)},
          {"uv", Scalar(2)},
          {"w", Scalar(-2)},
          {"", -spec.gamma()}};
  t.wv = {{"vw", Scalar(1)}, {"vv", Scalar(-1)}};
  append_poly_words(t.wv, spec.p(), Scalar(-1));
  if (spec.kind() == AlgebraKind::D) {
    t.ww = {{"uvv", Scalar(-1)},
            {"vw", Scalar(2)},
            {"vv", Scalar(-2)},
            {"v", spec.gamma()}};
    append_poly_words(t.ww, spec.q(), Scalar(-1));
    append_poly_words(t.ww, spec.p(), Scalar(-2));
  }
  return t;
}

bool is_redex(char a, char b, AlgebraKind kind) {
  if (a > b) return true;  // 'u' < 'v' < 'w' in ASCII
  return kind == AlgebraKind::D && a == 'w' && b == 'w';
}

int find_redex(const std::string& w, AlgebraKind kind, bool rightmost) {
  if (w.size() < 2) return -1;
  if (rightmost) {
    for (int p = static_cast<int>(w.size()) - 2; p >= 0; --p)
      if (is_redex(w[p], w[p + 1], kind)) return p;
  } else {
    for (int p = 0; p + 1 < static_cast<int>(w.size()); ++p)
      if (is_redex(w[p], w[p + 1], kind)) return p;
  }
  return -1;
}

Monomial monomial_of_normal_word(const std::string& w) {
  Monomial m;
  for (char ch : w) {
    if (ch == 'u') ++m.i;
    else if (ch == 'v') ++m.j;
    else ++m.k;
  }
  return m;
}

std::string word_of_monomial(const Monomial& m) {
  std::string w;
  w.reserve(m.i + m.j + m.k);
  w.append(m.i, 'u');
  w.append(m.j, 'v');
  w.append(m.k, 'w');
  return w;
}

constexpr size_t kTermCap = 1'000'000;

}  // namespace

Element reduce_words(const AlgebraSpec& spec,
                     std::map<std::string, Scalar> agenda, bool rightmost) {
  const RuleTable rules = build_rules(spec);
  Element out;
  while (!agenda.empty()) {
    std::map<std::string, Scalar> next;
    for (const auto& [w, c] : agenda) {
      if (c.is_zero()) continue;
      int pos = find_redex(w, spec.kind(), rightmost);
      if (pos < 0) {
        out.add_term(monomial_of_normal_word(w), c);
        continue;
      }
      const Parts* parts;
      char a = w[pos], b = w[pos + 1];
      if (a == 'v') parts = &rules.vu;
      else if (b == 'u') parts = &rules.wu;
      else if (b == 'v') parts = &rules.wv;
      else parts = &rules.ww;
      for (const auto& [mid, f] : *parts) {
        std::string nw;
        nw.reserve(w.size() + mid.size());
        nw.append(w, 0, pos);
        nw.append(mid);
        nw.append(w, pos + 2, std::string::npos);
        next[std::move(nw)] += c * f;
      }
      if (next.size() > kTermCap)
        throw invariant_violation("rewrite term count exceeded cap");
    }
    std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
    agenda = std::move(next);
  }
  return out;
}

Element reduce(const AlgebraSpec& spec, const Element& x) {
  std::map<std::string, Scalar> agenda;
  for (const auto& [m, c] : x.terms()) agenda[word_of_monomial(m)] = c;
  return reduce_words(spec, std::move(agenda));
}

Element mul(const AlgebraSpec& spec, const Element& x, const Element& y) {
  std::map<std::string, Scalar> agenda;
  for (const auto& [mx, cx] : x.terms()) {
    const std::string wx = word_of_monomial(mx);
    for (const auto& [my, cy] : y.terms()) {
      Scalar c = cx * cy;
      if (c.is_zero()) continue;
      std::string w = wx + word_of_monomial(my);
      auto [it, inserted] = agenda.emplace(std::move(w), c);
      if (!inserted) it->second += c;
    }
  }
  return reduce_words(spec, std::move(agenda));
}

Element commutator(const AlgebraSpec& spec, const Element& x,
                   const Element& y) {
  return mul(spec, x, y) - mul(spec, y, x);
}

Element power(const AlgebraSpec& spec, const Element& x, int e) {
  if (e < 0) throw precondition_error("negative power of an algebra element");
  Element r = Element::scalar(Scalar(1));
  for (int k = 0; k < e; ++k) r = mul(spec, r, x);
  return r;
}

Element poly_at(const AlgebraSpec& spec, const Poly& f, const Element& g) {
  Element acc;
  for (int k = f.degree(); k >= 0; --k) {
    acc = mul(spec, acc, g);
    acc.add_term(Monomial{}, f.coeff(k));
  }
  return acc;
}

Element apply_op_poly(const AlgebraSpec& spec, const OpPoly& op,
                      const Element& f, const Element& x) {
  Element result;
  const auto& rows = op.rows();
  int max_t = -1;
  for (int a = 0; a < static_cast<int>(rows.size()); ++a)
    max_t = std::max(max_t, op.deg_t_at(a));
  Element tx = x;  // f^b * x as b grows
  for (int b = 0; b <= max_t; ++b) {
    if (b > 0) tx = mul(spec, f, tx);
    Element z = tx;  // (ad f)^a applied lazily
    for (int a = 0; a < static_cast<int>(rows.size()); ++a) {
      Scalar c = op.coeff(a, b);
      if (!c.is_zero()) result = result + c * z;
      if (a + 1 < static_cast<int>(rows.size())) z = commutator(spec, f, z);
    }
  }
  return result;
}

Element substitute(const AlgebraSpec& target, const Element& x,
                   const std::array<Element, 3>& images) {
  Element out;
  for (const auto& [m, c] : x.terms()) {
    Element t = Element::scalar(c);
    t = mul(target, t, power(target, images[0], m.i));
    t = mul(target, t, power(target, images[1], m.j));
    t = mul(target, t, power(target, images[2], m.k));
    out = out + t;
  }
  return out;
}

int degree_standard(const AlgebraSpec& spec, const Element& x) {
  if (x.is_zero()) throw zero_element_error("degree of the zero element");
  const int n = spec.n();
  int best = 0;
  bool first = true;
  for (const auto& [m, c] : x.terms()) {
    int d = 4 * m.i + (2 * n - 2) * m.j + 2 * n * m.k;
    if (first || d > best) best = d;
    first = false;
  }
  return best;
}

LimitDegree degree_limit(const Element& x) {
  if (x.is_zero()) throw zero_element_error("degree of the zero element");
  LimitDegree best{-1, -1};
  for (const auto& [m, c] : x.terms()) {
    if (m.k > 1)
      throw precondition_error("limit degree requires w-exponent <= 1");
    LimitDegree d{m.j + m.k, 2L * m.i + m.k};
    if (d > best) best = d;
  }
  return best;
}

std::pair<Monomial, Scalar> limit_leading_term(const Element& x) {
  if (x.is_zero()) throw zero_element_error("degree of the zero element");
  const std::pair<const Monomial, Scalar>* best = nullptr;
  LimitDegree bd{-1, -1};
  for (const auto& t : x.terms()) {
    if (t.first.k > 1)
      throw precondition_error("limit degree requires w-exponent <= 1");
    LimitDegree d{t.first.j + t.first.k, 2L * t.first.i + t.first.k};
    if (d > bd) {
      bd = d;
      best = &t;
    }
  }
  return {best->first, best->second};
}

bool DiamondReport::all_ok() const {
  for (const auto& e : entries)
    if (!e.ok) return false;
  return !entries.empty();
}

DiamondReport check_diamond(const AlgebraSpec& spec) {
  std::vector<std::string> overlaps = {"wvu", "wwu"};
  if (spec.kind() == AlgebraKind::D) {
    overlaps.push_back("wwv");
    overlaps.push_back("www");
  }
  DiamondReport report;
  for (const auto& w : overlaps) {
    DiamondEntry e;
    e.overlap = w;
    e.left = reduce_words(spec, {{w, Scalar(1)}}, /*rightmost=*/false);
    e.right = reduce_words(spec, {{w, Scalar(1)}}, /*rightmost=*/true);
    e.ok = e.left == e.right;
    report.entries.push_back(std::move(e));
  }
  return report;
}

Element center_element(const AlgebraSpec& spec, const Poly& q) {
  if (spec.kind() != AlgebraKind::H)
    throw precondition_error("center element is built in the H-algebra");
  Poly q0 = q - Poly(q.coeff(0));
  if (q0 != solve_q_from_p(spec.p()))
    throw precondition_error("Q is not a partner of the spec's P");
  const Element u = Element::generator('u');
  const Element v = Element::generator('v');
  const Element w = Element::generator('w');
  Element omega = poly_at(spec, q, u);
  omega = omega + mul(spec, u, mul(spec, v, v));
  omega = omega + mul(spec, w, w);
  omega = omega - Scalar(2) * mul(spec, w, v);
  omega = omega - spec.gamma() * v;
  return omega;
}

bool is_central(const AlgebraSpec& spec, const Element& x) {
  return commutator(spec, x, Element::generator('u')).is_zero() &&
         commutator(spec, x, Element::generator('v')).is_zero();
}

}  // namespace dklein
