#include "bei/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace bei {

std::string VarName::str() const {
  std::ostringstream os;
  switch (kind) {
    case VarKind::X: os << "x" << a; break;
    case VarKind::Y: os << "y" << a; break;
    case VarKind::TE: os << "T[" << a << "," << b << "]"; break;
    case VarKind::Tee: os << "t"; break;
    case VarKind::Aux: os << "z"; break;
  }
  return os.str();
}

void Monomial::set_exp(int slot, int v) {
  if (v < 0 || v > 255) throw std::out_of_range("Monomial: exponent out of range");
  deg_ += v - e_[slot];
  e_[slot] = static_cast<std::uint8_t>(v);
}

Monomial Monomial::mul(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (int i = 0; i < r.nslots(); ++i) {
    int s = r.e_[i] + b.e_[i];
    if (s > 255) throw std::overflow_error("Monomial: exponent overflow");
    r.e_[i] = static_cast<std::uint8_t>(s);
  }
  r.deg_ = a.deg_ + b.deg_;
  return r;
}

std::optional<Monomial> Monomial::try_div(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (int i = 0; i < r.nslots(); ++i) {
    if (a.e_[i] < b.e_[i]) return std::nullopt;
    r.e_[i] = static_cast<std::uint8_t>(a.e_[i] - b.e_[i]);
  }
  r.deg_ = a.deg_ - b.deg_;
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  r.deg_ = 0;
  for (int i = 0; i < r.nslots(); ++i) {
    r.e_[i] = std::max(a.e_[i], b.e_[i]);
    r.deg_ += r.e_[i];
  }
  return r;
}

bool Monomial::divides(const Monomial& b, const Monomial& a) {
  for (int i = 0; i < a.nslots(); ++i)
    if (b.e_[i] > a.e_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < a.nslots(); ++i)
    if (a.e_[i] && b.e_[i]) return false;
  return true;
}

int Monomial::cmp(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < a.nslots(); ++i) {
    if (a.e_[i] != b.e_[i]) return a.e_[i] > b.e_[i] ? 1 : -1;
  }
  return 0;
}

std::uint64_t Monomial::pack() const {
  if (nslots() > 16) throw std::overflow_error("Monomial::pack: too many variables");
  std::uint64_t v = 0;
  for (int i = 0; i < nslots(); ++i) {
    if (e_[i] > 15) throw std::overflow_error("Monomial::pack: exponent > 15");
    v = (v << 4) | e_[i];
  }
  return v;
}

RingPtr Ring::make(Field F, std::vector<VarName> precedence) {
  auto r = std::make_shared<Ring>();
  r->field_ = F;
  r->vars_ = std::move(precedence);
  for (int i = 0; i < static_cast<int>(r->vars_.size()); ++i) {
    auto [it, fresh] = r->slot_.emplace(r->vars_[i], i);
    if (!fresh) throw std::invalid_argument("Ring: duplicate variable " + r->vars_[i].str());
  }
  return r;
}

RingPtr Ring::xy_lex(int n, Field F) {
  std::vector<VarName> vars;
  for (int i = 1; i <= n; ++i) vars.push_back(vx(i));
  for (int i = 1; i <= n; ++i) vars.push_back(vy(i));
  return make(F, std::move(vars));
}

RingPtr Ring::with_front(const std::vector<VarName>& front) const {
  std::vector<VarName> vars = front;
  for (const auto& v : front)
    if (!slot(v)) throw std::invalid_argument("with_front: unknown variable " + v.str());
  for (const auto& v : vars_)
    if (std::find(front.begin(), front.end(), v) == front.end()) vars.push_back(v);
  return make(field_, std::move(vars));
}

RingPtr Ring::without(const std::vector<VarName>& drop) const {
  std::vector<VarName> vars;
  for (const auto& v : vars_)
    if (std::find(drop.begin(), drop.end(), v) == drop.end()) vars.push_back(v);
  return make(field_, std::move(vars));
}

std::optional<int> Ring::slot(const VarName& v) const {
  auto it = slot_.find(v);
  if (it == slot_.end()) return std::nullopt;
  return it->second;
}

bool Ring::same(const Ring& o) const { return field_ == o.field_ && vars_ == o.vars_; }

Monomial Ring::var_monomial(const VarName& v) const {
  auto s = slot(v);
  if (!s) throw std::invalid_argument("var_monomial: unknown variable " + v.str());
  Monomial m(nvars());
  m.set_exp(*s, 1);
  return m;
}

std::string Ring::monomial_str(const Monomial& m) const {
  if (m.is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < nvars(); ++i) {
    if (m.exp(i) == 0) continue;
    if (!first) os << "*";
    os << vars_[i].str();
    if (m.exp(i) > 1) os << "^" << m.exp(i);
    first = false;
  }
  return os.str();
}

const Term& Poly::lt() const {
  if (terms_.empty()) throw std::domain_error("lt: zero polynomial");
  return terms_.front();
}

int Poly::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.m.deg());
  return d;
}

bool Poly::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.m.deg() != terms_.front().m.deg()) return false;
  return true;
}

Poly Poly::constant(RingPtr R, const Scalar& c) {
  Poly p(R);
  if (!c.is_zero()) p.terms_.push_back({Monomial(R->nvars()), c});
  return p;
}

Poly Poly::variable(const RingPtr& R, const VarName& v) {
  Poly p(R);
  p.terms_.push_back({R->var_monomial(v), scalar_of(R->field(), 1)});
  return p;
}

Poly Poly::monomial(RingPtr R, Monomial m, Scalar c) {
  Poly p(R);
  if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
  return p;
}

Poly Poly::from_terms(RingPtr R, std::vector<Term> ts) {
  std::sort(ts.begin(), ts.end(),
            [](const Term& a, const Term& b) { return Monomial::cmp(a.m, b.m) > 0; });
  Poly p(R);
  const Field& F = R->field();
  for (auto& t : ts) {
    if (t.c.is_zero()) continue;
    if (!p.terms_.empty() && p.terms_.back().m == t.m) {
      p.terms_.back().c = add(F, p.terms_.back().c, t.c);
      if (p.terms_.back().c.is_zero()) p.terms_.pop_back();
    } else {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Poly Poly::operator+(const Poly& o) const {
  if (!ring_->same(*o.ring_)) throw std::invalid_argument("poly +: mixed rings");
  Poly r(ring_);
  const Field& F = ring_->field();
  size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() ||
        (i < terms_.size() && Monomial::cmp(terms_[i].m, o.terms_[j].m) > 0)) {
      r.terms_.push_back(terms_[i++]);
    } else if (i == terms_.size() || Monomial::cmp(terms_[i].m, o.terms_[j].m) < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Scalar c = add(F, terms_[i].c, o.terms_[j].c);
      if (!c.is_zero()) r.terms_.push_back({terms_[i].m, c});
      ++i;
      ++j;
    }
  }
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  const Field& F = ring_->field();
  for (auto& t : r.terms_) t.c = neg(F, t.c);
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::mul_term(const Monomial& m, const Scalar& c) const {
  Poly r(ring_);
  if (c.is_zero()) return r;
  const Field& F = ring_->field();
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Scalar cc = mul(F, t.c, c);
    if (!cc.is_zero()) r.terms_.push_back({Monomial::mul(t.m, m), cc});
  }
  return r;  // lex order is multiplicative, so sortedness is preserved
}

Poly Poly::operator*(const Poly& o) const {
  if (!ring_->same(*o.ring_)) throw std::invalid_argument("poly *: mixed rings");
  std::vector<Term> acc;
  const Field& F = ring_->field();
  acc.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) acc.push_back({Monomial::mul(a.m, b.m), mul(F, a.c, b.c)});
  return from_terms(ring_, std::move(acc));
}

Poly Poly::scaled(const Scalar& c) const { return mul_term(Monomial(ring_->nvars()), c); }

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(inv(ring_->field(), lc()));
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Scalar c = t.c;
    bool negative = c.sign() < 0;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    mpq_class mag = abs(t.c.value());
    if (t.m.is_one()) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << ring_->monomial_str(t.m);
    }
    first = false;
  }
  return os.str();
}

Poly Poly::change_ring(const RingPtr& S) const {
  if (S->field() != ring_->field()) throw std::invalid_argument("change_ring: field mismatch");
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(S->nvars());
    for (int i = 0; i < ring_->nvars(); ++i) {
      if (t.m.exp(i) == 0) continue;
      auto s = S->slot(ring_->var(i));
      if (!s) throw std::invalid_argument("change_ring: missing variable " + ring_->var(i).str());
      m.set_exp(*s, t.m.exp(i));
    }
    ts.push_back({std::move(m), t.c});
  }
  return from_terms(S, std::move(ts));
}

Poly Poly::substitute(const std::map<VarName, Poly>& images, const RingPtr& target) const {
  Poly out(target);
  for (const auto& t : terms_) {
    Poly prod = Poly::constant(target, t.c);
    for (int i = 0; i < ring_->nvars(); ++i) {
      int e = t.m.exp(i);
      if (e == 0) continue;
      const VarName& v = ring_->var(i);
      Poly base(target);
      auto it = images.find(v);
      if (it != images.end()) {
        if (!it->second.ring()->same(*target))
          throw std::invalid_argument("substitute: image in wrong ring");
        base = it->second;
      } else {
        base = Poly::variable(target, v);
      }
      for (int k = 0; k < e; ++k) prod = prod * base;
    }
    out = out + prod;
  }
  return out;
}

namespace {

void gb_rec(const RingPtr& R, const std::vector<int>& slots, size_t idx, int remaining,
            Monomial& cur, std::vector<Monomial>& out) {
  if (idx + 1 == slots.size()) {
    cur.set_exp(slots[idx], remaining);
    out.push_back(cur);
    cur.set_exp(slots[idx], 0);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur.set_exp(slots[idx], e);
    gb_rec(R, slots, idx + 1, remaining - e, cur, out);
  }
  cur.set_exp(slots[idx], 0);
}

}  // namespace

std::vector<Monomial> graded_basis(const RingPtr& R, int degree, const std::vector<VarName>& vars) {
  if (degree < 0) return {};
  std::vector<int> slots;
  if (vars.empty()) {
    for (int i = 0; i < R->nvars(); ++i) slots.push_back(i);
  } else {
    for (const auto& v : vars) {
      auto s = R->slot(v);
      if (!s) throw std::invalid_argument("graded_basis: unknown variable " + v.str());
      slots.push_back(*s);
    }
    std::sort(slots.begin(), slots.end());
  }
  std::vector<Monomial> out;
  if (degree == 0) {
    out.push_back(Monomial(R->nvars()));
    return out;
  }
  if (slots.empty()) return {};
  Monomial cur(R->nvars());
  gb_rec(R, slots, 0, degree, cur, out);
  return out;  // descending: heavier slots got higher exponents first
}

void FreeVector::add_to(Edge e, const Poly& p) {
  if (!p.ring()->same(*ring_)) throw std::invalid_argument("FreeVector: mixed rings");
  auto it = coords_.find(e);
  if (it == coords_.end()) {
    if (!p.is_zero()) coords_.emplace(e, p);
  } else {
    it->second = it->second + p;
    if (it->second.is_zero()) coords_.erase(it);
  }
}

Poly FreeVector::coord(Edge e) const {
  auto it = coords_.find(e);
  return it == coords_.end() ? Poly::zero(ring_) : it->second;
}

FreeVector FreeVector::operator+(const FreeVector& o) const {
  FreeVector r = *this;
  for (const auto& [e, p] : o.coords_) r.add_to(e, p);
  return r;
}

FreeVector FreeVector::operator-(const FreeVector& o) const {
  FreeVector r = *this;
  for (const auto& [e, p] : o.coords_) r.add_to(e, -p);
  return r;
}

FreeVector FreeVector::scaled(const Scalar& c) const {
  FreeVector r(ring_);
  if (c.is_zero()) return r;
  for (const auto& [e, p] : coords_) r.coords_.emplace(e, p.scaled(c));
  return r;
}

FreeVector FreeVector::mul_term(const Monomial& m, const Scalar& c) const {
  FreeVector r(ring_);
  if (c.is_zero()) return r;
  for (const auto& [e, p] : coords_) r.coords_.emplace(e, p.mul_term(m, c));
  return r;
}

Poly FreeVector::apply(const std::map<Edge, Poly>& images) const {
  Poly acc = Poly::zero(ring_);
  for (const auto& [e, p] : coords_) {
    auto it = images.find(e);
    if (it == images.end()) throw std::invalid_argument("FreeVector::apply: missing edge image");
    acc = acc + p * it->second;
  }
  return acc;
}

std::string FreeVector::str() const {
  if (coords_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, p] : coords_) {
    if (!first) os << "; ";
    os << "e{" << e.first << "," << e.second << "} <- " << p.str();
    first = false;
  }
  return os.str();
}

// ---- parsing ----

namespace {

struct Parser {
  const std::string& s;
  size_t i = 0;
  const RingPtr& R;

  void ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    ws();
    return i >= s.size();
  }
  char peek() {
    ws();
    return i < s.size() ? s[i] : '\0';
  }
  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("parse error at position " + std::to_string(i) + ": " + why);
  }
  long integer() {
    ws();
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) fail("expected integer");
    return std::stol(s.substr(start, i - start));
  }
  void expect(char c) {
    ws();
    if (i >= s.size() || s[i] != c) fail(std::string("expected '") + c + "'");
    ++i;
  }

  VarName varname() {
    ws();
    char c = s[i];
    if (c == 'x' || c == 'y') {
      ++i;
      long idx = integer();
      return c == 'x' ? vx(static_cast<int>(idx)) : vy(static_cast<int>(idx));
    }
    if (c == 'T') {
      ++i;
      expect('[');
      long a = integer();
      expect(',');
      long b = integer();
      expect(']');
      return vT(mk_edge(static_cast<int>(a), static_cast<int>(b)));
    }
    if (c == 't') {
      ++i;
      return vt();
    }
    if (c == 'z') {
      ++i;
      return vaux();
    }
    fail("expected variable");
  }

  // term := coeff | coeff '*' monomial | monomial
  Term term() {
    const Field& F = R->field();
    Scalar coeff = scalar_of(F, 1);
    Monomial m(R->nvars());
    bool saw_factor = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      long num = integer();
      long den = 1;
      if (peek() == '/') {
        ++i;
        den = integer();
      }
      coeff = scalar_of(F, num, den);
      if (peek() == '*') {
        ++i;
      } else {
        return {m, coeff};  // constant term
      }
    }
    while (true) {
      VarName v = varname();
      auto slot = R->slot(v);
      if (!slot) fail("variable " + v.str() + " not in ring");
      int e = 1;
      if (peek() == '^') {
        ++i;
        e = static_cast<int>(integer());
      }
      m.set_exp(*slot, m.exp(*slot) + e);
      saw_factor = true;
      if (peek() == '*') {
        ++i;
        continue;
      }
      break;
    }
    if (!saw_factor) fail("empty term");
    return {m, coeff};
  }
};

}  // namespace

Poly Poly::parse(const RingPtr& R, const std::string& text) {
  Parser p{text, 0, R};
  std::vector<Term> ts;
  if (p.eof()) throw std::invalid_argument("parse: empty input");
  bool negate = false;
  if (p.peek() == '-') {
    ++p.i;
    negate = true;
  } else if (p.peek() == '+') {
    ++p.i;
  }
  const Field& F = R->field();
  while (true) {
    Term t = p.term();
    if (negate) t.c = neg(F, t.c);
    ts.push_back(std::move(t));
    if (p.eof()) break;
    char c = p.peek();
    if (c == '+')
      negate = false;
    else if (c == '-')
      negate = true;
    else
      p.fail("expected '+' or '-'");
    ++p.i;
  }
  return from_terms(R, std::move(ts));
}

}  // namespace bei
