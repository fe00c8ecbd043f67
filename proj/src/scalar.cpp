#include "bei/scalar.hpp"

#include <stdexcept>

namespace bei {

namespace {

// residue of an integer mod p, in 0..p-1
unsigned long mod_ui(const mpz_class& z, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return r.get_ui();
}

unsigned long inv_mod(unsigned long a, std::uint32_t p) {
  // extended Euclid; p is prime and a != 0 mod p
  long long t = 0, nt = 1, r = p, nr = static_cast<long long>(a % p);
  while (nr != 0) {
    long long q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  if (r != 1) throw std::domain_error("inv_mod: not invertible");
  if (t < 0) t += p;
  return static_cast<unsigned long>(t);
}

}  // namespace

Scalar reduce(const Field& F, const mpq_class& v) {
  if (!F.is_fp()) {
    mpq_class c = v;
    c.canonicalize();
    return Scalar(c);
  }
  unsigned long num = mod_ui(v.get_num(), F.p);
  unsigned long den = mod_ui(v.get_den(), F.p);
  if (den == 0) throw std::domain_error("reduce: denominator divisible by p");
  unsigned long r = (num * inv_mod(den, F.p)) % F.p;
  return Scalar(mpq_class(static_cast<long>(r)));
}

Scalar scalar_of(const Field& F, long num, long den) {
  if (den == 0) throw std::domain_error("scalar_of: zero denominator");
  return reduce(F, mpq_class(num, den));
}

Scalar parse_scalar(const Field& F, const std::string& s) {
  mpq_class v;
  if (v.set_str(s, 10) != 0) throw std::invalid_argument("bad scalar: " + s);
  return reduce(F, v);
}

Scalar add(const Field& F, const Scalar& a, const Scalar& b) {
  return reduce(F, a.value() + b.value());
}

Scalar sub(const Field& F, const Scalar& a, const Scalar& b) {
  return reduce(F, a.value() - b.value());
}

Scalar mul(const Field& F, const Scalar& a, const Scalar& b) {
  return reduce(F, a.value() * b.value());
}

Scalar neg(const Field& F, const Scalar& a) {
  return reduce(F, mpq_class(-a.value()));
}

Scalar inv(const Field& F, const Scalar& a) {
  if (a.is_zero()) throw std::domain_error("inv: zero");
  if (!F.is_fp()) return Scalar(mpq_class(1) / a.value());
  unsigned long r = mod_ui(a.value().get_num(), F.p);
  return Scalar(mpq_class(static_cast<long>(inv_mod(r, F.p))));
}

Scalar div(const Field& F, const Scalar& a, const Scalar& b) {
  return mul(F, a, inv(F, b));
}

std::uint32_t fp_value(const Field& F, const Scalar& a) {
  if (!F.is_fp()) throw std::domain_error("fp_value: rational field");
  // scalars under F_p are already canonical residues with denominator 1
  return static_cast<std::uint32_t>(mod_ui(reduce(F, a.value()).value().get_num(), F.p));
}

}  // namespace bei
