#include "nfp/volumes.hpp"

#include <stdexcept>
#include <string>

#include "nfp/report.hpp"

namespace nfp::volumes {

namespace {

void require_conductor(long c, const char* what) {
  if (c < 1) throw RejectedInput(std::string(what) + ": formula requires conductor c >= 1");
}

void require_nonneg(long m, const char* what) {
  if (m < 0) throw std::invalid_argument(std::string(what) + ": rank must be >= 0");
}

// prod_{i=1}^n (1 - x^{-i})
Rat tail_product(long n, const Rat& x) {
  Rat p(1);
  for (long i = 1; i <= n; ++i) p *= Rat(1) - x.pow(-i);
  return p;
}

}  // namespace

Rat zeta1(const Rat& q) { return (Rat(1) - q.inverse()).inverse(); }

Rat l_eta(const Rat& q_f) { return (Rat(1) + q_f.inverse()).inverse(); }

Rat gl_order(long m, const Rat& q) {
  require_nonneg(m, "gl_order");
  Rat p(1);
  for (long i = 0; i < m; ++i) p *= q.pow(m) - q.pow(i);
  return p;
}

Rat unitary_order(long m, const Rat& q) {
  require_nonneg(m, "unitary_order");
  Rat p = q.pow(m * (m - 1) / 2);
  for (long i = 1; i <= m; ++i) p *= q.pow(i) - Rat(i % 2 == 0 ? 1 : -1);
  return p;
}

Rat vol_gl(long m, const Rat& q) {
  require_nonneg(m, "vol_gl");
  if (m == 0) return Rat(1);
  return zeta1(q) * tail_product(m, q);
}

Rat vol_gl_formula(long m, const Rat& q) {
  require_nonneg(m, "vol_gl_formula");
  return zeta1(q) * tail_product(m, q);
}

Rat vol_kprime_c(long n, long c, const Rat& q_e) {
  require_nonneg(n, "vol_kprime_c");
  require_conductor(c, "vol_kprime_c");
  return zeta1(q_e) * q_e.pow(-c * (n + 1)) * tail_product(n, q_e);
}

Rat vol_bmK_glF(long n, long c, const Rat& q_f) {
  require_nonneg(n, "vol_bmK_glF");
  require_conductor(c, "vol_bmK_glF");
  return zeta1(q_f) * q_f.pow(-c * (n + 1)) * tail_product(n, q_f);
}

Rat vol_unitary_w(long m, const Rat& q_f) {
  require_nonneg(m, "vol_unitary_w");
  return l_eta(q_f) * tail_product(m, -q_f);
}

Rat vol_unitary_v(long n, long c, const Rat& q_f) {
  require_nonneg(n, "vol_unitary_v");
  return l_eta(q_f) * q_f.pow(-c * n) * (Rat(1) + q_f.inverse()) * tail_product(n, -q_f);
}

Rat vol_lie_uV(long n, long c, const Rat& q_f) { return q_f.pow(-c * n); }

Rat vol_k0_lie(long n, long c, const Rat& q_f) { return q_f.pow(-c * n - n * n - 1); }

Rat vol_K0(long n, long c, const Rat& q_f) { return l_eta(q_f) * vol_k0_lie(n, c, q_f); }

std::pair<Rat, Rat> c1(long n, long c, const Rat& q_f) {
  require_nonneg(n, "c1");
  require_conductor(c, "c1");
  const Rat q_e = q_f * q_f;
  const Rat k_n = vol_unitary_w(n, q_f);
  Rat quotient = k_n * k_n / (vol_gl(n, q_f) * vol_gl(n, q_e) * vol_bmK_glF(n, c, q_f));

  const Rat le = l_eta(q_f);
  const Rat zf = zeta1(q_f);
  Rat product = le * le / (zf * zf * zeta1(q_e)) * q_f.pow(c * (n + 1));
  for (long i = 1; i <= n; ++i) {
    Rat a = Rat(1) - (-q_f).pow(-i);
    Rat b = Rat(1) - q_f.pow(-i);
    Rat d = Rat(1) + q_f.pow(-i);
    product *= a * a / (b * b * b * d);
  }
  return {quotient, product};
}

Rat constant_C(long n, long c, const Rat& q_f) {
  require_nonneg(n, "constant_C");
  require_conductor(c, "constant_C");
  const Rat k_n = vol_unitary_w(n, q_f);
  return k_n * k_n * l_eta(q_f) * q_f.pow(-c * (n + 1)) * (Rat(1) + q_f.pow(-n));
}

void check_residue_size(long q) {
  if (q < 3 || q % 2 == 0 || !is_prime_power(q))
    throw std::invalid_argument("residue field size must be an odd prime power >= 3, got " +
                                std::to_string(q));
}

}  // namespace nfp::volumes
