#include "cmperiods/errors.hpp"
#include "cmperiods/relint.hpp"

namespace cmperiods {

mpz_class height(const mpq_class& q) {
  mpz_class num = abs(q.get_num());
  return num > q.get_den() ? num : mpz_class(q.get_den());
}

std::optional<mpq_class> recognize_rational(const BigReal& x,
                                            const mpz_class& max_den,
                                            const PrecisionContext& ctx) {
  if (max_den < 1) throw DomainError("max_den must be at least 1");
  if (!x.is_finite()) throw DomainError("cannot recognize a non-finite value");
  (void)ctx;

  // The binary value is itself an exact rational; expand that.
  mpq_class exact;
  mpfr_get_q(exact.get_mpq_t(), x.raw());
  mpq_class window(1, 2 * max_den * max_den);

  mpz_class num = exact.get_num(), den = exact.get_den();
  mpz_class p_prev = 0, p_cur = 1, q_prev = 1, q_cur = 0;
  // Convergents p/q from the Euclidean expansion of num/den.
  std::optional<mpq_class> best;
  for (;;) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    mpz_class p_next = a * p_cur + p_prev;
    mpz_class q_next = a * q_cur + q_prev;
    if (q_next > max_den) break;
    p_prev = p_cur;
    q_prev = q_cur;
    p_cur = p_next;
    q_cur = q_next;
    mpq_class cand(p_cur, q_cur);
    cand.canonicalize();
    if (abs(exact - cand) < window) {
      best = cand;
      break;
    }
    mpz_class rem = num - a * den;
    if (rem == 0) break;
    num = den;
    den = rem;
  }
  return best;
}

std::optional<mpq_class> recognize_sqrtp(const BigReal& x, long p,
                                         const mpz_class& max_den,
                                         const PrecisionContext& ctx) {
  if (p < 2) throw DomainError("recognize_sqrtp needs p >= 2");
  BigReal root = sqrt(BigReal::from_int(p, x.precision()));
  return recognize_rational(x / root, max_den, ctx);
}

}  // namespace cmperiods
