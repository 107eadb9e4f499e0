#include <mutex>
#include <vector>

#include "cmperiods/numkernel.hpp"

namespace cmperiods {

namespace {

// B_{2k} for k = 1..n from the tangent numbers (Brent-Harvey integer
// recurrence): B_{2k} = (-1)^(k-1) 2k T_k / (4^k (4^k - 1)).
std::vector<mpq_class> even_bernoulli(unsigned n) {
  std::vector<mpz_class> t(n + 1);
  t[1] = 1;
  for (unsigned k = 2; k <= n; ++k) t[k] = (k - 1) * t[k - 1];
  for (unsigned k = 2; k <= n; ++k) {
    for (unsigned j = k; j <= n; ++j) {
      t[j] = (j - k) * t[j - 1] + (j - k + 2) * t[j];
    }
  }
  std::vector<mpq_class> b(n + 1);
  for (unsigned k = 1; k <= n; ++k) {
    mpz_class four_k;
    mpz_ui_pow_ui(four_k.get_mpz_t(), 4, k);
    mpq_class v(mpz_class(2 * k) * t[k], four_k * (four_k - 1));
    v.canonicalize();
    b[k] = (k % 2 == 1) ? v : mpq_class(-v);
  }
  return b;
}

struct BernoulliCache {
  std::mutex mu;
  std::vector<mpq_class> even;  // even[k] = B_{2k}
};

BernoulliCache& cache() {
  static BernoulliCache c;
  return c;
}

}  // namespace

mpq_class bernoulli(unsigned n) {
  if (n == 0) return 1;
  if (n == 1) return mpq_class(-1, 2);
  if (n % 2 == 1) return 0;
  unsigned k = n / 2;
  auto& c = cache();
  std::lock_guard lock(c.mu);
  if (c.even.size() <= k) {
    unsigned want = std::max<unsigned>(k, 2 * static_cast<unsigned>(c.even.size()));
    want = std::max(want, 64u);
    c.even = even_bernoulli(want);
  }
  return c.even[k];
}

}  // namespace cmperiods
