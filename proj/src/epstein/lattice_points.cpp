#include <cmath>

#include "cmperiods/epstein.hpp"
#include "cmperiods/errors.hpp"

namespace cmperiods {

std::vector<FormValue> form_values(const QuadForm& f, long max_q) {
  const long d = -f.discriminant();
  if (f.a <= 0 || d <= 0) {
    throw DomainError("form_values needs a positive definite form");
  }
  if (max_q < 0 || max_q > 50'000'000) {
    throw DomainError("form_values: bound out of range");
  }
  std::vector<long> counts(static_cast<std::size_t>(max_q) + 1, 0);
  using i128 = __int128;
  auto value = [&](long x, long y) {
    return static_cast<i128>(f.a) * x * x + static_cast<i128>(f.b) * x * y +
           static_cast<i128>(f.c) * y * y;
  };
  // 4a Q = (2ax + by)^2 + d y^2, so |y| <= sqrt(4 a max_q / d).
  const long y_max =
      static_cast<long>(std::sqrt(4.0 * f.a * static_cast<double>(max_q) / d)) + 1;
  for (long y = -y_max; y <= y_max; ++y) {
    const double room = 4.0 * f.a * static_cast<double>(max_q) -
                        static_cast<double>(d) * y * y;
    if (room < 0) continue;
    const double centre = -static_cast<double>(f.b) * y / (2.0 * f.a);
    const double half = std::sqrt(room) / (2.0 * f.a);
    const long lo = static_cast<long>(std::floor(centre - half)) - 1;
    const long hi = static_cast<long>(std::ceil(centre + half)) + 1;
    for (long x = lo; x <= hi; ++x) {
      if (x == 0 && y == 0) continue;
      const i128 q = value(x, y);
      if (q <= max_q) ++counts[static_cast<std::size_t>(q)];
    }
  }
  std::vector<FormValue> out;
  for (long q = 1; q <= max_q; ++q) {
    if (counts[static_cast<std::size_t>(q)] != 0) {
      out.push_back({q, counts[static_cast<std::size_t>(q)]});
    }
  }
  return out;
}

BigReal epstein_truncated(const QuadForm& f, const BigReal& s, long max_q,
                          const PrecisionContext& ctx) {
  const mpfr_prec_t prec = ctx.bits();
  BigReal sum(prec);
  for (const FormValue& v : form_values(f, max_q)) {
    sum += pow(BigReal::from_int(v.q, prec), -s) * v.count;
  }
  return sum;
}

}  // namespace cmperiods
