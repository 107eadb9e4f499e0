#pragma once

namespace oracle {

template <typename F>
BigReal tanh_sinh(F f, const BigReal& lo, const BigReal& hi, int levels) {
  const mpfr_prec_t prec = lo.precision();
  const BigReal half_pi = pi(prec) / 2;
  const BigReal mid = (lo + hi) / 2;
  const BigReal rad = (hi - lo) / 2;
  BigReal h = BigReal::from_int(1, prec);
  auto node_sum = [&](const BigReal& step, bool odd_only) {
    BigReal sum(prec);
    const BigReal tiny = cmperiods::pow10(-(static_cast<long>(prec) * 3 / 10 + 5), prec);
    for (long k = odd_only ? 1 : 0;; k += odd_only ? 2 : 1) {
      const BigReal t = step * k;
      const BigReal sh = (exp(t) - exp(-t)) / 2;
      const BigReal ch = (exp(t) + exp(-t)) / 2;
      const BigReal u = half_pi * sh;
      const BigReal eu = exp(u), emu = exp(-u);
      const BigReal x = (eu - emu) / (eu + emu);
      const BigReal cu = (eu + emu) / 2;
      const BigReal w = half_pi * ch / (cu * cu);
      if (w < tiny) break;
      const BigReal xr = rad * x;
      BigReal term = f(mid + xr) * w;
      if (k != 0) term += f(mid - xr) * w;
      sum += term;
    }
    return sum;
  };
  BigReal total = node_sum(h, false);
  for (int level = 1; level <= levels; ++level) {
    h /= 2;
    total += node_sum(h, true);
  }
  return total * h * rad;
}

}  // namespace oracle
