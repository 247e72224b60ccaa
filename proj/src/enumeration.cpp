#include "kaprekar/enumeration.hpp"

#include <numeric>

#include "kaprekar/sigma.hpp"

namespace kaprekar {

namespace {

Count floor_div(Count a, Count d) {
  Count q = a / d;
  if ((a % d != 0) && ((a < 0) != (d < 0))) --q;
  return q;
}

void require_even_base(int b) {
  if (b < 4 || b % 2 != 0) throw DomainError("formula needs an even base >= 4, got " + std::to_string(b));
}

void require_catalogued(int b) {
  if (b != 4 && b != 6 && b != 8) {
    throw UnsupportedBaseError("closed forms exist for bases 4, 6 and 8, not " + std::to_string(b));
  }
}

Count binomial(Count n, Count k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Count result = 1;
  for (Count i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

Count euler_phi(Count n) {
  Count result = n;
  for (Count p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

void require_single_i_cycle(int b) {
  require_even_base(b);
  const Count C = (b - 2) / 2;
  if (sigma(b - 1) != C) {
    throw UnsupportedBaseError("base " + std::to_string(b) + " has more than one i-cycle");
  }
}

}  // namespace

Count count_symmetric_fp(int b, Count n) {
  require_even_base(b);
  if (n % 2 != 0 || n < 2) return 0;
  return floor_div(n - 2, b - 2);
}

Count count_almost_symmetric_fp(int b, Count n) {
  require_even_base(b);
  Count total = 0;
  if (n % 2 != 0) {
    for (Count m = 1; m <= floor_div(n - 1, 2 * (b - 1)); ++m) {
      total += floor_div(n - 2 * (b - 1) * m + b - 3, b - 2);
    }
  } else {
    for (Count m = 1; m <= floor_div(n - b, 2 * (b - 1)); ++m) {
      total += floor_div(n - 2 * (b - 1) * m - 2, b - 2);
    }
  }
  return total;
}

Count count_sa_fp(int b, Count n) {
  require_catalogued(b);
  if (n % 2 != 0) throw DomainError("closed form covers even n only");
  switch (b) {
    case 4: return floor_div(n * (n + 2), 24);
    case 6: return floor_div((n + 2) * (n + 2) + 16, 80);
    default: return floor_div(n * (n + 6) + 56, 168);
  }
}

Count n_gamma_tilde(Count C, Count omega) {
  if (C < 1) throw DomainError("C must be positive");
  if (omega < 1) return 0;
  return binomial(omega - 1, C - 1);
}

Count n_gamma(Count C, Count omega) {
  if (C < 1) throw DomainError("C must be positive");
  if (omega < C) return 0;
  // Burnside: phi(d) rotations fix exactly the tuples made of d copies of a
  // (C/d)-tuple, and those exist only when d divides omega.
  const Count g = std::gcd(C, omega);
  Count orbits = 0;
  for (Count d = 1; d <= g; ++d) {
    if (g % d != 0) continue;
    orbits += euler_phi(d) * binomial(omega / d - 1, C / d - 1);
  }
  orbits /= C;
  if (omega % C == 0) --orbits;
  return orbits;
}

Count n_k_gamma(Count C, Count eta) {
  Count total = 0;
  for (Count omega = 1; omega < eta; ++omega) total += n_gamma(C, omega);
  return total;
}

Count count_symmetric_cycles(int b, Count n) {
  require_single_i_cycle(b);
  if (n % 2 != 0) return 0;
  return n_k_gamma((b - 2) / 2, n / 2);
}

Count count_almost_symmetric_cycles(int b, Count n) {
  require_single_i_cycle(b);
  const Count B = b - 1;
  const Count C = (b - 2) / 2;
  Count total = 0;
  if (n % 2 != 0) {
    for (Count m = 1; m <= floor_div(n - 3, 2 * (b - 1)); ++m) total += n_k_gamma(C, (n - 2 * B * m + B) / 2);
  } else {
    for (Count m = 1; m <= floor_div(n - b - 2, 2 * (b - 1)); ++m) total += n_k_gamma(C, (n - 2 * B * m) / 2);
  }
  return total;
}

Count count_sac_cycles(int b, Count n) {
  return count_symmetric_cycles(b, n) + count_almost_symmetric_cycles(b, n);
}

Count count_sac_cycles_closed_form(int b, Count n) {
  require_catalogued(b);
  if (n % 2 != 0) throw DomainError("closed form covers even n only");
  switch (b) {
    case 4: return 0;
    case 6: return std::max<Count>(0, floor_div(n * (n - 4) * (n + 7) + 96, 480));
    default: return std::max<Count>(0, floor_div(n * (n + 6) * (n * n + 6 * n - 104) + 3456, 8064));
  }
}

Count count_zero_free(int b, Count n) {
  require_catalogued(b);
  if (n < 1) return 0;
  switch (b) {
    case 4: return n % 3 == 0 ? 1 : 0;
    case 6: {
      const Count r = n % 15;
      const bool q0 = r == 1 || r == 2 || r == 4 || r == 7;
      return n / 15 + (q0 ? 0 : 1);
    }
    default: {
      static constexpr int kNoExtra[] = {0, 1, 2, 3, 4, 5, 6, 8, 9, 10, 11, 13, 15, 16, 18, 20, 23, 25, 30};
      const Count r = n % 35;
      bool q0 = false;
      for (int x : kNoExtra) q0 = q0 || r == x;
      return n / 35 + (q0 ? 0 : 1);
    }
  }
}

Count count_zero_free_class_b(Count n) {
  return n % 7 == 0 && n >= 14 ? n / 7 - 1 : 0;
}

Count count_nonsym_sigma(int b, Count n) {
  if (b != 6 && b != 8) throw UnsupportedBaseError("non-symmetric sigma-cycle counts exist for bases 6 and 8");
  if (n % 2 != 0) return 0;
  if (b == 6) return n_gamma(2, (n - 2) / 2);
  return std::max<Count>(0, floor_div((n - 2) * (n - 4), 24));
}

Count count_total_fixed_points_base4(Count n) {
  if (n < 2) throw DomainError("n must be at least 2");
  switch (n % 6) {
    case 0: return (n - 2) / 2 + (n - 6) * (n - 4) / 24 + 1;
    case 1: return (n - 1) * (n - 3) / 24;
    case 2: return (n - 2) / 2 + (n - 8) * (n - 2) / 24;
    case 3: return (n - 3) * (n - 1) / 24 + 1;
    case 4: return (n - 2) / 2 + (n - 4) * (n - 6) / 24;
    default: return (n - 5) * (n + 1) / 24;
  }
}

namespace {

Count special_cycle_count(int b, Count n) {
  switch (b) {
    case 4: return n == 2 || n == 4 || n == 5 || n == 8 ? 1 : 0;
    case 6: return n == 2 || n == 4 || n == 5 || n == 6 || n == 8 ? 1 : 0;
    default:
      switch (n) {
        case 4: return 1;
        case 5: return 2;
        case 7: return 2;
        case 9: return 3;
        case 11: return 1;
        case 12: return 1;
        default: return 0;
      }
  }
}

Count single_parameter_cycle_count(int b, Count n) {
  switch (b) {
    case 4: return n % 3 == 2 && n >= 11 ? 1 : 0;
    case 6: return n % 2 == 1 && n >= 7 ? 1 : 0;
    default: {
      Count total = 0;
      if (n % 2 == 0 && n >= 4) total += 1;
      if (n % 5 == 2 && n >= 12) total += 1;
      if (n % 7 == 1 && n >= 15) total += 1;
      if (n % 7 == 3 && n >= 17) total += 1;
      if (n % 7 == 4 && n >= 11) total += 2;
      if (n % 7 == 6 && n >= 13) total += 2;
      return total;
    }
  }
}

}  // namespace

ClassCounts count_catalogue(int b, Count n) {
  require_catalogued(b);
  ClassCounts counts;
  auto put = [&](ClassTag tag, Count value) {
    if (value > 0) counts[tag] += value;
  };

  const Count triad = n % 3 == 0 ? 1 : 0;
  const Count uniform = b >= 6 && n % (b - 1) == 0 ? 1 : 0;
  put(ClassTag::SymmetricFP, count_symmetric_fp(b, n));
  put(ClassTag::AlmostSymmetricFP, count_almost_symmetric_fp(b, n));
  put(ClassTag::TriadFP, triad);
  put(ClassTag::UniformZeroFreeFP, uniform);
  if (b == 6) put(ClassTag::OtherZeroFreeFP, count_zero_free(6, n) - triad - uniform);
  if (b == 8) put(ClassTag::OtherZeroFreeFP, count_zero_free(8, n) - uniform + count_zero_free_class_b(n));
  if (b == 6 && n % 4 == 2 && n >= 6) put(ClassTag::SingleParameterFP, 1);
  if (b == 8 && n % 6 == 0) put(ClassTag::SingleParameterFP, 1);
  if (b == 8 && n == 2) put(ClassTag::SpecialFP, 1);

  put(ClassTag::SymmetricCycle, count_symmetric_cycles(b, n));
  put(ClassTag::AlmostSymmetricCycle, count_almost_symmetric_cycles(b, n));
  if (b != 4) put(ClassTag::NonSymmetricSigmaCycle, count_nonsym_sigma(b, n));
  put(ClassTag::SingleParameterCycle, single_parameter_cycle_count(b, n));
  put(ClassTag::SpecialCycle, special_cycle_count(b, n));
  return counts;
}

}  // namespace kaprekar
