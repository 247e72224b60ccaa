#pragma once

// Counting formulas for the fixed-point and cycle families of even bases.

#include <map>

#include "kaprekar/classifier.hpp"
#include "kaprekar/core.hpp"

namespace kaprekar {

/// Symmetric fixed points with uniform interior; zero for odd n.
Count count_symmetric_fp(int b, Count n);

/// Almost-symmetric fixed points with uniform interior, by the m-sums.
Count count_almost_symmetric_fp(int b, Count n);

/// Closed form of symmetric + almost-symmetric fixed points for even n in
/// bases 4, 6, 8.
Count count_sa_fp(int b, Count n);

/// Ordered C-tuples of positive integers summing to omega.
Count n_gamma_tilde(Count C, Count omega);

/// Rotation classes of positive C-tuples summing to omega, the constant
/// class excluded.
Count n_gamma(Count C, Count omega);

/// Sum of n_gamma(C, omega) over 1 <= omega < eta.
Count n_k_gamma(Count C, Count eta);

/// [Almost-]symmetric cycle counts; require a base with one i-cycle.
Count count_symmetric_cycles(int b, Count n);
Count count_almost_symmetric_cycles(int b, Count n);
Count count_sac_cycles(int b, Count n);

/// Closed forms for even n in bases 6 and 8 (zero in base 4).
Count count_sac_cycles_closed_form(int b, Count n);

/// Zero-free fixed points. Base 4: triads. Base 6: uniform, triad and other.
/// Base 8: uniform together with class (a) (triads and class (b) excluded).
Count count_zero_free(int b, Count n);

/// Base-8 zero-free fixed points of class (b).
Count count_zero_free_class_b(Count n);

/// Non-symmetric sigma-cycles, bases 6 and 8.
Count count_nonsym_sigma(int b, Count n);

/// All fixed points in base 4, piecewise in n mod 6.
Count count_total_fixed_points_base4(Count n);

using ClassCounts = std::map<ClassTag, Count>;

/// Expected count of every class at digit-count n, b in {4, 6, 8}.
/// Classes with zero count are omitted.
ClassCounts count_catalogue(int b, Count n);

}  // namespace kaprekar
