#pragma once

#include <gmpxx.h>

#include <vector>

#include "pgspectra/intpoly.hpp"
#include "pgspectra/numtheory.hpp"

namespace pgspectra {

/// One real root with an exact bracketing interval.
/// `lower == upper` (and `exact`) for roots recognised as rational.
struct RealRoot {
    mpq_class lower, upper;
    bool exact = false;
    unsigned multiplicity = 1;
    double approx = 0.0;

    mpq_class midpoint() const { return exact ? lower : mpq_class((lower + upper) / 2); }
};

/// All real roots with multiplicities (square-free decomposition, Sturm
/// isolation, bisection to the given absolute half-width). Ascending order.
/// Throws std::invalid_argument on the zero polynomial.
std::vector<RealRoot> real_roots(const IntPoly& f, const mpq_class& tol);
std::vector<RealRoot> real_roots(const IntPoly& f); // tol = 1e-12

/// Square-free factor, its multiplicity in the source polynomial, and its
/// real roots (each tagged with the same multiplicity).
struct SpectrumEntry {
    IntPoly factor;
    unsigned multiplicity = 1;
    std::vector<RealRoot> roots;
};

/// Factor-by-factor real spectrum of a characteristic polynomial.
/// product of factor^multiplicity equals the input; total = its degree.
struct SpectrumReport {
    std::vector<SpectrumEntry> entries;
    u64 total = 0;

    u64 root_multiplicity_sum() const;
};

SpectrumReport spectrum_report(const IntPoly& charpoly);

} // namespace pgspectra
