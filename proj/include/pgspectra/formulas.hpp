#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pgspectra/charpoly.hpp"
#include "pgspectra/roots.hpp"

namespace pgspectra {

/// Generator recipe for one cyclic subgroup of a structured family.
struct SubgroupRecipe {
    GroupElement generator;
    u64 order = 1;           // order the recipe claims
    unsigned divisor_class = 0; // index into CaseProfile::divisor_classes
};

/// Which divisor case split applies and how the divisors fall into it.
struct CaseProfile {
    std::string case_id;
    std::vector<std::pair<std::string, u64>> counters;
    std::vector<std::vector<u64>> divisor_classes;
};

struct FamilyEnumeration {
    GroupSpec group;
    CaseProfile profile;
    std::vector<SubgroupRecipe> subgroups;
};

/// Z_p x Z_n with p prime, p | n.
FamilyEnumeration enumerate_prime_family(u64 p, u64 n);
/// Z_pq x Z_n with p, q distinct primes, pq | n.
FamilyEnumeration enumerate_prime_pair_family(u64 p, u64 q, u64 n);
/// Z_{p^2} x Z_n with p^2 | n.
FamilyEnumeration enumerate_prime_square_family(u64 p, u64 n);
/// Z_{p^2} x Z_n with p | n but p^2 not dividing n.
FamilyEnumeration enumerate_prime_square_partial_family(u64 p, u64 n);

CyclicSubgroup materialize(const SubgroupRecipe& r, const GroupSpec& spec);

/// Multiplicity of the (1+x) factor extracted by the class partition.
/// `alpha` always satisfies alpha = m*n - (number of classes). For the
/// m = p^2, p^2 | n family, `variant_value` carries the alternative
/// weight ordering {p, p+1, p^2, p^2+p}, which disagrees with the class
/// counts and is reported for comparison only.
struct AlphaBreakdown {
    u64 alpha = 0;
    std::string formula;
    std::optional<long> variant_value;
};
AlphaBreakdown alpha_exponent(const GroupSpec& spec);

/// Exact value (a0 + a1 * sqrt(disc)) / den.
struct EigenvalueExpr {
    long a0 = 0;
    long a1 = 0;
    u64 disc = 0;
    long den = 1;

    bool is_integer() const { return a1 == 0 && a0 % den == 0; }
    double approx() const;
    std::string str() const;
};

struct FixedEigenvalue {
    EigenvalueExpr value;
    u64 multiplicity = 0;
};

/// Closed-form spectrum of one structured family: fixed eigenvalues with
/// multiplicities plus a residual polynomial carrying the remaining roots.
struct ClosedFormSpectrum {
    std::string family; // "p*pq" | "p2*p2" | "p2*pq"
    GroupSpec group;
    u64 p = 0, q = 0;
    std::vector<FixedEigenvalue> fixed;
    IntPoly residual_formula;
    std::vector<FixedEigenvalue> block_factors; // intermediate block eigenvalue pairs
    u64 total = 0;
};

/// Z_p x Z_pq, distinct primes.
ClosedFormSpectrum spectrum_p_pq(u64 p, u64 q);
/// Z_{p^2} x Z_{p^2}.
ClosedFormSpectrum spectrum_p2_p2(u64 p);
/// Z_{p^2} x Z_pq, distinct primes; residual from exact expansion of the
/// family's 6x6 determinant with rational-function entries.
ClosedFormSpectrum spectrum_p2_pq(u64 p, u64 q);

/// Checks a closed form against an exact characteristic polynomial:
/// every fixed eigenvalue must have exactly the claimed multiplicity, and
/// the leftover factor is compared to the closed form's residual
/// coefficient by coefficient. Mismatches are reported, never corrected.
struct ClosedFormValidation {
    bool fixed_ok = false;
    std::vector<std::string> notes;
    IntPoly residual_derived;
    bool residual_matches = false;
    std::vector<int> mismatched_coefficients;
};
ClosedFormValidation validate_closed_form(const ClosedFormSpectrum& cf, const IntPoly& oracle);

enum class Method { Auto, Direct, Quotient, Formula };

/// Route selection: invariant-factor normalization (gcd, lcm), closed-form
/// family detection, quotient factorization as the general path, raw dense
/// elimination on request.
struct DispatchResult {
    std::string method;
    GroupSpec given;
    GroupSpec normalized;
    IntPoly charpoly;
    u64 alpha = 0;
    std::optional<ClosedFormSpectrum> closed_form;
    std::optional<ClosedFormValidation> validation;
};
DispatchResult dispatch(const GroupSpec& spec, Method method = Method::Auto);

} // namespace pgspectra
