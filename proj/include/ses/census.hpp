#pragma once

#include <string>

#include "ses/moebius.hpp"

namespace ses {

/// Closed form for the GammaL(2,p)-orbit count on irreducible degree-n
/// ideals, n in 1..5.
std::uint64_t N_closed(std::uint64_t p, unsigned n);

/// I(q, 2n+2) = -1 + sum_{d|n} N(q, d), the count of centrally
/// indecomposable classes of order q^(2n+2); closed form, so n in 2..5.
std::uint64_t I_indecomposable(std::uint64_t p, unsigned n);

/// Genus-1 count over F_q of order q^(n+1): 1 iff n is even.
std::uint64_t H_genus1(std::uint64_t q, unsigned n_plus_1);

/// Total isoclinism-class counts in closed form, order p^e for
/// e in {6, 8, 10, 12}.
std::uint64_t classes_closed(std::uint64_t p, unsigned order_exponent);

struct StratumCount {
    std::string label;
    std::uint64_t count = 0;
};

struct ClassCountReport {
    std::uint64_t p = 0;
    unsigned order_exponent = 0;
    std::uint64_t closed_form = 0;
    std::uint64_t brute_force = 0;
    std::vector<StratumCount> breakdown;
};

/// Multiset of primary polynomials with base degree >= 2, total degree n:
/// the Pfaffian data of a fully refined central decomposition.
struct AdmissibleMultiset {
    std::vector<PrimaryDecomposition> items;
};

std::vector<AdmissibleMultiset> enumerate_admissible_multisets(const FieldSpec& F,
                                                               unsigned n);

/// Independent enumeration: builds the companion-pencil direct sum of every
/// admissible multiset, filters out the ones whose centroid grows past F_p
/// (genus-1 duplicates), and counts GL(2,p)-orbits of the survivors.
/// Disagreement with the closed form is a hard error.
ClassCountReport classes_bruteforce(std::uint64_t p, unsigned order_exponent);

/// Orbit count of unordered pairs: two distinct irreducible quadratic
/// ideals ("quad+quad", p odd) or a quadratic and a cubic ("quad+cubic").
std::uint64_t decomposable_pair_orbits(std::uint64_t p, const std::string& shape);

/// Closed forms for the same pair counts: (p-1)/2, and (p^2-p)/6 plus 4/6
/// exactly when p = 2 mod 3.
std::uint64_t decomposable_pair_closed(std::uint64_t p, const std::string& shape);

}  // namespace ses
