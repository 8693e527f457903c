#include "ses/census.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "ses/config.hpp"
#include "ses/constructions.hpp"

namespace ses {

namespace {

std::uint64_t exact_div(std::uint64_t a, std::uint64_t b, const char* what) {
    if (a % b != 0) throw Error(std::string(what) + ": non-integral value");
    return a / b;
}

}  // namespace

std::uint64_t N_closed(std::uint64_t p, unsigned n) {
    if (!is_prime_u64(p)) throw InvalidInput("N_closed: p not prime");
    switch (n) {
        case 1:
        case 2:
        case 3:
            return 1;
        case 4:
            return exact_div(p + 2 - std::gcd<std::uint64_t>(2, p), 2, "N_closed");
        case 5:
            return exact_div(p * p - 2 + std::gcd<std::uint64_t>(5, p) +
                                 2 * std::gcd<std::uint64_t>(5, p * p - 1),
                             5, "N_closed");
        default:
            throw UnsupportedDegree("N_closed: n must be 1..5");
    }
}

std::uint64_t I_indecomposable(std::uint64_t p, unsigned n) {
    if (n < 2 || n > 5) throw UnsupportedDegree("I_indecomposable: n must be 2..5");
    std::uint64_t total = 0;
    for (unsigned d = 1; d <= n; ++d)
        if (n % d == 0) total += N_closed(p, d);
    return total - 1;
}

std::uint64_t H_genus1(std::uint64_t, unsigned n_plus_1) {
    if (n_plus_1 < 3) throw UnsupportedDegree("H_genus1: n must be >= 2");
    unsigned n = n_plus_1 - 1;
    return n % 2 == 0 ? 1 : 0;
}

std::uint64_t classes_closed(std::uint64_t p, unsigned order_exponent) {
    if (!is_prime_u64(p)) throw InvalidInput("classes_closed: p not prime");
    switch (order_exponent) {
        case 6:
        case 8:
            return 1;
        case 10:
            return p + 3 - std::gcd<std::uint64_t>(2, p);
        case 12:
            return exact_div(11 * p * p - 5 * p - 22 +
                                 10 * std::gcd<std::uint64_t>(3, p - 2) +
                                 6 * std::gcd<std::uint64_t>(5, p) +
                                 12 * std::gcd<std::uint64_t>(5, p * p - 1),
                             30, "classes_closed");
        default:
            throw UnsupportedOrder("classes_closed: exponent must be 6, 8, 10 or 12");
    }
}

std::vector<AdmissibleMultiset> enumerate_admissible_multisets(const FieldSpec& F,
                                                               unsigned n) {
    // items (a, c), deg a >= 2, ordered non-decreasing by (deg a^c, a, c) to
    // enumerate each multiset once
    struct Item {
        PrimaryDecomposition pd;
        unsigned total;  // c * deg a
    };
    std::vector<Item> items;
    for (unsigned d = 2; d <= n; ++d)
        for (unsigned c = 1; c * d <= n; ++c)
            for (const auto& a : enumerate_monic_irreducibles(F, d))
                items.push_back({{a, c}, c * d});
    std::vector<AdmissibleMultiset> out;
    std::vector<PrimaryDecomposition> cur;
    auto rec = [&](auto&& self, unsigned rem, std::size_t min_idx) -> void {
        if (rem == 0) {
            out.push_back({cur});
            return;
        }
        for (std::size_t i = min_idx; i < items.size(); ++i) {
            if (items[i].total > rem) continue;
            cur.push_back(items[i].pd);
            self(self, rem - items[i].total, i);
            cur.pop_back();
        }
    };
    rec(rec, n, 0);
    return out;
}

ClassCountReport classes_bruteforce(std::uint64_t p, unsigned order_exponent) {
    if (order_exponent < 6 || order_exponent > 12 || order_exponent % 2 != 0)
        throw UnsupportedOrder("classes_bruteforce: exponent must be 6, 8, 10 or 12");
    unsigned n = order_exponent / 2 - 1;
    FieldSpec F = FieldSpec::prime(p);

    // surviving multisets as sorted ideal vectors, keyed by stratum
    std::vector<std::pair<std::vector<FormIdeal>, bool>> survivors;  // (state, indecomposable)
    for (const auto& ms : enumerate_admissible_multisets(F, n)) {
        std::optional<AltPencil> P;
        std::vector<FormIdeal> state;
        for (const auto& item : ms.items) {
            AltPencil cp = companion_pencil(item.base, item.exponent, F);
            P = P ? direct_sum(*P, cp) : cp;
            state.push_back(
                FormIdeal::from_poly(poly_pow(item.base, item.exponent, F), F));
        }
        if (centroid(*P).dim() > 1) continue;  // genus-1 duplicate
        std::sort(state.begin(), state.end());
        survivors.emplace_back(std::move(state), ms.items.size() == 1);
    }

    auto gens = group_generators(F, GroupKind::GL);
    std::set<std::vector<FormIdeal>> visited;
    std::uint64_t indecomp = 0, decomp = 0;
    for (const auto& [seed, single] : survivors) {
        if (visited.count(seed)) continue;
        (single ? indecomp : decomp) += 1;
        std::vector<std::vector<FormIdeal>> frontier{seed};
        visited.insert(seed);
        while (!frontier.empty()) {
            std::vector<std::vector<FormIdeal>> next;
            for (const auto& state : frontier)
                for (const auto& g : gens) {
                    std::vector<FormIdeal> y;
                    y.reserve(state.size());
                    for (const auto& f : state) y.push_back(act(f, g, F));
                    std::sort(y.begin(), y.end());
                    if (visited.insert(y).second) {
                        if (visited.size() > max_enum())
                            throw BoundExceeded("classes_bruteforce: orbit space over cap");
                        next.push_back(std::move(y));
                    }
                }
            frontier = std::move(next);
        }
    }

    std::uint64_t g1 = H_genus1(p * p, n + 1);
    ClassCountReport rep;
    rep.p = p;
    rep.order_exponent = order_exponent;
    rep.closed_form = classes_closed(p, order_exponent);
    rep.brute_force = indecomp + decomp + g1;
    rep.breakdown = {{"indecomposable genus-2", indecomp},
                     {"decomposable genus-2", decomp},
                     {"genus-1 over F_{p^2}", g1}};
    if (rep.brute_force != rep.closed_form)
        throw Error("classes_bruteforce: disagreement with the closed form");
    return rep;
}

std::uint64_t decomposable_pair_orbits(std::uint64_t p, const std::string& shape) {
    FieldSpec F = FieldSpec::prime(p);
    std::vector<std::vector<FormIdeal>> seeds;
    if (shape == "quad+quad") {
        if (p == 2)
            throw InvalidInput("decomposable_pair_orbits: quad+quad needs p odd");
        auto quads = enumerate_form_family(F, 2, FormFamily::Irreducible);
        for (std::size_t i = 0; i < quads.size(); ++i)
            for (std::size_t j = i + 1; j < quads.size(); ++j)
                seeds.push_back({quads[i], quads[j]});
    } else if (shape == "quad+cubic") {
        auto quads = enumerate_form_family(F, 2, FormFamily::Irreducible);
        auto cubics = enumerate_form_family(F, 3, FormFamily::Irreducible);
        for (const auto& q : quads)
            for (const auto& c : cubics) seeds.push_back({q, c});
    } else {
        throw InvalidInput("decomposable_pair_orbits: unknown shape");
    }
    for (auto& s : seeds) std::sort(s.begin(), s.end());
    auto gens = group_generators(F, GroupKind::GL);
    std::set<std::vector<FormIdeal>> visited;
    std::uint64_t orbits = 0;
    for (const auto& seed : seeds) {
        if (visited.count(seed)) continue;
        ++orbits;
        std::vector<std::vector<FormIdeal>> frontier{seed};
        visited.insert(seed);
        while (!frontier.empty()) {
            std::vector<std::vector<FormIdeal>> next;
            for (const auto& state : frontier)
                for (const auto& g : gens) {
                    std::vector<FormIdeal> y;
                    for (const auto& f : state) y.push_back(act(f, g, F));
                    std::sort(y.begin(), y.end());
                    if (visited.insert(y).second) {
                        if (visited.size() > max_enum())
                            throw BoundExceeded("decomposable_pair_orbits: over cap");
                        next.push_back(std::move(y));
                    }
                }
            frontier = std::move(next);
        }
    }
    return orbits;
}

std::uint64_t decomposable_pair_closed(std::uint64_t p, const std::string& shape) {
    if (shape == "quad+quad") {
        if (p == 2)
            throw InvalidInput("decomposable_pair_closed: quad+quad needs p odd");
        return (p - 1) / 2;
    }
    if (shape == "quad+cubic")
        return exact_div(p * p - p + (p % 3 == 2 ? 4 : 0), 6,
                         "decomposable_pair_closed");
    throw InvalidInput("decomposable_pair_closed: unknown shape");
}

}  // namespace ses
