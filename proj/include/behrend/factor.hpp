#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "behrend/polynomial.hpp"

namespace behrend {

/// a / b when b divides a exactly.
std::optional<Polynomial> exact_divide(const Polynomial& a, const Polynomial& b);

/// Monic gcd. Euclid for univariate input, lcm via ideal intersection otherwise.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

/// Rational roots of a polynomial in the single variable `var`.
std::vector<mpq_class> rational_roots(const Polynomial& f, std::size_t var);

/// A proper nonconstant factor found by cheap means (variable powers,
/// contents, repeated factors, rational roots of univariate and binary
/// forms); nullopt when none of them applies.
std::optional<Polynomial> find_factor(const Polynomial& f);

enum class Irreducibility { Irreducible, Reducible, Unknown };

/// Irreducibility over Q of a polynomial in one variable, using rational
/// roots and mod-p factor degree patterns.
Irreducibility univariate_irreducibility(const Polynomial& f, std::size_t var);

/// Certifies irreducibility over Q by restricting to lines on which the
/// top-degree form does not vanish; Unknown when no restriction is provably
/// irreducible.
Irreducibility irreducibility(const Polynomial& f, int attempts = 12);

/// Factor degrees of a squarefree monic polynomial over F_p (coefficients
/// low to high); the distinct-degree factorisation.
std::vector<int> factor_degrees_mod_p(std::vector<std::uint64_t> f, std::uint64_t p);

}  // namespace behrend
