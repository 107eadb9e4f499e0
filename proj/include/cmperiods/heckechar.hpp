#pragma once

#include "cmperiods/quadforms.hpp"

namespace cmperiods {

/// The generator of a^h (a the ideal of the primitive form f, h the class
/// number) whose image x/2 mod p is a nonzero square. Needs d = p prime,
/// p = 3 mod 4, p > 3, and p not dividing f.a.
QuadInteger psi_M(const QuadForm& f, const Discriminant& p);

/// Whether +-beta is the representative that is a square modulo sqrt(-p).
bool is_square_mod_root(const QuadInteger& beta, long p);

/// psi_M(f) psi_M(g) == psi_M(e D) where f g = e D is the composition of the
/// two ideals (D primitive); psi_M of the principal ideal (e) is eps(e) e^h.
bool psi_multiplicativity_check(const Discriminant& p, const QuadForm& f,
                                const QuadForm& g);

}  // namespace cmperiods
