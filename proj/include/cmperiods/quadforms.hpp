#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cmperiods/numkernel.hpp"

namespace cmperiods {

/// A value d > 0 such that -d is a fundamental discriminant.
class Discriminant {
 public:
  /// Throws DomainError unless -d is fundamental.
  static Discriminant make(long d);
  static bool is_fundamental(long d);

  long d() const noexcept { return d_; }
  /// Number of units: 6 for d = 3, 4 for d = 4, otherwise 2.
  int w() const noexcept { return w_; }
  /// d = p prime, p = 3 (mod 4), p > 3.
  bool is_prime_3mod4() const noexcept { return prime_3mod4_; }

  friend bool operator==(const Discriminant&, const Discriminant&) = default;

 private:
  explicit Discriminant(long d);
  long d_;
  int w_;
  bool prime_3mod4_;
};

/// All fundamental d with lo <= d <= hi, increasing.
std::vector<Discriminant> fundamental_discriminants(long lo, long hi);

/// The integral binary form a x^2 + b xy + c y^2.
struct QuadForm {
  long a = 1;
  long b = 0;
  long c = 0;

  /// b^2 - 4ac (negative for the forms used here).
  long discriminant() const { return b * b - 4 * a * c; }
  bool is_reduced() const;
  /// The form with b negated: the conjugate ideal / inverse class.
  QuadForm mirrored() const { return {a, -b, c}; }
  std::string to_string() const;

  friend bool operator==(const QuadForm&, const QuadForm&) = default;
  friend auto operator<=>(const QuadForm&, const QuadForm&) = default;
};

/// 2x2 integer substitution matrix [[m00, m01], [m10, m11]].
struct Substitution {
  long m00 = 1, m01 = 0, m10 = 0, m11 = 1;
};

struct ReductionResult {
  QuadForm form;
  /// form(v) = original(sub * v), det(sub) = 1.
  Substitution sub;
};

QuadForm reduce(const QuadForm& f);
ReductionResult reduce_with_substitution(const QuadForm& f);

QuadForm principal_form(const Discriminant& disc);

/// Reduced forms of discriminant -d: the ideal classes.
struct ClassGroup {
  Discriminant disc;
  /// Principal form first, the rest ascending by (a, b).
  std::vector<QuadForm> forms;

  std::size_t h() const noexcept { return forms.size(); }
  /// Position of a reduced form; throws DomainError if absent.
  std::size_t index_of(const QuadForm& reduced) const;
};

ClassGroup reduced_forms(const Discriminant& disc);

/// The quadratic character of Q(sqrt(-d)): the Kronecker symbol (-d | a).
int kronecker_epsilon(long a, const Discriminant& disc);

/// -(w/2) * sum_{0<a<d} eps(a) a/d as an exact rational. Throws
/// ConsistencyError unless the result is a positive integer.
mpq_class class_number_dirichlet(const Discriminant& disc);

/// Gauss/Dirichlet composition before reduction. The product of the two
/// ideals equals `scale` times the ideal of `form`.
struct Composition {
  QuadForm form;
  long scale = 1;
};

Composition compose_unreduced(const QuadForm& f, const QuadForm& g);
/// Reduced representative of the product class.
QuadForm compose(const QuadForm& f, const QuadForm& g);
/// Reduced representative of the n-th power class (n >= 0).
QuadForm power(const QuadForm& f, long n);
/// Reduced representative of the inverse class.
QuadForm inverse(const QuadForm& f);

/// (x + y sqrt(-d)) / 2 with x = y d (mod 2).
struct QuadInteger {
  long x = 0;
  long y = 0;

  friend bool operator==(const QuadInteger&, const QuadInteger&) = default;
  friend auto operator<=>(const QuadInteger&, const QuadInteger&) = default;
};

/// (x^2 + d y^2) / 4, exact.
mpz_class norm(const QuadInteger& z, const Discriminant& disc);
QuadInteger multiply(const QuadInteger& u, const QuadInteger& v,
                     const Discriminant& disc);
/// The units of the order (+-1, and i or the sixth roots for d = 4, 3).
std::vector<QuadInteger> units(const Discriminant& disc);

/// Whether z lies in the ideal Z a + Z (-b + sqrt(-d))/2 of a primitive form.
bool ideal_contains(const QuadForm& ideal, const QuadInteger& z);

/// Every solution of x^2 + d y^2 = 4N (all signs and unit multiples),
/// sorted. Primitive solutions come from the square roots of -d mod 4N via
/// reduction of the form (N, t, *); imprimitive ones by scaling.
std::vector<QuadInteger> norm_equation_solutions(const Discriminant& disc,
                                                 long n);

/// One solution of x^2 + d y^2 = 4N with x, y >= 0 and y minimal, or none.
std::optional<QuadInteger> cornacchia(const Discriminant& disc, long n);

/// Lattice a * (Z + Z tau), tau = (-b + i sqrt d) / (2a): the ideal of f.
Lattice form_to_lattice(const QuadForm& f, const PrecisionContext& ctx);

/// Lattice of the inverse ideal, conj(a) / N(a) = Z + Z (b + i sqrt d)/(2a).
Lattice inverse_ideal_lattice(const QuadForm& f, const PrecisionContext& ctx);

}  // namespace cmperiods
