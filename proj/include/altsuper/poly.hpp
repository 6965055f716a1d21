#pragma once

#include <utility>
#include <vector>

#include "altsuper/field.hpp"

namespace altsuper {

Poly poly_from(const FieldPtr& F, std::vector<Scalar> coeffs);
Poly poly_zero();
Poly poly_one(const FieldPtr& F);
Poly poly_x(const FieldPtr& F);
Poly poly_const(const FieldPtr& F, const Scalar& a);
Poly poly_monomial(const FieldPtr& F, const Scalar& a, int deg);

Poly poly_add(const FieldPtr& F, const Poly& a, const Poly& b);
Poly poly_sub(const FieldPtr& F, const Poly& a, const Poly& b);
Poly poly_neg(const FieldPtr& F, const Poly& a);
Poly poly_mul(const FieldPtr& F, const Poly& a, const Poly& b);
Poly poly_scale(const FieldPtr& F, const Scalar& s, const Poly& a);
/// Quotient and remainder; divisor must be nonzero.
std::pair<Poly, Poly> poly_divmod(const FieldPtr& F, const Poly& a, const Poly& b);
Poly poly_mod(const FieldPtr& F, const Poly& a, const Poly& b);
/// Monic gcd (zero polynomial if both inputs are zero).
Poly poly_gcd(const FieldPtr& F, const Poly& a, const Poly& b);
/// g = gcd, plus s,t with s*a + t*b = g.
struct PolyXgcd { Poly g, s, t; };
PolyXgcd poly_xgcd(const FieldPtr& F, const Poly& a, const Poly& b);
Poly poly_derivative(const FieldPtr& F, const Poly& a);
Scalar poly_eval(const FieldPtr& F, const Poly& a, const Scalar& x);
Poly poly_monic(const FieldPtr& F, const Poly& a);
/// a(x)^e mod m(x).
Poly poly_powmod(const FieldPtr& F, const Poly& a, const mpz_class& e, const Poly& m);
/// Substitute x -> g(x).
Poly poly_compose(const FieldPtr& F, const Poly& a, const Poly& g);
std::string poly_str(const FieldPtr& F, const Poly& a, const std::string& var);
int poly_cmp(const FieldPtr& F, const Poly& a, const Poly& b);

struct PolyFactor {
    Poly factor;  // monic irreducible
    int multiplicity;
};

/// Factors a nonzero polynomial into monic irreducibles times the returned
/// unit (the leading content). Deterministic ordering: by degree, then by the
/// field's coefficient order. Supported coefficient fields: any finite field,
/// Q, and simple extensions of Q.
struct Factorization {
    Scalar unit;
    std::vector<PolyFactor> factors;
};
Factorization poly_factor(const FieldPtr& F, const Poly& f);

bool poly_is_irreducible(const FieldPtr& F, const Poly& f);
/// Roots of f in F, each listed once, in the field's deterministic order.
std::vector<Scalar> poly_roots(const FieldPtr& F, const Poly& f);

/// Resultant of two nonzero polynomials (Sylvester determinant).
Scalar poly_resultant(const FieldPtr& F, const Poly& a, const Poly& b);

}  // namespace altsuper
