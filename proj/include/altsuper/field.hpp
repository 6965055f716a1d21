#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace altsuper {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// A field element in canonical form. The representation is interpreted by
/// the owning Field: a least nonnegative residue for GF(p), a reduced
/// fraction for Q, and a fixed-length coefficient vector (degree below the
/// minimal polynomial) for a simple extension. Canonical forms make
/// structural equality coincide with field equality.
class Scalar {
public:
    using Ext = std::vector<Scalar>;

    Scalar() : rep_(static_cast<long long>(0)) {}
    explicit Scalar(long long r) : rep_(r) {}
    explicit Scalar(mpq_class q) : rep_(std::move(q)) {}
    explicit Scalar(Ext coords) : rep_(std::move(coords)) {}

    bool operator==(const Scalar& o) const { return rep_ == o.rep_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    long long residue() const { return std::get<long long>(rep_); }
    const mpq_class& rational() const { return std::get<mpq_class>(rep_); }
    const Ext& coords() const { return std::get<Ext>(rep_); }

    bool holds_residue() const { return std::holds_alternative<long long>(rep_); }
    bool holds_rational() const { return std::holds_alternative<mpq_class>(rep_); }
    bool holds_coords() const { return std::holds_alternative<Ext>(rep_); }

private:
    std::variant<long long, mpq_class, Ext> rep_;
};

/// Univariate polynomial as a normalized coefficient list (no trailing
/// zeros; empty list is the zero polynomial). Arithmetic lives in poly.hpp
/// and is parameterized by the coefficient field.
struct Poly {
    std::vector<Scalar> c;

    bool is_zero() const { return c.empty(); }
    /// Degree; -1 is the sentinel for the zero polynomial.
    int degree() const { return static_cast<int>(c.size()) - 1; }
    const Scalar& operator[](size_t i) const { return c[i]; }
    bool operator==(const Poly& o) const { return c == o.c; }
};

/// An exact coefficient field: GF(p), Q, or a simple algebraic extension of
/// another Field by a monic irreducible polynomial. Immutable; handles are
/// shared_ptr<const Field> and safe to use concurrently.
class Field : public std::enable_shared_from_this<Field> {
public:
    enum class Kind { Prime, Rational, Extension };

    static FieldPtr prime(long long p);
    static FieldPtr rationals();
    /// Builds base[gen]/(minpoly). Verifies that minpoly is monic, of degree
    /// >= 1, and irreducible over base (via poly_factor).
    static FieldPtr extension(FieldPtr base, Poly minpoly, std::string gen);
    /// Parses the textual FieldSpec form: "GF(7)", "Q", "Q[w]/(w^2+w+1)",
    /// "GF(3)[a]/(a^2+1)". Extensions may be chained.
    static FieldPtr parse_spec(const std::string& text);

    Kind kind() const { return kind_; }
    long long characteristic() const { return char_; }
    bool finite() const;
    /// Number of elements when finite.
    mpz_class order() const;
    int ext_degree() const { return static_cast<int>(minpoly_.c.size()) - 1; }
    const Poly& minpoly() const { return minpoly_; }
    const FieldPtr& base() const { return base_; }
    const std::string& generator() const { return gen_; }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long long n) const;
    Scalar from_fraction(long long num, long long den) const;
    /// The adjoined generator as an element (Extension only).
    Scalar gen_element() const;
    /// Embeds a base-field element into this extension.
    Scalar embed(const Scalar& base_elem) const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;
    Scalar pow(const Scalar& a, const mpz_class& e) const;
    bool is_zero(const Scalar& a) const { return a == zero(); }
    bool is_one(const Scalar& a) const { return a == one(); }
    bool eq(const Scalar& a, const Scalar& b) const { return a == b; }
    /// Deterministic total order used for canonical choices (factor ordering,
    /// witness selection). Returns <0, 0, >0.
    int cmp(const Scalar& a, const Scalar& b) const;

    /// All elements, in a fixed deterministic order. Throws for infinite
    /// fields; callers that need enumeration must gate on finite().
    std::vector<Scalar> enumerate() const;

    std::string str(const Scalar& a) const;
    Scalar parse(const std::string& text) const;
    /// Canonical FieldSpec text; parse_spec(spec()) reproduces this field.
    std::string spec() const;
    bool same(const Field& other) const { return spec() == other.spec(); }
    bool same(const FieldPtr& other) const { return other && same(*other); }

private:
    Field() = default;

    Kind kind_ = Kind::Rational;
    long long char_ = 0;
    long long p_ = 0;           // Prime only
    FieldPtr base_;             // Extension only
    Poly minpoly_;              // Extension only (monic)
    std::string gen_;           // Extension only
};

}  // namespace altsuper
