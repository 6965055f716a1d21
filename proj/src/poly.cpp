#include "altsuper/poly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "altsuper/linalg.hpp"

namespace altsuper {

namespace {

void normalize(const FieldPtr& F, Poly& p) {
    while (!p.c.empty() && F->is_zero(p.c.back())) p.c.pop_back();
}

}  // namespace

Poly poly_from(const FieldPtr& F, std::vector<Scalar> coeffs) {
    Poly p{std::move(coeffs)};
    normalize(F, p);
    return p;
}

Poly poly_zero() { return Poly{}; }

Poly poly_one(const FieldPtr& F) { return Poly{{F->one()}}; }

Poly poly_x(const FieldPtr& F) { return Poly{{F->zero(), F->one()}}; }

Poly poly_const(const FieldPtr& F, const Scalar& a) {
    if (F->is_zero(a)) return Poly{};
    return Poly{{a}};
}

Poly poly_monomial(const FieldPtr& F, const Scalar& a, int deg) {
    if (F->is_zero(a)) return Poly{};
    Poly p;
    p.c.assign(static_cast<size_t>(deg) + 1, F->zero());
    p.c.back() = a;
    return p;
}

Poly poly_add(const FieldPtr& F, const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), F->zero());
    for (size_t i = 0; i < r.c.size(); ++i) {
        if (i < a.c.size()) r.c[i] = F->add(r.c[i], a.c[i]);
        if (i < b.c.size()) r.c[i] = F->add(r.c[i], b.c[i]);
    }
    normalize(F, r);
    return r;
}

Poly poly_neg(const FieldPtr& F, const Poly& a) {
    Poly r = a;
    for (auto& x : r.c) x = F->neg(x);
    return r;
}

Poly poly_sub(const FieldPtr& F, const Poly& a, const Poly& b) {
    return poly_add(F, a, poly_neg(F, b));
}

Poly poly_mul(const FieldPtr& F, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly{};
    Poly r;
    r.c.assign(a.c.size() + b.c.size() - 1, F->zero());
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (F->is_zero(a.c[i])) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = F->add(r.c[i + j], F->mul(a.c[i], b.c[j]));
    }
    normalize(F, r);
    return r;
}

Poly poly_scale(const FieldPtr& F, const Scalar& s, const Poly& a) {
    if (F->is_zero(s)) return Poly{};
    Poly r = a;
    for (auto& x : r.c) x = F->mul(s, x);
    return r;
}

std::pair<Poly, Poly> poly_divmod(const FieldPtr& F, const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly rem = a, quo;
    int db = b.degree();
    if (a.degree() >= db) quo.c.assign(static_cast<size_t>(a.degree() - db) + 1, F->zero());
    Scalar lcinv = F->inv(b.c.back());
    while (rem.degree() >= db) {
        int k = rem.degree() - db;
        Scalar q = F->mul(rem.c.back(), lcinv);
        quo.c[static_cast<size_t>(k)] = q;
        for (int i = 0; i <= db; ++i)
            rem.c[static_cast<size_t>(k + i)] =
                F->sub(rem.c[static_cast<size_t>(k + i)], F->mul(q, b.c[static_cast<size_t>(i)]));
        normalize(F, rem);
    }
    normalize(F, quo);
    return {quo, rem};
}

Poly poly_mod(const FieldPtr& F, const Poly& a, const Poly& b) {
    return poly_divmod(F, a, b).second;
}

Poly poly_monic(const FieldPtr& F, const Poly& a) {
    if (a.is_zero()) return a;
    return poly_scale(F, F->inv(a.c.back()), a);
}

Poly poly_gcd(const FieldPtr& F, const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = poly_mod(F, x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return poly_monic(F, x);
}

PolyXgcd poly_xgcd(const FieldPtr& F, const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b;
    Poly s0 = poly_one(F), s1 = poly_zero();
    Poly t0 = poly_zero(), t1 = poly_one(F);
    while (!r1.is_zero()) {
        auto [q, r] = poly_divmod(F, r0, r1);
        r0 = std::move(r1); r1 = std::move(r);
        Poly s2 = poly_sub(F, s0, poly_mul(F, q, s1));
        s0 = std::move(s1); s1 = std::move(s2);
        Poly t2 = poly_sub(F, t0, poly_mul(F, q, t1));
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (!r0.is_zero()) {
        Scalar lcinv = F->inv(r0.c.back());
        r0 = poly_scale(F, lcinv, r0);
        s0 = poly_scale(F, lcinv, s0);
        t0 = poly_scale(F, lcinv, t0);
    }
    return {r0, s0, t0};
}

Poly poly_derivative(const FieldPtr& F, const Poly& a) {
    Poly r;
    if (a.degree() < 1) return r;
    r.c.resize(a.c.size() - 1);
    for (size_t i = 1; i < a.c.size(); ++i)
        r.c[i - 1] = F->mul(F->from_int(static_cast<long long>(i)), a.c[i]);
    normalize(F, r);
    return r;
}

Scalar poly_eval(const FieldPtr& F, const Poly& a, const Scalar& x) {
    Scalar r = F->zero();
    for (size_t i = a.c.size(); i-- > 0;) r = F->add(F->mul(r, x), a.c[i]);
    return r;
}

Poly poly_powmod(const FieldPtr& F, const Poly& a, const mpz_class& e, const Poly& m) {
    Poly r = poly_mod(F, poly_one(F), m);
    Poly b = poly_mod(F, a, m);
    mpz_class n = e;
    while (n > 0) {
        if (mpz_odd_p(n.get_mpz_t())) r = poly_mod(F, poly_mul(F, r, b), m);
        b = poly_mod(F, poly_mul(F, b, b), m);
        n >>= 1;
    }
    return r;
}

Poly poly_compose(const FieldPtr& F, const Poly& a, const Poly& g) {
    Poly r;
    for (size_t i = a.c.size(); i-- > 0;)
        r = poly_add(F, poly_mul(F, r, g), poly_const(F, a.c[i]));
    return r;
}

std::string poly_str(const FieldPtr& F, const Poly& a, const std::string& var) {
    if (a.is_zero()) return "0";
    std::string out;
    for (size_t k = a.c.size(); k-- > 0;) {
        const Scalar& c = a.c[k];
        if (F->is_zero(c)) continue;
        std::string cs = F->str(c);
        bool wrap = cs.find_first_of("+-*") != std::string::npos &&
                    !(cs.size() > 1 && cs[0] == '-' &&
                      cs.find_first_of("+-*", 1) == std::string::npos);
        std::string term;
        if (k == 0) {
            term = wrap ? "(" + cs + ")" : cs;
        } else {
            std::string vp = k == 1 ? var : var + "^" + std::to_string(k);
            if (F->is_one(c)) term = vp;
            else if (wrap) term = "(" + cs + ")*" + vp;
            else term = cs + "*" + vp;
        }
        if (!out.empty() && term[0] != '-') out += "+";
        out += term;
    }
    return out;
}

int poly_cmp(const FieldPtr& F, const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (size_t i = a.c.size(); i-- > 0;) {
        int c = F->cmp(a.c[i], b.c[i]);
        if (c != 0) return c;
    }
    return 0;
}

Scalar poly_resultant(const FieldPtr& F, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) throw std::invalid_argument("resultant of zero polynomial");
    int da = a.degree(), db = b.degree();
    if (da == 0) return F->pow(a.c[0], db);
    if (db == 0) return F->pow(b.c[0], da);
    Mat syl(F, da + db, da + db);
    for (int i = 0; i < db; ++i)
        for (int j = 0; j <= da; ++j) syl.at(i, i + j) = a.c[static_cast<size_t>(da - j)];
    for (int i = 0; i < da; ++i)
        for (int j = 0; j <= db; ++j) syl.at(db + i, i + j) = b.c[static_cast<size_t>(db - j)];
    return det(syl);
}

// ---- squarefree decomposition -------------------------------------------

namespace {

// p-th root of f = g(x^p) over a finite field of characteristic p.
Poly poly_pth_root(const FieldPtr& F, const Poly& f) {
    long long p = F->characteristic();
    mpz_class e = 1;
    if (F->finite()) e = F->order() / p;  // Frobenius inverse exponent
    Poly g;
    g.c.resize(f.c.size() / static_cast<size_t>(p) + 1, F->zero());
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (F->is_zero(f.c[i])) continue;
        if (i % static_cast<size_t>(p) != 0)
            throw std::logic_error("pth_root: polynomial is not a p-th power");
        g.c[i / static_cast<size_t>(p)] = F->pow(f.c[i], e);
    }
    normalize(F, g);
    return g;
}

// Monic squarefree decomposition, valid in every characteristic (for char p
// the input field must be perfect, which holds for all fields here).
std::vector<std::pair<Poly, int>> squarefree_decomposition(const FieldPtr& F, const Poly& fin) {
    Poly f = poly_monic(F, fin);
    std::vector<std::pair<Poly, int>> out;
    if (f.degree() < 1) return out;
    long long p = F->characteristic();
    Poly fp = poly_derivative(F, f);
    if (p > 0 && fp.is_zero()) {
        for (auto& [q, m] : squarefree_decomposition(F, poly_pth_root(F, f)))
            out.emplace_back(q, m * static_cast<int>(p));
        return out;
    }
    Poly a = poly_gcd(F, f, fp);
    Poly b = poly_divmod(F, f, a).first;
    int i = 1;
    while (b.degree() > 0) {
        Poly c = poly_gcd(F, a, b);
        Poly d = poly_divmod(F, b, c).first;
        if (d.degree() > 0) out.emplace_back(poly_monic(F, d), i);
        ++i;
        b = std::move(c);
        a = poly_divmod(F, a, b).first;
    }
    if (p > 0 && a.degree() > 0) {
        for (auto& [q, m] : squarefree_decomposition(F, poly_pth_root(F, a)))
            out.emplace_back(q, m * static_cast<int>(p));
    }
    return out;
}

// ---- finite-field factorization ------------------------------------------

// Splits a monic squarefree product of irreducibles of equal degree d.
// Splitting elements are enumerated deterministically instead of sampled.
void equal_degree_split(const FieldPtr& F, const Poly& f, int d, std::vector<Poly>& out) {
    if (f.degree() == d) {
        out.push_back(f);
        return;
    }
    mpz_class q = F->order();
    std::vector<Scalar> elems = F->enumerate();
    int n = f.degree();
    // Odometer over coefficient vectors of length n (candidate alpha of
    // degree < n); constants cannot split and are skipped.
    std::vector<size_t> idx(static_cast<size_t>(n), 0);
    auto bump = [&]() -> bool {
        size_t i = 0;
        while (i < idx.size() && ++idx[i] == elems.size()) idx[i++] = 0;
        return i < idx.size();
    };
    for (;;) {
        if (!bump()) throw std::logic_error("equal_degree_split exhausted candidates");
        bool constant = true;
        for (size_t i = 1; i < idx.size(); ++i)
            if (idx[i] != 0) { constant = false; break; }
        if (constant) continue;
        std::vector<Scalar> cs;
        cs.reserve(idx.size());
        for (size_t i = 0; i < idx.size(); ++i) cs.push_back(elems[idx[i]]);
        Poly alpha = poly_from(F, std::move(cs));
        Poly g;
        if (F->characteristic() != 2) {
            mpz_class e = 1;
            for (int i = 0; i < d; ++i) e *= q;
            e = (e - 1) / 2;
            Poly h = poly_sub(F, poly_powmod(F, alpha, e, f), poly_one(F));
            g = poly_gcd(F, h, f);
        } else {
            // Trace map relative to GF(2).
            mpz_class half = q;
            int k = 0;
            while (half > 1) { half /= 2; ++k; }
            Poly acc = poly_mod(F, alpha, f), tr = acc;
            for (int i = 1; i < k * d; ++i) {
                acc = poly_mod(F, poly_mul(F, acc, acc), f);
                tr = poly_add(F, tr, acc);
            }
            g = poly_gcd(F, tr, f);
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree_split(F, g, d, out);
            equal_degree_split(F, poly_divmod(F, f, g).first, d, out);
            return;
        }
    }
}

// Distinct-degree then equal-degree factorization of a monic squarefree f.
std::vector<Poly> factor_sqfree_finite(const FieldPtr& F, Poly f) {
    std::vector<Poly> out;
    mpz_class q = F->order();
    Poly x = poly_x(F);
    Poly h = poly_mod(F, x, f);
    int d = 0;
    while (f.degree() >= 2 * (d + 1)) {
        ++d;
        h = poly_powmod(F, h, q, f);
        Poly g = poly_gcd(F, poly_sub(F, h, x), f);
        if (g.degree() > 0) {
            equal_degree_split(F, g, d, out);
            f = poly_divmod(F, f, g).first;
            h = poly_mod(F, h, f);
        }
    }
    if (f.degree() > 0) out.push_back(f);
    return out;
}

// ---- factorization over Q (Zassenhaus) -----------------------------------

using ZPoly = std::vector<mpz_class>;  // low degree first, normalized

void z_normalize(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int z_degree(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

ZPoly z_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    z_normalize(r);
    return r;
}

ZPoly z_sub(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), mpz_class(0));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] -= b[i];
    }
    z_normalize(r);
    return r;
}

ZPoly z_mod(const ZPoly& a, const mpz_class& m) {
    ZPoly r = a;
    for (auto& c : r) {
        mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    }
    z_normalize(r);
    return r;
}

ZPoly z_symmetric(const ZPoly& a, const mpz_class& m) {
    ZPoly r = z_mod(a, m);
    for (auto& c : r)
        if (2 * c > m) c -= m;
    z_normalize(r);
    return r;
}

// Division by a monic divisor with coefficients reduced mod m.
std::pair<ZPoly, ZPoly> zm_divmod(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
    ZPoly rem = z_mod(a, m), quo;
    int db = z_degree(b);
    if (db < 0 || b.back() != 1) throw std::logic_error("zm_divmod requires monic divisor");
    if (z_degree(rem) >= db) quo.assign(static_cast<size_t>(z_degree(rem) - db) + 1, mpz_class(0));
    while (z_degree(rem) >= db) {
        int k = z_degree(rem) - db;
        mpz_class q = rem.back();
        quo[static_cast<size_t>(k)] = q;
        for (int i = 0; i <= db; ++i) {
            mpz_class& c = rem[static_cast<size_t>(k + i)];
            c -= q * b[static_cast<size_t>(i)];
            mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        }
        z_normalize(rem);
    }
    z_normalize(quo);
    return {z_mod(quo, m), rem};
}

// Exact division in Z[x]; nullopt if b does not divide a.
std::optional<ZPoly> z_divide_exact(const ZPoly& a, const ZPoly& b) {
    if (b.empty()) return std::nullopt;
    ZPoly rem = a, quo;
    int db = z_degree(b);
    if (z_degree(rem) >= db) quo.assign(static_cast<size_t>(z_degree(rem) - db) + 1, mpz_class(0));
    while (z_degree(rem) >= db) {
        int k = z_degree(rem) - db;
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem.back().get_mpz_t(), b.back().get_mpz_t());
        if (r != 0) return std::nullopt;
        quo[static_cast<size_t>(k)] = q;
        for (int i = 0; i <= db; ++i) rem[static_cast<size_t>(k + i)] -= q * b[static_cast<size_t>(i)];
        z_normalize(rem);
    }
    if (!rem.empty()) return std::nullopt;
    z_normalize(quo);
    return quo;
}

ZPoly poly_to_z_mod(const FieldPtr& Fp, const Poly& f) {
    ZPoly r;
    r.reserve(f.c.size());
    for (const auto& c : f.c) r.push_back(mpz_class(c.residue()));
    z_normalize(r);
    return r;
}

Poly z_to_gfp(const FieldPtr& Fp, const ZPoly& f) {
    std::vector<Scalar> cs;
    cs.reserve(f.size());
    long long p = Fp->characteristic();
    for (const auto& c : f) {
        mpz_class m = c % p;
        long long v = m.get_si();
        if (v < 0) v += p;
        cs.push_back(Scalar(v));
    }
    return poly_from(Fp, std::move(cs));
}

// One quadratic Hensel step: refines g = u*v and the Bezout pair from
// modulus m to m^2 (u, v monic).
struct HenselPair { ZPoly u, v, s, t; };

HenselPair hensel_step(const ZPoly& g, const HenselPair& in, const mpz_class& m) {
    mpz_class M = m * m;
    ZPoly e = z_mod(z_sub(g, z_mul(in.u, in.v)), M);
    auto [q, r] = zm_divmod(z_mod(z_mul(in.s, e), M), in.v, M);
    ZPoly u1 = z_mod(z_sub(in.u, z_sub({}, z_sub(z_mul(in.t, e), z_sub({}, z_mul(q, in.u))))), M);
    // u1 = u + t*e + q*u (written via subtractions of negations above)
    ZPoly v1 = z_mod(z_sub(in.v, z_sub({}, r)), M);
    ZPoly b = z_mod(z_sub(z_sub(z_mul(in.s, u1), z_sub({}, z_mul(in.t, v1))), ZPoly{1}), M);
    auto [c, d] = zm_divmod(z_mod(z_mul(in.s, b), M), v1, M);
    ZPoly s1 = z_mod(z_sub(in.s, d), M);
    ZPoly t1 = z_mod(z_sub(z_sub(in.t, z_mul(in.t, b)), z_mul(c, u1)), M);
    return {u1, v1, s1, t1};
}

// Lifts a list of pairwise-coprime monic modular factors of the monic g from
// modulus p to at least p^target via a balanced product tree.
std::vector<ZPoly> hensel_lift_list(const FieldPtr& Fp, const ZPoly& g,
                                    const std::vector<Poly>& factors, const mpz_class& p,
                                    const mpz_class& target) {
    if (factors.size() == 1) {
        mpz_class M = p;
        while (M < target) M *= M;
        return {z_mod(g, M)};
    }
    size_t mid = factors.size() / 2;
    Poly U = poly_one(Fp), V = poly_one(Fp);
    for (size_t i = 0; i < factors.size(); ++i)
        (i < mid ? U : V) = poly_mul(Fp, i < mid ? U : V, factors[i]);
    PolyXgcd bez = poly_xgcd(Fp, U, V);
    if (bez.g.degree() != 0) throw std::logic_error("modular factors not coprime");
    HenselPair hp{poly_to_z_mod(Fp, U), poly_to_z_mod(Fp, V),
                  poly_to_z_mod(Fp, poly_scale(Fp, Fp->inv(bez.g.c[0]), bez.s)),
                  poly_to_z_mod(Fp, poly_scale(Fp, Fp->inv(bez.g.c[0]), bez.t))};
    mpz_class m = p;
    while (m < target) {
        hp = hensel_step(z_mod(g, m * m), hp, m);
        m *= m;
    }
    std::vector<Poly> left(factors.begin(), factors.begin() + static_cast<long>(mid));
    std::vector<Poly> right(factors.begin() + static_cast<long>(mid), factors.end());
    std::vector<ZPoly> out = hensel_lift_list(Fp, hp.u, left, p, target);
    std::vector<ZPoly> rhs = hensel_lift_list(Fp, hp.v, right, p, target);
    out.insert(out.end(), rhs.begin(), rhs.end());
    return out;
}

// Factors a monic squarefree integer polynomial into monic integer
// irreducibles (Zassenhaus: modular factorization, Hensel lifting, subset
// recombination with the Landau-Mignotte bound).
std::vector<ZPoly> factor_monic_sqfree_z(const ZPoly& g) {
    int n = z_degree(g);
    if (n <= 1) return {g};
    // Choose a prime keeping g squarefree mod p.
    FieldPtr Fp;
    Poly gp;
    for (long long p = 3;; p += 2) {
        bool prime = true;
        for (long long d = 2; d * d <= p; ++d)
            if (p % d == 0) { prime = false; break; }
        if (!prime) continue;
        Fp = Field::prime(p);
        gp = z_to_gfp(Fp, g);
        if (gp.degree() != n) continue;
        if (poly_gcd(Fp, gp, poly_derivative(Fp, gp)).degree() == 0) break;
    }
    std::vector<Poly> modular = factor_sqfree_finite(Fp, gp);
    std::sort(modular.begin(), modular.end(),
              [&](const Poly& a, const Poly& b) { return poly_cmp(Fp, a, b) < 0; });
    if (modular.size() == 1) return {g};
    // Landau-Mignotte style bound for coefficients of monic factors.
    mpz_class norm2 = 0;
    for (const auto& c : g) norm2 += c * c;
    mpz_class bound = 1;
    mpz_sqrt(bound.get_mpz_t(), norm2.get_mpz_t());
    bound += 1;
    bound <<= static_cast<unsigned>(n + 1);
    mpz_class p(Fp->characteristic());
    std::vector<ZPoly> lifted = hensel_lift_list(Fp, g, modular, p, 2 * bound + 1);
    mpz_class M = p;
    while (M < 2 * bound + 1) M *= M;

    std::vector<ZPoly> out;
    ZPoly rest = g;
    std::vector<ZPoly> pool = lifted;
    size_t take = 1;
    while (2 * take <= pool.size()) {
        bool found = false;
        std::vector<size_t> pick(take);
        for (size_t i = 0; i < take; ++i) pick[i] = i;
        for (;;) {
            ZPoly prod{1};
            for (size_t i : pick) prod = z_mod(z_mul(prod, pool[i]), M);
            prod = z_symmetric(prod, M);
            auto quo = z_divide_exact(rest, prod);
            if (quo) {
                out.push_back(prod);
                rest = *quo;
                std::vector<ZPoly> np;
                for (size_t i = 0, k = 0; i < pool.size(); ++i) {
                    if (k < pick.size() && pick[k] == i) { ++k; continue; }
                    np.push_back(pool[i]);
                }
                pool = std::move(np);
                found = true;
                break;
            }
            // next combination
            long ii = static_cast<long>(take) - 1;
            while (ii >= 0 && pick[static_cast<size_t>(ii)] ==
                                  pool.size() - take + static_cast<size_t>(ii))
                --ii;
            if (ii < 0) break;
            ++pick[static_cast<size_t>(ii)];
            for (size_t j = static_cast<size_t>(ii) + 1; j < take; ++j) pick[j] = pick[j - 1] + 1;
        }
        if (!found) ++take;
    }
    if (z_degree(rest) > 0) out.push_back(rest);
    return out;
}

// Monic squarefree factor of a monic rational polynomial.
std::vector<Poly> factor_sqfree_rationals(const FieldPtr& F, const Poly& g) {
    if (g.degree() == 1) return {g};
    // Clear denominators to a primitive integer polynomial.
    mpz_class den = 1;
    for (const auto& c : g.c) den = lcm(den, c.rational().get_den());
    ZPoly P;
    P.reserve(g.c.size());
    for (const auto& c : g.c) {
        mpq_class q = c.rational() * den;
        P.push_back(q.get_num());
    }
    mpz_class content = 0;
    for (const auto& c : P) content = gcd(content, c);
    for (auto& c : P) c /= content;
    mpz_class L = P.back();
    // Monicize: ghat(x) = L^(n-1) P(x/L).
    int n = z_degree(P);
    ZPoly ghat(P.size());
    mpz_class pw = 1;
    for (int i = n; i >= 0; --i) {
        ghat[static_cast<size_t>(i)] = P[static_cast<size_t>(i)] * pw;
        pw *= L;
    }
    std::vector<ZPoly> zf = factor_monic_sqfree_z(ghat);
    // Map back: h(x) = hhat(L x) / L^(deg hhat), then take the monic form.
    std::vector<Poly> out;
    for (const auto& h : zf) {
        std::vector<Scalar> cs(h.size());
        mpz_class lp = 1;
        for (size_t i = 0; i < h.size(); ++i) {
            mpq_class q(h[i] * lp, 1);
            q.canonicalize();
            cs[i] = Scalar(q);
            lp *= L;
        }
        Poly hq = poly_monic(F, poly_from(F, std::move(cs)));
        out.push_back(hq);
    }
    return out;
}

// ---- factorization over simple extensions of Q (Trager norms) -------------

Poly embed_poly(const FieldPtr& K, const Poly& f_base) {
    std::vector<Scalar> cs;
    cs.reserve(f_base.c.size());
    for (const auto& c : f_base.c) cs.push_back(K->embed(c));
    return poly_from(K, std::move(cs));
}

// Norm of f from K = B[gen]/(m) down to B[x], by evaluation/interpolation.
Poly norm_poly(const FieldPtr& K, const Poly& f) {
    const FieldPtr& B = K->base();
    const Poly& m = K->minpoly();
    int dn = f.degree() * m.degree();
    std::vector<Scalar> xs, ys;
    for (int pt = 0; static_cast<int>(xs.size()) <= dn; ++pt) {
        Scalar x0 = B->from_int(pt);
        // f(x0) as an element of K; its coordinates are a polynomial in the
        // generator, the reduced representative modulo m.
        Scalar v = poly_eval(K, f, K->embed(x0));
        Poly rep = poly_from(B, v.coords());
        Scalar n = rep.is_zero() ? B->zero() : poly_resultant(B, m, rep);
        if (!rep.is_zero() && rep.degree() == 0) n = B->pow(rep.c[0], m.degree());
        xs.push_back(x0);
        ys.push_back(n);
    }
    // Lagrange interpolation over B.
    Poly acc;
    for (size_t i = 0; i < xs.size(); ++i) {
        Poly li = poly_one(B);
        Scalar denom = B->one();
        for (size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            li = poly_mul(B, li, poly_from(B, {B->neg(xs[j]), B->one()}));
            denom = B->mul(denom, B->sub(xs[i], xs[j]));
        }
        acc = poly_add(B, acc, poly_scale(B, B->mul(ys[i], B->inv(denom)), li));
    }
    return acc;
}

std::vector<Poly> factor_sqfree_ext_char0(const FieldPtr& K, const Poly& g) {
    if (g.degree() == 1) return {g};
    const FieldPtr& B = K->base();
    Scalar gen = K->gen_element();
    Poly gs;
    long long shift = 0;
    Poly N;
    for (long long s = 0;; ++s) {
        Poly x_minus_sgen =
            poly_from(K, {K->mul(K->from_int(-s), gen), K->one()});
        gs = poly_compose(K, g, x_minus_sgen);
        N = norm_poly(K, gs);
        if (poly_gcd(B, N, poly_derivative(B, N)).degree() == 0) {
            shift = s;
            break;
        }
    }
    Factorization nf = poly_factor(B, N);
    std::vector<Poly> out;
    Poly x_plus_sgen = poly_from(K, {K->mul(K->from_int(shift), gen), K->one()});
    for (const auto& [h, mult] : nf.factors) {
        Poly gi = poly_gcd(K, gs, embed_poly(K, h));
        if (gi.degree() > 0) out.push_back(poly_monic(K, poly_compose(K, gi, x_plus_sgen)));
    }
    return out;
}

}  // namespace

Factorization poly_factor(const FieldPtr& F, const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
    Factorization out;
    out.unit = f.c.back();
    if (f.degree() == 0) return out;
    for (auto& [part, mult] : squarefree_decomposition(F, f)) {
        std::vector<Poly> irr;
        if (F->finite()) {
            irr = factor_sqfree_finite(F, part);
        } else if (F->kind() == Field::Kind::Rational) {
            irr = factor_sqfree_rationals(F, part);
        } else if (F->characteristic() == 0) {
            irr = factor_sqfree_ext_char0(F, part);
        } else {
            throw std::domain_error("factorization unsupported over " + F->spec());
        }
        for (auto& p : irr) out.factors.push_back({poly_monic(F, p), mult});
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [&](const PolyFactor& a, const PolyFactor& b) {
                  return poly_cmp(F, a.factor, b.factor) < 0;
              });
    return out;
}

bool poly_is_irreducible(const FieldPtr& F, const Poly& f) {
    if (f.degree() < 1) return false;
    if (f.degree() == 1) return true;
    Factorization fac = poly_factor(F, f);
    return fac.factors.size() == 1 && fac.factors[0].multiplicity == 1;
}

std::vector<Scalar> poly_roots(const FieldPtr& F, const Poly& f) {
    std::vector<Scalar> roots;
    for (const auto& [p, mult] : poly_factor(F, f).factors)
        if (p.degree() == 1) roots.push_back(F->neg(p.c[0]));
    std::sort(roots.begin(), roots.end(),
              [&](const Scalar& a, const Scalar& b) { return F->cmp(a, b) < 0; });
    return roots;
}

}  // namespace altsuper
