#include "altsuper/field.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "altsuper/poly.hpp"

namespace altsuper {

namespace {

bool is_small_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

long long mod_pos(long long a, long long p) {
    long long r = a % p;
    return r < 0 ? r + p : r;
}

long long mod_mul(long long a, long long b, long long p) {
    return static_cast<long long>((__int128)a * b % p);
}

long long mod_inv(long long a, long long p) {
    long long t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        long long q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    if (r != 1) throw std::domain_error("inversion of zero in GF(p)");
    return mod_pos(t, p);
}

// ---- expression parsing -------------------------------------------------
//
// Shared grammar for scalars, minimal polynomials and FieldSpec bodies:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ['^' uint]
//   atom   := uint ['/' uint] | ident | '(' expr ')'

struct ENode {
    enum Kind { Num, Ident, Add, Sub, Mul, Pow, Neg } kind;
    mpz_class num = 0, den = 1;
    std::string name;
    unsigned exp = 0;
    std::vector<ENode> kids;
};

class ExprParser {
public:
    explicit ExprParser(const std::string& s) : s_(s) {}

    ENode parse() {
        ENode e = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing characters");
        return e;
    }

private:
    ENode expr() {
        skip_ws();
        ENode acc;
        bool neg_first = false;
        if (peek() == '-') { ++pos_; neg_first = true; }
        acc = term();
        if (neg_first) {
            ENode n{ENode::Neg};
            n.kids.push_back(std::move(acc));
            acc = std::move(n);
        }
        for (;;) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            ENode rhs = term();
            ENode n{c == '+' ? ENode::Add : ENode::Sub};
            n.kids.push_back(std::move(acc));
            n.kids.push_back(std::move(rhs));
            acc = std::move(n);
        }
        return acc;
    }

    ENode term() {
        ENode acc = factor();
        for (;;) {
            skip_ws();
            if (peek() != '*') break;
            ++pos_;
            ENode rhs = factor();
            ENode n{ENode::Mul};
            n.kids.push_back(std::move(acc));
            n.kids.push_back(std::move(rhs));
            acc = std::move(n);
        }
        return acc;
    }

    ENode factor() {
        ENode a = atom();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            ENode n{ENode::Pow};
            n.exp = static_cast<unsigned>(read_uint().get_ui());
            n.kids.push_back(std::move(a));
            return n;
        }
        return a;
    }

    ENode atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            ENode e = expr();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            ENode n{ENode::Num};
            n.num = read_uint();
            skip_ws();
            if (peek() == '/') {
                ++pos_;
                skip_ws();
                n.den = read_uint();
            }
            return n;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            ENode n{ENode::Ident};
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                n.name.push_back(s_[pos_++]);
            return n;
        }
        fail("unexpected character");
        return {};
    }

    mpz_class read_uint() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected number");
        return mpz_class(s_.substr(start, pos_ - start));
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    [[noreturn]] void fail(const std::string& why) {
        throw std::invalid_argument("parse error at position " + std::to_string(pos_) + " in \"" +
                                    s_ + "\": " + why);
    }

    const std::string& s_;
    size_t pos_ = 0;
};

Scalar scalar_from_mpq(const Field& F, const mpz_class& num, const mpz_class& den);

// Evaluates an expression tree as an element of F. Identifiers resolve to the
// generator of F or of any field below it in the extension chain.
Scalar eval_scalar(const Field& F, const ENode& e) {
    switch (e.kind) {
        case ENode::Num:
            return scalar_from_mpq(F, e.num, e.den);
        case ENode::Ident: {
            const Field* f = &F;
            std::vector<const Field*> chain;
            while (f) {
                chain.push_back(f);
                f = f->kind() == Field::Kind::Extension ? f->base().get() : nullptr;
            }
            for (size_t i = 0; i < chain.size(); ++i) {
                if (chain[i]->kind() == Field::Kind::Extension && chain[i]->generator() == e.name) {
                    Scalar v = chain[i]->gen_element();
                    for (size_t j = i; j-- > 0;) v = chain[j]->embed(v);
                    return v;
                }
            }
            throw std::invalid_argument("unknown generator '" + e.name + "' in field " + F.spec());
        }
        case ENode::Add:
            return F.add(eval_scalar(F, e.kids[0]), eval_scalar(F, e.kids[1]));
        case ENode::Sub:
            return F.sub(eval_scalar(F, e.kids[0]), eval_scalar(F, e.kids[1]));
        case ENode::Mul:
            return F.mul(eval_scalar(F, e.kids[0]), eval_scalar(F, e.kids[1]));
        case ENode::Neg:
            return F.neg(eval_scalar(F, e.kids[0]));
        case ENode::Pow:
            return F.pow(eval_scalar(F, e.kids[0]), e.exp);
    }
    throw std::logic_error("unreachable");
}

// Evaluates an expression tree as a polynomial over F in the variable `var`.
Poly eval_poly(const FieldPtr& F, const ENode& e, const std::string& var) {
    switch (e.kind) {
        case ENode::Num:
            return poly_const(F, scalar_from_mpq(*F, e.num, e.den));
        case ENode::Ident:
            if (e.name == var) return poly_x(F);
            return poly_const(F, eval_scalar(*F, e));
        case ENode::Add:
            return poly_add(F, eval_poly(F, e.kids[0], var), eval_poly(F, e.kids[1], var));
        case ENode::Sub:
            return poly_sub(F, eval_poly(F, e.kids[0], var), eval_poly(F, e.kids[1], var));
        case ENode::Mul:
            return poly_mul(F, eval_poly(F, e.kids[0], var), eval_poly(F, e.kids[1], var));
        case ENode::Neg:
            return poly_neg(F, eval_poly(F, e.kids[0], var));
        case ENode::Pow: {
            Poly b = eval_poly(F, e.kids[0], var);
            Poly r = poly_one(F);
            for (unsigned i = 0; i < e.exp; ++i) r = poly_mul(F, r, b);
            return r;
        }
    }
    throw std::logic_error("unreachable");
}

Scalar scalar_from_mpq(const Field& F, const mpz_class& num, const mpz_class& den) {
    switch (F.kind()) {
        case Field::Kind::Prime: {
            long long p = F.characteristic();
            mpz_class n = num % p, d = den % p;
            long long nn = mod_pos(n.get_si(), p);
            long long dd = mod_pos(d.get_si(), p);
            if (dd == 0) throw std::domain_error("denominator divisible by characteristic");
            return Scalar(mod_mul(nn, mod_inv(dd, p), p));
        }
        case Field::Kind::Rational: {
            if (den == 0) throw std::domain_error("zero denominator");
            mpq_class q(num, den);
            q.canonicalize();
            return Scalar(q);
        }
        case Field::Kind::Extension:
            return F.embed(scalar_from_mpq(*F.base(), num, den));
    }
    throw std::logic_error("unreachable");
}

bool needs_parens(const std::string& s) {
    return s.find_first_of("+-*") != std::string::npos;
}

}  // namespace

FieldPtr Field::prime(long long p) {
    if (!is_small_prime(p)) throw std::invalid_argument("GF(p) requires a prime modulus");
    if (p >= (1LL << 31)) throw std::invalid_argument("prime modulus too large");
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = Kind::Prime;
    f->p_ = p;
    f->char_ = p;
    return f;
}

FieldPtr Field::rationals() {
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = Kind::Rational;
    f->char_ = 0;
    return f;
}

FieldPtr Field::extension(FieldPtr base, Poly minpoly, std::string gen) {
    if (!base) throw std::invalid_argument("null base field");
    if (minpoly.is_zero()) throw std::invalid_argument("zero minimal polynomial");
    if (minpoly.degree() < 1) throw std::invalid_argument("constant minimal polynomial");
    if (!base->is_one(minpoly.c.back()))
        throw std::invalid_argument("minimal polynomial must be monic");
    if (gen.empty() || !(std::isalpha(static_cast<unsigned char>(gen[0])) || gen[0] == '_'))
        throw std::invalid_argument("bad generator name");
    for (const Field* f = base.get(); f; f = f->kind() == Kind::Extension ? f->base().get() : nullptr)
        if (f->kind() == Kind::Extension && f->generator() == gen)
            throw std::invalid_argument("generator name '" + gen + "' already in use");
    if (!poly_is_irreducible(base, minpoly))
        throw std::invalid_argument("minimal polynomial is reducible over " + base->spec());
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = Kind::Extension;
    f->base_ = std::move(base);
    f->minpoly_ = std::move(minpoly);
    f->gen_ = std::move(gen);
    f->char_ = f->base_->characteristic();
    return f;
}

bool Field::finite() const {
    switch (kind_) {
        case Kind::Prime: return true;
        case Kind::Rational: return false;
        case Kind::Extension: return base_->finite();
    }
    return false;
}

mpz_class Field::order() const {
    if (!finite()) throw std::domain_error("infinite field has no order");
    if (kind_ == Kind::Prime) return mpz_class(p_);
    mpz_class b = base_->order(), r = 1;
    for (int i = 0; i < ext_degree(); ++i) r *= b;
    return r;
}

Scalar Field::zero() const {
    switch (kind_) {
        case Kind::Prime: return Scalar(0LL);
        case Kind::Rational: return Scalar(mpq_class(0));
        case Kind::Extension:
            return Scalar(Scalar::Ext(static_cast<size_t>(ext_degree()), base_->zero()));
    }
    throw std::logic_error("unreachable");
}

Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long n) const {
    switch (kind_) {
        case Kind::Prime: return Scalar(mod_pos(n, p_));
        case Kind::Rational: return Scalar(mpq_class(n));
        case Kind::Extension: return embed(base_->from_int(n));
    }
    throw std::logic_error("unreachable");
}

Scalar Field::from_fraction(long long num, long long den) const {
    return scalar_from_mpq(*this, mpz_class(num), mpz_class(den));
}

Scalar Field::gen_element() const {
    if (kind_ != Kind::Extension) throw std::domain_error("field has no generator");
    Scalar::Ext v(static_cast<size_t>(ext_degree()), base_->zero());
    if (ext_degree() == 1) {
        // Degree-one extension: the generator equals the root of the linear
        // minimal polynomial, a base element.
        v[0] = base_->neg(minpoly_.c[0]);
    } else {
        v[1] = base_->one();
    }
    return Scalar(std::move(v));
}

Scalar Field::embed(const Scalar& base_elem) const {
    if (kind_ != Kind::Extension) throw std::domain_error("embed requires an extension field");
    Scalar::Ext v(static_cast<size_t>(ext_degree()), base_->zero());
    v[0] = base_elem;
    return Scalar(std::move(v));
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
    switch (kind_) {
        case Kind::Prime: return Scalar(mod_pos(a.residue() + b.residue(), p_));
        case Kind::Rational: return Scalar(mpq_class(a.rational() + b.rational()));
        case Kind::Extension: {
            Scalar::Ext v(a.coords());
            for (size_t i = 0; i < v.size(); ++i) v[i] = base_->add(v[i], b.coords()[i]);
            return Scalar(std::move(v));
        }
    }
    throw std::logic_error("unreachable");
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const { return add(a, neg(b)); }

Scalar Field::neg(const Scalar& a) const {
    switch (kind_) {
        case Kind::Prime: return Scalar(a.residue() == 0 ? 0 : p_ - a.residue());
        case Kind::Rational: return Scalar(mpq_class(-a.rational()));
        case Kind::Extension: {
            Scalar::Ext v(a.coords());
            for (auto& x : v) x = base_->neg(x);
            return Scalar(std::move(v));
        }
    }
    throw std::logic_error("unreachable");
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
    switch (kind_) {
        case Kind::Prime: return Scalar(mod_mul(a.residue(), b.residue(), p_));
        case Kind::Rational: return Scalar(mpq_class(a.rational() * b.rational()));
        case Kind::Extension: {
            size_t d = static_cast<size_t>(ext_degree());
            Scalar::Ext prod(2 * d - 1, base_->zero());
            for (size_t i = 0; i < d; ++i) {
                if (base_->is_zero(a.coords()[i])) continue;
                for (size_t j = 0; j < d; ++j)
                    prod[i + j] =
                        base_->add(prod[i + j], base_->mul(a.coords()[i], b.coords()[j]));
            }
            // Reduce modulo the monic minimal polynomial.
            for (size_t k = prod.size(); k-- > d;) {
                Scalar c = prod[k];
                if (base_->is_zero(c)) continue;
                prod[k] = base_->zero();
                for (size_t j = 0; j < d; ++j)
                    prod[k - d + j] =
                        base_->sub(prod[k - d + j], base_->mul(c, minpoly_.c[j]));
            }
            prod.resize(d);
            return Scalar(std::move(prod));
        }
    }
    throw std::logic_error("unreachable");
}

Scalar Field::inv(const Scalar& a) const {
    if (is_zero(a)) throw std::domain_error("inversion of zero");
    switch (kind_) {
        case Kind::Prime: return Scalar(mod_inv(a.residue(), p_));
        case Kind::Rational: return Scalar(mpq_class(1 / a.rational()));
        case Kind::Extension: {
            Poly ap{a.coords()};
            while (!ap.c.empty() && base_->is_zero(ap.c.back())) ap.c.pop_back();
            PolyXgcd x = poly_xgcd(base_, ap, minpoly_);
            if (x.g.degree() != 0) throw std::domain_error("non-invertible extension element");
            Poly s = poly_scale(base_, base_->inv(x.g.c[0]), x.s);
            Scalar::Ext v(static_cast<size_t>(ext_degree()), base_->zero());
            for (size_t i = 0; i < s.c.size(); ++i) v[i] = s.c[i];
            return Scalar(std::move(v));
        }
    }
    throw std::logic_error("unreachable");
}

Scalar Field::pow(const Scalar& a, const mpz_class& e) const {
    if (e < 0) return pow(inv(a), -e);
    Scalar r = one(), b = a;
    mpz_class n = e;
    while (n > 0) {
        if (mpz_odd_p(n.get_mpz_t())) r = mul(r, b);
        b = mul(b, b);
        n >>= 1;
    }
    return r;
}

int Field::cmp(const Scalar& a, const Scalar& b) const {
    switch (kind_) {
        case Kind::Prime:
            return a.residue() < b.residue() ? -1 : a.residue() > b.residue() ? 1 : 0;
        case Kind::Rational:
            return ::cmp(a.rational(), b.rational());
        case Kind::Extension:
            for (size_t i = a.coords().size(); i-- > 0;) {
                int c = base_->cmp(a.coords()[i], b.coords()[i]);
                if (c != 0) return c;
            }
            return 0;
    }
    throw std::logic_error("unreachable");
}

std::vector<Scalar> Field::enumerate() const {
    if (!finite()) throw std::domain_error("cannot enumerate an infinite field");
    if (kind_ == Kind::Prime) {
        std::vector<Scalar> out;
        out.reserve(static_cast<size_t>(p_));
        for (long long i = 0; i < p_; ++i) out.push_back(Scalar(i));
        return out;
    }
    std::vector<Scalar> base_elems = base_->enumerate();
    size_t d = static_cast<size_t>(ext_degree());
    std::vector<Scalar> out;
    std::vector<size_t> idx(d, 0);
    for (;;) {
        Scalar::Ext v;
        v.reserve(d);
        for (size_t i = 0; i < d; ++i) v.push_back(base_elems[idx[i]]);
        out.push_back(Scalar(std::move(v)));
        size_t i = 0;
        while (i < d && ++idx[i] == base_elems.size()) idx[i++] = 0;
        if (i == d) break;
    }
    return out;
}

std::string Field::str(const Scalar& a) const {
    switch (kind_) {
        case Kind::Prime: return std::to_string(a.residue());
        case Kind::Rational: return a.rational().get_str();
        case Kind::Extension: {
            std::string out;
            for (size_t k = a.coords().size(); k-- > 0;) {
                const Scalar& c = a.coords()[k];
                if (base_->is_zero(c)) continue;
                std::string cs = base_->str(c);
                std::string term;
                if (k == 0) {
                    term = needs_parens(cs) ? "(" + cs + ")" : cs;
                } else {
                    std::string gp = k == 1 ? gen_ : gen_ + "^" + std::to_string(k);
                    if (base_->is_one(c)) term = gp;
                    else if (needs_parens(cs)) term = "(" + cs + ")*" + gp;
                    else term = cs + "*" + gp;
                }
                if (!out.empty() && term[0] != '-') out += "+";
                out += term;
            }
            return out.empty() ? "0" : out;
        }
    }
    throw std::logic_error("unreachable");
}

Scalar Field::parse(const std::string& text) const {
    ENode e = ExprParser(text).parse();
    return eval_scalar(*this, e);
}

std::string Field::spec() const {
    switch (kind_) {
        case Kind::Prime: return "GF(" + std::to_string(p_) + ")";
        case Kind::Rational: return "Q";
        case Kind::Extension:
            return base_->spec() + "[" + gen_ + "]/(" + poly_str(base_, minpoly_, gen_) + ")";
    }
    throw std::logic_error("unreachable");
}

FieldPtr Field::parse_spec(const std::string& text) {
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    FieldPtr f;
    if (text.compare(pos, 3, "GF(") == 0) {
        pos += 3;
        size_t close = text.find(')', pos);
        if (close == std::string::npos) throw std::invalid_argument("missing ')' in FieldSpec");
        f = prime(std::stoll(text.substr(pos, close - pos)));
        pos = close + 1;
    } else if (pos < text.size() && text[pos] == 'Q') {
        pos += 1;
        f = rationals();
    } else {
        throw std::invalid_argument("FieldSpec must start with GF(p) or Q");
    }
    skip_ws();
    while (pos < text.size() && text[pos] == '[') {
        size_t close = text.find(']', pos);
        if (close == std::string::npos) throw std::invalid_argument("missing ']' in FieldSpec");
        std::string gen = text.substr(pos + 1, close - pos - 1);
        pos = close + 1;
        skip_ws();
        if (pos + 1 >= text.size() || text[pos] != '/' || text[pos + 1] != '(')
            throw std::invalid_argument("expected /(...) after [gen] in FieldSpec");
        pos += 2;
        int depth = 1;
        size_t start = pos;
        while (pos < text.size() && depth > 0) {
            if (text[pos] == '(') ++depth;
            if (text[pos] == ')') --depth;
            ++pos;
        }
        if (depth != 0) throw std::invalid_argument("unbalanced parentheses in FieldSpec");
        std::string body = text.substr(start, pos - start - 1);
        ENode e = ExprParser(body).parse();
        f = extension(f, eval_poly(f, e, gen), gen);
        skip_ws();
    }
    if (pos != text.size()) throw std::invalid_argument("trailing characters in FieldSpec");
    return f;
}

}  // namespace altsuper
