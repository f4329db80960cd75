#include "krsl2/field.hpp"

namespace krsl2 {

namespace {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

Field Field::prime(long p) {
    if (p == 2) throw FieldError("characteristic 2 is not supported (2 must be invertible)");
    if (!is_prime(p)) throw FieldError("F_" + std::to_string(p) + ": modulus is not prime");
    return Field(p);
}

std::string Field::name() const {
    return p_ == 0 ? std::string("Q") : "F" + std::to_string(p_);
}

mpq_class Field::reduce(const mpq_class& x) const {
    if (p_ == 0) {
        mpq_class c = x;
        c.canonicalize();
        return c;
    }
    mpz_class P(p_);
    mpz_class den = x.get_den();
    mpz_class num = x.get_num();
    mpz_class r;
    if (den != 1) {
        mpz_class inv;
        if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), P.get_mpz_t()) == 0)
            throw FieldError("denominator " + den.get_str() + " is not invertible in " + name());
        num *= inv;
    }
    mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), P.get_mpz_t());
    return mpq_class(r);
}

mpq_class Field::inv(const mpq_class& a) const {
    if (a == 0) throw FieldError("division by zero");
    if (p_ == 0) return 1 / a;
    mpz_class P(p_), r;
    mpz_class n = reduce(a).get_num();
    mpz_invert(r.get_mpz_t(), n.get_mpz_t(), P.get_mpz_t());
    return mpq_class(r);
}

mpq_class parse_rational(const std::string& text) {
    mpq_class x;
    if (text.empty() || x.set_str(text, 10) != 0) throw FieldError("not a rational: '" + text + "'");
    if (x.get_den() == 0) throw FieldError("zero denominator: '" + text + "'");
    x.canonicalize();
    return x;
}

std::string rational_string(const mpq_class& x) { return x.get_str(); }

}  // namespace krsl2
