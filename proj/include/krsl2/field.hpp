#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace krsl2 {

// Coefficient field: Q or F_p with p an odd prime. Elements are mpq_class
// values; over F_p they are kept as integers in [0, p).
class Field {
public:
    Field() = default;

    static Field rationals() { return Field(); }
    static Field prime(long p);

    bool is_rational() const { return p_ == 0; }
    long characteristic() const { return p_; }
    std::string name() const;

    // Bring an arbitrary rational into canonical form for this field.
    mpq_class reduce(const mpq_class& x) const;

    mpq_class add(const mpq_class& a, const mpq_class& b) const { return reduce(a + b); }
    mpq_class sub(const mpq_class& a, const mpq_class& b) const { return reduce(a - b); }
    mpq_class mul(const mpq_class& a, const mpq_class& b) const { return reduce(a * b); }
    mpq_class neg(const mpq_class& a) const { return reduce(-a); }
    mpq_class inv(const mpq_class& a) const;
    mpq_class div(const mpq_class& a, const mpq_class& b) const { return mul(a, inv(b)); }

    bool operator==(const Field& o) const { return p_ == o.p_; }
    bool operator!=(const Field& o) const { return p_ != o.p_; }

private:
    explicit Field(long p) : p_(p) {}
    long p_ = 0;
};

class FieldError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Parse "a/b" or "a" into an exact rational.
mpq_class parse_rational(const std::string& text);
std::string rational_string(const mpq_class& x);

}  // namespace krsl2
