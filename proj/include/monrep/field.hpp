#pragma once

#include <cstdint>
#include <string>

#include "monrep/errors.hpp"

namespace monrep {

enum class FieldKind : std::uint8_t { prime, rational };

/// One coefficient.  In prime mode `den == 1` and `num` lies in [0, p).
/// In rational mode the fraction is normalized: gcd(|num|, den) = 1, den > 0.
/// Normalization makes operator== the correct equality in both modes.
struct Scalar {
    std::int64_t num = 0;
    std::int64_t den = 1;
    friend bool operator==(const Scalar&, const Scalar&) = default;
};

/// Runtime-selected exact coefficient field: F_p (p prime, default 101) or Q.
/// All arithmetic is exact; rational overflow throws instead of wrapping.
class Field {
public:
    static Field prime(std::int64_t p);
    static Field rationals();

    FieldKind kind() const { return kind_; }
    bool is_prime_field() const { return kind_ == FieldKind::prime; }
    std::int64_t char_p() const { return p_; }

    Scalar zero() const { return {0, 1}; }
    Scalar one() const { return {1, 1}; }
    Scalar from_int(std::int64_t n) const;
    Scalar from_fraction(std::int64_t num, std::int64_t den) const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;
    Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

    bool is_zero(const Scalar& a) const { return a.num == 0; }
    bool is_one(const Scalar& a) const { return a.num == 1 && a.den == 1; }

    std::string to_string(const Scalar& a) const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    Field(FieldKind k, std::int64_t p) : kind_(k), p_(p) {}

    FieldKind kind_;
    std::int64_t p_; // 0 in rational mode

    std::int64_t mod_reduce(std::int64_t n) const;
};

} // namespace monrep
