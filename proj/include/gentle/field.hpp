#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace gentle {

// Exact coefficient arithmetic: arbitrary-precision rationals in
// characteristic 0, modular arithmetic for a prime characteristic.
// Scalars are plain values; all operations go through the FieldConfig
// they were created with.
class FieldConfig {
public:
    FieldConfig() : p_(0) {}
    explicit FieldConfig(unsigned long characteristic) : p_(characteristic) {
        if (p_ != 0 && !is_prime(p_))
            throw std::invalid_argument("field characteristic must be 0 or a prime, got " +
                                        std::to_string(p_));
    }

    unsigned long characteristic() const { return p_; }
    bool rational() const { return p_ == 0; }

    static bool is_prime(unsigned long n) {
        if (n < 2) return false;
        for (unsigned long d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

private:
    unsigned long p_;
};

class Scalar {
public:
    Scalar() : res_(0) {}

    static Scalar from_int(const FieldConfig& f, long n) {
        Scalar s;
        if (f.rational()) {
            s.q_ = n;
        } else {
            long p = static_cast<long>(f.characteristic());
            long r = n % p;
            if (r < 0) r += p;
            s.res_ = static_cast<unsigned long>(r);
        }
        return s;
    }

    bool is_zero(const FieldConfig& f) const {
        return f.rational() ? q_ == 0 : res_ == 0;
    }

    std::string str(const FieldConfig& f) const {
        if (f.rational()) {
            mpq_class c = q_;
            c.canonicalize();
            return c.get_str();
        }
        return std::to_string(res_);
    }

    bool equals(const FieldConfig& f, const Scalar& o) const {
        return f.rational() ? q_ == o.q_ : res_ == o.res_;
    }

    friend Scalar add(const FieldConfig& f, const Scalar& a, const Scalar& b) {
        Scalar s;
        if (f.rational()) s.q_ = a.q_ + b.q_;
        else s.res_ = (a.res_ + b.res_) % f.characteristic();
        return s;
    }

    friend Scalar sub(const FieldConfig& f, const Scalar& a, const Scalar& b) {
        Scalar s;
        if (f.rational()) s.q_ = a.q_ - b.q_;
        else s.res_ = (a.res_ + f.characteristic() - b.res_) % f.characteristic();
        return s;
    }

    friend Scalar mul(const FieldConfig& f, const Scalar& a, const Scalar& b) {
        Scalar s;
        if (f.rational()) s.q_ = a.q_ * b.q_;
        else s.res_ = (a.res_ * b.res_) % f.characteristic();
        return s;
    }

    friend Scalar neg(const FieldConfig& f, const Scalar& a) {
        return sub(f, Scalar::from_int(f, 0), a);
    }

    friend Scalar inv(const FieldConfig& f, const Scalar& a) {
        if (a.is_zero(f)) throw std::domain_error("division by zero");
        Scalar s;
        if (f.rational()) {
            s.q_ = 1 / a.q_;
        } else {
            // Fermat: a^(p-2) mod p
            unsigned long p = f.characteristic();
            unsigned long base = a.res_, e = p - 2, acc = 1;
            while (e) {
                if (e & 1) acc = (acc * base) % p;
                base = (base * base) % p;
                e >>= 1;
            }
            s.res_ = acc;
        }
        return s;
    }

    friend Scalar div(const FieldConfig& f, const Scalar& a, const Scalar& b) {
        return mul(f, a, inv(f, b));
    }

private:
    mpq_class q_;
    unsigned long res_;
};

} // namespace gentle
