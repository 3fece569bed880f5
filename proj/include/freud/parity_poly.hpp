#pragma once

#include <stdexcept>
#include <vector>

namespace freud {

// Polynomial with all exponents congruent to parity mod 2, stored
// compressed: c_[j] is the coefficient of x^(2j+parity). The symmetric
// weight keeps every polynomial in this project parity-pure, so mixed
// parity in an addition is a bug and throws.
template <typename Scalar>
class ParityPoly {
public:
    ParityPoly() : parity_(0) {}
    ParityPoly(int parity, std::vector<Scalar> c) : parity_(parity), c_(std::move(c)) {
        if (parity_ != 0 && parity_ != 1) throw std::invalid_argument("ParityPoly: parity 0|1");
    }

    static ParityPoly one() { return ParityPoly(0, {Scalar(1)}); }
    static ParityPoly monomial(int k) {
        std::vector<Scalar> c(static_cast<size_t>(k / 2) + 1, Scalar(0));
        c.back() = Scalar(1);
        return ParityPoly(k % 2, std::move(c));
    }
    static ParityPoly zero(int parity) { return ParityPoly(parity, {}); }

    int parity() const { return parity_; }
    bool is_zero() const {
        for (const auto& v : c_)
            if (v != 0) return false;
        return true;
    }
    int degree() const { return c_.empty() ? -1 : 2 * (static_cast<int>(c_.size()) - 1) + parity_; }
    size_t terms() const { return c_.size(); }
    const Scalar& c(size_t j) const { return c_[j]; }
    Scalar& c(size_t j) { return c_[j]; }
    const std::vector<Scalar>& compressed() const { return c_; }

    // Coefficient of x^k, zero when k has the wrong parity.
    Scalar coeff_x(int k) const {
        if (k < 0 || k % 2 != parity_) return Scalar(0);
        size_t j = static_cast<size_t>(k / 2);
        return j < c_.size() ? c_[j] : Scalar(0);
    }

    ParityPoly& operator+=(const ParityPoly& o) {
        require_same_parity(o);
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
        for (size_t j = 0; j < o.c_.size(); ++j) c_[j] += o.c_[j];
        return *this;
    }
    ParityPoly& operator-=(const ParityPoly& o) {
        require_same_parity(o);
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
        for (size_t j = 0; j < o.c_.size(); ++j) c_[j] -= o.c_[j];
        return *this;
    }
    friend ParityPoly operator+(ParityPoly a, const ParityPoly& b) { return a += b; }
    friend ParityPoly operator-(ParityPoly a, const ParityPoly& b) { return a -= b; }

    ParityPoly& operator*=(const Scalar& s) {
        for (auto& v : c_) v *= s;
        return *this;
    }
    friend ParityPoly operator*(ParityPoly a, const Scalar& s) { return a *= s; }
    friend ParityPoly operator*(const Scalar& s, ParityPoly a) { return a *= s; }

    friend ParityPoly operator*(const ParityPoly& a, const ParityPoly& b) {
        if (a.c_.empty() || b.c_.empty()) return zero((a.parity_ + b.parity_) % 2);
        int shift = (a.parity_ == 1 && b.parity_ == 1) ? 1 : 0;
        ParityPoly r((a.parity_ + b.parity_) % 2,
                     std::vector<Scalar>(a.c_.size() + b.c_.size() - 1 + shift, Scalar(0)));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j + static_cast<size_t>(shift)] += a.c_[i] * b.c_[j];
        return r;
    }

    // Multiplication by x (parity flips).
    ParityPoly mul_x() const {
        if (parity_ == 0) {
            // x * x^(2j) = x^(2j+1): same compressed vector, odd.
            return ParityPoly(1, c_);
        }
        // x * x^(2j+1) = x^(2j+2): the x^0 slot is vacated.
        std::vector<Scalar> c(c_.size() + 1, Scalar(0));
        for (size_t j = 0; j < c_.size(); ++j) c[j + 1] = c_[j];
        return ParityPoly(0, std::move(c));
    }

    // Exact division by x; even input requires a zero constant term.
    ParityPoly div_x() const {
        if (parity_ == 1) return ParityPoly(0, c_);
        if (!c_.empty() && c_[0] != 0)
            throw std::logic_error("ParityPoly::div_x: nonzero constant term");
        std::vector<Scalar> c(c_.empty() ? 0 : c_.size() - 1);
        for (size_t j = 1; j < c_.size(); ++j) c[j - 1] = c_[j];
        return ParityPoly(1, std::move(c));
    }

    // Formal d/dx (parity flips).
    ParityPoly derivative() const {
        if (parity_ == 1) {
            std::vector<Scalar> c(c_.size());
            for (size_t j = 0; j < c_.size(); ++j) c[j] = Scalar(static_cast<int>(2 * j + 1)) * c_[j];
            return ParityPoly(0, std::move(c));
        }
        std::vector<Scalar> c(c_.size() > 1 ? c_.size() - 1 : 0);
        for (size_t j = 1; j < c_.size(); ++j) c[j - 1] = Scalar(static_cast<int>(2 * j)) * c_[j];
        return ParityPoly(1, std::move(c));
    }

    Scalar eval(const Scalar& x) const {
        if (c_.empty()) return Scalar(0);
        Scalar u = x * x, acc = c_.back();
        for (size_t j = c_.size() - 1; j-- > 0;) acc = acc * u + c_[j];
        return parity_ == 1 ? acc * x : acc;
    }

    Scalar max_abs_coeff() const {
        Scalar m(0);
        for (const auto& v : c_) {
            Scalar a = abs(v);
            if (a > m) m = a;
        }
        return m;
    }

    // Full coefficient vector c_0..c_degree in x.
    std::vector<Scalar> to_dense() const {
        int d = degree();
        std::vector<Scalar> out(static_cast<size_t>(d < 0 ? 0 : d + 1), Scalar(0));
        for (size_t j = 0; j < c_.size(); ++j) out[2 * j + static_cast<size_t>(parity_)] = c_[j];
        return out;
    }

private:
    void require_same_parity(const ParityPoly& o) const {
        if (parity_ != o.parity_)
            throw std::logic_error("ParityPoly: parity mismatch in addition");
    }

    int parity_;
    std::vector<Scalar> c_;
};

// Plain dense polynomial (low to high), for the half-line side where
// parity is absent.
template <typename Scalar>
class DensePoly {
public:
    DensePoly() = default;
    explicit DensePoly(std::vector<Scalar> c) : c_(std::move(c)) {}
    static DensePoly one() { return DensePoly({Scalar(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Scalar>& coeffs() const { return c_; }
    const Scalar& operator[](size_t j) const { return c_[j]; }
    Scalar at_or_zero(size_t j) const { return j < c_.size() ? c_[j] : Scalar(0); }

    Scalar eval(const Scalar& x) const {
        if (c_.empty()) return Scalar(0);
        Scalar acc = c_.back();
        for (size_t j = c_.size() - 1; j-- > 0;) acc = acc * x + c_[j];
        return acc;
    }

    DensePoly& operator-=(const DensePoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
        for (size_t j = 0; j < o.c_.size(); ++j) c_[j] -= o.c_[j];
        return *this;
    }
    friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }
    DensePoly& operator*=(const Scalar& s) {
        for (auto& v : c_) v *= s;
        return *this;
    }
    friend DensePoly operator*(const Scalar& s, DensePoly a) { return a *= s; }

    // (x - a) * this.
    DensePoly shift_multiply(const Scalar& a) const {
        std::vector<Scalar> c(c_.size() + 1, Scalar(0));
        for (size_t j = 0; j < c_.size(); ++j) {
            c[j + 1] += c_[j];
            c[j] -= a * c_[j];
        }
        return DensePoly(std::move(c));
    }

    // this / x, returning the dropped constant term through `remainder`.
    DensePoly div_x(Scalar& remainder) const {
        remainder = c_.empty() ? Scalar(0) : c_[0];
        std::vector<Scalar> c(c_.size() > 1 ? c_.size() - 1 : 0);
        for (size_t j = 1; j < c_.size(); ++j) c[j - 1] = c_[j];
        return DensePoly(std::move(c));
    }

    // q(x^2) as an even ParityPoly; x*q(x^2) as an odd one.
    ParityPoly<Scalar> substitute_x2() const { return ParityPoly<Scalar>(0, c_); }
    ParityPoly<Scalar> x_times_substitute_x2() const { return ParityPoly<Scalar>(1, c_); }

private:
    std::vector<Scalar> c_;
};

}  // namespace freud
