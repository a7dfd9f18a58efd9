#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "ratschur/rational.hpp"

namespace ratschur {

/// Dense univariate polynomial in x over the rationals, no trailing zeros.
class Poly {
public:
    Poly() = default;
    explicit Poly(Rat c) {
        if (c != 0) coeffs_.push_back(std::move(c));
    }

    static Poly monomial(int deg, Rat c = Rat(1)) {
        Poly p;
        if (c != 0) {
            p.coeffs_.assign(static_cast<size_t>(deg) + 1, Rat(0));
            p.coeffs_.back() = std::move(c);
        }
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 when zero

    Rat coeff(int d) const {
        return d >= 0 && d < static_cast<int>(coeffs_.size())
                   ? coeffs_[static_cast<size_t>(d)]
                   : Rat(0);
    }

    Rat eval(const Rat& x) const {
        Rat out(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) out = out * x + *it;
        return out;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly out;
        out.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i) out.coeffs_[i] += a.coeffs_[i];
        for (size_t i = 0; i < b.coeffs_.size(); ++i) out.coeffs_[i] += b.coeffs_[i];
        out.trim();
        return out;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly out;
        if (a.is_zero() || b.is_zero()) return out;
        out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i)
            for (size_t j = 0; j < b.coeffs_.size(); ++j)
                out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        out.trim();
        return out;
    }

    bool operator==(const Poly&) const = default;

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int d = degree(); d >= 0; --d) {
            const Rat& c = coeffs_[static_cast<size_t>(d)];
            if (c == 0) continue;
            if (!first) os << " + ";
            first = false;
            if (d == 0 || c != 1) os << rat_str(c);
            if (d > 0) {
                if (c != 1) os << '*';
                os << 'x';
                if (d > 1) os << '^' << d;
            }
        }
        return os.str();
    }

private:
    std::vector<Rat> coeffs_;

    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
};

}  // namespace ratschur
