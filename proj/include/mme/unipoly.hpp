#ifndef MME_UNIPOLY_HPP
#define MME_UNIPOLY_HPP

#include <vector>

#include "mme/modulus.hpp"

namespace mme {

/// Dense univariate polynomial over Z/n. Normalized form trims trailing zero
/// coefficients; the zero polynomial has an empty coefficient vector and
/// degree() == -1 (the degree "-infinity" sentinel). Fixed-capacity Taylor
/// blocks are carried as raw coefficient vectors instead (see HermiteBlock).
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(PowerModulusPtr mod) : mod_(std::move(mod)) {}
    UniPoly(PowerModulusPtr mod, std::vector<Natural> coeffs) : mod_(std::move(mod)), c_(std::move(coeffs)) {
        for (auto& x : c_) x = mod_->reduce(x);
        trim();
    }

    const PowerModulusPtr& modulus() const { return mod_; }
    const std::vector<Natural>& coeffs() const { return c_; }
    int degree() const { return (int)c_.size() - 1; }
    bool is_zero() const { return c_.empty(); }

    Natural coeff(size_t i) const { return i < c_.size() ? c_[i] : Natural(0); }

    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    Natural eval(const Natural& x) const {
        Natural acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = mod_->add(mod_->mul(acc, x), c_[i]);
        return acc;
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        const auto& m = a.mod_ ? a.mod_ : b.mod_;
        std::vector<Natural> out(std::max(a.c_.size(), b.c_.size()), Natural(0));
        for (size_t i = 0; i < out.size(); ++i) out[i] = m->add(a.coeff(i), b.coeff(i));
        return UniPoly(m, std::move(out));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        const auto& m = a.mod_ ? a.mod_ : b.mod_;
        std::vector<Natural> out(std::max(a.c_.size(), b.c_.size()), Natural(0));
        for (size_t i = 0; i < out.size(); ++i) out[i] = m->sub(a.coeff(i), b.coeff(i));
        return UniPoly(m, std::move(out));
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        const auto& m = a.mod_ ? a.mod_ : b.mod_;
        if (a.is_zero() || b.is_zero()) return UniPoly(m);
        std::vector<Natural> out(a.c_.size() + b.c_.size() - 1, Natural(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j)
                out[i + j] = m->add(out[i + j], m->mul(a.c_[i], b.c_[j]));
        }
        return UniPoly(m, std::move(out));
    }

    UniPoly scaled(const Natural& k) const {
        std::vector<Natural> out(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) out[i] = mod_->mul(c_[i], k);
        return UniPoly(mod_, std::move(out));
    }

  private:
    PowerModulusPtr mod_;
    std::vector<Natural> c_;
};

/// f mod g by long division; g must be monic of degree >= 1.
UniPoly poly_mod(const UniPoly& f, const UniPoly& g);

/// Quotient and remainder of f by monic g (used by reconstruction checks).
std::pair<UniPoly, UniPoly> poly_divmod(const UniPoly& f, const UniPoly& g);

/// q with q(x) = p(x + c), by Pascal-triangle (Horner) convolution.
UniPoly taylor_shift(const UniPoly& p, const Natural& c);

/// j-th Hasse derivative of p: sum_i C(i, j) p_i x^(i-j).
UniPoly hasse_deriv_1d(const UniPoly& p, u64 j);

}  // namespace mme

#endif
