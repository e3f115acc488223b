#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gordonlab {

using Integer = boost::multiprecision::cpp_int;

/// Formal power series in q with exact integer coefficients, known through
/// degree trunc(). Arithmetic truncates to the smaller of the operands'
/// truncation orders; equality is exact (same order, same coefficients).
class TruncatedSeries {
public:
    explicit TruncatedSeries(int trunc) : trunc_(trunc), coeffs_(check_order(trunc) + 1) {}

    static TruncatedSeries one(int trunc) {
        TruncatedSeries s(trunc);
        s.coeffs_[0] = 1;
        return s;
    }

    /// c * q^degree (zero series when degree exceeds the truncation order).
    static TruncatedSeries monomial(int trunc, int degree, Integer c = 1) {
        if (degree < 0) throw std::invalid_argument("monomial degree must be >= 0");
        TruncatedSeries s(trunc);
        if (degree <= trunc) s.coeffs_[static_cast<std::size_t>(degree)] = std::move(c);
        return s;
    }

    static TruncatedSeries from_coeffs(std::vector<Integer> coeffs) {
        if (coeffs.empty()) throw std::invalid_argument("coefficient list must be nonempty");
        TruncatedSeries s(static_cast<int>(coeffs.size()) - 1);
        s.coeffs_ = std::move(coeffs);
        return s;
    }

    int trunc() const { return trunc_; }
    const std::vector<Integer>& coeffs() const { return coeffs_; }

    const Integer& coeff(int n) const {
        if (n < 0 || n > trunc_) throw std::out_of_range("coefficient index outside truncation order");
        return coeffs_[static_cast<std::size_t>(n)];
    }

    void set_coeff(int n, Integer value) {
        if (n < 0 || n > trunc_) throw std::out_of_range("coefficient index outside truncation order");
        coeffs_[static_cast<std::size_t>(n)] = std::move(value);
    }

    void add_to_coeff(int n, const Integer& value) {
        if (n < 0 || n > trunc_) throw std::out_of_range("coefficient index outside truncation order");
        coeffs_[static_cast<std::size_t>(n)] += value;
    }

    /// Forget coefficients above new_trunc (new_trunc <= trunc()).
    TruncatedSeries restricted(int new_trunc) const {
        if (new_trunc < 0 || new_trunc > trunc_)
            throw std::invalid_argument("restricted: order must lie in [0, trunc]");
        TruncatedSeries s(new_trunc);
        std::copy(coeffs_.begin(), coeffs_.begin() + new_trunc + 1, s.coeffs_.begin());
        return s;
    }

    bool operator==(const TruncatedSeries&) const = default;

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries s(std::min(a.trunc_, b.trunc_));
        for (int n = 0; n <= s.trunc_; ++n) s.coeffs_[n] = a.coeff(n) + b.coeff(n);
        return s;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries s(std::min(a.trunc_, b.trunc_));
        for (int n = 0; n <= s.trunc_; ++n) s.coeffs_[n] = a.coeff(n) - b.coeff(n);
        return s;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries s(std::min(a.trunc_, b.trunc_));
        for (int u = 0; u <= s.trunc_; ++u) {
            if (a.coeff(u) == 0) continue;
            for (int v = 0; u + v <= s.trunc_; ++v)
                if (b.coeff(v) != 0) s.coeffs_[u + v] += a.coeff(u) * b.coeff(v);
        }
        return s;
    }

    std::string to_string() const {
        std::ostringstream out;
        bool first = true;
        for (int n = 0; n <= trunc_; ++n) {
            if (coeffs_[n] == 0) continue;
            out << (first ? "" : " ") << (coeffs_[n] > 0 && !first ? "+" : "") << coeffs_[n];
            if (n > 0) out << "*q^" << n;
            first = false;
        }
        if (first) out << "0";
        out << " + O(q^" << trunc_ + 1 << ")";
        return out.str();
    }

private:
    static int check_order(int trunc) {
        if (trunc < 0) throw std::invalid_argument("truncation order must be >= 0");
        return trunc;
    }

    int trunc_;
    std::vector<Integer> coeffs_;
};

/// a * (1 - q^k), k >= 1.
inline TruncatedSeries mul_one_minus_qk(const TruncatedSeries& a, int k) {
    if (k < 1) throw std::invalid_argument("exponent must be >= 1");
    TruncatedSeries s(a.trunc());
    for (int n = 0; n <= a.trunc(); ++n)
        s.set_coeff(n, n >= k ? a.coeff(n) - a.coeff(n - k) : a.coeff(n));
    return s;
}

/// a / (1 - q^k), k >= 1 — the only division supported; always exact.
inline TruncatedSeries mul_inv_one_minus_qk(const TruncatedSeries& a, int k) {
    if (k < 1) throw std::invalid_argument("exponent must be >= 1");
    TruncatedSeries s(a.trunc());
    for (int n = 0; n <= a.trunc(); ++n)
        s.set_coeff(n, n >= k ? a.coeff(n) + s.coeff(n - k) : a.coeff(n));
    return s;
}

/// a * q^k (coefficients pushed past the truncation order are dropped).
inline TruncatedSeries shifted(const TruncatedSeries& a, int k) {
    if (k < 0) throw std::invalid_argument("shift must be >= 0");
    TruncatedSeries s(a.trunc());
    for (int n = k; n <= a.trunc(); ++n) s.set_coeff(n, a.coeff(n - k));
    return s;
}

}  // namespace gordonlab
