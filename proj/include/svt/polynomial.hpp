#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "svt/shape.hpp"

namespace svt {

// Exact integer polynomial in x_1..x_nx and t_1..t_nt. Exponent vectors have
// length nx + nt (x exponents first). Zero coefficients are never stored.
class Polynomial {
public:
    using Exponent = std::vector<int>;
    using Coeff = std::int64_t;

    Polynomial() = default;
    Polynomial(int nx, int nt) : nx_(nx), nt_(nt) {}

    static Polynomial constant(int nx, int nt, Coeff c);
    static Polynomial monomial(const Composition& x, const Composition& t, Coeff c = 1);
    static Polynomial monomial(int nx, int nt, const Composition& x, const Composition& t, Coeff c = 1);

    int nx() const { return nx_; }
    int nt() const { return nt_; }
    const std::map<Exponent, Coeff>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Coeff coefficient(const Exponent& e) const;

    void add_term(const Exponent& e, Coeff c);
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(Coeff c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, Coeff c) { return a *= c; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

    // same terms viewed with more variables (padding exponents with zeros)
    Polynomial widened(int nx, int nt) const;
    // x_i <-> x_{i+1}, 1-based
    Polynomial swap_x(int i) const;
    // terms of total x-degree <= d
    Polynomial truncate_x_degree(int d) const;
    // substitute t_j = value for every j
    Polynomial set_t(Coeff value) const;
    // t-exponent -> x-only polynomial (nt = 0)
    std::map<Composition, Polynomial> split_by_t() const;
    // x-part exponent of a term
    Composition x_part(const Exponent& e) const { return Composition(e.begin(), e.begin() + nx_); }
    Composition t_part(const Exponent& e) const { return Composition(e.begin() + nx_, e.end()); }

    std::string to_string() const;

private:
    int nx_ = 0;
    int nt_ = 0;
    std::map<Exponent, Coeff> terms_;
};

// Demazure operator T_i f = (x_i f - x_{i+1} s_i f) / (x_i - x_{i+1}),
// computed by exact synthetic division (remainder asserted zero).
Polynomial demazure_op(const Polynomial& f, int i);
// Applies T_{w_1} T_{w_2} ... T_{w_k} (rightmost first).
Polynomial demazure_word(const Polynomial& f, const std::vector<int>& word);

// kappa_alpha in n = alpha.size() x-variables.
Polynomial key_polynomial(const Composition& alpha);
// A reduced word w_1..w_k with alpha = s_{w_1}...s_{w_k} alpha-dagger;
// leftmost=false picks the rightmost ascent at each step (a second word).
std::vector<int> key_word(const Composition& alpha, bool leftmost = true);
Polynomial key_polynomial(const Composition& alpha, const std::vector<int>& word);

// f = sum c_alpha kappa_alpha for f in x only.
std::map<Composition, Polynomial::Coeff> key_expand(const Polynomial& f);
Polynomial from_key_expansion(const std::map<Composition, Polynomial::Coeff>& c, int n);

// Schur polynomial s_lambda(x_1..x_n) by SSYT enumeration.
Polynomial schur_poly(const Partition& lambda, int n);

}  // namespace svt
