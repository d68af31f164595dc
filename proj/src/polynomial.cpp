#include "svt/polynomial.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "svt/enumerate.hpp"

namespace svt {

Polynomial Polynomial::constant(int nx, int nt, Coeff c)
{
    Polynomial p(nx, nt);
    p.add_term(Exponent(nx + nt, 0), c);
    return p;
}

Polynomial Polynomial::monomial(const Composition& x, const Composition& t, Coeff c)
{
    return monomial(static_cast<int>(x.size()), static_cast<int>(t.size()), x, t, c);
}

Polynomial Polynomial::monomial(int nx, int nt, const Composition& x, const Composition& t, Coeff c)
{
    if (static_cast<int>(x.size()) > nx || static_cast<int>(t.size()) > nt)
        throw std::invalid_argument("monomial: exponent longer than the variable count");
    Polynomial p(nx, nt);
    Exponent e(nx + nt, 0);
    std::copy(x.begin(), x.end(), e.begin());
    std::copy(t.begin(), t.end(), e.begin() + nx);
    p.add_term(e, c);
    return p;
}

Polynomial::Coeff Polynomial::coefficient(const Exponent& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
}

void Polynomial::add_term(const Exponent& e, Coeff c)
{
    if (static_cast<int>(e.size()) != nx_ + nt_)
        throw std::invalid_argument("add_term: exponent length mismatch");
    if (c == 0)
        return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    if (o.nx_ != nx_ || o.nt_ != nt_)
        throw std::invalid_argument("polynomial variable sets differ");
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    if (o.nx_ != nx_ || o.nt_ != nt_)
        throw std::invalid_argument("polynomial variable sets differ");
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(Coeff c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_)
        v *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.nx_ != b.nx_ || a.nt_ != b.nt_)
        throw std::invalid_argument("polynomial variable sets differ");
    Polynomial p(a.nx_, a.nt_);
    Polynomial::Exponent e(a.nx_ + a.nt_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t k = 0; k < e.size(); ++k)
                e[k] = ea[k] + eb[k];
            p.add_term(e, ca * cb);
        }
    return p;
}

Polynomial Polynomial::widened(int nx, int nt) const
{
    if (nx < nx_ || nt < nt_)
        throw std::invalid_argument("widened: cannot drop variables");
    Polynomial p(nx, nt);
    for (const auto& [e, c] : terms_) {
        Exponent f(nx + nt, 0);
        std::copy(e.begin(), e.begin() + nx_, f.begin());
        std::copy(e.begin() + nx_, e.end(), f.begin() + nx);
        p.add_term(f, c);
    }
    return p;
}

Polynomial Polynomial::swap_x(int i) const
{
    if (i < 1 || i >= nx_)
        throw std::out_of_range("swap_x index");
    Polynomial p(nx_, nt_);
    for (const auto& [e0, c] : terms_) {
        auto e = e0;
        std::swap(e[i - 1], e[i]);
        p.add_term(e, c);
    }
    return p;
}

Polynomial Polynomial::truncate_x_degree(int d) const
{
    Polynomial p(nx_, nt_);
    for (const auto& [e, c] : terms_) {
        int deg = 0;
        for (int k = 0; k < nx_; ++k)
            deg += e[k];
        if (deg <= d)
            p.add_term(e, c);
    }
    return p;
}

Polynomial Polynomial::set_t(Coeff value) const
{
    Polynomial p(nx_, nt_);
    for (const auto& [e, c] : terms_) {
        Coeff f = c;
        for (int k = nx_; k < nx_ + nt_; ++k)
            for (int r = 0; r < e[k]; ++r)
                f *= value;
        Exponent g = e;
        std::fill(g.begin() + nx_, g.end(), 0);
        p.add_term(g, f);
    }
    return p;
}

std::map<Composition, Polynomial> Polynomial::split_by_t() const
{
    std::map<Composition, Polynomial> out;
    for (const auto& [e, c] : terms_) {
        auto [it, fresh] = out.try_emplace(t_part(e), Polynomial(nx_, 0));
        it->second.add_term(x_part(e), c);
    }
    return out;
}

std::string Polynomial::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Coeff a = c < 0 ? -c : c;
        os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
        first = false;
        std::ostringstream mono;
        bool any = false;
        for (int k = 0; k < nx_ + nt_; ++k) {
            if (!e[k])
                continue;
            mono << (any ? "*" : "") << (k < nx_ ? "x" : "t") << (k < nx_ ? k + 1 : k - nx_ + 1);
            if (e[k] > 1)
                mono << "^" << e[k];
            any = true;
        }
        if (!any)
            os << a;
        else if (a == 1)
            os << mono.str();
        else
            os << a << "*" << mono.str();
    }
    return os.str();
}

Polynomial demazure_op(const Polynomial& f, int i)
{
    int nx = f.nx();
    if (i < 1 || i >= nx)
        throw std::out_of_range("demazure_op: index out of range");
    int xi = i - 1;
    int xj = i;
    // numerator x_i f - x_{i+1} s_i f
    Polynomial num(nx, f.nt());
    Polynomial sf = f.swap_x(i);
    for (const auto& [e0, c] : f.terms()) {
        auto e = e0;
        ++e[xi];
        num.add_term(e, c);
    }
    for (const auto& [e0, c] : sf.terms()) {
        auto e = e0;
        ++e[xj];
        num.add_term(e, -c);
    }
    // coefficients of powers of x_i, each a polynomial without x_i
    std::map<int, Polynomial> by_deg;
    int top = 0;
    for (const auto& [e0, c] : num.terms()) {
        auto e = e0;
        int d = e[xi];
        e[xi] = 0;
        by_deg.try_emplace(d, Polynomial(nx, f.nt())).first->second.add_term(e, c);
        top = std::max(top, d);
    }
    auto times_xj = [&](const Polynomial& p) {
        Polynomial q(nx, f.nt());
        for (const auto& [e0, c] : p.terms()) {
            auto e = e0;
            ++e[xj];
            q.add_term(e, c);
        }
        return q;
    };
    // synthetic division by (x_i - x_{i+1})
    Polynomial result(nx, f.nt());
    Polynomial q(nx, f.nt());
    for (int d = top; d >= 1; --d) {
        Polynomial cd = by_deg.count(d) ? by_deg.at(d) : Polynomial(nx, f.nt());
        q = cd + times_xj(q);  // quotient coefficient of x_i^{d-1}
        for (const auto& [e0, c] : q.terms()) {
            auto e = e0;
            e[xi] += d - 1;
            result.add_term(e, c);
        }
    }
    Polynomial c0 = by_deg.count(0) ? by_deg.at(0) : Polynomial(nx, f.nt());
    if (!(c0 + times_xj(q)).is_zero())
        throw std::logic_error("demazure_op: nonzero remainder in exact division");
    return result;
}

Polynomial demazure_word(const Polynomial& f, const std::vector<int>& word)
{
    Polynomial p = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        p = demazure_op(p, *it);
    return p;
}

std::vector<int> key_word(const Composition& alpha, bool leftmost)
{
    Composition a = alpha;
    std::vector<int> word;
    int n = static_cast<int>(a.size());
    while (true) {
        int pick = -1;
        for (int k = 0; k + 1 < n; ++k)
            if (a[k] < a[k + 1]) {
                pick = k;
                if (leftmost)
                    break;
            }
        if (pick < 0)
            break;
        std::swap(a[pick], a[pick + 1]);
        word.push_back(pick + 1);
    }
    return word;
}

Polynomial key_polynomial(const Composition& alpha, const std::vector<int>& word)
{
    Composition lam = sort_decreasing(alpha).parts();
    lam = pad(lam, static_cast<int>(alpha.size()));
    Polynomial start = Polynomial::monomial(lam, {});
    // check the word carries alpha-dagger to alpha
    Composition a = lam;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        std::swap(a[*it - 1], a[*it]);
    if (a != alpha)
        throw std::invalid_argument("key_polynomial: word does not map the sorted composition to alpha");
    return demazure_word(start, word);
}

Polynomial key_polynomial(const Composition& alpha)
{
    static std::mutex mu;
    static std::map<Composition, Polynomial> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(alpha);
        if (it != cache.end())
            return it->second;
    }
    Polynomial p = key_polynomial(alpha, key_word(alpha));
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(alpha, p);
    return p;
}

std::map<Composition, Polynomial::Coeff> key_expand(const Polynomial& f)
{
    if (f.nt() != 0)
        throw std::invalid_argument("key_expand: polynomial must be in x only");
    std::map<Composition, Polynomial::Coeff> out;
    Polynomial rest = f;
    while (!rest.is_zero()) {
        const auto& [a, c] = *rest.terms().begin();  // lexicographically smallest exponent
        Composition alpha = a;
        Polynomial::Coeff coeff = c;
        Polynomial k = key_polynomial(alpha);
        if (k.terms().begin()->first != alpha || k.terms().begin()->second != 1)
            throw std::runtime_error("key_expand: key polynomial is not unitriangular at " + to_string(alpha));
        out[alpha] += coeff;
        rest -= k * coeff;
        if (!rest.is_zero() && !(alpha < rest.terms().begin()->first))
            throw std::runtime_error("key_expand: peeling did not advance");
    }
    return out;
}

Polynomial from_key_expansion(const std::map<Composition, Polynomial::Coeff>& c, int n)
{
    Polynomial p(n, 0);
    for (const auto& [alpha, k] : c)
        p += key_polynomial(pad(alpha, n)) * k;
    return p;
}

Polynomial schur_poly(const Partition& lambda, int n)
{
    Polynomial p(n, 0);
    if (lambda.length() > n)
        return p;
    for (const auto& t : enumerate_ssyt(SkewShape(lambda), constant_flag(lambda.length(), n)))
        p.add_term(weight(t, n), 1);
    return p;
}

}  // namespace svt
