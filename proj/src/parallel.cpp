#include "svt/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <stdexcept>

#include "svt/insertion.hpp"

namespace svt {

int thread_count()
{
    if (const char* env = std::getenv("SVT_THREADS")) {
        int k = std::atoi(env);
        if (k > 0)
            return k;
    }
    return omp_get_max_threads();
}

namespace {

Polynomial::Exponent exponent(const Composition& x, const Composition& t, int n)
{
    if (static_cast<int>(x.size()) > n || static_cast<int>(t.size()) > n)
        throw std::invalid_argument("generating function: statistic longer than n");
    Polynomial::Exponent e(2 * n, 0);
    std::copy(x.begin(), x.end(), e.begin());
    std::copy(t.begin(), t.end(), e.begin() + n);
    return e;
}

template <class T, class Term>
Polynomial accumulate(const std::vector<T>& items, int n, Execution ex, Term term)
{
    Polynomial total(n, n);
    if (ex == Execution::serial) {
        for (const auto& x : items) {
            auto [e, c] = term(x);
            total.add_term(e, c);
        }
        return total;
    }
    int threads = thread_count();
    std::vector<Polynomial> partial(threads, Polynomial(n, n));
    const long count = static_cast<long>(items.size());
    // static blocks per thread; partial sums merge in thread order
    parallel_for(threads, ex, [&](long w) {
        long lo = count * w / threads, hi = count * (w + 1) / threads;
        for (long k = lo; k < hi; ++k) {
            auto [e, c] = term(items[k]);
            partial[w].add_term(e, c);
        }
    });
    for (const auto& p : partial)
        total += p;
    return total;
}

}  // namespace

Polynomial svt_generating_function(const std::vector<SetValuedTableau>& ts, int n, Execution ex)
{
    return accumulate(ts, n, ex, [n](const SetValuedTableau& t) {
        Composition e = excess(t);
        Polynomial::Coeff sign = total(e) % 2 ? -1 : 1;
        return std::pair{exponent(weight(t, n), e, n), sign};
    });
}

Polynomial rpp_generating_function(const std::vector<IntTableau>& rs, int n, Execution ex)
{
    return accumulate(rs, n, ex, [n](const IntTableau& r) {
        return std::pair{exponent(rpp_weight(r, n), ceq(r), n), Polynomial::Coeff{1}};
    });
}

SvtKey svt_key(const SetValuedTableau& s, const Flag& flag)
{
    SvtKey k;
    k.excess = excess(s);
    PsiResult p = psi(s, flag);
    k.sigma = p.tilde.shape;
    k.q = std::move(p.recording);
    k.flag = std::move(p.flag);
    Word r = row_reading_word(p.tilde);
    auto [big_p, big_q] = burge(Biword{b_word(k.sigma), r});
    k.r_prime = std::move(big_q);
    k.rectified = to_svt(big_p);
    return k;
}

std::vector<SvtKey> svt_keys(const std::vector<SetValuedTableau>& ts, const Flag& flag, Execution ex)
{
    std::vector<SvtKey> out(ts.size());
    parallel_for(static_cast<long>(ts.size()), ex, [&](long k) { out[k] = svt_key(ts[k], flag); });
    return out;
}

RppKey rpp_key(const IntTableau& r)
{
    auto [word, heights] = rpp_row_reading(r);
    auto [p, q] = burge(Biword{heights, word});
    return {ceq(r), std::move(q), is_yamanouchi(word)};
}

std::vector<RppKey> rpp_keys(const std::vector<IntTableau>& rs, Execution ex)
{
    std::vector<RppKey> out(rs.size());
    parallel_for(static_cast<long>(rs.size()), ex, [&](long k) { out[k] = rpp_key(rs[k]); });
    return out;
}

}  // namespace svt
