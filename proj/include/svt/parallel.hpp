#pragma once

#include <exception>
#include <vector>

#include "svt/polynomial.hpp"
#include "svt/tableau.hpp"

namespace svt {

enum class Execution { serial, parallel };

// SVT_THREADS, when set to a positive integer, overrides the OpenMP default.
int thread_count();

// Runs body(k) for k in [0, count); the first exception is rethrown on the calling thread.
template <class Body>
void parallel_for(long count, Execution ex, Body body)
{
    if (ex == Execution::serial) {
        for (long k = 0; k < count; ++k)
            body(k);
        return;
    }
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count())
    for (long k = 0; k < count; ++k) {
        try {
            body(k);
        } catch (...) {
#pragma omp critical(svt_error)
            if (!error)
                error = std::current_exception();
        }
    }
    if (error)
        std::rethrow_exception(error);
}

// sum of (-1)^{|ex|} t^{ex} x^{wt} over the tableaux; nt = n
Polynomial svt_generating_function(const std::vector<SetValuedTableau>& ts, int n, Execution ex);
// sum of t^{ceq} x^{wt} over reverse plane partitions; nt = n
Polynomial rpp_generating_function(const std::vector<IntTableau>& rs, int n, Execution ex);

struct SvtKey {
    Composition excess;
    SkewShape sigma;            // shape of Psi(S)
    BoxLabels q;                // recording tableau of Psi, composite coordinates
    IntTableau r_prime;         // Burge recording tableau of (b(sigma); r_{Psi(S)})
    SetValuedTableau rectified; // rect(r_{Psi(S)})
    Flag flag;                  // evolved flag (empty if flag is empty)
};

SvtKey svt_key(const SetValuedTableau& s, const Flag& flag);
std::vector<SvtKey> svt_keys(const std::vector<SetValuedTableau>& ts, const Flag& flag, Execution ex);

struct RppKey {
    Composition ceq;
    IntTableau q;   // Burge recording tableau of (h(R); r_R)
    bool yamanouchi;
};

RppKey rpp_key(const IntTableau& r);
std::vector<RppKey> rpp_keys(const std::vector<IntTableau>& rs, Execution ex);

}  // namespace svt
