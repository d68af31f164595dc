#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "svt/crystal.hpp"
#include "svt/parallel.hpp"
#include "svt/polynomial.hpp"
#include "svt/tableau.hpp"

namespace svt {

// A structural identity failed to hold on a concrete instance.
struct IdentityViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// sum over SVT(shape, flag) of (-1)^{|ex|} t^{ex} x^{wt}; x_1..x_n, t_1..t_n
Polynomial grothendieck_flagged(const SkewShape& shape, const Flag& flag, int n,
                                Execution ex = Execution::parallel);
// x only
Polynomial flagged_schur(const SkewShape& shape, const Flag& flag, int n);
// G_lambda(x_1..x_n) = RG_lambda(x; 1); terms of x-degree > degree_cap dropped when degree_cap >= 0
Polynomial stable_G(const Partition& lambda, int n, int degree_cap = -1);
// g_lambda(x_1..x_n), x only
Polynomial dual_g(const Partition& lambda, int n);
// sum over RPP(shape, flag) of t^{ceq} x^{wt}
Polynomial dual_g_flagged(const SkewShape& shape, const Flag& flag, int n, Execution ex = Execution::parallel);

struct SvtClass {
    Composition excess;
    SkewShape sigma;
    BoxLabels q;
    IntTableau r_prime;
    Flag flag;                              // evolved flag
    std::vector<SetValuedTableau> members;  // canonical order
    std::vector<SetValuedTableau> image;    // rect of the row word of Psi(S), same order as members
    Composition label;                      // kappa_label = character of the class
};

// Classes of SVT_e(shape, flag) keyed by (e, sigma, Q'', R'), all excesses when e is absent.
// Throws IdentityViolation if some class image is not a Demazure crystal.
std::vector<SvtClass> classify_svt(const SkewShape& shape, const Flag& flag, int n,
                                   const std::optional<Composition>& e = std::nullopt,
                                   Execution ex = Execution::parallel);
// Empty string when the class image is injective, closed under every e_i, has one
// highest weight element and equals B_w(lambda) for kappa_label; otherwise a diagnostic.
std::string verify_class(const SvtClass& c, int n);

struct RppClass {
    Composition ceq;
    IntTableau q;
    std::vector<IntTableau> members;
    IntTableau highest;   // the member with Yamanouchi row reading word
    Composition label;
};

std::vector<RppClass> classify_rpp(const SkewShape& shape, const Flag& flag, int n,
                                   Execution ex = Execution::parallel);

// (t exponent, gamma) -> coefficient of t^a kappa_gamma
using KeyExpansion = std::map<std::pair<Composition, Composition>, Polynomial::Coeff>;

KeyExpansion key_expansion_G(const SkewShape& shape, const Flag& flag, int n, Execution ex = Execution::parallel);
KeyExpansion key_expansion_g(const SkewShape& shape, const Flag& flag, int n, Execution ex = Execution::parallel);
Polynomial assemble(const KeyExpansion& k, int n);

// Compatible tableau with weight sign * t^stat.
struct Compatible {
    IntTableau tableau;
    Composition stat;
    Polynomial::Coeff sign;
};

enum class Source {
    svt,  // RG_{shape}(x; t): compatible tableaux of the SVT classes with flag (n,...,n)
    rpp,  // refined dual g: Burge recording tableaux of Yamanouchi RPPs
};

std::vector<Compatible> compatible_tableaux(const SkewShape& shape, int n, Source src,
                                            Execution ex = Execution::parallel);
// the generating function the compatible tableaux expand
Polynomial direct_function(const SkewShape& shape, int n, Source src, Execution ex = Execution::parallel);

enum class Basis { schur, G, g };

// (t exponent, nu) -> coefficient of t^a b_nu
using BasisExpansion = std::map<std::pair<Composition, Partition>, Polynomial::Coeff>;

// sum of wt(T) s_{sh(T)}
BasisExpansion schur_expansion(const std::vector<Compatible>& ts, int n);
// sum over SVT S of partition shape with rect(w(S)) compatible of (-1)^{|ex S|} wt g_{sh(S)};
// asserts equality with the direct function.
BasisExpansion expand_in_g(const SkewShape& shape, int n, Source src, Execution ex = Execution::parallel);
// sum over RPP R of partition shape, |sh R| <= degree_cap, with rect(w(R)) compatible of
// wt G_{sh(R)}; asserts equality through x-degree degree_cap (default |outer| + 4).
BasisExpansion expand_in_G(const SkewShape& shape, int n, Source src, int degree_cap = -1,
                           Execution ex = Execution::parallel);
// terms of x-degree > degree_cap dropped when degree_cap >= 0
Polynomial assemble(const BasisExpansion& b, Basis basis, int n, int degree_cap = -1);

// t^a f for an x-only polynomial f, as a polynomial in x_1..x_n, t_1..t_n
Polynomial with_t(const Polynomial& f, const Composition& a, int n);

}  // namespace svt
