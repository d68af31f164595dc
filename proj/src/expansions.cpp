#include "svt/expansions.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "svt/enumerate.hpp"
#include "svt/insertion.hpp"

namespace svt {

namespace {

void check_rows(const SkewShape& shape, const Flag& flag, int n)
{
    if (shape.rows() > n)
        throw std::invalid_argument("shape has more than n = " + std::to_string(n) + " rows");
    if (static_cast<int>(flag.size()) < shape.rows())
        throw std::invalid_argument("flag shorter than the shape");
}

Polynomial::Coeff sign_of(const Composition& a) { return total(a) % 2 ? -1 : 1; }

std::string labels_string(const BoxLabels& q)
{
    std::ostringstream os;
    for (const auto& [b, v] : q)
        os << "(" << b.row << "," << b.col << "):" << v << " ";
    return os.str();
}

Polynomial x_only(const Polynomial& p)
{
    if (p.nt() == 0)
        return p;
    Polynomial out(p.nx(), 0);
    for (const auto& [e, c] : p.terms())
        out.add_term(p.x_part(e), c);
    return out;
}

std::string difference(const Polynomial& lhs, const Polynomial& rhs)
{
    return "difference " + (lhs - rhs).to_string();
}

}  // namespace

Polynomial with_t(const Polynomial& f, const Composition& a, int n)
{
    if (f.nx() != n)
        throw std::invalid_argument("with_t: variable count mismatch");
    Polynomial out(n, n);
    Composition t = pad(a, n);
    if (static_cast<int>(t.size()) > n)
        throw std::invalid_argument("with_t: t exponent longer than n");
    for (const auto& [e, c] : f.terms()) {
        Polynomial::Exponent g(2 * n, 0);
        std::copy(e.begin(), e.begin() + n, g.begin());
        std::copy(t.begin(), t.end(), g.begin() + n);
        out.add_term(g, c);
    }
    return out;
}

Polynomial grothendieck_flagged(const SkewShape& shape, const Flag& flag, int n, Execution ex)
{
    check_rows(shape, flag, n);
    return svt_generating_function(enumerate_svt(shape, flag), n, ex);
}

Polynomial flagged_schur(const SkewShape& shape, const Flag& flag, int n)
{
    if (static_cast<int>(flag.size()) < shape.rows())
        throw std::invalid_argument("flag shorter than the shape");
    Polynomial p(n, 0);
    for (const auto& t : enumerate_ssyt(shape, flag))
        p.add_term(weight(t, n), 1);
    return p;
}

Polynomial stable_G(const Partition& lambda, int n, int degree_cap)
{
    Polynomial p(n, 0);
    if (lambda.length() > n)
        return p;
    SvtFilter filter;
    if (degree_cap >= 0) {
        if (degree_cap < lambda.size())
            return p;
        filter.max_total_excess = degree_cap - lambda.size();
    }
    for_each_svt(SkewShape(lambda), constant_flag(lambda.length(), n), filter, [&](const SetValuedTableau& t) {
        p.add_term(weight(t, n), total_excess(t) % 2 ? -1 : 1);
    });
    return p;
}

Polynomial dual_g(const Partition& lambda, int n)
{
    Polynomial p(n, 0);
    for (const auto& r : enumerate_rpp(SkewShape(lambda), constant_flag(lambda.length(), n)))
        p.add_term(rpp_weight(r, n), 1);
    return p;
}

Polynomial dual_g_flagged(const SkewShape& shape, const Flag& flag, int n, Execution ex)
{
    check_rows(shape, flag, n);
    return rpp_generating_function(enumerate_rpp(shape, flag), n, ex);
}

std::vector<SvtClass> classify_svt(const SkewShape& shape, const Flag& flag, int n,
                                   const std::optional<Composition>& e, Execution ex)
{
    check_rows(shape, flag, n);
    auto ts = enumerate_svt(shape, flag, e);
    auto keys = svt_keys(ts, flag, ex);
    std::vector<SvtClass> classes;
    std::map<std::string, std::size_t> index;
    for (std::size_t k = 0; k < ts.size(); ++k) {
        const auto& key = keys[k];
        std::string id = to_string(key.excess) + "|" + to_string(key.sigma) + "|" + labels_string(key.q) + "|" +
                         to_string(key.r_prime);
        auto [it, fresh] = index.try_emplace(id, classes.size());
        if (fresh) {
            SvtClass c;
            c.excess = key.excess;
            c.sigma = key.sigma;
            c.q = key.q;
            c.r_prime = key.r_prime;
            c.flag = key.flag;
            classes.push_back(std::move(c));
        }
        auto& c = classes[it->second];
        c.members.push_back(ts[k]);
        c.image.push_back(key.rectified);
    }
    for (auto& c : classes) {
        try {
            c.label = demazure_label(c.image, n);
        } catch (const NoKeyMatch& err) {
            throw IdentityViolation("class of " + to_string(c.members.front()) + " with R' = " +
                                    to_string(c.r_prime) + ": " + err.what());
        }
    }
    return classes;
}

std::string verify_class(const SvtClass& c, int n)
{
    std::set<SetValuedTableau, CanonicalLess> image(c.image.begin(), c.image.end());
    if (image.size() != c.image.size())
        return "Psi followed by rect is not injective on the class of " + to_string(c.members.front());
    int highest = 0;
    for (const auto& t : image) {
        bool top = true;
        for (int i = 1; i < n; ++i) {
            auto u = raising(t, i, n);
            if (!u)
                continue;
            top = false;
            if (!image.count(*u))
                return "image not closed under e_" + std::to_string(i) + " at " + to_string(t);
        }
        highest += top;
    }
    if (highest != 1)
        return std::to_string(highest) + " highest weight elements in the class of " + to_string(c.members.front());
    auto demazure = demazure_generate(sort_decreasing(c.label), key_word(c.label), n);
    if (std::vector<SetValuedTableau>(image.begin(), image.end()) != demazure)
        return "image differs from the Demazure crystal for " + to_string(c.label);
    return {};
}

std::vector<RppClass> classify_rpp(const SkewShape& shape, const Flag& flag, int n, Execution ex)
{
    check_rows(shape, flag, n);
    auto rs = enumerate_rpp(shape, flag);
    auto keys = rpp_keys(rs, ex);
    std::vector<RppClass> classes;
    std::vector<int> tops;
    std::map<std::string, std::size_t> index;
    for (std::size_t k = 0; k < rs.size(); ++k) {
        std::string id = to_string(keys[k].ceq) + "|" + to_string(keys[k].q);
        auto [it, fresh] = index.try_emplace(id, classes.size());
        if (fresh) {
            classes.push_back({keys[k].ceq, keys[k].q, {}, {}, {}});
            tops.push_back(0);
        }
        auto& c = classes[it->second];
        c.members.push_back(rs[k]);
        if (keys[k].yamanouchi) {
            c.highest = rs[k];
            ++tops[it->second];
        }
    }
    for (std::size_t k = 0; k < classes.size(); ++k) {
        auto& c = classes[k];
        if (tops[k] != 1)
            throw IdentityViolation("RPP class with Q = " + to_string(c.q) + " has " + std::to_string(tops[k]) +
                                    " Yamanouchi members");
        Polynomial ch(n, 0);
        for (const auto& r : c.members)
            ch.add_term(rpp_weight(r, n), 1);
        try {
            c.label = key_label(ch, c.q.shape.outer(), n);
        } catch (const NoKeyMatch& err) {
            throw IdentityViolation("RPP class with Q = " + to_string(c.q) + ": " + err.what());
        }
    }
    return classes;
}

KeyExpansion key_expansion_G(const SkewShape& shape, const Flag& flag, int n, Execution ex)
{
    KeyExpansion out;
    for (const auto& c : classify_svt(shape, flag, n, std::nullopt, ex))
        out[{pad(c.excess, n), c.label}] += sign_of(c.excess);
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    Polynomial lhs = grothendieck_flagged(shape, flag, n, ex);
    Polynomial rhs = assemble(out, n);
    if (lhs != rhs)
        throw IdentityViolation("key expansion of G for " + to_string(shape) + " flag " + to_string(flag) + ": " +
                                difference(lhs, rhs));
    return out;
}

KeyExpansion key_expansion_g(const SkewShape& shape, const Flag& flag, int n, Execution ex)
{
    KeyExpansion out;
    for (const auto& c : classify_rpp(shape, flag, n, ex))
        out[{pad(c.ceq, n), c.label}] += 1;
    Polynomial lhs = dual_g_flagged(shape, flag, n, ex);
    Polynomial rhs = assemble(out, n);
    if (lhs != rhs)
        throw IdentityViolation("key expansion of g for " + to_string(shape) + " flag " + to_string(flag) + ": " +
                                difference(lhs, rhs));
    return out;
}

Polynomial assemble(const KeyExpansion& k, int n)
{
    Polynomial p(n, n);
    for (const auto& [key, c] : k)
        p += with_t(key_polynomial(pad(key.second, n)), key.first, n) * c;
    return p;
}

std::vector<Compatible> compatible_tableaux(const SkewShape& shape, int n, Source src, Execution ex)
{
    std::vector<Compatible> out;
    Flag flag = constant_flag(shape.rows(), n);
    if (src == Source::svt) {
        for (const auto& c : classify_svt(shape, flag, n, std::nullopt, ex))
            out.push_back({c.r_prime, pad(c.excess, n), sign_of(c.excess)});
    } else {
        for (const auto& c : classify_rpp(shape, flag, n, ex))
            out.push_back({c.q, pad(c.ceq, n), 1});
    }
    return out;
}

Polynomial direct_function(const SkewShape& shape, int n, Source src, Execution ex)
{
    Flag flag = constant_flag(shape.rows(), n);
    return src == Source::svt ? grothendieck_flagged(shape, flag, n, ex) : dual_g_flagged(shape, flag, n, ex);
}

BasisExpansion schur_expansion(const std::vector<Compatible>& ts, int n)
{
    BasisExpansion out;
    for (const auto& t : ts)
        out[{pad(t.stat, n), t.tableau.shape.outer()}] += t.sign;
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

namespace {

struct Lookup {
    std::map<std::string, std::vector<const Compatible*>> by_tableau;
    std::set<std::size_t> sizes;
    int max_letter = 0;

    explicit Lookup(const std::vector<Compatible>& ts)
    {
        for (const auto& t : ts) {
            by_tableau[to_string(t.tableau)].push_back(&t);
            sizes.insert(static_cast<std::size_t>(t.tableau.shape.size()));
            max_letter = std::max(max_letter, svt::max_letter(t.tableau));
        }
    }

    void add(BasisExpansion& out, const Word& w, const Partition& nu, Polynomial::Coeff sign) const
    {
        if (!sizes.count(w.size()))
            return;
        auto it = by_tableau.find(to_string(rect(w)));
        if (it == by_tableau.end())
            return;
        for (const Compatible* t : it->second)
            out[{t->stat, nu}] += sign * t->sign;
    }
};

void check_schur(const SkewShape& shape, const std::vector<Compatible>& ts, const Polynomial& direct, int n)
{
    Polynomial rhs = assemble(schur_expansion(ts, n), Basis::schur, n);
    if (direct != rhs)
        throw IdentityViolation("tableau Schur expansion for " + to_string(shape) + ": " + difference(direct, rhs));
}

}  // namespace

BasisExpansion expand_in_g(const SkewShape& shape, int n, Source src, Execution ex)
{
    auto ts = compatible_tableaux(shape, n, src, ex);
    Polynomial direct = direct_function(shape, n, src, ex);
    check_schur(shape, ts, direct, n);
    Lookup look(ts);
    BasisExpansion out;
    for (std::size_t m : look.sizes) {
        int big = static_cast<int>(m);
        for (const auto& nu : partitions_up_to(big, std::max(look.max_letter, 0))) {
            SvtFilter filter;
            filter.max_total_excess = big - nu.size();
            for_each_svt(SkewShape(nu), constant_flag(nu.length(), look.max_letter), filter,
                         [&](const SetValuedTableau& s) {
                             if (nu.size() + total_excess(s) != big)
                                 return;
                             look.add(out, svt_reading_word(s), nu, total_excess(s) % 2 ? -1 : 1);
                         });
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    Polynomial rhs = assemble(out, Basis::g, n);
    if (direct != rhs)
        throw IdentityViolation("g-basis expansion for " + to_string(shape) + ": " + difference(direct, rhs));
    return out;
}

BasisExpansion expand_in_G(const SkewShape& shape, int n, Source src, int degree_cap, Execution ex)
{
    int cap = degree_cap < 0 ? shape.outer().size() + 4 : degree_cap;
    auto ts = compatible_tableaux(shape, n, src, ex);
    Polynomial direct = direct_function(shape, n, src, ex);
    check_schur(shape, ts, direct, n);
    Lookup look(ts);
    std::vector<Partition> shapes = partitions_up_to(cap, n);
    std::vector<BasisExpansion> parts(shapes.size());
    parallel_for(static_cast<long>(shapes.size()), ex, [&](long k) {
        const Partition& nu = shapes[k];
        if (nu.size() == 0) {
            look.add(parts[k], {}, nu, 1);
            return;
        }
        if (look.max_letter == 0)
            return;
        for (const auto& r : enumerate_rpp(SkewShape(nu), constant_flag(nu.length(), look.max_letter)))
            look.add(parts[k], rpp_reading_word(r), nu, 1);
    });
    BasisExpansion out;
    for (const auto& p : parts)
        for (const auto& [key, c] : p)
            out[key] += c;
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    Polynomial lhs = direct.truncate_x_degree(cap);
    Polynomial rhs = assemble(out, Basis::G, n, cap);
    if (lhs != rhs)
        throw IdentityViolation("G-basis expansion for " + to_string(shape) + " through degree " +
                                std::to_string(cap) + ": " + difference(lhs, rhs));
    return out;
}

Polynomial assemble(const BasisExpansion& b, Basis basis, int n, int degree_cap)
{
    Polynomial p(n, n);
    std::map<Partition, Polynomial> cache;
    for (const auto& [key, c] : b) {
        const Partition& nu = key.second;
        auto it = cache.find(nu);
        if (it == cache.end()) {
            Polynomial f = basis == Basis::schur ? schur_poly(nu, n)
                           : basis == Basis::g   ? dual_g(nu, n)
                                                 : stable_G(nu, n, degree_cap);
            it = cache.emplace(nu, x_only(f)).first;
        }
        p += with_t(it->second, key.first, n) * c;
    }
    return degree_cap >= 0 ? p.truncate_x_degree(degree_cap) : p;
}

}  // namespace svt
