#include "svt/io.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace svt {

namespace {

template <class V, class Cell>
Json tableau_json(const Tableau<V>& t, Cell cell)
{
    Json cells = Json::array();
    for (const Box& b : t.shape.boxes())
        cells.push_back(Json::array({b.row, b.col, cell(t.at(b))}));
    return {{"outer", t.shape.outer().trimmed()}, {"inner", t.shape.inner().trimmed()}, {"cells", cells}};
}

SkewShape shape_from_json(const Json& j)
{
    auto outer = j.at("outer").get<std::vector<int>>();
    auto inner = j.contains("inner") ? j.at("inner").get<std::vector<int>>() : std::vector<int>{};
    return SkewShape(Partition(outer), Partition(inner));
}

template <class V, class Cell>
Tableau<V> tableau_from_json(const Json& j, Cell cell)
{
    Tableau<V> t{shape_from_json(j)};
    std::set<Box> seen;
    for (const auto& c : j.at("cells")) {
        Box b{c.at(0).get<int>(), c.at(1).get<int>()};
        if (!t.shape.contains(b))
            throw std::invalid_argument("tableau JSON: cell outside the shape");
        if (!seen.insert(b).second)
            throw std::invalid_argument("tableau JSON: repeated cell");
        t.at(b) = cell(c.at(2).get<std::vector<int>>());
    }
    if (static_cast<int>(seen.size()) != t.shape.size())
        throw std::invalid_argument("tableau JSON: missing cells");
    return t;
}

std::string t_monomial(const Composition& a, bool latex)
{
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i])
            continue;
        if (latex) {
            s += "t_{" + std::to_string(i + 1) + "}";
            if (a[i] > 1)
                s += "^{" + std::to_string(a[i]) + "}";
        } else {
            s += (s.empty() ? "" : "*") + std::string("t") + std::to_string(i + 1);
            if (a[i] > 1)
                s += "^" + std::to_string(a[i]);
        }
    }
    return s;
}

struct Term {
    Composition t;
    std::string symbol;  // empty for the constant 1
    Polynomial::Coeff c;
};

std::string render(const std::vector<Term>& terms, bool latex)
{
    if (terms.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& term : terms) {
        Polynomial::Coeff a = term.c < 0 ? -term.c : term.c;
        os << (first ? (term.c < 0 ? "-" : "") : (term.c < 0 ? " - " : " + "));
        first = false;
        std::string tm = t_monomial(term.t, latex);
        std::string body = tm;
        if (!term.symbol.empty())
            body += (tm.empty() || latex ? "" : "*") + term.symbol;
        if (body.empty())
            os << a;
        else if (a == 1)
            os << body;
        else
            os << a << (latex ? "" : "*") << body;
    }
    return os.str();
}

std::string index_string(const std::vector<int>& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

std::vector<Term> key_terms(const KeyExpansion& k, bool latex)
{
    std::vector<Term> out;
    for (const auto& [key, c] : k) {
        bool one = std::all_of(key.second.begin(), key.second.end(), [](int x) { return x == 0; });
        std::string sym = one ? "" : (latex ? "\\kappa_{" : "k") + index_string(key.second) + (latex ? "}" : "");
        out.push_back({key.first, sym, c});
    }
    return out;
}

std::string basis_symbol(Basis b)
{
    return b == Basis::schur ? "s" : b == Basis::G ? "G" : "g";
}

std::vector<Term> basis_terms(const BasisExpansion& e, Basis basis, bool latex)
{
    std::vector<Term> out;
    for (const auto& [key, c] : e) {
        auto parts = key.second.trimmed();
        std::string sym = parts.empty() ? ""
                          : latex       ? basis_symbol(basis) + "_{" + index_string(parts) + "}"
                                        : basis_symbol(basis) + index_string(parts);
        out.push_back({key.first, sym, c});
    }
    return out;
}

}  // namespace

Json to_json(const SetValuedTableau& t)
{
    return tableau_json(t, [](Mask m) { return letters_of(m); });
}

Json to_json(const IntTableau& t)
{
    return tableau_json(t, [](int v) { return std::vector<int>{v}; });
}

SetValuedTableau svt_from_json(const Json& j)
{
    return tableau_from_json<Mask>(j, [](const std::vector<int>& v) {
        if (v.empty())
            throw std::invalid_argument("tableau JSON: empty cell");
        for (int a : v)
            if (a < 1 || a > kMaxLetter)
                throw std::invalid_argument("tableau JSON: letter outside 1.." + std::to_string(kMaxLetter));
        return mask_of(v);
    });
}

IntTableau int_tableau_from_json(const Json& j)
{
    return tableau_from_json<int>(j, [](const std::vector<int>& v) {
        if (v.size() != 1 || v[0] < 1)
            throw std::invalid_argument("tableau JSON: expected one positive entry per cell");
        return v[0];
    });
}

Json to_json(const BoxLabels& q)
{
    Json out = Json::array();
    for (const auto& [b, v] : q)
        out.push_back(Json::array({b.row, b.col, v}));
    return out;
}

BoxLabels labels_from_json(const Json& j)
{
    BoxLabels q;
    for (const auto& c : j)
        q[{c.at(0).get<int>(), c.at(1).get<int>()}] = c.at(2).get<int>();
    return q;
}

Json to_json(const Polynomial& p)
{
    Json vars = Json::array();
    for (int i = 1; i <= p.nx(); ++i)
        vars.push_back("x" + std::to_string(i));
    for (int i = 1; i <= p.nt(); ++i)
        vars.push_back("t" + std::to_string(i));
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back(Json::array({e, c}));
    return {{"vars", vars}, {"terms", terms}};
}

Polynomial polynomial_from_json(const Json& j)
{
    int nx = 0, nt = 0;
    for (const auto& v : j.at("vars")) {
        auto s = v.get<std::string>();
        if (!s.empty() && s[0] == 'x')
            ++nx;
        else if (!s.empty() && s[0] == 't')
            ++nt;
        else
            throw std::invalid_argument("polynomial JSON: unknown variable " + s);
    }
    Polynomial p(nx, nt);
    for (const auto& term : j.at("terms"))
        p.add_term(term.at(0).get<std::vector<int>>(), term.at(1).get<Polynomial::Coeff>());
    return p;
}

Json to_json(const KeyExpansion& k)
{
    Json terms = Json::array();
    for (const auto& [key, c] : k)
        terms.push_back({{"t", key.first}, {"key", key.second}, {"coeff", c}});
    return {{"basis", "key"}, {"terms", terms}, {"text", format_text(k)}};
}

Json to_json(const BasisExpansion& b, Basis basis)
{
    Json terms = Json::array();
    for (const auto& [key, c] : b)
        terms.push_back({{"t", key.first}, {"partition", key.second.trimmed()}, {"coeff", c}});
    return {{"basis", basis_symbol(basis)}, {"terms", terms}, {"text", format_text(b, basis)}};
}

Json to_json(const UncrowdRecord& rec, const std::vector<Flag>& flags)
{
    Json chain = Json::array();
    for (const auto& t : rec.chain)
        chain.push_back(to_json(t));
    Json out = {{"sigma", {{"outer", rec.sigma.outer().trimmed()}, {"inner", rec.sigma.inner().trimmed()}}},
                {"recording", to_json(rec.recording)},
                {"straightened", to_json(rec.straightened)},
                {"chain", chain}};
    if (!flags.empty())
        out["flags"] = flags;
    return out;
}

Json to_json(const PsiResult& p)
{
    Json out = {{"tilde", to_json(p.tilde)}, {"recording", to_json(p.recording)}};
    if (!p.flag.empty())
        out["flag"] = p.flag;
    return out;
}

Json to_json(const SvtClass& c)
{
    Json members = Json::array();
    for (const auto& t : c.members)
        members.push_back(to_json(t));
    return {{"excess", c.excess},
            {"sigma", {{"outer", c.sigma.outer().trimmed()}, {"inner", c.sigma.inner().trimmed()}}},
            {"recording", to_json(c.q)},
            {"r_prime", to_json(c.r_prime)},
            {"flag", c.flag},
            {"label", c.label},
            {"size", c.members.size()},
            {"members", members}};
}

Json to_json(const Biword& bw) { return {{"top", bw.top}, {"bottom", bw.bottom}}; }

std::string format_text(const KeyExpansion& k) { return render(key_terms(k, false), false); }
std::string format_latex(const KeyExpansion& k) { return render(key_terms(k, true), true); }
std::string format_text(const BasisExpansion& b, Basis basis) { return render(basis_terms(b, basis, false), false); }
std::string format_latex(const BasisExpansion& b, Basis basis) { return render(basis_terms(b, basis, true), true); }

std::string crystal_dot(const std::vector<SetValuedTableau>& elements, int n)
{
    std::vector<SetValuedTableau> nodes = elements;
    std::sort(nodes.begin(), nodes.end(), CanonicalLess{});
    std::map<SetValuedTableau, std::size_t, CanonicalLess> id;
    for (std::size_t k = 0; k < nodes.size(); ++k)
        id.emplace(nodes[k], k);
    std::ostringstream os;
    os << "digraph crystal {\n";
    for (std::size_t k = 0; k < nodes.size(); ++k)
        os << "  n" << k << " [label=" << Json(to_json(nodes[k]).dump()).dump() << "];\n";
    for (std::size_t k = 0; k < nodes.size(); ++k)
        for (int i = 1; i < n; ++i) {
            auto y = lowering(nodes[k], i, n);
            if (!y)
                continue;
            auto it = id.find(*y);
            if (it != id.end())
                os << "  n" << k << " -> n" << it->second << " [label=\"" << i << "\"];\n";
        }
    os << "}\n";
    return os.str();
}

}  // namespace svt
