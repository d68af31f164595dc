#pragma once

#include <string>
#include <vector>

#include "svt/insertion.hpp"
#include "svt/tableau.hpp"

namespace svt::test {

using Cells = std::vector<std::vector<std::vector<int>>>;

// rows[i][k] is the k-th cell (left to right) of row i+1
inline SetValuedTableau svt_of(const SkewShape& shape, const Cells& rows)
{
    SetValuedTableau t{shape};
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t k = 0; k < rows[i].size(); ++k)
            t.rows[i][k] = mask_of(rows[i][k]);
    return t;
}

inline IntTableau int_of(const SkewShape& shape, const std::vector<std::vector<int>>& rows)
{
    IntTableau t{shape};
    for (std::size_t i = 0; i < rows.size(); ++i)
        t.rows[i] = rows[i];
    return t;
}

inline std::string word_string(const Word& w)
{
    std::string s;
    for (int x : w)
        s += std::to_string(x);
    return s;
}

inline Polynomial x_poly(int n, const std::vector<std::pair<Composition, Polynomial::Coeff>>& terms)
{
    Polynomial p(n, 0);
    for (const auto& [e, c] : terms)
        p.add_term(e, c);
    return p;
}

}  // namespace svt::test
