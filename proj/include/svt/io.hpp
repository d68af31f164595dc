#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "svt/expansions.hpp"
#include "svt/insertion.hpp"

namespace svt {

using Json = nlohmann::json;

// {"outer":[...],"inner":[...],"cells":[[row,col,[entries...]],...]}
Json to_json(const SetValuedTableau& t);
Json to_json(const IntTableau& t);
SetValuedTableau svt_from_json(const Json& j);
// cells must be singletons and the result a valid RPP or SSYT (not checked here)
IntTableau int_tableau_from_json(const Json& j);
// [[row,col,label],...]
Json to_json(const BoxLabels& q);
BoxLabels labels_from_json(const Json& j);

// {"vars":["x1",...,"t1",...],"terms":[[[e1,...,ek],c],...]}
Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

Json to_json(const KeyExpansion& k);
Json to_json(const BasisExpansion& b, Basis basis);
Json to_json(const UncrowdRecord& rec, const std::vector<Flag>& flags);
Json to_json(const PsiResult& p);
Json to_json(const SvtClass& c);
Json to_json(const Biword& bw);

// Plain text and LaTeX renderings; an expansion of the constant 1 prints "1".
std::string format_text(const KeyExpansion& k);
std::string format_text(const BasisExpansion& b, Basis basis);
std::string format_latex(const KeyExpansion& k);
std::string format_latex(const BasisExpansion& b, Basis basis);

// Graphviz digraph: one node per element (labelled by its JSON), an edge x -> f_i(x)
// labelled i whenever f_i(x) is in the set. Nodes in canonical order.
std::string crystal_dot(const std::vector<SetValuedTableau>& elements, int n);

}  // namespace svt
