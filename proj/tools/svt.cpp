// svt: command-line front end for the set-valued tableau library.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "svt/checks.hpp"
#include "svt/enumerate.hpp"
#include "svt/expansions.hpp"
#include "svt/insertion.hpp"
#include "svt/io.hpp"

using namespace svt;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ShapeArgs {
    std::vector<int> outer{0};
    std::vector<int> inner;
    std::vector<int> flag;
    int n = 0;

    void add_to(CLI::App* app)
    {
        app->add_option("--outer", outer, "outer partition, comma separated")->delimiter(',')->required();
        app->add_option("--inner", inner, "inner partition, comma separated")->delimiter(',');
        app->add_option("--flag", flag, "row bounds, comma separated (default n,...,n)")->delimiter(',');
        app->add_option("--n", n, "number of x and t variables (default: rows of outer, at least 1)");
    }

    SkewShape shape() const
    {
        Partition lam(outer), mu(inner);
        for (int i = 0; i < std::max(lam.length(), mu.length()); ++i)
            if (mu[i] > lam[i])
                throw UsageError("inner partition is not contained in the outer partition");
        return SkewShape(lam, mu);
    }

    int vars() const { return n > 0 ? n : std::max(shape().rows(), 1); }

    Flag resolved_flag() const
    {
        int rows = shape().rows();
        if (flag.empty())
            return constant_flag(std::max(rows, 1), vars());
        if (!is_flag(flag))
            throw UsageError("flag must be weakly increasing with positive entries");
        if (static_cast<int>(flag.size()) < rows)
            throw UsageError("flag has fewer entries than the shape has rows");
        return flag;
    }
};

Json read_json(const std::string& path)
{
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path);
        if (!in)
            throw UsageError("cannot open " + path);
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw UsageError(std::string("invalid JSON: ") + e.what());
    }
}

// {"tableau": ..., "flag": [...]} or a bare tableau.
std::pair<SetValuedTableau, Flag> read_svt_input(const std::string& path)
{
    Json j = read_json(path);
    Flag flag;
    if (j.contains("tableau")) {
        if (j.contains("flag"))
            flag = j.at("flag").get<Flag>();
        j = j.at("tableau");
    }
    auto t = svt_from_json(j);
    if (!is_valid_svt(t))
        throw UsageError("input is not a semistandard set-valued tableau");
    if (!flag.empty() && (!is_flag(flag) || static_cast<int>(flag.size()) < t.shape.rows() || !respects_flag(t, flag)))
        throw UsageError("input tableau does not respect the given flag");
    return {t, flag};
}

Source parse_source(const std::string& f)
{
    if (f == "G")
        return Source::svt;
    if (f == "g")
        return Source::rpp;
    throw UsageError("--function must be G or g");
}

void emit(const std::string& format, const Json& json, const std::string& text, const std::string& latex)
{
    if (format == "json")
        std::cout << json.dump(2) << "\n";
    else if (format == "latex")
        std::cout << latex << "\n";
    else
        std::cout << text << "\n";
}

int run_selftest(int max_size, int n, std::uint64_t seed)
{
    std::vector<CheckReport> reports;
    reports.push_back(check_crystal_axioms(std::min(max_size, 6), n));
    reports.push_back(check_theorem_main(std::min(max_size, 7), n));
    reports.push_back(check_uncrowd_round_trip(max_size, n, 3));
    reports.push_back(check_burge_round_trip(500, 4, 4, 3, seed));
    reports.push_back(check_random_expansions(50, max_size, n, seed));
    bool ok = true;
    for (const auto& r : reports) {
        std::cout << (r.ok ? "ok   " : "FAIL ") << r.name << " (" << r.cases << " cases)";
        if (!r.ok)
            std::cout << ": " << r.detail;
        std::cout << "\n";
        ok = ok && r.ok;
    }
    return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Set-valued tableaux: crystals, uncrowding and key expansions"};
    app.require_subcommand(1);

    // expand
    auto* expand = app.add_subcommand("expand", "expand a generating function in a basis");
    std::string basis = "key", function = "G", format = "text";
    int degree_cap = -1;
    ShapeArgs ex_args;
    expand->add_option("basis", basis, "key | schur | G | g")
        ->check(CLI::IsMember({"key", "schur", "G", "g"}))
        ->required();
    expand->add_option("--function", function, "G: flagged refined Grothendieck, g: refined dual")
        ->check(CLI::IsMember({"G", "g"}));
    expand->add_option("--degree-cap", degree_cap, "x-degree bound for the G basis (default |outer|+4)");
    expand->add_option("--format", format, "text | json | latex")->check(CLI::IsMember({"text", "json", "latex"}));
    ex_args.add_to(expand);

    // uncrowd, psi
    std::string input = "-";
    auto* uncrowd_cmd = app.add_subcommand("uncrowd", "uncrowd a connected set-valued tableau (JSON)");
    uncrowd_cmd->add_option("--input", input, "JSON file, - for stdin");
    auto* psi_cmd = app.add_subcommand("psi", "componentwise uncrowding of a set-valued tableau (JSON)");
    psi_cmd->add_option("--input", input, "JSON file, - for stdin");

    // burge
    bool inverse = false;
    auto* burge_cmd = app.add_subcommand("burge", "Burge correspondence of a matrix given as JSON rows");
    burge_cmd->add_option("--input", input, "JSON file, - for stdin");
    burge_cmd->add_flag("--inverse", inverse, "read {\"P\":..., \"Q\":...} and recover the biword");

    // classify, crystal-graph
    ShapeArgs cl_args, cg_args;
    std::vector<int> excess_filter;
    auto* classify_cmd = app.add_subcommand("classify", "class table of flagged set-valued tableaux as JSON");
    cl_args.add_to(classify_cmd);
    classify_cmd->add_option("--excess", excess_filter, "restrict to one excess vector")->delimiter(',');
    auto* graph_cmd = app.add_subcommand("crystal-graph", "crystal graph of flagged set-valued tableaux as DOT");
    cg_args.add_to(graph_cmd);

    // selftest
    int max_size = 8, st_n = 3;
    std::uint64_t seed = 7;
    auto* selftest = app.add_subcommand("selftest", "run the invariant suite");
    selftest->add_option("--max-size", max_size, "largest number of boxes");
    selftest->add_option("--n", st_n, "number of letters");
    selftest->add_option("--seed", seed, "seed for the randomized checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*expand) {
            SkewShape shape = ex_args.shape();
            int n = ex_args.vars();
            if (basis == "key") {
                Flag flag = ex_args.resolved_flag();
                auto k = function == "G" ? key_expansion_G(shape, flag, n) : key_expansion_g(shape, flag, n);
                emit(format, to_json(k), format_text(k), format_latex(k));
            } else {
                if (!ex_args.flag.empty() && ex_args.flag != constant_flag(static_cast<int>(ex_args.flag.size()), n))
                    throw UsageError("basis expansions use the flag (n,...,n)");
                Source src = parse_source(function);
                Basis b = basis == "schur" ? Basis::schur : basis == "G" ? Basis::G : Basis::g;
                if (b == Basis::G && degree_cap >= 0 && degree_cap < shape.outer().size())
                    throw UsageError("--degree-cap must be at least |outer|");
                BasisExpansion e = b == Basis::schur ? schur_expansion(compatible_tableaux(shape, n, src), n)
                                   : b == Basis::G   ? expand_in_G(shape, n, src, degree_cap)
                                                     : expand_in_g(shape, n, src);
                emit(format, to_json(e, b), format_text(e, b), format_latex(e, b));
            }
        } else if (*uncrowd_cmd) {
            auto [t, flag] = read_svt_input(input);
            if (!t.shape.is_connected() || t.shape.row_length(1) == 0)
                throw UsageError("uncrowd needs a connected shape with a nonempty first row; use psi");
            auto rec = uncrowd(t);
            std::cout << to_json(rec, flag.empty() ? std::vector<Flag>{} : flag_evolution(rec, flag)).dump(2) << "\n";
        } else if (*psi_cmd) {
            auto [t, flag] = read_svt_input(input);
            std::cout << to_json(psi(t, flag)).dump(2) << "\n";
        } else if (*burge_cmd) {
            Json j = read_json(input);
            if (inverse) {
                auto p = int_tableau_from_json(j.at("P"));
                auto q = int_tableau_from_json(j.at("Q"));
                if (!is_valid_ssyt(p) || !is_valid_ssyt(q))
                    throw UsageError("P and Q must be semistandard");
                std::cout << Json{{"biword", to_json(burge_inverse(p, q))}}.dump(2) << "\n";
            } else {
                auto a = j.get<Matrix>();
                for (const auto& row : a)
                    for (int x : row)
                        if (x < 0)
                            throw UsageError("matrix entries must be non-negative");
                Biword bw = biword_of_matrix(a);
                auto [p, q] = burge(bw);
                std::cout << Json{{"biword", to_json(bw)}, {"P", to_json(p)}, {"Q", to_json(q)}}.dump(2) << "\n";
            }
        } else if (*classify_cmd) {
            SkewShape shape = cl_args.shape();
            int n = cl_args.vars();
            std::optional<Composition> e;
            if (!excess_filter.empty())
                e = pad(excess_filter, shape.rows());
            Json out = Json::array();
            for (const auto& c : classify_svt(shape, cl_args.resolved_flag(), n, e))
                out.push_back(to_json(c));
            std::cout << out.dump(2) << "\n";
        } else if (*graph_cmd) {
            SkewShape shape = cg_args.shape();
            std::cout << crystal_dot(enumerate_svt(shape, cg_args.resolved_flag()), cg_args.vars());
        } else if (*selftest) {
            if (max_size < 1 || st_n < 1)
                throw UsageError("--max-size and --n must be positive");
            return run_selftest(max_size, st_n, seed);
        }
    } catch (const IdentityViolation& e) {
        std::cerr << "identity violation: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
