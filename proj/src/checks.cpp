#include "svt/checks.hpp"

#include <functional>
#include <random>
#include <set>

#include "svt/crystal.hpp"
#include "svt/enumerate.hpp"
#include "svt/expansions.hpp"
#include "svt/insertion.hpp"

namespace svt {

namespace {

struct Outcome {
    std::size_t cases = 0;
    std::string error;
};

// Runs one task per index; the reported counterexample is the one with the smallest index.
CheckReport run_tasks(const std::string& name, long count, Execution ex, const std::function<Outcome(long)>& task)
{
    std::vector<Outcome> out(count);
    parallel_for(count, ex, [&](long k) {
        try {
            out[k] = task(k);
        } catch (const std::exception& err) {
            out[k].error = std::string("exception: ") + err.what();
        }
    });
    CheckReport r{name, true, 0, {}};
    for (const auto& o : out) {
        r.cases += o.cases;
        if (r.ok && !o.error.empty()) {
            r.ok = false;
            r.detail = o.error;
        }
    }
    return r;
}

std::string crystal_axioms_at(const SetValuedTableau& t, int n)
{
    Composition w = weight(t, n);
    Composition ex = excess(t);
    auto factors = row_factors(t);
    for (int i = 1; i < n; ++i) {
        auto at = [&] { return " for i=" + std::to_string(i) + " at " + to_string(t); };
        auto f = lowering(t, i, n);
        auto e = raising(t, i, n);
        if (f) {
            if (!is_valid_svt(*f) || f->shape != t.shape)
                return "f_i produced an invalid tableau" + at();
            auto back = raising(*f, i, n);
            if (!back || !(*back == t))
                return "e_i(f_i(T)) != T" + at();
            Composition wf = weight(*f, n);
            if (wf[i - 1] != w[i - 1] - 1 || wf[i] != w[i] + 1)
                return "f_i weight shift" + at();
            if (excess(*f) != ex)
                return "f_i changed the excess" + at();
        }
        if (e) {
            if (!is_valid_svt(*e) || e->shape != t.shape)
                return "e_i produced an invalid tableau" + at();
            auto back = lowering(*e, i, n);
            if (!back || !(*back == t))
                return "f_i(e_i(T)) != T" + at();
            if (excess(*e) != ex)
                return "e_i changed the excess" + at();
        }
        auto [eps, phi] = string_lengths(t, i, n);
        auto sig = signature(t, i);
        if (eps != static_cast<int>(sig.minus.size()) || phi != static_cast<int>(sig.plus.size()))
            return "string lengths differ from the signature" + at();
        if (phi - eps != w[i - 1] - w[i])
            return "phi_i - eps_i != <wt, alpha_i>" + at();
        auto tf = tensor_lowering(factors, i, n);
        if (tf.has_value() != f.has_value() || (tf && !(assemble_rows(t.shape, *tf) == *f)))
            return "tensor lowering disagrees with f_i" + at();
        auto te = tensor_raising(factors, i, n);
        if (te.has_value() != e.has_value() || (te && !(assemble_rows(t.shape, *te) == *e)))
            return "tensor raising disagrees with e_i" + at();
        if (tensor_string_lengths(factors, i, n) != std::pair{eps, phi})
            return "tensor string lengths disagree" + at();
    }
    return {};
}

std::string psi_commutes_at(const SetValuedTableau& s, int n)
{
    PsiResult p = psi(s);
    if (weight(p.tilde, n) != weight(s, n))
        return "Psi changed the weight of " + to_string(s);
    for (int i = 1; i < n; ++i) {
        for (bool lower : {true, false}) {
            auto a = lower ? lowering(s, i, n) : raising(s, i, n);
            auto b = lower ? lowering(p.tilde, i, n) : raising(p.tilde, i, n);
            std::string op = (lower ? "f_" : "e_") + std::to_string(i);
            if (a.has_value() != b.has_value())
                return "Psi and " + op + " disagree on zero at " + to_string(s);
            if (!a)
                continue;
            PsiResult pa = psi(*a);
            if (!(pa.tilde == *b) || pa.recording != p.recording)
                return "Psi does not commute with " + op + " at " + to_string(s);
        }
    }
    return {};
}

}  // namespace

CheckReport check_crystal_axioms(int max_boxes, int n, Execution ex)
{
    auto shapes = normalized_skew_shapes(max_boxes);
    return run_tasks("crystal axioms", static_cast<long>(shapes.size()), ex, [&](long k) {
        Outcome o;
        const auto& shape = shapes[k];
        for (const auto& t : enumerate_svt(shape, constant_flag(shape.rows(), n))) {
            ++o.cases;
            if (o.error.empty())
                o.error = crystal_axioms_at(t, n);
        }
        return o;
    });
}

CheckReport check_theorem_main(int max_outer, int max_n, Execution ex)
{
    struct Task {
        SkewShape shape;
        int n;
    };
    std::vector<Task> tasks;
    for (int n = 1; n <= max_n; ++n)
        for (const auto& lam : partitions_up_to(max_outer, n)) {
            if (lam.size() == 0)
                continue;
            for (const auto& mu : subpartitions(lam))
                if (mu != lam)
                    tasks.push_back({SkewShape(lam, mu), n});
        }
    return run_tasks("Demazure structure of flagged SVT", static_cast<long>(tasks.size()), ex, [&](long k) {
        Outcome o;
        const auto& [shape, n] = tasks[k];
        std::string where = " on " + to_string(shape) + " n=" + std::to_string(n);
        for (const auto& s : enumerate_svt(shape, constant_flag(shape.rows(), n))) {
            std::string err = psi_commutes_at(s, n);
            if (!err.empty())
                return Outcome{o.cases, err + where};
        }
        for (const auto& flag : all_flags(n, n)) {
            auto all = enumerate_svt(shape, flag);
            auto classes = classify_svt(shape, flag, n, std::nullopt, Execution::serial);
            std::set<SetValuedTableau, CanonicalLess> seen;
            std::size_t total_members = 0;
            Polynomial sum(n, n);
            for (const auto& c : classes) {
                total_members += c.members.size();
                seen.insert(c.members.begin(), c.members.end());
                std::string err = verify_class(c, n);
                if (!err.empty())
                    return Outcome{o.cases, err + where + " flag " + to_string(flag)};
                Polynomial k = with_t(key_polynomial(pad(c.label, n)), pad(c.excess, n), n);
                sum += total(c.excess) % 2 ? k * -1 : k;
            }
            o.cases += all.size();
            if (total_members != all.size() || seen.size() != all.size())
                return Outcome{o.cases, "classes do not partition the flagged set" + where + " flag " + to_string(flag)};
            if (sum != svt_generating_function(all, n, Execution::serial))
                return Outcome{o.cases, "key expansion does not reassemble" + where + " flag " + to_string(flag)};
        }
        return o;
    });
}

CheckReport check_uncrowd_round_trip(int max_boxes, int letters, int max_excess, Execution ex)
{
    std::vector<SkewShape> shapes;
    for (const auto& s : normalized_skew_shapes(max_boxes))
        if (s.is_connected())
            shapes.push_back(s);
    return run_tasks("uncrowding round trip", static_cast<long>(shapes.size()), ex, [&](long k) {
        Outcome o;
        const auto& shape = shapes[k];
        Flag flag = constant_flag(shape.rows(), letters);
        SvtFilter filter;
        filter.max_total_excess = max_excess;
        for_each_svt(shape, flag, filter, [&](const SetValuedTableau& t) {
            ++o.cases;
            if (!o.error.empty())
                return;
            auto rec = uncrowd(t);
            int n = std::max(letters, static_cast<int>(rec.sigma.rows()));
            if (weight(rec.straightened, n) != weight(t, n))
                o.error = "uncrowding changed the weight of " + to_string(t);
            else if (label_weight(rec.recording, n) != pad(excess(t), n))
                o.error = "recording weight differs from the excess of " + to_string(t);
            else if (!(uncrowd_inverse(shape, rec.sigma, rec.recording, rec.straightened) == t))
                o.error = "inverse did not recover " + to_string(t);
            else
                flag_evolution(rec, flag);
        });
        return o;
    });
}

CheckReport check_burge_round_trip(int count, int rows, int cols, int max_entry, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> entry(0, max_entry);
    CheckReport r{"Burge round trip", true, 0, {}};
    for (int k = 0; k < count && r.ok; ++k) {
        Matrix a(rows, std::vector<int>(cols));
        for (auto& row : a)
            for (auto& x : row)
                x = entry(rng);
        Biword bw = biword_of_matrix(a);
        auto [p, q] = burge(bw);
        Biword back = burge_inverse(p, q);
        ++r.cases;
        if (!is_valid_ssyt(p) || !is_valid_ssyt(q) || !(back == bw) || matrix_of_biword(back, rows, cols) != a) {
            r.ok = false;
            r.detail = "round trip failed on matrix number " + std::to_string(k);
        }
    }
    return r;
}

CheckReport check_random_expansions(int count, int max_outer, int n, std::uint64_t seed, Execution ex)
{
    std::mt19937_64 rng(seed);
    auto lams = partitions_up_to(max_outer, n);
    std::erase_if(lams, [](const Partition& p) { return p.size() == 0; });
    auto flags = all_flags(n, n);
    struct Case {
        SkewShape shape;
        Flag flag;
    };
    std::vector<Case> cases;
    for (int k = 0; k < count; ++k) {
        const auto& lam = lams[rng() % lams.size()];
        auto mus = subpartitions(lam);
        std::erase_if(mus, [&](const Partition& m) { return m == lam; });
        cases.push_back({SkewShape(lam, mus[rng() % mus.size()]), flags[rng() % flags.size()]});
    }
    return run_tasks("random key expansions", count, ex, [&](long k) {
        const auto& [shape, flag] = cases[k];
        std::string where = " on " + to_string(shape) + " flag " + to_string(flag);
        key_expansion_G(shape, flag, n, Execution::serial);
        key_expansion_g(shape, flag, n, Execution::serial);
        Polynomial g0(n, 0);
        Polynomial full = grothendieck_flagged(shape, flag, n, Execution::serial);
        for (const auto& [e, c] : full.terms()) {
            Composition t(e.begin() + n, e.end());
            if (total(t) == 0)
                g0.add_term(Composition(e.begin(), e.begin() + n), c);
        }
        if (g0 != flagged_schur(shape, flag, n))
            return Outcome{1, "t = 0 specialization differs from the flagged skew Schur polynomial" + where};
        return Outcome{1, {}};
    });
}

}  // namespace svt
