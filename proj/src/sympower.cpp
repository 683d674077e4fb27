#include "biggl/sympower.hpp"

#include "biggl/biggen.hpp"
#include "biggl/symfunc.hpp"

#include "json.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace biggl {

namespace {

std::vector<Var> tvars(int n) {
    std::vector<Var> v;
    for (int i = 1; i <= n; ++i) v.push_back(tv(i));
    return v;
}

std::vector<Var> tvars_without(int n, int j) {
    std::vector<Var> v;
    for (int i = 1; i <= n; ++i)
        if (i != j) v.push_back(tv(i));
    return v;
}

// Evaluate a polynomial in P/M/c symbols over the weight-function ring.
WeightFunc eval_poly_wf(const Poly& rel, int n, int m,
                        const std::map<Var, WeightFunc>& gens) {
    WeightFunc out(n, m);
    for (auto& t : rel.terms()) {
        WeightFunc term = WeightFunc::constant(n, m, Poly(t.second));
        for (auto& f : t.first.factors) {
            auto it = gens.find(f.first);
            if (it == gens.end())
                throw std::invalid_argument("eval_poly_wf: unbound symbol " + f.first.name());
            for (int e = 0; e < f.second; ++e) term = term * it->second;
        }
        out = out + term;
    }
    return out;
}

Rat sl_shift(int k, int n, int m) { return Rat(m) * Rat(n - k) / Rat(n); }

}  // namespace

WeightFunc gen_phat(int k, int n, int m) {
    WeightFunc f(n, m);
    for (size_t idx = 0; idx < f.size(); ++idx) {
        const auto& mu = f.weights()[idx];
        Poly v;
        for (int i = 1; i <= n; ++i)
            if (mu[size_t(i) - 1] != 0)
                v += Poly::monomial(Mono(tv(i), k), Rat(mu[size_t(i) - 1]));
        f.value(idx) = v;
    }
    return f;
}

WeightFunc gen_fhat(int p, int q, int n, int m) {
    if (q != 0 && q != 1) throw std::invalid_argument("gen_fhat: q must be 0 or 1");
    if (q == 0) return WeightFunc::constant(n, m, elementary_sym(p, tvars(n)));
    WeightFunc f(n, m);
    std::vector<Poly> partial;
    for (int j = 1; j <= n; ++j) partial.push_back(elementary_sym(p, tvars_without(n, j)));
    for (size_t idx = 0; idx < f.size(); ++idx) {
        const auto& mu = f.weights()[idx];
        Poly v;
        for (int j = 1; j <= n; ++j) v += partial[size_t(j) - 1] * Rat(mu[size_t(j) - 1]);
        f.value(idx) = v;
    }
    return f;
}

Poly m_p_transfer(int k, int n, int m) {
    // theta_l as a polynomial in the c symbols.
    std::vector<Poly> theta(size_t(k) + 2);
    for (int l = 1; l <= k + 1; ++l) {
        std::map<Var, Poly> sub;
        for (int j = 1; j <= n; ++j) sub.emplace(esv(j), Poly(cv(j)));
        theta[size_t(l)] = girard_waring_p_from_e(l, n).subst(sub);
    }
    Poly out;
    for_each_weighted_partition(k + 1, k + 1, [&](const std::vector<int>& i) {
        int isum = 0;
        Rat coeff = 1;
        for (int j = 1; j <= k + 1; ++j) {
            isum += i[size_t(j) - 1];
            coeff /= Rat(factorial(i[size_t(j) - 1]));
        }
        if ((k + 1 + isum) % 2 == 1) coeff = -coeff;
        for (int j = 1; j <= k + 1; ++j) {
            int ij = i[size_t(j) - 1];
            if (ij == 0) continue;
            Poly term(coeff * Rat(ij));
            term = term * (j == 1 ? Poly(Rat(m)) : Poly(pgen(j - 1)));
            term = term * (theta[size_t(j)] / Rat(j)).pow(ij - 1);
            for (int l = 1; l <= k + 1; ++l) {
                if (l == j) continue;
                int il = i[size_t(l) - 1];
                if (il > 0) term = term * (theta[size_t(l)] / Rat(l)).pow(il);
            }
            out += term;
        }
    });
    return out;
}

std::vector<Poly> p_in_terms_of_m(int kmax, int n, int m) {
    std::vector<Poly> solved;  // solved[k-1] expresses P_k
    for (int k = 1; k <= kmax; ++k) {
        Poly transfer = m_p_transfer(k, n, m);
        Rat sign = k % 2 == 0 ? 1 : -1;
        Poly residual = transfer - Poly(pgen(k)) * sign;
        std::map<Var, Poly> sub;
        for (int j = 1; j < k; ++j) sub.emplace(pgen(j), solved[size_t(j) - 1]);
        residual = residual.subst(sub);
        solved.push_back((Poly(mgen(k)) - residual) * sign);
    }
    return solved;
}

WeightFunc gen_mhat(int k, int n, int m) {
    std::map<Var, WeightFunc> gens;
    for (int j = 1; j <= k; ++j) gens.emplace(pgen(j), gen_phat(j, n, m));
    for (int j = 1; j <= n; ++j)
        gens.emplace(cv(j), WeightFunc::constant(n, m, elementary_sym(j, tvars(n))));
    return eval_poly_wf(m_p_transfer(k, n, m), n, m, gens);
}

std::vector<Poly> capelli_style_relations(int n, int m) {
    std::vector<Poly> rels;
    for (int i = 0; i < m; ++i) {
        Poly rel;
        for (int j = 0; j <= n; ++j) {
            int idx = i + n - j;
            Poly pterm;
            if (idx == 0) {
                pterm = Poly(Rat(m));
            } else if (idx <= m) {
                pterm = Poly(pgen(idx));
            } else {
                std::map<Var, Poly> sub;
                for (int l = 1; l <= m; ++l) sub.emplace(thv(l), Poly(pgen(l)));
                pterm = theta_poly(idx, m).subst(sub);
            }
            Poly cterm = j == 0 ? Poly(1) : Poly(cv(j));
            if (j % 2 == 1) cterm = -cterm;
            rel += cterm * pterm;
        }
        rels.push_back(rel);
    }
    return rels;
}

PresentationRing present(int n, int m, Basis basis, AlgebraKind alg) {
    if (n < 2 || n > 3 || m < 1 || m > 4 || (n == 3 && m > 3))
        throw std::invalid_argument("present: supported sizes are n=2 (m<=4) and n=3 (m<=3)");
    std::vector<Poly> rels = capelli_style_relations(n, m);
    if (alg == AlgebraKind::SL) {
        for (auto& r : rels) r = r.subst(cv(1), Poly(0));
    }
    int op_count = m;
    if (basis == Basis::M) {
        // Eliminate P_k for k >= n through the relations linear in them.
        for (int k = n; k <= m; ++k) {
            int i = k - n;
            Poly expr = Poly(pgen(k)) - rels[size_t(i)];
            for (size_t j = 0; j < rels.size(); ++j)
                if (int(j) != i) rels[j] = rels[j].subst(pgen(k), expr);
            rels[size_t(i)] = Poly(0);
        }
        rels.erase(std::remove_if(rels.begin(), rels.end(),
                                  [](const Poly& p) { return p.is_zero(); }),
                   rels.end());
        op_count = std::min(m, n - 1);
        std::vector<Poly> p_exprs = p_in_terms_of_m(op_count, n, m);
        std::map<Var, Poly> sub;
        for (int k = 1; k <= op_count; ++k) {
            Poly e = p_exprs[size_t(k) - 1];
            if (alg == AlgebraKind::SL) {
                // The traceless generators absorb a scalar multiple of c_k.
                e = e.subst(mgen(k), Poly(mgen(k)) + Poly(cv(k)) * sl_shift(k, n, m));
                e = e.subst(cv(1), Poly(0));
            }
            sub.emplace(pgen(k), e);
        }
        for (auto& r : rels) r = r.subst(sub);
        // Reduce each relation by the earlier ones and clear denominators.
        std::vector<Poly> reduced;
        for (auto& r : rels) {
            Poly red = lex_reduce(r, reduced).integer_cleared();
            if (!red.is_zero()) reduced.push_back(red);
        }
        rels = reduced;
    } else {
        for (auto& r : rels) r = r.integer_cleared();
    }
    PresentationRing ring;
    for (int k = alg == AlgebraKind::SL ? 2 : 1; k <= n; ++k)
        ring.generators.push_back("c" + std::to_string(k));
    for (int k = 1; k <= op_count; ++k)
        ring.generators.push_back((basis == Basis::P ? "P" : "M") + std::to_string(k));
    ring.relations = rels;
    return ring;
}

std::string PresentationRing::text() const {
    std::ostringstream os;
    os << "generators:";
    for (auto& g : generators) os << " " << g;
    os << "\nrelations:\n";
    for (auto& r : relations) os << r.str(PrintStyle::Plain) << "\n";
    return os.str();
}

std::string PresentationRing::json() const {
    nlohmann::json j;
    j["generators"] = generators;
    j["relations"] = nlohmann::json::array();
    for (auto& r : relations) j["relations"].push_back(r.str(PrintStyle::Plain));
    return j.dump(2) + "\n";
}

WeightFunc eval_relation(const Poly& rel, int n, int m, Basis basis, AlgebraKind alg) {
    std::map<Var, WeightFunc> gens;
    for (int k = 1; k <= n; ++k)
        gens.emplace(cv(k), WeightFunc::constant(n, m, elementary_sym(k, tvars(n))));
    for (int k = 0; k <= m + n; ++k) gens.emplace(pgen(k), gen_phat(k, n, m));
    if (basis == Basis::M) {
        for (int k = 1; k < n; ++k) {
            WeightFunc mk = gen_mhat(k, n, m);
            if (alg == AlgebraKind::SL) {
                WeightFunc shift =
                    WeightFunc::constant(n, m, elementary_sym(k, tvars(n)) * sl_shift(k, n, m));
                mk = mk - shift;
            }
            gens.emplace(mgen(k), mk);
        }
    }
    WeightFunc value = eval_poly_wf(rel, n, m, gens);
    if (alg == AlgebraKind::SL) {
        // Evaluate on the traceless locus t_1 + ... + t_n = 0.
        Poly last;
        for (int i = 1; i < n; ++i) last -= Poly(tv(i));
        std::map<Var, Poly> sub{{tv(n), last}};
        value = value.subst(sub);
    }
    return value;
}

Report relation_check_capelli_style(int n, int m) {
    Report rep;
    rep.command = "relations n=" + std::to_string(n) + " m=" + std::to_string(m);
    auto rels = capelli_style_relations(n, m);
    for (size_t i = 0; i < rels.size(); ++i) {
        WeightFunc v = eval_relation(rels[i], n, m, Basis::P, AlgebraKind::GL);
        if (v.is_zero()) {
            rep.note_pass();
        } else {
            for (size_t idx = 0; idx < v.size(); ++idx)
                if (!v.value(idx).is_zero())
                    rep.add_failure("relation " + std::to_string(i) + " weight " +
                                        std::to_string(idx),
                                    v.value(idx).str(), "0", "");
        }
    }
    return rep;
}

Report present_soundness_check(int n, int m, Basis basis, AlgebraKind alg) {
    Report rep;
    rep.command = "present-soundness n=" + std::to_string(n) + " m=" + std::to_string(m);
    PresentationRing ring = present(n, m, basis, alg);
    for (size_t i = 0; i < ring.relations.size(); ++i) {
        WeightFunc v = eval_relation(ring.relations[i], n, m, basis, alg);
        if (v.is_zero())
            rep.note_pass();
        else
            rep.add_failure("relation " + std::to_string(i),
                            ring.relations[i].str(PrintStyle::Plain), "0", "");
    }
    return rep;
}

WeylOp power_op(int n, int alpha) {
    // Matrix power of [y_ij].
    std::vector<std::vector<Poly>> pw(size_t(n), std::vector<Poly>(size_t(n), Poly(0)));
    for (int i = 0; i < n; ++i) pw[size_t(i)][size_t(i)] = Poly(1);
    for (int step = 0; step < alpha; ++step) {
        std::vector<std::vector<Poly>> nx(size_t(n), std::vector<Poly>(size_t(n), Poly(0)));
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                for (int k = 1; k <= n; ++k)
                    nx[size_t(i) - 1][size_t(j) - 1] +=
                        pw[size_t(i) - 1][size_t(k) - 1] * Poly(yv(k, j));
        pw = nx;
    }
    WeylOp out;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            out += L_E(i, j, 1) * pw[size_t(i) - 1][size_t(j) - 1];
    return out;
}

namespace {

Mono weight_monomial(const std::vector<int>& mu) {
    Mono m;
    for (size_t i = 0; i < mu.size(); ++i)
        if (mu[i] > 0) m = m * Mono(xv(int(i) + 1, 1), mu[i]);
    return m;
}

// If op(x^mu) = lambda x^mu, returns lambda; reports otherwise.
bool diagonal_eigenvalue(const WeylOp& op, const std::vector<int>& mu, Poly& eig) {
    Mono xmu = weight_monomial(mu);
    Poly applied = op.apply(Poly::monomial(xmu, 1));
    Poly lambda;
    for (auto& t : applied.terms()) {
        // Every term must factor as (t-part) * x^mu.
        Mono tpart;
        Mono xpart;
        for (auto& f : t.first.factors)
            (f.first.fam() == Fam::X ? xpart : tpart).factors.push_back(f);
        if (!(xpart == xmu)) return false;
        lambda += Poly::monomial(tpart, t.second);
    }
    eig = lambda;
    return true;
}

}  // namespace

Report consistency_bigelem_vs_weightfunc(int p, int q, int n, int m) {
    Report rep;
    rep.command = "bigelem-vs-weightfunc p=" + std::to_string(p) + " q=" + std::to_string(q) +
                  " n=" + std::to_string(n) + " m=" + std::to_string(m);
    WeylOp op = restrict_cartan(f_pq(n, 1, p, q), n);
    WeightFunc expect = gen_fhat(p, q, n, m);
    for (size_t idx = 0; idx < expect.size(); ++idx) {
        Poly eig;
        if (!diagonal_eigenvalue(op, expect.weights()[idx], eig)) {
            rep.add_failure("weight " + std::to_string(idx), "<not diagonal>",
                            expect.value(idx).str(), "");
            continue;
        }
        if (eig == expect.value(idx))
            rep.note_pass();
        else
            rep.add_failure("weight " + std::to_string(idx), eig.str(), expect.value(idx).str(),
                            (eig - expect.value(idx)).str());
    }
    return rep;
}

WeightFunc upsilon(const Poly& f, int n, int m) {
    for (auto& t : f.terms())
        for (auto& fac : t.first.factors)
            if (fac.first.fam() != Fam::Psym && fac.first.fam() != Fam::C)
                throw std::invalid_argument(
                    "upsilon: input must be a power-sum expression with scalar coefficients");
    std::map<Var, Poly> csub;
    for (int k = 1; k <= n; ++k) csub.emplace(cv(k), elementary_sym(k, tvars(n)));
    WeightFunc out(n, m);
    for (size_t idx = 0; idx < out.size(); ++idx) {
        std::vector<int> mu = out.weights()[idx];
        out.value(idx) = plethysm_eval(f, mu, n).subst(csub);
    }
    return out;
}

namespace {

// Monomial symmetric polynomial with exponent multiset lam, evaluated at
// the alphabet (t_1 repeated mu_1 times, ..., t_n repeated mu_n times).
Poly mono_sym_at_weight(std::vector<int> lam, const std::vector<int>& mu, int n) {
    std::vector<Poly> letters;
    for (int i = 1; i <= n; ++i)
        for (int rep = 0; rep < mu[size_t(i) - 1]; ++rep) letters.push_back(Poly(tv(i)));
    std::sort(lam.begin(), lam.end());
    Poly out;
    do {
        Poly term(1);
        for (size_t s = 0; s < lam.size(); ++s) term = term * letters[s].pow(lam[s]);
        out += term;
    } while (std::next_permutation(lam.begin(), lam.end()));
    return out;
}

size_t rat_matrix_rank(std::vector<std::vector<Rat>> a) {
    size_t rows = a.size();
    if (rows == 0) return 0;
    size_t cols = a[0].size();
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t pivot = rank;
        while (pivot < rows && a[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[rank]);
        for (size_t r2 = rank + 1; r2 < rows; ++r2) {
            if (a[r2][c] == 0) continue;
            Rat f = a[r2][c] / a[rank][c];
            for (size_t c2 = c; c2 < cols; ++c2) a[r2][c2] -= f * a[rank][c2];
        }
        ++rank;
    }
    return rank;
}

}  // namespace

Report upsilon_injectivity_check(int n, int m) {
    Report rep;
    rep.command = "upsilon-rank n=" + std::to_string(n) + " m=" + std::to_string(m);
    // All nondecreasing exponent tuples within the degree bound.
    std::vector<std::vector<int>> lams;
    std::vector<int> cur(size_t(m), 0);
    std::function<void(int, int)> rec = [&](int idx, int low) {
        if (idx == m) {
            lams.push_back(cur);
            return;
        }
        for (int v = low; v <= n - 1; ++v) {
            cur[size_t(idx)] = v;
            rec(idx + 1, v);
        }
    };
    rec(0, 0);
    auto weights = weight_diagram(n, m);
    const int primes[] = {2, 3, 5, 7, 11, 13, 17};
    std::map<Var, Rat> spec;
    for (int i = 1; i <= n; ++i) spec.emplace(tv(i), Rat(primes[i - 1]));
    std::vector<std::vector<Rat>> mat;
    for (auto& lam : lams) {
        std::vector<Rat> row;
        for (auto& mu : weights) row.push_back(mono_sym_at_weight(lam, mu, n).eval(spec));
        mat.push_back(row);
    }
    size_t rank = rat_matrix_rank(mat);
    size_t expect = size_t(Int(binomial(n + m - 1, m)).convert_to<long long>());
    if (rank == expect)
        rep.note_pass();
    else
        rep.add_failure("rank", std::to_string(rank), std::to_string(expect), "rank deficient");
    return rep;
}

Report upsilon_multiplicativity_check(int n, int m, int pairs, unsigned seed) {
    Report rep;
    rep.command = "upsilon-mult n=" + std::to_string(n) + " m=" + std::to_string(m);
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coeff(-4, 4), deg(0, 2), pick(1, 3);
    auto random_sym = [&]() {
        Poly f;
        int terms = 1 + int(rng() % 3);
        for (int t = 0; t < terms; ++t) {
            Mono mo;
            int nf = int(rng() % 3);
            for (int i = 0; i < nf; ++i) mo = mo * Mono(pv(pick(rng)));
            if (deg(rng) == 0) mo = mo * Mono(cv(1 + int(rng() % size_t(n))));
            f += Poly::monomial(mo, Rat(coeff(rng)));
        }
        return f;
    };
    for (int it = 0; it < pairs; ++it) {
        Poly f = random_sym(), g = random_sym();
        if (upsilon(f * g, n, m) == upsilon(f, n, m) * upsilon(g, n, m))
            rep.note_pass();
        else
            rep.add_failure("pair " + std::to_string(it), f.str(), g.str(), "not multiplicative");
    }
    return rep;
}

WeightFunc dhat_plethystic(const Poly& f, const Poly& g, int n, int m) {
    for (auto& t : f.terms())
        for (auto& fac : t.first.factors)
            if (fac.first.fam() != Fam::Psym)
                throw std::invalid_argument("dhat_plethystic: f must be a power-sum expression");
    for (auto& t : g.terms())
        for (auto& fac : t.first.factors)
            if (fac.first.fam() != Fam::Psym)
                throw std::invalid_argument("dhat_plethystic: g must be a power-sum expression");
    std::vector<int> ones(size_t(n), 1);
    Poly A = plethysm_eval(f, ones, n);
    WeightFunc out(n, m);
    for (size_t idx = 0; idx < out.size(); ++idx) {
        const std::vector<int>& mu = out.weights()[idx];
        Poly G = plethysm_eval(g, mu, n);
        Poly total;
        Poly AG = A * G;
        for (int i = 1; i <= n; ++i)
            if (mu[size_t(i) - 1] != 0) total += AG.derivative(tv(i)) * Rat(mu[size_t(i) - 1]);
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                if (i == j) continue;
                Rat factor = Rat(mu[size_t(j) - 1]) * Rat(mu[size_t(i) - 1] + 1);
                if (factor == 0) continue;
                Poly shifted = plethysm_eval(g, mu, n, Poly(tv(i)) - Poly(tv(j)));
                Poly diff = shifted - G;
                if (diff.is_zero()) continue;
                total += A * diff.div_exact_linear(tv(i), tv(j)) * factor;
            }
        }
        out.value(idx) = total;
    }
    return out;
}

Report dhat_consistency(const std::vector<int>& alphas, int n, int m) {
    Report rep;
    std::string name = "dhat n=" + std::to_string(n) + " m=" + std::to_string(m) + " alphas=";
    for (int a : alphas) name += std::to_string(a) + ",";
    rep.command = name;
    WeylOp b(1);
    Poly g(1);
    for (int a : alphas) {
        b = b * power_op(n, a);
        g = g * Poly(pv(a));
    }
    WeylOp dc = restrict_cartan(kirillov_wei(b, n, 1), n);
    WeightFunc expect = dhat_plethystic(Poly(1), g, n, m);
    for (size_t idx = 0; idx < expect.size(); ++idx) {
        Poly eig;
        if (!diagonal_eigenvalue(dc, expect.weights()[idx], eig)) {
            rep.add_failure("weight " + std::to_string(idx), "<not diagonal>",
                            expect.value(idx).str(), "");
            continue;
        }
        if (eig == expect.value(idx))
            rep.note_pass();
        else
            rep.add_failure("weight " + std::to_string(idx), eig.str(), expect.value(idx).str(),
                            (eig - expect.value(idx)).str());
    }
    return rep;
}

Poly di_normalize(const Poly& e, int n) {
    Poly cur = e;
    while (true) {
        std::map<Var, Poly> sub;
        for (auto& t : cur.terms()) {
            for (auto& f : t.first.factors) {
                Var v = f.first;
                if (v.fam() != Fam::Pab || sub.count(v)) continue;
                int a = v.i(), b = v.j();
                if (b == 0 && a == 0) {
                    sub.emplace(v, Poly(Rat(n)));
                } else if (b == 0 && a > n) {
                    std::map<Var, Poly> tsub;
                    for (int i = 1; i <= n; ++i) tsub.emplace(thv(i), Poly(pab(i, 0)));
                    sub.emplace(v, theta_poly(a, n).subst(tsub));
                } else if (b == 1 && a >= n) {
                    Poly repl;
                    for (int j = 1; j <= n; ++j) {
                        std::map<Var, Poly> psub;
                        for (int i = 1; i <= j; ++i) psub.emplace(pv(i), Poly(pab(i, 0)));
                        Poly ej = girard_waring_e_from_p(j).subst(psub);
                        Poly term = ej * Poly(pab(a - j, 1));
                        if (j % 2 == 0)
                            repl -= term;
                        else
                            repl += term;
                    }
                    sub.emplace(v, repl);
                }
            }
        }
        if (sub.empty()) return cur;
        cur = cur.subst(sub);
    }
}

namespace {

// One application of the induced operator to a product f * g, where f is a
// product of p_{a,0} and g a product of p_{b,1}. Result may need reduction.
Poly dhat_xy_monomial(const std::vector<int>& fpows, const std::vector<int>& gpows) {
    Poly out;
    // Derivative part acting on the f factors.
    for (size_t k = 0; k < fpows.size(); ++k) {
        int a = fpows[k];
        Poly term{Rat(a)};
        term = term * Poly(pab(a - 1, 1));
        for (size_t s = 0; s < fpows.size(); ++s)
            if (s != k) term = term * Poly(pab(fpows[s], 0));
        for (int b : gpows) term = term * Poly(pab(b, 1));
        out += term;
    }
    // Difference part acting on the g factors.
    Poly fmono(1);
    for (int a : fpows) fmono = fmono * Poly(pab(a, 0));
    int l = int(gpows.size());
    Poly gpart;
    for (int k = 0; k < l; ++k) {
        int b = gpows[size_t(k)];
        if (b == 0) continue;
        Poly term{Rat(-b)};
        term = term * Poly(pab(b - 1, 1));
        for (int s = 0; s < l; ++s)
            if (s != k) term = term * Poly(pab(gpows[size_t(s)], 1));
        gpart += term;
    }
    // Sum over non-empty subsets of the g factors.
    Var A = alv(1), B = alv(2);
    for (int mask = 1; mask < (1 << l); ++mask) {
        Poly q(1);
        bool zero = false;
        for (int s = 0; s < l; ++s) {
            if (!(mask & (1 << s))) continue;
            int b = gpows[size_t(s)];
            if (b == 0) {
                zero = true;
                break;
            }
            q = q * (Poly::monomial(Mono(A, b), 1) - Poly::monomial(Mono(B, b), 1));
        }
        if (zero) continue;
        q = q.div_exact_linear(A, B);
        Poly rest(1);
        for (int s = 0; s < l; ++s)
            if (!(mask & (1 << s))) rest = rest * Poly(pab(gpows[size_t(s)], 1));
        for (auto& t : q.terms()) {
            int ea = t.first.exponent(A), eb = t.first.exponent(B);
            Poly pair = (Poly(pab(ea, 0)) + Poly(pab(ea, 1))) * Poly(pab(eb, 1));
            gpart += pair * rest * t.second;
        }
    }
    out += fmono * gpart;
    return out;
}

}  // namespace

Poly dhat_xy(const Poly& e, int n) {
    Poly input = di_normalize(e, n);
    Poly out;
    for (auto& t : input.terms()) {
        std::vector<int> fpows, gpows;
        for (auto& f : t.first.factors) {
            if (f.first.fam() != Fam::Pab)
                throw std::invalid_argument("dhat_xy: input must be a polarized power-sum "
                                            "expression");
            for (int rep = 0; rep < f.second; ++rep) {
                if (f.first.j() == 0)
                    fpows.push_back(f.first.i());
                else
                    gpows.push_back(f.first.i());
            }
        }
        out += dhat_xy_monomial(fpows, gpows) * t.second;
    }
    return di_normalize(out, n);
}

Poly di_eval(const Poly& e, const std::vector<int>& mu, int n) {
    std::map<Var, Poly> sub;
    for (auto& t : e.terms()) {
        for (auto& f : t.first.factors) {
            Var v = f.first;
            if (v.fam() != Fam::Pab || sub.count(v)) continue;
            int a = v.i();
            Poly value;
            if (v.j() == 0) {
                value = power_sum(a, tvars(n));
            } else {
                for (int i = 1; i <= n; ++i)
                    if (mu[size_t(i) - 1] != 0)
                        value += Poly::monomial(Mono(tv(i), a), Rat(mu[size_t(i) - 1]));
            }
            sub.emplace(v, value);
        }
    }
    return e.subst(sub);
}

Report dhat_xy_consistency(int n, int m, int max_degree) {
    Report rep;
    rep.command = "dhat-xy n=" + std::to_string(n) + " m=" + std::to_string(m);
    // Free generators.
    std::vector<Var> gens;
    for (int a = 1; a <= n; ++a) gens.push_back(pab(a, 0));
    for (int a = 0; a < n; ++a) gens.push_back(pab(a, 1));
    // All monomials in the generators of total degree 1..max_degree.
    std::vector<Poly> monomials;
    std::function<void(size_t, int, Mono)> rec = [&](size_t idx, int left, Mono cur) {
        if (!cur.trivial()) monomials.push_back(Poly::monomial(cur, 1));
        if (idx == gens.size() || left == 0) return;
        for (size_t next = idx; next < gens.size(); ++next)
            rec(next, left - 1, cur * Mono(gens[next]));
    };
    rec(0, max_degree, Mono());
    std::sort(monomials.begin(), monomials.end(),
              [](const Poly& a, const Poly& b) {
                  return cmp_grlex(a.terms().begin()->first, b.terms().begin()->first) < 0;
              });
    monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
    auto weights = weight_diagram(n, m);
    for (auto& e : monomials) {
        Poly image = dhat_xy(e, n);
        // Split the generator monomial into its two plethystic parts.
        Poly f(1), g(1);
        for (auto& fac : e.terms().begin()->first.factors) {
            Poly p((pv(fac.first.i())));
            if (fac.first.j() == 0)
                f = f * p.pow(fac.second);
            else
                g = g * p.pow(fac.second);
        }
        WeightFunc expect = dhat_plethystic(f, g, n, m);
        bool ok = true;
        for (size_t idx = 0; idx < weights.size(); ++idx) {
            Poly lhs = di_eval(image, weights[idx], n);
            if (lhs != expect.value(idx)) {
                rep.add_failure(e.str() + " weight " + std::to_string(idx), lhs.str(),
                                expect.value(idx).str(), (lhs - expect.value(idx)).str());
                ok = false;
            }
        }
        if (ok) rep.note_pass();
    }
    return rep;
}

}  // namespace biggl
