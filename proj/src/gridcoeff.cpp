#include "biggl/gridcoeff.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace biggl {

namespace {

void check_distinct(const std::vector<Rat>& A) {
    std::set<Rat> s(A.begin(), A.end());
    if (s.size() != A.size()) throw std::invalid_argument("grid: repeated points");
}

}  // namespace

Rat lagrange_sum(const std::vector<Rat>& A, int k) {
    check_distinct(A);
    if (k < 0 || k >= int(A.size())) throw std::invalid_argument("lagrange_sum: need 0 <= k < |A|");
    Rat total = 0;
    for (size_t i = 0; i < A.size(); ++i) {
        Rat num = 1;
        for (int e = 0; e < k; ++e) num *= A[i];
        Rat den = 1;
        for (size_t j = 0; j < A.size(); ++j)
            if (j != i) den *= A[i] - A[j];
        total += num / den;
    }
    return total;
}

Poly grid_coefficient(const Poly& g, const std::vector<Var>& vars, const std::vector<int>& degrees,
                      const Grid& grid) {
    size_t m = vars.size();
    if (degrees.size() != m || grid.size() != m)
        throw std::invalid_argument("grid_coefficient: dimension mismatch");
    int dsum = 0;
    for (size_t i = 0; i < m; ++i) {
        if (int(grid[i].size()) != degrees[i] + 1)
            throw std::invalid_argument("grid_coefficient: grid size must be degree + 1");
        check_distinct(grid[i]);
        dsum += degrees[i];
    }
    int gdeg = 0;
    for (auto& t : g.terms()) {
        int d = 0;
        for (auto v : vars) d += t.first.exponent(v);
        gdeg = std::max(gdeg, d);
    }
    if (gdeg > dsum)
        throw std::invalid_argument("grid_coefficient: total degree exceeds the target");
    Poly total;
    std::vector<size_t> idx(m, 0);
    std::function<void(size_t, Rat)> rec = [&](size_t pos, Rat weight) {
        if (pos == m) {
            std::map<Var, Poly> sub;
            for (size_t i = 0; i < m; ++i) sub.emplace(vars[i], Poly(grid[i][idx[i]]));
            total += g.subst(sub) * weight;
            return;
        }
        for (size_t a = 0; a < grid[pos].size(); ++a) {
            idx[pos] = a;
            Rat den = 1;
            for (size_t b = 0; b < grid[pos].size(); ++b)
                if (b != a) den *= grid[pos][a] - grid[pos][b];
            rec(pos + 1, weight / den);
        }
    };
    rec(0, Rat(1));
    return total;
}

bool vanishing_test(const Poly& g, const std::vector<Var>& vars, int per_var_degree_bound,
                    const std::vector<Poly>& points) {
    for (auto v : vars)
        if (g.degree_in(v) > per_var_degree_bound)
            throw std::invalid_argument("vanishing_test: degree bound violated");
    if (int(points.size()) < per_var_degree_bound + 1)
        throw std::invalid_argument("vanishing_test: grid too small for the bound");
    size_t m = vars.size();
    std::vector<size_t> choice(m, 0);
    std::function<bool(size_t)> rec = [&](size_t pos) -> bool {
        if (pos == m) {
            std::map<Var, Poly> sub;
            for (size_t i = 0; i < m; ++i) sub.emplace(vars[i], points[choice[i]]);
            return g.subst(sub).is_zero();
        }
        for (size_t a = 0; a < points.size(); ++a) {
            choice[pos] = a;
            if (!rec(pos + 1)) return false;
        }
        return true;
    };
    return rec(0);
}

}  // namespace biggl
