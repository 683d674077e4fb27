#include "biggl/combinat.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace biggl {

std::vector<Tuple> subsets(int m, int k) {
    std::vector<Tuple> out;
    if (k < 0 || k > m) return out;
    Tuple cur;
    std::function<void(int)> rec = [&](int next) {
        if (int(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int v = next; v <= m - (k - int(cur.size())) + 1; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

std::vector<Tuple> distinct_tuples(int m, int k) {
    std::vector<Tuple> out;
    if (k < 0 || k > m) return out;
    Tuple cur;
    std::vector<bool> used(size_t(m) + 1, false);
    std::function<void()> rec = [&]() {
        if (int(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int v = 1; v <= m; ++v) {
            if (used[size_t(v)]) continue;
            used[size_t(v)] = true;
            cur.push_back(v);
            rec();
            cur.pop_back();
            used[size_t(v)] = false;
        }
    };
    rec();
    return out;
}

std::vector<Tuple> all_tuples(int m, int k) {
    std::vector<Tuple> out;
    if (k < 0) return out;
    Tuple cur;
    std::function<void()> rec = [&]() {
        if (int(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int v = 1; v <= m; ++v) {
            cur.push_back(v);
            rec();
            cur.pop_back();
        }
    };
    rec();
    return out;
}

int perm_sign(const Tuple& sigma) {
    int inv = 0;
    for (size_t i = 0; i < sigma.size(); ++i)
        for (size_t j = i + 1; j < sigma.size(); ++j)
            if (sigma[i] > sigma[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

void for_each_permutation(int n, const std::function<void(const Tuple&, int)>& fn) {
    Tuple sigma(static_cast<size_t>(n), 0);
    std::iota(sigma.begin(), sigma.end(), 1);
    do {
        fn(sigma, perm_sign(sigma));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
}

Tuple perm_inverse(const Tuple& sigma) {
    Tuple inv(sigma.size());
    for (size_t l = 0; l < sigma.size(); ++l) inv[size_t(sigma[l]) - 1] = int(l) + 1;
    return inv;
}

Tuple apply_perm(const Tuple& sigma, const Tuple& I) {
    if (sigma.size() != I.size()) throw std::invalid_argument("apply_perm: length mismatch");
    Tuple inv = perm_inverse(sigma);
    Tuple out(I.size());
    for (size_t l = 0; l < I.size(); ++l) out[l] = I[size_t(inv[l]) - 1];
    return out;
}

Int stirling2(int k, int l) {
    if (k < 0 || l < 0) throw std::invalid_argument("stirling2: negative argument");
    if (l > k) return 0;
    if (k == 0) return l == 0 ? 1 : 0;
    if (l == 0) return 0;
    std::vector<std::vector<Int>> s(size_t(k) + 1, std::vector<Int>(size_t(l) + 1, 0));
    s[0][0] = 1;
    for (int kk = 1; kk <= k; ++kk)
        for (int ll = 1; ll <= std::min(kk, l); ++ll)
            s[size_t(kk)][size_t(ll)] = Int(ll) * s[size_t(kk - 1)][size_t(ll)] + s[size_t(kk - 1)][size_t(ll - 1)];
    return s[size_t(k)][size_t(l)];
}

namespace {

void require_distinct(const Tuple& t, const char* where) {
    std::set<int> s(t.begin(), t.end());
    if (s.size() != t.size()) throw std::invalid_argument(std::string(where) + ": repeated entries");
}

}  // namespace

int sgn_pair(const Tuple& I, const Tuple& J) {
    if (I.size() != J.size()) throw std::invalid_argument("sgn_pair: length mismatch");
    require_distinct(I, "sgn_pair");
    require_distinct(J, "sgn_pair");
    std::map<int, int> pos_in_I;
    for (size_t l = 0; l < I.size(); ++l) pos_in_I[I[l]] = int(l) + 1;
    Tuple tau(J.size());
    for (size_t s = 0; s < J.size(); ++s) {
        auto it = pos_in_I.find(J[s]);
        if (it == pos_in_I.end()) return 0;
        tau[s] = it->second;
    }
    return perm_sign(tau);
}

int sgn_block(const std::vector<Tuple>& I_blocks, const std::vector<Tuple>& J_blocks) {
    auto concat = [](const std::vector<Tuple>& blocks, const char* where) {
        Tuple all;
        for (auto& b : blocks) all.insert(all.end(), b.begin(), b.end());
        require_distinct(all, where);
        return all;
    };
    Tuple I = concat(I_blocks, "sgn_block: overlapping I blocks");
    Tuple J = concat(J_blocks, "sgn_block: overlapping J blocks");
    return sgn_pair(I, J);
}

namespace {

Tuple sorted_difference(const Tuple& a, const Tuple& b) {
    std::set<int> sb(b.begin(), b.end());
    Tuple d;
    for (int v : a)
        if (!sb.count(v)) d.push_back(v);
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace

int epsilon(const Tuple& I1, const Tuple& J1, const Tuple& I2, const Tuple& J2) {
    size_t p = I1.size(), q = I2.size();
    if (J1.size() != p || J2.size() != q || q > p)
        throw std::invalid_argument("epsilon: size constraints violated");
    require_distinct(I1, "epsilon");
    require_distinct(J1, "epsilon");
    require_distinct(I2, "epsilon");
    require_distinct(J2, "epsilon");
    Tuple di = sorted_difference(I1, I2);
    Tuple dj = sorted_difference(J1, J2);
    if (di.size() != p - q || dj.size() != p - q || di != dj) return 0;
    // Pick the canonical admissible pair: reorder I1 as I2 followed by the
    // common sorted tail, and similarly for J1.
    Tuple A = I2, B = J2;
    A.insert(A.end(), di.begin(), di.end());
    B.insert(B.end(), dj.begin(), dj.end());
    int s1 = sgn_pair(A, I1);
    int s2 = sgn_pair(B, J1);
    if (s1 == 0 || s2 == 0) return 0;  // I2 not inside I1 (or J2 not inside J1)
    return s1 * s2;
}

int epsilon_search(const Tuple& I1, const Tuple& J1, const Tuple& I2, const Tuple& J2) {
    size_t p = I1.size(), q = I2.size();
    std::vector<int> signs;
    for_each_permutation(int(p), [&](const Tuple& t1, int s1) {
        Tuple tI = apply_perm(t1, I1);
        if (!std::equal(I2.begin(), I2.end(), tI.begin())) return;
        for_each_permutation(int(p), [&](const Tuple& t2, int s2) {
            Tuple tJ = apply_perm(t2, J1);
            if (!std::equal(J2.begin(), J2.end(), tJ.begin())) return;
            for (size_t l = q; l < p; ++l)
                if (tI[l] != tJ[l]) return;
            signs.push_back(s1 * s2);
        });
    });
    if (signs.empty()) return 0;
    for (int s : signs)
        if (s != signs[0]) throw std::logic_error("epsilon_search: sign not well defined");
    return signs[0];
}

Tuple subtuple(const Tuple& I, const Tuple& V) {
    Tuple out;
    out.reserve(V.size());
    for (int pos : V) out.push_back(I.at(size_t(pos) - 1));
    return out;
}

}  // namespace biggl
