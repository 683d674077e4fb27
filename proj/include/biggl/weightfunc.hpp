#pragma once

#include "biggl/poly.hpp"

#include <vector>

namespace biggl {

// All length-n compositions of m, in lexicographically descending order:
// (m,0,...,0) first.
std::vector<std::vector<int>> weight_diagram(int n, int m);

// Function from the weight diagram of the m-th symmetric power to
// polynomials in t_1..t_n, with pointwise ring operations.
class WeightFunc {
public:
    WeightFunc(int n, int m);
    static WeightFunc constant(int n, int m, const Poly& value);

    int n() const { return n_; }
    int m() const { return m_; }
    const std::vector<std::vector<int>>& weights() const { return weights_; }
    const Poly& value(size_t idx) const { return values_[idx]; }
    Poly& value(size_t idx) { return values_[idx]; }
    size_t size() const { return values_.size(); }

    WeightFunc operator+(const WeightFunc& o) const;
    WeightFunc operator-(const WeightFunc& o) const;
    WeightFunc operator*(const WeightFunc& o) const;
    WeightFunc operator*(const Rat& c) const;
    bool operator==(const WeightFunc& o) const;
    bool is_zero() const;

    // Pointwise substitution in the values.
    WeightFunc subst(const std::map<Var, Poly>& sub) const;

private:
    void check_compatible(const WeightFunc& o) const;
    int n_, m_;
    std::vector<std::vector<int>> weights_;
    std::vector<Poly> values_;
};

}  // namespace biggl
