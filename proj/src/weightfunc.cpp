#include "biggl/weightfunc.hpp"

#include <functional>
#include <stdexcept>

namespace biggl {

std::vector<std::vector<int>> weight_diagram(int n, int m) {
    if (n < 1 || m < 0) throw std::invalid_argument("weight_diagram: need n >= 1, m >= 0");
    std::vector<std::vector<int>> out;
    std::vector<int> cur(size_t(n), 0);
    std::function<void(int, int)> rec = [&](int idx, int left) {
        if (idx == n - 1) {
            cur[size_t(idx)] = left;
            out.push_back(cur);
            return;
        }
        for (int v = left; v >= 0; --v) {
            cur[size_t(idx)] = v;
            rec(idx + 1, left - v);
        }
    };
    rec(0, m);
    return out;
}

WeightFunc::WeightFunc(int n, int m)
    : n_(n), m_(m), weights_(weight_diagram(n, m)), values_(weights_.size()) {}

WeightFunc WeightFunc::constant(int n, int m, const Poly& value) {
    WeightFunc f(n, m);
    for (auto& v : f.values_) v = value;
    return f;
}

void WeightFunc::check_compatible(const WeightFunc& o) const {
    if (n_ != o.n_ || m_ != o.m_) throw std::invalid_argument("WeightFunc: shape mismatch");
}

WeightFunc WeightFunc::operator+(const WeightFunc& o) const {
    check_compatible(o);
    WeightFunc r = *this;
    for (size_t i = 0; i < values_.size(); ++i) r.values_[i] += o.values_[i];
    return r;
}

WeightFunc WeightFunc::operator-(const WeightFunc& o) const {
    check_compatible(o);
    WeightFunc r = *this;
    for (size_t i = 0; i < values_.size(); ++i) r.values_[i] -= o.values_[i];
    return r;
}

WeightFunc WeightFunc::operator*(const WeightFunc& o) const {
    check_compatible(o);
    WeightFunc r = *this;
    for (size_t i = 0; i < values_.size(); ++i) r.values_[i] = r.values_[i] * o.values_[i];
    return r;
}

WeightFunc WeightFunc::operator*(const Rat& c) const {
    WeightFunc r = *this;
    for (auto& v : r.values_) v = v * c;
    return r;
}

bool WeightFunc::operator==(const WeightFunc& o) const {
    return n_ == o.n_ && m_ == o.m_ && values_ == o.values_;
}

bool WeightFunc::is_zero() const {
    for (auto& v : values_)
        if (!v.is_zero()) return false;
    return true;
}

WeightFunc WeightFunc::subst(const std::map<Var, Poly>& sub) const {
    WeightFunc r = *this;
    for (auto& v : r.values_) v = v.subst(sub);
    return r;
}

}  // namespace biggl
