#include "biggl/jsonio.hpp"

#include "json.hpp"

#include <algorithm>
#include <vector>

namespace biggl {

namespace {

nlohmann::json mono_json(const Mono& m) {
    nlohmann::json j = nlohmann::json::object();
    for (auto& f : m.factors) j[f.first.name()] = f.second;
    return j;
}

nlohmann::json poly_terms(const Poly& p) {
    std::vector<const std::pair<const Mono, Rat>*> order;
    for (auto& t : p.terms()) order.push_back(&t);
    std::sort(order.begin(), order.end(),
              [](auto* a, auto* b) { return cmp_grlex(a->first, b->first) > 0; });
    nlohmann::json terms = nlohmann::json::array();
    for (auto* t : order)
        terms.push_back({{"coeff", rat_to_string(t->second)}, {"mono", mono_json(t->first)}});
    return terms;
}

}  // namespace

std::string poly_json(const Poly& p) { return poly_terms(p).dump(2); }

std::string weylop_json(const WeylOp& w) {
    nlohmann::json terms = nlohmann::json::array();
    for (auto& t : w.terms()) {
        terms.push_back({{"coeff", poly_terms(t.second)},
                         {"x", mono_json(t.first.xs)},
                         {"d", mono_json(t.first.ds)}});
    }
    return terms.dump(2);
}

}  // namespace biggl
