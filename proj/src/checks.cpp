#include "biggl/checks.hpp"

#include "biggl/biggen.hpp"
#include "biggl/capelli.hpp"

#include <cstdlib>
#include <thread>
#include <vector>

namespace biggl {

void parallel_for(size_t count, const std::function<void(size_t)>& fn) {
    unsigned threads = 1;
    if (const char* env = std::getenv("BIGGL_THREADS")) {
        int v = std::atoi(env);
        if (v > 1) threads = unsigned(v);
    }
    threads = std::min<unsigned>(threads, std::max<size_t>(count, 1));
    if (threads <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&, w]() {
            for (size_t i = w; i < count; i += threads) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

Report verify_commutativity(int n, int r, bool cartan) {
    Report rep;
    rep.command = std::string("commute ") + (cartan ? "cartan" : "full") +
                  " n=" + std::to_string(n) + " r=" + std::to_string(r);
    struct Gen {
        int p, q;
        WeylOp op;
    };
    std::vector<Gen> gens;
    for (int p = 0; p <= n; ++p)
        for (int q = 0; p + q <= n; ++q)
            gens.push_back({p, q, cartan ? f_pq_cartan(n, r, p, q) : f_pq(n, r, p, q)});
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t a = 0; a < gens.size(); ++a)
        for (size_t b = a + 1; b < gens.size(); ++b) pairs.push_back({a, b});
    std::vector<WeylOp> diffs(pairs.size());
    parallel_for(pairs.size(), [&](size_t i) {
        diffs[i] = commutator(gens[pairs[i].first].op, gens[pairs[i].second].op);
    });
    for (size_t i = 0; i < pairs.size(); ++i) {
        if (diffs[i].is_zero()) {
            rep.note_pass();
        } else {
            auto& a = gens[pairs[i].first];
            auto& b = gens[pairs[i].second];
            rep.add_failure("[F_{" + std::to_string(a.p) + "," + std::to_string(a.q) + "}, F_{" +
                                std::to_string(b.p) + "," + std::to_string(b.q) + "}]",
                            diffs[i].str(), "0", "");
        }
    }
    return rep;
}

Report verify_classical_capelli(int n) {
    Report rep;
    rep.command = "capelli n=r=" + std::to_string(n);
    Tuple full;
    for (int i = 1; i <= n; ++i) full.push_back(i);
    WeylOp lhs = capelli_rdet(full, full, capelli_shifts(n), n);
    WeylOp rhs = xd_product(det_X(full, full), det_D(full, full));
    if (lhs == rhs)
        rep.note_pass();
    else
        rep.add_failure("square identity", lhs.str(), rhs.str(), (lhs - rhs).str());
    return rep;
}

Report verify_symdet_closed(int n, int r, int k) {
    Report rep;
    rep.command = "symdet n=" + std::to_string(n) + " r=" + std::to_string(r) +
                  " k=" + std::to_string(k);
    for (int kk = 1; kk <= k && kk <= n; ++kk) {
        auto tuples = distinct_tuples(n, kk);
        std::vector<std::pair<size_t, size_t>> pairs;
        for (size_t a = 0; a < tuples.size(); ++a)
            for (size_t b = 0; b < tuples.size(); ++b) pairs.push_back({a, b});
        std::vector<char> ok(pairs.size(), 0);
        parallel_for(pairs.size(), [&](size_t i) {
            const Tuple& I = tuples[pairs[i].first];
            const Tuple& J = tuples[pairs[i].second];
            ok[i] = symdet_LE(I, J, r) == symdet_LE_closed(I, J, r) ? 1 : 0;
        });
        for (size_t i = 0; i < pairs.size(); ++i) {
            if (ok[i]) {
                rep.note_pass();
            } else {
                rep.add_failure("k=" + std::to_string(kk) + " pair " + std::to_string(i),
                                "<expansion>", "<closed form>", "differs");
            }
        }
    }
    return rep;
}

}  // namespace biggl
