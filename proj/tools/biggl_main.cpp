#include "CLI11.hpp"
#include "json.hpp"

#include "biggl/biggen.hpp"
#include "biggl/capelli.hpp"
#include "biggl/checks.hpp"
#include "biggl/jsonio.hpp"
#include "biggl/sympower.hpp"
#include "biggl/yangian.hpp"

#include <iostream>
#include <sstream>
#include <string>

using namespace biggl;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int refuse(const std::string& msg) {
    std::cerr << "refused: " << msg << "\n";
    return kExitUsage;
}

int emit_report(const Report& rep, const std::string& format) {
    std::cout << (format == "json" ? rep.json() : rep.text());
    return rep.pass() ? kExitPass : kExitFail;
}

int run_gens(int n, int r, int p, int q, const std::string& which, bool cartan,
             const std::string& format) {
    if (n < 1 || n > 4 || r < 1 || r > 3) return refuse("gens supports 1 <= n <= 4, 1 <= r <= 3");
    if (p < 0 || q < 0 || p + q > n) return refuse("need p, q >= 0 and p + q <= n");
    WeylOp op = which == "M" ? m_pq_closed(n, r, p, q) : f_pq(n, r, p, q);
    if (cartan) op = restrict_cartan(op, n);
    if (format == "json") {
        nlohmann::json j;
        j["n"] = n;
        j["r"] = r;
        j["which"] = which;
        j["p"] = p;
        j["q"] = q;
        j["cartan"] = cartan;
        j["op"] = op.str();
        j["terms"] = nlohmann::json::parse(weylop_json(op));
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << op.str() << "\n";
    }
    return kExitPass;
}

int run_check(const std::string& kind, int n, int r, int k, int p, int m, bool cartan,
              const std::string& format) {
    if (kind == "commute") {
        if (cartan ? (n > 4 || r > 2) : (n > 3 || r > 2))
            return refuse("commute grid supported for n <= 4 (cartan) or n <= 3 (full), r <= 2;"
                          " the full grid is quadratic in the subset quadruples");
        return emit_report(verify_commutativity(n, r, cartan), format);
    }
    if (kind == "capelli") {
        if (n != r) return refuse("the square identity needs n = r");
        if (n > 3) return refuse("capelli supported for n <= 3");
        return emit_report(verify_classical_capelli(n), format);
    }
    if (kind == "cauchy-binet") {
        if (n > 3 || r > 3 || k > 3 || k > n) return refuse("cauchy-binet supports n,r,k <= 3");
        return emit_report(verify_cauchy_binet(n, r, k), format);
    }
    if (kind == "charpoly") {
        if (n > 3 || k > n) return refuse("charpoly supports n <= 3, k <= n");
        return emit_report(verify_capelli_z_expansion(n, k, n), format);
    }
    if (kind == "bethe") {
        if (n > 3 || r > 2 || p > n) return refuse("bethe supports n <= 3, r <= 2, p <= n");
        return emit_report(verify_bethe_bridge(n, r, p), format);
    }
    if (kind == "symdet") {
        if (n > 3 || r > 2 || k > 3) return refuse("symdet supports n <= 3, r <= 2, k <= 3");
        return emit_report(verify_symdet_closed(n, r, k), format);
    }
    if (kind == "relations") {
        if (n > 3 || m > 3) return refuse("relations supports n <= 3, m <= 3");
        return emit_report(relation_check_capelli_style(n, m), format);
    }
    return refuse("unknown check kind: " + kind);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact models of the commuting operator families on matrix-space polynomials"};
    app.require_subcommand(1);
    argv = app.ensure_utf8(argv);

    int n = 2, r = 1, p = 0, q = 0, k = 1, m = 1;
    bool cartan = false;
    std::string format = "text", which = "F", basis = "P", algebra = "gl", alphas = "1";

    auto* gens = app.add_subcommand("gens", "Print a generator in canonical form");
    gens->add_option("--n", n)->required();
    gens->add_option("--r", r)->required();
    gens->add_option("--p", p)->required();
    gens->add_option("--q", q)->required();
    gens->add_option("--which", which)->check(CLI::IsMember({"M", "F"}));
    gens->add_flag("--cartan", cartan);
    gens->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* check = app.add_subcommand("check", "Run a verification grid");
    std::string kind;
    check->add_option("kind", kind, "commute|capelli|cauchy-binet|charpoly|bethe|symdet|relations")
        ->required();
    check->add_option("--n", n);
    check->add_option("--r", r);
    check->add_option("--k", k);
    check->add_option("--p", p);
    check->add_option("--m", m);
    check->add_flag("--cartan", cartan);
    check->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* sympow = app.add_subcommand("sympow", "Symmetric-power model commands");
    sympow->require_subcommand(1);
    auto* present_cmd = sympow->add_subcommand("present", "Generators and relations");
    present_cmd->add_option("--n", n)->required();
    present_cmd->add_option("--m", m)->required();
    present_cmd->add_option("--basis", basis)->check(CLI::IsMember({"P", "M"}));
    present_cmd->add_option("--algebra", algebra)->check(CLI::IsMember({"gl", "sl"}));
    present_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    auto* relations_cmd = sympow->add_subcommand("check-relations", "Evaluate defining relations");
    relations_cmd->add_option("--n", n)->required();
    relations_cmd->add_option("--m", m)->required();
    relations_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    auto* dhat_cmd = sympow->add_subcommand("dhat", "Induced-operator consistency");
    dhat_cmd->add_option("--alphas", alphas, "comma separated indices");
    dhat_cmd->add_option("--n", n)->required();
    dhat_cmd->add_option("--m", m)->required();
    dhat_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    auto* rank_cmd = sympow->add_subcommand("upsilon-rank", "Rank of the embedding");
    rank_cmd->add_option("--n", n)->required();
    rank_cmd->add_option("--m", m)->required();
    rank_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (gens->parsed()) return run_gens(n, r, p, q, which, cartan, format);
        if (check->parsed()) return run_check(kind, n, r, k, p, m, cartan, format);
        if (present_cmd->parsed()) {
            if (n < 2 || n > 3 || m < 1 || m > 4 || (n == 3 && m > 3))
                return refuse("present supports n=2 (m <= 4) and n=3 (m <= 3)");
            PresentationRing ring = present(n, m, basis == "P" ? Basis::P : Basis::M,
                                            algebra == "gl" ? AlgebraKind::GL : AlgebraKind::SL);
            std::cout << (format == "json" ? ring.json() : ring.text());
            return kExitPass;
        }
        if (relations_cmd->parsed()) {
            if (n > 3 || m > 3) return refuse("check-relations supports n <= 3, m <= 3");
            return emit_report(relation_check_capelli_style(n, m), format);
        }
        if (dhat_cmd->parsed()) {
            if (n > 3 || m > 3) return refuse("dhat supports n <= 3, m <= 3");
            std::vector<int> list;
            std::stringstream ss(alphas);
            std::string item;
            while (std::getline(ss, item, ',')) {
                if (!item.empty()) list.push_back(std::stoi(item));
            }
            if (list.size() > 2) return refuse("dhat supports at most two indices");
            return emit_report(dhat_consistency(list, n, m), format);
        }
        if (rank_cmd->parsed()) {
            if (n > 3 || m > 3) return refuse("upsilon-rank supports n <= 3, m <= 3");
            return emit_report(upsilon_injectivity_check(n, m), format);
        }
    } catch (const std::invalid_argument& e) {
        return refuse(e.what());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
