// Command-line front end: critical groups, covering/double-cover verifiers,
// family grids, SNF, and the brute-force matrix-tree oracle.
//
// Exit codes: 0 all checks pass, 1 some check failed, 2 parse/usage error,
// 3 validation error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "critgraph/coverings.hpp"
#include "critgraph/double_cover.hpp"
#include "critgraph/errors.hpp"
#include "critgraph/families.hpp"
#include "critgraph/graph_json.hpp"
#include "critgraph/incidence.hpp"

using namespace critgraph;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0, kExitCheckFail = 1, kExitParse = 2, kExitValidation = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json group_json(const AbelianGroup& g) {
    json j;
    j["invariant_factors"] = json::array();
    for (const Int& f : g.invariant_factors) j["invariant_factors"].push_back(f.get_str());
    j["free_rank"] = g.free_rank;
    return j;
}

struct Emitter {
    bool as_json = false;
    std::string command;
    json payload = json::object();
    Report report;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void print_and_exit() {
        long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        if (as_json) {
            payload["command"] = command;
            payload["elapsed_ms"] = ms;
            payload["checks"] = json::array();
            for (const Check& c : report.checks)
                payload["checks"].push_back(
                    {{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
            payload["ok"] = report.ok();
            std::cout << payload.dump(2) << "\n";
        } else {
            std::cout << "# " << command << "\n";
            for (const Check& c : report.checks)
                std::cout << (c.pass ? "[pass] " : "[FAIL] ") << c.name
                          << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
            std::cout << "elapsed: " << ms << " ms\n";
        }
        std::exit(report.ok() ? kExitPass : kExitCheckFail);
    }
};

std::string primary_str(const AbelianGroup& g) {
    if (g.trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, exps] : g.primary_decomposition())
        for (auto it = exps.rbegin(); it != exps.rend(); ++it) {
            if (!first) os << " + ";
            Int q;
            mpz_pow_ui(q.get_mpz_t(), p.get_mpz_t(), *it);
            os << "Z" << q.get_str();
            first = false;
        }
    return os.str();
}

SignedMultigraph random_signed_graph(std::mt19937& rng, int max_v, int max_e) {
    std::uniform_int_distribution<int> nv(1, max_v);
    SignedMultigraph g;
    g.vertices = nv(rng);
    std::uniform_int_distribution<int> ne(0, max_e);
    std::uniform_int_distribution<int> vd(0, g.vertices - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    int m = ne(rng);
    for (int i = 0; i < m; ++i) {
        int u = vd(rng), v = vd(rng);
        Edge e;
        e.sign = coin(rng) ? +1 : -1;
        if (u == v) {
            e.tail = e.head = u;
            e.kind = coin(rng) ? EdgeKind::Loop : EdgeKind::HalfLoop;
        } else {
            e.tail = u;
            e.head = v;
            e.kind = EdgeKind::Link;
        }
        g.edges.push_back(e);
    }
    return g;
}

void run_critgroup(Emitter& em, const std::string& file) {
    SignedMultigraph g = graph_from_json(read_file(file));
    CriticalGroup k = critical_group(g);
    em.payload["group"] = group_json(k.group);
    em.report.add("critical group", true,
                  k.group.str() +
                      (k.group.finite() && !k.group.trivial()
                           ? " = " + primary_str(k.group)
                           : ""));
}

void run_cover(Emitter& em, const std::string& file, bool verify, bool exactness) {
    VoltageGraph vg = voltage_from_json(read_file(file));
    if (verify || exactness) {
        CoveringReport rep = verify_covering_sequence(vg, exactness);
        em.report = rep.report;
        em.payload["k_total"] = group_json(rep.k_total);
        em.payload["k_base"] = group_json(rep.k_base);
        em.payload["k_voltage"] = group_json(rep.k_voltage);
        em.report.add("K(total) = " + rep.k_total.str() + ", K(voltage) = " +
                          rep.k_voltage.str() + ", K(base) = " + rep.k_base.str(),
                      true,
                      rep.k_total.order().get_str() + " = " +
                          rep.k_voltage.order().get_str() + " x " +
                          rep.k_base.order().get_str());
    } else {
        AbelianGroup kv = voltage_critical_group(vg);
        em.payload["k_voltage"] = group_json(kv);
        em.report.add("voltage critical group", true, kv.str());
    }
}

void run_double(Emitter& em, const std::string& f1, const std::string& f2, bool verify,
                bool exactness) {
    DoubleCoverSpec spec{graph_from_json(read_file(f1)), graph_from_json(read_file(f2))};
    DoubleCoverResult r = double_cover(spec);
    em.payload["total"] = json::parse(graph_to_json(r.total));
    if (verify || exactness) {
        em.report = verify_double_complex(spec, exactness);
    } else {
        CriticalGroup kt = critical_group(r.total);
        em.payload["k_total"] = group_json(kt.group);
        em.report.add("double cover critical group", true, kt.group.str());
    }
}

void run_families(Emitter& em, const std::string& kind, int n, int k, int m, int p,
                  bool grid) {
    if (kind == "crown") {
        if (grid) {
            em.report = verify_crown({3, 4, 5, 6, 7}, {0, 1, 2, 3});
        } else {
            AbelianGroup expected = crown_formula(n, k);
            AbelianGroup got = critical_group(build_crown(n, k)).group;
            em.payload["group"] = group_json(got);
            em.report.add("crown n=" + std::to_string(n) + " k=" + std::to_string(k),
                          got == expected, got.str() + " vs " + expected.str());
        }
    } else if (kind == "cube") {
        if (grid) {
            em.report = verify_cube(6, 2, {3, 5, 7}, 5);
        } else {
            AbelianGroup expected = cube_sylow_formula(n, m, p);
            AbelianGroup got = critical_group(build_cube_signed(n, m)).group.sylow(p);
            em.payload["group"] = group_json(got);
            em.report.add("cube n=" + std::to_string(n) + " m=" + std::to_string(m) +
                              " p=" + std::to_string(p),
                          got == expected, got.str() + " vs " + expected.str());
        }
    } else if (kind == "cover") {
        em.report = verify_cover_families();
    } else {
        throw ValidationError("unknown family kind: " + kind +
                              " (expected crown, cube, or cover)");
    }
}

void run_snf(Emitter& em, const std::string& file) {
    json j = json::parse(read_file(file));
    const json& rows = j.is_object() ? j.at("matrix") : j;
    if (!rows.is_array()) throw ValidationError("matrix file must hold an array of rows");
    std::vector<std::vector<long>> data;
    for (const auto& r : rows) data.push_back(r.get<std::vector<long>>());
    BigIntMatrix mat = BigIntMatrix::from_rows(data);
    SmithForm s = snf(mat);
    json diag = json::array();
    std::ostringstream os;
    for (const Int& d : s.diag) {
        diag.push_back(d.get_str());
        os << d.get_str() << " ";
    }
    em.payload["diag"] = diag;
    em.payload["rank"] = s.rank;
    em.report.add("smith normal form", true, "diag: " + os.str());
}

void run_oracle(Emitter& em, const std::string& file, int random_count,
                unsigned long seed, std::size_t cap) {
    auto check_one = [&](const SignedMultigraph& g, const std::string& name) {
        Int count = matrix_tree_count(g, cap);
        AbelianGroup k = critical_group(g).group;
        if (!k.finite()) {
            em.report.add(name, count == 0,
                          "enumerated " + count.get_str() + ", K infinite");
        } else {
            em.report.add(name, count == k.order(),
                          "enumerated " + count.get_str() + ", |K| = " + k.order().get_str());
        }
    };
    if (random_count > 0) {
        std::mt19937 rng(seed);
        for (int i = 0; i < random_count; ++i)
            check_one(random_signed_graph(rng, 5, 8), "random " + std::to_string(i));
    } else {
        check_one(graph_from_json(read_file(file)), file);
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"critical groups of signed graphs, voltage graphs, and their covers"};
    app.require_subcommand(1);
    bool as_json = false;
    unsigned long seed = 0;
    app.add_flag("--json", as_json, "machine-readable output");
    app.add_option("--seed", seed, "seed for randomized suites");

    std::string file, file2, kind;
    bool verify = false, exactness = false, grid = false;
    int n = 0, k = 0, m = 0, p = 3, random_count = 0;
    std::size_t cap = 22;

    auto* c_crit = app.add_subcommand("critgroup", "critical group of a signed graph");
    c_crit->add_option("file", file)->required();

    auto* c_cover = app.add_subcommand("cover", "voltage graph / derived cover");
    c_cover->add_option("file", file)->required();
    c_cover->add_flag("--verify", verify, "order and Sylow checks");
    c_cover->add_flag("--exactness", exactness, "induced-map checks");

    auto* c_double = app.add_subcommand("double", "signed double cover of a pair");
    c_double->add_option("file1", file)->required();
    c_double->add_option("file2", file2)->required();
    c_double->add_flag("--verify", verify);
    c_double->add_flag("--exactness", exactness);

    auto* c_fam = app.add_subcommand("families", "family formulas vs direct computation");
    c_fam->add_option("kind", kind, "crown | cube | cover")->required();
    c_fam->add_option("--n", n);
    c_fam->add_option("--k", k);
    c_fam->add_option("--m", m);
    c_fam->add_option("--p", p);
    c_fam->add_flag("--grid", grid, "run the full parameter grid");

    auto* c_snf = app.add_subcommand("snf", "Smith normal form of a matrix file");
    c_snf->add_option("file", file)->required();

    auto* c_oracle = app.add_subcommand("oracle", "matrix-tree count vs |K|");
    c_oracle->add_option("file", file);
    c_oracle->add_option("--random", random_count, "check N random graphs instead");
    c_oracle->add_option("--cap", cap, "edge cap for base enumeration");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }

    Emitter em;
    em.as_json = as_json;
    {
        std::ostringstream os;
        for (int i = 0; i < argc; ++i) os << (i ? " " : "") << argv[i];
        em.command = os.str();
    }

    try {
        if (c_crit->parsed()) run_critgroup(em, file);
        else if (c_cover->parsed()) run_cover(em, file, verify, exactness);
        else if (c_double->parsed()) run_double(em, file, file2, verify, exactness);
        else if (c_fam->parsed()) run_families(em, kind, n, k, m, p, grid);
        else if (c_snf->parsed()) run_snf(em, file);
        else if (c_oracle->parsed()) {
            if (random_count <= 0 && file.empty())
                throw ValidationError("oracle needs a file or --random N");
            run_oracle(em, file, random_count, seed, cap);
        }
    } catch (const json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const Error& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    em.print_and_exit();
}
