// thetacol: command-line front end. JSON reports go to stdout (or --out),
// short human summaries to stderr.
//
// Exit codes: 0 success, 1 no colouring / witness found / check failed,
// 2 invalid input, 3 search budget exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "thetacol/classifier.hpp"
#include "thetacol/cycle_engine.hpp"
#include "thetacol/json_io.hpp"
#include "thetacol/lemma_lab.hpp"
#include "thetacol/oracle.hpp"
#include "thetacol/pair_search.hpp"
#include "thetacol/path_engine.hpp"
#include "thetacol/suite.hpp"
#include "thetacol/theta_solver.hpp"

using namespace thetacol;

namespace
{

struct Global
{
    std::uint64_t seed = 42;
    std::string out;
    bool quick = false;
};

void emit(const Global& g, const Json& j)
{
    const std::string text = j.dump(2) + "\n";
    if (g.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(g.out);
    if (!f)
        throw InputError("cannot write '" + g.out + "'");
    f << text;
}

ColourSet parse_colours(const std::string& csv)
{
    std::vector<Colour> cs;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) {
            try {
                cs.push_back(std::stoi(item));
            }
            catch (const std::exception&) {
                throw InputError("bad colour '" + item + "'");
            }
        }
    return ColourSet(cs);
}

// A theta from --theta, or a graph from --graph that must be a theta.
struct ThetaInput
{
    std::optional<ThetaGraph> theta;
    std::optional<Graph> graph;
};

ThetaGraph load_theta_only(const std::string& path) { return theta_from_json(load_json_file(path)); }

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"list and fold colouring of theta graphs"};
    app.require_subcommand(1);
    app.fallthrough();
    Global global;
    app.add_option("--seed", global.seed, "seed for randomised runs")->capture_default_str();
    app.add_option("--out", global.out, "write the JSON report here instead of stdout");
    app.add_flag("--quick", global.quick, "reduced ranges for suite runs");

    int exit_code = 0;
    std::function<void()> action;

    // oracle
    auto* oracle = app.add_subcommand("oracle", "exact (L,b)-colouring and choosability search");
    oracle->require_subcommand(1);
    std::string graph_path, lists_path, theta_path, coloring_path, mode = "exhaustive";
    int b = 1, a = 2, m = 1, tau = 0, palette = 0, lmax = 12;
    std::uint64_t budget = default_node_budget, samples = 1000;
    std::string floor_name = "k+1", s_csv, t_csv;
    bool section5 = false;

    auto* o_color = oracle->add_subcommand("color", "find an (L,b)-colouring");
    o_color->add_option("--graph", graph_path)->required();
    o_color->add_option("--lists", lists_path)->required();
    o_color->add_option("--b", b)->capture_default_str();
    o_color->add_option("--budget", budget, "search node budget")->capture_default_str();
    o_color->callback([&] {
        action = [&] {
            const Graph g = graph_from_json(load_json_file(graph_path));
            const auto lists = lists_from_json(load_json_file(lists_path), g);
            const auto phi = find_Lb_coloring(g, lists, b, budget);
            if (!phi) {
                std::cerr << "no (L," << b << ")-colouring exists\n";
                emit(global, Json{{"colourable", false}});
                exit_code = 1;
                return;
            }
            std::cerr << "found an (L," << b << ")-colouring\n";
            emit(global, Json{{"colourable", true}, {"coloring", to_json(g, *phi)}});
        };
    });

    auto* o_choose = oracle->add_subcommand("choosable", "search for an a-list assignment with no (L,b)-colouring");
    o_choose->add_option("--graph", graph_path)->required();
    o_choose->add_option("--a", a)->capture_default_str();
    o_choose->add_option("--b", b)->capture_default_str();
    o_choose->add_option("--mode", mode)->check(CLI::IsMember({"exhaustive", "random"}))->capture_default_str();
    o_choose->add_option("--palette", palette, "palette size (0: min(|V|a, 12))")->capture_default_str();
    o_choose->add_option("--samples", samples, "random mode sample count")->capture_default_str();
    o_choose->add_option("--budget", budget)->capture_default_str();
    o_choose->callback([&] {
        action = [&] {
            const Graph g = graph_from_json(load_json_file(graph_path));
            SamplerConfig cfg;
            cfg.mode = mode == "random" ? SamplerMode::random : SamplerMode::exhaustive;
            cfg.palette_size = palette;
            cfg.sample_count = samples;
            cfg.seed = global.seed;
            cfg.node_budget = budget;
            const auto rep = check_choosable(g, a, b, cfg);
            std::cerr << (rep.choosable() ? "no witness found" : "witness found") << " after "
                      << rep.assignments_checked << " assignments\n";
            emit(global, to_json(g, rep));
            exit_code = rep.choosable() ? 0 : 1;
        };
    });

    // path
    auto* path = app.add_subcommand("path", "path calculus");
    path->require_subcommand(1);
    auto* p_slp = path->add_subcommand("slp", "residual sequence, S_L(P) and, for odd paths, hat sets");
    p_slp->add_option("--lists", lists_path)->required();
    p_slp->callback([&] {
        action = [&] {
            const auto lists = path_lists_from_json(load_json_file(lists_path));
            Json j;
            if (lists.size() % 2 == 1) {
                j = to_json(hat_sets(lists));
                if (lists.size() >= 3)
                    j["identities"] = to_json(slp_identity_check(lists));
            }
            else {
                j = to_json(residual_sequence(lists));
                j.erase("lambda");
                j.erase("hat_first");
                j.erase("hat_last");
            }
            std::cerr << "S_L(P) = " << j["slp"] << "\n";
            emit(global, j);
        };
    });
    auto* p_dam = path->add_subcommand("damage", "dam(S,T) by definition and by closed form");
    p_dam->add_option("--lists", lists_path)->required();
    p_dam->add_option("--S", s_csv, "comma-separated colours removed from the head list");
    p_dam->add_option("--T", t_csv, "comma-separated colours removed from the tail list");
    p_dam->callback([&] {
        action = [&] {
            const auto lists = path_lists_from_json(load_json_file(lists_path));
            const auto S = parse_colours(s_csv);
            const auto T = parse_colours(t_csv);
            if (!S.is_subset_of(lists.front()) || !T.is_subset_of(lists.back()))
                throw InputError("S must lie in L(v_1) and T in L(v_n)");
            const auto prof = hat_sets(lists);
            const int direct = damage_definitional(lists, S, T);
            const int closed = damage_closed_form(prof, S, T);
            std::cerr << "damage " << direct << (direct == closed ? " (closed form agrees)" : " (CLOSED FORM DIFFERS)")
                      << "\n";
            emit(global, Json{{"damage", direct},
                              {"closed_form", closed},
                              {"agree", direct == closed},
                              {"reduced_slp", slp(reduce_lists(lists, S, T))}});
            exit_code = direct == closed ? 0 : 1;
        };
    });
    auto* p_color = path->add_subcommand("color", "m-fold colouring of a path from its lists");
    p_color->add_option("--lists", lists_path)->required();
    p_color->add_option("--m", m)->capture_default_str();
    p_color->callback([&] {
        action = [&] {
            const auto lists = path_lists_from_json(load_json_file(lists_path));
            const auto phi = color_path(lists, m);
            const int s = slp(lists);
            Json j{{"slp", s}, {"needed", static_cast<int>(lists.size()) * m}, {"colourable", phi.has_value()}};
            if (phi) {
                Json a_ = Json::array();
                for (const auto& set : phi->assignment)
                    a_.push_back(to_json(set));
                j["assignment"] = a_;
            }
            std::cerr << (phi ? "coloured" : "not colourable") << "\n";
            emit(global, j);
            exit_code = phi ? 0 : 1;
        };
    });

    // cycle
    auto* cycle = app.add_subcommand("cycle", "odd cycles");
    cycle->require_subcommand(1);
    auto* c_color = cycle->add_subcommand("color", "(L,b)-colouring of an odd cycle with a-lists, a/b >= 2+1/k");
    c_color->add_option("--lists", lists_path)->required();
    c_color->add_option("--b", b)->capture_default_str();
    c_color->callback([&] {
        action = [&] {
            const auto lists = cycle_lists_from_json(load_json_file(lists_path));
            if (lists.size() < 3 || lists.size() % 2 == 0)
                throw InputError("an odd cycle needs an odd number (>= 3) of lists");
            CycleInstance inst{static_cast<int>(lists.size() / 2), lists[0].count(), b, lists};
            const auto phi = color_odd_cycle(inst);
            const Graph g = cycle_graph(lists.size());
            const auto rep = verify_coloring(g, lists, b, phi);
            std::cerr << (rep.ok() ? "coloured" : "construction produced an invalid colouring") << "\n";
            emit(global, Json{{"coloring", to_json(g, phi)}, {"verification", to_json(rep)}});
            exit_code = rep.ok() ? 0 : 1;
        };
    });

    // pairs
    auto* pairs = app.add_subcommand("pairs", "couples, classification and pair search on a theta");
    pairs->require_subcommand(1);
    auto* pr_class = pairs->add_subcommand("classify", "heavy/light/safe couples per internal path");
    pr_class->add_option("--theta", theta_path)->required();
    pr_class->add_option("--lists", lists_path)->required();
    pr_class->callback([&] {
        action = [&] {
            const auto theta = load_theta_only(theta_path);
            const auto lists = lists_from_json(load_json_file(lists_path), theta.graph());
            ThetaPaths paths(theta, lists);
            const auto cls = classify_couples(paths, consistent_indexing(paths.hub_u_list(), paths.hub_v_list()));
            emit(global, to_json(cls));
        };
    });
    auto* pr_find = pairs->add_subcommand("find", "search a pair (S,T) of size m-tau within the damage budgets");
    pr_find->add_option("--theta", theta_path)->required();
    pr_find->add_option("--lists", lists_path)->required();
    pr_find->add_option("--m", m)->capture_default_str();
    pr_find->add_option("--tau", tau)->capture_default_str();
    pr_find->callback([&] {
        action = [&] {
            const auto theta = load_theta_only(theta_path);
            const auto lists = lists_from_json(load_json_file(lists_path), theta.graph());
            ThetaPaths paths(theta, lists);
            const int ell = paths.hub_u_list().count();
            Json j{{"size", m - tau}, {"budgets", paths.budgets(m)}};
            bool validated = false;
            if (theta.path_count() == 4) {
                const auto rep = check_conditions_T(theta, lists, ell, tau, m);
                validated = rep.all_ok();
                j["conditions"] = to_json(rep);
            }
            else if (theta.path_count() == 3) {
                bool shape_ok = true;
                for (std::size_t i = 0; i < 3; ++i)
                    shape_ok = shape_ok && theta.internal_size(i) >= 3 && theta.internal_size(i) % 2 == 1;
                if (shape_ok) {
                    const auto rep = check_conditions_C(theta, lists, ell, tau, m);
                    validated = rep.all_ok();
                    j["conditions"] = to_json(rep);
                }
            }
            const auto pair = find_pair(paths, m - tau, paths.budgets(m), validated);
            j["found"] = pair.has_value();
            if (pair)
                j["pair"] = to_json(*pair);
            std::cerr << (pair ? "pair found" : "no pair") << "\n";
            emit(global, j);
            exit_code = pair ? 0 : 1;
        };
    });

    // theta
    auto* theta = app.add_subcommand("theta", "(2m+1,m)-list-colouring of theta graphs");
    theta->require_subcommand(1);
    auto load_theta_input = [&](ThetaInput& in) {
        if (!theta_path.empty() == !graph_path.empty())
            throw InputError("give exactly one of --theta and --graph");
        if (!theta_path.empty())
            in.theta = load_theta_only(theta_path);
        else
            in.graph = graph_from_json(load_json_file(graph_path));
    };
    auto* t_solve = theta->add_subcommand("solve", "colour a theta graph from its lists");
    t_solve->add_option("--theta", theta_path);
    t_solve->add_option("--graph", graph_path);
    t_solve->add_option("--lists", lists_path)->required();
    t_solve->add_option("--m", m)->capture_default_str();
    t_solve->add_option("--budget", budget, "oracle node budget")->capture_default_str();
    t_solve->callback([&] {
        action = [&] {
            ThetaInput in;
            load_theta_input(in);
            const Graph& g = in.theta ? in.theta->graph() : *in.graph;
            const auto lists = lists_from_json(load_json_file(lists_path), g);
            const auto res = in.theta ? solve(*in.theta, lists, m, budget) : solve(*in.graph, lists, m, budget);
            std::cerr << (res.coloring ? "coloured" : "no colouring") << " (" << to_string(res.certificate) << ")\n";
            emit(global, to_json(g, res));
            exit_code = res.coloring ? 0 : 1;
        };
    });
    auto* t_verify = theta->add_subcommand("verify", "check a colouring against lists and fold");
    t_verify->add_option("--theta", theta_path);
    t_verify->add_option("--graph", graph_path);
    t_verify->add_option("--lists", lists_path)->required();
    t_verify->add_option("--m", m)->capture_default_str();
    t_verify->add_option("--coloring", coloring_path)->required();
    t_verify->callback([&] {
        action = [&] {
            ThetaInput in;
            load_theta_input(in);
            const Graph& g = in.theta ? in.theta->graph() : *in.graph;
            const auto lists = lists_from_json(load_json_file(lists_path), g);
            const auto phi = coloring_from_json(load_json_file(coloring_path), g);
            const auto rep = verify_coloring(g, lists, m, phi);
            std::cerr << (rep.ok() ? "valid" : "invalid") << "\n";
            emit(global, to_json(rep));
            exit_code = rep.ok() ? 0 : 1;
        };
    });

    // lemma
    auto* lemma = app.add_subcommand("lemma", "exact binomial-sum sweeps");
    lemma->require_subcommand(1);
    auto* l_sweep = lemma->add_subcommand("sweep", "sweep 2F <= binom(l,k), or the C(t,x) identities");
    l_sweep->add_option("--lmax", lmax)->capture_default_str();
    l_sweep->add_option("--floor", floor_name)->check(CLI::IsMember({"k+1", "k+2"}))->capture_default_str();
    l_sweep->add_flag("--section5", section5, "sweep the C(t,x) identity families instead");
    l_sweep->callback([&] {
        action = [&] {
            const auto rep = section5 ? verify_section5_identities(lmax)
                                      : verify_main_lemma(lmax, floor_name == "k+2" ? Floor::k_plus_2 : Floor::k_plus_1);
            std::cerr << rep.cells << " cells, " << (rep.all_hold() ? "all hold" : "exceptions found") << "\n";
            emit(global, to_json(rep));
            exit_code = rep.all_hold() ? 0 : 1;
        };
    });

    // classify
    auto* classify = app.add_subcommand("classify", "core, 2-choosability and critical family");
    classify->add_option("--graph", graph_path)->required();
    classify->callback([&] {
        action = [&] {
            const Graph g = graph_from_json(load_json_file(graph_path));
            const auto c = is_3_choice_critical(g);
            std::cerr << "family " << to_string(c.family) << ", 2-choosable " << (c.two_choosable ? "yes" : "no")
                      << "\n";
            emit(global, to_json(c));
        };
    });

    // suite
    auto* suite = app.add_subcommand("suite", "run the acceptance criteria");
    int suite_lmax = 12;
    suite->add_option("--lemma-lmax", suite_lmax)->capture_default_str();
    suite->callback([&] {
        action = [&] {
            SuiteConfig cfg{global.quick, global.seed, suite_lmax};
            Json report{{"seed", cfg.seed}, {"quick", cfg.quick}, {"lemma_lmax", cfg.lemma_lmax}};
            Json rows = Json::array();
            bool all = true;
            for (auto fn : criteria()) {
                const auto r = fn(cfg);
                all = all && r.passed;
                std::cerr << "criterion " << r.id << ": " << (r.passed ? "PASS" : "FAIL") << "  " << r.summary << "\n";
                rows.push_back(to_json(r));
            }
            report["criteria"] = rows;
            report["passed"] = all;
            emit(global, report);
            exit_code = all ? 0 : 1;
        };
    });

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    try {
        if (action)
            action();
    }
    catch (const InputError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    }
    catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    }
    catch (const Json::exception& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    }
    catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return exit_code;
}
