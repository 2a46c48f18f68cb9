#include "hedonic/existence.hpp"
#include "hedonic/fpt.hpp"
#include "hedonic/io.hpp"
#include "hedonic/oracle.hpp"
#include "hedonic/params.hpp"
#include "hedonic/reductions.hpp"
#include "hedonic/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <iostream>

using namespace hedonic;

namespace {

// exit codes: 0 stable/exists/generated, 1 unstable/not-exists,
// 2 usage or validation error, 3 size limit
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSizeLimit = 3;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

std::string join_agents(const std::vector<AgentId>& agents) {
    std::string s;
    for (std::size_t i = 0; i < agents.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(agents[i]);
    }
    return s;
}

void print_certificate(std::ostream& out, const BlockingCertificate& cert) {
    out << "certificate kind=" << to_string(cert.kind) << " agents=" << join_agents(cert.coalition);
    if (cert.kind == BlockKind::NashDeviation || cert.kind == BlockKind::BlockingTuple)
        out << " agent=" << cert.agent << " target=" << cert.target_coalition;
    out << "\n";
    for (const auto& [a, d] : cert.per_agent)
        out << "delta agent=" << a << " friends_in_block=" << d.friends_in_block
            << " enemies_in_block=" << d.enemies_in_block << " friends_in_pi=" << d.friends_in_pi
            << " enemies_in_pi=" << d.enemies_in_pi << "\n";
}

void print_report(const Verdict& v, const Instance& inst, const Partition* pi, const Timer& timer) {
    std::cout << "algorithm " << v.algorithm << "\n";
    std::cout << "verdict " << to_string(v.kind) << "\n";
    for (const auto& [k, val] : v.notes) std::cout << "note " << k << " " << val << "\n";
    if (v.certificate) print_certificate(std::cout, *v.certificate);
    if (v.partition)
        for (const auto& c : v.partition->coalitions)
            std::cout << "partition-coalition " << join_agents(c) << "\n";
    std::cout << "params n=" << inst.n() << " model=" << (inst.model() == Model::FE ? "fe" : "fen");
    if (pi) std::cout << " kappa=" << pi->max_coalition_size();
    std::cout << "\n";
    std::cout << "elapsed_ms " << timer.ms() << "\n";
}

int exit_code_for(const Verdict& v) {
    return (v.kind == VerdictKind::Stable || v.kind == VerdictKind::Exists) ? 0 : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hedonic games with friend-oriented preferences: verification, "
                 "existence algorithms, oracles, and hardness-instance generators"};
    app.require_subcommand(1);

    // ---- verify ----------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "verify stability of a partition");
    std::string v_stability, v_algo = "auto", v_instance, v_partition;
    std::uint64_t v_seed = 0;
    int v_jobs = 1;
    bool v_report = false;
    verify->add_option("--stability", v_stability, "core | strict-core | nash | individual")
        ->required();
    verify->add_option("--algo", v_algo, "brute | xp | fpt-kd | fpt-kf | dag (core notions)");
    verify->add_option("--instance", v_instance, "instance file")->required();
    verify->add_option("--partition", v_partition, "partition file")->required();
    verify->add_option("--seed", v_seed, "random seed for the randomized verifiers");
    verify->add_option("--jobs", v_jobs, "worker cap for the brute-force search");
    verify->add_flag("--report", v_report, "print a machine-readable report");

    // ---- solve -----------------------------------------------------------
    auto* solve = app.add_subcommand("solve", "construct a stable partition");
    std::string s_stability, s_algo, s_instance, s_out;
    bool s_report = false;
    solve->add_option("--stability", s_stability, "core | strict-core | nash | individual")
        ->required();
    solve->add_option("--algo", s_algo, "scc | dag-individ | dag-nash | symmetric | f2 | brute")
        ->required();
    solve->add_option("--instance", s_instance, "instance file")->required();
    solve->add_option("--out", s_out, "write the partition to this file");
    solve->add_flag("--report", s_report, "print a machine-readable report");

    // ---- generate --------------------------------------------------------
    auto* generate = app.add_subcommand("generate", "compile a seed into a hedonic instance");
    std::string g_reduction, g_seed_file, g_out, g_mode = "core";
    generate
        ->add_option("--reduction", g_reduction,
                     "fe-core-f1 | fe-core-planar4 | fe-core-clique | fen-core-f1 | "
                     "fen-strictcore-dag | fe-nashex | fen-individex")
        ->required();
    generate->add_option("--seed", g_seed_file, "seed file (x3c or clique)")->required();
    generate->add_option("--out", g_out, "output directory")->required();
    generate->add_option("--mode", g_mode, "core | strict-core (for the fe-core gadgets)");

    // ---- params ----------------------------------------------------------
    auto* params_cmd = app.add_subcommand("params", "structural parameters of an instance");
    std::string p_instance, p_partition;
    bool p_exact = false;
    int p_limit = 20;
    params_cmd->add_option("--instance", p_instance, "instance file")->required();
    params_cmd->add_option("--partition", p_partition, "partition file (for kappa)");
    params_cmd->add_flag("--exact-fas", p_exact, "compute the feedback arc set number exactly");
    params_cmd->add_option("--fas-limit", p_limit, "residual arc limit for exact mode");

    // ---- oracle ----------------------------------------------------------
    auto* oracle_cmd = app.add_subcommand("oracle", "exponential existence ground truth");
    std::string o_notion, o_instance;
    bool o_report = false;
    oracle_cmd->add_option("--notion", o_notion, "nash | individual | core | strict-core")
        ->required();
    oracle_cmd->add_option("--instance", o_instance, "instance file")->required();
    oracle_cmd->add_flag("--report", o_report, "print a machine-readable report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;  // keep --help at 0, usage errors at 2
    }

    try {
        Timer timer;
        if (*verify) {
            Instance inst = parse_instance(read_file(v_instance));
            Partition pi = parse_partition(read_file(v_partition), inst.n());
            Verdict verdict;
            if (v_stability == "nash") {
                verdict = verify_nash(inst, pi);
            } else if (v_stability == "individual") {
                verdict = verify_individual(inst, pi);
            } else if (v_stability == "core" || v_stability == "strict-core") {
                const CoreMode mode =
                    v_stability == "core" ? CoreMode::Core : CoreMode::StrictCore;
                const std::string algo = v_algo == "auto" ? "xp" : v_algo;
                if (algo == "brute") {
                    auto cert = find_blocking_bruteforce(inst, pi, block_search_for(mode),
                                                         std::nullopt, {}, v_jobs);
                    verdict.algorithm = mode == CoreMode::Core ? "core-brute" : "strict-core-brute";
                    verdict.kind = cert ? VerdictKind::Unstable : VerdictKind::Stable;
                    verdict.certificate = std::move(cert);
                } else if (algo == "xp") {
                    verdict = verify_core_xp(inst, pi, mode);
                } else if (algo == "fpt-kd") {
                    SeparationConfig cfg;
                    cfg.rng_seed = v_seed;
                    verdict = verify_core_fpt_kd(inst, pi, mode, cfg);
                } else if (algo == "fpt-kf") {
                    ColorCodingConfig cfg;
                    cfg.rng_seed = v_seed;
                    verdict = verify_core_fpt_kf(inst, pi, mode, cfg);
                } else if (algo == "dag") {
                    auto maybe = verify_core_dag_shortcut(inst, pi, mode);
                    if (!maybe) {
                        std::cerr << "dag shortcut not applicable to this instance\n";
                        return kExitUsage;
                    }
                    verdict = *maybe;
                } else {
                    std::cerr << "unknown --algo " << algo << "\n";
                    return kExitUsage;
                }
            } else {
                std::cerr << "unknown --stability " << v_stability << "\n";
                return kExitUsage;
            }
            if (v_report) print_report(verdict, inst, &pi, timer);
            else {
                std::cout << to_string(verdict.kind) << "\n";
                if (verdict.certificate) print_certificate(std::cout, *verdict.certificate);
            }
            return exit_code_for(verdict);
        }

        if (*solve) {
            Instance inst = parse_instance(read_file(s_instance));
            Verdict verdict;
            if (s_algo == "scc") {
                verdict = scc_partition(inst).verdict;
            } else if (s_algo == "dag-individ") {
                verdict.kind = VerdictKind::Exists;
                verdict.partition = solve_individ_dag(inst);
                verdict.algorithm = "dag-individ";
            } else if (s_algo == "dag-nash") {
                verdict.kind = VerdictKind::Exists;
                verdict.partition = solve_nash_dag(inst);
                verdict.algorithm = "dag-nash";
            } else if (s_algo == "symmetric") {
                verdict.kind = VerdictKind::Exists;
                verdict.partition = solve_nash_symmetric(inst);
                verdict.algorithm = "symmetric-nash";
            } else if (s_algo == "f2") {
                verdict = decide_nash_fe_f2(inst);
            } else if (s_algo == "brute") {
                StabilityNotion notion;
                if (s_stability == "nash") notion = StabilityNotion::Nash;
                else if (s_stability == "individual") notion = StabilityNotion::Individual;
                else if (s_stability == "core") notion = StabilityNotion::Core;
                else if (s_stability == "strict-core") notion = StabilityNotion::StrictCore;
                else {
                    std::cerr << "unknown --stability " << s_stability << "\n";
                    return kExitUsage;
                }
                verdict = exists_stable_partition(inst, notion);
            } else {
                std::cerr << "unknown --algo " << s_algo << "\n";
                return kExitUsage;
            }
            if (verdict.partition && !s_out.empty())
                write_file(s_out, serialize_partition(*verdict.partition));
            if (s_report) print_report(verdict, inst, nullptr, timer);
            else {
                std::cout << to_string(verdict.kind) << "\n";
                if (verdict.partition) std::cout << serialize_partition(*verdict.partition);
            }
            return exit_code_for(verdict);
        }

        if (*generate) {
            if (g_mode != "core" && g_mode != "strict-core") {
                std::cerr << "unknown --mode " << g_mode << "\n";
                return kExitUsage;
            }
            const CoreMode mode = g_mode == "strict-core" ? CoreMode::StrictCore : CoreMode::Core;
            GeneratedCase gc;
            if (g_reduction == "fe-core-clique") {
                CliqueInstance seed = parse_clique_seed(read_file(g_seed_file));
                gc = gen_fe_core_clique(seed, mode);
            } else {
                X3CInstance seed = parse_x3c_seed(read_file(g_seed_file));
                if (g_reduction == "fe-core-f1") gc = gen_fe_core_f1(seed, mode);
                else if (g_reduction == "fe-core-planar4") gc = gen_fe_core_planar4(seed, mode);
                else if (g_reduction == "fen-core-f1") gc = gen_fen_core_f1(seed);
                else if (g_reduction == "fen-strictcore-dag") gc = gen_fen_strictcore_dag(seed);
                else if (g_reduction == "fe-nashex") gc = gen_fe_nashex(seed);
                else if (g_reduction == "fen-individex") gc = gen_fen_individex(seed);
                else {
                    std::cerr << "unknown --reduction " << g_reduction << "\n";
                    return kExitUsage;
                }
            }
            std::filesystem::create_directories(g_out);
            const std::string ext = gc.instance.model() == Model::FE ? "fe" : "fen";
            const std::string instance_path = g_out + "/instance." + ext;
            write_file(instance_path, serialize_instance(gc.instance, gc.name_map));
            std::cout << "wrote " << instance_path << "\n";
            if (gc.pi) {
                const std::string part_path = g_out + "/initial.part";
                write_file(part_path, serialize_partition(*gc.pi));
                std::cout << "wrote " << part_path << "\n";
            }
            std::cout << "agents " << gc.instance.n() << "\n";
            if (gc.ground_truth)
                std::cout << "ground-truth " << (*gc.ground_truth ? "positive" : "negative")
                          << "\n";
            return 0;
        }

        if (*params_cmd) {
            Instance inst = parse_instance(read_file(p_instance));
            std::optional<Partition> pi;
            if (!p_partition.empty()) pi = parse_partition(read_file(p_partition), inst.n());
            FasOptions opts;
            opts.exact = p_exact;
            opts.residual_arc_limit = p_limit;
            Params params = compute_params(inst, pi ? &*pi : nullptr, opts);
            std::cout << "delta " << params.delta << "\n";
            if (params.kappa) std::cout << "kappa " << *params.kappa << "\n";
            std::cout << "fas " << params.fas.value << " "
                      << (params.fas.exact ? "exact" : "upper-bound") << "\n";
            return 0;
        }

        if (*oracle_cmd) {
            Instance inst = parse_instance(read_file(o_instance));
            StabilityNotion notion;
            if (o_notion == "nash") notion = StabilityNotion::Nash;
            else if (o_notion == "individual") notion = StabilityNotion::Individual;
            else if (o_notion == "core") notion = StabilityNotion::Core;
            else if (o_notion == "strict-core") notion = StabilityNotion::StrictCore;
            else {
                std::cerr << "unknown --notion " << o_notion << "\n";
                return kExitUsage;
            }
            Verdict verdict = exists_stable_partition(inst, notion);
            if (o_report) print_report(verdict, inst, nullptr, timer);
            else {
                std::cout << to_string(verdict.kind) << "\n";
                if (verdict.partition) std::cout << serialize_partition(*verdict.partition);
            }
            return exit_code_for(verdict);
        }
    } catch (const SizeLimitError& e) {
        std::cerr << "size limit: " << e.what() << "\n";
        return kExitSizeLimit;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ModelMismatchError& e) {
        std::cerr << "model mismatch: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
