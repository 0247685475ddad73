// Command-line front end: instance I/O, gadget build/verify, biclique
// covers, reduction drivers and a benchmark harness.
//
// Exit codes: 0 success, 1 verification failure, 2 input or parameter error,
// 3 empty repetition window.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "cgadget/instancegen.hpp"
#include "cgadget/io.hpp"
#include "cgadget/parallel.hpp"
#include "cgadget/reduce.hpp"

using namespace cgadget;

namespace {

struct GlobalConfig {
    unsigned threads = default_thread_count();
    std::uint64_t seed = 1;
    std::uint64_t enum_budget = kDefaultEnumerationBudget;
    std::uint64_t verify_budget = kDefaultVerificationBudget;
    std::uint64_t tensor_budget = kDefaultTensorBudget;
};

std::uint64_t now_millis() {
    return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                          std::chrono::steady_clock::now().time_since_epoch())
                                          .count());
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_instance(in);
}

void store_instance(const std::string& path, const Instance& instance) {
    std::ostringstream os;
    write_instance(os, instance);
    write_file(path, os.str());
}

BipartiteGadget load_gadget(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_gadget(in);
}

void print_report(const GadgetReport& report) {
    std::cout << "edges " << report.edge_count << '\n';
    if (report.edge_min) std::cout << "edge_min " << *report.edge_min << " edge_max " << *report.edge_max << '\n';
    if (report.cross_nonedge_extreme) std::cout << "cross_nonedge " << *report.cross_nonedge_extreme << '\n';
    if (report.same_side_extreme) std::cout << "same_side " << *report.same_side_extreme << '\n';
    std::cout << "density_floor " << report.density_floor.str() << " density_ok "
              << (report.density_ok ? "true" : "false") << '\n';
    std::cout << "violations " << report.violation_total << '\n';
    for (const auto& v : report.violations) std::cout << "  " << v << '\n';
}

void write_trace(const std::string& path, const ReductionTrace& trace) {
    std::ostringstream os;
    os << "n,n_prime,k,subinstances,dim_out,alpha_out,millis\n"
       << trace.n << ',' << trace.n_prime << ',' << trace.cover_k << ',' << trace.sub_instances << ','
       << trace.dim_out << ',' << trace.alpha_out << ',' << trace.millis << '\n';
    write_file(path, os.str());
}

struct PipelineInputs {
    BipartiteGadget gadget;
    PermutationCover cover;
};

/// Gadget from --gadget or built from (--q, --k1[, --k2]); cover from
/// --cover or computed from the gadget adjacency.
PipelineInputs resolve_inputs(const GlobalConfig& cfg, const std::string& kind, const std::string& gadget_path,
                              const std::string& cover_path, std::uint64_t q, std::size_t k1, std::size_t k2) {
    PipelineInputs in;
    if (!gadget_path.empty()) {
        in.gadget = load_gadget(gadget_path);
    } else {
        if (q == 0) throw BadParametersError("need --gadget or --q/--k1");
        if (kind == "cd") in.gadget = build_cd_gadget(q, k1, cfg.enum_budget);
        else if (kind == "ip") in.gadget = build_ip_gadget(q, k1, cfg.enum_budget);
        else in.gadget = build_gap_cd_gadget(q, k1, k2, cfg.enum_budget);
    }
    if (!cover_path.empty()) {
        std::ifstream cin_(cover_path);
        if (!cin_) throw ParseError("cannot open " + cover_path);
        in.cover = read_cover(cin_);
    } else {
        in.cover = cover_biclique(in.gadget.adjacency);
    }
    return in;
}

void emit_stream(SubInstanceStream& stream, const std::string& prefix) {
    Instance sub;
    while (stream.next(sub)) {
        std::ostringstream name;
        name << prefix << ".i" << stream.cur_block_i() << "_j" << stream.cur_block_j() << "_t"
             << stream.cur_perm() << ".txt";
        store_instance(name.str(), sub);
    }
    stream.reset();
}

std::pair<std::uint64_t, std::size_t> factor_prime_power(std::uint64_t n) {
    for (std::uint64_t q = 2; q * q <= n; ++q) {
        if (n % q != 0) continue;
        std::size_t k = 0;
        std::uint64_t m = n;
        while (m % q == 0) { m /= q; ++k; }
        if (m != 1 || !is_prime(q)) throw BadParametersError(std::to_string(n) + " is not a prime power");
        return {q, k};
    }
    if (!is_prime(n)) throw BadParametersError(std::to_string(n) + " is not a prime power");
    return {n, 1};
}

int run_bench(const GlobalConfig& cfg, const std::string& suite, const std::vector<std::uint64_t>& sizes,
              const std::string& out, std::uint64_t q, std::size_t k1, std::size_t d) {
    std::ostringstream csv;
    csv << "suite,n,nprime,k,subinstances,dim_out,millis,verdict,oracle_verdict,agree\n";
    if (suite == "bcp-to-cp") {
        const BipartiteGadget gadget = build_cd_gadget(q, k1, cfg.enum_budget);
        const PermutationCover cover = cover_biclique(gadget.adjacency);
        std::mt19937_64 rng(cfg.seed);
        std::size_t alpha_cycle = 0;
        for (std::uint64_t n : sizes) {
            auto [a, b] = random_bichromatic(static_cast<std::size_t>(n), d, rng);
            const std::int64_t alpha = 1 + static_cast<std::int64_t>(alpha_cycle++ % 8);
            const DriveResult got = run_bcp_via_cp(a, b, alpha, gadget, cover);
            const bool oracle = static_cast<std::int64_t>(solve_bcp(a, b).value) <= alpha;
            csv << suite << ',' << n << ',' << gadget.n << ',' << cover.k() << ','
                << got.trace.sub_instances << ',' << got.trace.dim_out << ',' << got.trace.millis << ','
                << (got.yes ? "YES" : "NO") << ',' << (oracle ? "YES" : "NO") << ','
                << (got.yes == oracle ? "true" : "false") << '\n';
        }
    } else if (suite == "cover") {
        for (std::uint64_t n : sizes) {
            const auto [fq, fk] = factor_prime_power(n);
            const std::uint64_t start = now_millis();
            const BipartiteGadget gadget = build_cd_gadget(fq, fk, cfg.enum_budget);
            const PermutationCover cover = cover_biclique(gadget.adjacency);
            const std::uint64_t millis = now_millis() - start;
            const CoverReport report = verify_cover(cover, gadget.adjacency);
            const bool bound_ok = report.k_ok;
            const bool union_ok = report.uncovered_total == 0;
            csv << suite << ',' << n << ',' << gadget.n << ',' << cover.k() << ',' << 0 << ','
                << gadget.dim << ',' << millis << ',' << (bound_ok ? "YES" : "NO") << ','
                << (union_ok ? "YES" : "NO") << ',' << (bound_ok && union_ok ? "true" : "false") << '\n';
        }
    } else {
        throw BadParametersError("unknown bench suite: " + suite);
    }
    write_file(out, csv.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Code-based bipartite gadgets, biclique covers and fine-grained reductions"};
    app.require_subcommand(1);
    app.fallthrough(); // global options may appear after the subcommand

    GlobalConfig cfg;
    if (const char* env = std::getenv("CGADGET_BUDGET")) cfg.enum_budget = std::strtoull(env, nullptr, 10);
    app.add_option("--threads", cfg.threads, "parallelism cap");
    app.add_option("--seed", cfg.seed, "seed for all randomized steps");
    app.add_option("--enum-budget", cfg.enum_budget, "codeword enumeration budget");
    app.add_option("--verify-budget", cfg.verify_budget, "gadget verification budget");
    app.add_option("--tensor-budget", cfg.tensor_budget, "tensor dimension budget");

    // ---- gadget ----
    auto* gadget_cmd = app.add_subcommand("gadget", "build or verify gadgets");
    gadget_cmd->require_subcommand(1);
    std::string g_kind = "cd", g_out, g_in;
    std::uint64_t g_q = 5;
    std::size_t g_k1 = 1, g_k2 = 0;
    auto* g_build = gadget_cmd->add_subcommand("build", "construct a gadget");
    g_build->add_option("--kind", g_kind, "cd | ip | gapcd")->check(CLI::IsMember({"cd", "ip", "gapcd"}));
    g_build->add_option("--q", g_q, "prime field size")->required();
    g_build->add_option("--k1", g_k1, "inner code dimension")->required();
    g_build->add_option("--k2", g_k2, "outer code dimension (gapcd only)");
    g_build->add_option("--out", g_out, "output file")->required();
    auto* g_verify = gadget_cmd->add_subcommand("verify", "exhaustively check a gadget file");
    g_verify->add_option("file", g_in, "gadget file")->required();

    // ---- cover ----
    auto* cover_cmd = app.add_subcommand("cover", "biclique covers of gadget graphs");
    cover_cmd->require_subcommand(1);
    std::string c_gadget, c_out, c_in;
    auto* c_build = cover_cmd->add_subcommand("build", "compute a cover");
    c_build->add_option("--gadget", c_gadget, "gadget file")->required();
    c_build->add_option("--out", c_out, "output file")->required();
    auto* c_verify = cover_cmd->add_subcommand("verify", "check a cover file");
    c_verify->add_option("--gadget", c_gadget, "gadget file")->required();
    c_verify->add_option("--in", c_in, "cover file")->required();

    // ---- solve ----
    auto* solve_cmd = app.add_subcommand("solve", "brute-force exact solvers");
    std::string s_kind, s_in;
    solve_cmd->add_option("--kind", s_kind, "ov | cp | bcp | mip | bmip | editcp")->required();
    solve_cmd->add_option("--in", s_in, "instance file")->required();

    // ---- reduce ----
    auto* reduce_cmd = app.add_subcommand("reduce", "reduction pipelines");
    reduce_cmd->require_subcommand(1);
    std::string r_in, r_out, r_trace, r_gadget, r_cover, r_oracle, r_emit;
    std::uint64_t r_q = 0;
    std::size_t r_k1 = 1, r_k2 = 0;
    std::string r_kappa = "1/2", r_theta = "1/20";
    unsigned r_t = 2;
    std::string r_c = "4";
    std::size_t r_samples = 1000;

    auto add_common = [&](CLI::App* sub, bool with_gadget) {
        sub->add_option("--in", r_in, "input instance")->required();
        sub->add_option("--trace", r_trace, "trace CSV path");
        if (with_gadget) {
            sub->add_option("--gadget", r_gadget, "gadget file (else built from --q/--k1)");
            sub->add_option("--cover", r_cover, "cover file (else computed)");
            sub->add_option("--q", r_q, "prime for a built gadget");
            sub->add_option("--k1", r_k1, "inner dimension for a built gadget");
            sub->add_option("--oracle", r_oracle, "'brute' runs the driver end to end");
            sub->add_option("--emit", r_emit, "prefix for emitted sub-instance files");
        }
    };
    auto* r_ovbcp = reduce_cmd->add_subcommand("ov-to-bcp", "orthogonal vectors to bichromatic closest pair");
    add_common(r_ovbcp, false);
    r_ovbcp->add_option("--out", r_out, "output instance")->required();
    auto* r_bcpcp = reduce_cmd->add_subcommand("bcp-to-cp", "bichromatic to monochromatic closest pair");
    add_common(r_bcpcp, true);
    auto* r_bmip = reduce_cmd->add_subcommand("bmip-to-mip", "bichromatic to monochromatic max inner product");
    add_common(r_bmip, true);
    auto* r_gapcp = reduce_cmd->add_subcommand("bcp-to-gapcp", "gap bichromatic to gap closest pair");
    add_common(r_gapcp, true);
    r_gapcp->add_option("--k2", r_k2, "outer dimension for the gap gadget");
    r_gapcp->add_option("--kappa", r_kappa, "input gap (rational)");
    r_gapcp->add_option("--theta", r_theta, "output gap (rational)");
    auto* r_tensor = reduce_cmd->add_subcommand("tensor", "tensor-power gap amplification");
    add_common(r_tensor, false);
    r_tensor->add_option("--t", r_t, "tensor power");
    r_tensor->add_option("--out", r_out, "output instance")->required();
    auto* r_edit = reduce_cmd->add_subcommand("to-edit", "Hamming CP to edit-metric CP");
    add_common(r_edit, false);
    r_edit->add_option("--out", r_out, "output instance")->required();
    r_edit->add_option("--c", r_c, "bits-per-symbol factor (rational)");
    r_edit->add_option("--samples", r_samples, "pairs used to fit lambda");

    // ---- bench ----
    auto* bench_cmd = app.add_subcommand("bench", "benchmark harness emitting CSV");
    std::string b_suite, b_out;
    std::vector<std::uint64_t> b_sizes;
    std::uint64_t b_q = 5;
    std::size_t b_k1 = 1, b_d = 16;
    bench_cmd->add_option("--suite", b_suite, "bcp-to-cp | cover")->required();
    bench_cmd->add_option("--sizes", b_sizes, "instance sizes")->delimiter(',');
    bench_cmd->add_option("--out", b_out, "CSV path")->required();
    bench_cmd->add_option("--q", b_q, "gadget prime");
    bench_cmd->add_option("--k1", b_k1, "gadget inner dimension");
    bench_cmd->add_option("--d", b_d, "instance dimension");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (g_build->parsed()) {
            BipartiteGadget g;
            if (g_kind == "cd") g = build_cd_gadget(g_q, g_k1, cfg.enum_budget);
            else if (g_kind == "ip") g = build_ip_gadget(g_q, g_k1, cfg.enum_budget);
            else g = build_gap_cd_gadget(g_q, g_k1, g_k2, cfg.enum_budget);
            std::ostringstream os;
            write_gadget(os, g);
            write_file(g_out, os.str());
            std::cout << "wrote " << gadget_kind_name(g.kind) << " gadget: n=" << g.n << " dim=" << g.dim
                      << " beta=" << g.beta << " edges=" << g.edge_count() << '\n';
            return 0;
        }
        if (g_verify->parsed()) {
            const BipartiteGadget g = load_gadget(g_in);
            const GadgetReport report = verify_gadget(g, cfg.verify_budget, cfg.threads);
            print_report(report);
            return report.ok() ? 0 : 1;
        }
        if (c_build->parsed()) {
            const BipartiteGadget g = load_gadget(c_gadget);
            const PermutationCover cover = cover_biclique(g.adjacency);
            std::ostringstream os;
            write_cover(os, cover);
            write_file(c_out, os.str());
            std::cout << "wrote cover: n=" << cover.n << " k=" << cover.k() << '\n';
            return 0;
        }
        if (c_verify->parsed()) {
            const BipartiteGadget g = load_gadget(c_gadget);
            std::ifstream in(c_in);
            if (!in) throw ParseError("cannot open " + c_in);
            const PermutationCover cover = read_cover(in);
            const CoverReport report = verify_cover(cover, g.adjacency);
            std::cout << "k " << cover.k() << " bound " << report.k_bound << " slack " << report.slack
                      << " uncovered " << report.uncovered_total << '\n';
            return report.ok() ? 0 : 1;
        }
        if (solve_cmd->parsed()) {
            const Instance inst = load_instance(s_in);
            const InstanceKind kind = parse_instance_kind(s_kind);
            if (kind != inst.kind) throw ShapeMismatchError("instance file has kind " + instance_kind_name(inst.kind));
            switch (kind) {
                case InstanceKind::OV: {
                    const auto w = solve_ov(inst.a, inst.b);
                    if (w) std::cout << "witness (" << w->first + 1 << "," << w->second + 1 << ")\n";
                    else std::cout << "none\n";
                    break;
                }
                case InstanceKind::CP:
                case InstanceKind::EditCP: {
                    const auto w = solve_cp(inst.a, kind == InstanceKind::CP ? Metric::Hamming : Metric::Edit);
                    std::cout << "value " << w.value << " witness (" << w.i + 1 << "," << w.j + 1 << ")\n";
                    break;
                }
                case InstanceKind::BCP: {
                    const auto w = solve_bcp(inst.a, inst.b);
                    std::cout << "value " << w.value << " witness (" << w.i + 1 << "," << w.j + 1 << ")\n";
                    break;
                }
                case InstanceKind::MIP: {
                    const auto w = solve_mip(inst.a);
                    std::cout << "value " << w.value << " witness (" << w.i + 1 << "," << w.j + 1 << ")\n";
                    break;
                }
                case InstanceKind::BMIP: {
                    const auto w = solve_bmip(inst.a, inst.b);
                    std::cout << "value " << w.value << " witness (" << w.i + 1 << "," << w.j + 1 << ")\n";
                    break;
                }
            }
            return 0;
        }
        if (r_ovbcp->parsed()) {
            const std::uint64_t start = now_millis();
            const Instance in = load_instance(r_in);
            if (in.kind != InstanceKind::OV) throw ShapeMismatchError("ov-to-bcp expects an OV instance");
            const Instance out = ov_to_bcp(in.a, in.b);
            store_instance(r_out, out);
            if (!r_trace.empty()) {
                ReductionTrace trace;
                trace.n = in.a.size();
                trace.sub_instances = 1;
                trace.dim_out = out.a.dim;
                trace.alpha_out = *out.alpha;
                trace.millis = now_millis() - start;
                write_trace(r_trace, trace);
            }
            return 0;
        }
        if (r_bcpcp->parsed() || r_bmip->parsed() || r_gapcp->parsed()) {
            const Instance in = load_instance(r_in);
            const bool is_mip = r_bmip->parsed();
            const bool is_gap = r_gapcp->parsed();
            if (in.kind != (is_mip ? InstanceKind::BMIP : InstanceKind::BCP))
                throw ShapeMismatchError("pipeline expects a " + std::string(is_mip ? "bmip" : "bcp") + " instance");
            if (!in.alpha) throw ParseError("instance needs an alpha threshold");
            const std::string kind = is_mip ? "ip" : (is_gap ? "gapcd" : "cd");
            PipelineInputs inputs = resolve_inputs(cfg, kind, r_gadget, r_cover, r_q, r_k1, r_k2);
            const Rational kappa = Rational::parse(r_kappa), theta = Rational::parse(r_theta);

            if (r_oracle == "brute") {
                DriveResult result;
                if (is_mip) result = run_bmip_via_mip(in.a, in.b, *in.alpha, inputs.gadget, inputs.cover);
                else if (is_gap)
                    result = run_bcp_via_gapcp(in.a, in.b, *in.alpha, inputs.gadget, inputs.cover, kappa, theta);
                else result = run_bcp_via_cp(in.a, in.b, *in.alpha, inputs.gadget, inputs.cover);
                if (!r_trace.empty()) write_trace(r_trace, result.trace);
                std::cout << (result.yes ? "YES" : "NO") << '\n';
                return 0;
            }
            if (r_emit.empty()) throw BadParametersError("need --oracle brute or --emit PREFIX");
            const std::uint64_t start = now_millis();
            SubInstanceStream stream =
                is_mip ? bmip_to_mip_stream(in.a, in.b, *in.alpha, inputs.gadget, inputs.cover)
                : is_gap ? bcp_to_gapcp_stream(in.a, in.b, *in.alpha, inputs.gadget, inputs.cover, kappa, theta)
                         : bcp_to_cp_stream(in.a, in.b, *in.alpha, inputs.gadget, inputs.cover);
            emit_stream(stream, r_emit);
            if (!r_trace.empty()) {
                ReductionTrace trace;
                trace.n = in.a.size();
                trace.n_prime = stream.n_prime();
                trace.cover_k = stream.k();
                trace.sub_instances = stream.total();
                trace.dim_out = stream.dim_out();
                trace.alpha_out = stream.alpha_out();
                trace.millis = now_millis() - start;
                write_trace(r_trace, trace);
            }
            std::cout << "emitted " << stream.total() << " sub-instances\n";
            return 0;
        }
        if (r_tensor->parsed()) {
            const std::uint64_t start = now_millis();
            const Instance in = load_instance(r_in);
            if (!in.alpha) throw ParseError("instance needs an alpha threshold");
            const Instance out = tensor_amplify(in.a, *in.alpha, r_t, cfg.tensor_budget);
            store_instance(r_out, out);
            if (!r_trace.empty()) {
                ReductionTrace trace;
                trace.n = in.a.size();
                trace.sub_instances = 1;
                trace.dim_out = out.a.dim;
                trace.alpha_out = *out.alpha;
                trace.millis = now_millis() - start;
                write_trace(r_trace, trace);
            }
            return 0;
        }
        if (r_edit->parsed()) {
            const std::uint64_t start = now_millis();
            const Instance in = load_instance(r_in);
            if (in.kind != InstanceKind::CP) throw ShapeMismatchError("to-edit expects a cp instance");
            if (!in.alpha) throw ParseError("instance needs an alpha threshold");
            const SubstitutionCode code = gen_substitution_code(in.a.dim, cfg.seed, Rational::parse(r_c));
            const EditReduction red = hamming_cp_to_edit_cp(in.a, *in.alpha, code, r_samples, cfg.seed);
            store_instance(r_out, red.instance);
            std::cout << "lambda_hat " << red.lambda_hat.str() << " max_residual " << red.max_residual.str()
                      << " alpha_out " << *red.instance.alpha << '\n';
            if (!r_trace.empty()) {
                ReductionTrace trace;
                trace.n = in.a.size();
                trace.sub_instances = 1;
                trace.dim_out = red.instance.a.dim;
                trace.alpha_out = *red.instance.alpha;
                trace.millis = now_millis() - start;
                write_trace(r_trace, trace);
            }
            return 0;
        }
        if (bench_cmd->parsed()) return run_bench(cfg, b_suite, b_sizes, b_out, b_q, b_k1, b_d);
    } catch (const EmptyWindowError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const GadgetUnverifiedError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
