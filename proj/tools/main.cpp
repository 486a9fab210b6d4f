#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "sphm/domains.hpp"
#include "sphm/io.hpp"
#include "sphm/mechanisms.hpp"
#include "sphm/oracle.hpp"
#include "sphm/scaling.hpp"
#include "sphm/transcript.hpp"

// Exit codes: 0 success (check: PO), 2 bad input or arguments,
// 3 check found the endowment not Pareto-optimal, 4 instance too large for
// the brute-force method.

namespace {

sphm::Instance load_instance(const std::string& path, bool require_single_peaked) {
    const sphm::ValidateOptions options{require_single_peaked};
    if (path == "-") return sphm::parse_instance(std::cin, options);
    std::ifstream in(path);
    if (!in) throw sphm::Error("cannot open '" + path + "'");
    return sphm::parse_instance(in, options);
}

void print_allocation(const sphm::Allocation& allocation) {
    std::cout << "alloc";
    for (sphm::Agent a = 0; a < allocation.size(); ++a)
        std::cout << ' ' << allocation.of_agent(a) + 1;
    std::cout << '\n';
}

void print_witness(const sphm::ImprovingCycle& cycle) {
    std::cout << "cycle";
    for (std::size_t k = 0; k < cycle.members.size(); ++k)
        std::cout << ' ' << sphm::agent_label(cycle.members[k]) << ':'
                  << sphm::resource_label(cycle.gets[k]);
    std::cout << '\n';
}

void reject_transcript(bool transcript) {
    if (transcript)
        throw sphm::Error(
            "--transcript is only available for 'run crawler' and 'check diver'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"house markets under single-peaked preferences"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    bool transcript = false;
    app.add_option("--seed", seed, "generator seed")->capture_default_str();
    app.add_flag("--transcript", transcript,
                 "also print the communication transcript");

    int exit_code = 0;

    auto* gen = app.add_subcommand(
        "gen", "write an instance of the given family to standard output");
    gen->fallthrough();
    std::string family;
    int gen_n = 0;
    gen->add_option("family", family, "random|consensual|worstcase|fooling")
        ->required();
    gen->add_option("n", gen_n, "number of agents and resources")->required();
    gen->callback([&] {
        reject_transcript(transcript);
        if (gen_n < 1) throw sphm::Error("n must be at least 1");
        sphm::Rng rng(seed);
        sphm::Instance instance = [&] {
            if (family == "random") return sphm::gen_random_sp(gen_n, seed);
            if (family == "consensual")
                return sphm::gen_consensual(sphm::random_sp_order(gen_n, rng));
            if (family == "worstcase") return sphm::gen_crawler_worstcase(gen_n);
            if (family == "fooling") {
                if (gen_n < 2)
                    throw sphm::Error("the fooling family needs at least 2 agents");
                const sphm::PreferenceOrder first = sphm::random_sp_order(gen_n, rng);
                sphm::PreferenceOrder second = sphm::random_sp_order(gen_n, rng);
                while (second == first) second = sphm::random_sp_order(gen_n, rng);
                return sphm::gen_fooling_mixed(sphm::gen_consensual(first),
                                               sphm::gen_consensual(second));
            }
            throw sphm::Error("unknown family '" + family +
                              "' (expected random, consensual, worstcase or fooling)");
        }();
        sphm::write_instance(std::cout, instance);
    });

    auto* run = app.add_subcommand("run", "run an allocation mechanism on an instance");
    run->fallthrough();
    std::string run_file, mechanism;
    run->add_option("file", run_file, "instance file, or - for stdin")->required();
    run->add_option("mechanism", mechanism, "crawler|ttc")->required();
    run->callback([&] {
        if (mechanism == "crawler") {
            const sphm::CrawlerResult result =
                sphm::crawler(load_instance(run_file, true));
            print_allocation(result.allocation());
            if (transcript) std::cout << sphm::to_text(result.transcript);
        } else if (mechanism == "ttc") {
            reject_transcript(transcript);
            print_allocation(sphm::ttc(load_instance(run_file, false)));
        } else {
            throw sphm::Error("unknown mechanism '" + mechanism +
                              "' (expected crawler or ttc)");
        }
    });

    auto* check = app.add_subcommand(
        "check", "decide whether the endowment is Pareto-optimal");
    check->fallthrough();
    std::string check_file, method;
    check->add_option("file", check_file, "instance file, or - for stdin")->required();
    check->add_option("method", method, "diver|cycle|brute")->required();
    check->callback([&] {
        sphm::Verdict verdict;
        if (method == "diver") {
            const sphm::DiverResult result =
                sphm::diver(load_instance(check_file, true));
            verdict = result.verdict;
            std::cout << (verdict.po ? "PO" : "NOT-PO") << '\n';
            if (!verdict.po) print_witness(verdict.witness);
            if (transcript) std::cout << sphm::to_text(result.transcript);
        } else {
            reject_transcript(transcript);
            if (method == "cycle") {
                verdict = sphm::cycle_check_po(load_instance(check_file, false));
            } else if (method == "brute") {
                const sphm::Instance instance = load_instance(check_file, false);
                const sphm::OracleVerdict oracle = sphm::brute_force_po(instance);
                verdict.po = oracle.po;
                if (!oracle.po)
                    verdict.witness =
                        sphm::improving_cycle_from(*oracle.witness, instance.endowment());
            } else {
                throw sphm::Error("unknown method '" + method +
                                  "' (expected diver, cycle or brute)");
            }
            std::cout << (verdict.po ? "PO" : "NOT-PO") << '\n';
            if (!verdict.po) print_witness(verdict.witness);
        }
        exit_code = verdict.po ? 0 : 3;
    });

    auto* bench = app.add_subcommand(
        "bench", "time crawler and diver over doubling sizes and fit growth");
    bench->fallthrough();
    int max_n = 64000, min_n = 1000, reps = 5;
    std::vector<std::string> families{"worstcase"};
    bench->add_option("--max-n", max_n, "largest size")->capture_default_str();
    bench->add_option("--min-n", min_n, "smallest size")->capture_default_str();
    bench->add_option("--reps", reps, "repetitions per point")->capture_default_str();
    bench->add_option("--family", families, "worstcase|random (repeatable)")
        ->capture_default_str();
    bench->callback([&] {
        reject_transcript(transcript);
        if (max_n < 100) throw sphm::Error("--max-n must be at least 100");
        for (const std::string& fam : families) {
            sphm::ScalingConfig config;
            config.min_n = min_n;
            config.max_n = max_n;
            config.repetitions = reps;
            config.family = fam;
            config.seed = seed;
            std::cout << sphm::format_report(sphm::run_scaling(config));
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const sphm::InstanceTooLarge& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const sphm::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return exit_code;
}
