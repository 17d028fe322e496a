// Entry point for the gaucode tool. Parsing stays here; the command logic
// lives in gaucode/cli.hpp so the test suite can drive it directly. Exit
// codes: 0 success, 1 verification mismatch, 2 usage or input error,
// 3 capacity exceeded.

#include <exception>
#include <iostream>

#include <CLI11.hpp>

#include "gaucode/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"DNA code constructions over the 16-element ring Z4 + wZ4, w^2 = 2+2w"};
    app.require_subcommand(1);
    gaucode::RunConfig cfg;

    const auto add_limit = [&cfg](CLI::App* cmd) {
        cmd->add_option("--limit", cfg.enum_limit,
                        "largest code size the command may enumerate")
            ->envname("GAUCODE_ENUM_LIMIT");
    };

    CLI::App* gen = app.add_subcommand("generate", "construct a family code and export it");
    gen->add_option("--family", cfg.family, "octa|simplex|rm1|rmr|stack|repeat")->required();
    gen->add_option("--k", cfg.k, "recursion depth (simplex) or block count (stack/repeat)");
    gen->add_option("--m", cfg.m, "length exponent: the ring code has 2^m columns");
    gen->add_option("--r", cfg.r, "order of the r-th order construction");
    gen->add_option("--z", cfg.z, "zero-divisor token, e.g. 2, w, 2w, 2+3w");
    gen->add_option("--first-row", cfg.first_row, "octa seed vector, comma-separated tokens");
    gen->add_option("--base", cfg.base_path, "ring-code file with generator rows (stack/repeat)");
    gen->add_option("--stack-z", cfg.stack_z, "four tokens from {0,2,2w,2+2w}, comma-separated");
    gen->add_option("--distance", cfg.distance_mode, "pairwise|weight (default pairwise)");
    gen->add_option("--output", cfg.output_path, "artifact file (default: stdout)");
    gen->add_option("--format", cfg.format, "fasta|csv|json (default fasta)");
    add_limit(gen);

    CLI::App* rep = app.add_subcommand("reproduce", "rebuild published tables and check them");
    rep->add_option("target", cfg.target, "table2|table3|simplex|rmr|bounds")->required();
    rep->add_option("--format", cfg.format, "text report by default, json for machines");
    add_limit(rep);

    CLI::App* ver = app.add_subcommand("verify", "measure a code file and report its properties");
    ver->add_option("file", cfg.code_path, "FASTA, CSV, JSON, ring-code or word-list file")
        ->required();
    ver->add_option("--format", cfg.format, "text report by default, json for machines");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) {
            cfg.command = "generate";
            return gaucode::cmd_generate(cfg, std::cout, std::cerr);
        }
        if (rep->parsed()) {
            cfg.command = "reproduce";
            return gaucode::cmd_reproduce(cfg, std::cout);
        }
        cfg.command = "verify";
        return gaucode::cmd_verify(cfg, std::cout);
    } catch (const gaucode::CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
