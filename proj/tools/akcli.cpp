#include <CLI11.hpp>
#include <iostream>

#include "ak/cli_run.hpp"

int main(int argc, char** argv) {
    CLI::App app{"akcalc: exact almost-Kaehler operator calculus on invariant forms"};
    app.require_subcommand(1);

    ak::cli::CliInvocation inv;
    std::string builtin, file, family, op, form, form_file;
    int degree = -1;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--builtin", builtin, "built-in manifold (torus4, torus6, kodaira_thurston)");
        sub->add_option("--file", file, "manifest JSON file");
        sub->add_option("--format", inv.format, "output format: json|markdown")->check(CLI::IsMember({"json", "markdown"}));
        sub->add_option("--eig-width", inv.eig_width, "eigenvalue isolation width (rational)");
        sub->add_option("--seed", inv.seed, "seed for property vectors");
    };

    for (const char* name : {"validate", "report", "identities", "spectrum", "hlc", "constants", "decompose"}) {
        CLI::App* sub = app.add_subcommand(name);
        add_common(sub);
        if (std::string(name) == "spectrum") {
            sub->add_option("--degree", degree, "restrict to one degree");
            sub->add_option("--operator", op, "d|dLambda|dbar|mu|dbar-mu");
        }
        if (std::string(name) == "constants") {
            sub->add_option("--degree", degree, "restrict to one degree");
            sub->add_option("--family", family, "M|Mtilde|Mbar");
        }
        if (std::string(name) == "decompose") {
            sub->add_option("--form", form, "form as JSON: {\"e1^e3\": {\"re\":\"1\",\"im\":\"0\"}, ...}");
            sub->add_option("--form-file", form_file, "form JSON from a file");
        }
    }

    CLI11_PARSE(app, argc, argv);

    inv.command = app.get_subcommands().front()->get_name();
    if (!builtin.empty()) inv.builtin = builtin;
    if (!file.empty()) inv.file = file;
    if (degree >= 0) inv.degree = degree;
    if (!family.empty()) inv.family = family;
    if (!op.empty()) inv.op = op;
    if (!form.empty()) inv.form_json = form;
    if (!form_file.empty()) inv.form_file = form_file;

    return ak::cli::run(inv, std::cout, std::cerr);
}
