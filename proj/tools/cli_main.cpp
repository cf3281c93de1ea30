// scffd — exact arithmetic over strongly computable finite factorization
// domains.  Every subcommand prints one JSON document to stdout and exits
// 0 (answered), 1 (element/validation error), 2 (syntax error), or
// 3 (search cap exhausted).

#include <cstdio>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "scffd/query.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Exact divisor, irreducibility, and primality queries over "
                 "computable integral domains"};
    app.require_subcommand(1);

    std::string ring, elem, elem2, mode;
    scffd::SearchCaps caps;

    struct Spec {
        const char* name;
        const char* help;
        bool elem;
        bool elem2;
    };
    const Spec specs[] = {
        {"divisors", "list the full divisor set of --elem", true, false},
        {"units", "list the unit group", false, false},
        {"irreducible", "decide irreducibility of --elem", true, false},
        {"prime", "decide primality of --elem", true, false},
        {"associates", "decide whether --elem and --elem2 are associates", true, true},
        {"factor", "factor --elem into a unit and irreducibles", true, false},
        {"reduce", "reduce the fraction --elem / --elem2", true, true},
        {"member", "test whether --elem denotes a ring member", true, false},
        {"stage-trace", "trace prime/irreducible status across all stages", false, false},
        {"parse", "echo the canonical form of the ring and optional --elem", true, false},
    };

    for (const Spec& s : specs) {
        CLI::App* cmd = app.add_subcommand(s.name, s.help);
        cmd->add_option("--ring", ring, "ring descriptor, e.g. 'Quad(5)' or 'Poly(Z,x)'")
            ->required();
        if (s.elem) cmd->add_option("--elem", elem, "element expression");
        if (s.elem2) cmd->add_option("--elem2", elem2, "second element expression");
        cmd->add_option("--mode", mode, "'limit' (default) or 'at-stage:<k>' for staged rings");
        cmd->add_option("--max-tuples", caps.max_tuples, "factor-search tuple budget");
        cmd->add_option("--max-degree", caps.max_degree, "interpolation degree cap");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        nlohmann::ordered_json doc;
        nlohmann::ordered_json err;
        err["kind"] = "SyntaxError";
        err["message"] = std::string("command line: ") + e.what();
        doc["error"] = std::move(err);
        std::fputs((doc.dump(2) + "\n").c_str(), stdout);
        return 2;
    }

    CLI::App* cmd = app.get_subcommands().front();
    auto supplied = [cmd](const char* name) {
        const CLI::Option* o = cmd->get_option_no_throw(name);
        return o != nullptr && o->count() > 0;
    };
    scffd::QueryRequest q;
    q.command = cmd->get_name();
    q.ring = ring;
    if (supplied("--elem")) q.elem = elem;
    if (supplied("--elem2")) q.elem2 = elem2;
    if (supplied("--mode")) q.mode = mode;
    q.caps = caps;

    scffd::QueryResult r = scffd::run_query(q);
    std::fputs(r.json.c_str(), stdout);
    return r.exit_code;
}
