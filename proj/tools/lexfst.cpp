// Command-line front end: files in, reports and exit codes out.
// Exit codes: 0 = success / property holds, 1 = reject / property fails
// (with a greppable "witness:" line), 2 = usage or input error.

#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "lexfst/analysis.hpp"
#include "lexfst/encode.hpp"
#include "lexfst/erase.hpp"
#include "lexfst/eval.hpp"
#include "lexfst/family.hpp"
#include "lexfst/format.hpp"
#include "lexfst/oracle.hpp"
#include "lexfst/prob.hpp"

namespace {

using namespace lexfst;
using nlohmann::json;

enum class Kind { Lex, TwoTape, Prob };

Kind kind_of(const std::string& path) {
    auto ends_with = [&](const std::string& suffix) {
        return path.size() >= suffix.size() &&
               path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
    };
    if (ends_with(".lfst")) return Kind::Lex;
    if (ends_with(".fst2")) return Kind::TwoTape;
    if (ends_with(".pfsa")) return Kind::Prob;
    throw ValidationError("unrecognized file extension (expected .lfst, .fst2 or .pfsa): " + path);
}

// CLI words are space-separated tokens, unlike the dot-joined document form.
Word parse_cli_word(const Alphabet& alphabet, const std::string& text, const char* which) {
    Word w;
    std::istringstream in(text);
    std::string token;
    while (in >> token) {
        std::optional<SymbolId> id = alphabet.find(token);
        if (!id)
            throw ValidationError(std::string(which) + " word uses undeclared symbol '" + token +
                                  "'");
        w.push_back(*id);
    }
    return w;
}

std::string join_names(const std::vector<std::string>& parts) {
    std::string out;
    for (const std::string& p : parts) {
        if (!out.empty()) out += ' ';
        out += p;
    }
    return out;
}

int do_validate(const std::string& file) {
    switch (kind_of(file)) {
        case Kind::Lex: {
            LexTransducer m = parse_lexfst(read_file(file));
            std::cout << "valid lexicographic transducer: " << m.num_states() << " states, "
                      << m.transitions.size() << " transitions, |W|=" << m.weights.size()
                      << " |Sigma|=" << m.inputs.size() << " |Gamma|=" << m.outputs.size() << "\n";
            break;
        }
        case Kind::TwoTape: {
            TwoTapeAutomaton n = parse_fst2(read_file(file));
            std::cout << "valid two-tape automaton: " << n.num_states() << " states, "
                      << n.transitions.size() << " transitions, |Sigma|=" << n.inputs.size()
                      << " |Gamma|=" << n.outputs.size() << "\n";
            break;
        }
        case Kind::Prob: {
            ProbAutomaton p = parse_pfsa(read_file(file));
            std::cout << "valid probabilistic automaton: " << p.num_states() << " states, "
                      << p.transitions.size() << " transitions, " << p.num_intervals()
                      << " intervals" << (p.has_second_tape() ? ", two output tapes" : "") << "\n";
            break;
        }
    }
    return 0;
}

int do_run(const std::string& file, const std::string& input, bool as_json) {
    LexTransducer m = parse_lexfst(read_file(file));
    Word c = parse_cli_word(m.inputs, input, "input");
    RunResult r = run(m, c);
    if (as_json) {
        json doc;
        doc["accepted"] = r.accepted;
        if (r.accepted) {
            doc["minWeight"] = format_word(m.weights, *r.min_weight);
            json outs = json::array();
            for (const Word& d : r.selected) outs.push_back(format_word(m.outputs, d));
            doc["outputs"] = outs;
            json quot = json::object();
            for (const auto& [d, w] : r.quotient)
                quot[format_word(m.outputs, d)] = format_word(m.weights, w);
            doc["quotient"] = quot;
        }
        std::cout << doc.dump(2) << "\n";
    } else if (r.accepted) {
        std::cout << "ACCEPT minWeight=" << format_word(m.weights, *r.min_weight) << " outputs:";
        for (const Word& d : r.selected) std::cout << ' ' << format_word(m.outputs, d);
        std::cout << "\n";
    } else {
        std::cout << "REJECT\n";
    }
    return r.accepted ? 0 : 1;
}

int do_erase(const std::string& file, const std::string& method, const std::string& out_path) {
    LexTransducer m = parse_lexfst(read_file(file));
    TwoTapeAutomaton n;
    if (method == "strong") {
        StrongFunctionalReport pre = check_strongly_functional(m);
        if (!pre.holds) {
            std::cout << "cannot erase: " << pre.reason << "\n";
            if (pre.conflict) {
                const Conflict& c = *pre.conflict;
                std::cout << "witness: " << m.state_names[c.q1] << ' ' << m.state_names[c.q2]
                          << ' ' << m.inputs.token(c.input) << ' ' << m.state_names[c.target]
                          << "\n";
            }
            return 1;
        }
        n = erase_strong(m);
    } else {
        n = erase_general(m);
    }
    std::cout << "input:  " << m.num_states() << " states, " << m.transitions.size()
              << " transitions\n";
    std::cout << "erased: " << n.num_states() << " states, " << n.transitions.size()
              << " transitions\n";
    if (!out_path.empty()) {
        write_file(out_path, serialize_fst2(n));
        std::cout << "wrote " << out_path << "\n";
    }
    return 0;
}

void print_classification(const ClassReport& r) {
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    std::cout << "sequential-up-to-input:    " << yn(r.sequential_up_to_input) << "\n"
              << "epsilon-free-up-to-input:  " << yn(r.epsilon_free_up_to_input) << "\n"
              << "deterministic-up-to-input: " << yn(r.deterministic_up_to_input) << "\n"
              << "single-initial:            " << yn(r.single_initial) << "\n";
}

json classification_json(const ClassReport& r) {
    return json{{"sequentialUpToInput", r.sequential_up_to_input},
                {"epsilonFreeUpToInput", r.epsilon_free_up_to_input},
                {"deterministicUpToInput", r.deterministic_up_to_input},
                {"singleInitial", r.single_initial}};
}

int report_check(bool as_json, const std::string& property, bool holds,
                 const std::string& detail, const std::string& witness) {
    if (as_json) {
        json doc{{"property", property}, {"holds", holds}};
        if (!detail.empty()) doc["detail"] = detail;
        if (!witness.empty()) doc["witness"] = witness;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << property << ": " << (holds ? "holds" : "fails") << "\n";
        if (!detail.empty()) std::cout << detail << "\n";
        if (!witness.empty()) std::cout << "witness: " << witness << "\n";
    }
    return holds ? 0 : 1;
}

int do_check(const std::string& file, bool strong, bool functional, bool eps_cycles,
             bool classify_only, bool as_json) {
    Kind kind = kind_of(file);
    if (kind == Kind::Prob)
        throw ValidationError("check expects a .lfst or .fst2 document");

    if (classify_only) {
        ClassReport r = kind == Kind::Lex ? classify(parse_lexfst(read_file(file)))
                                          : classify(parse_fst2(read_file(file)));
        if (as_json)
            std::cout << classification_json(r).dump(2) << "\n";
        else
            print_classification(r);
        return 0;
    }
    if (strong) {
        if (kind != Kind::Lex)
            throw ValidationError("--strong-functional expects a .lfst document");
        LexTransducer m = parse_lexfst(read_file(file));
        StrongFunctionalReport r = check_strongly_functional(m);
        std::string witness;
        if (r.conflict) {
            const Conflict& c = *r.conflict;
            witness = m.state_names[c.q1] + " " + m.state_names[c.q2] + " " +
                      m.inputs.token(c.input) + " " + m.state_names[c.target];
        }
        return report_check(as_json, "strongly-functional", r.holds, r.reason, witness);
    }
    if (functional) {
        FunctionalReport r;
        std::string witness;
        if (kind == Kind::Lex) {
            LexTransducer m = parse_lexfst(read_file(file));
            r = check_functional(m);
            if (r.counterexample) {
                std::vector<std::string> toks;
                for (SymbolId a : *r.counterexample) toks.push_back(m.inputs.token(a));
                witness = join_names(toks);
            }
        } else {
            TwoTapeAutomaton n = parse_fst2(read_file(file));
            r = check_functional_unweighted(n);
            if (r.counterexample) {
                std::vector<std::string> toks;
                for (SymbolId a : *r.counterexample) toks.push_back(n.inputs.token(a));
                witness = join_names(toks);
            }
        }
        return report_check(as_json, "functional", r.functional,
                            r.functional ? "" : "two distinct outputs for one input", witness);
    }
    if (eps_cycles) {
        if (kind != Kind::TwoTape)
            throw ValidationError("--eps-cycles expects a .fst2 document");
        TwoTapeAutomaton n = parse_fst2(read_file(file));
        std::vector<EpsCycle> cycles = detect_eps_cycles(n);
        std::string witness;
        if (!cycles.empty()) {
            std::vector<std::string> parts;
            for (const TwoTapeTransition& t : cycles.front().transitions)
                parts.push_back(n.state_names[t.src]);
            parts.push_back(n.state_names[cycles.front().transitions.back().dst]);
            witness = join_names(parts) + " emits " +
                      format_word(n.outputs, cycles.front().output);
        }
        return report_check(as_json, "no-output-producing-eps-cycles", cycles.empty(),
                            cycles.empty() ? ""
                                           : std::to_string(cycles.size()) +
                                                 " output-producing cycle(s) found",
                            witness);
    }
    throw ValidationError(
        "choose one of --strong-functional, --functional, --eps-cycles, --classify");
}

int do_gen_family(int n, const std::string& out_path) {
    if (n < 3) {
        std::cerr << "n must be >= 3\n";
        return 2;
    }
    LexTransducer m = gen_family(n);
    write_file(out_path, serialize_lexfst(m));
    std::cout << "wrote " << out_path << ": " << m.num_states() << " states, "
              << m.transitions.size() << " transitions\n";
    return 0;
}

int do_bench(int n_min, int n_max, const std::string& csv_path, bool as_json) {
    std::vector<BenchRow> rows = bench_family(n_min, n_max);
    if (as_json) {
        json arr = json::array();
        for (const BenchRow& r : rows)
            arr.push_back(json{{"n", r.n},
                               {"states_lex", r.states_lex},
                               {"states_erased", r.states_erased},
                               {"min_dfa_states", r.min_dfa_states},
                               {"erase_ms", r.erase_ms},
                               {"mindfa_ms", r.mindfa_ms}});
        std::cout << arr.dump(2) << "\n";
    } else {
        std::cout << bench_csv(rows);
    }
    if (!csv_path.empty()) {
        write_file(csv_path, bench_csv(rows));
        std::cout << "wrote " << csv_path << "\n";
    }
    return 0;
}

int do_oracle(const std::string& file, int max_len) {
    LexTransducer m = parse_lexfst(read_file(file));
    Divergence d = oracle_equivalence(m, size_t(max_len));
    if (d.equivalent) {
        std::cout << "equivalent: run matches the path-enumeration oracle up to length "
                  << max_len << "\n";
        return 0;
    }
    std::vector<std::string> toks;
    for (SymbolId a : d.input) toks.push_back(m.inputs.token(a));
    std::cout << "divergence found\n";
    std::cout << "witness: " << join_names(toks) << "\n";
    return 1;
}

int do_min_dfa(const std::string& file, bool show_encoding) {
    TwoTapeAutomaton n = parse_fst2(read_file(file));
    EncodedAutomaton enc = encode_single_tape(n);
    if (show_encoding)
        std::cout << "encoded NFA: " << enc.nfa.num_states << " states, "
                  << enc.nfa.transitions.size() << " transitions, " << enc.nfa.alphabet.size()
                  << " symbols\n";
    std::cout << "minimal DFA states: " << minimal_dfa_size(enc.nfa) << "\n";
    return 0;
}

int do_prob(const std::string& file, const std::string& input, const std::string& cond_output,
            bool has_cond, int depth) {
    ProbAutomaton p = parse_pfsa(read_file(file));
    Word c = parse_cli_word(p.gamma, input, "output");
    ProbBracket b;
    std::string label;
    if (has_cond) {
        if (!p.has_second_tape())
            throw ValidationError("--cond-output requires a machine with a Delta tape");
        Word d = parse_cli_word(p.delta, cond_output, "conditional");
        b = cond_prob(p, c, d, size_t(depth));
        label = "P(d|c)";
    } else {
        b = prob_bracket(p, c, size_t(depth));
        label = "P(c)";
    }
    std::cout << label << " at depth " << depth << ":\n";
    std::cout << "lower: " << format_rational(b.lower) << " (" << rational_to_double(b.lower)
              << ")\n";
    std::cout << "upper: " << format_rational(b.upper) << " (" << rational_to_double(b.upper)
              << ")\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"lexicographic finite-state transducer toolkit"};
    app.require_subcommand(1);

    std::string file, input, cond_output, method = "general", out_path, csv_path;
    std::string format = "text";
    int n = 0, n_min = 3, n_max = 8, max_len = 6, depth = 20;
    bool strong = false, functional = false, eps_cycles = false, classify_only = false;
    bool show_encoding = false;

    CLI::App* validate = app.add_subcommand("validate", "parse a document and report its shape");
    validate->add_option("file", file)->required();

    CLI::App* run_cmd = app.add_subcommand("run", "evaluate an input word");
    run_cmd->add_option("file", file)->required();
    run_cmd->add_option("--input", input, "space-separated input tokens")->required();
    run_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    CLI::App* erase_cmd = app.add_subcommand("erase", "erase weights into a two-tape automaton");
    erase_cmd->add_option("file", file)->required();
    erase_cmd->add_option("--method", method)->check(CLI::IsMember({"general", "strong"}));
    erase_cmd->add_option("-o,--output", out_path, "write the result as .fst2");

    CLI::App* check = app.add_subcommand("check", "decide a property of a machine");
    check->add_option("file", file)->required();
    check->add_flag("--strong-functional", strong);
    check->add_flag("--functional", functional);
    check->add_flag("--eps-cycles", eps_cycles);
    check->add_flag("--classify", classify_only);
    check->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    CLI::App* family = app.add_subcommand("gen-family", "generate the register family member");
    family->add_option("n", n)->required();
    family->add_option("-o,--output", out_path)->required();

    CLI::App* bench = app.add_subcommand("bench", "measure erasure blowup across the family");
    bench->add_option("--min", n_min);
    bench->add_option("--max", n_max);
    bench->add_option("--csv", csv_path, "also write the rows to a file");
    bench->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    CLI::App* oracle = app.add_subcommand("oracle", "compare run against path enumeration");
    oracle->add_option("file", file)->required();
    oracle->add_option("--max-len", max_len);

    CLI::App* min_dfa = app.add_subcommand("min-dfa", "encode and count minimal DFA states");
    min_dfa->add_option("file", file)->required();
    min_dfa->add_flag("--encode", show_encoding, "also print the encoded NFA's shape");

    CLI::App* prob = app.add_subcommand("prob", "probability bracket of an output word");
    prob->add_option("file", file)->required();
    prob->add_option("--input", input, "output word whose probability is sought")->required();
    CLI::Option* cond = prob->add_option("--cond-output", cond_output);
    prob->add_option("--depth", depth)->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        bool as_json = format == "json";
        if (validate->parsed()) return do_validate(file);
        if (run_cmd->parsed()) return do_run(file, input, as_json);
        if (erase_cmd->parsed()) return do_erase(file, method, out_path);
        if (check->parsed())
            return do_check(file, strong, functional, eps_cycles, classify_only, as_json);
        if (family->parsed()) return do_gen_family(n, out_path);
        if (bench->parsed()) return do_bench(n_min, n_max, csv_path, as_json);
        if (oracle->parsed()) return do_oracle(file, max_len);
        if (min_dfa->parsed()) return do_min_dfa(file, show_encoding);
        if (prob->parsed())
            return do_prob(file, input, cond_output, cond->count() > 0, depth);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
