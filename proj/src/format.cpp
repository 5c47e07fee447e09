#include "lexfst/format.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace lexfst {

ParseError::ParseError(size_t line, size_t col, const std::string& msg)
    : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " +
                         msg),
      line(line),
      col(col) {}

namespace {

struct Token {
    std::string text;
    size_t line;
    size_t col;
};

// One significant line: the section key (with trailing ':' removed for
// lookup convenience) plus its value tokens.
struct Line {
    Token key;
    std::vector<Token> values;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    size_t lineno = 0;
    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
        ++lineno;
        // tokens cannot contain '#', so any '#' begins a comment
        size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::vector<Token> tokens;
        size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && is_space(raw[i])) ++i;
            size_t start = i;
            while (i < raw.size() && !is_space(raw[i])) ++i;
            if (i > start) tokens.push_back({raw.substr(start, i - start), lineno, start + 1});
        }
        if (tokens.empty()) continue;
        Line line;
        line.key = tokens[0];
        line.values.assign(tokens.begin() + 1, tokens.end());
        lines.push_back(std::move(line));
    }
    return lines;
}

void expect_magic(const std::vector<Line>& lines, const char* name) {
    if (lines.empty()) throw ParseError(1, 1, std::string("empty document; expected '") + name + " v1' header");
    const Line& first = lines[0];
    if (first.key.text != name || first.values.size() != 1 || first.values[0].text != "v1")
        throw ParseError(first.key.line, first.key.col,
                         std::string("expected '") + name + " v1' header");
}

// Shared section accumulator: splits lines into alphabet/state/transition
// buckets and rejects unknown keys.
struct Sections {
    std::map<std::string, std::vector<Token>> lists;  // key -> accumulated value tokens
    std::vector<Line> transitions;

    static Sections collect(const std::vector<Line>& lines, const std::set<std::string>& keys) {
        Sections s;
        for (size_t i = 1; i < lines.size(); ++i) {
            const Line& line = lines[i];
            if (line.key.text == "T:") {
                s.transitions.push_back(line);
                continue;
            }
            if (!keys.count(line.key.text))
                throw ParseError(line.key.line, line.key.col,
                                 "unknown section '" + line.key.text + "'");
            auto& bucket = s.lists[line.key.text];
            bucket.insert(bucket.end(), line.values.begin(), line.values.end());
        }
        return s;
    }

    const std::vector<Token>& get(const std::string& key) const {
        static const std::vector<Token> empty;
        auto it = lists.find(key);
        return it == lists.end() ? empty : it->second;
    }
};

Alphabet build_alphabet(const std::vector<Token>& tokens) {
    Alphabet a;
    for (const Token& t : tokens) {
        try {
            a.add(t.text);
        } catch (const ValidationError& e) {
            throw ParseError(t.line, t.col, e.what());
        }
    }
    return a;
}

std::map<std::string, StateId> build_states(const std::vector<Token>& tokens,
                                            std::vector<std::string>& names) {
    std::map<std::string, StateId> index;
    for (const Token& t : tokens) {
        if (!is_valid_token(t.text))
            throw ParseError(t.line, t.col, "invalid state name '" + t.text + "'");
        if (index.count(t.text))
            throw ParseError(t.line, t.col, "duplicate state name '" + t.text + "'");
        index.emplace(t.text, static_cast<StateId>(names.size()));
        names.push_back(t.text);
    }
    return index;
}

StateId lookup_state(const std::map<std::string, StateId>& index, const Token& t) {
    auto it = index.find(t.text);
    if (it == index.end()) throw ParseError(t.line, t.col, "undeclared state '" + t.text + "'");
    return it->second;
}

SymbolId lookup_symbol(const Alphabet& a, const Token& t, const char* role) {
    auto id = a.find(t.text);
    if (!id)
        throw ParseError(t.line, t.col,
                         std::string("undeclared ") + role + " symbol '" + t.text + "'");
    return *id;
}

Word lookup_word(const Alphabet& a, const Token& t, const char* role) {
    try {
        return parse_word(a, t.text);
    } catch (const ValidationError& e) {
        throw ParseError(t.line, t.col, std::string("bad ") + role + " word: " + e.what());
    }
}

void arity_error(const Line& line, const char* shape) {
    throw ParseError(line.key.line, line.key.col,
                     std::string("transition needs fields: ") + shape);
}

std::string section(const char* key, const std::vector<std::string>& values) {
    if (values.empty()) return "";
    std::string out = key;
    for (const std::string& v : values) {
        out += ' ';
        out += v;
    }
    out += '\n';
    return out;
}

std::vector<std::string> state_name_list(const std::vector<std::string>& names,
                                         const std::set<StateId>& ids) {
    std::vector<std::string> out;
    for (StateId q : ids) out.push_back(names[q]);
    return out;
}

} // namespace

LexTransducer parse_lexfst(const std::string& text) {
    auto lines = tokenize(text);
    expect_magic(lines, "lexfst");
    Sections s = Sections::collect(lines, {"W:", "Sigma:", "Gamma:", "Q:", "I:", "F:"});

    LexTransducer m;
    m.weights = build_alphabet(s.get("W:"));
    m.inputs = build_alphabet(s.get("Sigma:"));
    m.outputs = build_alphabet(s.get("Gamma:"));
    auto states = build_states(s.get("Q:"), m.state_names);
    for (const Token& t : s.get("I:")) m.initial.insert(lookup_state(states, t));
    for (const Token& t : s.get("F:")) m.final.insert(lookup_state(states, t));

    for (const Line& line : s.transitions) {
        if (line.values.size() != 5) arity_error(line, "src input weight output dst");
        LexTransition t;
        t.src = lookup_state(states, line.values[0]);
        t.input = lookup_symbol(m.inputs, line.values[1], "input");
        t.weight = lookup_symbol(m.weights, line.values[2], "weight");
        t.output = lookup_word(m.outputs, line.values[3], "output");
        t.dst = lookup_state(states, line.values[4]);
        m.transitions.push_back(std::move(t));
    }
    m.normalize_and_validate();
    return m;
}

std::string serialize_lexfst(const LexTransducer& m) {
    std::string out = "lexfst v1\n";
    out += section("W:", m.weights.tokens());
    out += section("Sigma:", m.inputs.tokens());
    out += section("Gamma:", m.outputs.tokens());
    out += section("Q:", m.state_names);
    out += section("I:", state_name_list(m.state_names, m.initial));
    out += section("F:", state_name_list(m.state_names, m.final));
    for (const LexTransition& t : m.transitions) {
        out += "T: " + m.state_names[t.src] + " " + m.inputs.token(t.input) + " " +
               m.weights.token(t.weight) + " " + format_word(m.outputs, t.output) + " " +
               m.state_names[t.dst] + "\n";
    }
    return out;
}

TwoTapeAutomaton parse_fst2(const std::string& text) {
    auto lines = tokenize(text);
    expect_magic(lines, "fst2");
    Sections s = Sections::collect(lines, {"Sigma:", "Gamma:", "Q:", "I:", "F:"});

    TwoTapeAutomaton m;
    m.inputs = build_alphabet(s.get("Sigma:"));
    m.outputs = build_alphabet(s.get("Gamma:"));
    auto states = build_states(s.get("Q:"), m.state_names);
    for (const Token& t : s.get("I:")) m.initial.insert(lookup_state(states, t));
    for (const Token& t : s.get("F:")) m.final.insert(lookup_state(states, t));

    for (const Line& line : s.transitions) {
        if (line.values.size() != 4) arity_error(line, "src input output dst");
        TwoTapeTransition t;
        t.src = lookup_state(states, line.values[0]);
        if (line.values[1].text != "-")
            t.input = lookup_symbol(m.inputs, line.values[1], "input");
        t.output = lookup_word(m.outputs, line.values[2], "output");
        t.dst = lookup_state(states, line.values[3]);
        m.transitions.push_back(std::move(t));
    }
    m.normalize_and_validate();
    return m;
}

std::string serialize_fst2(const TwoTapeAutomaton& m) {
    std::string out = "fst2 v1\n";
    out += section("Sigma:", m.inputs.tokens());
    out += section("Gamma:", m.outputs.tokens());
    out += section("Q:", m.state_names);
    out += section("I:", state_name_list(m.state_names, m.initial));
    out += section("F:", state_name_list(m.state_names, m.final));
    for (const TwoTapeTransition& t : m.transitions) {
        out += "T: " + m.state_names[t.src] + " " +
               (t.input ? m.inputs.token(*t.input) : std::string("-")) + " " +
               format_word(m.outputs, t.output) + " " + m.state_names[t.dst] + "\n";
    }
    return out;
}

ProbAutomaton parse_pfsa(const std::string& text) {
    auto lines = tokenize(text);
    expect_magic(lines, "pfsa");
    Sections s =
        Sections::collect(lines, {"cuts:", "N:", "Gamma:", "Delta:", "Q:", "I:", "F:"});

    ProbAutomaton p;
    const auto& cuts = s.get("cuts:");
    const auto& uniform = s.get("N:");
    if (!cuts.empty() && !uniform.empty())
        throw ParseError(uniform[0].line, uniform[0].col, "give either cuts: or N:, not both");
    if (cuts.empty() && uniform.empty())
        throw ParseError(1, 1, "missing cuts: or N: line");
    if (!cuts.empty()) {
        for (const Token& t : cuts) {
            try {
                p.cuts.push_back(parse_rational(t.text));
            } catch (const std::invalid_argument& e) {
                throw ParseError(t.line, t.col, e.what());
            }
        }
    } else {
        if (uniform.size() != 1)
            throw ParseError(uniform[0].line, uniform[0].col, "N: takes exactly one integer");
        const Token& t = uniform[0];
        Rational n;
        try {
            n = parse_rational(t.text);
        } catch (const std::invalid_argument& e) {
            throw ParseError(t.line, t.col, e.what());
        }
        if (denominator(n) != 1 || n < 1)
            throw ParseError(t.line, t.col, "N: must be a positive integer");
        for (Rational i = 0; i <= n; ++i) p.cuts.push_back(i / n);
    }

    p.gamma = build_alphabet(s.get("Gamma:"));
    p.delta = build_alphabet(s.get("Delta:"));
    auto states = build_states(s.get("Q:"), p.state_names);
    const auto& initials = s.get("I:");
    if (initials.size() != 1)
        throw ParseError(initials.empty() ? 1 : initials[0].line,
                         initials.empty() ? 1 : initials[0].col,
                         "probabilistic machine needs exactly one initial state");
    p.initial = lookup_state(states, initials[0]);
    for (const Token& t : s.get("F:")) p.final.insert(lookup_state(states, t));

    const bool two_tape = !p.delta.empty();
    for (const Line& line : s.transitions) {
        size_t want = two_tape ? 5u : 4u;
        if (line.values.size() != want)
            arity_error(line, two_tape ? "src k output output2 dst" : "src k output dst");
        ProbTransition t;
        t.src = lookup_state(states, line.values[0]);
        const Token& kt = line.values[1];
        Rational k;
        try {
            k = parse_rational(kt.text);
        } catch (const std::invalid_argument& e) {
            throw ParseError(kt.line, kt.col, e.what());
        }
        if (denominator(k) != 1 || k < 1 || k > Rational(p.num_intervals()))
            throw ParseError(kt.line, kt.col,
                             "interval index must be an integer in 1.." +
                                 std::to_string(p.num_intervals()));
        t.k = k.convert_to<uint32_t>();
        t.output = lookup_word(p.gamma, line.values[2], "output");
        if (two_tape) t.output2 = lookup_word(p.delta, line.values[3], "second output");
        t.dst = lookup_state(states, line.values[two_tape ? 4 : 3]);
        p.transitions.push_back(std::move(t));
    }
    try {
        p.normalize_and_validate();
    } catch (const ValidationError& e) {
        throw ParseError(1, 1, e.what());
    }
    return p;
}

std::string serialize_pfsa(const ProbAutomaton& p) {
    std::string out = "pfsa v1\ncuts:";
    for (const Rational& c : p.cuts) out += " " + format_rational(c);
    out += "\n";
    out += section("Gamma:", p.gamma.tokens());
    out += section("Delta:", p.delta.tokens());
    out += section("Q:", p.state_names);
    out += "I: " + p.state_names[p.initial] + "\n";
    out += section("F:", state_name_list(p.state_names, p.final));
    for (const ProbTransition& t : p.transitions) {
        out += "T: " + p.state_names[t.src] + " " + std::to_string(t.k) + " " +
               format_word(p.gamma, t.output) + " ";
        if (p.has_second_tape()) out += format_word(p.delta, t.output2) + " ";
        out += p.state_names[t.dst] + "\n";
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << text;
}

} // namespace lexfst
