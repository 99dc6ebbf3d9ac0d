#include "nsv/parser.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace nsv {

const char* to_string(DiagnosticKind kind) noexcept {
    switch (kind) {
        case DiagnosticKind::Syntax: return "syntax";
        case DiagnosticKind::UndefinedOutput: return "undefined-output";
        case DiagnosticKind::DuplicateDeclaration: return "duplicate-declaration";
        case DiagnosticKind::ArityMismatch: return "arity-mismatch";
        case DiagnosticKind::OutOfDomainValue: return "out-of-domain-value";
    }
    return "unknown";
}

namespace {

bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_shaped(const std::string& s) {
    if (s.empty() || !is_ident_start(s[0])) return false;
    return std::all_of(s.begin(), s.end(), is_ident_char);
}

struct Token {
    enum Kind { Ident, Int, Symbol, End } kind = End;
    std::string text;
    long long number = 0;
    int column = 1;
};

// Tokenizes one line. '#' starts a comment. '-' is consumed as a numeric
// sign only when a digit follows.
class LineLexer {
public:
    LineLexer(const std::string& line, int line_no,
              std::vector<SourceDiagnostic>& diags)
        : line_(line), line_no_(line_no), diags_(diags) {
        advance();
    }

    const Token& peek() const { return current_; }

    Token next() {
        Token t = current_;
        advance();
        return t;
    }

    bool at_end() const { return current_.kind == Token::End; }

    bool accept_symbol(char c) {
        if (current_.kind == Token::Symbol && current_.text[0] == c) {
            advance();
            return true;
        }
        return false;
    }

    bool expect_symbol(char c) {
        if (accept_symbol(c)) return true;
        error(std::string("expected '") + c + "'");
        return false;
    }

    std::optional<std::string> expect_ident() {
        if (current_.kind == Token::Ident) return next().text;
        error("expected an identifier");
        return std::nullopt;
    }

    std::optional<int> expect_int() {
        if (current_.kind == Token::Int) {
            Token t = next();
            if (t.number < std::numeric_limits<int>::min() ||
                t.number > std::numeric_limits<int>::max()) {
                error("integer literal out of range");
                return std::nullopt;
            }
            return static_cast<int>(t.number);
        }
        error("expected an integer");
        return std::nullopt;
    }

    void error(const std::string& message) {
        if (reported_) return;  // one diagnostic per malformed line
        reported_ = true;
        diags_.push_back({line_no_, current_.column, message, DiagnosticKind::Syntax});
    }

    bool errored() const { return reported_; }

    std::string rest_of_line() {
        std::string rest = line_.substr(std::min(pos_anchor_, line_.size()));
        auto hash = rest.find('#');
        if (hash != std::string::npos) rest = rest.substr(0, hash);
        while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.back())))
            rest.pop_back();
        current_ = Token{};
        pos_ = line_.size();
        return rest;
    }

private:
    void advance() {
        while (pos_ < line_.size() &&
               std::isspace(static_cast<unsigned char>(line_[pos_])))
            ++pos_;
        pos_anchor_ = pos_;
        if (pos_ >= line_.size() || line_[pos_] == '#') {
            current_ = Token{Token::End, "", 0, static_cast<int>(pos_) + 1};
            return;
        }
        const int col = static_cast<int>(pos_) + 1;
        char c = line_[pos_];
        if (is_ident_start(c)) {
            std::size_t start = pos_;
            while (pos_ < line_.size() && is_ident_char(line_[pos_])) ++pos_;
            current_ = Token{Token::Ident, line_.substr(start, pos_ - start), 0, col};
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '-' && pos_ + 1 < line_.size() &&
             std::isdigit(static_cast<unsigned char>(line_[pos_ + 1])))) {
            std::size_t start = pos_;
            if (c == '-') ++pos_;
            while (pos_ < line_.size() &&
                   std::isdigit(static_cast<unsigned char>(line_[pos_])))
                ++pos_;
            Token t{Token::Int, line_.substr(start, pos_ - start), 0, col};
            try {
                t.number = std::stoll(t.text);
            } catch (const std::out_of_range&) {
                if (!reported_) {
                    reported_ = true;
                    diags_.push_back({line_no_, col, "integer literal out of range",
                                      DiagnosticKind::Syntax});
                }
                t.number = 0;
            }
            current_ = t;
            return;
        }
        static const std::string symbols = "=+*{}(),";
        if (symbols.find(c) != std::string::npos) {
            ++pos_;
            current_ = Token{Token::Symbol, std::string(1, c), 0, col};
            return;
        }
        // Unknown characters become symbol tokens; the next expect_* call
        // reports them.
        ++pos_;
        current_ = Token{Token::Symbol, std::string(1, c), 0, col};
    }

    const std::string& line_;
    int line_no_;
    std::vector<SourceDiagnostic>& diags_;
    std::size_t pos_ = 0;
    std::size_t pos_anchor_ = 0;
    Token current_;
    bool reported_ = false;
};

struct ParserState {
    std::vector<std::string> outputs;
    std::unordered_map<std::string, int> output_index;
    std::vector<Label> concepts;
    std::set<Label> concept_set;
    std::vector<Constraint> constraints;
    std::map<int, Label> intended;  // output index -> value
    bool intended_seen = false;
    std::vector<std::pair<std::string, std::string>> metadata;
    std::vector<SourceDiagnostic> diags;

    void diag(int line, int column, DiagnosticKind kind, const std::string& msg) {
        diags.push_back({line, column, msg, kind});
    }

    std::optional<int> resolve(const std::string& name, int line, int column) {
        auto it = output_index.find(name);
        if (it != output_index.end()) return it->second;
        diag(line, column, DiagnosticKind::UndefinedOutput,
             "undefined output '" + name + "'");
        return std::nullopt;
    }
};

// `(<int>*)?<ident>` — a sum term with optional integer coefficient.
std::optional<SumTerm> parse_sum_term(LineLexer& lex, ParserState& st, int line) {
    int coeff = 1;
    if (lex.peek().kind == Token::Int) {
        coeff = static_cast<int>(lex.next().number);
        if (!lex.expect_symbol('*')) return std::nullopt;
    }
    int col = lex.peek().column;
    auto name = lex.expect_ident();
    if (!name) return std::nullopt;
    auto idx = st.resolve(*name, line, col);
    if (!idx) return std::nullopt;
    return SumTerm{*idx, coeff};
}

// `{ (<ident>=<int>)+ }` — shared by pinset and altclause bodies.
std::optional<std::vector<Pin>> parse_assignment_block(LineLexer& lex,
                                                       ParserState& st, int line) {
    if (!lex.expect_symbol('{')) return std::nullopt;
    std::vector<Pin> pins;
    while (!lex.accept_symbol('}')) {
        int col = lex.peek().column;
        auto name = lex.expect_ident();
        if (!name || !lex.expect_symbol('=')) return std::nullopt;
        auto value = lex.expect_int();
        if (!value) return std::nullopt;
        auto idx = st.resolve(*name, line, col);
        if (!idx) return std::nullopt;
        pins.push_back(Pin{*idx, *value});
        if (lex.at_end()) {
            lex.error("expected '}'");
            return std::nullopt;
        }
    }
    if (pins.empty()) {
        lex.error("expected at least one assignment");
        return std::nullopt;
    }
    return pins;
}

void parse_constraint(LineLexer& lex, ParserState& st, int line) {
    auto kind = lex.expect_ident();
    if (!kind) return;

    if (*kind == "sum") {
        WeightedSum sum;
        auto term = parse_sum_term(lex, st, line);
        if (!term) return;
        sum.terms.push_back(*term);
        while (lex.accept_symbol('+')) {
            term = parse_sum_term(lex, st, line);
            if (!term) return;
            sum.terms.push_back(*term);
        }
        if (!lex.expect_symbol('=')) return;
        auto target = lex.expect_int();
        if (!target) return;
        sum.target = *target;
        if (!lex.at_end()) return lex.error("unexpected trailing tokens");
        st.constraints.emplace_back(std::move(sum));
        return;
    }

    if (*kind == "modsucc") {
        int col = lex.peek().column;
        auto src = lex.expect_ident();
        if (!src) return;
        int col2 = lex.peek().column;
        auto dst = lex.expect_ident();
        if (!dst) return;
        auto kw = lex.expect_ident();
        if (!kw) return;
        if (*kw != "mod") return lex.error("expected 'mod'");
        auto modulus = lex.expect_int();
        if (!modulus) return;
        auto si = st.resolve(*src, line, col);
        auto di = st.resolve(*dst, line, col2);
        if (!si || !di) return;
        if (*modulus < 2) {
            st.diag(line, col, DiagnosticKind::OutOfDomainValue,
                    "modsucc modulus must be at least 2");
            return;
        }
        if (!lex.at_end()) return lex.error("unexpected trailing tokens");
        st.constraints.emplace_back(ModSucc{*si, *di, *modulus});
        return;
    }

    if (*kind == "pin") {
        int col = lex.peek().column;
        auto name = lex.expect_ident();
        if (!name || !lex.expect_symbol('=')) return;
        auto value = lex.expect_int();
        if (!value) return;
        auto idx = st.resolve(*name, line, col);
        if (!idx) return;
        if (!lex.at_end()) return lex.error("unexpected trailing tokens");
        st.constraints.emplace_back(Pin{*idx, *value});
        return;
    }

    if (*kind == "domain") {
        int col = lex.peek().column;
        auto name = lex.expect_ident();
        if (!name || !lex.expect_symbol('{')) return;
        std::vector<Label> allowed;
        do {
            auto value = lex.expect_int();
            if (!value) return;
            allowed.push_back(*value);
        } while (lex.accept_symbol(','));
        if (!lex.expect_symbol('}')) return;
        auto idx = st.resolve(*name, line, col);
        if (!idx) return;
        std::sort(allowed.begin(), allowed.end());
        allowed.erase(std::unique(allowed.begin(), allowed.end()), allowed.end());
        if (!lex.at_end()) return lex.error("unexpected trailing tokens");
        st.constraints.emplace_back(Domain{*idx, std::move(allowed)});
        return;
    }

    if (*kind == "pairdomain") {
        int col = lex.peek().column;
        auto a = lex.expect_ident();
        if (!a) return;
        int col2 = lex.peek().column;
        auto b = lex.expect_ident();
        if (!b || !lex.expect_symbol('{')) return;
        auto x = lex.expect_int();
        if (!x || !lex.expect_symbol(',')) return;
        auto y = lex.expect_int();
        if (!y || !lex.expect_symbol('}')) return;
        auto ai = st.resolve(*a, line, col);
        auto bi = st.resolve(*b, line, col2);
        if (!ai || !bi) return;
        if (*x == *y) {
            st.diag(line, col, DiagnosticKind::ArityMismatch,
                    "pairdomain requires two distinct labels");
            return;
        }
        if (!lex.at_end()) return lex.error("unexpected trailing tokens");
        st.constraints.emplace_back(
            PairDomain{*ai, *bi, std::min(*x, *y), std::max(*x, *y)});
        return;
    }

    if (*kind == "table") {
        if (!lex.expect_symbol('(')) return;
        Table table;
        std::vector<std::pair<std::string, int>> names;
        while (!lex.accept_symbol(')')) {
            int col = lex.peek().column;
            auto name = lex.expect_ident();
            if (!name) return;
            names.emplace_back(*name, col);
            if (lex.at_end()) return lex.error("expected ')'");
        }
        if (names.empty()) return lex.error("table needs at least one output");
        for (const auto& [name, col] : names) {
            auto idx = st.resolve(name, line, col);
            if (!idx) return;
            table.outputs.push_back(*idx);
        }
        if (!lex.expect_symbol('{')) return;
        do {
            if (!lex.expect_symbol('(')) return;
            std::vector<Label> row;
            while (!lex.accept_symbol(')')) {
                auto value = lex.expect_int();
                if (!value) return;
                row.push_back(*value);
                if (lex.at_end()) return lex.error("expected ')'");
            }
            if (row.size() != table.outputs.size()) {
                st.diag(line, lex.peek().column, DiagnosticKind::ArityMismatch,
                        "table row has " + std::to_string(row.size()) +
                            " values but the output list has " +
                            std::to_string(table.outputs.size()));
                return;
            }
            table.rows.push_back(std::move(row));
        } while (lex.accept_symbol(','));
        if (!lex.expect_symbol('}')) return;
        std::sort(table.rows.begin(), table.rows.end());
        table.rows.erase(std::unique(table.rows.begin(), table.rows.end()),
                         table.rows.end());
        if (!lex.at_end()) return lex.error("unexpected trailing tokens");
        st.constraints.emplace_back(std::move(table));
        return;
    }

    if (*kind == "pinset") {
        auto pins = parse_assignment_block(lex, st, line);
        if (!pins) return;
        if (!lex.at_end()) return lex.error("unexpected trailing tokens");
        st.constraints.emplace_back(PinSet{std::move(*pins)});
        return;
    }

    if (*kind == "altclause") {
        auto pins = parse_assignment_block(lex, st, line);
        if (!pins) return;
        if (!lex.at_end()) return lex.error("unexpected trailing tokens");
        st.constraints.emplace_back(AltClause{std::move(*pins)});
        return;
    }

    lex.error("unknown constraint kind '" + *kind + "'");
}

void parse_line(const std::string& line, int line_no, ParserState& st) {
    LineLexer lex(line, line_no, st.diags);
    if (lex.at_end()) return;  // blank or comment

    auto keyword = lex.expect_ident();
    if (!keyword) return;

    if (*keyword == "outputs") {
        if (lex.at_end()) return lex.error("expected at least one output name");
        while (!lex.at_end()) {
            int col = lex.peek().column;
            auto name = lex.expect_ident();
            if (!name) return;
            if (st.output_index.count(*name)) {
                st.diag(line_no, col, DiagnosticKind::DuplicateDeclaration,
                        "output '" + *name + "' declared twice");
                continue;
            }
            st.output_index.emplace(*name, static_cast<int>(st.outputs.size()));
            st.outputs.push_back(*name);
        }
        return;
    }

    if (*keyword == "concepts") {
        if (lex.at_end()) return lex.error("expected at least one concept label");
        while (!lex.at_end()) {
            int col = lex.peek().column;
            auto value = lex.expect_int();
            if (!value) return;
            if (!st.concept_set.insert(*value).second) {
                st.diag(line_no, col, DiagnosticKind::DuplicateDeclaration,
                        "concept " + std::to_string(*value) + " declared twice");
                continue;
            }
            st.concepts.push_back(*value);
        }
        return;
    }

    if (*keyword == "intended") {
        st.intended_seen = true;
        if (lex.at_end()) return lex.error("expected at least one assignment");
        while (!lex.at_end()) {
            int col = lex.peek().column;
            auto name = lex.expect_ident();
            if (!name || !lex.expect_symbol('=')) return;
            auto value = lex.expect_int();
            if (!value) return;
            auto idx = st.resolve(*name, line_no, col);
            if (!idx) continue;
            if (st.intended.count(*idx)) {
                st.diag(line_no, col, DiagnosticKind::DuplicateDeclaration,
                        "intended value for '" + *name + "' assigned twice");
                continue;
            }
            if (!st.concept_set.count(*value)) {
                st.diag(line_no, col, DiagnosticKind::OutOfDomainValue,
                        "intended value " + std::to_string(*value) + " for '" +
                            *name + "' is not a declared concept");
                continue;
            }
            st.intended.emplace(*idx, *value);
        }
        return;
    }

    if (*keyword == "constraint") {
        parse_constraint(lex, st, line_no);
        return;
    }

    if (*keyword == "meta") {
        auto key = lex.expect_ident();
        if (!key) return;
        st.metadata.emplace_back(*key, lex.rest_of_line());
        return;
    }

    lex.error("unknown declaration '" + *keyword + "'");
}

}  // namespace

ParseResult parse_problem(const std::string& text) {
    ParserState st;

    std::size_t start = 0;
    int line_no = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        std::string line = text.substr(
            start, end == std::string::npos ? std::string::npos : end - start);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        ++line_no;
        parse_line(line, line_no, st);
        if (end == std::string::npos) break;
        start = end + 1;
    }

    const bool empty_document = st.outputs.empty() && st.concepts.empty() &&
                                st.constraints.empty() && !st.intended_seen;
    if (!st.intended_seen)
        st.diags.push_back({line_no, 1, "missing intended declaration",
                            DiagnosticKind::Syntax});

    ParseResult result;
    if (st.intended_seen) {
        for (std::size_t i = 0; i < st.outputs.size(); ++i)
            if (!st.intended.count(static_cast<int>(i)))
                st.diags.push_back({line_no, 1,
                                    "intended mapping is missing output '" +
                                        st.outputs[i] + "'",
                                    DiagnosticKind::Syntax});
    }

    // The degenerate empty document still yields a problem; any other
    // diagnostic withholds it.
    const bool only_missing_intended = empty_document && st.diags.size() == 1;
    if (st.diags.empty() || only_missing_intended) {
        Problem p;
        p.outputs = std::move(st.outputs);
        p.concepts = std::move(st.concepts);
        p.constraints = std::move(st.constraints);
        std::vector<Label> values(p.outputs.size(), 0);
        for (const auto& [idx, v] : st.intended) values[idx] = v;
        p.intended = ConceptMapping{std::move(values)};
        p.metadata = std::move(st.metadata);
        result.problem = std::move(p);
    }
    result.diagnostics = std::move(st.diags);
    return result;
}

std::string serialize_problem(const Problem& p) {
    for (const auto& name : p.outputs)
        if (!ident_shaped(name))
            fail(ErrorKind::Argument,
                 "output name '" + name + "' is not identifier-shaped");
    for (const auto& [key, value] : p.metadata) {
        if (!ident_shaped(key))
            fail(ErrorKind::Argument,
                 "metadata key '" + key + "' is not identifier-shaped");
        const bool trimmed =
            value.empty() || (!std::isspace(static_cast<unsigned char>(value.front())) &&
                              !std::isspace(static_cast<unsigned char>(value.back())));
        if (!trimmed || value.find_first_of("#\n\r") != std::string::npos)
            fail(ErrorKind::Argument,
                 "metadata value for '" + key + "' cannot round-trip as a line");
    }

    std::ostringstream out;

    if (!p.outputs.empty()) {
        out << "outputs";
        for (const auto& o : p.outputs) out << ' ' << o;
        out << '\n';
    }
    if (!p.concepts.empty()) {
        out << "concepts";
        for (Label c : p.concepts) out << ' ' << c;
        out << '\n';
    }
    if (!p.outputs.empty()) {
        out << "intended";
        for (std::size_t i = 0; i < p.outputs.size(); ++i)
            out << ' ' << p.outputs[i] << '=' << p.intended[i];
        out << '\n';
    }
    for (const auto& [key, value] : p.metadata)
        out << "meta " << key << ' ' << value << '\n';

    struct Emit {
        std::ostringstream& out;
        const Problem& p;
        const std::string& name(int idx) const { return p.outputs[idx]; }

        void operator()(const WeightedSum& s) const {
            out << "constraint sum ";
            for (std::size_t i = 0; i < s.terms.size(); ++i) {
                if (i) out << " + ";
                if (s.terms[i].coefficient != 1)
                    out << s.terms[i].coefficient << '*';
                out << name(s.terms[i].output);
            }
            out << " = " << s.target << '\n';
        }
        void operator()(const ModSucc& m) const {
            out << "constraint modsucc " << name(m.src) << ' ' << name(m.dst)
                << " mod " << m.modulus << '\n';
        }
        void operator()(const Pin& pin) const {
            out << "constraint pin " << name(pin.output) << " = " << pin.value
                << '\n';
        }
        void operator()(const Domain& d) const {
            out << "constraint domain " << name(d.output) << " { ";
            for (std::size_t i = 0; i < d.allowed.size(); ++i) {
                if (i) out << ", ";
                out << d.allowed[i];
            }
            out << " }\n";
        }
        void operator()(const PairDomain& d) const {
            out << "constraint pairdomain " << name(d.first) << ' '
                << name(d.second) << " { " << d.low << ", " << d.high << " }\n";
        }
        void operator()(const Table& t) const {
            out << "constraint table (";
            for (int o : t.outputs) out << ' ' << name(o);
            out << " ) { ";
            for (std::size_t r = 0; r < t.rows.size(); ++r) {
                if (r) out << ", ";
                out << '(';
                for (Label v : t.rows[r]) out << ' ' << v;
                out << " )";
            }
            out << " }\n";
        }
        void operator()(const PinSet& s) const {
            out << "constraint pinset {";
            for (const auto& pin : s.pins)
                out << ' ' << name(pin.output) << '=' << pin.value;
            out << " }\n";
        }
        void operator()(const AltClause& a) const {
            out << "constraint altclause {";
            for (const auto& l : a.literals)
                out << ' ' << name(l.output) << '=' << l.value;
            out << " }\n";
        }
    };
    for (const auto& c : p.constraints) std::visit(Emit{out, p}, c);
    return out.str();
}

}  // namespace nsv
