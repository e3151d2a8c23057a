#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "monrep/input_format.hpp"

namespace monrep {

const AModule& InputData::module_by_name(const std::string& name) const {
    for (const NamedModule& m : modules)
        if (m.name == name) return m.mod;
    throw ValidationError("no amodule named '" + name + "' in the input");
}

const LambdaRep& InputData::rep_by_name(const std::string& name) const {
    for (const NamedRep& r : reps)
        if (r.name == name) return r.rep;
    throw ValidationError("no rep named '" + name + "' in the input");
}

namespace {

struct Token {
    enum Kind { ident, number, punct, eof };
    Kind kind = eof;
    std::string text;
    std::int64_t value = 0;
    int line = 1, col = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : s_(text) { advance(); }
    const Token& peek() const { return tok_; }
    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    [[noreturn]] void fail(int line, int col, const std::string& msg) {
        throw ParseError(msg, line, col);
    }
    char cur() const { return s_[i_]; }
    bool done() const { return i_ >= s_.size(); }
    void bump() {
        if (cur() == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++i_;
    }
    void advance() {
        while (!done()) {
            if (std::isspace(static_cast<unsigned char>(cur()))) {
                bump();
            } else if (cur() == '#') {
                while (!done() && cur() != '\n') bump();
            } else {
                break;
            }
        }
        tok_ = Token{};
        tok_.line = line_;
        tok_.col = col_;
        if (done()) return;
        char c = cur();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            tok_.kind = Token::ident;
            while (!done() && (std::isalnum(static_cast<unsigned char>(cur())) || cur() == '_')) {
                tok_.text += cur();
                bump();
            }
            return;
        }
        bool neg = false;
        if (c == '-' && i_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_ + 1]))) {
            neg = true;
            bump();
        }
        if (std::isdigit(static_cast<unsigned char>(cur())) && (neg || c != '-')) {
            tok_.kind = Token::number;
            std::int64_t v = 0;
            while (!done() && std::isdigit(static_cast<unsigned char>(cur()))) {
                if (v > (INT64_MAX - 9) / 10)
                    fail(tok_.line, tok_.col, "integer literal too large");
                v = v * 10 + (cur() - '0');
                bump();
            }
            tok_.value = neg ? -v : v;
            return;
        }
        tok_.kind = Token::punct;
        if (c == '-' && i_ + 1 < s_.size() && s_[i_ + 1] == '>') {
            tok_.text = "->";
            bump();
            bump();
            return;
        }
        static const std::string singles = "{}[]():;,=./-";
        if (singles.find(c) == std::string::npos)
            fail(tok_.line, tok_.col, std::string("unexpected character '") + c + "'");
        tok_.text = std::string(1, c);
        bump();
    }

    const std::string& s_;
    std::size_t i_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

struct MatrixLit {
    std::vector<std::vector<Scalar>> rows;
    int line = 1, col = 1;
};

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {}

    InputData parse() {
        parse_field();
        parse_algebra();
        parse_quiver();
        LambdaContext ctx(std::move(*algebra_), std::move(*quiver_), std::move(*ideal_));
        InputData data{algebra_name_, quiver_name_, std::move(ctx), {}, {}};
        while (lex_.peek().kind != Token::eof) {
            Token t = lex_.peek();
            if (t.kind == Token::ident && t.text == "amodule")
                parse_amodule(data);
            else if (t.kind == Token::ident && t.text == "rep")
                parse_rep(data);
            else
                fail(t, "expected an amodule or rep section");
        }
        return data;
    }

private:
    [[noreturn]] void fail(const Token& t, const std::string& msg) {
        throw ParseError(msg, t.line, t.col);
    }
    Token expect_ident(const std::string& what) {
        Token t = lex_.next();
        if (t.kind != Token::ident) fail(t, "expected " + what);
        return t;
    }
    Token expect_keyword(const std::string& kw) {
        Token t = lex_.next();
        if (t.kind != Token::ident || t.text != kw) fail(t, "expected '" + kw + "'");
        return t;
    }
    Token expect_punct(const std::string& p) {
        Token t = lex_.next();
        if (t.kind != Token::punct || t.text != p) fail(t, "expected '" + p + "'");
        return t;
    }
    bool accept_punct(const std::string& p) {
        if (lex_.peek().kind == Token::punct && lex_.peek().text == p) {
            lex_.next();
            return true;
        }
        return false;
    }
    bool peek_keyword(const std::string& kw) {
        return lex_.peek().kind == Token::ident && lex_.peek().text == kw;
    }
    std::int64_t expect_int(const std::string& what) {
        Token t = lex_.next();
        if (t.kind != Token::number) fail(t, "expected " + what);
        return t.value;
    }

    void parse_field() {
        Token t = lex_.next();
        if (t.kind != Token::ident || t.text != "field")
            fail(t, "missing field section (expected 'field P' or 'field rational')");
        Token v = lex_.next();
        if (v.kind == Token::ident && v.text == "rational") {
            field_ = Field::rationals();
            return;
        }
        if (v.kind != Token::number) fail(v, "expected a prime or 'rational' after 'field'");
        try {
            field_ = Field::prime(v.value);
        } catch (const Error& e) {
            fail(v, e.what());
        }
    }

    // Dotted word like a.b2.g (applied right to left); returns ids in
    // application order.
    std::vector<int> parse_relation_word(const std::map<std::string, int>& arrow_ids,
                                         Token* first_tok) {
        std::vector<int> reversed;
        while (true) {
            Token t = expect_ident("an arrow name in the relation");
            if (reversed.empty() && first_tok) *first_tok = t;
            auto it = arrow_ids.find(t.text);
            if (it == arrow_ids.end())
                fail(t, "relation references an unknown arrow '" + t.text + "'");
            reversed.push_back(it->second);
            if (!accept_punct(".")) break;
        }
        return {reversed.rbegin(), reversed.rend()};
    }

    void parse_algebra() {
        Token kw = lex_.next();
        if (kw.kind != Token::ident || kw.text != "algebra")
            fail(kw, "expected an algebra section after the field line");
        algebra_name_ = expect_ident("an algebra name").text;
        expect_punct("{");
        std::vector<std::string> vertex_names;
        std::map<std::string, int> vertex_ids, arrow_ids;
        std::vector<BaseArrow> arrows;
        std::vector<std::vector<int>> rel_words;
        Token section = kw;
        while (!accept_punct("}")) {
            Token t = lex_.next();
            if (t.kind != Token::ident) fail(t, "expected vertex, arrow or rel");
            if (t.text == "vertex") {
                Token name = expect_ident("a vertex name");
                if (vertex_ids.count(name.text)) fail(name, "duplicate vertex name");
                vertex_ids[name.text] = int(vertex_names.size());
                vertex_names.push_back(name.text);
                expect_punct(";");
            } else if (t.text == "arrow") {
                Token name = expect_ident("an arrow name");
                if (arrow_ids.count(name.text)) fail(name, "duplicate arrow name");
                expect_punct(":");
                Token src = expect_ident("a vertex name");
                expect_punct("->");
                Token dst = expect_ident("a vertex name");
                expect_punct(";");
                if (!vertex_ids.count(src.text))
                    fail(src, "arrow endpoint '" + src.text + "' is not a declared vertex");
                if (!vertex_ids.count(dst.text))
                    fail(dst, "arrow endpoint '" + dst.text + "' is not a declared vertex");
                arrow_ids[name.text] = int(arrows.size());
                arrows.push_back({name.text, vertex_ids[src.text], vertex_ids[dst.text]});
            } else if (t.text == "rel") {
                Token first;
                std::vector<int> word = parse_relation_word(arrow_ids, &first);
                expect_punct(";");
                if (word.size() < 2)
                    fail(first, "relations must be words of length at least two");
                rel_words.push_back(std::move(word));
            } else {
                fail(t, "expected vertex, arrow or rel");
            }
        }
        if (vertex_names.empty()) fail(section, "the algebra declares no vertices");
        try {
            algebra_.emplace(*field_, vertex_names, arrows, rel_words);
        } catch (const Error& e) {
            fail(section, std::string("invalid algebra section: ") + e.what());
        }
    }

    void parse_quiver() {
        Token kw = lex_.next();
        if (kw.kind != Token::ident || kw.text != "quiver")
            fail(kw, "expected a quiver section after the algebra section");
        quiver_name_ = expect_ident("a quiver name").text;
        expect_punct("{");
        expect_keyword("vertices");
        Token nt = lex_.peek();
        int n = int(expect_int("the number of vertices"));
        if (n <= 0) fail(nt, "the quiver needs at least one vertex");
        expect_punct(";");
        std::map<std::string, int> arrow_ids;
        std::vector<Arrow> arrows;
        std::vector<std::pair<std::vector<int>, Token>> rel_words;
        while (!accept_punct("}")) {
            Token t = lex_.next();
            if (t.kind != Token::ident) fail(t, "expected arrow or rel");
            if (t.text == "arrow") {
                Token name = expect_ident("an arrow name");
                if (arrow_ids.count(name.text)) fail(name, "duplicate arrow name");
                expect_punct(":");
                Token st = lex_.peek();
                int src = int(expect_int("a source vertex label"));
                expect_punct("->");
                Token dt = lex_.peek();
                int dst = int(expect_int("a target vertex label"));
                expect_punct(";");
                if (src < 1 || src > n)
                    fail(st, "arrow source " + std::to_string(src) + " is outside 1.." +
                                 std::to_string(n));
                if (dst < 1 || dst > n)
                    fail(dt, "arrow target " + std::to_string(dst) + " is outside 1.." +
                                 std::to_string(n));
                if (src <= dst)
                    fail(st, "arrows must go from a larger to a smaller vertex label");
                arrow_ids[name.text] = int(arrows.size());
                arrows.push_back({name.text, src, dst});
            } else if (t.text == "rel") {
                Token first;
                std::vector<int> word = parse_relation_word(arrow_ids, &first);
                expect_punct(";");
                if (word.size() < 2)
                    fail(first, "relations must be words of length at least two");
                rel_words.emplace_back(std::move(word), first);
            } else {
                fail(t, "expected arrow or rel");
            }
        }
        try {
            quiver_.emplace(n, arrows);
        } catch (const Error& e) {
            fail(kw, std::string("invalid quiver section: ") + e.what());
        }
        std::vector<Path> gens;
        for (const auto& [word, tok] : rel_words) {
            try {
                gens.push_back(Path::walk(*quiver_, word));
            } catch (const Error& e) {
                fail(tok, std::string("invalid relation: ") + e.what());
            }
        }
        try {
            ideal_.emplace(*quiver_, gens);
        } catch (const Error& e) {
            fail(kw, std::string("invalid relations: ") + e.what());
        }
    }

    Scalar parse_scalar() {
        Token t = lex_.peek();
        std::int64_t num = expect_int("a matrix entry");
        try {
            if (accept_punct("/")) {
                std::int64_t den = expect_int("a denominator");
                return field_->from_fraction(num, den);
            }
            return field_->from_int(num);
        } catch (const Error& e) {
            fail(t, e.what());
        }
    }

    MatrixLit parse_matrix() {
        MatrixLit lit;
        Token open = expect_punct("[");
        lit.line = open.line;
        lit.col = open.col;
        if (accept_punct("]")) return lit;
        while (true) {
            expect_punct("[");
            std::vector<Scalar> row;
            if (!accept_punct("]")) {
                while (true) {
                    row.push_back(parse_scalar());
                    if (accept_punct("]")) break;
                    expect_punct(",");
                }
            }
            if (!lit.rows.empty() && lit.rows.front().size() != row.size())
                fail(open, "matrix rows have different lengths");
            lit.rows.push_back(std::move(row));
            if (accept_punct("]")) break;
            expect_punct(",");
        }
        return lit;
    }

    Matrix fit_matrix(const MatrixLit& lit, int rows, int cols, const std::string& what) {
        if (int(lit.rows.size()) != rows ||
            (rows > 0 && int(lit.rows.front().size()) != cols)) {
            int lr = int(lit.rows.size());
            int lc = lr > 0 ? int(lit.rows.front().size()) : 0;
            throw ParseError(what + " has shape " + std::to_string(lr) + "x" +
                                 std::to_string(lc) + ", expected " + std::to_string(rows) +
                                 "x" + std::to_string(cols),
                             lit.line, lit.col);
        }
        Matrix m(*field_, rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int ccc = 0; ccc < cols; ++ccc) m.at(r, ccc) = lit.rows[r][ccc];
        return m;
    }

    // dims = [..] (";"?)  maps = { x = [[..]], .. } (";"?)   maps optional
    AModule parse_module_literal(const BaseAlgebra& a, const std::string& where) {
        expect_keyword("dims");
        expect_punct("=");
        Token open = expect_punct("[");
        std::vector<int> dims;
        if (!accept_punct("]")) {
            while (true) {
                dims.push_back(int(expect_int("a dimension")));
                if (accept_punct("]")) break;
                expect_punct(",");
            }
        }
        if (int(dims.size()) != a.vertex_count())
            fail(open, "dims lists " + std::to_string(dims.size()) +
                           " entries for a coefficient algebra with " +
                           std::to_string(a.vertex_count()) + " vertices");
        for (std::size_t i = 0; i < dims.size(); ++i)
            if (dims[i] < 0) fail(open, "dimensions cannot be negative");
        std::map<int, MatrixLit> given;
        if (peek_keyword("maps")) {
            lex_.next();
            expect_punct("=");
            expect_punct("{");
            if (!accept_punct("}")) {
                while (true) {
                    Token name = expect_ident("an arrow name");
                    auto id = a.arrow_id_by_name(name.text);
                    if (!id) fail(name, "unknown coefficient arrow '" + name.text + "'");
                    if (given.count(*id)) fail(name, "duplicate map for arrow '" + name.text + "'");
                    expect_punct("=");
                    given[*id] = parse_matrix();
                    if (accept_punct("}")) break;
                    expect_punct(",");
                }
            }
        }
        AModule m;
        m.dims = dims;
        for (int x = 0; x < a.arrow_count(); ++x) {
            const BaseArrow& ar = a.arrow(x);
            auto it = given.find(x);
            if (it == given.end())
                m.arrow_act.push_back(Matrix(*field_, dims[ar.target], dims[ar.source]));
            else
                m.arrow_act.push_back(fit_matrix(it->second, dims[ar.target], dims[ar.source],
                                                 where + ": matrix for arrow '" + ar.name + "'"));
        }
        return m;
    }

    void parse_amodule(InputData& data) {
        Token kw = lex_.next(); // amodule
        Token name = expect_ident("a module name");
        expect_punct("{");
        AModule m = parse_module_literal(data.context.base(), "amodule " + name.text);
        accept_punct(";");
        expect_punct("}");
        try {
            validate_module(data.context.base(), m);
        } catch (const Error& e) {
            fail(name, "invalid amodule '" + name.text + "': " + e.what());
        }
        (void)kw;
        data.modules.push_back({name.text, std::move(m)});
    }

    void parse_rep(InputData& data) {
        lex_.next(); // rep
        Token name = expect_ident("a rep name");
        const LambdaContext& c = data.context;
        const BaseAlgebra& a = c.base();
        expect_punct("{");
        std::map<int, AModule> branches;
        std::map<int, std::map<int, MatrixLit>> arrow_entries; // arrow -> inner vertex -> lit
        while (!accept_punct("}")) {
            Token t = lex_.next();
            if (t.kind != Token::ident) fail(t, "expected at or map");
            if (t.text == "at") {
                Token vt = lex_.peek();
                int v = int(expect_int("a vertex label"));
                if (v < 1 || v > c.vertex_count())
                    fail(vt, "vertex " + std::to_string(v) + " is outside 1.." +
                                 std::to_string(c.vertex_count()));
                if (branches.count(v)) fail(vt, "duplicate branch for vertex " + std::to_string(v));
                expect_punct(":");
                expect_keyword("module");
                branches[v] = parse_module_literal(
                    a, "rep " + name.text + " at " + std::to_string(v));
                expect_punct(";");
            } else if (t.text == "map") {
                Token an = expect_ident("an arrow name");
                auto id = c.quiver().arrow_id_by_name(an.text);
                if (!id) fail(an, "unknown arrow '" + an.text + "'");
                if (arrow_entries.count(*id))
                    fail(an, "duplicate map for arrow '" + an.text + "'");
                expect_punct("=");
                std::map<int, MatrixLit> entries;
                if (accept_punct("{")) {
                    if (!accept_punct("}")) {
                        while (true) {
                            Token vn = expect_ident("a coefficient vertex name");
                            auto vi = a.vertex_index(vn.text);
                            if (!vi)
                                fail(vn, "unknown coefficient vertex '" + vn.text + "'");
                            if (entries.count(*vi))
                                fail(vn, "duplicate matrix for vertex '" + vn.text + "'");
                            expect_punct("=");
                            entries[*vi] = parse_matrix();
                            if (accept_punct("}")) break;
                            expect_punct(",");
                        }
                    }
                } else {
                    if (a.vertex_count() != 1)
                        fail(an, "the coefficient algebra has several vertices; use map " +
                                     an.text + " = { vertexname = [[..]], .. }");
                    entries[0] = parse_matrix();
                }
                expect_punct(";");
                arrow_entries[*id] = std::move(entries);
            } else {
                fail(t, "expected at or map");
            }
        }
        LambdaRep rep;
        for (int v = 1; v <= c.vertex_count(); ++v) {
            auto it = branches.find(v);
            rep.branch.push_back(it == branches.end() ? zero_module(a) : std::move(it->second));
        }
        for (int qa = 0; qa < c.quiver().arrow_count(); ++qa) {
            const Arrow& ar = c.quiver().arrow(qa);
            AMap m;
            auto ent = arrow_entries.find(qa);
            for (int w = 0; w < a.vertex_count(); ++w) {
                int rows = rep.at(ar.target).dims[w];
                int cols = rep.at(ar.source).dims[w];
                if (ent == arrow_entries.end() || !ent->second.count(w))
                    m.mats.push_back(Matrix(*field_, rows, cols));
                else
                    m.mats.push_back(fit_matrix(ent->second.at(w), rows, cols,
                                                "rep " + name.text + ": matrix for map '" +
                                                    ar.name + "' at vertex '" +
                                                    a.vertex_name(w) + "'"));
            }
            rep.arrow.push_back(std::move(m));
        }
        try {
            validate_rep(c, rep);
        } catch (const Error& e) {
            fail(name, "invalid rep '" + name.text + "': " + e.what());
        }
        data.reps.push_back({name.text, std::move(rep)});
    }

    Lexer lex_;
    std::optional<Field> field_;
    std::optional<BaseAlgebra> algebra_;
    std::optional<Quiver> quiver_;
    std::optional<MonomialIdeal> ideal_;
    std::string algebra_name_, quiver_name_;
};

std::string scalar_text(const Field& f, const Scalar& s) { return f.to_string(s); }

std::string matrix_text(const Matrix& m) {
    std::string s = "[";
    for (int r = 0; r < m.rows(); ++r) {
        if (r) s += ", ";
        s += "[";
        for (int ccc = 0; ccc < m.cols(); ++ccc) {
            if (ccc) s += ", ";
            s += scalar_text(m.field(), m.at(r, ccc));
        }
        s += "]";
    }
    return s + "]";
}

std::string dotted_word(const std::vector<std::string>& names_in_application_order) {
    std::string s;
    for (auto it = names_in_application_order.rbegin();
         it != names_in_application_order.rend(); ++it) {
        if (!s.empty()) s += ".";
        s += *it;
    }
    return s;
}

std::string module_literal_text(const BaseAlgebra& a, const AModule& m) {
    std::string s = "dims=[";
    for (std::size_t i = 0; i < m.dims.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(m.dims[i]);
    }
    s += "] maps={ ";
    for (int x = 0; x < a.arrow_count(); ++x) {
        if (x) s += ", ";
        s += a.arrow(x).name + " = " + matrix_text(m.arrow_act[x]);
    }
    s += " }";
    return s;
}

} // namespace

InputData parse_input(const std::string& text) { return Parser(text).parse(); }

InputData parse_input_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_input(buf.str());
}

std::string print_rep_section(const LambdaContext& c, const std::string& name,
                              const LambdaRep& rep) {
    const BaseAlgebra& a = c.base();
    std::string s = "rep " + name + " {\n";
    for (int v = 1; v <= c.vertex_count(); ++v)
        s += "  at " + std::to_string(v) + ": module " + module_literal_text(a, rep.at(v)) +
             ";\n";
    for (int qa = 0; qa < c.quiver().arrow_count(); ++qa) {
        s += "  map " + c.quiver().arrow(qa).name + " = ";
        if (a.vertex_count() == 1) {
            s += matrix_text(rep.arrow[qa].mats[0]);
        } else {
            s += "{ ";
            for (int w = 0; w < a.vertex_count(); ++w) {
                if (w) s += ", ";
                s += a.vertex_name(w) + " = " + matrix_text(rep.arrow[qa].mats[w]);
            }
            s += " }";
        }
        s += ";\n";
    }
    return s + "}\n";
}

std::string print_input(const InputData& data) {
    const BaseAlgebra& a = data.context.base();
    const Quiver& q = data.context.quiver();
    const Field& f = a.field();
    std::string s = "field ";
    s += f.is_prime_field() ? std::to_string(f.char_p()) : std::string("rational");
    s += "\n\nalgebra " + data.algebra_name + " {\n";
    for (int v = 0; v < a.vertex_count(); ++v) s += "  vertex " + a.vertex_name(v) + ";\n";
    for (int x = 0; x < a.arrow_count(); ++x) {
        const BaseArrow& ar = a.arrow(x);
        s += "  arrow " + ar.name + ": " + a.vertex_name(ar.source) + " -> " +
             a.vertex_name(ar.target) + ";\n";
    }
    for (const auto& word : a.relation_words()) {
        std::vector<std::string> names;
        for (int x : word) names.push_back(a.arrow(x).name);
        s += "  rel " + dotted_word(names) + ";\n";
    }
    s += "}\n\nquiver " + data.quiver_name + " {\n";
    s += "  vertices " + std::to_string(q.vertex_count()) + ";\n";
    for (int qa = 0; qa < q.arrow_count(); ++qa) {
        const Arrow& ar = q.arrow(qa);
        s += "  arrow " + ar.name + ": " + std::to_string(ar.source) + " -> " +
             std::to_string(ar.target) + ";\n";
    }
    for (const Path& g : data.context.ideal().generators())
        s += "  rel " + g.display(q) + ";\n";
    s += "}\n";
    for (const NamedModule& m : data.modules)
        s += "\namodule " + m.name + " {\n  " + module_literal_text(a, m.mod) + ";\n}\n";
    for (const NamedRep& r : data.reps)
        s += "\n" + print_rep_section(data.context, r.name, r.rep);
    return s;
}

bool input_equal(const InputData& x, const InputData& y) {
    const BaseAlgebra &ax = x.context.base(), &ay = y.context.base();
    if (x.algebra_name != y.algebra_name || x.quiver_name != y.quiver_name) return false;
    if (!(ax.field() == ay.field())) return false;
    if (ax.vertex_count() != ay.vertex_count() || ax.arrow_count() != ay.arrow_count())
        return false;
    for (int v = 0; v < ax.vertex_count(); ++v)
        if (ax.vertex_name(v) != ay.vertex_name(v)) return false;
    for (int i = 0; i < ax.arrow_count(); ++i) {
        const BaseArrow &p = ax.arrow(i), &r = ay.arrow(i);
        if (p.name != r.name || p.source != r.source || p.target != r.target) return false;
    }
    if (ax.relation_words() != ay.relation_words()) return false;
    const Quiver &qx = x.context.quiver(), &qy = y.context.quiver();
    if (qx.vertex_count() != qy.vertex_count() || qx.arrow_count() != qy.arrow_count())
        return false;
    for (int i = 0; i < qx.arrow_count(); ++i) {
        const Arrow &p = qx.arrow(i), &r = qy.arrow(i);
        if (p.name != r.name || p.source != r.source || p.target != r.target) return false;
    }
    if (!(x.context.ideal().generators() == y.context.ideal().generators())) return false;
    auto module_equal = [](const AModule& m, const AModule& n) {
        return m.dims == n.dims && m.arrow_act == n.arrow_act;
    };
    if (x.modules.size() != y.modules.size() || x.reps.size() != y.reps.size()) return false;
    for (std::size_t i = 0; i < x.modules.size(); ++i)
        if (x.modules[i].name != y.modules[i].name ||
            !module_equal(x.modules[i].mod, y.modules[i].mod))
            return false;
    for (std::size_t i = 0; i < x.reps.size(); ++i) {
        if (x.reps[i].name != y.reps[i].name) return false;
        const LambdaRep &rx = x.reps[i].rep, &ry = y.reps[i].rep;
        if (rx.branch.size() != ry.branch.size() || rx.arrow.size() != ry.arrow.size())
            return false;
        for (std::size_t v = 0; v < rx.branch.size(); ++v)
            if (!module_equal(rx.branch[v], ry.branch[v])) return false;
        for (std::size_t qa = 0; qa < rx.arrow.size(); ++qa)
            if (!(rx.arrow[qa].mats == ry.arrow[qa].mats)) return false;
    }
    return true;
}

} // namespace monrep
