#include "chowkit/script.hpp"

#include <cctype>
#include <sstream>

namespace chowkit {

namespace {

struct Token {
    enum class Kind { Ident, Int, Sym, End };
    Kind kind = Kind::End;
    std::string text;
    long value = 0;
    int col = 0;
};

class LineLexer {
public:
    LineLexer(const std::string& line, int lineno) : line_(line), lineno_(lineno) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }
    bool at_end() const { return tok_.kind == Token::Kind::End; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(lineno_, tok_.col > 0 ? tok_.col : static_cast<int>(pos_) + 1, msg);
    }
    [[noreturn]] void fail_at(int col, const std::string& msg) const {
        throw ParseError(lineno_, col, msg);
    }

    Token expect_ident(const std::string& what) {
        if (tok_.kind != Token::Kind::Ident) fail("expected " + what);
        return take();
    }
    long expect_int(const std::string& what) {
        if (tok_.kind != Token::Kind::Int) fail("expected " + what);
        return take().value;
    }
    void expect_sym(char c) {
        if (tok_.kind != Token::Kind::Sym || tok_.text[0] != c)
            fail(std::string("expected '") + c + "'");
        take();
    }
    bool accept_sym(char c) {
        if (tok_.kind == Token::Kind::Sym && tok_.text[0] == c) {
            take();
            return true;
        }
        return false;
    }
    bool peek_sym(char c) const {
        return tok_.kind == Token::Kind::Sym && tok_.text[0] == c;
    }

private:
    void advance() {
        while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_]))) ++pos_;
        tok_ = Token{};
        tok_.col = static_cast<int>(pos_) + 1;
        if (pos_ >= line_.size() || line_[pos_] == '#') {
            tok_.kind = Token::Kind::End;
            return;
        }
        char c = line_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < line_.size() &&
                   (std::isalnum(static_cast<unsigned char>(line_[pos_])) || line_[pos_] == '_'))
                ++pos_;
            tok_.kind = Token::Kind::Ident;
            tok_.text = line_.substr(start, pos_ - start);
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '-' && pos_ + 1 < line_.size() &&
             std::isdigit(static_cast<unsigned char>(line_[pos_ + 1])))) {
            std::size_t start = pos_;
            if (c == '-') ++pos_;
            while (pos_ < line_.size() && std::isdigit(static_cast<unsigned char>(line_[pos_])))
                ++pos_;
            tok_.kind = Token::Kind::Int;
            tok_.text = line_.substr(start, pos_ - start);
            tok_.value = std::stol(tok_.text);
            return;
        }
        static const std::string syms = "=*+(){},^-";
        if (syms.find(c) != std::string::npos) {
            tok_.kind = Token::Kind::Sym;
            tok_.text = std::string(1, c);
            ++pos_;
            return;
        }
        throw ParseError(lineno_, tok_.col, std::string("unexpected character '") + c + "'");
    }

    const std::string& line_;
    int lineno_;
    std::size_t pos_ = 0;
    Token tok_;
};

std::vector<int> parse_base_factors(LineLexer& lx) {
    std::vector<int> dims;
    while (true) {
        Token t = lx.expect_ident("projective factor like P2");
        if (t.text.size() < 2 || t.text[0] != 'P')
            lx.fail_at(t.col, "expected projective factor like P2");
        for (std::size_t i = 1; i < t.text.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t.text[i])))
                lx.fail_at(t.col, "expected projective factor like P2");
        dims.push_back(std::stoi(t.text.substr(1)));
        if (!lx.accept_sym('*')) break;
    }
    return dims;
}

Expo parse_int_list(LineLexer& lx) {
    Expo out;
    out.push_back(static_cast<int>(lx.expect_int("integer")));
    while (lx.accept_sym(','))
        out.push_back(static_cast<int>(lx.expect_int("integer")));
    return out;
}

BundleTerm parse_bundle_term(LineLexer& lx) {
    BundleTerm t;
    Token head = lx.expect_ident("bundle term");
    if (head.text == "O") {
        if (lx.accept_sym('{')) {
            t.kind = BundleTerm::Kind::Generator;
            t.name = lx.expect_ident("generator name").text;
            lx.expect_sym('}');
            lx.expect_sym('(');
            t.gen_degree = static_cast<int>(lx.expect_int("generator degree"));
            lx.expect_sym(')');
        } else {
            t.kind = BundleTerm::Kind::Degrees;
            lx.expect_sym('(');
            t.degrees = parse_int_list(lx);
            lx.expect_sym(')');
        }
    } else if (head.text == "dual") {
        t.kind = BundleTerm::Kind::Dual;
        lx.expect_sym('(');
        t.name = lx.expect_ident("bundle name").text;
        lx.expect_sym(')');
    } else {
        t.kind = BundleTerm::Kind::Ref;
        t.name = head.text;
    }
    if (lx.accept_sym('^')) {
        long n = lx.expect_int("repeat count");
        if (n < 1) lx.fail_at(lx.peek().col, "repeat count must be >= 1");
        t.repeat = static_cast<int>(n);
    }
    return t;
}

BundleExpr parse_bundle_expr(LineLexer& lx) {
    BundleExpr e;
    e.push_back(parse_bundle_term(lx));
    while (lx.accept_sym('+')) e.push_back(parse_bundle_term(lx));
    return e;
}

QueryItem parse_query_item(LineLexer& lx) {
    QueryItem q;
    Token t = lx.expect_ident("query item");
    auto arg = [&](QueryItem::Kind kind, bool allow_O) {
        q.kind = kind;
        lx.expect_sym('(');
        if (lx.accept_sym('-')) {
            Token k = lx.expect_ident("K");
            if (k.text != "K") lx.fail_at(k.col, "expected -K");
            q.minus_k = true;
        } else if (allow_O && lx.peek().kind == Token::Kind::Ident &&
                   lx.peek().text == "O") {
            lx.take();
            q.structure = true;
        } else {
            q.degrees = parse_int_list(lx);
        }
        lx.expect_sym(')');
    };
    if (t.text == "euler") q.kind = QueryItem::Kind::Euler;
    else if (t.text == "dim") q.kind = QueryItem::Kind::Dim;
    else if (t.text == "chiy") q.kind = QueryItem::Kind::ChiY;
    else if (t.text == "fano") q.kind = QueryItem::Kind::Fano;
    else if (t.text == "canonical") q.kind = QueryItem::Kind::Canonical;
    else if (t.text == "chi") arg(QueryItem::Kind::Chi, true);
    else if (t.text == "degree") arg(QueryItem::Kind::Degree, false);
    else if (t.text == "h0") arg(QueryItem::Kind::H0, true);
    else lx.fail_at(t.col, "unknown query item '" + t.text + "'");
    return q;
}

Statement parse_statement(LineLexer& lx, int lineno) {
    Statement st;
    st.line = lineno;
    Token head = lx.expect_ident("statement");

    auto parse_rhs_construction = [&](const std::string& name) {
        st.name = name;
        Token rhs = lx.expect_ident("base/proj/zero/preset");
        if (rhs.text == "base") {
            st.kind = Statement::Kind::Base;
            st.base_dims = parse_base_factors(lx);
        } else if (rhs.text == "proj") {
            st.kind = Statement::Kind::Proj;
            lx.expect_sym('(');
            st.bundle = parse_bundle_expr(lx);
            lx.expect_sym(')');
        } else if (rhs.text == "zero") {
            st.kind = Statement::Kind::Zero;
            lx.expect_sym('(');
            st.space_arg = lx.expect_ident("space name").text;
            lx.expect_sym(',');
            st.bundle = parse_bundle_expr(lx);
            lx.expect_sym(')');
        } else if (rhs.text == "preset") {
            st.kind = Statement::Kind::Preset;
            lx.expect_sym('(');
            st.preset_name = lx.expect_ident("preset name").text;
            lx.expect_sym(')');
        } else {
            throw ParseError(lineno, rhs.col, "expected base, proj, zero or preset");
        }
    };

    if (head.text == "base") {
        st.kind = Statement::Kind::Base;
        st.base_dims = parse_base_factors(lx);
    } else if (head.text == "bundle") {
        st.kind = Statement::Kind::Bundle;
        st.name = lx.expect_ident("bundle name").text;
        lx.expect_sym('=');
        st.bundle = parse_bundle_expr(lx);
    } else if (head.text == "space") {
        std::string name = lx.expect_ident("space name").text;
        lx.expect_sym('=');
        parse_rhs_construction(name);
    } else if (head.text == "preset") {
        st.kind = Statement::Kind::Preset;
        st.preset_name = lx.expect_ident("preset name").text;
        st.name = st.preset_name;
    } else if (head.text == "query") {
        st.kind = Statement::Kind::Query;
        st.space_arg = lx.expect_ident("space name").text;
        if (lx.at_end()) lx.fail("query needs at least one item");
        while (!lx.at_end()) st.items.push_back(parse_query_item(lx));
    } else if (head.text == "ffcheck") {
        st.kind = Statement::Kind::FFCheck;
        while (!lx.at_end()) {
            Token t = lx.expect_ident("ffcheck parameter or check name");
            if (lx.accept_sym('=')) {
                if (t.text == "instance") {
                    st.ff.instance_file = lx.expect_ident("file path").text;
                } else {
                    st.ff.kv[t.text] = lx.expect_int("parameter value");
                }
            } else {
                st.ff.checks.push_back(t.text);
            }
        }
    } else {
        // NAME = base/proj/zero/preset
        std::string name = head.text;
        lx.expect_sym('=');
        parse_rhs_construction(name);
    }
    if (!lx.at_end()) lx.fail("trailing tokens after statement");
    return st;
}

} // namespace

Script parse(const std::string& text) {
    Script out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        LineLexer lx(line, lineno);
        if (lx.at_end()) continue;
        out.statements.push_back(parse_statement(lx, lineno));
    }
    return out;
}

namespace {

std::string print_degrees(const Expo& d) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) os << ",";
        os << d[i];
    }
    os << ")";
    return os.str();
}

std::string print_bundle_term(const BundleTerm& t) {
    std::ostringstream os;
    switch (t.kind) {
    case BundleTerm::Kind::Degrees: os << "O" << print_degrees(t.degrees); break;
    case BundleTerm::Kind::Generator: os << "O{" << t.name << "}(" << t.gen_degree << ")"; break;
    case BundleTerm::Kind::Dual: os << "dual(" << t.name << ")"; break;
    case BundleTerm::Kind::Ref: os << t.name; break;
    }
    if (t.repeat > 1) os << "^" << t.repeat;
    return os.str();
}

std::string print_bundle_expr(const BundleExpr& e) {
    std::ostringstream os;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) os << " + ";
        os << print_bundle_term(e[i]);
    }
    return os.str();
}

std::string print_query_item(const QueryItem& q) {
    auto arg = [&]() -> std::string {
        if (q.minus_k) return "(-K)";
        if (q.structure) return "(O)";
        return print_degrees(q.degrees);
    };
    switch (q.kind) {
    case QueryItem::Kind::Euler: return "euler";
    case QueryItem::Kind::Dim: return "dim";
    case QueryItem::Kind::ChiY: return "chiy";
    case QueryItem::Kind::Fano: return "fano";
    case QueryItem::Kind::Canonical: return "canonical";
    case QueryItem::Kind::Chi: return "chi" + arg();
    case QueryItem::Kind::Degree: return "degree" + arg();
    case QueryItem::Kind::H0: return "h0" + arg();
    }
    return "?";
}

} // namespace

std::string print(const Statement& st) {
    std::ostringstream os;
    switch (st.kind) {
    case Statement::Kind::Base:
        if (!st.name.empty()) os << st.name << " = ";
        os << "base ";
        for (std::size_t i = 0; i < st.base_dims.size(); ++i) {
            if (i) os << " * ";
            os << "P" << st.base_dims[i];
        }
        break;
    case Statement::Kind::Bundle:
        os << "bundle " << st.name << " = " << print_bundle_expr(st.bundle);
        break;
    case Statement::Kind::Proj:
        os << "space " << st.name << " = proj(" << print_bundle_expr(st.bundle) << ")";
        break;
    case Statement::Kind::Zero:
        os << st.name << " = zero(" << st.space_arg << ", " << print_bundle_expr(st.bundle) << ")";
        break;
    case Statement::Kind::Preset:
        if (st.name == st.preset_name) os << "preset " << st.preset_name;
        else os << st.name << " = preset(" << st.preset_name << ")";
        break;
    case Statement::Kind::Query:
        os << "query " << st.space_arg;
        for (const auto& q : st.items) os << " " << print_query_item(q);
        break;
    case Statement::Kind::FFCheck:
        os << "ffcheck";
        for (const auto& [k, v] : st.ff.kv) os << " " << k << "=" << v;
        if (!st.ff.instance_file.empty()) os << " instance=" << st.ff.instance_file;
        for (const auto& c : st.ff.checks) os << " " << c;
        break;
    }
    return os.str();
}

std::string print(const Script& s) {
    std::ostringstream os;
    for (const auto& st : s.statements) os << print(st) << "\n";
    return os.str();
}

} // namespace chowkit
