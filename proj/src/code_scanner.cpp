#include "tracelink/code_scanner.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <string>
#include <vector>

namespace tracelink::corpus {
namespace {

enum class TokType { Identifier, Number, Literal, Punct };

struct Tok {
    TokType type;
    std::string text;

    bool is(std::string_view p) const { return type == TokType::Punct && text == p; }
};

bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '$';
}
bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '$';
}

template <std::size_t N>
bool contains(const std::array<std::string_view, N>& words, std::string_view w) {
    return std::find(words.begin(), words.end(), w) != words.end();
}

// Words that can never be a declared or invoked name.
constexpr std::array kReserved = std::to_array<std::string_view>({
    "abstract", "assert", "auto", "boolean", "break", "byte", "case", "catch", "char", "class",
    "const", "continue", "default", "delete", "do", "double", "else", "enum", "extends", "extern",
    "final", "finally", "float", "for", "goto", "if", "implements", "import", "inline",
    "instanceof", "int", "interface", "long", "native", "new", "package", "private", "protected",
    "public", "register", "return", "short", "signed", "sizeof", "static", "strictfp", "struct",
    "super", "switch", "synchronized", "this", "throw", "throws", "transient", "try", "typedef",
    "union", "unsigned", "void", "volatile", "while",
});

// Dropped from declaration headers before locating the type and the name.
constexpr std::array kModifiers = std::to_array<std::string_view>({
    "abstract", "const", "default", "enum", "explicit", "extern", "final", "inline", "native",
    "private", "protected", "public", "register", "static", "strictfp", "struct", "synchronized",
    "transient", "union", "virtual", "volatile",
});

constexpr std::array kTypeKeywords = std::to_array<std::string_view>({
    "class", "enum", "interface", "struct", "union",
});

constexpr std::array kSkipStatements = std::to_array<std::string_view>({
    "import", "package", "return", "throw", "typedef", "using", "namespace",
});

class Lexer {
public:
    Lexer(std::string_view src, CodeParts& parts) : src_(src), parts_(parts) {}

    std::vector<Tok> run() {
        bool line_start = true;
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (c == '\n') {
                line_start = true;
                ++pos_;
                continue;
            }
            if (std::isspace(static_cast<unsigned char>(c)) != 0) {
                ++pos_;
                continue;
            }
            if (c == '#' && line_start) {
                skip_preprocessor();
                continue;
            }
            line_start = false;
            if (c == '/' && peek(1) == '/') {
                const std::size_t end = src_.find('\n', pos_);
                add_comment(src_.substr(pos_ + 2, (end == std::string_view::npos ? src_.size() : end) - pos_ - 2));
                pos_ = end == std::string_view::npos ? src_.size() : end;
            } else if (c == '/' && peek(1) == '*') {
                const std::size_t end = src_.find("*/", pos_ + 2);
                const std::size_t stop = end == std::string_view::npos ? src_.size() : end;
                add_comment(src_.substr(pos_ + 2, stop - pos_ - 2));
                pos_ = end == std::string_view::npos ? src_.size() : end + 2;
            } else if (c == '"' || c == '\'') {
                skip_literal(c);
                toks_.push_back({TokType::Literal, "\"\""});
            } else if (ident_start(c)) {
                const std::size_t begin = pos_;
                while (pos_ < src_.size() && ident_char(src_[pos_])) ++pos_;
                toks_.push_back({TokType::Identifier, std::string(src_.substr(begin, pos_ - begin))});
            } else if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
                const std::size_t begin = pos_;
                while (pos_ < src_.size() && (ident_char(src_[pos_]) || src_[pos_] == '.')) ++pos_;
                toks_.push_back({TokType::Number, std::string(src_.substr(begin, pos_ - begin))});
            } else if (c == '-' && peek(1) == '>') {
                toks_.push_back({TokType::Punct, "->"});
                pos_ += 2;
            } else if (c == ':' && peek(1) == ':') {
                toks_.push_back({TokType::Punct, "::"});
                pos_ += 2;
            } else if (c == '.' && peek(1) == '.' && peek(2) == '.') {
                toks_.push_back({TokType::Punct, "..."});
                pos_ += 3;
            } else {
                toks_.push_back({TokType::Punct, std::string(1, c)});
                ++pos_;
            }
        }
        return std::move(toks_);
    }

private:
    char peek(std::size_t ahead) const {
        return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
    }

    void skip_preprocessor() {
        while (pos_ < src_.size() && src_[pos_] != '\n') {
            if (src_[pos_] == '\\' && peek(1) == '\n') ++pos_;
            ++pos_;
        }
    }

    void skip_literal(char quote) {
        ++pos_;
        while (pos_ < src_.size() && src_[pos_] != quote && src_[pos_] != '\n') {
            if (src_[pos_] == '\\') ++pos_;
            ++pos_;
        }
        if (pos_ < src_.size()) ++pos_;
    }

    void add_comment(std::string_view text) {
        for (auto& s : tokenize_natural(text)) parts_.comments.push_back(std::move(s));
    }

    std::string_view src_;
    CodeParts& parts_;
    std::size_t pos_ = 0;
    std::vector<Tok> toks_;
};

enum class Scope { File, Class, Method, Block };

struct Frame {
    Scope scope;
    std::string class_name;
    std::vector<Tok> stmt;
    int paren_depth = 0;
    bool awaiting_typedef_name = false;
};

using Toks = std::vector<Tok>;

bool is_name(const Tok& t) {
    return t.type == TokType::Identifier && !contains(kReserved, t.text);
}

// Removes "@Annotation" and "@Annotation(...)".
Toks strip_annotations(const Toks& in) {
    Toks out;
    for (std::size_t i = 0; i < in.size(); ++i) {
        if (in[i].is("@") && i + 1 < in.size() && in[i + 1].type == TokType::Identifier) {
            if (in[i + 1].text == "interface") {  // @interface declares a type
                continue;
            }
            ++i;
            while (i + 2 < in.size() && in[i + 1].is(".") && in[i + 2].type == TokType::Identifier) i += 2;
            if (i + 1 < in.size() && in[i + 1].is("(")) {
                int depth = 0;
                for (++i; i < in.size(); ++i) {
                    if (in[i].is("(")) ++depth;
                    if (in[i].is(")") && --depth == 0) break;
                }
            }
            continue;
        }
        out.push_back(in[i]);
    }
    return out;
}

// Splits on commas that are not nested in (), [], {} or type arguments.
std::vector<Toks> split_top_level(const Toks& in) {
    std::vector<Toks> out(1);
    int depth = 0;
    int angle = 0;
    bool in_init = false;
    for (const auto& t : in) {
        if (t.is("(") || t.is("[") || t.is("{")) ++depth;
        if (t.is(")") || t.is("]") || t.is("}")) --depth;
        if (depth == 0 && !in_init) {
            if (t.is("<")) ++angle;
            if (t.is(">") && angle > 0) --angle;
        }
        if (depth == 0 && t.is("=")) in_init = true;
        if (depth == 0 && t.is(",") && (in_init || angle == 0)) {
            out.emplace_back();
            in_init = false;
            angle = 0;
            continue;
        }
        out.back().push_back(t);
    }
    if (out.back().empty()) out.pop_back();
    return out;
}

std::size_t find_top_level(const Toks& in, std::string_view p) {
    int depth = 0;
    for (std::size_t i = 0; i < in.size(); ++i) {
        if (depth == 0 && in[i].is(p)) return i;
        if (in[i].is("(") || in[i].is("[") || in[i].is("{")) ++depth;
        if (in[i].is(")") || in[i].is("]") || in[i].is("}")) --depth;
    }
    return in.size();
}

std::size_t matching_paren(const Toks& in, std::size_t open) {
    int depth = 0;
    for (std::size_t i = open; i < in.size(); ++i) {
        if (in[i].is("(")) ++depth;
        if (in[i].is(")") && --depth == 0) return i;
    }
    return in.size();
}

class Parser {
public:
    explicit Parser(CodeParts& parts) : parts_(parts) {}

    void run(const Toks& toks) {
        frames_.push_back(Frame{Scope::File, {}, {}});
        for (const auto& t : toks) {
            Frame& f = frames_.back();
            if (t.is("(")) {
                ++f.paren_depth;
                f.stmt.push_back(t);
            } else if (t.is(")")) {
                if (f.paren_depth > 0) --f.paren_depth;
                f.stmt.push_back(t);
            } else if (t.is("{")) {
                open_brace();
            } else if (t.is("}")) {
                close_brace();
            } else if (t.is(";") && f.paren_depth == 0) {
                end_statement();
            } else {
                f.stmt.push_back(t);
            }
        }
        // Unbalanced input: flush whatever is pending.
        while (!frames_.empty()) {
            end_statement();
            frames_.pop_back();
        }
    }

private:
    void add(std::vector<IdentifierTokens>& list, std::string_view name) {
        auto tokens = split_identifier(name);
        if (!tokens.empty()) list.push_back(std::move(tokens));
    }

    void collect_invocations(const Toks& toks) {
        for (std::size_t i = 0; i + 1 < toks.size(); ++i) {
            if (!is_name(toks[i]) || !toks[i + 1].is("(")) continue;
            if (i > 0 && toks[i - 1].type == TokType::Identifier && toks[i - 1].text == "new") continue;
            add(parts_.invoked_method_names, toks[i].text);
        }
    }

    // Adds type and name entries for one "Type name" fragment; returns the
    // type identifiers so that later declarators can reuse them.
    Toks declaration(const Toks& raw, std::vector<IdentifierTokens>& types,
                     std::vector<IdentifierTokens>& names, const Toks* inherited_type) {
        Toks idents;
        for (const auto& t : strip_annotations(raw)) {
            if (t.type == TokType::Identifier && !contains(kModifiers, t.text)) idents.push_back(t);
        }
        if (idents.empty()) return {};
        const Tok name = idents.back();
        idents.pop_back();
        const Toks& type = inherited_type != nullptr ? *inherited_type : idents;
        if (type.empty() || !is_name(name)) return {};
        for (const auto& t : type) {
            if (t.text != "void") add(types, t.text);
        }
        add(names, name.text);
        return type;
    }

    void parameters(const Toks& header, std::size_t open, std::size_t close) {
        const Toks inside(header.begin() + static_cast<std::ptrdiff_t>(open + 1),
                          header.begin() + static_cast<std::ptrdiff_t>(close));
        for (const auto& param : split_top_level(inside)) {
            declaration(param, parts_.parameter_type_names, parts_.parameter_names, nullptr);
        }
    }

    // Recognizes "modifiers Type name(params) [throws X] [const]".
    bool try_method(const Toks& header, const Frame& frame) {
        const std::size_t open = find_top_level(header, "(");
        if (open == 0 || open >= header.size()) return false;
        const Tok& name = header[open - 1];
        if (!is_name(name)) return false;
        Toks before;
        for (std::size_t i = 0; i + 1 < open; ++i) {
            const Tok& t = header[i];
            if (t.is("=") || t.is(".") || t.is("->") || t.is("(") || t.is(",")) return false;
            if (t.type == TokType::Identifier && (t.text == "new" || t.text == "return" ||
                                                  t.text == "else" || t.text == "throw")) {
                return false;
            }
            if (t.type == TokType::Identifier && !contains(kModifiers, t.text)) before.push_back(t);
        }
        const bool constructor = frame.scope == Scope::Class && name.text == frame.class_name;
        if (before.empty() && !constructor) return false;
        const std::size_t close = matching_paren(header, open);
        if (close >= header.size()) return false;
        for (std::size_t i = close + 1; i < header.size(); ++i) {
            const Tok& t = header[i];
            if (!(t.type == TokType::Identifier || t.is(",") || t.is("."))) return false;
        }
        add(parts_.method_names, name.text);
        parameters(header, open, close);
        return true;
    }

    void field_statement(const Toks& header) {
        const auto declarators = split_top_level(header);
        Toks type;
        for (std::size_t d = 0; d < declarators.size(); ++d) {
            const Toks& decl = declarators[d];
            const std::size_t eq = find_top_level(decl, "=");
            const Toks left(decl.begin(), decl.begin() + static_cast<std::ptrdiff_t>(eq));
            if (eq < decl.size()) {
                collect_invocations(Toks(decl.begin() + static_cast<std::ptrdiff_t>(eq + 1), decl.end()));
            }
            if (d == 0) {
                type = declaration(left, parts_.field_type_names, parts_.field_names, nullptr);
                if (type.empty()) return;
            } else {
                // Later declarators share the first one's type; record only names.
                Toks idents;
                for (const auto& t : left) {
                    if (t.type == TokType::Identifier) idents.push_back(t);
                }
                if (!idents.empty() && is_name(idents.back())) add(parts_.field_names, idents.back().text);
            }
        }
    }

    static bool starts_with_keyword(const Toks& toks, std::span<const std::string_view> words) {
        return !toks.empty() && toks.front().type == TokType::Identifier &&
               std::find(words.begin(), words.end(), toks.front().text) != words.end();
    }

    // A class-like declaration header; returns its scope name (possibly empty).
    std::optional<std::string> type_declaration(const Toks& header) {
        if (find_top_level(header, "(") < header.size()) return std::nullopt;
        if (find_top_level(header, "=") < header.size()) return std::nullopt;
        for (std::size_t i = 0; i < header.size(); ++i) {
            const Tok& t = header[i];
            if (t.type != TokType::Identifier || !contains(kTypeKeywords, t.text)) continue;
            if (i > 0 && header[i - 1].text == "new") return std::nullopt;
            if (i + 1 < header.size() && is_name(header[i + 1])) return header[i + 1].text;
            return std::string();
        }
        return std::nullopt;
    }

    void open_brace() {
        Frame& f = frames_.back();
        if (f.paren_depth > 0) {  // lambda or initializer inside an argument list
            f.stmt.push_back(Tok{TokType::Punct, "{"});
            frames_.push_back(Frame{Scope::Block, {}, {}});
            nested_in_parens_.push_back(true);
            return;
        }
        const Toks header = strip_annotations(f.stmt);
        f.stmt.clear();
        Frame next{Scope::Block, {}, {}};
        if (auto name = type_declaration(header)) {
            next.scope = Scope::Class;
            next.class_name = *name;
            if (!name->empty()) {
                add(parts_.class_names, *name);
            } else if (!header.empty() && header.front().text == "typedef") {
                f.awaiting_typedef_name = true;
            }
        } else if (try_method(header, f)) {
            next.scope = Scope::Method;
        } else if ((f.scope == Scope::Class || f.scope == Scope::File) &&
                   find_top_level(header, "=") < header.size()) {
            field_statement(header);
        } else {
            collect_invocations(header);
        }
        frames_.push_back(std::move(next));
        nested_in_parens_.push_back(false);
    }

    void close_brace() {
        if (frames_.size() <= 1) return;
        end_statement();
        frames_.pop_back();
        const bool in_parens = nested_in_parens_.back();
        nested_in_parens_.pop_back();
        if (in_parens) frames_.back().stmt.push_back(Tok{TokType::Punct, "}"});
    }

    void end_statement() {
        Frame& f = frames_.back();
        const Toks stmt = strip_annotations(f.stmt);
        f.stmt.clear();
        if (stmt.empty()) return;
        if (f.awaiting_typedef_name) {
            f.awaiting_typedef_name = false;
            if (is_name(stmt.back())) add(parts_.class_names, stmt.back().text);
            return;
        }
        if (f.scope == Scope::Method || f.scope == Scope::Block) {
            collect_invocations(stmt);
            return;
        }
        if (starts_with_keyword(stmt, kSkipStatements)) return;
        const std::size_t paren = find_top_level(stmt, "(");
        const std::size_t eq = find_top_level(stmt, "=");
        if (paren < eq) {
            if (!try_method(stmt, f)) collect_invocations(stmt);
            return;
        }
        field_statement(stmt);
    }

    CodeParts& parts_;
    std::vector<Frame> frames_;
    std::vector<bool> nested_in_parens_;
};

}  // namespace

CodeParts scan_code(std::string_view source) {
    CodeParts parts;
    const auto toks = Lexer(source, parts).run();
    Parser(parts).run(toks);
    return parts;
}

}  // namespace tracelink::corpus
