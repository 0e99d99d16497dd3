#include "schub/expr.hpp"

#include <cctype>

namespace schub {

namespace {

class Parser {
public:
    Parser(const GrContext& ctx, std::string_view text) : ctx_(ctx), text_(text) {}

    GrClass parse() {
        GrClass v = expr();
        skip_ws();
        if (pos_ != text_.size()) throw SyntaxError("unexpected trailing input", pos_);
        return v;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        skip_ws();
        if (!eat(c)) throw SyntaxError(std::string("expected '") + c + "'", pos_);
    }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    int nat() {
        skip_ws();
        size_t start = pos_;
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw SyntaxError("expected a nonnegative integer", pos_);
        long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1000000000L) throw SyntaxError("integer literal too large", start);
            ++pos_;
        }
        return static_cast<int>(v);
    }

    GrClass expr() {
        GrClass v = term();
        while (eat('+')) v = v + term();
        return v;
    }

    GrClass term() {
        GrClass v = factor();
        while (eat('*')) v = gr_mul(v, factor());
        return v;
    }

    GrClass factor() {
        GrClass v = atom();
        if (eat('^')) {
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '-')
                throw SyntaxError("negative exponent", pos_);
            return gr_pow(v, nat());
        }
        return v;
    }

    GrClass atom() {
        skip_ws();
        if (pos_ >= text_.size()) throw SyntaxError("expected an atom", pos_);
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return gr_unit(ctx_).scaled(nat());
        if (c == '(') {
            ++pos_;
            GrClass v = expr();
            expect(')');
            return v;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            std::string id;
            while (pos_ < text_.size() &&
                   std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
                id += text_[pos_];
                ++pos_;
            }
            if (id == "e1") return class_schur(ctx_, make_partition({1}));
            if (id == "xi") {
                expect('(');
                int j = nat();
                expect(')');
                return class_xi(ctx_, j);
            }
            if (id == "e") {
                expect('(');
                int j = nat();
                expect(')');
                return class_e(ctx_, j);
            }
            if (id == "h") {
                expect('(');
                int j = nat();
                expect(')');
                return class_xi(ctx_, j);  // h_j in the Chern roots of V* is s_(j)
            }
            if (id == "cqe") {
                expect('(');
                int d = nat();
                expect(',');
                int j = nat();
                expect(')');
                if (d < 1) throw SyntaxError("cqe: symmetric power must be >= 1", start);
                return chern_sym_power(ctx_, d, j);
            }
            if (id == "s") {
                expect('[');
                std::vector<int> parts;
                parts.push_back(nat());
                while (eat(',')) parts.push_back(nat());
                expect(']');
                size_t at = start;
                try {
                    Partition lam = make_partition(std::move(parts));
                    return class_schur(ctx_, lam);
                } catch (const DomainError& e) {
                    throw SyntaxError(e.what(), at);
                }
            }
            throw SyntaxError("unknown symbol '" + id + "'", start);
        }
        throw SyntaxError("expected an atom", pos_);
    }

    const GrContext& ctx_;
    std::string_view text_;
    size_t pos_ = 0;
};

}  // namespace

GrClass parse_class_expr(const GrContext& ctx, std::string_view text) {
    return Parser(ctx, text).parse();
}

}  // namespace schub
