#pragma once

#include <string_view>

#include "schub/grass.hpp"

namespace schub {

class SyntaxError : public DomainError {
public:
    SyntaxError(const std::string& msg, size_t offset)
        : DomainError(msg + " at offset " + std::to_string(offset)), offset_(offset) {}
    size_t offset() const { return offset_; }

private:
    size_t offset_;
};

// Grammar (whitespace insignificant, ^ binds tighter than *, * tighter than +):
//   expr   := term { "+" term }
//   term   := factor { "*" factor }
//   factor := atom [ "^" nat ]
//   atom   := "xi" "(" nat ")" | "e" "(" nat ")" | "h" "(" nat ")"
//           | "cqe" "(" nat "," nat ")" | "e1" | "s" "[" nat { "," nat } "]"
//           | nat | "(" expr ")"
// cqe(d, j) is c_j(Sym^d V*), s[...] a Schur class, nat a scalar.
GrClass parse_class_expr(const GrContext& ctx, std::string_view text);

}  // namespace schub
