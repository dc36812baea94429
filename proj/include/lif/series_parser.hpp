#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lif/series.hpp"

namespace lif {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position);
    /* Byte offset into the input text where parsing failed. */
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

struct SeriesTerm {
    Rational coefficient;
    int power;
};

/* Normal form of a user-entered series polynomial: powers are distinct
   and ascending, terms with coefficient zero are removed. */
struct SeriesExpr {
    std::vector<SeriesTerm> terms;
};

/* Grammar:
     expr     := term (('+' | '-') term)*
     term     := rational ('*' 'z' ('^' uint)?)? | 'z' ('^' uint)?
     rational := ('+' | '-')? digits ('/' digits)?
   Whitespace is allowed between tokens but not inside a rational. */
SeriesExpr parse_series_expr(std::string_view text);

/* Truncate/pad the expression to the given precision. Terms whose power
   exceeds the precision are dropped with a warning on `diagnostics`. */
Series to_series(const SeriesExpr& expr, int precision, std::ostream& diagnostics);

Series parse_series(std::string_view text, int precision, std::ostream& diagnostics);

/* Renders a series in the expression grammar, e.g. "1 + 3/2*z - z^4"
   becomes "1 + 3/2*z - 1*z^4"; parse_series inverts it exactly. */
std::string to_expression_string(const Series& s);

}  // namespace lif
