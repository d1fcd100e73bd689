#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "formwell/form.hpp"
#include "formwell/maxwell.hpp"

namespace formwell {

/// Parsed problem file: metric, potential (absent entries default to the zero
/// polynomial) and an optional gauge function.
struct ProblemSpec {
    MetricKind metric;
    Potential potential;
    std::optional<Poly> gauge;
};

/// Grammar:
///   expr     := term (('+'|'-') term)*
///   term     := factor ('*' factor)*
///   factor   := atom ('^' uint)?
///   atom     := '(' expr ')' | rational | 'i' | var | '-' atom
///   rational := uint ('/' uint)?
///   var      := 'z1' | 'z2' | 'zb1' | 'zb2'
/// Whitespace is insignificant; '/' appears only inside rational literals.
Poly parse_expr(std::string_view text);

/// Extends the expression grammar with the generators dz1, dz2, dzb1, dzb2
/// and the wedge operator "/\"; a form term is an optional scalar factor
/// chain '*' a generator chain.
Form parse_form(std::string_view text);

/// Line-oriented: '#' starts a comment, each nonblank line is "key = value".
/// Keys: metric (required, "euclidean"|"minkowski"), f1, f2, fb1, fb2, gauge.
ProblemSpec parse_problem(std::string_view text);

}  // namespace formwell
