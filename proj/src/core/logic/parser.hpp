#pragma once

#include <string>

#include "formula.hpp"

namespace kcw::logic {

// ASCII grammar: & | ! ~ # $ v ^ <#> <$> top bot, identifiers [a-z][a-z0-9_]*,
// turnstile |-. Precedence: unary > & > | > v > ^, binaries left-associative.
Formula parse_formula(const std::string& text);
Sequent parse_sequent(const std::string& text);

}  // namespace kcw::logic
