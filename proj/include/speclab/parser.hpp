#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "speclab/formula.hpp"

namespace speclab {

// Parses the concrete LTL syntax:
//   true false ! && || -> <-> X U R W F G, parentheses.
// Precedence (highest to lowest): ! X F G | U R W | && | || | -> <->.
// U R W and -> <-> are right-associative; && and || are left-associative.
// `a <-> b` desugars to `(a -> b) && (b -> a)` at parse time.
//
// When `vocab` is given, any atom outside it raises ParseError; otherwise the
// vocabulary is inferred from the text.
Formula parse(std::string_view text,
              const std::optional<std::set<std::string>>& vocab = std::nullopt);

}  // namespace speclab
