#pragma once

#include "gpi/freealg.hpp"
#include "gpi/identity.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

// Text format:
//
//   # comment
//   group: Z3                      (or Z<3>, or table [[0,1],[1,0]])
//   grading: 0 1 2                 (optional; element indices)
//   vars: x1:1 x2:2 x3:0           (degrees are element indices)
//   poly: [x1*x2, x3] - 2*x3*x1
//   m: x1*x2*x3
//   n: x3*x2*x1
//   generator: type2 x1 | x2 | x3
//
// Body lines are optional and each may appear once.

namespace gpi::dsl {

struct Document {
  Context context;
  std::optional<FreePoly> poly;
  std::optional<Word> m;
  std::optional<Word> n;
  std::optional<GeneratorInstance> generator;

  friend bool operator==(const Document&, const Document&) = default;
};

/// Throws ParseError with a 1-based line and column.
Document parse_document(std::string_view text);
/// Throws ParseError, or Error(Parse) when the file cannot be read.
Document parse_file(const std::filesystem::path& path);

/// Expression over declared variables. Columns in errors are relative to expr.
FreePoly parse_poly(std::string_view expr, const Context& ctx);
/// A nonempty product of declared variables.
Word parse_word(std::string_view expr, const Context& ctx);

/// "Z3" for cyclic tables, "table [[...]]" otherwise.
std::string format_group(const FiniteGroup& group);
std::string format_document(const Document& doc);

}  // namespace gpi::dsl
