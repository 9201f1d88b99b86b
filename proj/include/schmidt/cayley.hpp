#pragma once

// The ".cayley" text format:
//
//   line 1        n
//   lines 2..n+1  n space-separated element indices (row g, column h = g*h)
//
// Anything after '#' on a line is ignored, as are blank lines. The identity
// is inferred from the table. format_cayley writes exactly this layout with
// no comments, single spaces and a trailing newline, so a written file reads
// back to the identical table and re-formats to identical bytes.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "schmidt/group.hpp"

namespace schmidt {

  class CayleyParseError : public std::runtime_error {
   public:
    CayleyParseError(std::string const& msg, std::size_t line, std::size_t col)
        : std::runtime_error("line " + std::to_string(line) + ", column "
                             + std::to_string(col) + ": " + msg),
          line_(line),
          col_(col) {}

    std::size_t line() const noexcept {
      return line_;
    }
    std::size_t column() const noexcept {
      return col_;
    }

   private:
    std::size_t line_;
    std::size_t col_;
  };

  // Syntax only; throws CayleyParseError.
  std::vector<std::vector<Elem>> parse_cayley_table(std::istream& in);

  // Syntax, then group axioms (GroupError).
  Group parse_cayley(std::istream& in);

  std::string format_cayley(Group const& g);

  Group read_cayley(std::filesystem::path const& path);
  void  write_cayley(Group const& g, std::filesystem::path const& path);

}  // namespace schmidt
