#include "schmidt/cayley.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>

namespace schmidt {

  namespace {

    struct Token {
      std::uint64_t value;
      std::size_t   line;
      std::size_t   col;
    };

    // Tokens of one line, comments stripped.
    std::vector<Token> tokenize(std::string const& text, std::size_t line) {
      std::vector<Token> out;
      std::size_t        i = 0;
      while (i < text.size()) {
        char c = text[i];
        if (c == '#') {
          break;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
          ++i;
          continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(c))) {
          throw CayleyParseError(
              std::string("unexpected character '") + c + "'", line, i + 1);
        }
        std::size_t   start = i;
        std::uint64_t v     = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
          if (v > 1'000'000) {
            throw CayleyParseError("number too large", line, start + 1);
          }
          ++i;
        }
        out.push_back({v, line, start + 1});
      }
      return out;
    }

  }  // namespace

  std::vector<std::vector<Elem>> parse_cayley_table(std::istream& in) {
    std::string                    text;
    std::size_t                    line = 0;
    std::size_t                    n    = 0;
    bool                           have_n = false;
    std::vector<std::vector<Elem>> rows;
    while (std::getline(in, text)) {
      ++line;
      auto toks = tokenize(text, line);
      if (toks.empty()) {
        continue;
      }
      if (!have_n) {
        if (toks.size() != 1) {
          throw CayleyParseError("first line must hold only the order",
                                 line,
                                 toks[1].col);
        }
        if (toks[0].value == 0) {
          throw CayleyParseError("order must be positive", line, toks[0].col);
        }
        n      = toks[0].value;
        have_n = true;
        continue;
      }
      if (rows.size() == n) {
        throw CayleyParseError("extra row after " + std::to_string(n) + " rows",
                               line,
                               toks[0].col);
      }
      if (toks.size() != n) {
        std::size_t col = toks.size() > n ? toks[n].col : text.size() + 1;
        throw CayleyParseError("expected " + std::to_string(n) + " entries, got "
                                   + std::to_string(toks.size()),
                               line,
                               col);
      }
      std::vector<Elem> row;
      row.reserve(n);
      for (auto const& t : toks) {
        if (t.value >= n) {
          throw CayleyParseError("entry " + std::to_string(t.value)
                                     + " out of range [0, " + std::to_string(n)
                                     + ")",
                                 line,
                                 t.col);
        }
        row.push_back(static_cast<Elem>(t.value));
      }
      rows.push_back(std::move(row));
    }
    if (!have_n) {
      throw CayleyParseError("missing order line", line + 1, 1);
    }
    if (rows.size() != n) {
      throw CayleyParseError("expected " + std::to_string(n) + " rows, got "
                                 + std::to_string(rows.size()),
                             line + 1,
                             1);
    }
    return rows;
  }

  Group parse_cayley(std::istream& in) {
    return validate_group(parse_cayley_table(in));
  }

  std::string format_cayley(Group const& g) {
    std::ostringstream out;
    out << g.order() << '\n';
    for (Elem a = 0; a < g.order(); ++a) {
      auto row = g.row(a);
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (j > 0) {
          out << ' ';
        }
        out << row[j];
      }
      out << '\n';
    }
    return out.str();
  }

  Group read_cayley(std::filesystem::path const& path) {
    std::ifstream in(path);
    if (!in) {
      throw std::runtime_error("cannot open " + path.string());
    }
    return parse_cayley(in);
  }

  void write_cayley(Group const& g, std::filesystem::path const& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      throw std::runtime_error("cannot write " + path.string());
    }
    out << format_cayley(g);
    if (!out) {
      throw std::runtime_error("write failed: " + path.string());
    }
  }

}  // namespace schmidt
