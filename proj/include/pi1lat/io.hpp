#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pi1lat/homspace.hpp"

// Reading and writing the JSON input format. The reader is hand-rolled so
// that integer literals of any length parse exactly and every error carries
// a line/column position; the format needs no floats.

namespace pi1lat::io {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column)
      : std::runtime_error(message + " (line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ")"),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct JsonValue {
  enum class Kind { Null, Boolean, Number, String, Array, Object };

  Kind kind = Kind::Null;
  bool boolean = false;
  Int number = 0;
  std::string text;
  std::vector<JsonValue> items;
  std::vector<std::pair<std::string, JsonValue>> members;
  int line = 0;
  int column = 0;

  bool is_object() const { return kind == Kind::Object; }
  bool is_array() const { return kind == Kind::Array; }
  bool is_number() const { return kind == Kind::Number; }
  bool is_boolean() const { return kind == Kind::Boolean; }
  const JsonValue* find(std::string_view key) const;
};

JsonValue parse_json(std::string_view text);

HomSpaceInput read_input(const JsonValue& root);
HomSpaceInput read_input_text(std::string_view text);
HomSpaceInput read_input_file(const std::string& path);

// Canonical serialization of an input; parsing it back yields an input with
// identical computation results.
std::string write_input(const HomSpaceInput& input);
void write_input_file(const HomSpaceInput& input, const std::string& path);

}  // namespace pi1lat::io
