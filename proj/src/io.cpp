#include "pi1lat/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace pi1lat::io {

const JsonValue* JsonValue::find(std::string_view key) const {
  for (const auto& [name, value] : members)
    if (name == key) return &value;
  return nullptr;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  JsonValue parse() {
    JsonValue v = parse_value();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing content after the JSON document");
    return v;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line_, column_);
  }

  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  char advance() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void skip_ws() {
    while (!eof()) {
      const char c = peek();
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r')
        advance();
      else
        break;
    }
  }

  void expect(char c) {
    if (eof() || peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }

  void expect_keyword(std::string_view word) {
    for (char c : word) {
      if (eof() || peek() != c) fail("invalid literal");
      advance();
    }
  }

  JsonValue parse_value() {
    skip_ws();
    if (eof()) fail("unexpected end of input");
    JsonValue v;
    v.line = line_;
    v.column = column_;
    const char c = peek();
    switch (c) {
      case '{':
        parse_object(v);
        return v;
      case '[':
        parse_array(v);
        return v;
      case '"':
        v.kind = JsonValue::Kind::String;
        v.text = parse_string();
        return v;
      case 't':
        expect_keyword("true");
        v.kind = JsonValue::Kind::Boolean;
        v.boolean = true;
        return v;
      case 'f':
        expect_keyword("false");
        v.kind = JsonValue::Kind::Boolean;
        v.boolean = false;
        return v;
      case 'n':
        expect_keyword("null");
        v.kind = JsonValue::Kind::Null;
        return v;
      default:
        if (c == '-' || (c >= '0' && c <= '9')) {
          parse_number(v);
          return v;
        }
        fail("unexpected character");
    }
  }

  void parse_object(JsonValue& v) {
    v.kind = JsonValue::Kind::Object;
    expect('{');
    skip_ws();
    if (!eof() && peek() == '}') {
      advance();
      return;
    }
    for (;;) {
      skip_ws();
      if (eof() || peek() != '"') fail("expected a key string");
      std::string key = parse_string();
      for (const auto& member : v.members)
        if (member.first == key) fail("duplicate key \"" + key + "\"");
      skip_ws();
      expect(':');
      v.members.emplace_back(std::move(key), parse_value());
      skip_ws();
      if (eof()) fail("unterminated object");
      if (peek() == ',') {
        advance();
        continue;
      }
      expect('}');
      return;
    }
  }

  void parse_array(JsonValue& v) {
    v.kind = JsonValue::Kind::Array;
    expect('[');
    skip_ws();
    if (!eof() && peek() == ']') {
      advance();
      return;
    }
    for (;;) {
      v.items.push_back(parse_value());
      skip_ws();
      if (eof()) fail("unterminated array");
      if (peek() == ',') {
        advance();
        continue;
      }
      expect(']');
      return;
    }
  }

  std::string parse_string() {
    expect('"');
    std::string out;
    for (;;) {
      if (eof()) fail("unterminated string");
      char c = advance();
      if (c == '"') return out;
      if (c == '\\') {
        if (eof()) fail("unterminated escape");
        const char e = advance();
        switch (e) {
          case '"': out += '"'; break;
          case '\\': out += '\\'; break;
          case '/': out += '/'; break;
          case 'b': out += '\b'; break;
          case 'f': out += '\f'; break;
          case 'n': out += '\n'; break;
          case 'r': out += '\r'; break;
          case 't': out += '\t'; break;
          case 'u': {
            unsigned code = 0;
            for (int i = 0; i < 4; ++i) {
              if (eof()) fail("unterminated unicode escape");
              const char h = advance();
              code <<= 4;
              if (h >= '0' && h <= '9') code |= static_cast<unsigned>(h - '0');
              else if (h >= 'a' && h <= 'f') code |= static_cast<unsigned>(h - 'a' + 10);
              else if (h >= 'A' && h <= 'F') code |= static_cast<unsigned>(h - 'A' + 10);
              else fail("invalid unicode escape");
            }
            // Encode the BMP code point as UTF-8.
            if (code < 0x80) {
              out += static_cast<char>(code);
            } else if (code < 0x800) {
              out += static_cast<char>(0xC0 | (code >> 6));
              out += static_cast<char>(0x80 | (code & 0x3F));
            } else {
              out += static_cast<char>(0xE0 | (code >> 12));
              out += static_cast<char>(0x80 | ((code >> 6) & 0x3F));
              out += static_cast<char>(0x80 | (code & 0x3F));
            }
            break;
          }
          default:
            fail("invalid escape");
        }
      } else {
        out += c;
      }
    }
  }

  void parse_number(JsonValue& v) {
    v.kind = JsonValue::Kind::Number;
    std::string digits;
    if (peek() == '-') digits += advance();
    if (eof() || !(peek() >= '0' && peek() <= '9')) fail("invalid number");
    while (!eof() && peek() >= '0' && peek() <= '9') digits += advance();
    if (!eof() && (peek() == '.' || peek() == 'e' || peek() == 'E'))
      fail("this format uses integers only");
    v.number = Int(digits, 10);
  }
};

[[noreturn]] void fail_at(const JsonValue& v, const std::string& message) {
  throw ParseError(message, v.line, v.column);
}

const JsonValue& require_member(const JsonValue& obj, std::string_view key) {
  const JsonValue* found = obj.find(key);
  if (!found) fail_at(obj, "missing key \"" + std::string(key) + "\"");
  return *found;
}

Index read_count(const JsonValue& v, const char* what) {
  if (!v.is_number() || v.number < 0)
    fail_at(v, std::string(what) + " must be a non-negative integer");
  if (v.number > 10000) fail_at(v, std::string(what) + " is implausibly large");
  return static_cast<Index>(v.number.get_si());
}

// Row-major array-of-arrays; every row must have the same length. An empty
// array stands for a matrix with no columns (expected_cols = -1) or no rows.
IntMatrix read_matrix(const JsonValue& v, Index expected_rows, Index expected_cols,
                      const char* what) {
  if (!v.is_array()) fail_at(v, std::string(what) + " must be an array of rows");
  const Index rows = static_cast<Index>(v.items.size());
  if (rows == 0) {
    // [] is the matrix without entries of whatever degenerate shape fits.
    if (expected_cols < 0 || expected_cols == 0) return IntMatrix(expected_rows, 0);
    if (expected_rows != 0)
      fail_at(v, std::string(what) + " must have " + std::to_string(expected_rows) + " rows");
    return IntMatrix(0, expected_cols);
  }
  if (rows != expected_rows)
    fail_at(v, std::string(what) + " must have " + std::to_string(expected_rows) + " rows");
  Index cols = -1;
  for (const JsonValue& row : v.items) {
    if (!row.is_array()) fail_at(row, "matrix row must be an array");
    if (cols < 0)
      cols = static_cast<Index>(row.items.size());
    else if (static_cast<Index>(row.items.size()) != cols)
      fail_at(row, "matrix rows have inconsistent lengths");
  }
  if (expected_cols >= 0 && cols != expected_cols)
    fail_at(v, std::string(what) + " must have " + std::to_string(expected_cols) + " columns");
  IntMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) {
      const JsonValue& e = v.items[static_cast<std::size_t>(i)].items[static_cast<std::size_t>(j)];
      if (!e.is_number()) fail_at(e, "matrix entry must be an integer");
      m(i, j) = e.number;
    }
  return m;
}

FgAbGroup read_group(const JsonValue& v, const char* what) {
  if (!v.is_object()) fail_at(v, std::string(what) + " must be an object");
  for (const auto& [key, value] : v.members) {
    (void)value;
    if (key != "gens" && key != "rels")
      fail_at(v, std::string(what) + ": unknown key \"" + key + "\"");
  }
  const Index gens = read_count(require_member(v, "gens"), "gens");
  IntMatrix rels(gens, 0);
  if (const JsonValue* r = v.find("rels")) rels = read_matrix(*r, gens, -1, "rels");
  try {
    return FgAbGroup(gens, rels);
  } catch (const std::invalid_argument& e) {
    fail_at(v, std::string(what) + ": " + e.what());
  }
}

HypothesisFlags read_flags(const JsonValue& v) {
  if (!v.is_object()) fail_at(v, "flags must be an object");
  HypothesisFlags flags;
  for (const auto& [key, value] : v.members) {
    if (!value.is_boolean()) fail_at(value, "flag values must be booleans");
    if (key == "pic_g_zero") flags.pic_g_zero = value.boolean;
    else if (key == "h_kerchar_connected") flags.h_kerchar_connected = value.boolean;
    else if (key == "h_connected") flags.h_connected = value.boolean;
    else if (key == "h_smooth") flags.h_smooth = value.boolean;
    else fail_at(value, "unknown flag \"" + key + "\"");
  }
  return flags;
}

CocharComplex read_cochar(const JsonValue& v) {
  if (!v.is_object()) fail_at(v, "cochar must be an object");
  for (const auto& [key, value] : v.members) {
    (void)value;
    if (key != "a" && key != "b" && key != "c" && key != "f" && key != "g")
      fail_at(v, "cochar: unknown key \"" + key + "\"");
  }
  const Index a = read_count(require_member(v, "a"), "cochar.a");
  const Index b = read_count(require_member(v, "b"), "cochar.b");
  const Index c = read_count(require_member(v, "c"), "cochar.c");
  const IntMatrix f = read_matrix(require_member(v, "f"), b, a, "cochar.f");
  const IntMatrix g = read_matrix(require_member(v, "g"), c, b, "cochar.g");
  const FgAbGroup la = FgAbGroup::free_lattice(a);
  const FgAbGroup lb = FgAbGroup::free_lattice(b);
  const FgAbGroup lc = FgAbGroup::free_lattice(c);
  try {
    return CocharComplex(la, lb, lc, AbMap(la, lb, f), AbMap(lb, lc, g));
  } catch (const std::invalid_argument& e) {
    fail_at(v, std::string("cochar: ") + e.what());
  }
}

void append_matrix(std::string& out, const IntMatrix& m, const std::string& indent) {
  if (m.rows() == 0 || m.cols() == 0) {
    out += "[]";
    return;
  }
  out += "[\n";
  for (Index i = 0; i < m.rows(); ++i) {
    out += indent + "  [";
    for (Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ", ";
      out += to_decimal(m(i, j));
    }
    out += i + 1 < m.rows() ? "],\n" : "]\n";
  }
  out += indent + "]";
}

}  // namespace

JsonValue parse_json(std::string_view text) { return Parser(text).parse(); }

HomSpaceInput read_input(const JsonValue& root) {
  if (!root.is_object()) fail_at(root, "input must be a JSON object");
  for (const auto& [key, value] : root.members) {
    (void)value;
    if (key != "g_hat" && key != "h_hat" && key != "i_star" && key != "flags" &&
        key != "cochar" && key != "char_p")
      fail_at(root, "unknown top-level key \"" + key + "\"");
  }
  const FgAbGroup g_hat = read_group(require_member(root, "g_hat"), "g_hat");
  const FgAbGroup h_hat = read_group(require_member(root, "h_hat"), "h_hat");
  const JsonValue& i_star_node = require_member(root, "i_star");
  const IntMatrix i_star = read_matrix(i_star_node, h_hat.gens(), g_hat.gens(), "i_star");
  const HypothesisFlags flags = read_flags(require_member(root, "flags"));

  std::optional<CocharComplex> cochar;
  if (const JsonValue* c = root.find("cochar")) cochar = read_cochar(*c);
  std::optional<Int> char_p;
  if (const JsonValue* p = root.find("char_p")) {
    if (!p->is_number() || p->number < 0)
      fail_at(*p, "char_p must be a non-negative integer");
    char_p = p->number;
  }

  try {
    return HomSpaceInput(g_hat, h_hat, AbMap(g_hat, h_hat, i_star), flags,
                         std::move(cochar), std::move(char_p));
  } catch (const std::invalid_argument& e) {
    fail_at(root, e.what());
  }
}

HomSpaceInput read_input_text(std::string_view text) { return read_input(parse_json(text)); }

HomSpaceInput read_input_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open input file " + path, 0, 0);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return read_input_text(buffer.str());
}

std::string write_input(const HomSpaceInput& input) {
  std::string out = "{\n";
  out += "  \"g_hat\": {\"gens\": " + std::to_string(input.g_hat().gens()) + ", \"rels\": ";
  append_matrix(out, input.g_hat().rels(), "  ");
  out += "},\n";
  out += "  \"h_hat\": {\"gens\": " + std::to_string(input.h_hat().gens()) + ", \"rels\": ";
  append_matrix(out, input.h_hat().rels(), "  ");
  out += "},\n";
  out += "  \"i_star\": ";
  append_matrix(out, input.i_star().matrix(), "  ");
  out += ",\n";
  const HypothesisFlags& f = input.flags();
  out += "  \"flags\": {";
  out += std::string("\"pic_g_zero\": ") + (f.pic_g_zero ? "true" : "false");
  out += std::string(", \"h_kerchar_connected\": ") + (f.h_kerchar_connected ? "true" : "false");
  out += std::string(", \"h_connected\": ") + (f.h_connected ? "true" : "false");
  out += std::string(", \"h_smooth\": ") + (f.h_smooth ? "true" : "false");
  out += "}";
  if (input.cochar()) {
    const CocharComplex& c = *input.cochar();
    out += ",\n  \"cochar\": {\n";
    out += "    \"a\": " + std::to_string(c.term_minus2().gens()) + ",\n";
    out += "    \"b\": " + std::to_string(c.term_minus1().gens()) + ",\n";
    out += "    \"c\": " + std::to_string(c.term_zero().gens()) + ",\n";
    out += "    \"f\": ";
    append_matrix(out, c.map_f(), "    ");
    out += ",\n    \"g\": ";
    append_matrix(out, c.map_g(), "    ");
    out += "\n  }";
  }
  if (input.char_p()) out += ",\n  \"char_p\": " + to_decimal(*input.char_p());
  out += "\n}\n";
  return out;
}

void write_input_file(const HomSpaceInput& input, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open output file " + path, 0, 0);
  out << write_input(input);
}

}  // namespace pi1lat::io
