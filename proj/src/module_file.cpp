#include "rbmod/module_file.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "rbmod/errors.hpp"

namespace rbmod {

namespace {

using nlohmann::json;

Rational rational_field(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw ModuleFileError(where + ": expected a rational string such as \"-3/4\"");
  const std::string s = j.get<std::string>();
  auto r = Rational::try_parse(s);
  if (!r) throw ModuleFileError(where + ": \"" + s + "\" is not a rational (expected [+-]digits[/digits])");
  return *r;
}

QMatrix matrix_field(const json& j, const std::string& name, std::size_t n) {
  if (!j.is_array() || j.size() != n)
    throw ModuleFileError("field " + name + ": expected " + std::to_string(n) + " rows");
  QMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const json& row = j[r];
    const std::string where = "field " + name + ", row " + std::to_string(r + 1);
    if (!row.is_array() || row.size() != n)
      throw ModuleFileError(where + ": expected " + std::to_string(n) + " entries");
    for (std::size_t c = 0; c < n; ++c)
      m(r, c) = rational_field(row[c], where + ", column " + std::to_string(c + 1));
  }
  return m;
}

std::string quoted(const Rational& r) { return "\"" + r.to_string() + "\""; }

void write_matrix(std::ostringstream& os, const QMatrix& m) {
  os << "[\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << "    [";
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << quoted(m(r, c));
    os << "]" << (r + 1 < m.rows() ? "," : "") << "\n";
  }
  os << "  ]";
}

std::size_t line_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

}  // namespace

ModuleFile parse_module_file(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ModuleFileError("line " + std::to_string(line_of(text, e.byte == 0 ? 0 : e.byte - 1)) +
                          ": malformed JSON (" + e.what() + ")");
  }
  if (!j.is_object()) throw ModuleFileError("line 1: top level must be a JSON object");
  for (const auto& [key, _] : j.items())
    if (key != "n" && key != "a" && key != "A" && key != "B" && key != "last_column")
      throw ModuleFileError("field " + key + ": unknown field");

  ModuleFile f;
  if (!j.contains("n")) throw ModuleFileError("field n: missing");
  if (!j["n"].is_number_unsigned() || j["n"].get<std::size_t>() == 0)
    throw ModuleFileError("field n: expected a positive integer");
  f.n = j["n"].get<std::size_t>();

  const bool has_a = j.contains("a");
  const bool has_A = j.contains("A");
  if (has_a == has_A) throw ModuleFileError("fields a/A: exactly one of \"a\" (single-block) and \"A\" must be present");
  if (has_a) f.a = rational_field(j["a"], "field a");
  if (has_A) f.A = matrix_field(j["A"], "A", f.n);
  if (j.contains("B")) f.B = matrix_field(j["B"], "B", f.n);
  if (j.contains("last_column")) {
    const json& col = j["last_column"];
    if (!col.is_array() || col.size() + 1 != f.n)
      throw ModuleFileError("field last_column: expected " + std::to_string(f.n - 1) + " entries");
    Vector v;
    for (std::size_t k = 0; k < col.size(); ++k)
      v.push_back(rational_field(col[k], "field last_column, entry " + std::to_string(k + 1)));
    f.last_column = std::move(v);
  }
  if (has_A && !f.B) throw ModuleFileError("field B: missing");
  if (has_A && f.last_column) throw ModuleFileError("field last_column: only allowed with \"a\"");
  if (has_a && !f.B && !f.last_column) throw ModuleFileError("fields B/last_column: a single-block file needs one of them");
  return f;
}

ModuleFile read_module_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ModuleFileError(path + ": cannot open");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_module_file(buf.str());
  } catch (const ModuleFileError& e) {
    throw ModuleFileError(path + ": " + e.what());
  }
}

std::string write_module_file(const ModuleFile& f) {
  std::ostringstream os;
  os << "{\n  \"n\": " << f.n;
  if (f.a) os << ",\n  \"a\": " << quoted(*f.a);
  if (f.A) {
    os << ",\n  \"A\": ";
    write_matrix(os, *f.A);
  }
  if (f.B) {
    os << ",\n  \"B\": ";
    write_matrix(os, *f.B);
  }
  if (f.last_column) {
    os << ",\n  \"last_column\": [";
    for (std::size_t k = 0; k < f.last_column->size(); ++k) os << (k ? ", " : "") << quoted((*f.last_column)[k]);
    os << "]";
  }
  os << "\n}\n";
  return os.str();
}

ModuleFile to_module_file(const RBModule& m) {
  ModuleFile f;
  f.n = m.dim();
  f.A = m.x_action();
  f.B = m.operator_matrix();
  return f;
}

ModuleFile to_module_file(const SingleBlockModule& m) {
  ModuleFile f;
  f.n = m.dim();
  f.a = m.eigenvalue();
  f.B = m.operator_matrix();
  f.last_column = m.last_column();
  return f;
}

std::optional<Rational> jordan_eigenvalue(const QMatrix& a) {
  if (!a.is_square() || a.rows() == 0) return std::nullopt;
  if (!(a == jordan_block(a.rows(), a(0, 0)))) return std::nullopt;
  return a(0, 0);
}

RBModule load_module(const ModuleFile& f) {
  if (f.A) return verify(*f.A, *f.B);
  if (auto sb = load_single_block(f)) return sb->to_module();
  throw ModuleFileError("file describes no module");
}

std::optional<SingleBlockModule> load_single_block(const ModuleFile& f) {
  if (f.A) {
    auto a = jordan_eigenvalue(*f.A);
    if (!a) return std::nullopt;
    return SingleBlockModule::from_matrix(*a, *f.B);
  }
  if (f.B) {
    SingleBlockModule m = SingleBlockModule::from_matrix(*f.a, *f.B);
    if (f.last_column && m.last_column() != *f.last_column)
      throw ModuleFileError("field last_column: disagrees with the last column of B");
    return m;
  }
  return construct_from_last_column(f.n, *f.a, *f.last_column);
}

}  // namespace rbmod
