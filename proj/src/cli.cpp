#include "rbmod/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "rbmod/errors.hpp"
#include "rbmod/module_file.hpp"
#include "rbmod/ncpoly.hpp"
#include "rbmod/single_block.hpp"
#include "rbmod/spectral.hpp"

namespace rbmod {

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

/// Thrown inside a command to end it with a message and exit code.
struct Exit {
  int code;
  std::string message;
};

json to_json(const Rational& r) { return r.to_string(); }

json to_json(const QMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

std::string join(const Vector& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + v[k].to_string();
  return s;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? sep : "") + v[k];
  return s;
}

void print_matrix(std::ostream& out, const QMatrix& m) {
  std::vector<std::vector<std::string>> cells(m.rows());
  std::size_t width = 1;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      cells[r].push_back(m(r, c).to_string());
      width = std::max(width, cells[r].back().size());
    }
  for (const auto& row : cells) {
    out << " ";
    for (const auto& cell : row) out << " " << std::string(width - cell.size(), ' ') << cell;
    out << "\n";
  }
}

std::string invalid_message(const ValidationError& e) {
  return "invalid at entry (" + std::to_string(e.row()) + "," + std::to_string(e.col()) + ")";
}

ModuleFile read_file(const std::string& path) {
  try {
    return read_module_file(path);
  } catch (const ModuleFileError& e) {
    throw Exit{kUsage, e.what()};
  }
}

/// Loads a module; an invalid one is a usage error for commands that need
/// a module to work on.
RBModule require_module(const ModuleFile& f, const std::string& path) {
  try {
    return load_module(f);
  } catch (const ValidationError& e) {
    throw Exit{kUsage, path + ": not a module, " + invalid_message(e)};
  } catch (const DegenerateColumnError& e) {
    throw Exit{kUsage, path + ": " + e.what()};
  }
}

Vector parse_list(const std::string& text) {
  Vector v;
  if (text.empty()) return v;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    auto r = Rational::try_parse(item);
    if (!r) throw Exit{kUsage, "--last: \"" + item + "\" is not a rational"};
    v.push_back(*r);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return v;
}

struct Context {
  std::ostream& out;
  bool json_format;
};

int cmd_verify(Context& ctx, const std::string& path) {
  const ModuleFile f = read_file(path);
  std::optional<RBModule> m;
  std::optional<SingleBlockModule> sb;
  try {
    sb = load_single_block(f);
    m = sb ? sb->to_module() : load_module(f);
  } catch (const ValidationError& e) {
    if (ctx.json_format)
      ctx.out << json{{"valid", false}, {"row", e.row()}, {"col", e.col()}}.dump() << "\n";
    else
      ctx.out << invalid_message(e) << "\n" << e.what() << "\n";
    return kNegative;
  } catch (const DegenerateColumnError& e) {
    if (ctx.json_format)
      ctx.out << json{{"valid", false}, {"degenerate", e.what()}}.dump() << "\n";
    else
      ctx.out << "invalid: " << e.what() << "\n";
    return kNegative;
  }
  const std::size_t index = nilpotency_index(*m);
  if (ctx.json_format) {
    json j{{"valid", true}, {"nilpotency_index", index}, {"single_block", sb.has_value()}};
    if (sb) {
      j["strictly_upper"] = sb->operator_matrix().is_strictly_upper();
      j["depth"] = depth(sb->psi());
    }
    ctx.out << j.dump() << "\n";
  } else {
    ctx.out << "valid, nilpotency index " << index << "\n";
    if (sb) {
      ctx.out << "strictly upper triangular: " << (sb->operator_matrix().is_strictly_upper() ? "yes" : "no") << "\n";
      ctx.out << "depth: " << depth(sb->psi()) << "\n";
    }
  }
  return kOk;
}

int cmd_construct(Context& ctx, std::size_t n, const std::string& a_text, const std::string& last_text) {
  auto a = Rational::try_parse(a_text);
  if (!a) throw Exit{kUsage, "--a: \"" + a_text + "\" is not a rational"};
  if (n == 0) throw Exit{kUsage, "--n: must be at least 1"};
  const Vector last = parse_list(last_text);
  if (last.size() + 1 != n)
    throw Exit{kUsage, "--last: expected " + std::to_string(n - 1) + " entries, got " + std::to_string(last.size())};
  try {
    ctx.out << write_module_file(to_module_file(construct_from_last_column(n, *a, last)));
  } catch (const DegenerateColumnError& e) {
    throw Exit{kNegative, e.what()};
  }
  return kOk;
}

int cmd_canonical(Context& ctx, const std::string& path, const std::string& out_path) {
  const ModuleFile f = read_file(path);
  std::optional<SingleBlockModule> sb;
  try {
    sb = load_single_block(f);
  } catch (const ValidationError& e) {
    throw Exit{kUsage, path + ": not a module, " + invalid_message(e)};
  } catch (const DegenerateColumnError& e) {
    throw Exit{kUsage, path + ": " + e.what()};
  }
  if (!sb)
    throw Exit{kUsage, path + ": A is not a single Jordan block; run decompose first and canonicalize each component"};

  const Canonicalization c = canonicalize(*sb);
  const std::string file_text = write_module_file(to_module_file(c.canonical));
  if (!out_path.empty()) {
    std::ofstream o(out_path, std::ios::binary);
    if (!o) throw Exit{kUsage, out_path + ": cannot write"};
    o << file_text;
  }
  if (ctx.json_format) {
    json j{{"tag", to_string(c.form.tag)},
           {"depth", c.form.depth},
           {"kept", to_json(c.form.kept)},
           {"witness", to_json(c.witness.coefficients())}};
    if (out_path.empty()) j["module"] = json::parse(file_text);
    ctx.out << j.dump() << "\n";
  } else {
    ctx.out << "tag: " << to_string(c.form.tag) << "\n";
    ctx.out << "depth: " << c.form.depth << "\n";
    ctx.out << "kept: (" << join(c.form.kept) << ")\n";
    ctx.out << "witness: (" << join(c.witness.coefficients()) << ")\n";
    if (out_path.empty()) ctx.out << file_text;
  }
  return kOk;
}

int cmd_isomorphic(Context& ctx, const std::string& path1, const std::string& path2) {
  const ModuleFile f1 = read_file(path1);
  const ModuleFile f2 = read_file(path2);
  const RBModule m1 = require_module(f1, path1);
  const RBModule m2 = require_module(f2, path2);

  std::optional<QMatrix> witness;
  if (m1.dim() == m2.dim()) {
    auto s1 = load_single_block(f1);
    auto s2 = load_single_block(f2);
    if (s1 && s2) {
      if (single_block_isomorphic(*s1, *s2)) witness = single_block_isomorphism(*s1, *s2)->matrix();
    } else {
      witness = find_isomorphism(m1, m2);
    }
  }
  if (ctx.json_format) {
    json j{{"isomorphic", witness.has_value()}};
    if (witness) j["witness"] = to_json(*witness);
    ctx.out << j.dump() << "\n";
  } else if (witness) {
    ctx.out << "yes\nwitness (M1 -> M2):\n";
    print_matrix(ctx.out, *witness);
  } else {
    ctx.out << "no\n";
  }
  return witness ? kOk : kNegative;
}

int cmd_decompose(Context& ctx, const std::string& path, const std::string& out_dir) {
  const ModuleFile f = read_file(path);
  const RBModule m = require_module(f, path);
  const Decomposition d = primary_decompose(m);

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw Exit{kUsage, out_dir + ": " + ec.message()};

  json manifest = json::array();
  for (std::size_t k = 0; k < d.components.size(); ++k) {
    const Component& c = d.components[k];
    const std::string name = "component_" + std::to_string(k + 1) + ".json";
    std::ofstream o(std::filesystem::path(out_dir) / name, std::ios::binary);
    if (!o) throw Exit{kUsage, out_dir + "/" + name + ": cannot write"};
    o << write_module_file(to_module_file(c.submodule));
    manifest.push_back({{"file", name},
                        {"factor", c.factor.to_string()},
                        {"multiplicity", c.multiplicity},
                        {"dimension", c.submodule.dim()},
                        {"irreducibility", c.certified_irreducible ? "certified" : "irreducibility not certified"}});
  }
  {
    std::ofstream o(std::filesystem::path(out_dir) / "manifest.json", std::ios::binary);
    if (!o) throw Exit{kUsage, out_dir + "/manifest.json: cannot write"};
    o << json{{"source", path}, {"components", manifest}}.dump(2) << "\n";
  }
  if (ctx.json_format) {
    ctx.out << manifest.dump() << "\n";
  } else {
    for (const auto& c : manifest)
      ctx.out << c["file"].get<std::string>() << ": factor " << c["factor"].get<std::string>() << ", multiplicity "
              << c["multiplicity"].get<std::size_t>() << ", dimension " << c["dimension"].get<std::size_t>() << ", "
              << c["irreducibility"].get<std::string>() << "\n";
  }
  return kOk;
}

int cmd_nf(Context& ctx, const std::string& expr) {
  NCPoly f;
  try {
    f = parse_nc_poly(expr);
  } catch (const ParseError& e) {
    std::ostringstream msg;
    msg << "parse error: " << e.what() << "\n  " << expr << "\n  " << std::string(e.column(), ' ') << "^";
    throw Exit{kUsage, msg.str()};
  }
  const NCPoly nf = normal_form(f);
  if (ctx.json_format)
    ctx.out << json{{"normal_form", nf.to_string()}}.dump() << "\n";
  else
    ctx.out << nf.to_string() << "\n";
  return kOk;
}

int cmd_enumerate(Context& ctx, std::size_t n) {
  if (n == 0) throw Exit{kUsage, "--n: must be at least 1"};
  const auto templates = enumerate_canonical(n);
  if (ctx.json_format) {
    json rows = json::array();
    for (const auto& t : templates)
      rows.push_back({{"tag", to_string(t.tag)}, {"depth", t.depth}, {"psi", t.psi}, {"constraint", t.constraint}});
    ctx.out << rows.dump() << "\n";
    return kOk;
  }
  for (const auto& t : templates) {
    ctx.out << to_string(t.tag) << " depth " << t.depth << " (" << join(t.psi, ",") << ")";
    if (!t.constraint.empty()) ctx.out << ", " << t.constraint;
    ctx.out << "\n";
  }
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rota-Baxter modules over (Q[x], P): verification, construction and classification", "rbmod"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));

  std::string path1, path2, out_path, out_dir = ".", expr, a_text = "0", last_text;
  std::size_t n = 0;

  auto* verify_cmd = app.add_subcommand("verify", "Check AB - BA = B^2 and report nilpotency");
  verify_cmd->add_option("file", path1)->required();

  auto* construct_cmd = app.add_subcommand("construct", "Rebuild a single-block module from its last column");
  construct_cmd->add_option("--n", n)->required();
  construct_cmd->add_option("--a", a_text, "Eigenvalue");
  construct_cmd->add_option("--last", last_text, "b_{1n},...,b_{n-1,n}");

  auto* canonical_cmd = app.add_subcommand("canonical", "Canonical form of a single-block module");
  canonical_cmd->add_option("file", path1)->required();
  canonical_cmd->add_option("--out", out_path, "Write the canonical module file here");

  auto* iso_cmd = app.add_subcommand("isomorphic", "Decide isomorphism of two modules");
  iso_cmd->add_option("file1", path1)->required();
  iso_cmd->add_option("file2", path2)->required();

  auto* decompose_cmd = app.add_subcommand("decompose", "Primary decomposition into component files");
  decompose_cmd->add_option("file", path1)->required();
  decompose_cmd->add_option("--out-dir", out_dir);

  auto* nf_cmd = app.add_subcommand("nf", "Normal form in the Jordan plane");
  nf_cmd->add_option("expression", expr)->required();

  auto* enumerate_cmd = app.add_subcommand("enumerate", "Canonical families in dimension n");
  enumerate_cmd->add_option("--n", n)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "rbmod: " << e.what() << "\n";
    return kUsage;
  }

  Context ctx{out, format == "json"};
  try {
    if (*verify_cmd) return cmd_verify(ctx, path1);
    if (*construct_cmd) return cmd_construct(ctx, n, a_text, last_text);
    if (*canonical_cmd) return cmd_canonical(ctx, path1, out_path);
    if (*iso_cmd) return cmd_isomorphic(ctx, path1, path2);
    if (*decompose_cmd) return cmd_decompose(ctx, path1, out_dir);
    if (*nf_cmd) return cmd_nf(ctx, expr);
    if (*enumerate_cmd) return cmd_enumerate(ctx, n);
  } catch (const Exit& e) {
    err << "rbmod: " << e.message << "\n";
    return e.code;
  } catch (const ShapeError& e) {
    err << "rbmod: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceError& e) {
    err << "rbmod: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "rbmod: internal error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace rbmod
