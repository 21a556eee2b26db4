#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rbmod/module.hpp"
#include "rbmod/qmatrix.hpp"
#include "rbmod/single_block.hpp"

namespace rbmod {

/// A malformed module file. The message names the line and/or field.
class ModuleFileError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// On-disk module description. Either the full form (n, A, B) or the
/// single-block form (n, a, and B and/or last_column).
struct ModuleFile {
  std::size_t n = 0;
  std::optional<Rational> a;
  std::optional<QMatrix> A;
  std::optional<QMatrix> B;
  std::optional<Vector> last_column;

  bool single_block_form() const { return a.has_value(); }
};

/// Structural checks only: field types, rational syntax, shapes, and the
/// A-versus-a exclusivity. Whether (A, B) is a module is left to verify().
ModuleFile parse_module_file(std::string_view text);
ModuleFile read_module_file(const std::string& path);

/// Line-oriented JSON: one field per line, one matrix row per line, every
/// rational as a string. Output for equal inputs is byte-identical.
std::string write_module_file(const ModuleFile& f);

ModuleFile to_module_file(const RBModule& m);
ModuleFile to_module_file(const SingleBlockModule& m);

/// a if A is exactly the Jordan block J_n(a).
std::optional<Rational> jordan_eigenvalue(const QMatrix& a);

/// The A and B a file describes; single-block files get A = J_n(a) and B
/// rebuilt from last_column when B is absent. Throws ValidationError,
/// DegenerateColumnError or ModuleFileError.
RBModule load_module(const ModuleFile& f);

/// The file as a single-block module, if it is one (in either form).
std::optional<SingleBlockModule> load_single_block(const ModuleFile& f);

}  // namespace rbmod
