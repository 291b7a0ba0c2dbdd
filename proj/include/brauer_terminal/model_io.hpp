#pragma once

#include "brauer_terminal/brauer.hpp"
#include "brauer_terminal/model.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bterm {

struct SymbolEntry {
  std::string first;
  std::string second;
  std::int64_t exponent = 0;  ///< reduced mod the torsion order
  bool operator==(const SymbolEntry&) const = default;
};

/// Contents of a model file.
///
///   [model]
///   torsion = 2
///   dimension = 3
///   labels = x1,x2,x3
///   [symbols]
///   x1 x3 1
///   x2 x3 1
///   [extra]
///   x3 3
///
/// '#' starts a comment. Each symbol line adds exponent * (first, second) to alpha.
struct ModelSpec {
  int torsion = 0;
  int dimension = 0;
  std::vector<std::string> labels;
  std::vector<SymbolEntry> symbols;
  std::map<std::string, int> extra_degrees;
  bool operator==(const ModelSpec&) const = default;
};

class ModelParseError : public std::runtime_error {
 public:
  ModelParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Parses and validates model text. Exponents are reduced mod r; a warning is appended for
/// every exponent that changed and every symbol that became trivial.
ModelSpec parse_model(std::string_view text, std::vector<std::string>* warnings = nullptr);

std::string format_model(const ModelSpec& spec);

/// Throws std::invalid_argument naming the violated invariant.
BrauerModel build_model(const ModelSpec& spec);

struct LoadedModel {
  ModelSpec spec;
  BrauerModel model;
  ComplexCheck complex;
  std::vector<std::string> warnings;
};

/// Reads, validates, builds, and runs the cancellation check.
LoadedModel load_model(const std::filesystem::path& path);

void save_model(const std::filesystem::path& path, const ModelSpec& spec);

}  // namespace bterm
