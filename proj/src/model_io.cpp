#include "brauer_terminal/model_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace bterm {

ModelParseError::ModelParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

enum class Section { none, model, symbols, extra };

struct Token {
  std::string_view text;
  std::size_t column = 0;  // 1-based
};

bool is_name(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '\'';
  });
}

std::vector<Token> split(std::string_view line, std::string_view separators) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && separators.find(line[i]) != std::string_view::npos) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && separators.find(line[j]) == std::string_view::npos) ++j;
    out.push_back({line.substr(i, j - i), i + 1});
    i = j;
  }
  return out;
}

std::int64_t parse_int(const Token& t, std::size_t line) {
  std::int64_t v = 0;
  const char* first = t.text.data();
  const char* last = first + t.text.size();
  if (!t.text.empty() && *first == '+') ++first;
  auto [p, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || p != last || first == last)
    throw ModelParseError(line, t.column, "expected an integer, found '" + std::string(t.text) + "'");
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

ModelSpec parse_model(std::string_view text, std::vector<std::string>* warnings) {
  ModelSpec spec;
  Section section = Section::none;
  bool have_torsion = false, have_dimension = false, have_labels = false;
  struct RawSymbol {
    SymbolEntry entry;
    std::size_t line;
  };
  std::vector<RawSymbol> raw_symbols;
  std::vector<std::pair<std::string, std::pair<std::int64_t, std::size_t>>> raw_extra;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const std::string_view body = trim(line);
    if (body.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const std::size_t col0 = static_cast<std::size_t>(body.data() - line.data()) + 1;

    if (body.front() == '[') {
      if (body == "[model]") section = Section::model;
      else if (body == "[symbols]") section = Section::symbols;
      else if (body == "[extra]") section = Section::extra;
      else throw ModelParseError(line_no, col0, "unknown section '" + std::string(body) + "'");
    } else if (section == Section::none) {
      throw ModelParseError(line_no, col0, "content before the first section header");
    } else if (section == Section::model) {
      const auto eq = line.find('=');
      if (eq == std::string_view::npos) throw ModelParseError(line_no, col0, "expected 'key = value'");
      const std::string_view key = trim(line.substr(0, eq));
      const std::string_view value = trim(line.substr(eq + 1));
      const std::size_t vcol = value.empty() ? eq + 2 : static_cast<std::size_t>(value.data() - line.data()) + 1;
      if (value.empty()) throw ModelParseError(line_no, vcol, "missing value for '" + std::string(key) + "'");
      if (key == "torsion") {
        const auto v = parse_int({value, vcol}, line_no);
        if (v < 1 || v > 1'000'000) throw ModelParseError(line_no, vcol, "torsion must be a positive integer");
        spec.torsion = static_cast<int>(v);
        have_torsion = true;
      } else if (key == "dimension") {
        const auto v = parse_int({value, vcol}, line_no);
        if (v < 1 || v > 64) throw ModelParseError(line_no, vcol, "dimension must lie in [1, 64]");
        spec.dimension = static_cast<int>(v);
        have_dimension = true;
      } else if (key == "labels") {
        spec.labels.clear();
        std::size_t start = 0;
        while (true) {
          const std::size_t comma = std::min(value.find(',', start), value.size());
          const std::string_view raw = value.substr(start, comma - start);
          const std::string_view name = trim(raw);
          const std::size_t ncol =
              name.empty() ? vcol + start : static_cast<std::size_t>(name.data() - line.data()) + 1;
          if (!is_name(name)) throw ModelParseError(line_no, ncol, "invalid divisor label '" + std::string(name) + "'");
          spec.labels.emplace_back(name);
          if (comma == value.size()) break;
          start = comma + 1;
        }
        have_labels = true;
      } else {
        throw ModelParseError(line_no, col0, "unknown key '" + std::string(key) + "'");
      }
    } else if (section == Section::symbols) {
      const auto tokens = split(line, " \t");
      if (tokens.size() != 3) throw ModelParseError(line_no, col0, "expected 'NAME NAME INT'");
      for (int k = 0; k < 2; ++k)
        if (!is_name(tokens[k].text))
          throw ModelParseError(line_no, tokens[k].column, "invalid divisor label '" + std::string(tokens[k].text) + "'");
      raw_symbols.push_back({{std::string(tokens[0].text), std::string(tokens[1].text), parse_int(tokens[2], line_no)},
                             line_no});
    } else {
      const auto tokens = split(line, " \t");
      if (tokens.size() != 2) throw ModelParseError(line_no, col0, "expected 'NAME INT'");
      if (!is_name(tokens[0].text))
        throw ModelParseError(line_no, tokens[0].column, "invalid divisor label '" + std::string(tokens[0].text) + "'");
      raw_extra.push_back({std::string(tokens[0].text), {parse_int(tokens[1], line_no), line_no}});
    }
    if (end == text.size()) break;
  }

  if (!have_torsion) throw std::invalid_argument("model: missing 'torsion'");
  if (!have_dimension) throw std::invalid_argument("model: missing 'dimension'");
  if (!have_labels) throw std::invalid_argument("model: missing 'labels'");
  if (spec.labels.size() != static_cast<std::size_t>(spec.dimension))
    throw std::invalid_argument("model: " + std::to_string(spec.labels.size()) + " labels for dimension " +
                                std::to_string(spec.dimension));
  std::set<std::string> names;
  for (const auto& l : spec.labels)
    if (!names.insert(l).second) throw std::invalid_argument("model: duplicate label '" + l + "'");

  for (auto& [entry, line] : raw_symbols) {
    for (const auto* name : {&entry.first, &entry.second})
      if (!names.count(*name))
        throw std::invalid_argument("symbols, line " + std::to_string(line) + ": unknown divisor '" + *name + "'");
    const auto reduced = mod_floor(entry.exponent, spec.torsion);
    if (warnings && reduced != entry.exponent)
      warnings->push_back("line " + std::to_string(line) + ": exponent " + std::to_string(entry.exponent) +
                          " reduced mod " + std::to_string(spec.torsion) + " to " + std::to_string(reduced));
    if (warnings && entry.first == entry.second)
      warnings->push_back("line " + std::to_string(line) + ": symbol (" + entry.first + "," + entry.second +
                          ") pairs a divisor with itself and is trivial");
    else if (warnings && reduced == 0)
      warnings->push_back("line " + std::to_string(line) + ": symbol (" + entry.first + "," + entry.second +
                          ") is trivial");
    entry.exponent = reduced;
    spec.symbols.push_back(entry);
  }
  for (auto& [name, value] : raw_extra) {
    const auto [degree, line] = value;
    if (!names.count(name))
      throw std::invalid_argument("extra, line " + std::to_string(line) + ": unknown divisor '" + name + "'");
    if (degree < 1 || spec.torsion % degree != 0)
      throw std::invalid_argument("extra, line " + std::to_string(line) + ": degree " + std::to_string(degree) +
                                  " of '" + name + "' must divide the torsion " + std::to_string(spec.torsion));
    if (!spec.extra_degrees.emplace(name, static_cast<int>(degree)).second)
      throw std::invalid_argument("extra, line " + std::to_string(line) + ": '" + name + "' listed twice");
  }
  return spec;
}

std::string format_model(const ModelSpec& spec) {
  std::ostringstream os;
  os << "[model]\n";
  os << "torsion = " << spec.torsion << "\n";
  os << "dimension = " << spec.dimension << "\n";
  os << "labels = ";
  for (std::size_t i = 0; i < spec.labels.size(); ++i) os << (i ? "," : "") << spec.labels[i];
  os << "\n[symbols]\n";
  for (const auto& s : spec.symbols) os << s.first << ' ' << s.second << ' ' << s.exponent << "\n";
  os << "[extra]\n";
  for (const auto& [name, degree] : spec.extra_degrees) os << name << ' ' << degree << "\n";
  return os.str();
}

BrauerModel build_model(const ModelSpec& spec) {
  if (spec.labels.size() != static_cast<std::size_t>(spec.dimension))
    throw std::invalid_argument("model: label count differs from dimension");
  SymbolMatrix alpha(spec.torsion, spec.labels.size());
  auto index = [&](const std::string& name) {
    auto it = std::find(spec.labels.begin(), spec.labels.end(), name);
    if (it == spec.labels.end()) throw std::invalid_argument("model: unknown divisor '" + name + "'");
    return static_cast<std::size_t>(it - spec.labels.begin());
  };
  for (const auto& s : spec.symbols) alpha.add_symbol(index(s.first), index(s.second), s.exponent);
  return BrauerModel::affine(spec.torsion, spec.labels, alpha, spec.extra_degrees);
}

LoadedModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open model file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  std::vector<std::string> warnings;
  ModelSpec spec = parse_model(buf.str(), &warnings);
  BrauerModel model = build_model(spec);
  ComplexCheck complex = check_complex(model.charts().front().symbols);
  return {std::move(spec), std::move(model), std::move(complex), std::move(warnings)};
}

void save_model(const std::filesystem::path& path, const ModelSpec& spec) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write model file " + path.string());
  out << format_model(spec);
}

}  // namespace bterm
