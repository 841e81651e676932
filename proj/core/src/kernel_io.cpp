#include "maxplus/kernel_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "maxplus/error.hpp"

namespace maxplus::martin {

namespace {

using json = nlohmann::ordered_json;

Value value_from_json(const json& j) {
  if (j.is_number()) return Value{j.get<double>()};
  if (j.is_string()) return parse_value(j.get<std::string>());
  throw Error(Errc::ParseError, "expected a number or a value string, got " + j.dump());
}

json value_to_json(Value v) {
  if (!v.is_finite()) return format_value(v);
  const double x = v.finite();
  if (x == std::trunc(x) && std::abs(x) < 9007199254740992.0) return static_cast<long long>(x);
  return x;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::InvalidArgument, "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string("malformed JSON: ") + e.what());
  }
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> cells;
  std::string cell;
  for (char c : line) {
    if (c == ',') {
      cells.push_back(cell);
      cell.clear();
    } else if (c != '\r') {
      cell.push_back(c);
    }
  }
  cells.push_back(cell);
  for (auto& c : cells) {
    const auto b = c.find_first_not_of(" \t\"");
    const auto e = c.find_last_not_of(" \t\"");
    c = b == std::string::npos ? std::string{} : c.substr(b, e - b + 1);
  }
  return cells;
}

}  // namespace

KernelMatrix parse_kernel_json(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("states") || !doc.contains("matrix")) {
    throw Error(Errc::ParseError, "kernel document needs \"states\" and \"matrix\"");
  }
  std::vector<std::string> states;
  for (const auto& s : doc.at("states")) {
    if (!s.is_string()) throw Error(Errc::ParseError, "state labels must be strings");
    states.push_back(s.get<std::string>());
  }
  const json& rows = doc.at("matrix");
  if (!rows.is_array() || rows.size() != states.size()) {
    throw Error(Errc::ParseError, "\"matrix\" must have one row per state");
  }
  Matrix m(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (!rows[i].is_array() || rows[i].size() != states.size()) {
      throw Error(Errc::ParseError, "matrix row " + std::to_string(i) + " has the wrong length");
    }
    for (std::size_t j = 0; j < states.size(); ++j) m(i, j) = value_from_json(rows[i][j]);
  }
  KernelMatrix k(std::move(states), std::move(m));
  if (doc.contains("basepoint")) {
    const json& b = doc.at("basepoint");
    if (!b.is_string()) throw Error(Errc::ParseError, "\"basepoint\" must be a state label");
    return k.with_basepoint(k.index_of(b.get<std::string>()));
  }
  return k;
}

KernelMatrix parse_kernel_csv(std::string_view text, std::optional<std::string> basepoint) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    rows.push_back(split_csv_line(line));
  }
  if (rows.empty()) throw Error(Errc::ParseError, "empty CSV kernel");
  std::vector<std::string> states(rows[0].begin() + 1, rows[0].end());
  if (rows.size() != states.size() + 1) throw Error(Errc::ParseError, "CSV kernel must have one row per state");
  Matrix m(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    const auto& r = rows[i + 1];
    if (r.size() != states.size() + 1) {
      throw Error(Errc::ParseError, "CSV row " + std::to_string(i + 1) + " has the wrong number of cells");
    }
    if (r[0] != states[i]) {
      throw Error(Errc::ParseError, "CSV row label '" + r[0] + "' does not match header '" + states[i] + "'");
    }
    for (std::size_t j = 0; j < states.size(); ++j) m(i, j) = parse_value(r[j + 1]);
  }
  KernelMatrix k(std::move(states), std::move(m));
  if (basepoint) return k.with_basepoint(k.index_of(*basepoint));
  return k;
}

KernelMatrix read_kernel(const std::filesystem::path& path, std::optional<std::string> basepoint) {
  const std::string text = read_file(path);
  if (path.extension() == ".csv") return parse_kernel_csv(text, std::move(basepoint));
  KernelMatrix k = parse_kernel_json(text);
  if (basepoint) return k.with_basepoint(k.index_of(*basepoint));
  return k;
}

std::string kernel_to_json(const KernelMatrix& k) {
  json doc;
  doc["states"] = k.states();
  json rows = json::array();
  for (std::size_t i = 0; i < k.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < k.size(); ++j) row.push_back(value_to_json(k(i, j)));
    rows.push_back(std::move(row));
  }
  doc["matrix"] = std::move(rows);
  doc["basepoint"] = k.states()[k.basepoint()];
  return doc.dump(2) + "\n";
}

std::string kernel_to_csv(const KernelMatrix& k) {
  std::ostringstream os;
  for (const auto& s : k.states()) os << ',' << s;
  os << '\n';
  for (std::size_t i = 0; i < k.size(); ++i) {
    os << k.states()[i];
    for (std::size_t j = 0; j < k.size(); ++j) os << ',' << format_value(k(i, j));
    os << '\n';
  }
  return os.str();
}

MaxPlusFunction parse_function_json(std::string_view text, const KernelMatrix& k) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw Error(Errc::ParseError, "function document must be an object label -> value");
  MaxPlusFunction f(k.size(), kNegInf);
  std::vector<bool> seen(k.size(), false);
  for (const auto& [label, v] : doc.items()) {
    const std::size_t i = k.index_of(label);
    f[i] = value_from_json(v);
    seen[i] = true;
  }
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (!seen[i]) throw Error(Errc::ParseError, "function has no value for state '" + k.states()[i] + "'");
  }
  return f;
}

MaxPlusFunction read_function(const std::filesystem::path& path, const KernelMatrix& k) {
  return parse_function_json(read_file(path), k);
}

std::string function_to_json(const MaxPlusFunction& f, const KernelMatrix& k) {
  if (f.size() != k.size()) throw Error(Errc::DimensionMismatch, "function and kernel sizes differ");
  json doc = json::object();
  for (std::size_t i = 0; i < k.size(); ++i) doc[k.states()[i]] = value_to_json(f[i]);
  return doc.dump(2) + "\n";
}

}  // namespace maxplus::martin
