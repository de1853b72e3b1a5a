#pragma once

// `.fnet.json` network documents:
//
//   {"depth": L,
//    "layers": [{"g": {"freqs": [...], "a": [...], "b": [...]}, "h": {...} | null}, ...]}
//
// `a` holds sine amplitudes, `b` cosine amplitudes. Numbers are written with
// 17 significant digits, which round-trips every binary64 value exactly.

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include "fresnet/errors.hpp"
#include "fresnet/network.hpp"
#include "json.hpp"

namespace fresnet {

inline std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace detail {

inline void write_array(std::string& out, const std::vector<double>& xs) {
  out += '[';
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += format_real(xs[i]);
  }
  out += ']';
}

inline void write_branch(std::string& out, const Branch& b) {
  out += "{\"freqs\": ";
  write_array(out, b.freqs);
  out += ", \"a\": ";
  write_array(out, b.sin_amps);
  out += ", \"b\": ";
  write_array(out, b.cos_amps);
  out += '}';
}

inline std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

inline std::vector<double> read_numbers(const nlohmann::json& j, const char* key, const std::string& where) {
  if (!j.contains(key) || !j.at(key).is_array())
    throw ValidationError(where + ": missing array '" + key + "'");
  std::vector<double> out;
  for (const auto& v : j.at(key)) {
    if (!v.is_number()) throw ValidationError(where + ": non-numeric entry in '" + key + "'");
    out.push_back(v.get<double>());
  }
  return out;
}

inline Branch read_branch(const nlohmann::json& j, const std::string& where) {
  if (!j.is_object()) throw ValidationError(where + ": branch must be an object");
  Branch b{read_numbers(j, "freqs", where), read_numbers(j, "a", where), read_numbers(j, "b", where)};
  if (b.sin_amps.size() != b.freqs.size() || b.cos_amps.size() != b.freqs.size())
    throw ValidationError(where + ": freqs/a/b lengths differ (" + std::to_string(b.freqs.size()) + "/" +
                          std::to_string(b.sin_amps.size()) + "/" + std::to_string(b.cos_amps.size()) + ")");
  return b;
}

}  // namespace detail

inline std::string serialize(const FourierResNet& net) {
  std::string out = "{\n  \"depth\": " + std::to_string(net.depth()) + ",\n  \"layers\": [\n";
  for (std::size_t i = 0; i < net.depth(); ++i) {
    const Layer& layer = net.layer(i);
    out += "    {\"g\": ";
    detail::write_branch(out, layer.g);
    out += ", \"h\": ";
    if (layer.h)
      detail::write_branch(out, *layer.h);
    else
      out += "null";
    out += i + 1 < net.depth() ? "},\n" : "}\n";
  }
  out += "  ]\n}\n";
  return out;
}

inline FourierResNet deserialize(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // byte is 1-based and points just past the offending character
    const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    auto [line, column] = detail::line_column(text, offset);
    throw ParseError("malformed network document at line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + e.what(),
                     line, column);
  }
  if (!doc.is_object()) throw ValidationError("network document must be a JSON object");
  if (!doc.contains("depth") || !doc.at("depth").is_number_integer())
    throw ValidationError("network document lacks integer 'depth'");
  if (!doc.contains("layers") || !doc.at("layers").is_array())
    throw ValidationError("network document lacks 'layers' array");
  const auto& jl = doc.at("layers");
  if (doc.at("depth").get<long long>() != static_cast<long long>(jl.size()))
    throw ValidationError("'depth' disagrees with number of layers");

  std::vector<Layer> layers;
  for (std::size_t i = 0; i < jl.size(); ++i) {
    const std::string where = "layer " + std::to_string(i + 1);
    const auto& entry = jl[i];
    if (!entry.is_object() || !entry.contains("g")) throw ValidationError(where + ": missing 'g' branch");
    Layer layer{detail::read_branch(entry.at("g"), where + " g"), std::nullopt};
    if (entry.contains("h") && !entry.at("h").is_null()) layer.h = detail::read_branch(entry.at("h"), where + " h");
    layers.push_back(std::move(layer));
  }
  return FourierResNet(std::move(layers));
}

inline void save(const FourierResNet& net, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot open '" + path + "' for writing");
  out << serialize(net);
  if (!out) throw std::ios_base::failure("write to '" + path + "' failed");
}

inline FourierResNet load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return deserialize(ss.str());
}

}  // namespace fresnet
