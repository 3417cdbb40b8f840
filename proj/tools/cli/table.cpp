#include "table.hpp"

#include <charconv>
#include <ostream>

namespace padicqw {
namespace {

std::string csv_cell(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::string>) {
          if (v.find_first_of(",\"\n") == std::string::npos) return v;
          std::string quoted = "\"";
          for (char c : v) {
            if (c == '"') quoted += '"';
            quoted += c;
          }
          return quoted + "\"";
        } else if constexpr (std::is_same_v<T, double>) {
          return format_double(v);
        } else if constexpr (std::is_same_v<T, std::nullptr_t>) {
          return "";
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else {
          return std::to_string(v);
        }
      },
      cell);
}

nlohmann::ordered_json json_cell(const Cell& cell) {
  return std::visit([](const auto& v) { return nlohmann::ordered_json(v); }, cell);
}

std::string flat_value(const nlohmann::ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) return format_double(v.get<double>());
  return v.dump();
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

nlohmann::ordered_json params_json(const RunConfig& cfg, const std::string& command) {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["p"] = cfg.p;
  j["alpha"] = cfg.alpha;
  j["mass"] = cfg.mass;
  j["r0"] = cfg.r0;
  j["truncation"] = cfg.truncation;
  j["graph"] = graph_name(cfg.graph);
  j["source"] = cfg.sources;
  j["t_start"] = cfg.t_start;
  j["t_end"] = cfg.t_end;
  j["t_steps"] = cfg.t_steps;
  j["format"] = format_name(cfg.format);
  j["node_budget"] = cfg.node_budget;
  j["tol"] = cfg.tol;
  if (cfg.sphere) j["sphere"] = *cfg.sphere;
  if (cfg.ball) j["ball"] = *cfg.ball;
  j["method"] = cfg.method;
  j["n_vertices"] = cfg.n_vertices;
  j["gamma"] = cfg.gamma;
  return j;
}

void write_table(std::ostream& os, OutputFormat format, const std::string& command,
                 const RunConfig& cfg, const Table& table) {
  const auto params = params_json(cfg, command);
  if (format == OutputFormat::Json) {
    nlohmann::ordered_json doc;
    doc["schema"] = kSchemaVersion;
    doc["params"] = params;
    nlohmann::ordered_json records = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
      nlohmann::ordered_json rec;
      for (std::size_t i = 0; i < table.columns.size(); ++i) rec[table.columns[i]] = json_cell(row[i]);
      records.push_back(std::move(rec));
    }
    doc["records"] = std::move(records);
    for (const auto& [key, value] : table.extra.items()) doc[key] = value;
    os << doc.dump(2) << '\n';
    return;
  }

  os << "# schema=" << kSchemaVersion << '\n';
  for (const auto& [key, value] : params.items()) {
    if (value.is_array()) {
      std::string joined;
      for (const auto& item : value) joined += (joined.empty() ? "" : ";") + flat_value(item);
      os << "# " << key << '=' << joined << '\n';
    } else {
      os << "# " << key << '=' << flat_value(value) << '\n';
    }
  }
  for (const auto& [key, value] : table.extra.items()) {
    os << "# " << key << '=' << (value.is_structured() ? value.dump() : flat_value(value)) << '\n';
  }
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    os << (i ? "," : "") << table.columns[i];
  }
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
    os << '\n';
  }
}

}  // namespace padicqw
