#include <cmath>
#include <fstream>
#include <ostream>
#include <string>

#include <fmt/format.h>

#include "lerchlab/errors.hpp"
#include "lerchlab/harness.hpp"

namespace lerchlab::harness {

namespace {

constexpr const char* kColumns[] = {"family", "variant", "p",   "q",       "n",       "a",      "b",
                                    "closed_form", "corollary", "oracle", "abs_err", "rel_err", "status",
                                    "wall_time_ms"};

// An empty text is written as null (JSON) or an empty field (CSV).
struct Cell {
  std::string text;
  bool quoted = false;
};

std::string num(double v) { return std::isfinite(v) ? fmt::format("{:.17g}", v) : std::string(); }

std::vector<Cell> cells(const EvalReport& r, bool registry) {
  std::vector<Cell> c;
  if (registry) {
    c.push_back({r.identity, true});
    c.push_back({r.expected ? num(*r.expected) : std::string(), false});
  }
  if (r.lemma3) {
    c.push_back({"LEMMA3", true});
    c.push_back({std::string(), true});
    c.push_back({std::to_string(r.lemma3->s), false});
    c.push_back({std::to_string(r.lemma3->q), false});
    c.push_back({std::to_string(r.lemma3->r), false});
    c.push_back({std::to_string(r.lemma3->c.value()), false});
    c.push_back({std::string(), false});
  } else {
    c.push_back({std::string(closedform::to_string(r.family.tag)), true});
    const bool plain = r.family.variant == closedform::Variant::none;
    c.push_back({plain ? std::string() : std::string(closedform::to_string(r.family.variant)), true});
    c.push_back({std::to_string(r.params.p), false});
    c.push_back({std::to_string(r.params.q), false});
    c.push_back({std::to_string(r.params.n), false});
    c.push_back({std::to_string(r.params.a.value()), false});
    c.push_back({std::to_string(r.params.b.value()), false});
  }
  c.push_back({num(r.closed_form.value), false});
  c.push_back({r.corollary ? num(r.corollary->value) : std::string(), false});
  c.push_back({num(r.oracle.value), false});
  c.push_back({num(r.abs_err), false});
  c.push_back({num(r.rel_err), false});
  c.push_back({std::string(to_string(r.status)), true});
  c.push_back({std::to_string(r.wall_time_ms), false});
  return c;
}

std::vector<std::string> header(bool registry) {
  std::vector<std::string> h;
  if (registry) h = {"identity", "expected"};
  for (const char* col : kColumns) h.emplace_back(col);
  return h;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

Format parse_format(std::string_view text) {
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  throw UsageError("unknown format '" + std::string(text) + "' (expected json or csv)");
}

void emit_report(const std::vector<EvalReport>& reports, Format format, std::ostream& out) {
  if (reports.empty()) throw UsageError("no reports to emit");
  bool registry = false;
  for (const auto& r : reports) registry = registry || !r.identity.empty();
  const auto cols = header(registry);

  if (format == Format::csv) {
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
    out << "\r\n";
    for (const auto& r : reports) {
      const auto row = cells(r, registry);
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i].text);
      out << "\r\n";
    }
  } else {
    // Cell texts are enum names and numbers, so no escaping is needed.
    out << "[";
    for (std::size_t k = 0; k < reports.size(); ++k) {
      const auto row = cells(reports[k], registry);
      out << (k ? ",\n  {" : "\n  {");
      for (std::size_t i = 0; i < row.size(); ++i) {
        out << (i ? ", " : "") << '"' << cols[i] << "\": ";
        if (row[i].text.empty()) {
          out << "null";
        } else if (row[i].quoted) {
          out << '"' << row[i].text << '"';
        } else {
          out << row[i].text;
        }
      }
      out << "}";
    }
    out << "\n]\n";
  }
  if (!out) throw IoError("failed to write report");
}

void emit_report(const std::vector<EvalReport>& reports, Format format, const std::string& path) {
  if (reports.empty()) throw UsageError("no reports to emit");
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  emit_report(reports, format, file);
  file.close();
  if (!file) throw IoError("failed to write '" + path + "'");
}

}  // namespace lerchlab::harness
