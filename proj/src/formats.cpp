#include "qcolor/formats.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "qcolor/errors.hpp"

namespace qcolor {

using nlohmann::json;

std::string render_polynomial(const CountingPolynomial& p) {
  if (p.empty()) return "0";
  std::string out;
  const auto& terms = p.coefficients();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += std::to_string(it->second) + "q";
    if (it->first != 1) out += "^" + std::to_string(it->first);
  }
  return out;
}

LinkEntry link_entry(const InvariantReport& r) {
  return {r.link, r.arcs, r.crossings, r.total, r.polynomial};
}

namespace {

json report_to_json(const ReportDocument& r) {
  json links = json::array();
  for (const auto& l : r.links) {
    json poly = json::object();
    for (const auto& [e, c] : l.polynomial.coefficients()) poly[std::to_string(e)] = c;
    links.push_back({{"name", l.name},
                     {"arcs", l.arcs},
                     {"crossings", l.crossings},
                     {"total", l.total},
                     {"polynomial", poly}});
  }
  json verdicts = json::array();
  for (const auto& v : r.verdicts) verdicts.push_back({{"a", v.a}, {"b", v.b}, {"verdict", verdict_name(v.verdict)}});
  return {{"version", r.version}, {"quandle", r.quandle}, {"links", links}, {"verdicts", verdicts}};
}

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw ParseError("report schema: " + path + ": " + what);
}

const json& field(const json& obj, const std::string& key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(path + "." + key, "missing");
  return *it;
}

std::string string_field(const json& obj, const std::string& key, const std::string& path) {
  const auto& v = field(obj, key, path);
  if (!v.is_string()) schema_error(path + "." + key, "expected string");
  return v.get<std::string>();
}

std::uint64_t uint_field(const json& v, const std::string& path) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
    schema_error(path, "expected nonnegative integer");
  return v.get<std::uint64_t>();
}

void expect_keys(const json& obj, std::initializer_list<const char*> keys, const std::string& path) {
  if (!obj.is_object()) schema_error(path, "expected object");
  for (const auto& [k, v] : obj.items())
    if (std::find_if(keys.begin(), keys.end(), [&](const char* s) { return k == s; }) == keys.end())
      schema_error(path + "." + k, "unexpected field");
}

ReportDocument report_from_json(const json& j, const std::string& root) {
  expect_keys(j, {"version", "quandle", "links", "verdicts"}, root);
  ReportDocument r;
  r.version = string_field(j, "version", root);
  r.quandle = string_field(j, "quandle", root);

  const auto& links = field(j, "links", root);
  if (!links.is_array()) schema_error(root + ".links", "expected array");
  for (std::size_t i = 0; i < links.size(); ++i) {
    const std::string path = root + ".links[" + std::to_string(i) + "]";
    const auto& l = links[i];
    expect_keys(l, {"name", "arcs", "crossings", "total", "polynomial"}, path);
    LinkEntry e;
    e.name = string_field(l, "name", path);
    e.arcs = static_cast<int>(uint_field(field(l, "arcs", path), path + ".arcs"));
    e.crossings = static_cast<int>(uint_field(field(l, "crossings", path), path + ".crossings"));
    e.total = uint_field(field(l, "total", path), path + ".total");
    const auto& poly = field(l, "polynomial", path);
    if (!poly.is_object()) schema_error(path + ".polynomial", "expected object");
    std::map<int, std::uint64_t> terms;
    for (const auto& [k, v] : poly.items()) {
      const std::string term_path = path + ".polynomial." + k;
      const bool decimal = !k.empty() && k.size() < 10 && k[0] != '0' &&
                           std::all_of(k.begin(), k.end(), [](char c) { return c >= '0' && c <= '9'; });
      if (!decimal) schema_error(term_path, "exponent must be a positive decimal integer");
      const auto c = uint_field(v, term_path);
      if (c == 0) schema_error(term_path, "coefficient must be positive");
      terms[std::stoi(k)] = c;
    }
    e.polynomial = CountingPolynomial(std::move(terms));
    r.links.push_back(std::move(e));
  }

  const auto& verdicts = field(j, "verdicts", root);
  if (!verdicts.is_array()) schema_error(root + ".verdicts", "expected array");
  for (std::size_t i = 0; i < verdicts.size(); ++i) {
    const std::string path = root + ".verdicts[" + std::to_string(i) + "]";
    const auto& v = verdicts[i];
    expect_keys(v, {"a", "b", "verdict"}, path);
    VerdictEntry e;
    e.a = string_field(v, "a", path);
    e.b = string_field(v, "b", path);
    try {
      e.verdict = parse_verdict(string_field(v, "verdict", path));
    } catch (const InvalidArgument& ex) {
      schema_error(path + ".verdict", ex.what());
    }
    r.verdicts.push_back(std::move(e));
  }
  return r;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

std::string serialize_report(const ReportDocument& r) { return report_to_json(r).dump(2) + "\n"; }

std::string serialize_reports(const std::vector<ReportDocument>& rs) {
  json all = json::array();
  for (const auto& r : rs) all.push_back(report_to_json(r));
  return all.dump(2) + "\n";
}

ReportDocument parse_report(const std::string& text) { return report_from_json(parse_json(text), "$"); }

std::vector<ReportDocument> parse_reports(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_array()) schema_error("$", "expected array");
  std::vector<ReportDocument> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(report_from_json(j[i], "$[" + std::to_string(i) + "]"));
  return out;
}

std::string validate_report_json(const std::string& text) {
  try {
    const json j = parse_json(text);
    if (j.is_array()) {
      for (std::size_t i = 0; i < j.size(); ++i) report_from_json(j[i], "$[" + std::to_string(i) + "]");
    } else {
      report_from_json(j, "$");
    }
  } catch (const ParseError& e) {
    return e.what();
  }
  return {};
}

std::string render_cayley_table(const DihedralGroup& g) {
  const auto t = g.cayley_table();
  const int width = static_cast<int>(std::to_string(g.order() - 1).size());
  std::ostringstream out;
  for (const auto& row : t) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << std::setw(width) << row[j];
    out << '\n';
  }
  return out.str();
}

std::string serialize_cayley_table(const DihedralGroup& g) {
  json j = {{"group", g.name()}, {"order", g.order()}, {"table", g.cayley_table()}};
  return j.dump() + "\n";
}

std::string serialize_axiom_check(const std::vector<AxiomViolation>& violations) {
  json list = json::array();
  for (const auto& v : violations) list.push_back({{"axiom", axiom_name(v.axiom)}, {"witness", v.witness}});
  json j = {{"quandle", violations.empty()}, {"violations", list}};
  return j.dump(2) + "\n";
}

std::string render_causality_table(const std::vector<CausalityRow>& rows) {
  std::vector<std::vector<std::string>> cells{{"group", "link", "total", "polynomial", "reference", "total",
                                               "polynomial", "verdict"}};
  for (const auto& r : rows)
    cells.push_back({r.group, r.link.link, std::to_string(r.link.total), render_polynomial(r.link.polynomial),
                     r.reference.link, std::to_string(r.reference.total), render_polynomial(r.reference.polynomial),
                     verdict_name(r.verdict)});
  std::vector<std::size_t> width(cells[0].size(), 0);
  for (const auto& row : cells)
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());

  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << "  ";
      if (i + 1 == row.size())
        out << row[i];
      else
        out << std::left << std::setw(static_cast<int>(width[i])) << row[i];
    }
    out << '\n';
  };
  line(cells[0]);
  std::size_t rule = 0;
  for (auto w : width) rule += w;
  out << std::string(rule + 2 * (width.size() - 1), '-') << '\n';
  for (std::size_t i = 1; i < cells.size(); ++i) line(cells[i]);
  return out.str();
}

std::vector<ReportDocument> causality_documents(const std::vector<CausalityRow>& rows) {
  std::vector<ReportDocument> docs;
  for (const auto& r : rows) {
    ReportDocument doc;
    doc.quandle = "Conj(" + r.group + ")";
    doc.links = {link_entry(r.link), link_entry(r.reference)};
    doc.verdicts = {{r.link.link, r.reference.link, r.verdict}};
    docs.push_back(std::move(doc));
  }
  return docs;
}

}  // namespace qcolor
