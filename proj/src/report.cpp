#include "smallcut/report.hpp"

#include <sstream>

#include <json.hpp>

namespace smallcut {

using ordered_json = nlohmann::ordered_json;

std::string report_to_json(const CutReport& r) {
  ordered_json j;
  j["version"] = r.version;
  j["n"] = r.n;
  j["m"] = r.m;
  j["verified"] = r.verified;
  j["cut_edges"] = r.cut_edges;
  ordered_json classes = ordered_json::array();
  for (std::size_t c = 0; c < r.cut_classes.size(); ++c) {
    ordered_json cls;
    cls["edges"] = r.cut_classes[c];
    cls["value"] = c < r.class_values.size() ? r.class_values[c] : "";
    classes.push_back(cls);
  }
  j["cut_classes"] = classes;
  j["cut_vertices"] = r.cut_vertices;
  j["two_ecc"] = r.two_ecc;
  j["three_ecc"] = r.three_ecc;
  j["block_labels"] = r.block_labels;
  return j.dump(2) + "\n";
}

CutReport report_from_json(const std::string& text) {
  ordered_json j = ordered_json::parse(text);
  CutReport r;
  r.version = j.at("version").get<int>();
  r.n = j.at("n").get<int>();
  r.m = j.at("m").get<int>();
  r.verified = j.at("verified").get<bool>();
  r.cut_edges = j.at("cut_edges").get<std::vector<int>>();
  for (const auto& cls : j.at("cut_classes")) {
    r.cut_classes.push_back(cls.at("edges").get<std::vector<int>>());
    r.class_values.push_back(cls.at("value").get<std::string>());
  }
  r.cut_vertices = j.at("cut_vertices").get<std::vector<int>>();
  r.two_ecc = j.at("two_ecc").get<std::vector<int>>();
  r.three_ecc = j.at("three_ecc").get<std::vector<int>>();
  r.block_labels = j.at("block_labels").get<std::vector<int>>();
  return r;
}

namespace {

template <class T>
void diff_field(std::ostringstream& out, const char* name, const T& a, const T& b) {
  if (a != b) out << "mismatch in " << name << "\n";
}

}  // namespace

std::string diff_reports(const CutReport& a, const CutReport& b) {
  std::ostringstream out;
  diff_field(out, "n", a.n, b.n);
  diff_field(out, "m", a.m, b.m);
  diff_field(out, "cut_edges", a.cut_edges, b.cut_edges);
  diff_field(out, "cut_classes", a.cut_classes, b.cut_classes);
  diff_field(out, "cut_vertices", a.cut_vertices, b.cut_vertices);
  diff_field(out, "two_ecc", a.two_ecc, b.two_ecc);
  diff_field(out, "three_ecc", a.three_ecc, b.three_ecc);
  diff_field(out, "block_labels", a.block_labels, b.block_labels);
  return out.str();
}

}  // namespace smallcut
