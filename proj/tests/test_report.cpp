#include "doctest.h"
#include "smallcut/report.hpp"

using namespace smallcut;

namespace {

CutReport sample_report() {
  CutReport r;
  r.n = 6;
  r.m = 9;
  r.verified = true;
  r.cut_edges = {2};
  r.cut_classes = {{0, 1}, {3, 4, 5}};
  r.class_values = {"0101", "1100"};
  r.cut_vertices = {0, 3};
  r.two_ecc = {0, 0, 0, 0, 4, 4};
  r.three_ecc = {0, 1, 2, 0, 4, 4};
  r.block_labels = {0, 0, 1, 2, 2, 2, 0, 0, 1};
  return r;
}

}  // namespace

TEST_CASE("report json round-trip is byte-identical") {
  CutReport r = sample_report();
  std::string once = report_to_json(r);
  CutReport parsed = report_from_json(once);
  CHECK(parsed == r);
  CHECK(report_to_json(parsed) == once);
}

TEST_CASE("empty report round-trips") {
  CutReport r;
  r.n = 1;
  r.m = 0;
  CutReport parsed = report_from_json(report_to_json(r));
  CHECK(parsed == r);
}

TEST_CASE("diff reports") {
  CutReport a = sample_report();
  CHECK(diff_reports(a, a).empty());

  CutReport b = a;
  b.cut_edges = {2, 5};
  std::string d = diff_reports(a, b);
  CHECK(!d.empty());
  CHECK(d.find("cut_edges") != std::string::npos);

  CutReport c = a;
  c.class_values = {"1111", "0000"};  // advisory, not compared
  CHECK(diff_reports(a, c).empty());

  CutReport e = a;
  e.two_ecc[5] = 0;
  CHECK(diff_reports(a, e).find("two_ecc") != std::string::npos);
}
