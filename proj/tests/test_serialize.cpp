#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>

#include "hopfcheck/checks.hpp"
#include "hopfcheck/serialize.hpp"
#include "support.hpp"

using namespace hopfcheck;

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("hopfcheck_test_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

ErrorKind parse_error_kind(const std::string& text, std::string* msg = nullptr) {
  try {
    parse_model(text);
  } catch (const Error& e) {
    if (msg)
      *msg = e.what();
    return e.kind();
  }
  return ErrorKind::Io;
}

}  // namespace

TEST(Serialize, CycEncoding) {
  CycQ8 x(Rational(1, 2), 0, Rational(-1, 2), 3);
  EXPECT_EQ(cyc_to_json(x), json({"1/2", "0", "-1/2", "3"}));
  EXPECT_EQ(cyc_from_json(cyc_to_json(x)), x);
  EXPECT_EQ(cyc_from_json(json("2/4")), CycQ8(Rational(1, 2)));
  EXPECT_THROW(cyc_from_json(json({"1", "2"})), Error);
}

TEST(Serialize, ElementRoundTrip) {
  hopfcheck::testing::Rng rng(9);
  auto A = make_algebra({1, 2, 1});
  for (int k = 0; k < 20; ++k) {
    AlgElement x = rng.element(A);
    EXPECT_EQ(element_from_json(A, element_to_json(x)), x);
  }
}

TEST(Serialize, ExportLoadExportIsByteIdentical) {
  for (const char* id : {"kp", "vtilde", "vtilde-twist", "smash"}) {
    HopfPtr h = exportable_model(id);
    const std::string p1 = temp_path(std::string(id) + "_1.json"), p2 = temp_path(std::string(id) + "_2.json");
    save_hopf(*h, p1);
    HopfPtr loaded = load_hopf(p1);
    EXPECT_EQ(loaded->coproduct.matrix(), h->coproduct.matrix());
    EXPECT_EQ(loaded->counit.matrix(), h->counit.matrix());
    EXPECT_EQ(loaded->antipode.matrix(), h->antipode.matrix());
    EXPECT_TRUE(verify_hopf_axioms(*loaded).passed()) << id;
    save_hopf(*loaded, p2);
    EXPECT_EQ(slurp(p1), slurp(p2)) << id;
    std::remove(p1.c_str());
    std::remove(p2.c_str());
  }
}

TEST(Serialize, VtildeExportHasEightUnitBlocks) {
  json j = hopf_to_json(*exportable_model("vtilde"));
  EXPECT_EQ(j["block_sizes"], json(std::vector<int>(8, 1)));
}

TEST(Serialize, UnwritablePathIsIoError) {
  try {
    save_hopf(*exportable_model("kp"), "/nonexistent-dir/x/y.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Io);
  }
}

TEST(Serialize, HopfShapeErrorsNameTheField) {
  json j = hopf_to_json(*exportable_model("kp"));
  j["counit_matrix"] = json::array({json::array({cyc_to_json(1)})});
  try {
    hopf_from_json(j);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ModelFormat);
    EXPECT_NE(std::string(e.what()).find("counit_matrix"), std::string::npos);
  }
}

TEST(ModelFile, RoundTripAndBuild) {
  ModelFile m = vtilde_model_file();
  ModelFile back = parse_model(model_to_json(m).dump(2));
  EXPECT_EQ(back.generators.size(), 3u);
  EXPECT_EQ(back.action_unitary, m.action_unitary);
  EXPECT_EQ(back.cap, m.cap);
  UserModel u = build_user_model(back);
  EXPECT_EQ(u.group.order(), 8);
  EXPECT_EQ(u.twist->hopf->dim(), 8);
}

TEST(ModelFile, Diagnostics) {
  std::string msg;
  EXPECT_EQ(parse_error_kind("{\n  \"generators\": [\n  oops\n]}", &msg), ErrorKind::ModelFormat);
  EXPECT_NE(msg.find("line 3"), std::string::npos) << msg;

  json j = model_to_json(vtilde_model_file());
  j.erase("cap");
  EXPECT_EQ(parse_error_kind(j.dump(), &msg), ErrorKind::ModelFormat);
  EXPECT_NE(msg.find("cap"), std::string::npos) << msg;

  j = model_to_json(vtilde_model_file());
  j["generators"][1][0][1] = "x";
  EXPECT_EQ(parse_error_kind(j.dump(), &msg), ErrorKind::ModelFormat);
  EXPECT_NE(msg.find("generators[1][0][1]"), std::string::npos) << msg;

  j = model_to_json(vtilde_model_file());
  j["central_element"] = json::array({json::array({"1"})});
  EXPECT_EQ(parse_error_kind(j.dump(), &msg), ErrorKind::ModelFormat);
  EXPECT_NE(msg.find("central_element"), std::string::npos) << msg;
}

TEST(Checks, RegistryShape) {
  EXPECT_GE(list_checks().size(), 14u);
  EXPECT_EQ(list_checks("modcat").size(), 3u);
  EXPECT_TRUE(list_checks("zzz").empty());
  std::set<std::string> ids;
  for (const auto& d : check_registry())
    EXPECT_TRUE(ids.insert(d.id).second) << d.id;
  for (const char* id : {"ty.bicharacter", "ty.pentagon", "ty.pentagon-negative", "ty.fusion-match",
                         "modcat.unitarity", "modcat.diagrams", "modcat.repair", "twist.iso-phi"})
    EXPECT_TRUE(ids.count(id)) << id;
}

TEST(Checks, UnknownCheckThrows) {
  try {
    run_check("nope.nothing");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownCheck);
  }
}

TEST(Checks, NegativeControlWithTauOne) {
  CheckOptions o;
  o.tau = CycQ8(1);
  Report r = run_check("ty.pentagon-negative", o);
  EXPECT_EQ(r.verdict, Verdict::Fail);
  EXPECT_TRUE(r.as_expected());
  Report p = run_check("ty.pentagon", o);
  EXPECT_FALSE(p.as_expected());
}

TEST(Checks, ReportSchema) {
  Report r = run_check("twist.iso-phi");
  EXPECT_EQ(r.verdict, Verdict::Pass);
  json j = r.to_json();
  for (const char* k : {"id", "verdict", "elapsed_ms", "witness", "anchor"})
    EXPECT_TRUE(j.contains(k)) << k;
  EXPECT_EQ(j.size(), 5u);
}

TEST(Checks, AllAsExpected) {
  for (const Report& r : run_all())
    EXPECT_TRUE(r.as_expected()) << r.id << " " << r.witness.dump();
}

TEST(Checks, UserModelFile) {
  const std::string p = temp_path("model.json");
  {
    std::ofstream out(p);
    out << model_to_json(vtilde_model_file()).dump(2);
  }
  CheckOptions o;
  o.model_path = p;
  Report r = run_check("model.axioms", o);
  EXPECT_EQ(r.verdict, Verdict::Pass) << r.witness.dump();
  std::remove(p.c_str());
  o.model_path = temp_path("missing.json");
  EXPECT_THROW(run_check("model.axioms", o), Error);
}
