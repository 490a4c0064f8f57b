#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "donsum/errors.hpp"
#include "donsum/manifold_file.hpp"
#include "support.hpp"

namespace donsum {
namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Errc parse_error(const std::string& text) {
  try {
    (void)parse_manifold(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "accepted: " << text;
  return Errc::InvalidArgument;
}

TEST(ManifoldFile, LoadsReference) {
  const StructureSeries s = test::k3();
  EXPECT_EQ(s.owner.name, "K3#2");
  EXPECT_EQ(s.owner.lattice.rank(), 4u);
  EXPECT_EQ(s.owner.sigma, (IntVec{1, -1, -1, 0}));
  EXPECT_EQ(s.owner.named("E1"), (IntVec{0, 1, 0, 0}));
  ASSERT_EQ(s.classes.size(), 4u);
  EXPECT_EQ(s.classes[2].coeff, GaussRat::fraction(-1, 4));
  EXPECT_EQ(*s.classes[0].sw, GaussRat(-1));
}

TEST(ManifoldFile, CanonicalFormIsStable) {
  const std::string once = serialize_manifold(test::k3());
  EXPECT_EQ(serialize_manifold(parse_manifold(once)), once);
  EXPECT_EQ(once.back(), '\n');
}

TEST(ManifoldFile, GaussianCoefficients) {
  std::string text = slurp(test::data_path("k3_2blowup.json"));
  const auto pos = text.find("\"1/4\"");
  text.replace(pos, 5, "\"1/4+1/2*i\"");
  const StructureSeries s = parse_manifold(text);
  EXPECT_EQ(s.classes[0].coeff, GaussRat(Rational(1, 4), Rational(1, 2)));
  EXPECT_EQ(serialize_manifold(parse_manifold(serialize_manifold(s))), serialize_manifold(s));
}

TEST(ManifoldFile, Errors) {
  EXPECT_EQ(parse_error(slurp(test::data_path("malformed.json"))), Errc::Parse);
  EXPECT_EQ(parse_error("[]"), Errc::Parse);
  std::string numeric = slurp(test::data_path("k3_2blowup.json"));
  numeric.replace(numeric.find("\"1/4\""), 5, "0.25");
  EXPECT_EQ(parse_error(numeric), Errc::Parse);
  std::string bad_form = slurp(test::data_path("k3_2blowup.json"));
  bad_form.replace(bad_form.find("\"rank\": 4"), 9, "\"rank\": 3");
  EXPECT_EQ(parse_error(bad_form), Errc::Validation);
  EXPECT_THROW(load_manifold(test::data_path("missing.json")), Error);
}

}  // namespace
}  // namespace donsum
