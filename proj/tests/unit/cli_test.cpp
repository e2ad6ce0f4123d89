#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"

namespace kei::cli {
namespace {

const std::string kData = KEI_TEST_DATA_DIR;

struct Result {
  int code;
  std::string out, err;
};

Result kei(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

template <typename Outcome>
Outcome json_of(const Result& r) {
  return nlohmann::json::parse(r.out).get<Outcome>();
}

TEST(CliCheck, DihedralFiveIsInvolutory) {
  auto r = kei({"check", kData + "/dihedral5.qdl", "--involutory"});
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("involutory: holds"), std::string::npos);
}

TEST(CliCheck, ConstantRowsFailWithWitness) {
  auto r = kei({"check", kData + "/bad.qdl"});
  EXPECT_EQ(r.code, kPropertyFails);
  EXPECT_NE(r.out.find("row 0 is not a bijection"), std::string::npos) << r.out;
}

TEST(CliCheck, MissingFileIsUsageError) {
  auto r = kei({"check", kData + "/no-such-file.qdl"});
  EXPECT_EQ(r.code, kUsageError);
  EXPECT_NE(r.err.find("cannot open"), std::string::npos);
}

TEST(CliCheck, ParseErrorReportsPosition) {
  auto r = kei({"check", kData + "/malformed.qdl"});
  EXPECT_EQ(r.code, kUsageError);
  EXPECT_NE(r.err.find("line 3, column 3"), std::string::npos) << r.err;
}

TEST(CliCheck, BuiltinsAndJsonRoundTrip) {
  auto r = kei({"check", "conj:s4", "--involutory", "--json"});
  EXPECT_EQ(r.code, kPropertyFails);
  auto parsed = json_of<CheckOutcome>(r);
  EXPECT_EQ(parsed, cmd_check(conj_quandle(symmetric_group(4)), false, true));
  ASSERT_EQ(parsed.axioms.size(), 3u);
  EXPECT_EQ(parsed.axioms[2].witness, (std::vector<Element>{3, 1}));
  EXPECT_EQ(kei({"check", "swap3", "--quandle"}).code, kOk);
  EXPECT_EQ(kei({"check", kData + "/swap3.json", "--involutory"}).code, kOk);
}

TEST(CliCheck, UnknownBuiltinAndBadFlags) {
  EXPECT_EQ(kei({"check", "nonsense:3"}).code, kUsageError);
  EXPECT_EQ(kei({"check", "dihedral:5", "--bogus"}).code, kUsageError);
  EXPECT_EQ(kei({}).code, kUsageError);
  EXPECT_EQ(kei({"--help"}).code, kOk);
}

TEST(CliLaurent, ZTwoFive) {
  auto r = kei({"laurent", "--n", "5", "--group", "z2", "--json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["theorem"], "laurent");
  EXPECT_EQ(j["n"], 5);
  EXPECT_EQ(j["group"], "z2");
  EXPECT_EQ(j["iso_verified"], true);
  EXPECT_EQ(j["pairs_checked"], 25);
  EXPECT_EQ(j.get<LaurentOutcome>(), cmd_laurent(5, "z2", std::nullopt, Limits{}));
}

TEST(CliLaurent, SThreeThree) {
  auto r = kei({"laurent", "--n", "3", "--group", "s3"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("pairs checked: 81"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("(2,(1 3)) ↦ ((1 3),2)"), std::string::npos) << r.out;
}

TEST(CliLaurent, EvenModulusRejected) {
  auto r = kei({"laurent", "--n", "4", "--group", "z2"});
  EXPECT_EQ(r.code, kUsageError);
  EXPECT_NE(r.err.find("torsion"), std::string::npos) << r.err;
}

TEST(CliLaurent, ExplicitCharacterAndInadmissibleGroup) {
  EXPECT_EQ(kei({"laurent", "--n", "3", "--group", "z2", "--character", "+-"}).code, kOk);
  EXPECT_EQ(kei({"laurent", "--n", "3", "--group", "z2", "--character", "++"}).code, kUsageError);
  EXPECT_EQ(kei({"laurent", "--n", "3", "--group", "s4"}).code, kUsageError);
}

TEST(CliFreeprobe, EvModel) {
  auto r = kei({"freeprobe", "--model", "ev", "--json"});
  EXPECT_EQ(r.code, kPropertyFails);
  auto p = json_of<ProbeOutcome>(r);
  EXPECT_TRUE(p.relation_found);
  EXPECT_EQ(p.lhs, "ρ▷σ");
  EXPECT_EQ(p.rhs, "τ");
  EXPECT_EQ(p.value, "τ");
  EXPECT_EQ(p.relation_depth, 1u);
  EXPECT_EQ(p, cmd_freeprobe_ev(4, Limits{}));
  auto text = kei({"freeprobe", "--model", "ev"});
  EXPECT_NE(text.out.find("relation ρ▷σ = τ at depth 1"), std::string::npos) << text.out;
}

TEST(CliFreeprobe, DihedralThreeFile) {
  auto r = kei({"freeprobe", "--file", kData + "/dihedral3.qdl", "--gens", "0,1", "--depth", "3",
                "--json"});
  EXPECT_EQ(r.code, kPropertyFails);
  auto p = json_of<ProbeOutcome>(r);
  ASSERT_TRUE(p.relation_found);
  // Replay: parse both sides back into the free kei and evaluate.
  FreeKei free(Alphabet::standard(2));
  auto eval = universal_extend(free, dihedral_quandle(3), {0, 1});
  EXPECT_EQ(p.lhs, "t▷s");
  EXPECT_EQ(eval(free.parse("t s t")), eval(free.parse("s t s")));
}

TEST(CliFreeprobe, DepthZeroSingleGenerator) {
  auto r = kei({"freeprobe", "--file", "dihedral:5", "--gens", "2", "--depth", "0"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("no relation within depth 0"), std::string::npos);
}

TEST(CliFreeprobe, Errors) {
  EXPECT_EQ(kei({"freeprobe", "--model", "galois"}).code, kUsageError);
  EXPECT_EQ(kei({"freeprobe"}).code, kUsageError);
  EXPECT_EQ(kei({"freeprobe", "--file", "conj:s4", "--gens", "1,2"}).code, kUsageError);
  EXPECT_EQ(kei({"freeprobe", "--file", "dihedral:3", "--gens", "0,9"}).code, kUsageError);
}

TEST(CliOrbits, CountsAndJson) {
  auto r = kei({"orbits", "dihedral:4", "--json"});
  ASSERT_EQ(r.code, kOk);
  auto o = json_of<OrbitsOutcome>(r);
  EXPECT_EQ(o.count, 2u);
  EXPECT_EQ(o, cmd_orbits(dihedral_quandle(4)));
  EXPECT_NE(kei({"orbits", "conj:s3"}).out.find("3 orbits"), std::string::npos);
}

TEST(CliHomcount, DihedralThree) {
  auto r = kei({"homcount", "dihedral:3", kData + "/dihedral3.qdl", "--list", "2", "--json"});
  ASSERT_EQ(r.code, kOk);
  auto h = json_of<HomCountOutcome>(r);
  EXPECT_EQ(h.count, 9u);
  EXPECT_EQ(h.morphisms.size(), 2u);
  EXPECT_EQ(h, cmd_homcount(dihedral_quandle(3), dihedral_quandle(3), 2));
}

TEST(CliEnumerate, Balls) {
  auto r = kei({"enumerate", "coxeter", "--rank", "2", "--radius", "3"});
  EXPECT_EQ(r.out, "e\ns\nt\ns t\nt s\ns t s\nt s t\n");
  auto f = kei({"enumerate", "fiq", "--rank", "2", "--radius", "3", "--json"});
  EXPECT_EQ(json_of<EnumerateOutcome>(f).elements,
            (std::vector<std::string>{"s", "t", "s t s", "t s t"}));
  EXPECT_EQ(kei({"enumerate", "free", "--rank", "2", "--radius", "1"}).out, "e\ns\ns^-1\nt\nt^-1\n");
  EXPECT_EQ(kei({"enumerate", "words", "--radius", "1"}).code, kUsageError);
}

TEST(CliEnumerate, EnvironmentCapsApply) {
  ::setenv("KEI_MAX_WORD_LENGTH", "4", 1);
  auto r = kei({"enumerate", "coxeter", "--radius", "5"});
  ::setenv("KEI_MAX_WORD_LENGTH", "0", 1);
  auto zero = kei({"enumerate", "coxeter", "--radius", "1"});
  ::unsetenv("KEI_MAX_WORD_LENGTH");
  EXPECT_EQ(r.code, kUsageError);
  EXPECT_EQ(zero.code, kUsageError);
  ::setenv("KEI_MAX_ORDER", "4", 1);
  auto big = kei({"check", "dihedral:5"});
  ::unsetenv("KEI_MAX_ORDER");
  EXPECT_EQ(big.code, kUsageError);
}

TEST(CliEnvelope, DerivesAndVerifies) {
  auto r = kei({"envelope", "swap3", "--a", "1", "--b", "2", "--names", "x,y,z", "--json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  auto e = json_of<EnvelopeOutcome>(r);
  EXPECT_TRUE(e.found);
  EXPECT_EQ(e.certificate["start"], "y z^-1");
  EXPECT_EQ(e, cmd_envelope(FiniteQuandle(3, {0, 2, 1, 0, 1, 2, 0, 1, 2}),
                            std::vector<std::string>{"x", "y", "z"}, 1, 2, {}));

  auto path = std::filesystem::temp_directory_path() / "kei_cli_test_cert.json";
  std::ofstream(path) << r.out;
  auto v = kei({"verify", "swap3", path.string(), "--names", "x,y,z"});
  EXPECT_EQ(v.code, kOk) << v.err;
  EXPECT_NE(v.out.find("certificate valid"), std::string::npos);

  auto tampered = e.certificate;
  tampered["steps"][0]["direction"] = -tampered["steps"][0]["direction"].get<int>();
  std::ofstream(path) << tampered.dump();
  EXPECT_EQ(kei({"verify", "swap3", path.string(), "--names", "x,y,z"}).code, kPropertyFails);
  std::filesystem::remove(path);
}

TEST(CliEnvelope, NothingFoundIsPropertyFailure) {
  auto r = kei({"envelope", "dihedral:3", "--a", "0", "--b", "1", "--depth", "2"});
  EXPECT_EQ(r.code, kPropertyFails);
  EXPECT_NE(r.out.find("no derivation of g0 = g1 within depth 2"), std::string::npos) << r.out;
  EXPECT_EQ(kei({"envelope", "dihedral:3", "--a", "0", "--b", "1", "--depth", "0"}).code,
            kUsageError);
}

TEST(CliIso, Examples) {
  EXPECT_EQ(kei({"iso", "dihedral:3", "inv:d3"}).code, kOk);
  auto r = kei({"iso", "dihedral:4", "trivial:4", "--json"});
  EXPECT_EQ(r.code, kPropertyFails);
  EXPECT_FALSE(json_of<IsoOutcome>(r).isomorphic);
}

}  // namespace
}  // namespace kei::cli
