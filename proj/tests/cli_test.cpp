#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>

#include "ca2oo/requirements.hpp"
#include "fixtures.hpp"

namespace fs = std::filesystem;
using testsupport::read_text;
using testsupport::write_text;

namespace {

struct Run {
    int status = -1;
    std::string out;
    std::string err;
};

std::string quote(const std::string& s) {
    std::string q = "'";
    for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
    return q + "'";
}

Run run_cli(const std::string& args, const fs::path& dir) {
    const auto out = dir / "stdout.txt";
    const auto err = dir / "stderr.txt";
    const std::string cmd = quote(testsupport::cli_path().string()) + " " + args + " > " + quote(out.string()) +
                            " 2> " + quote(err.string());
    const int raw = std::system(cmd.c_str());
    Run r;
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    r.out = read_text(out);
    r.err = read_text(err);
    return r;
}

std::string corpus_arg() { return quote(testsupport::corpus_path().string()); }

const char* kOneEvent =
    "process P \"p\"\n"
    "event P1 \"make\" in P {\n  message T = < Code [i text (3)] >\n  registers Thing = T\n"
    "  identified-by Thing (Code)\n  reaction creation name \"make\"\n}\n";

}  // namespace

TEST(Cli, ValidateCorpus) {
    const auto dir = testsupport::scratch_dir("cli-validate");
    const auto r = run_cli("validate " + corpus_arg(), dir);
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.err.find("[W-NO-ID]"), std::string::npos);
    EXPECT_EQ(r.err.find("error"), std::string::npos);
}

TEST(Cli, DeriveWritesEveryOutput) {
    const auto dir = testsupport::scratch_dir("cli-derive");
    const auto r = run_cli("derive " + corpus_arg() + " --process SALE --out " + quote((dir / "m.json").string()) +
                             " --diagram " + quote((dir / "c.puml").string()) + " --std-dir " +
                             quote((dir / "std").string()) + " --trace " + quote((dir / "t.txt").string()),
                         dir);
    ASSERT_EQ(r.status, 0) << r.err;
    EXPECT_TRUE(r.out.empty());
    EXPECT_EQ(read_text(dir / "m.json"), read_text(testsupport::golden_dir() / "superstationery.model.json"));
    EXPECT_EQ(read_text(dir / "c.puml").rfind("@startuml", 0), 0U);
    EXPECT_NE(read_text(dir / "t.txt").find("R-REVISE"), std::string::npos);
    std::size_t stds = 0;
    for (const auto& entry : fs::directory_iterator(dir / "std")) {
        EXPECT_EQ(entry.path().extension(), ".dot");
        ++stds;
    }
    EXPECT_EQ(stds, 9U);
}

TEST(Cli, DeriveToStdoutAndPrintOrder) {
    const auto dir = testsupport::scratch_dir("cli-stdout");
    const auto r = run_cli("derive " + corpus_arg() + " --process SALE --print-order", dir);
    ASSERT_EQ(r.status, 0);
    EXPECT_EQ(r.out, read_text(testsupport::golden_dir() / "superstationery.model.json"));
    EXPECT_NE(r.err.find("CLIE1\nLOGI10\nPROD2\nRISK4\nSALE1\nSUPP2\nSALE2\nSALE3\nSALE4\nSALE5\nSALE6\n"),
              std::string::npos);

    const auto with_file = run_cli("derive " + corpus_arg() + " --process SALE --print-order --out " +
                                     quote((dir / "m.json").string()),
                                 dir);
    ASSERT_EQ(with_file.status, 0);
    EXPECT_EQ(with_file.out.rfind("CLIE1\nLOGI10\n", 0), 0U);
}

TEST(Cli, StdFormatPlantUml) {
    const auto dir = testsupport::scratch_dir("cli-puml");
    const auto r = run_cli("derive " + corpus_arg() + " --out " + quote((dir / "m.json").string()) +
                             " --std-dir " + quote((dir / "std").string()) + " --std-format plantuml",
                         dir);
    ASSERT_EQ(r.status, 0);
    EXPECT_TRUE(fs::exists(dir / "std" / "ClientOrder.puml"));
}

TEST(Cli, FmtRoundTrips) {
    const auto dir = testsupport::scratch_dir("cli-fmt");
    const auto r = run_cli("fmt " + corpus_arg(), dir);
    ASSERT_EQ(r.status, 0);
    const auto original = ca2oo::parse_requirements(testsupport::corpus_text());
    const auto reparsed = ca2oo::parse_requirements(r.out);
    ASSERT_TRUE(reparsed.ok());
    EXPECT_TRUE(ca2oo::structurally_equal(original.value, reparsed.value));

    write_text(dir / "again.carm", r.out);
    const auto twice = run_cli("fmt " + quote((dir / "again.carm").string()), dir);
    EXPECT_EQ(twice.out, r.out);
}

TEST(Cli, ParseErrorExitsOne) {
    const auto dir = testsupport::scratch_dir("cli-parse");
    write_text(dir / "bad.carm", "process P \"p\"\nevent P1 in {\n");
    for (const char* cmd : {"validate ", "derive ", "fmt "}) {
        const auto r = run_cli(cmd + quote((dir / "bad.carm").string()), dir);
        EXPECT_EQ(r.status, 1) << cmd;
        EXPECT_NE(r.err.find("bad.carm:2:"), std::string::npos) << r.err;
    }
    EXPECT_EQ(run_cli("validate " + quote((dir / "missing.carm").string()), dir).status, 1);
}

TEST(Cli, ValidationErrorExitsTwo) {
    const auto dir = testsupport::scratch_dir("cli-invalid");
    std::string text = kOneEvent;
    text.replace(text.find("  reaction"), 0, "  kind Thing.Code = variable\n");
    write_text(dir / "invalid.carm", text);
    EXPECT_EQ(run_cli("validate " + quote((dir / "invalid.carm").string()), dir).status, 2);
    EXPECT_EQ(run_cli("derive " + quote((dir / "invalid.carm").string()), dir).status, 2);
}

TEST(Cli, OrderErrorExitsThree) {
    const auto dir = testsupport::scratch_dir("cli-order");
    write_text(dir / "m.carm", kOneEvent);
    const auto r = run_cli("derive " + quote((dir / "m.carm").string()) + " --process NOPE", dir);
    EXPECT_EQ(r.status, 3);
    EXPECT_NE(r.err.find("E-PROCESS"), std::string::npos);
    EXPECT_EQ(run_cli("derive " + quote((dir / "m.carm").string()) + " --diagram " + quote((dir / "c.svg").string()),
                    dir)
                  .status,
              3);
}

TEST(Cli, SmallModelDerives) {
    const auto dir = testsupport::scratch_dir("cli-small");
    write_text(dir / "m.carm", kOneEvent);
    const auto r = run_cli("derive " + quote((dir / "m.carm").string()), dir);
    ASSERT_EQ(r.status, 0) << r.err;
    EXPECT_NE(r.out.find("\"name\": \"Thing\""), std::string::npos);
}
