#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "schmidt/cayley.hpp"
#include "schmidt/commands.hpp"
#include "schmidt/construct.hpp"
#include "schmidt/json_export.hpp"

using namespace schmidt;
namespace fs = std::filesystem;

namespace {

  struct Run {
    int         code;
    std::string out;
  };

  // Runs the installed binary with `args`; stderr is discarded.
  Run run(std::string const& args, std::string const& env = "") {
    std::string cmd = env + " \"" SCHMIDT_LAB_EXE "\" " + args + " 2>/dev/null";
    FILE*       pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string            out;
    std::array<char, 4096> buf{};
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) {
      out.append(buf.data(), n);
    }
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
  }

  bool has(std::string const& text, std::string const& needle) {
    return text.find(needle) != std::string::npos;
  }

  struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / "schmidt_lab_test_cli") {
      fs::remove_all(path);
      fs::create_directories(path);
    }
    ~TempDir() {
      fs::remove_all(path);
    }
    std::string write(std::string const& name) const {
      auto p = path / (name + ".cayley");
      write_cayley(catalog(name), p);
      return p.string();
    }
  };

}  // namespace

TEST_CASE("construct") {
  TempDir dir;
  auto    out = (dir.path / "m231.cayley").string();
  auto    r   = run("construct --p 2 --q 3 --v 1 --out " + out);
  CHECK(r.code == 0);
  CHECK(has(r.out, "order: 12"));
  CHECK(has(r.out, "wrote " + out));
  CHECK(find_group_isomorphism(read_cayley(out), catalog("A4")).has_value());

  auto j = run("--format json construct --p 3 --q 2 --v 2");
  CHECK(j.code == 0);
  auto doc = Json::parse(j.out);
  CHECK(doc["schema"] == 1);

  CHECK(run("construct --p 2 --q 2 --v 1").code == 3);
  CHECK(run("construct --p 4 --q 3 --v 1").code == 3);
  CHECK(run("construct --p 2 --v 1").code == 3);
  CHECK(run("no-such-command").code == 3);
}

TEST_CASE("endos") {
  TempDir dir;
  auto    r = run("endos " + dir.write("S3"));
  CHECK(r.code == 0);
  CHECK(has(r.out, "|End|: 10"));
  CHECK(has(r.out, "|Aut|: 6"));
  CHECK(has(r.out, "|I0|: 3"));

  auto j   = run("--format json endos " + dir.write("A4"));
  auto doc = Json::parse(j.out);
  CHECK(doc["size"] == 33);
  CHECK(semigroup_from_json(doc).size() == 33);

  CHECK(run("endos " + (dir.path / "missing.cayley").string()).code == 3);
  {
    std::ofstream bad(dir.path / "bad.cayley");
    bad << "2\n0 1\n1 x\n";
  }
  CHECK(run("endos " + (dir.path / "bad.cayley").string()).code == 3);
  CHECK(run("--max-group-order 10 endos " + dir.write("S4")).code == 3);
}

TEST_CASE("check-schmidt") {
  TempDir dir;
  auto    s3 = run("check-schmidt " + dir.write("S3"));
  CHECK(s3.code == 0);
  CHECK(has(s3.out, "characterization: pass"));
  CHECK(has(s3.out, "oracle: Schmidt (3,2,1)"));
  CHECK(has(s3.out, "agreement: agree"));

  auto s4 = run("check-schmidt " + dir.write("S4"));
  CHECK(s4.code == 1);
  CHECK(has(s4.out, "characterization: fail"));
  CHECK(has(s4.out, "agreement: agree"));

  auto given = run("check-schmidt " + dir.write("A4") + " --p 2 --q 3 --v 1");
  CHECK(given.code == 0);
  auto wrong = run("check-schmidt " + dir.write("A4") + " --p 3 --q 2 --v 1");
  CHECK(wrong.code == 1);

  auto j   = run("--format json check-schmidt " + dir.write("SL23"));
  auto doc = Json::parse(j.out);
  CHECK(doc["verdict"] == true);
  CHECK(doc["agree"] == true);
  CHECK(doc["oracle"]["is_schmidt"] == true);
}

TEST_CASE("compare-end") {
  TempDir dir;
  auto    r = run("compare-end " + dir.write("A4") + " " + dir.write("SL23"));
  CHECK(r.code == 0);
  CHECK(has(r.out, "End isomorphic: yes"));
  CHECK(has(r.out, "groups isomorphic: no"));
  CHECK(has(r.out, "***"));
  auto s = run("compare-end " + dir.write("S3") + " " + dir.write("C6"));
  CHECK(has(s.out, "End isomorphic: no"));
  CHECK_FALSE(has(s.out, "***"));
}

TEST_CASE("sweep") {
  auto r = run("sweep --corpus catalog --max-order 12");
  CHECK(r.code == 0);
  CHECK(has(r.out, "disagreements: 0"));
  auto c = run("sweep --corpus constructed --max-order 24");
  CHECK(c.code == 0);
  CHECK(has(c.out, "M(2,3,1)"));
  auto empty = run("sweep --corpus constructed --max-order 1");
  CHECK(empty.code == 0);
  CHECK(has(empty.out, "0 groups"));
  CHECK(run("sweep --corpus nowhere").code == 3);
}

TEST_CASE("catalog and symbolic") {
  TempDir dir;
  auto    r = run("catalog --out-dir " + dir.path.string());
  CHECK(r.code == 0);
  CHECK(has(r.out, "SL23 24"));
  CHECK(fs::exists(dir.path / "Q8.cayley"));
  CHECK(read_cayley(dir.path / "Q8.cayley") == catalog("Q8"));

  auto s = run("symbolic --p 2 --q 3 --v 1");
  CHECK(s.code == 0);
  CHECK(has(s.out, "proper endomorphisms: 9"));
  CHECK(has(s.out, "triplets fixing [1; 0] from the left: 12"));
  CHECK(has(s.out, "of which also fixing it from the right: 3"));
  CHECK(run("symbolic --p 3 --q 3 --v 1").code == 3);
}

TEST_CASE("output does not depend on the thread count") {
  TempDir dir;
  auto    file = dir.write("S4");
  auto    one  = run("--threads 1 --format json endos " + file);
  auto    four = run("--threads 4 --format json endos " + file);
  CHECK(one.code == 0);
  CHECK(one.out == four.out);
  auto sweep1 = run("--threads 1 sweep --corpus catalog --max-order 12");
  auto sweep3 = run("--threads 3 sweep --corpus catalog --max-order 12");
  CHECK(sweep1.out == sweep3.out);
}

TEST_CASE("the environment cap") {
  TempDir dir;
  auto    file = dir.write("S4");
  CHECK(run("endos " + file).code == 0);
  CHECK(run("endos " + file, "SCHMIDT_LAB_MAX_ORDER=12").code == 3);
}

TEST_CASE("commands write to the given streams") {
  RunConfig          cfg;
  std::ostringstream out, err;
  CHECK(cmd_symbolic(3, 2, 1, cfg, out, err) == kExitOk);
  CHECK(has(out.str(), "proper endomorphisms: 4"));
  CHECK(err.str().empty());
  std::ostringstream out2, err2;
  CHECK(cmd_construct(2, 2, 1, std::nullopt, cfg, out2, err2) == kExitInputError);
  CHECK(has(err2.str(), "p and q must be distinct primes"));
  auto corpus = constructed_corpus(40);
  CHECK(corpus.size() == 16);
  CHECK(corpus.front().name == "M(3,2,1)");
}
