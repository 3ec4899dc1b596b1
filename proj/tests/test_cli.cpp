#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "airpockets/cli.hpp"

using namespace airpockets;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "airpockets");
    std::vector<const char*> argv;
    for (const std::string& a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return Run{code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle)
{
    return hay.find(needle) != std::string::npos;
}

// Numbers in order of appearance, ignoring separators and labels.
std::vector<std::string> numbers(const std::string& text)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : text + " ") {
        if ((c >= '0' && c <= '9') || (c == '-' && cur.empty())) {
            cur += c;
        } else {
            if (!cur.empty() && cur != "-") {
                out.push_back(cur);
            }
            cur.clear();
        }
    }
    return out;
}

// Keep only the value column of an "index value" listing.
std::vector<std::string> values_of_bfile(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string index;
    std::string value;
    while (in >> index >> value) {
        out.push_back(value);
    }
    return out;
}

}  // namespace

TEST_CASE("count")
{
    Run r = run({"count", "peakless", "5", "1", "--check"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "15\n");
    CHECK(contains(r.err, "engines agree: brute dp series recurrence closed-form"));

    CHECK(run({"count", "uuless", "4", "0"}).out == "9\n");
    CHECK(run({"count", "peakless", "0", "0"}).out == "1\n");
    CHECK(run({"count", "valleyless", "8"}).out == "505 467 361 241 139 70 29 8 1\n");
    CHECK(run({"count", "peakless", "3", "7"}).out == "0\n");
    CHECK(run({"count", "none", "4", "--check"}).code == kExitOk);
    for (const char* m : {"brute", "dp", "series", "recurrence", "closed-form"}) {
        CHECK(run({"count", "valleyless", "7", "2", "--method", m}).out == "133\n");
    }
    CHECK(run({"count", "uuless", "20", "--check"}).code == kExitOk);

    CHECK(run({"count", "nosuchclass", "3"}).code == kExitUsage);
    CHECK(run({"count", "uuless", "3", "--method", "closed-form"}).code == kExitUsage);
    CHECK(run({"count", "none", "3", "--method", "series"}).code == kExitUsage);
    CHECK(run({"count", "peakless", "-1"}).code == kExitUsage);
    CHECK(run({"count", "peakless", "3", "--method", "magic"}).code == kExitUsage);
}

TEST_CASE("triangle")
{
    const Run t = run({"triangle", "peakless", "9"});
    CHECK(t.code == kExitOk);
    CHECK(contains(t.out, "190 248 229 172 110  62  28   8   1\n"));

    const Run g = run({"triangle", "uuless", "9", "--reindex-g", "--format", "csv"});
    CHECK(contains(g.out, "112,298,372,319,203,97,34,8,1\n"));

    const Run none = run({"triangle", "none", "3", "--format", "csv"});
    CHECK(none.out == "1\n1,1\n2,2,1\n");

    // All formats carry the same values.
    const auto table = numbers(run({"triangle", "valleyless", "7"}).out);
    CHECK(numbers(run({"triangle", "valleyless", "7", "--format", "csv"}).out) == table);
    CHECK(numbers(run({"triangle", "valleyless", "7", "--format", "json"}).out) == table);
    CHECK(values_of_bfile(run({"triangle", "valleyless", "7", "--format", "bfile"}).out) == table);

    const Run rp = run({"triangle", "peakless", "6", "--riordan"});
    CHECK(contains(rp.out, "g: 1 1 1 2 5 12\n"));
    CHECK(contains(rp.out, "f: 0 1 1 1 2 5\n"));
    const Run rj = run({"triangle", "uuless", "4", "--reindex-g", "--riordan", "--format", "json"});
    CHECK(contains(rj.out, "\"riordan\":{\"g\":[1,1,1,2],\"f\":[0,1,1,2]}"));

    CHECK(run({"triangle", "peakless", "4", "--reindex-g"}).code == kExitUsage);
    CHECK(run({"triangle", "uuless", "4", "--riordan"}).code == kExitUsage);
    CHECK(run({"triangle", "peakless", "0"}).code == kExitUsage);
}

TEST_CASE("series")
{
    CHECK(run({"series", "total1", "peakless", "9"}).out == "1 2 4 9 22 56 146 388 1048 2869\n");
    CHECK(run({"series", "total0", "uuless", "9"}).out == "1 1 2 4 9 20 47 112 274 679\n");
    CHECK(run({"series", "aseq", "peakless", "10"}).out == "1 1 0 1 0 1 -1 2 -3 6 -10\n");
    CHECK(run({"series", "zseq", "peakless", "9"}).out == "1 0 1 0 1 -1 2 -3 6 -10\n");
    CHECK(run({"series", "catalan", "4"}).out == "1 1 2 5 14\n");
    CHECK(run({"series", "total0", "none", "5"}).out == "1 1 2 5 13 36\n");

    CHECK(run({"series", "catalan", "2", "--format", "bfile"}).out == "0 1\n1 1\n2 2\n");
    CHECK(run({"series", "catalan", "2", "--format", "bfile", "--offset", "1"}).out == "1 1\n2 1\n3 2\n");
    CHECK(run({"series", "aseq", "peakless", "7", "--format", "json"}).out ==
          "{\"series\":\"aseq peakless\",\"offset\":0,\"terms\":[1,1,0,1,0,1,-1,2]}\n");
    CHECK(run({"series", "aseq", "peakless", "7", "--format", "csv"}).out ==
          "index,value\n0,1\n1,1\n2,0\n3,1\n4,0\n5,1\n6,-1\n7,2\n");

    CHECK(run({"series", "bogus", "peakless", "3"}).code == kExitUsage);
    CHECK(run({"series", "total1"}).code == kExitUsage);
    CHECK(run({"series", "total1", "peakless", "x"}).code == kExitUsage);
    CHECK(run({"series", "aseq", "none", "3"}).code == kExitUsage);
}

TEST_CASE("default order from the environment")
{
    CHECK(numbers(run({"series", "catalan"}).out).size() == 32);
    setenv("AIRPOCKETS_ORDER", "5", 1);
    CHECK(run({"series", "catalan"}).out == "1 1 2 5 14\n");
    setenv("AIRPOCKETS_ORDER", "zero", 1);
    CHECK(run({"series", "catalan"}).code == kExitUsage);
    unsetenv("AIRPOCKETS_ORDER");
}

TEST_CASE("bijection")
{
    CHECK(run({"bijection", "psi", "UUHDHUHUHD3HH"}).out == "UUUUUUDDDUDDUUDDUDDDUDUD\n");
    CHECK(run({"bijection", "chi", "UHUHD2UDUHUHHUD3H"}).out == "UUHDDUDUUUDHDDH\n");
    CHECK(run({"bijection", "phi", ""}).out == "H\n");

    const Run t = run({"bijection", "psi", "UUHDHUHUHD3HH", "--trace"});
    CHECK(t.code == kExitOk);
    CHECK(contains(t.out, "psi(UUHDHUHUHD3HH) = UUUUUUDDDUDDUUDDUDDDUDUD  by (2)"));
    CHECK(contains(t.out, "\n  psi(UHDH) = UUUDDDUD"));
    CHECK(contains(run({"bijection", "phi", "UUHD2", "--trace"}).out, "(5)"));
    CHECK(contains(run({"bijection", "chi", "UHUHD2UDUHUHHUD3H", "--trace"}).out, "(6)"));

    const Run bad = run({"bijection", "psi", "UD"});
    CHECK(bad.code == kExitUsage);
    CHECK(contains(bad.err, "not peakless"));
    CHECK(run({"bijection", "omega", "H"}).code == kExitUsage);
    CHECK(run({"bijection", "psi", "UX"}).code == kExitUsage);
}

TEST_CASE("verify")
{
    const Run b = run({"verify", "--suite", "bijections", "--nmax", "9"});
    CHECK(b.code == kExitOk);
    CHECK(contains(b.out, "PASS bijections/psi n=09"));
    CHECK(contains(b.out, "505=505"));
    CHECK(contains(b.out, "679=679"));

    const Run s = run({"verify", "--suite", "systems"});
    CHECK(s.code == kExitOk);
    CHECK(contains(s.out, "residuals vanish through z^32"));
    CHECK_FALSE(contains(s.out, "FAIL"));

    CHECK(run({"verify", "--suite", "riordan", "--nmax", "8"}).code == kExitOk);
    CHECK(run({"verify", "--suite", "nope"}).code == kExitUsage);
    CHECK(run({"verify", "--nmax", "0"}).code == kExitUsage);
}

TEST_CASE("render")
{
    CHECK(run({"render", "UHD"}).out == " _\n/ \\\n");
    const Run e = run({"render", ""});
    CHECK(e.code == kExitOk);
    CHECK(e.out.empty());
    CHECK(run({"render", "UUHDHUHUHD3HH"}).out ==
          "        _\n"
          "  _   _/ \\\n"
          " / \\_/   |\n"
          "/        |__\n");
    CHECK(run({"render", "HH"}).out == "__\n");
    CHECK(run({"render", "UUDD"}).out == " /\\\n/  \\\n");
    CHECK(run({"render", "UQ"}).code == kExitUsage);
}

TEST_CASE("usage")
{
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    const Run h = run({"--help"});
    CHECK(h.code == kExitOk);
    CHECK(contains(h.out, "triangle"));
}
