#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "airpockets/enumerator.hpp"

using namespace airpockets;

namespace {

const Avoidance kAll[] = {Avoidance::PeakLess, Avoidance::ValleyLess, Avoidance::DoubleRiseLess, Avoidance::Unrestricted};

std::vector<Integer> ints(std::initializer_list<long> v)
{
    return std::vector<Integer>(v.begin(), v.end());
}

std::vector<Integer> row(const Triangle& t, std::size_t n)
{
    std::vector<Integer> out;
    for (std::size_t k = 0; k <= n; ++k) {
        out.push_back(t.at(n, k));
    }
    return out;
}

// Independent generators: every word over the given letters, filtered by hand-written rules.
void words(std::size_t n, const std::string& letters, std::string& cur, std::vector<std::string>& out)
{
    if (cur.size() == n) {
        out.push_back(cur);
        return;
    }
    for (char c : letters) {
        cur.push_back(c);
        words(n, letters, cur, out);
        cur.pop_back();
    }
}

bool stays_up_and_returns(const std::string& w)
{
    int h = 0;
    for (char c : w) {
        h += c == 'U' ? 1 : c == 'D' ? -1 : 0;
        if (h < 0) {
            return false;
        }
    }
    return h == 0;
}

bool dyck_21_rule(const std::string& w)
{
    int h = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        h += w[i] == 'U' ? 1 : -1;
        if (i + 1 < w.size() && w[i] == 'U' && w[i + 1] == 'D' && h % 3 == 2) {
            return false;
        }
        if (i + 1 < w.size() && w[i] == 'D' && w[i + 1] == 'U' && h % 3 == 1) {
            return false;
        }
    }
    return true;
}

std::set<std::string> rendered(const std::vector<LatticePath>& paths)
{
    std::set<std::string> out;
    for (const LatticePath& p : paths) {
        out.insert(render_path(p));
    }
    return out;
}

}  // namespace

TEST_CASE("enumerate_pmap examples")
{
    CHECK(enumerate_pmap(5, Avoidance::PeakLess, 1).size() == 15);
    CHECK(enumerate_pmap(4, Avoidance::DoubleRiseLess, 0).size() == 9);
    CHECK(enumerate_pmap(4, Avoidance::ValleyLess, 0).size() == 12);
    for (Avoidance cls : kAll) {
        const auto eps = enumerate_pmap(0, cls, 0);
        REQUIRE(eps.size() == 1);
        CHECK(eps[0].empty());
    }
    CHECK(enumerate_pmap(3, Avoidance::PeakLess, 5).empty());
}

TEST_CASE("enumerate_pmap output is ordered, distinct and valid")
{
    for (Avoidance cls : kAll) {
        for (std::size_t n = 0; n <= 8; ++n) {
            const auto paths = enumerate_pmap(n, cls);
            for (std::size_t i = 0; i < paths.size(); ++i) {
                REQUIRE(paths[i].length() == n);
                REQUIRE(avoids(paths[i], cls));
                REQUIRE_FALSE(paths[i].has_consecutive_downs());
                if (i > 0) {
                    REQUIRE(paths[i - 1] < paths[i]);
                }
            }
            const Triangle t = count_table_brute(n, cls).totals();
            Integer total = 0;
            for (std::size_t k = 0; k <= n; ++k) {
                const auto at_k = enumerate_pmap(n, cls, static_cast<int>(k));
                REQUIRE(Integer(static_cast<unsigned long>(at_k.size())) == t.at(n, k));
                total += t.at(n, k);
            }
            REQUIRE(Integer(static_cast<unsigned long>(paths.size())) == total);
        }
    }
}

TEST_CASE("count_table rows")
{
    CHECK(row(count_table(8, Avoidance::PeakLess).totals(), 8) == ints({190, 248, 229, 172, 110, 62, 28, 8, 1}));
    CHECK(row(count_table(8, Avoidance::ValleyLess).totals(), 8) == ints({505, 467, 361, 241, 139, 70, 29, 8, 1}));
    CHECK(row(count_table(8, Avoidance::DoubleRiseLess).totals(), 8) == ints({274, 298, 143, 39, 5, 0, 0, 0, 0}));
    CHECK(row(count_table(3, Avoidance::Unrestricted).totals(), 1) == ints({1, 1}));
}

TEST_CASE("row sums")
{
    const std::vector<std::pair<Avoidance, std::vector<Integer>>> expected = {
        {Avoidance::PeakLess, ints({1, 2, 4, 9, 22, 56, 146, 388, 1048, 2869})},
        {Avoidance::ValleyLess, ints({1, 2, 5, 13, 34, 90, 242, 660, 1821, 5073})},
        {Avoidance::DoubleRiseLess, ints({1, 2, 4, 9, 21, 50, 122, 302, 759, 1928})},
    };
    for (const auto& [cls, sums] : expected) {
        const CountTable t = count_table(12, cls);
        for (std::size_t n = 0; n < sums.size(); ++n) {
            CHECK(t.row_sum(n) == sums[n]);
        }
    }
}

TEST_CASE("brute force and state DP agree up to length 14, split included")
{
    for (Avoidance cls : kAll) {
        CAPTURE(to_string(cls));
        const CountTable brute = count_table_brute(14, cls);
        const CountTable dp = count_table_dp(14, cls);
        CHECK(brute == dp);
        for (std::size_t n = 0; n <= 14; ++n) {
            for (std::size_t k = 0; k <= n; ++k) {
                REQUIRE(brute.total(n, k) == brute.up(n, k) + brute.down(n, k) + brute.horizontal(n, k));
            }
        }
    }
    CHECK(count_table(20, Avoidance::PeakLess) == count_table_dp(20, Avoidance::PeakLess));
}

TEST_CASE("diagonal")
{
    for (Avoidance cls : kAll) {
        const Triangle t = count_table(14, cls).totals();
        for (std::size_t n = 0; n <= 14; ++n) {
            const int want = cls == Avoidance::DoubleRiseLess && n >= 2 ? 0 : 1;
            CHECK(t.at(n, n) == want);
            CHECK(t.at(n, n + 1) == 0);
        }
    }
}

TEST_CASE("unrestricted column 0 matches the vendored b-file")
{
    std::ifstream in(std::string(AIRPOCKETS_TEST_DATA) + "/a114465.txt");
    REQUIRE(in.good());
    std::vector<std::pair<std::size_t, Integer>> terms;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::istringstream fields(line);
        std::size_t n = 0;
        std::string value;
        fields >> n >> value;
        terms.emplace_back(n, Integer(value));
    }
    REQUIRE(terms.size() >= 10);
    const Triangle t = count_table(terms.back().first, Avoidance::Unrestricted).totals();
    for (const auto& [n, v] : terms) {
        CHECK(t.at(n, 0) == v);
    }
}

TEST_CASE("restricted Dyck paths")
{
    const auto counts = ints({1, 1, 1, 2, 5, 12, 29, 73, 190, 505});
    for (std::size_t n = 0; n < counts.size(); ++n) {
        CHECK(Integer(static_cast<unsigned long>(enumerate_dyck_21(n).size())) == counts[n]);
    }
    REQUIRE(enumerate_dyck_21(0).size() == 1);
    CHECK(enumerate_dyck_21(0)[0].empty());
    CHECK(enumerate_dyck_21(2).size() == 1);

    for (std::size_t n = 0; n <= 8; ++n) {
        std::vector<std::string> all;
        std::string cur;
        words(2 * n, "UD", cur, all);
        std::set<std::string> oracle;
        for (const std::string& w : all) {
            if (stays_up_and_returns(w) && dyck_21_rule(w)) {
                oracle.insert(w);
            }
        }
        CHECK(rendered(enumerate_dyck_21(n)) == oracle);
    }
}

TEST_CASE("UHU-less Motzkin paths")
{
    const auto counts = ints({1, 1, 2, 4, 9, 20, 47, 112, 274, 679});
    for (std::size_t n = 0; n < counts.size(); ++n) {
        CHECK(Integer(static_cast<unsigned long>(enumerate_motzkin_uhu(n).size())) == counts[n]);
    }
    REQUIRE(enumerate_motzkin_uhu(1).size() == 1);
    CHECK(render_path(enumerate_motzkin_uhu(1)[0]) == "H");
    CHECK(enumerate_motzkin_uhu(3).size() == 4);

    for (std::size_t n = 0; n <= 9; ++n) {
        std::vector<std::string> all;
        std::string cur;
        words(n, "UHD", cur, all);
        std::set<std::string> oracle;
        for (const std::string& w : all) {
            if (stays_up_and_returns(w) && w.find("UHU") == std::string::npos) {
                oracle.insert(w);
            }
        }
        CHECK(rendered(enumerate_motzkin_uhu(n)) == oracle);
    }
}
