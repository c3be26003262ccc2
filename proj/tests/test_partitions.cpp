#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "yf/partitions.hpp"

#include <map>
#include <set>

using namespace yf;

namespace {

long nesting_by_quadruple_scan(const SetPartition& pi) {
    std::vector<std::pair<int, int>> arcs;
    for (int a = 1; a <= pi.n(); ++a)
        if (pi.successor(a) != 0) arcs.emplace_back(a, pi.successor(a));
    long count = 0;
    for (auto [a, b] : arcs)
        for (auto [c, d] : arcs)
            if (a < c && c < d && d < b) ++count;
    return count;
}

long path_area(const Histoire& h) {
    long area = 0;
    int height = 0;
    for (const auto& st : h.steps) {
        area += height;
        if (st.type == Histoire::Type::up) ++height;
        if (st.type == Histoire::Type::down) --height;
    }
    return area;
}

}  // namespace

TEST_CASE("counts: Bell and Catalan") {
    CHECK(enumerate_partitions(1).size() == 1);
    CHECK(enumerate_partitions(6).size() == 203);
    std::vector<size_t> bell = {1, 1, 2, 5, 15, 52, 203, 877};
    for (int n = 0; n <= 7; ++n) CHECK(enumerate_partitions(n).size() == bell[static_cast<size_t>(n)]);
    CHECK(enumerate_noncrossing(5).size() == 42);
    std::vector<size_t> catalan = {1, 1, 2, 5, 14, 42, 132, 429};
    for (int n = 0; n <= 7; ++n) CHECK(enumerate_noncrossing(n).size() == catalan[static_cast<size_t>(n)]);
}

TEST_CASE("worked example 135|29|4|678") {
    auto pi = SetPartition::parse("135|29|4|678");
    CHECK(pi.to_string() == "135|29|4|678");
    CHECK(!is_noncrossing(pi));
    CHECK(is_noncrossing(SetPartition::parse("19|235|4|678")));

    CHECK(role_of(pi, 1) == Role::opener);
    CHECK(role_of(pi, 2) == Role::opener);
    CHECK(role_of(pi, 6) == Role::opener);
    CHECK(role_of(pi, 5) == Role::closer);
    CHECK(role_of(pi, 8) == Role::closer);
    CHECK(role_of(pi, 9) == Role::closer);
    CHECK(role_of(pi, 4) == Role::singleton);
    CHECK(role_of(pi, 3) == Role::transient_);
    CHECK(role_of(pi, 7) == Role::transient_);

    auto st = stats(pi);
    CHECK(st.ell == std::vector<int>{1, 3, 5});
    CHECK(st.g == std::vector<int>{2, 3});
    CHECK(st.gamma[2] == 1);   // gamma_3
    CHECK(st.gamma[4] == 2);   // gamma_5
    CHECK(st.gamma[6] == 2);   // gamma_7
    CHECK(st.gamma[7] == 2);   // gamma_8
    CHECK(st.gamma[8] == 1);   // gamma_9
    CHECK(st.nest == 3);
    CHECK(st.nest == nesting_by_quadruple_scan(pi));
    CHECK(st.gbar1 == 1);
    CHECK(st.blocks_star == 3);
    CHECK(st.singletons == 1);

    CHECK(histoire(pi).to_string() == "UUF1F0D2UF2D2D1");
}

TEST_CASE("histoire is a bijection on all of Pi(8)") {
    for (int n = 1; n <= 8; ++n) {
        for_each_partition(n, [&](const SetPartition& pi) {
            auto h = histoire(pi);
            CHECK(histoire_inverse(h) == pi);
        });
    }
    // All-singletons partition: flat path at height 0, all colors 0.
    auto all1 = SetPartition::parse("1|2|3|4");
    CHECK(histoire(all1).to_string() == "F0F0F0F0");
    // Round trip through the string form too.
    auto pi = SetPartition::parse("135|29|4|678");
    CHECK(histoire_inverse(Histoire::parse(histoire(pi).to_string())) == pi);
    CHECK_THROWS(Histoire::parse("UD2"));  // color exceeds height
    CHECK_THROWS(Histoire::parse("D1"));   // dips below zero
    CHECK_THROWS(Histoire::parse("U"));    // open path
}

TEST_CASE("area and nest against direct computations, n <= 8") {
    for (int n = 1; n <= 8; ++n)
        for_each_partition(n, [&](const SetPartition& pi) {
            auto st = stats(pi);
            CHECK(st.nest == nesting_by_quadruple_scan(pi));
            CHECK(st.area == path_area(histoire(pi)));
            int suml = 0;
            for (int v : st.ell) suml += v;
            CHECK(suml == n);
            CHECK(st.ell[0] >= 1);
            // ell_k >= g_k holds for non-crossing partitions (where the
            // color equals the height); crossing ones can violate it, e.g.
            // 135|24 has ell_1 = 2 < g_1 = 3.
            if (is_noncrossing(pi))
                for (size_t k = 1; k < st.ell.size(); ++k) {
                    int gk = k <= st.g.size() ? st.g[k - 1] : 0;
                    CHECK(st.ell[k] >= gk);
                }
        });
    CHECK(stats(SetPartition::parse("135|24")).g == std::vector<int>{3});
}

TEST_CASE("ell is a Fibonacci composition for every partition, n <= 10") {
    for (int n = 1; n <= 10; ++n)
        for_each_partition(n, [&](const SetPartition& pi) {
            auto st = stats(pi);
            CHECK(is_fibonacci_composition(st.ell));
        });
}

TEST_CASE("noncrossing strict inequalities") {
    for (int n = 1; n <= 10; ++n)
        for_each_noncrossing(n, [&](const SetPartition& pi) {
            auto st = stats(pi);
            int p = static_cast<int>(st.ell.size()) - 1;
            if (p == 0) {
                CHECK(st.ell[0] == pi.n());
                CHECK(st.g.empty());
                return;
            }
            CHECK(static_cast<int>(st.g.size()) == p);
            for (int k = 1; k <= p; ++k) {
                int gk = st.g[static_cast<size_t>(k - 1)];
                CHECK(gk >= 1);
                if (k < p)
                    CHECK(st.ell[static_cast<size_t>(k)] > gk);
                else
                    CHECK(st.ell[static_cast<size_t>(k)] >= gk);
            }
        });
}

TEST_CASE("composition splitting cases") {
    auto s2 = split({3, 4});
    CHECK(s2.a == Composition{3, 4});
    CHECK(s2.b == Composition{3, 4});
    auto s3 = split({2, 3, 1});
    CHECK(s3.a == Composition{2, 4});
    CHECK(s3.b == Composition{3, 3});
    auto s5 = split({1, 2, 1, 1, 2});
    // m = 5, p = 2: A = (k1, k2+k3, k4+k5), B = (1-2+k1+k3+k5, 1+k2, k4).
    CHECK(s5.a == Composition{1, 3, 3});
    CHECK(s5.b == Composition{3, 3, 1});
    CHECK(s5.dep_b == Composition{2, 1});
    // A and B are always Fibonacci compositions of the same n.
    for (int n = 1; n <= 10; ++n)
        for_each_composition(n, [&](const Composition& kappa) {
            auto sp = split(kappa);
            int sa = 0, sb = 0;
            for (int v : sp.a) sa += v;
            for (int v : sp.b) sb += v;
            CHECK(sa == n);
            CHECK(sb == n);
            CHECK(is_fibonacci_composition(sp.a));
            CHECK(is_fibonacci_composition(sp.b));
        });
}

TEST_CASE("splitting lemma on NC(8): ell = A(z), g = dep(B(z))") {
    for (int n = 1; n <= 8; ++n)
        for_each_noncrossing(n, [&](const SetPartition& pi) {
            auto z = z_map(pi);
            auto sp = split(z);
            auto st = stats(pi);
            CHECK(sp.a == st.ell);
            CHECK(sp.dep_b == st.g);
        });
}

TEST_CASE("z preimage realizes every composition, n <= 10") {
    for (int n = 1; n <= 10; ++n)
        for_each_composition(n, [&](const Composition& kappa) {
            auto pi = z_preimage(kappa);
            CHECK(is_noncrossing(pi));
            CHECK(z_map(pi) == kappa);
        });
}

TEST_CASE("kappa -> (u, v) is injective on Comp(n), n <= 12") {
    for (int n = 1; n <= 12; ++n) {
        std::set<std::pair<std::string, std::string>> seen;
        long count = 0;
        for_each_composition(n, [&](const Composition& kappa) {
            auto sp = split(kappa);
            seen.insert({sp.u.to_string(), sp.v.to_string()});
            ++count;
        });
        CHECK(static_cast<long>(seen.size()) == count);
    }
}

TEST_CASE("multiplicity matrix at n = 5 matches the table") {
    auto M = multiplicity_matrix(5);
    // Order: 221, 212, 2111, 122, 1211, 1121, 1112, 11111.
    std::vector<std::vector<long>> want = {
        {1, 0, 0, 1, 0, 0, 0, 0},
        {0, 2, 0, 2, 0, 0, 0, 0},
        {0, 0, 1, 0, 3, 3, 1, 0},
        {0, 0, 0, 2, 0, 0, 0, 0},
        {0, 0, 0, 0, 4, 6, 2, 0},
        {0, 0, 0, 0, 0, 6, 3, 0},
        {0, 0, 0, 0, 0, 0, 4, 0},
        {0, 0, 0, 0, 0, 0, 0, 1},
    };
    CHECK(M.counts == want);
    long sum = 0, nonzero = 0;
    for (auto& row : M.counts)
        for (long v : row) {
            sum += v;
            nonzero += v != 0;
        }
    CHECK(sum == 42);
    CHECK(nonzero == 16);
}

TEST_CASE("multiplicity matrix structure, n <= 9") {
    std::vector<long> catalan = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862};
    for (int n = 1; n <= 9; ++n) {
        auto M = multiplicity_matrix(n);
        long sum = 0, nonzero = 0;
        size_t sz = M.level.size();
        for (size_t i = 0; i < sz; ++i) {
            CHECK(M.counts[i][i] > 0);  // diagonal entries nonzero
            for (size_t j = 0; j < sz; ++j) {
                sum += M.counts[i][j];
                nonzero += M.counts[i][j] != 0;
            }
        }
        CHECK(sum == catalan[static_cast<size_t>(n)]);
        CHECK(nonzero == (1L << (n - 1)));
        // Empirical probe of the upper-triangularity conjecture: reported,
        // not asserted.
        bool upper = true, dom = true, hikes = true;
        for (size_t i = 0; i < sz; ++i)
            for (size_t j = 0; j < sz; ++j)
                if (M.counts[i][j] != 0) {
                    if (j < i) upper = false;
                    if (!dominates(M.level[i], M.level[j])) dom = false;
                    if (total_hike(M.level[i]) != total_hike(M.level[j])) hikes = false;
                }
        MESSAGE("n=", n, " upper-triangular=", upper, " dominance=", dom, " equal-hikes=", hikes);
    }
}
