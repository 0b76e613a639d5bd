#include <doctest.h>

#include "core/zmat.hpp"

using namespace lf;

namespace {

zmat from(std::initializer_list<std::initializer_list<zint>> rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows.begin()->size()) : 0;
    zmat m(r, c);
    int i = 0;
    for (const auto& row : rows) {
        int j = 0;
        for (zint v : row) m.at(i, j++) = v;
        ++i;
    }
    return m;
}

void check_snf(const zmat& a) {
    snf_result s = smith_normal_form(a);
    CHECK(s.u * a * s.v == s.d);
    CHECK(std::abs(det(s.u)) == 1);
    CHECK(std::abs(det(s.v)) == 1);
    for (int i = 0; i + 1 < s.rank; ++i) {
        CHECK(s.d.at(i, i) > 0);
        CHECK(s.d.at(i + 1, i + 1) % s.d.at(i, i) == 0);
    }
    for (int i = 0; i < s.d.rows(); ++i)
        for (int j = 0; j < s.d.cols(); ++j)
            if (i != j) CHECK(s.d.at(i, j) == 0);
}

} // namespace

TEST_CASE("smith normal form on pinned examples") {
    {
        zmat m = from({{2}});
        snf_result s = smith_normal_form(m);
        CHECK(s.d.at(0, 0) == 2);
        check_snf(m);
    }
    {
        zmat m = zmat::identity(3);
        snf_result s = smith_normal_form(m);
        CHECK(s.rank == 3);
        for (int i = 0; i < 3; ++i) CHECK(s.d.at(i, i) == 1);
    }
    {
        zmat m = from({{2, 0}, {0, 3}});
        snf_result s = smith_normal_form(m);
        CHECK(s.d.at(0, 0) == 1);
        CHECK(s.d.at(1, 1) == 6);
        check_snf(m);
    }
}

TEST_CASE("smith normal form on random small matrices") {
    std::uint64_t state = 99;
    auto rnd = [&]() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<zint>((state >> 33) % 11) - 5;
    };
    for (int rep = 0; rep < 60; ++rep) {
        int r = 1 + static_cast<int>((rnd() + 5) % 5);
        int c = 1 + static_cast<int>((rnd() + 5) % 5);
        zmat m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) m.at(i, j) = rnd();
        check_snf(m);
    }
}

TEST_CASE("determinant is preserved by the diagonalization") {
    zmat m = from({{4, 2, 1}, {0, 3, -1}, {2, 2, 5}});
    snf_result s = smith_normal_form(m);
    zint prod = 1;
    for (int i = 0; i < 3; ++i) prod *= s.d.at(i, i);
    CHECK(std::abs(prod) == std::abs(det(m)));
}

TEST_CASE("integer solve and kernel") {
    zmat m = from({{2, 0, 1}, {0, 2, 1}});
    std::vector<zint> b = {3, 3};
    std::vector<zint> x;
    REQUIRE(solve_integer(m, b, x));
    std::vector<zint> back = mul(m, x);
    CHECK(back == b);

    std::vector<zint> odd = {1, 0};
    CHECK_FALSE(solve_integer(from({{2, 0}, {0, 2}}), odd, x));

    zmat ker = kernel_basis(from({{1, 1, 1}}));
    CHECK(ker.cols() == 2);
    for (int j = 0; j < 2; ++j) CHECK(ker.at(0, j) + ker.at(1, j) + ker.at(2, j) == 0);
}

TEST_CASE("cokernel presentations") {
    CHECK(cokernel(1, from({{2}})).str() == "Z/2");
    CHECK(cokernel(2, from({{2, 0}, {0, 3}})).str() == "Z/6");
    CHECK(cokernel(2, from({{1, 0}, {0, 1}})).trivial());
    abelian_group g = cokernel(3, from({{2, 0}, {0, 0}, {0, 0}}));
    CHECK(g.free_rank == 2);
    REQUIRE(g.torsion.size() == 1);
    CHECK(g.torsion[0] == 2);
}

TEST_CASE("quotient coordinates land in the free part") {
    // Z^2 / <(2, 0)>: free part generated by the second coordinate
    quotient_presentation q(2, from({{2}, {0}}));
    CHECK(q.group().free_rank == 1);
    auto c = q.free_coordinates({0, 5});
    REQUIRE(c.size() == 1);
    CHECK(std::abs(c[0]) == 5);
}

TEST_CASE("overflow is detected not wrapped") {
    zint big = 0x4000000000000000LL;
    CHECK_THROWS_AS((void)zmul(big, 4), error);
    CHECK_THROWS_AS((void)zadd(big, big), error);
}
