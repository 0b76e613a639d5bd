#include "zmat.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace lf {

zmat zmat::identity(int n) {
    zmat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

zmat zmat::transposed() const {
    zmat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

zmat zmat::operator*(const zmat& o) const {
    if (cols_ != o.rows_) throw error("zmat shape mismatch in mul");
    zmat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            zint aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < o.cols_; ++j)
                r.at(i, j) = zadd(r.at(i, j), zmul(aik, o.at(k, j)));
        }
    return r;
}

zmat zmat::operator-(const zmat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw error("zmat shape mismatch in sub");
    zmat r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = zsub(at(i, j), o.at(i, j));
    return r;
}

void zmat::swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void zmat::swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void zmat::add_row_multiple(int dst, int src, zint c) {
    for (int j = 0; j < cols_; ++j) at(dst, j) = zadd(at(dst, j), zmul(c, at(src, j)));
}

void zmat::add_col_multiple(int dst, int src, zint c) {
    for (int i = 0; i < rows_; ++i) at(i, dst) = zadd(at(i, dst), zmul(c, at(i, src)));
}

void zmat::negate_row(int i) {
    for (int j = 0; j < cols_; ++j) at(i, j) = zsub(0, at(i, j));
}

void zmat::negate_col(int j) {
    for (int i = 0; i < rows_; ++i) at(i, j) = zsub(0, at(i, j));
}

std::vector<zint> zmat::col(int j) const {
    std::vector<zint> v(static_cast<size_t>(rows_));
    for (int i = 0; i < rows_; ++i) v[static_cast<size_t>(i)] = at(i, j);
    return v;
}

std::vector<zint> zmat::row(int i) const {
    std::vector<zint> v(static_cast<size_t>(cols_));
    for (int j = 0; j < cols_; ++j) v[static_cast<size_t>(j)] = at(i, j);
    return v;
}

std::string zmat::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j);
    }
    os << "]";
    return os.str();
}

std::vector<zint> mul(const zmat& m, const std::vector<zint>& x) {
    if (static_cast<int>(x.size()) != m.cols()) throw error("zmat shape mismatch in mat*vec");
    std::vector<zint> r(static_cast<size_t>(m.rows()), 0);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            r[static_cast<size_t>(i)] = zadd(r[static_cast<size_t>(i)], zmul(m.at(i, j), x[static_cast<size_t>(j)]));
    return r;
}

zint det(const zmat& m) {
    if (m.rows() != m.cols()) throw error("det of non-square matrix");
    int n = m.rows();
    if (n == 0) return 1;
    // Bareiss fraction-free elimination
    zmat a = m;
    zint prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                zint num = zsub(zmul(a.at(i, j), a.at(k, k)), zmul(a.at(i, k), a.at(k, j)));
                a.at(i, j) = num / prev;  // exact by Bareiss
            }
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : zsub(0, a.at(n - 1, n - 1));
}

namespace {

// position of the entry with the smallest nonzero magnitude in a[t.., t..]
bool find_pivot(const zmat& a, int t, int& pi, int& pj) {
    zint best = 0;
    bool found = false;
    for (int i = t; i < a.rows(); ++i)
        for (int j = t; j < a.cols(); ++j) {
            zint v = a.at(i, j);
            if (v == 0) continue;
            zint av = v < 0 ? zsub(0, v) : v;
            if (!found || av < best) {
                best = av;
                pi = i;
                pj = j;
                found = true;
            }
        }
    return found;
}

// round-to-nearest quotient keeps intermediate entries small
zint near_quot(zint a, zint b) {
    zint q = a / b;
    zint r = a - q * b;
    if (2 * std::llabs(r) > std::llabs(b)) q += (a < 0) == (b < 0) ? 1 : -1;
    return q;
}

} // namespace

snf_result smith_normal_form(const zmat& input) {
    snf_result res;
    res.d = input;
    res.u = zmat::identity(input.rows());
    res.v = zmat::identity(input.cols());
    zmat& d = res.d;
    zmat& u = res.u;
    zmat& v = res.v;

    int t = 0;
    int bound = std::min(input.rows(), input.cols());
    while (t < bound) {
        int pi = 0, pj = 0;
        if (!find_pivot(d, t, pi, pj)) break;
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < d.rows(); ++i) {
                if (d.at(i, t) == 0) continue;
                zint q = near_quot(d.at(i, t), d.at(t, t));
                if (q != 0) {
                    d.add_row_multiple(i, t, zsub(0, q));
                    u.add_row_multiple(i, t, zsub(0, q));
                }
                if (d.at(i, t) != 0) {
                    // remainder smaller than the pivot: promote it
                    d.swap_rows(t, i);
                    u.swap_rows(t, i);
                    clean = false;
                }
            }
            for (int j = t + 1; j < d.cols(); ++j) {
                if (d.at(t, j) == 0) continue;
                zint q = near_quot(d.at(t, j), d.at(t, t));
                if (q != 0) {
                    d.add_col_multiple(j, t, zsub(0, q));
                    v.add_col_multiple(j, t, zsub(0, q));
                }
                if (d.at(t, j) != 0) {
                    d.swap_cols(t, j);
                    v.swap_cols(t, j);
                    clean = false;
                }
            }
            if (!clean) continue;
            // pivot must divide the rest of its block for the divisor chain
            for (int i = t + 1; i < d.rows() && clean; ++i)
                for (int j = t + 1; j < d.cols() && clean; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        d.add_row_multiple(t, i, 1);
                        u.add_row_multiple(t, i, 1);
                        clean = false;
                    }
        }
        if (d.at(t, t) < 0) {
            d.negate_row(t);
            u.negate_row(t);
        }
        ++t;
    }
    res.rank = t;
    return res;
}

bool solve_integer(const zmat& a, const std::vector<zint>& b, std::vector<zint>& x) {
    snf_result s = smith_normal_form(a);
    std::vector<zint> ub = mul(s.u, b);
    std::vector<zint> y(static_cast<size_t>(a.cols()), 0);
    for (int i = 0; i < a.rows(); ++i) {
        if (i < s.rank) {
            zint di = s.d.at(i, i);
            if (ub[static_cast<size_t>(i)] % di != 0) return false;
            y[static_cast<size_t>(i)] = ub[static_cast<size_t>(i)] / di;
        } else if (ub[static_cast<size_t>(i)] != 0) {
            return false;
        }
    }
    x = mul(s.v, y);
    return true;
}

zmat kernel_basis(const zmat& a) {
    snf_result s = smith_normal_form(a);
    int n = a.cols();
    int k = n - s.rank;
    zmat ker(n, k);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < n; ++i) ker.at(i, j) = s.v.at(i, s.rank + j);
    return ker;
}

std::string abelian_group::str() const {
    if (trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank == 1) {
        os << "Z";
        first = false;
    } else if (free_rank > 1) {
        os << "Z^" << free_rank;
        first = false;
    }
    for (zint d : torsion) {
        os << (first ? "" : " + ") << "Z/" << d;
        first = false;
    }
    return os.str();
}

quotient_presentation::quotient_presentation(int ambient, const zmat& relations) : ambient_(ambient) {
    if (relations.rows() != ambient) throw error("relation matrix has wrong ambient rank");
    snf_result s = smith_normal_form(relations);
    rank_ = s.rank;
    u_ = s.u;
    diag_.resize(static_cast<size_t>(rank_));
    for (int i = 0; i < rank_; ++i) diag_[static_cast<size_t>(i)] = s.d.at(i, i);
    group_.free_rank = ambient - rank_;
    for (int i = 0; i < rank_; ++i)
        if (diag_[static_cast<size_t>(i)] > 1) group_.torsion.push_back(diag_[static_cast<size_t>(i)]);
}

std::vector<zint> quotient_presentation::free_coordinates(const std::vector<zint>& x) const {
    std::vector<zint> w = mul(u_, x);
    return std::vector<zint>(w.begin() + rank_, w.end());
}

std::vector<zint> quotient_presentation::torsion_residues(const std::vector<zint>& x) const {
    std::vector<zint> w = mul(u_, x);
    std::vector<zint> r;
    for (int i = 0; i < rank_; ++i) {
        zint d = diag_[static_cast<size_t>(i)];
        if (d > 1) {
            zint m = w[static_cast<size_t>(i)] % d;
            if (m < 0) m += d;
            r.push_back(m);
        }
    }
    return r;
}

abelian_group cokernel(int ambient, const zmat& relation_columns) {
    return quotient_presentation(ambient, relation_columns).group();
}

} // namespace lf
