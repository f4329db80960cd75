#include "krsl2/linalg.hpp"

#include <stdexcept>

namespace krsl2 {

bool is_zero_vec(const KVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

KMatrix::KMatrix(Field F, int rows, int cols)
    : F_(F), r_(rows), c_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

KMatrix KMatrix::identity(Field F, int n) {
    KMatrix m(F, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

KMatrix KMatrix::from_columns(Field F, int rows, const std::vector<KVec>& cols) {
    KMatrix m(F, rows, static_cast<int>(cols.size()));
    for (int j = 0; j < m.c_; ++j)
        for (int i = 0; i < rows; ++i) m.set(i, j, cols[j].at(i));
    return m;
}

void KMatrix::add_to(int i, int j, const mpq_class& v) {
    auto& x = a_[static_cast<std::size_t>(i) * c_ + j];
    x = F_.add(x, v);
}

KVec KMatrix::column(int j) const {
    KVec v(r_);
    for (int i = 0; i < r_; ++i) v[i] = at(i, j);
    return v;
}

KVec KMatrix::apply(const KVec& x) const {
    if (static_cast<int>(x.size()) != c_) throw std::invalid_argument("KMatrix::apply: size");
    KVec y(r_);
    for (int j = 0; j < c_; ++j) {
        if (x[j] == 0) continue;
        for (int i = 0; i < r_; ++i)
            if (at(i, j) != 0) y[i] += at(i, j) * x[j];
    }
    for (auto& v : y) v = F_.reduce(v);
    return y;
}

KMatrix KMatrix::operator*(const KMatrix& o) const {
    if (c_ != o.r_) throw std::invalid_argument("KMatrix product: shape");
    KMatrix m(F_, r_, o.c_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            const mpq_class& x = at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < o.c_; ++j)
                if (o.at(k, j) != 0) m.a_[static_cast<std::size_t>(i) * m.c_ + j] += x * o.at(k, j);
        }
    for (auto& v : m.a_) v = F_.reduce(v);
    return m;
}

KMatrix KMatrix::operator+(const KMatrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("KMatrix sum: shape");
    KMatrix m = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = F_.add(a_[i], o.a_[i]);
    return m;
}

KMatrix KMatrix::operator-(const KMatrix& o) const { return *this + o.scaled(-1); }

KMatrix KMatrix::scaled(const mpq_class& c) const {
    KMatrix m = *this;
    for (auto& v : m.a_) v = F_.mul(v, c);
    return m;
}

KMatrix KMatrix::transpose() const {
    KMatrix m(F_, c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) m.a_[static_cast<std::size_t>(j) * r_ + i] = at(i, j);
    return m;
}

bool KMatrix::is_zero() const {
    for (const auto& v : a_)
        if (v != 0) return false;
    return true;
}

bool KMatrix::operator==(const KMatrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

namespace {

// Fraction-free Gauss-Jordan over Z (rows scaled to integers first): every
// intermediate entry is a minor, so divisions by the previous pivot are exact.
std::vector<int> integer_rref(std::vector<std::vector<mpz_class>>& m, int cols) {
    std::vector<int> piv;
    const int rows = static_cast<int>(m.size());
    mpz_class prev = 1, t;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int sel = -1;
        for (int i = row; i < rows; ++i)
            if (m[i][col] != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(m[sel], m[row]);
        const mpz_class p = m[row][col];
        for (int i = 0; i < rows; ++i) {
            if (i == row) continue;
            const mpz_class f = m[i][col];
            for (int j = 0; j < cols; ++j) {
                mpz_class& x = m[i][j];
                if (x == 0 && (f == 0 || m[row][j] == 0)) continue;
                x *= p;
                if (f != 0 && m[row][j] != 0) {
                    mpz_mul(t.get_mpz_t(), f.get_mpz_t(), m[row][j].get_mpz_t());
                    x -= t;
                }
                mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = p;
        piv.push_back(col);
        ++row;
    }
    return piv;
}

}  // namespace

KMatrix KMatrix::rref(std::vector<int>* pivots) const {
    if (F_.is_rational()) {
        std::vector<std::vector<mpz_class>> z(r_, std::vector<mpz_class>(c_));
        for (int i = 0; i < r_; ++i) {
            mpz_class l = 1;
            for (int j = 0; j < c_; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), at(i, j).get_den_mpz_t());
            for (int j = 0; j < c_; ++j) z[i][j] = at(i, j).get_num() * (l / at(i, j).get_den());
        }
        const std::vector<int> piv = integer_rref(z, c_);
        KMatrix m(F_, r_, c_);
        for (std::size_t k = 0; k < piv.size(); ++k) {
            const mpz_class& p = z[k][piv[k]];
            for (int j = 0; j < c_; ++j)
                if (z[k][j] != 0) m.a_[k * c_ + j] = F_.reduce(mpq_class(z[k][j], p));
        }
        if (pivots) *pivots = piv;
        return m;
    }
    KMatrix m = *this;
    std::vector<int> piv;
    int row = 0;
    for (int col = 0; col < c_ && row < r_; ++col) {
        int sel = -1;
        for (int i = row; i < r_; ++i)
            if (m.at(i, col) != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        if (sel != row)
            for (int j = 0; j < c_; ++j) std::swap(m.a_[static_cast<std::size_t>(sel) * c_ + j], m.a_[static_cast<std::size_t>(row) * c_ + j]);
        mpq_class inv = F_.inv(m.at(row, col));
        for (int j = col; j < c_; ++j) {
            auto& x = m.a_[static_cast<std::size_t>(row) * c_ + j];
            if (x != 0) x = F_.mul(x, inv);
        }
        for (int i = 0; i < r_; ++i) {
            if (i == row) continue;
            mpq_class f = m.at(i, col);
            if (f == 0) continue;
            for (int j = col; j < c_; ++j) {
                const mpq_class& y = m.at(row, j);
                if (y == 0) continue;
                auto& x = m.a_[static_cast<std::size_t>(i) * c_ + j];
                x = F_.sub(x, f * y);
            }
        }
        piv.push_back(col);
        ++row;
    }
    if (pivots) *pivots = piv;
    return m;
}

int KMatrix::rank() const {
    std::vector<int> piv;
    rref(&piv);
    return static_cast<int>(piv.size());
}

std::vector<KVec> KMatrix::kernel() const {
    std::vector<int> piv;
    KMatrix R = rref(&piv);
    std::vector<bool> is_piv(c_, false);
    for (int p : piv) is_piv[p] = true;
    std::vector<KVec> out;
    for (int free = 0; free < c_; ++free) {
        if (is_piv[free]) continue;
        KVec v(c_);
        v[free] = 1;
        for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = F_.neg(R.at(static_cast<int>(k), free));
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<KVec> KMatrix::solve(const KVec& b) const {
    Span s(F_, r_);
    for (int j = 0; j < c_; ++j) s.insert(column(j));
    return s.express(b);
}

KVec Span::reduce(KVec v, KVec* combo) const {
    for (std::size_t k = 0; k < vecs_.size(); ++k) {
        const mpq_class f = v[pivot_[k]];
        if (f == 0) continue;
        const KVec& e = vecs_[k];
        for (int i = 0; i < n_; ++i)
            if (e[i] != 0) v[i] = F_.sub(v[i], f * e[i]);
        if (combo) {
            const KVec& c = combo_[k];
            for (std::size_t j = 0; j < c.size(); ++j)
                if (c[j] != 0) (*combo)[j] = F_.add((*combo)[j], f * c[j]);
        }
    }
    return v;
}

bool Span::insert(const KVec& v) {
    if (static_cast<int>(v.size()) != n_) throw std::invalid_argument("Span::insert: dimension");
    int g = count_++;
    for (auto& c : combo_) c.resize(count_);
    KVec combo(count_);
    KVec r = reduce(v, &combo);
    int p = -1;
    for (int i = 0; i < n_; ++i)
        if (r[i] != 0) {
            p = i;
            break;
        }
    if (p < 0) return false;
    // r = v - sum combo_j g_j, so r = g - combo
    KVec c(count_);
    for (int j = 0; j < count_; ++j) c[j] = F_.neg(combo[j]);
    c[g] = F_.add(c[g], 1);
    mpq_class inv = F_.inv(r[p]);
    for (auto& x : r) x = F_.mul(x, inv);
    for (auto& x : c) x = F_.mul(x, inv);
    vecs_.push_back(std::move(r));
    pivot_.push_back(p);
    combo_.push_back(std::move(c));
    gen_index_.push_back(g);
    return true;
}

bool Span::contains(const KVec& v) const { return is_zero_vec(reduce(v, nullptr)); }

std::optional<KVec> Span::express(const KVec& v) const {
    KVec combo(count_);
    KVec r = reduce(v, &combo);
    if (!is_zero_vec(r)) return std::nullopt;
    return combo;
}

}  // namespace krsl2
