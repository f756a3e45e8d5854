#include "rotorlab/matrix.hpp"

#include <stdexcept>

namespace rotorlab {

EisMatrix EisMatrix::identity(int n) {
    EisMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Eis(1);
    return m;
}

EisMatrix EisMatrix::operator*(const EisMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("EisMatrix: shape mismatch in *");
    EisMatrix out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const Eis& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Eis& b = o(k, j);
                if (b.is_zero()) continue;
                out(i, j) += a * b;
            }
        }
    }
    return out;
}

EisMatrix EisMatrix::operator+(const EisMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("EisMatrix: shape mismatch in +");
    EisMatrix out(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + o.data_[i];
    return out;
}

EisMatrix EisMatrix::operator-(const EisMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("EisMatrix: shape mismatch in -");
    EisMatrix out(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - o.data_[i];
    return out;
}

EisMatrix EisMatrix::operator*(const Eis& c) const {
    EisMatrix out(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * c;
    return out;
}

std::vector<Eis> EisMatrix::apply(const std::vector<Eis>& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw std::invalid_argument("EisMatrix: vector length mismatch");
    std::vector<Eis> out(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!(*this)(i, j).is_zero() && !v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
    return out;
}

bool EisMatrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

std::vector<Eis> EisMatrix::column_sums() const {
    std::vector<Eis> out(cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out[j] += (*this)(i, j);
    return out;
}

int EisMatrix::rref() {
    int rank = 0;
    for (int col = 0; col < cols_ && rank < rows_; ++col) {
        // pivot choice: smallest nonzero norm keeps the rationals short
        int pivot = -1;
        Rat best;
        for (int r = rank; r < rows_; ++r) {
            if ((*this)(r, col).is_zero()) continue;
            Rat n = (*this)(r, col).norm();
            if (pivot < 0 || n < best) {
                pivot = r;
                best = n;
            }
        }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int j = col; j < cols_; ++j)
                std::swap((*this)(pivot, j), (*this)(rank, j));
        Eis inv = (*this)(rank, col).inv();
        for (int j = col; j < cols_; ++j) (*this)(rank, j) *= inv;
        for (int r = 0; r < rows_; ++r) {
            if (r == rank || (*this)(r, col).is_zero()) continue;
            Eis f = (*this)(r, col);
            for (int j = col; j < cols_; ++j)
                (*this)(r, j) -= f * (*this)(rank, j);
        }
        ++rank;
    }
    return rank;
}

std::vector<std::vector<Eis>> EisMatrix::kernel() const {
    EisMatrix m = *this;
    m.rref();
    // locate pivot column of each nonzero row
    std::vector<int> pivot_col;
    std::vector<bool> is_pivot(cols_, false);
    for (int r = 0; r < rows_; ++r) {
        int c = 0;
        while (c < cols_ && m(r, c).is_zero()) ++c;
        if (c == cols_) break;
        pivot_col.push_back(c);
        is_pivot[c] = true;
    }
    std::vector<std::vector<Eis>> basis;
    for (int free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Eis> v(cols_);
        v[free] = Eis(1);
        for (size_t r = 0; r < pivot_col.size(); ++r)
            v[pivot_col[r]] = -m(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

Eis EisMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant: not square");
    EisMatrix m = *this;
    Eis det(1);
    for (int col = 0; col < cols_; ++col) {
        int pivot = -1;
        for (int r = col; r < rows_; ++r) {
            if (!m(r, col).is_zero()) { pivot = r; break; }
        }
        if (pivot < 0) return Eis(0);
        if (pivot != col) {
            for (int j = col; j < cols_; ++j) std::swap(m(pivot, j), m(col, j));
            det = -det;
        }
        det *= m(col, col);
        Eis inv = m(col, col).inv();
        for (int r = col + 1; r < rows_; ++r) {
            if (m(r, col).is_zero()) continue;
            Eis f = m(r, col) * inv;
            for (int j = col; j < cols_; ++j) m(r, j) -= f * m(col, j);
        }
    }
    return det;
}

namespace {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

std::uint64_t int_mod(const Int& v, std::uint64_t p) {
    Int m = v % Int(p);
    if (m < 0) m += Int(p);
    return m.convert_to<std::uint64_t>();
}

// a/b mod p, or fails if p | b
bool rat_mod(const Rat& r, std::uint64_t p, std::uint64_t* out) {
    std::uint64_t den = int_mod(rat_den(r), p);
    if (den == 0) return false;
    *out = int_mod(rat_num(r), p) * pow_mod(den, p - 2, p) % p;
    return true;
}

int rank_mod(const EisMatrix& m, std::uint64_t p) {
    // primitive cube root of unity in F_p (p = 1 mod 3)
    std::uint64_t omega = 0;
    for (std::uint64_t g = 2; g < 100; ++g) {
        std::uint64_t c = pow_mod(g, (p - 1) / 3, p);
        if (c != 1) { omega = c; break; }
    }
    if (omega == 0 || (omega * omega % p + omega + 1) % p != 0) return -1;

    int rows = m.rows(), cols = m.cols();
    std::vector<std::uint64_t> a(static_cast<size_t>(rows) * cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            std::uint64_t xa, xb;
            if (!rat_mod(m(i, j).a(), p, &xa) || !rat_mod(m(i, j).b(), p, &xb)) return -1;
            a[static_cast<size_t>(i) * cols + j] = (xa + xb * omega) % p;
        }
    }
    auto at = [&](int i, int j) -> std::uint64_t& { return a[static_cast<size_t>(i) * cols + j]; };
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (at(r, col) != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int j = col; j < cols; ++j) std::swap(at(pivot, j), at(rank, j));
        std::uint64_t inv = pow_mod(at(rank, col), p - 2, p);
        for (int r = rank + 1; r < rows; ++r) {
            if (at(r, col) == 0) continue;
            std::uint64_t f = at(r, col) * inv % p;
            for (int j = col; j < cols; ++j)
                at(r, j) = (at(r, j) + p - f * at(rank, j) % p) % p;
        }
        ++rank;
    }
    return rank;
}

} // namespace

int EisMatrix::kernel_dim_upper_bound() const {
    // both primes are 1 mod 3, so F_p contains the cube roots of unity
    for (std::uint64_t p : {2147483647ULL, 2147483629ULL}) {
        int r = rank_mod(*this, p);
        if (r >= 0) return cols_ - r;
    }
    return -1;
}

EisMatrix commutator(const EisMatrix& a, const EisMatrix& b) {
    return a * b - b * a;
}

} // namespace rotorlab
