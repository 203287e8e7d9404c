#include "ff.hpp"

#include <algorithm>
#include <cstring>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace blockeq::ff {

bool isSupportedPrime(unsigned p) {
    switch (p) {
        case 2: case 3: case 5: case 7: case 11: case 13: return true;
        default: return false;
    }
}

uint8_t ffInv(unsigned p, uint8_t a) {
    if (a == 0) throw std::domain_error("ff: inverse of zero");
    for (unsigned x = 1; x < p; ++x)
        if ((a * x) % p == 1) return uint8_t(x);
    throw std::domain_error("ff: modulus not prime");
}

namespace {

constexpr uint64_t kLow = 0x0101010101010101ull;
constexpr uint64_t kHigh = 0x8080808080808080ull;

// Lanewise "subtract m where lane >= m"; valid while every lane < 128.
inline uint64_t reduceStep(uint64_t t, uint64_t mlane) {
    uint64_t ge = ((t | kHigh) - mlane * kLow) & kHigh;
    return t - ((ge >> 7) * mlane);
}

// Reduce lanes holding values <= (p-1) + (p-1)^2 (<= 156 for p <= 13) mod p.
inline uint64_t reduceLanes(uint64_t t, unsigned p) {
    if (p == 13) {
        // only p = 13 can exceed 127; clear the high range first
        uint64_t hb = t & kHigh;
        t -= (hb >> 7) * 104; // 8 * 13
    }
    t = reduceStep(t, uint64_t(8 * p));
    t = reduceStep(t, uint64_t(4 * p));
    t = reduceStep(t, uint64_t(2 * p));
    t = reduceStep(t, uint64_t(p));
    return t;
}

} // namespace

void addMulRow(uint8_t* dst, const uint8_t* src, size_t n, uint8_t c, unsigned p) {
    if (c == 0) return;
    size_t i = 0;
    if (p == 2) {
        for (; i + 8 <= n; i += 8) {
            uint64_t a, b;
            std::memcpy(&a, dst + i, 8);
            std::memcpy(&b, src + i, 8);
            a ^= b;
            std::memcpy(dst + i, &a, 8);
        }
        for (; i < n; ++i) dst[i] ^= src[i];
        return;
    }
    // byte lanes: dst + c*src <= (p-1) + (p-1)^2 <= 156 < 208, no carries since
    // c*src lane products <= 144 < 256.
    for (; i + 8 <= n; i += 8) {
        uint64_t a, b;
        std::memcpy(&a, dst + i, 8);
        std::memcpy(&b, src + i, 8);
        uint64_t t = a + b * uint64_t(c);
        t = reduceLanes(t, p);
        std::memcpy(dst + i, &t, 8);
    }
    for (; i < n; ++i) dst[i] = uint8_t((dst[i] + c * src[i]) % p);
}

void scaleRow(uint8_t* row, size_t n, uint8_t c, unsigned p) {
    if (c == 1) return;
    size_t i = 0;
    if (c == 0) {
        std::memset(row, 0, n);
        return;
    }
    for (; i + 8 <= n; i += 8) {
        uint64_t a;
        std::memcpy(&a, row + i, 8);
        uint64_t t = a * uint64_t(c);
        t = reduceLanes(t, p);
        std::memcpy(row + i, &t, 8);
    }
    for (; i < n; ++i) row[i] = uint8_t((row[i] * c) % p);
}

Matrix::Matrix(unsigned p, size_t rows, size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {
    if (!isSupportedPrime(p)) throw std::invalid_argument("ff: unsupported modulus");
}

Matrix Matrix::identity(unsigned p, size_t n) {
    Matrix m(p, n, n);
    for (size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(p_, cols_, rows_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c)
            t.set(c, r, at(r, c));
    return t;
}

Matrix Matrix::multiply(const Matrix& rhs) const {
    if (p_ != rhs.p_) throw std::invalid_argument("ff: modulus mismatch");
    if (cols_ != rhs.rows_) throw std::invalid_argument("ff: shape mismatch in multiply");
    Matrix out(p_, rows_, rhs.cols_);
    for (size_t i = 0; i < rows_; ++i) {
        uint8_t* o = out.row(i);
        const uint8_t* a = row(i);
        for (size_t k = 0; k < cols_; ++k)
            if (a[k]) addMulRow(o, rhs.row(k), rhs.cols_, a[k], p_);
    }
    return out;
}

Matrix Matrix::add(const Matrix& rhs) const {
    if (p_ != rhs.p_ || rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("ff: shape mismatch in add");
    Matrix out = *this;
    addMulRow(out.data_.data(), rhs.data_.data(), data_.size(), 1, p_);
    return out;
}

Matrix Matrix::sub(const Matrix& rhs) const {
    if (p_ != rhs.p_ || rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("ff: shape mismatch in sub");
    Matrix out = *this;
    addMulRow(out.data_.data(), rhs.data_.data(), data_.size(), uint8_t(p_ - 1), p_);
    return out;
}

Matrix Matrix::scaled(uint8_t c) const {
    Matrix out = *this;
    scaleRow(out.data_.data(), out.data_.size(), uint8_t(c % p_), p_);
    return out;
}

Matrix Matrix::kronecker(const Matrix& rhs) const {
    if (p_ != rhs.p_) throw std::invalid_argument("ff: modulus mismatch in kronecker");
    Matrix out(p_, rows_ * rhs.rows_, cols_ * rhs.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) {
            uint8_t a = at(i, j);
            if (!a) continue;
            for (size_t r = 0; r < rhs.rows_; ++r) {
                uint8_t* o = out.row(i * rhs.rows_ + r) + j * rhs.cols_;
                const uint8_t* s = rhs.row(r);
                for (size_t c = 0; c < rhs.cols_; ++c)
                    o[c] = uint8_t((a * s[c]) % p_);
            }
        }
    return out;
}

Matrix Matrix::vstack(const Matrix& top, const Matrix& bottom) {
    if (top.empty()) return bottom;
    if (bottom.empty()) return top;
    if (top.p() != bottom.p() || top.cols() != bottom.cols())
        throw std::invalid_argument("ff: shape mismatch in vstack");
    Matrix out(top.p(), top.rows() + bottom.rows(), top.cols());
    std::memcpy(out.data().data(), top.data().data(), top.data().size());
    std::memcpy(out.data().data() + top.data().size(), bottom.data().data(), bottom.data().size());
    return out;
}

Matrix Matrix::submatrixRows(const std::vector<size_t>& rowIdx) const {
    Matrix out(p_, rowIdx.size(), cols_);
    for (size_t i = 0; i < rowIdx.size(); ++i)
        std::memcpy(out.row(i), row(rowIdx[i]), cols_);
    return out;
}

Matrix Matrix::submatrixCols(const std::vector<size_t>& colIdx) const {
    Matrix out(p_, rows_, colIdx.size());
    for (size_t r = 0; r < rows_; ++r)
        for (size_t i = 0; i < colIdx.size(); ++i)
            out.set(r, i, at(r, colIdx[i]));
    return out;
}

bool Matrix::isZero() const {
    return std::all_of(data_.begin(), data_.end(), [](uint8_t v) { return v == 0; });
}

bool Matrix::isIdentity() const {
    if (rows_ != cols_) return false;
    return *this == identity(p_, rows_);
}

Matrix rowToMatrix(unsigned p, const RowVec& v) {
    Matrix m(p, 1, v.size());
    std::memcpy(m.row(0), v.data(), v.size());
    return m;
}

RrefResult rref(const Matrix& m) {
    RrefResult res;
    res.reduced = m;
    Matrix& a = res.reduced;
    size_t nr = a.rows(), nc = a.cols();
    unsigned p = a.p();
    size_t r = 0;
    for (size_t c = 0; c < nc && r < nr; ++c) {
        size_t piv = nr;
        for (size_t i = r; i < nr; ++i)
            if (a.at(i, c)) { piv = i; break; }
        if (piv == nr) continue;
        if (piv != r)
            for (size_t j = 0; j < nc; ++j) {
                uint8_t t = a.at(r, j);
                a.set(r, j, a.at(piv, j));
                a.set(piv, j, t);
            }
        uint8_t inv = ffInv(p, a.at(r, c));
        scaleRow(a.row(r), nc, inv, p);
        for (size_t i = 0; i < nr; ++i) {
            if (i == r) continue;
            uint8_t v = a.at(i, c);
            if (v) addMulRow(a.row(i), a.row(r), nc, ffNeg(p, v), p);
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    // drop zero rows so subspace equality is matrix equality
    Matrix cleaned(a.p(), res.rank, nc);
    for (size_t i = 0; i < res.rank; ++i)
        std::memcpy(cleaned.row(i), a.row(i), nc);
    res.reduced = std::move(cleaned);
    return res;
}

size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix nullspaceBasis(const Matrix& m) {
    RrefResult r = rref(m);
    size_t nc = m.cols();
    unsigned p = m.p();
    std::vector<bool> isPivot(nc, false);
    for (size_t c : r.pivots) isPivot[c] = true;
    std::vector<size_t> freeCols;
    for (size_t c = 0; c < nc; ++c)
        if (!isPivot[c]) freeCols.push_back(c);
    Matrix out(p, freeCols.size(), nc);
    for (size_t i = 0; i < freeCols.size(); ++i) {
        size_t fc = freeCols[i];
        out.set(i, fc, 1);
        for (size_t pr = 0; pr < r.rank; ++pr)
            out.set(i, r.pivots[pr], ffNeg(p, r.reduced.at(pr, fc)));
    }
    return out;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    size_t n = m.rows();
    Matrix aug(m.p(), n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        std::memcpy(aug.row(i), m.row(i), n);
        aug.set(i, n + i, 1);
    }
    RrefResult r = rref(aug);
    if (r.rank != n) return std::nullopt;
    for (size_t i = 0; i < n; ++i)
        if (r.pivots[i] != i) return std::nullopt;
    Matrix inv(m.p(), n, n);
    for (size_t i = 0; i < n; ++i)
        std::memcpy(inv.row(i), r.reduced.row(i) + n, n);
    return inv;
}

bool isInvertible(const Matrix& m) {
    return m.rows() == m.cols() && rank(m) == m.rows();
}

std::optional<RowVec> solveLeft(const Matrix& a, const RowVec& b) {
    // x * a = b  <=>  a^T * x^T = b^T; solve via rref of [a^T | b^T]
    Matrix at = a.transpose();
    size_t n = at.rows();
    Matrix aug(a.p(), n, at.cols() + 1);
    for (size_t i = 0; i < n; ++i) {
        std::memcpy(aug.row(i), at.row(i), at.cols());
        aug.set(i, at.cols(), b[i]);
    }
    RrefResult r = rref(aug);
    RowVec x(at.cols(), 0);
    for (size_t i = 0; i < r.rank; ++i) {
        if (r.pivots[i] == at.cols()) return std::nullopt; // inconsistent
        x[r.pivots[i]] = r.reduced.at(i, at.cols());
    }
    return x;
}

RowVec EchelonBasis::reduce(RowVec v) const {
    for (size_t i = 0; i < rows_.size(); ++i) {
        uint8_t c = v[pivotCols_[i]];
        if (c) addMulRow(v.data(), rows_[i].data(), width_, ffNeg(p_, c), p_);
    }
    return v;
}

bool EchelonBasis::insert(RowVec v) {
    v = reduce(std::move(v));
    size_t piv = width_;
    for (size_t j = 0; j < width_; ++j)
        if (v[j]) { piv = j; break; }
    if (piv == width_) return false;
    uint8_t inv = ffInv(p_, v[piv]);
    scaleRow(v.data(), width_, inv, p_);
    // back-substitute into existing rows
    for (size_t i = 0; i < rows_.size(); ++i) {
        uint8_t c = rows_[i][piv];
        if (c) addMulRow(rows_[i].data(), v.data(), width_, ffNeg(p_, c), p_);
    }
    // keep sorted by pivot column
    size_t pos = 0;
    while (pos < pivotCols_.size() && pivotCols_[pos] < piv) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivotCols_.insert(pivotCols_.begin() + pos, piv);
    return true;
}

bool EchelonBasis::contains(const RowVec& v) const {
    RowVec r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](uint8_t x) { return x == 0; });
}

Matrix EchelonBasis::toMatrix() const {
    Matrix m(p_, rows_.size(), width_);
    for (size_t i = 0; i < rows_.size(); ++i)
        std::memcpy(m.row(i), rows_[i].data(), width_);
    return m;
}

std::optional<RowVec> EchelonBasis::coordinates(const RowVec& v) const {
    RowVec coords(rows_.size(), 0);
    RowVec w = v;
    for (size_t i = 0; i < rows_.size(); ++i) {
        uint8_t c = w[pivotCols_[i]];
        coords[i] = c;
        if (c) addMulRow(w.data(), rows_[i].data(), width_, ffNeg(p_, c), p_);
    }
    if (!std::all_of(w.begin(), w.end(), [](uint8_t x) { return x == 0; }))
        return std::nullopt;
    return coords;
}

Matrix spinSpace(const Matrix& seeds, const std::vector<Matrix>& generators) {
    size_t n = seeds.cols();
    unsigned p = seeds.p();
    for (const Matrix& g : generators) {
        if (g.rows() != g.cols() || g.rows() != n || g.p() != p)
            throw std::invalid_argument("spinSpace: generator shape/modulus mismatch");
    }
    EchelonBasis basis(p, n);
    for (size_t i = 0; i < seeds.rows(); ++i)
        basis.insert(RowVec(seeds.row(i), seeds.row(i) + n));
    std::vector<RowVec> queue;
    {
        Matrix b = basis.toMatrix();
        for (size_t i = 0; i < b.rows(); ++i)
            queue.emplace_back(b.row(i), b.row(i) + n);
    }
    while (!queue.empty()) {
        RowVec v = std::move(queue.back());
        queue.pop_back();
        for (const Matrix& g : generators) {
            RowVec w(n, 0);
            for (size_t k = 0; k < n; ++k)
                if (v[k]) addMulRow(w.data(), g.row(k), n, v[k], p);
            RowVec red = basis.reduce(w);
            bool zero = std::all_of(red.begin(), red.end(), [](uint8_t x) { return x == 0; });
            if (!zero) {
                basis.insert(w);
                queue.push_back(std::move(w));
            }
        }
    }
    return basis.toMatrix();
}

void writeMeatAxe(std::ostream& os, const Matrix& m) {
    os << "1 " << m.p() << " " << m.rows() << " " << m.cols() << "\n";
    for (size_t r = 0; r < m.rows(); ++r) {
        if (m.p() <= 9) {
            for (size_t c = 0; c < m.cols(); ++c) os << char('0' + m.at(r, c));
        } else {
            for (size_t c = 0; c < m.cols(); ++c) {
                if (c) os << ' ';
                os << unsigned(m.at(r, c));
            }
        }
        os << "\n";
    }
}

Matrix readMeatAxe(std::istream& is) {
    unsigned mode = 0, p = 0;
    size_t rows = 0, cols = 0;
    if (!(is >> mode >> p >> rows >> cols))
        throw std::runtime_error("meataxe: bad header");
    if (mode != 1) throw std::runtime_error("meataxe: unsupported mode " + std::to_string(mode));
    Matrix m(p, rows, cols);
    if (p <= 9) {
        std::string line;
        std::getline(is, line); // eat rest of header line
        for (size_t r = 0; r < rows; ++r) {
            line.clear();
            // skip blank lines
            while (std::getline(is, line) && line.find_first_not_of(" \t\r") == std::string::npos) {}
            size_t c = 0;
            for (char ch : line) {
                if (ch == ' ' || ch == '\t' || ch == '\r') continue;
                if (ch < '0' || ch > '9') throw std::runtime_error("meataxe: bad digit");
                if (c >= cols) throw std::runtime_error("meataxe: row too long");
                m.set(r, c++, uint8_t(ch - '0'));
            }
            if (c != cols) throw std::runtime_error("meataxe: row too short");
        }
    } else {
        for (size_t r = 0; r < rows; ++r)
            for (size_t c = 0; c < cols; ++c) {
                unsigned v;
                if (!(is >> v)) throw std::runtime_error("meataxe: truncated data");
                m.set(r, c, uint8_t(v % p));
            }
    }
    return m;
}

std::string toMeatAxeString(const Matrix& m) {
    std::ostringstream os;
    writeMeatAxe(os, m);
    return os.str();
}

Matrix matrixFromString(const std::string& text) {
    std::istringstream is(text);
    return readMeatAxe(is);
}

void writeMeatAxeSeq(std::ostream& os, const std::vector<Matrix>& ms) {
    for (const Matrix& m : ms) writeMeatAxe(os, m);
}

std::vector<Matrix> readMeatAxeSeq(std::istream& is) {
    std::vector<Matrix> out;
    while (true) {
        is >> std::ws;
        if (is.eof() || is.peek() == EOF) break;
        out.push_back(readMeatAxe(is));
    }
    return out;
}

} // namespace blockeq::ff
