#pragma once

#include <cstdint>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace blockeq::ff {

// Supported moduli. Everything in this codebase lives over a prime field
// GF(p) with p small; entries are stored one byte each, always reduced.
bool isSupportedPrime(unsigned p);

uint8_t ffInv(unsigned p, uint8_t a);
inline uint8_t ffNeg(unsigned p, uint8_t a) { return a == 0 ? 0 : uint8_t(p - a); }

// dst += c * src over GF(p), elementwise on n bytes. SWAR-accelerated.
void addMulRow(uint8_t* dst, const uint8_t* src, size_t n, uint8_t c, unsigned p);
void scaleRow(uint8_t* row, size_t n, uint8_t c, unsigned p);

class Matrix {
public:
    Matrix() = default;
    Matrix(unsigned p, size_t rows, size_t cols);

    static Matrix identity(unsigned p, size_t n);
    static Matrix zero(unsigned p, size_t rows, size_t cols) { return Matrix(p, rows, cols); }

    unsigned p() const { return p_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    uint8_t at(size_t r, size_t c) const { return data_[r * cols_ + c]; }
    void set(size_t r, size_t c, uint8_t v) { data_[r * cols_ + c] = v; }
    const uint8_t* row(size_t r) const { return data_.data() + r * cols_; }
    uint8_t* row(size_t r) { return data_.data() + r * cols_; }
    const std::vector<uint8_t>& data() const { return data_; }
    std::vector<uint8_t>& data() { return data_; }

    bool operator==(const Matrix& o) const = default;

    Matrix transpose() const;
    Matrix multiply(const Matrix& rhs) const;
    Matrix add(const Matrix& rhs) const;
    Matrix sub(const Matrix& rhs) const;
    Matrix scaled(uint8_t c) const;
    Matrix kronecker(const Matrix& rhs) const;

    // Vertical / horizontal stacking; moduli must agree.
    static Matrix vstack(const Matrix& top, const Matrix& bottom);

    Matrix submatrixRows(const std::vector<size_t>& rowIdx) const;
    Matrix submatrixCols(const std::vector<size_t>& colIdx) const;

    bool isZero() const;
    bool isIdentity() const;

private:
    unsigned p_ = 0;
    size_t rows_ = 0, cols_ = 0;
    std::vector<uint8_t> data_;
};

// Row vector convention throughout: vectors are rows, maps act as v -> v*M.
using RowVec = std::vector<uint8_t>;

Matrix rowToMatrix(unsigned p, const RowVec& v);

struct RrefResult {
    Matrix reduced;                 // full reduced row echelon form
    size_t rank = 0;
    std::vector<size_t> pivots;     // pivot column per nonzero row
};

RrefResult rref(const Matrix& m);
size_t rank(const Matrix& m);

// Rows span the right nullspace: m * v^T = 0 for every returned row v.
Matrix nullspaceBasis(const Matrix& m);

// Inverse of a square matrix; nullopt if singular.
std::optional<Matrix> inverse(const Matrix& m);
bool isInvertible(const Matrix& m);

// Solve x * A = b for a row vector x; nullopt if inconsistent.
std::optional<RowVec> solveLeft(const Matrix& a, const RowVec& b);

// Incrementally maintained reduced echelon basis of a row space.
class EchelonBasis {
public:
    EchelonBasis(unsigned p, size_t width) : p_(p), width_(width) {}

    size_t width() const { return width_; }
    size_t rank() const { return rows_.size(); }
    unsigned p() const { return p_; }

    // Reduce v against the basis in place; returns the residue.
    RowVec reduce(RowVec v) const;
    // Insert a vector; returns true if it enlarged the space.
    bool insert(RowVec v);
    bool contains(const RowVec& v) const;

    // Basis in canonical RREF order (sorted by pivot column).
    Matrix toMatrix() const;
    const std::vector<size_t>& pivotColumns() const { return pivotCols_; }

    // Coordinates of v in the canonical basis; nullopt if v not in span.
    std::optional<RowVec> coordinates(const RowVec& v) const;

private:
    unsigned p_;
    size_t width_;
    std::vector<RowVec> rows_;          // kept fully reduced
    std::vector<size_t> pivotCols_;     // pivot of rows_[i], ascending
};

// Smallest subspace containing `seeds` and invariant under every generator,
// returned as a reduced echelon basis. Generators must be square of matching
// size and modulus.
Matrix spinSpace(const Matrix& seeds, const std::vector<Matrix>& generators);

// MeatAxe-style plain text: header "1 p rows cols", then one row per line.
// For p <= 9 a row is a digit stream, otherwise space-separated values.
// writeMeatAxe/readMeatAxe round-trip byte-identically.
void writeMeatAxe(std::ostream& os, const Matrix& m);
Matrix readMeatAxe(std::istream& is);
std::string toMeatAxeString(const Matrix& m);
Matrix matrixFromString(const std::string& text);

// A module file is just a sequence of matrices, one per group generator.
void writeMeatAxeSeq(std::ostream& os, const std::vector<Matrix>& ms);
std::vector<Matrix> readMeatAxeSeq(std::istream& is);

} // namespace blockeq::ff
