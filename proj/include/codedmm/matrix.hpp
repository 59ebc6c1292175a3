#ifndef CODEDMM_MATRIX_HPP
#define CODEDMM_MATRIX_HPP

#include <charconv>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <system_error>
#include <utility>
#include <vector>

#include "codedmm/errors.hpp"
#include "codedmm/rng.hpp"

namespace codedmm {

/// Dense real matrix, row-major storage. Instances are treated as immutable
/// once built and may be shared read-only across threads; all operations on
/// them are pure functions returning new matrices.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(check_dims(rows, cols), 0.0) {}

    Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != check_dims(rows, cols)) {
            throw DimensionMismatch("Matrix: entry count " + std::to_string(entries_.size()) +
                                    " does not equal rows*cols = " + std::to_string(rows * cols));
        }
        for (double v : entries_) {
            if (!std::isfinite(v)) {
                throw ValidationError("Matrix: entries must be finite");
            }
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix out(n, n);
        for (std::size_t i = 0; i < n; ++i) out(i, i) = 1.0;
        return out;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return entries_.size(); }

    double operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    const double* row_ptr(std::size_t i) const { return entries_.data() + i * cols_; }
    double* row_ptr(std::size_t i) { return entries_.data() + i * cols_; }

    const std::vector<double>& entries() const { return entries_; }

    bool operator==(const Matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
    }

private:
    static std::size_t check_dims(std::size_t rows, std::size_t cols) {
        if (rows == 0 || cols == 0) {
            throw DimensionMismatch("Matrix: rows and cols must be positive");
        }
        return rows * cols;
    }

    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> entries_;
};

inline bool same_shape(const Matrix& a, const Matrix& b) {
    return a.rows() == b.rows() && a.cols() == b.cols();
}

inline void require_same_shape(const Matrix& a, const Matrix& b, const char* what) {
    if (!same_shape(a, b)) {
        throw DimensionMismatch(std::string(what) + ": shapes (" + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + ") vs (" + std::to_string(b.rows()) +
                                "x" + std::to_string(b.cols()) + ")");
    }
}

/// acc += w * x. Entry order is fixed, so repeated runs accumulate
/// bit-identically.
inline void add_scaled(Matrix& acc, const Matrix& x, double w) {
    require_same_shape(acc, x, "add_scaled");
    double* a = acc.row_ptr(0);
    const double* b = x.row_ptr(0);
    const std::size_t n = acc.size();
    for (std::size_t i = 0; i < n; ++i) a[i] += w * b[i];
}

inline Matrix& operator+=(Matrix& a, const Matrix& b) {
    add_scaled(a, b, 1.0);
    return a;
}

inline Matrix operator+(const Matrix& a, const Matrix& b) {
    Matrix out = a;
    out += b;
    return out;
}

inline Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix out = a;
    add_scaled(out, b, -1.0);
    return out;
}

inline Matrix operator*(const Matrix& a, double w) {
    Matrix out = a;
    double* p = out.row_ptr(0);
    for (std::size_t i = 0; i < out.size(); ++i) p[i] *= w;
    return out;
}

inline Matrix operator*(double w, const Matrix& a) { return a * w; }

/// Reference product: deterministic i-k-j loop over row-major storage.
inline Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionMismatch("matmul: a.cols = " + std::to_string(a.cols()) +
                                " != b.rows = " + std::to_string(b.rows()));
    }
    Matrix out(a.rows(), b.cols());
    const std::size_t n = a.rows(), inner = a.cols(), p = b.cols();
    for (std::size_t i = 0; i < n; ++i) {
        double* orow = out.row_ptr(i);
        const double* arow = a.row_ptr(i);
        for (std::size_t k = 0; k < inner; ++k) {
            const double aik = arow[k];
            const double* brow = b.row_ptr(k);
            for (std::size_t j = 0; j < p; ++j) orow[j] += aik * brow[j];
        }
    }
    return out;
}

inline double frobenius_norm_sq(const Matrix& m) {
    double acc = 0.0;
    const double* p = m.row_ptr(0);
    for (std::size_t i = 0; i < m.size(); ++i) acc += p[i] * p[i];
    return acc;
}

inline double frobenius_norm(const Matrix& m) { return std::sqrt(frobenius_norm_sq(m)); }

/// ||reference - candidate||_F / ||reference||_F; falls back to the absolute
/// norm of the candidate when the reference is zero.
inline double relative_frobenius_error(const Matrix& reference, const Matrix& candidate) {
    require_same_shape(reference, candidate, "relative_frobenius_error");
    const double denom = frobenius_norm(reference);
    const double diff = frobenius_norm(reference - candidate);
    if (denom == 0.0) {
        return diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    }
    return diff / denom;
}

enum class Axis { Columns, Rows };

/// The m column-blocks of A (or row-blocks of B). Concatenating the blocks
/// along the axis reconstructs the source matrix exactly.
struct BlockPartition {
    std::size_t source_rows = 0;
    std::size_t source_cols = 0;
    std::size_t m = 0;
    Axis axis = Axis::Columns;
    std::vector<Matrix> blocks;
};

inline BlockPartition partition(const Matrix& in, std::size_t m, Axis axis) {
    const std::size_t dim = (axis == Axis::Columns) ? in.cols() : in.rows();
    if (m == 0 || dim % m != 0) {
        throw IndivisibleDimension("partition: m = " + std::to_string(m) +
                                   " does not divide dimension " + std::to_string(dim));
    }
    BlockPartition part;
    part.source_rows = in.rows();
    part.source_cols = in.cols();
    part.m = m;
    part.axis = axis;
    part.blocks.reserve(m);
    const std::size_t width = dim / m;
    for (std::size_t q = 0; q < m; ++q) {
        if (axis == Axis::Columns) {
            Matrix block(in.rows(), width);
            for (std::size_t i = 0; i < in.rows(); ++i)
                for (std::size_t j = 0; j < width; ++j) block(i, j) = in(i, q * width + j);
            part.blocks.push_back(std::move(block));
        } else {
            Matrix block(width, in.cols());
            for (std::size_t i = 0; i < width; ++i)
                for (std::size_t j = 0; j < in.cols(); ++j) block(i, j) = in(q * width + i, j);
            part.blocks.push_back(std::move(block));
        }
    }
    return part;
}

inline Matrix assemble(const BlockPartition& part) {
    Matrix out(part.source_rows, part.source_cols);
    for (std::size_t q = 0; q < part.blocks.size(); ++q) {
        const Matrix& block = part.blocks[q];
        if (part.axis == Axis::Columns) {
            const std::size_t off = q * block.cols();
            for (std::size_t i = 0; i < block.rows(); ++i)
                for (std::size_t j = 0; j < block.cols(); ++j) out(i, off + j) = block(i, j);
        } else {
            const std::size_t off = q * block.rows();
            for (std::size_t i = 0; i < block.rows(); ++i)
                for (std::size_t j = 0; j < block.cols(); ++j) out(off + i, j) = block(i, j);
        }
    }
    return out;
}

/// Entrywise sum of blocks[i] over the index set, accumulated in the given
/// order. The empty index set yields the zero matrix of block shape.
inline Matrix block_sum(const std::vector<Matrix>& blocks, const std::vector<std::size_t>& indices) {
    if (blocks.empty()) {
        throw DimensionMismatch("block_sum: no blocks");
    }
    for (const Matrix& b : blocks) require_same_shape(blocks.front(), b, "block_sum");
    Matrix out(blocks.front().rows(), blocks.front().cols());
    for (std::size_t idx : indices) {
        if (idx >= blocks.size()) {
            throw std::out_of_range("block_sum: index " + std::to_string(idx) + " out of range");
        }
        out += blocks[idx];
    }
    return out;
}

inline Matrix random_uniform_matrix(std::size_t rows, std::size_t cols, double half_width, Rng& rng) {
    std::vector<double> entries(rows * cols);
    for (double& v : entries) v = (2.0 * rng.uniform01() - 1.0) * half_width;
    return Matrix(rows, cols, std::move(entries));
}

inline Matrix random_normal_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
    std::vector<double> entries(rows * cols);
    for (double& v : entries) v = rng.normal();
    return Matrix(rows, cols, std::move(entries));
}

namespace detail {

inline std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general);
    return std::string(buf, res.ptr);
}

inline double parse_double(const std::string& token, const char* context) {
    const char* begin = token.data();
    const char* end = begin + token.size();
    while (begin != end && (*begin == ' ' || *begin == '\t')) ++begin;
    while (end != begin && (*(end - 1) == ' ' || *(end - 1) == '\t' || *(end - 1) == '\r')) --end;
    double value = 0.0;
    auto res = std::from_chars(begin, end, value);
    if (res.ec != std::errc() || res.ptr != end || begin == end) {
        throw ParseError(std::string(context) + ": cannot parse number '" + token + "'");
    }
    return value;
}

} // namespace detail

/// CSV: one row per line, comma-separated decimal literals, no header.
/// Ragged rows are rejected.
inline Matrix read_matrix_csv(std::istream& in) {
    std::vector<double> entries;
    std::size_t rows = 0, cols = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() && in.peek() == std::char_traits<char>::eof()) break;
        std::size_t count = 0;
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = line.find(',', start);
            const std::string token = line.substr(start, comma == std::string::npos ? comma : comma - start);
            entries.push_back(detail::parse_double(token, "matrix csv"));
            ++count;
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (rows == 0) {
            cols = count;
        } else if (count != cols) {
            throw ParseError("matrix csv: row " + std::to_string(rows + 1) + " has " +
                             std::to_string(count) + " fields, expected " + std::to_string(cols));
        }
        ++rows;
    }
    if (rows == 0 || cols == 0) {
        throw ParseError("matrix csv: empty input");
    }
    return Matrix(rows, cols, std::move(entries));
}

inline Matrix read_matrix_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open matrix file: " + path);
    }
    try {
        return read_matrix_csv(in);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

inline void write_matrix_csv(const Matrix& m, std::ostream& out) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) out << ',';
            out << detail::format_double(m(i, j));
        }
        out << '\n';
    }
}

inline void write_matrix_csv_file(const Matrix& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot open matrix file for writing: " + path);
    }
    write_matrix_csv(m, out);
    if (!out) {
        throw IoError("write failed: " + path);
    }
}

} // namespace codedmm

#endif // CODEDMM_MATRIX_HPP
