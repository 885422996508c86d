#pragma once

#include <map>
#include <optional>
#include <vector>

#include "chom/errors.hpp"
#include "chom/rational.hpp"

namespace chom {

/// Sparse matrix over Q. Rows are maps column -> nonzero value; stored values
/// are never zero and indices are checked on insertion.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols);
    static RatMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    // Accumulates into (r,c); entries that become zero are erased.
    void add(int r, int c, const Rat& v);
    void set(int r, int c, const Rat& v);
    Rat at(int r, int c) const;
    const std::map<int, Rat>& row(int r) const { return data_[static_cast<std::size_t>(r)]; }

    bool is_zero() const;
    std::size_t nonzeros() const;

    RatMatrix transpose() const;
    RatMatrix operator*(const RatMatrix& rhs) const;
    RatMatrix operator+(const RatMatrix& rhs) const;
    RatMatrix operator-(const RatMatrix& rhs) const;
    RatMatrix scaled(const Rat& c) const;
    bool operator==(const RatMatrix& rhs) const;
    RatVec apply(const RatVec& v) const;

    // Horizontal concatenation [this | rhs].
    RatMatrix augment(const RatMatrix& rhs) const;
    RatMatrix augment_col(const RatVec& v) const;

    int rank() const;
    /// Q-basis of the null space; size = cols - rank. Exact.
    std::vector<RatVec> kernel_basis() const;
    /// Solves m x = b; nullopt when inconsistent. Free variables are set to 0.
    std::optional<RatVec> solve(const RatVec& b) const;
    /// True iff b lies in the column space.
    bool in_column_space(const RatVec& b) const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<std::map<int, Rat>> data_;
};

/// dim ker(d_out) / im(d_in) at the middle term of  . --d_in--> . --d_out--> .
/// Checks d_out * d_in = 0 exactly; throws CompositionNotZero / DimensionMismatch.
int homology_dim(const RatMatrix& d_out, const RatMatrix& d_in);

/// Reduced row echelon form. Rows have pivot coefficient 1 and are fully
/// reduced; pivot columns are ascending. Kept around by the algebra modules
/// as quotient-space bookkeeping (reduce-to-normal-form data).
struct Rref {
    std::vector<std::map<int, Rat>> rows;
    std::vector<int> pivot_cols;       // in elimination order, parallel to rows
    std::map<int, int> pivot_row;      // column -> row index
    int cols = 0;

    int rank() const { return static_cast<int>(rows.size()); }
    std::vector<int> free_cols() const;
    // Subtract multiples of rref rows until every pivot coordinate of v is 0.
    void reduce(RatVec& v) const;
};

enum class ColOrder { Forward, Reverse };

/// Column elimination order decides which columns become pivots (and so which
/// are eliminated from the complement basis); Reverse pivots on the highest
/// column indices first.
Rref rref_of(const RatMatrix& m, ColOrder order = ColOrder::Forward);

}  // namespace chom
