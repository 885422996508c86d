#include "chom/rat_matrix.hpp"

#include <algorithm>
#include <limits>

namespace chom {

RatMatrix::RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows)) {
    if (rows < 0 || cols < 0) throw DimensionMismatch("negative matrix dimensions");
}

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

void RatMatrix::add(int r, int c, const Rat& v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw DimensionMismatch("matrix index out of range");
    if (v == 0) return;
    auto& row = data_[static_cast<std::size_t>(r)];
    auto it = row.find(c);
    if (it == row.end()) {
        row.emplace(c, v);
    } else {
        it->second += v;
        if (it->second == 0) row.erase(it);
    }
}

void RatMatrix::set(int r, int c, const Rat& v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw DimensionMismatch("matrix index out of range");
    auto& row = data_[static_cast<std::size_t>(r)];
    if (v == 0)
        row.erase(c);
    else
        row[c] = v;
}

Rat RatMatrix::at(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw DimensionMismatch("matrix index out of range");
    const auto& row = data_[static_cast<std::size_t>(r)];
    auto it = row.find(c);
    return it == row.end() ? Rat(0) : it->second;
}

bool RatMatrix::is_zero() const {
    for (const auto& row : data_)
        if (!row.empty()) return false;
    return true;
}

std::size_t RatMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& row : data_) n += row.size();
    return n;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[static_cast<std::size_t>(r)]) t.set(c, r, v);
    return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw DimensionMismatch("matrix product shape mismatch");
    RatMatrix out(rows_, rhs.cols_);
    for (int r = 0; r < rows_; ++r)
        for (const auto& [k, v] : data_[static_cast<std::size_t>(r)])
            for (const auto& [c, w] : rhs.data_[static_cast<std::size_t>(k)])
                out.add(r, c, v * w);
    return out;
}

RatMatrix RatMatrix::operator+(const RatMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("matrix sum shape mismatch");
    RatMatrix out = *this;
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : rhs.data_[static_cast<std::size_t>(r)]) out.add(r, c, v);
    return out;
}

RatMatrix RatMatrix::operator-(const RatMatrix& rhs) const { return *this + rhs.scaled(-1); }

RatMatrix RatMatrix::scaled(const Rat& c) const {
    RatMatrix out(rows_, cols_);
    if (c == 0) return out;
    for (int r = 0; r < rows_; ++r)
        for (const auto& [col, v] : data_[static_cast<std::size_t>(r)]) out.set(r, col, v * c);
    return out;
}

bool RatMatrix::operator==(const RatMatrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

RatVec RatMatrix::apply(const RatVec& v) const {
    if (static_cast<int>(v.size()) != cols_) throw DimensionMismatch("vector length mismatch");
    RatVec out(static_cast<std::size_t>(rows_), Rat(0));
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, x] : data_[static_cast<std::size_t>(r)])
            out[static_cast<std::size_t>(r)] += x * v[static_cast<std::size_t>(c)];
    return out;
}

RatMatrix RatMatrix::augment(const RatMatrix& rhs) const {
    if (rows_ != rhs.rows_) throw DimensionMismatch("augment row mismatch");
    RatMatrix out(rows_, cols_ + rhs.cols_);
    for (int r = 0; r < rows_; ++r) {
        for (const auto& [c, v] : data_[static_cast<std::size_t>(r)]) out.set(r, c, v);
        for (const auto& [c, v] : rhs.data_[static_cast<std::size_t>(r)]) out.set(r, cols_ + c, v);
    }
    return out;
}

RatMatrix RatMatrix::augment_col(const RatVec& v) const {
    if (static_cast<int>(v.size()) != rows_) throw DimensionMismatch("augment column mismatch");
    RatMatrix out(rows_, cols_ + 1);
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, x] : data_[static_cast<std::size_t>(r)]) out.set(r, c, x);
    for (int r = 0; r < rows_; ++r) out.set(r, cols_, v[static_cast<std::size_t>(r)]);
    return out;
}

namespace {

// Column-ordered exact elimination. Pivot within a column is the candidate
// of smallest bit length (ties: fewest nonzeros, then lowest index), which
// keeps coefficient growth tame on the chain-level matrices.
struct Elim {
    std::vector<std::map<int, Rat>> work;     // candidate rows, cleared in already-processed cols
    std::vector<std::map<int, Rat>> done;     // finished pivot rows, fully reduced
    std::vector<int> pivot_cols;
};

Elim eliminate(const RatMatrix& m, ColOrder order) {
    Elim e;
    for (int r = 0; r < m.rows(); ++r)
        if (!m.row(r).empty()) e.work.push_back(m.row(r));

    for (int step = 0; step < m.cols(); ++step) {
        int c = order == ColOrder::Forward ? step : m.cols() - 1 - step;
        int best = -1;
        std::size_t best_bits = std::numeric_limits<std::size_t>::max();
        std::size_t best_nnz = std::numeric_limits<std::size_t>::max();
        for (std::size_t i = 0; i < e.work.size(); ++i) {
            auto it = e.work[i].find(c);
            if (it == e.work[i].end()) continue;
            std::size_t bits = bit_size(it->second);
            if (bits < best_bits || (bits == best_bits && e.work[i].size() < best_nnz)) {
                best = static_cast<int>(i);
                best_bits = bits;
                best_nnz = e.work[i].size();
            }
        }
        if (best < 0) continue;

        std::map<int, Rat> piv = std::move(e.work[static_cast<std::size_t>(best)]);
        e.work.erase(e.work.begin() + best);
        Rat lead = piv.at(c);
        if (lead != 1)
            for (auto& [col, v] : piv) v /= lead;

        auto cancel = [&](std::map<int, Rat>& row) {
            auto it = row.find(c);
            if (it == row.end()) return;
            Rat f = it->second;
            row.erase(it);
            for (const auto& [col, v] : piv) {
                if (col == c) continue;
                auto jt = row.find(col);
                if (jt == row.end()) {
                    row.emplace(col, -f * v);
                } else {
                    jt->second -= f * v;
                    if (jt->second == 0) row.erase(jt);
                }
            }
        };
        for (auto& row : e.work) cancel(row);
        for (auto& row : e.done) cancel(row);
        e.work.erase(std::remove_if(e.work.begin(), e.work.end(),
                                    [](const std::map<int, Rat>& r) { return r.empty(); }),
                     e.work.end());

        e.done.push_back(std::move(piv));
        e.pivot_cols.push_back(c);
    }
    return e;
}

}  // namespace

Rref rref_of(const RatMatrix& m, ColOrder order) {
    Elim e = eliminate(m, order);
    Rref out;
    out.cols = m.cols();
    out.rows = std::move(e.done);
    out.pivot_cols = std::move(e.pivot_cols);
    for (std::size_t i = 0; i < out.pivot_cols.size(); ++i)
        out.pivot_row[out.pivot_cols[i]] = static_cast<int>(i);
    return out;
}

std::vector<int> Rref::free_cols() const {
    std::vector<int> out;
    for (int c = 0; c < cols; ++c)
        if (!pivot_row.count(c)) out.push_back(c);
    return out;
}

void Rref::reduce(RatVec& v) const {
    if (static_cast<int>(v.size()) != cols) throw DimensionMismatch("reduce length mismatch");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        Rat f = v[static_cast<std::size_t>(pivot_cols[i])];
        if (f == 0) continue;
        for (const auto& [c, x] : rows[i]) v[static_cast<std::size_t>(c)] -= f * x;
    }
}

int RatMatrix::rank() const { return static_cast<int>(rref_of(*this).rows.size()); }

std::vector<RatVec> RatMatrix::kernel_basis() const {
    Rref r = rref_of(*this);
    std::vector<RatVec> out;
    for (int f : r.free_cols()) {
        RatVec v(static_cast<std::size_t>(cols_), Rat(0));
        v[static_cast<std::size_t>(f)] = 1;
        for (std::size_t i = 0; i < r.rows.size(); ++i) {
            auto it = r.rows[i].find(f);
            if (it != r.rows[i].end())
                v[static_cast<std::size_t>(r.pivot_cols[i])] = -it->second;
        }
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<RatVec> RatMatrix::solve(const RatVec& b) const {
    if (static_cast<int>(b.size()) != rows_) throw DimensionMismatch("solve rhs length mismatch");
    Rref r = rref_of(augment_col(b));
    RatVec x(static_cast<std::size_t>(cols_), Rat(0));
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        if (r.pivot_cols[i] == cols_) return std::nullopt;  // pivot in rhs column
        auto it = r.rows[i].find(cols_);
        if (it != r.rows[i].end()) x[static_cast<std::size_t>(r.pivot_cols[i])] = it->second;
    }
    return x;
}

bool RatMatrix::in_column_space(const RatVec& b) const { return solve(b).has_value(); }

int homology_dim(const RatMatrix& d_out, const RatMatrix& d_in) {
    if (d_out.cols() != d_in.rows())
        throw DimensionMismatch("homology_dim: cols(d_out) != rows(d_in)");
    if (!(d_out * d_in).is_zero())
        throw CompositionNotZero("homology_dim: d_out * d_in != 0");
    return d_out.cols() - d_out.rank() - d_in.rank();
}

}  // namespace chom
