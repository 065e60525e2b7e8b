#include "mcperm/matrices.hpp"

#include <algorithm>
#include <sstream>

namespace mcperm {

FerrersMatrix::FerrersMatrix(int rows, std::vector<int> heights) : rows_(rows), heights_(std::move(heights)) {
    if (rows_ <= 0) throw std::invalid_argument("Ferrers matrix needs at least one row");
    if (heights_.empty()) throw std::invalid_argument("Ferrers matrix needs at least one column");
    int prev = 0;
    for (int h : heights_) {
        if (h < 0 || h > rows_)
            throw std::invalid_argument("Ferrers height out of range [0, rows]");
        if (h < prev) throw std::invalid_argument("Ferrers heights must be weakly increasing");
        prev = h;
    }
}

FerrersMatrix ferrers_from_heights(int rows, int cols, std::vector<int> heights) {
    if (static_cast<int>(heights.size()) != cols)
        throw std::invalid_argument("height vector length must equal the column count");
    return FerrersMatrix(rows, std::move(heights));
}

FerrersMatrix FerrersMatrix::dual() const {
    const int m = rows_, n = cols();
    std::vector<int> h(static_cast<size_t>(m));
    for (int j = 1; j <= m; ++j) {
        int count = 0;  // rows of the dual column j holding a one: {i : h_i < j}
        for (int i = 0; i < n; ++i)
            if (heights_[static_cast<size_t>(i)] < j) ++count;
        h[static_cast<size_t>(j - 1)] = count;
    }
    return FerrersMatrix(n, std::move(h));
}

FerrersMatrix FerrersMatrix::truncate() const {
    if (rows_ < 2 || cols() < 2)
        throw std::invalid_argument("truncate requires at least 2 rows and 2 columns");
    std::vector<int> h(heights_.begin(), heights_.end() - 1);
    for (int& x : h) x = std::min(x, rows_ - 1);
    return FerrersMatrix(rows_ - 1, std::move(h));
}

std::string FerrersMatrix::str() const {
    std::ostringstream os;
    os << rows_ << "x" << cols() << " h=(";
    for (size_t j = 0; j < heights_.size(); ++j) {
        if (j) os << ",";
        os << heights_[j];
    }
    os << ")";
    return os.str();
}

std::vector<FerrersMatrix> enumerate_ferrers(int rows, int cols) {
    std::vector<FerrersMatrix> out;
    std::vector<int> h(static_cast<size_t>(cols), 0);
    while (true) {
        out.emplace_back(rows, h);
        // next weakly increasing vector in lex order
        int j = cols - 1;
        while (j >= 0 && h[static_cast<size_t>(j)] == rows) --j;
        if (j < 0) break;
        // minimal completion of the suffix keeps the vector weakly increasing
        const int v = ++h[static_cast<size_t>(j)];
        for (int k = j + 1; k < cols; ++k) h[static_cast<size_t>(k)] = v;
    }
    return out;
}

FerrersMatrix eulerian_matrix(int n) {
    if (n < 1) throw std::invalid_argument("eulerian_matrix: n must be positive");
    std::vector<int> h(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) h[static_cast<size_t>(j)] = j;
    return FerrersMatrix(n, std::move(h));
}

FerrersMatrix multiset_eulerian_matrix(const std::vector<int>& v) {
    if (v.empty()) throw std::invalid_argument("multiset_eulerian_matrix: empty content vector");
    for (int x : v)
        if (x < 1) throw std::invalid_argument("multiset_eulerian_matrix: entries must be >= 1");
    std::vector<int> h;
    int below = 0;
    for (int x : v) {
        for (int k = 0; k < x; ++k) h.push_back(below);
        below += x;
    }
    return FerrersMatrix(below, std::move(h));
}

FerrersMatrix pad_rows(const FerrersMatrix& a, int count) {
    if (count < 0) throw std::invalid_argument("pad_rows: negative count");
    return FerrersMatrix(a.rows() + count, a.heights());
}

FerrersMatrix pad_cols(const FerrersMatrix& a, int count) {
    if (count < 0) throw std::invalid_argument("pad_cols: negative count");
    std::vector<int> h(static_cast<size_t>(count), 0);
    h.insert(h.end(), a.heights().begin(), a.heights().end());
    return FerrersMatrix(a.rows(), std::move(h));
}

MonotoneColumnMatrix::MonotoneColumnMatrix(NumericMatrix m) : m_(std::move(m)) {
    for (int j = 0; j < m_.cols; ++j)
        for (int i = 0; i + 1 < m_.rows; ++i)
            if (m_.at(i, j) < m_.at(i + 1, j))
                throw std::invalid_argument("columns must be weakly decreasing");
}

MonotoneColumnMatrix::MonotoneColumnMatrix(int rows, int cols, std::vector<Rational> cells)
    : MonotoneColumnMatrix([&] {
          NumericMatrix m(rows, cols);
          if (cells.size() != m.cells.size())
              throw std::invalid_argument("cell count does not match dimensions");
          m.cells = std::move(cells);
          return m;
      }()) {}

bool MonotoneColumnMatrix::nonnegative() const {
    for (const auto& c : m_.cells)
        if (sgn(c) < 0) return false;
    return true;
}

Rational MonotoneColumnMatrix::column_sum(int j) const {
    Rational s(0);
    for (int i = 0; i < rows(); ++i) s += at(i, j);
    return s;
}

std::string MonotoneColumnMatrix::str() const {
    std::ostringstream os;
    os << rows() << "x" << cols() << " [";
    for (int i = 0; i < rows(); ++i) {
        if (i) os << "; ";
        for (int j = 0; j < cols(); ++j) {
            if (j) os << ",";
            os << at(i, j).get_str();
        }
    }
    os << "]";
    return os.str();
}

MonotoneColumnMatrix to_monotone(const FerrersMatrix& a) {
    NumericMatrix m(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m.at(i, j) = Rational(a.entry(i, j) ? 1 : 0);
    return MonotoneColumnMatrix(std::move(m));
}

MonotoneColumnMatrix columns_to_ones(const MonotoneColumnMatrix& a, const std::set<int>& cols) {
    NumericMatrix m = a.matrix();
    for (int j : cols) {
        if (j < 0 || j >= a.cols()) throw std::out_of_range("columns_to_ones: column index");
        for (int i = 0; i < a.rows(); ++i) m.at(i, j) = Rational(1);
    }
    return MonotoneColumnMatrix(std::move(m));
}

MonotoneColumnMatrix pad_rows(const MonotoneColumnMatrix& a, int count) {
    if (count < 0) throw std::invalid_argument("pad_rows: negative count");
    if (count == 0) return a;
    NumericMatrix m(a.rows() + count, a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    return MonotoneColumnMatrix(std::move(m));
}

MonotoneColumnMatrix pad_cols(const MonotoneColumnMatrix& a, int count) {
    if (count < 0) throw std::invalid_argument("pad_cols: negative count");
    if (count == 0) return a;
    NumericMatrix m(a.rows(), a.cols() + count);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    return MonotoneColumnMatrix(std::move(m));
}

MonotoneColumnMatrix random_monotone_matrix(int rows, int cols, long lo, long hi, long max_den,
                                            uint64_t seed) {
    if (lo > hi) throw std::invalid_argument("random_monotone_matrix: empty range");
    if (max_den < 1) throw std::invalid_argument("random_monotone_matrix: bad denominator bound");
    SplitMix64 rng(seed);
    NumericMatrix m(rows, cols);
    for (int j = 0; j < cols; ++j) {
        std::vector<Rational> col(static_cast<size_t>(rows));
        for (auto& x : col) {
            const long den = static_cast<long>(rng.range(1, max_den));
            const long num = static_cast<long>(rng.range(lo * den, hi * den));
            x = Rational(num, den);
            x.canonicalize();
        }
        std::sort(col.begin(), col.end(), [](const Rational& a, const Rational& b) { return a > b; });
        for (int i = 0; i < rows; ++i) m.at(i, j) = col[static_cast<size_t>(i)];
    }
    return MonotoneColumnMatrix(std::move(m));
}

SymbolicMatrix build_B(const FerrersMatrix& a) {
    SymbolicMatrix b(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            b.at(i, j) = Polynomial::variable(a.entry(i, j) ? yvar(static_cast<uint32_t>(j + 1))
                                                            : xvar(static_cast<uint32_t>(i + 1)));
    return b;
}

SymbolicMatrix build_B_swapped(const FerrersMatrix& a) {
    SymbolicMatrix b(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            b.at(i, j) = Polynomial::variable(a.entry(i, j) ? xvar(static_cast<uint32_t>(j + 1))
                                                            : yvar(static_cast<uint32_t>(i + 1)));
    return b;
}

SymbolicMatrix build_JZ_plus_A(const MonotoneColumnMatrix& a) {
    SymbolicMatrix m(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            m.at(i, j) = Polynomial::variable(zvar(static_cast<uint32_t>(j + 1))) +
                         Polynomial::constant(a.at(i, j));
    return m;
}

SymbolicMatrix build_Y_form(const FerrersMatrix& a) {
    SymbolicMatrix m(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            m.at(i, j) = a.entry(i, j)
                             ? Polynomial::variable(yvar(static_cast<uint32_t>(j + 1)))
                             : Polynomial::constant(Rational(1));
    return m;
}

SymbolicMatrix add_t_times_ones(const SymbolicMatrix& m, VariableId t) {
    SymbolicMatrix r = m;
    const Polynomial tp = Polynomial::variable(t);
    for (auto& cell : r.cells) cell += tp;
    return r;
}

SymbolicMatrix to_symbolic(const NumericMatrix& m) {
    SymbolicMatrix r(m.rows, m.cols);
    for (size_t k = 0; k < m.cells.size(); ++k) r.cells[k] = Polynomial::constant(m.cells[k]);
    return r;
}

}  // namespace mcperm
