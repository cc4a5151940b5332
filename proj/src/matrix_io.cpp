#include "uncert/matrix_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace uncert::io {

namespace {

std::string hexfloat(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%a", v);
    return buf;
}

[[noreturn]] void fail(const std::string& source, long row, const std::string& what) {
    throw InputError("matrix file " + source + ": row " + std::to_string(row) + ": " + what);
}

std::vector<std::string> split_cells(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    return cells;
}

std::string next_line(std::istream& in, const std::string& source, long row) {
    std::string line;
    if (!std::getline(in, line)) {
        fail(source, row, "unexpected end of file");
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

CMat read_matrix_rows(std::istream& in, Eigen::Index rows, Eigen::Index cols,
                      const std::string& source, long& row_counter) {
    CMat m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        ++row_counter;
        const std::string line = next_line(in, source, row_counter);
        const auto cells = split_cells(line);
        if (static_cast<Eigen::Index>(cells.size()) != cols) {
            fail(source, row_counter,
                 "expected " + std::to_string(cols) + " cells, got " +
                     std::to_string(cells.size()));
        }
        for (Eigen::Index j = 0; j < cols; ++j) {
            m(i, j) = parse_complex_hex(cells[static_cast<size_t>(j)],
                                        source + ": row " + std::to_string(row_counter));
        }
    }
    return m;
}

} // namespace

std::string format_complex_hex(std::complex<double> z) {
    const std::string re = hexfloat(z.real());
    std::string im = hexfloat(z.imag());
    if (im[0] != '-') im.insert(im.begin(), '+');
    return re + im + "i";
}

std::complex<double> parse_complex_hex(const std::string& cell, const std::string& where) {
    const char* s = cell.c_str();
    char* end = nullptr;
    const double re = std::strtod(s, &end);
    if (end == s || (*end != '+' && *end != '-')) {
        throw InputError(where + ": bad cell '" + cell + "'");
    }
    char* end2 = nullptr;
    const double im = std::strtod(end, &end2);
    if (end2 == end || *end2 != 'i' || *(end2 + 1) != '\0') {
        throw InputError(where + ": bad cell '" + cell + "'");
    }
    if (!std::isfinite(re) || !std::isfinite(im)) {
        throw InputError(where + ": non-finite cell '" + cell + "'");
    }
    return {re, im};
}

void write_pair_csv(std::ostream& out, const FramePair& pair) {
    const Eigen::Index d = pair.ambient_dim();
    const Eigen::Index m = pair.count();
    out << d << ',' << m << '\n';
    for (Eigen::Index i = 0; i < m; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) {
            if (j) out << ',';
            out << format_complex_hex(pair.analysis()(i, j));
        }
        out << '\n';
    }
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < m; ++j) {
            if (j) out << ',';
            out << format_complex_hex(pair.synthesis()(i, j));
        }
        out << '\n';
    }
}

FramePair read_pair_csv(std::istream& in, const std::string& source) {
    long row = 1;
    const std::string header = next_line(in, source, row);
    const auto head_cells = split_cells(header);
    Eigen::Index d = 0, m = 0;
    try {
        if (head_cells.size() != 2) throw std::invalid_argument("cells");
        d = std::stol(head_cells[0]);
        m = std::stol(head_cells[1]);
    } catch (const std::exception&) {
        fail(source, row, "header must be 'd,m'");
    }
    if (d < 1 || m < d) {
        fail(source, row, "header requires 1 <= d <= m");
    }
    const CMat analysis = read_matrix_rows(in, m, d, source, row);
    const CMat synthesis = read_matrix_rows(in, d, m, source, row);
    return FramePair(analysis, synthesis);
}

void write_vector_csv(std::ostream& out, const CVec& x) {
    out << x.size() << '\n';
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        if (i) out << ',';
        out << format_complex_hex(x[i]);
    }
    out << '\n';
}

CVec read_vector_csv(std::istream& in, const std::string& source) {
    long row = 1;
    const std::string header = next_line(in, source, row);
    Eigen::Index n = 0;
    try {
        n = std::stol(header);
    } catch (const std::exception&) {
        fail(source, row, "header must be the vector length");
    }
    if (n < 1) fail(source, row, "vector length must be >= 1");
    const CMat m = read_matrix_rows(in, 1, n, source, row);
    return m.row(0).transpose();
}

} // namespace uncert::io
