#include "ctextile/io.hpp"

#include <fstream>
#include <sstream>

namespace ctextile {

namespace {

std::string strip(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

int parse_size_line(const std::string& line) {
    if (line.rfind("n=", 0) != 0) fail(errc::parse_error, "expected 'n=<size>' on line 1");
    int n = 0;
    try {
        n = std::stoi(strip(line.substr(2)));
    } catch (...) {
        fail(errc::parse_error, "bad size in '" + line + "'");
    }
    if (n <= 0) fail(errc::parse_error, "size must be positive");
    return n;
}

} // namespace

SymbolicMatrix read_symbolic_matrix(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) fail(errc::parse_error, "empty input");
    const int n = parse_size_line(strip(line));
    if (!std::getline(in, line)) fail(errc::parse_error, "missing alphabet line");
    line = strip(line);
    if (line.rfind("alphabet=", 0) != 0) fail(errc::parse_error, "expected 'alphabet= ...' on line 2");
    Alphabet alphabet(split_ws(line.substr(9)));

    std::vector<std::vector<std::vector<Symbol>>> cells(
        static_cast<size_t>(n), std::vector<std::vector<Symbol>>(static_cast<size_t>(n)));
    int lineno = 2;
    while (std::getline(in, line)) {
        ++lineno;
        line = strip(line);
        if (line.empty() || line[0] == '#') continue;
        size_t eq = line.find('=');
        size_t comma = line.find(',');
        if (eq == std::string::npos || comma == std::string::npos || comma > eq)
            fail(errc::parse_error, "expected '<i>,<j>= ...' on line " + std::to_string(lineno));
        int i = 0, j = 0;
        try {
            i = std::stoi(line.substr(0, comma));
            j = std::stoi(line.substr(comma + 1, eq - comma - 1));
        } catch (...) {
            fail(errc::parse_error, "bad cell indices on line " + std::to_string(lineno));
        }
        if (i < 1 || i > n || j < 1 || j > n)
            fail(errc::parse_error, "cell index out of range on line " + std::to_string(lineno));
        std::string body = strip(line.substr(eq + 1));
        size_t pos = 0;
        while (pos < body.size()) {
            size_t plus = body.find('+', pos);
            std::string tok = strip(body.substr(pos, plus == std::string::npos ? plus : plus - pos));
            if (tok.empty())
                fail(errc::parse_error, "empty symbol token on line " + std::to_string(lineno));
            cells[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)].push_back(tok);
            pos = plus == std::string::npos ? body.size() : plus + 1;
        }
    }
    return SymbolicMatrix::from_cells(n, alphabet, cells);
}

SymbolicMatrix parse_symbolic_matrix(const std::string& text) {
    std::istringstream is(text);
    return read_symbolic_matrix(is);
}

std::string write_symbolic_matrix(const SymbolicMatrix& m) {
    std::ostringstream os;
    os << "n=" << m.size() << "\n";
    os << "alphabet=";
    for (const Symbol& s : m.alphabet().symbols()) os << " " << s;
    os << "\n";
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j) {
            const auto& cell = m.cell(i, j);
            if (cell.empty()) continue;
            os << i + 1 << "," << j + 1 << "= ";
            for (size_t t = 0; t < cell.size(); ++t) {
                if (t) os << "+";
                os << m.alphabet().at(cell[t]);
            }
            os << "\n";
        }
    return os.str();
}

std::vector<std::vector<long long>> read_int_matrix(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) fail(errc::parse_error, "empty input");
    const int n = parse_size_line(strip(line));
    std::vector<std::vector<long long>> rows;
    while (std::getline(in, line)) {
        line = strip(line);
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> toks = split_ws(line);
        if (static_cast<int>(toks.size()) != n)
            fail(errc::parse_error, "expected " + std::to_string(n) + " entries per row");
        std::vector<long long> row;
        for (const std::string& tok : toks) {
            try {
                row.push_back(std::stoll(tok));
            } catch (...) {
                fail(errc::parse_error, "bad integer '" + tok + "'");
            }
        }
        rows.push_back(std::move(row));
    }
    if (static_cast<int>(rows.size()) != n)
        fail(errc::parse_error, "expected " + std::to_string(n) + " rows");
    return rows;
}

std::vector<std::vector<long long>> parse_int_matrix(const std::string& text) {
    std::istringstream is(text);
    return read_int_matrix(is);
}

std::string write_int_matrix(const std::vector<std::vector<long long>>& a) {
    std::ostringstream os;
    os << "n=" << a.size() << "\n";
    for (const auto& row : a) {
        for (size_t j = 0; j < row.size(); ++j) {
            if (j) os << " ";
            os << row[j];
        }
        os << "\n";
    }
    return os.str();
}

namespace {

std::ifstream open_or_fail(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::parse_error, "cannot open '" + path + "'");
    return in;
}

} // namespace

SymbolicMatrix load_symbolic_matrix(const std::string& path) {
    std::ifstream in = open_or_fail(path);
    return read_symbolic_matrix(in);
}

std::vector<std::vector<long long>> load_int_matrix(const std::string& path) {
    std::ifstream in = open_or_fail(path);
    return read_int_matrix(in);
}

} // namespace ctextile
