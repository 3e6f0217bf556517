#ifndef CTEXTILE_IO_HPP
#define CTEXTILE_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "ctextile/symbolic.hpp"

namespace ctextile {

// Symbolic matrix text format (UTF-8, line oriented):
//   n=<size>
//   alphabet= <sym> <sym> ...
//   <i>,<j>= <sym>+<sym>+...      (1-based; repeats encode multiplicity;
//                                  omitted cells are zero)
SymbolicMatrix read_symbolic_matrix(std::istream& in);
SymbolicMatrix parse_symbolic_matrix(const std::string& text);
std::string write_symbolic_matrix(const SymbolicMatrix& m);

// Integer matrix text format: "n=<size>" then n rows of n integers.
std::vector<std::vector<long long>> read_int_matrix(std::istream& in);
std::vector<std::vector<long long>> parse_int_matrix(const std::string& text);
std::string write_int_matrix(const std::vector<std::vector<long long>>& a);

SymbolicMatrix load_symbolic_matrix(const std::string& path);
std::vector<std::vector<long long>> load_int_matrix(const std::string& path);

} // namespace ctextile

#endif
