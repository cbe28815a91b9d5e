#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "ta/arrays.hpp"
#include "ta/design.hpp"

namespace ta {

// Plain-text formats, all 0-based and bit-exact under write-then-read:
//   design:      "v b" header, then b lines of space-separated sorted blocks
//   resolution:  design, then "classes:" and r lines of block indices
//   ta:          "r c v" header, then r lines of c symbol indices
//   uta:         "r c v" header, then r row-set lines and c column-set lines

std::string write_design(const BlockDesign& d);
std::string write_resolution(const Resolution& r);
std::string write_ta(const TripleArray& t);
std::string write_uta(const UnorderedTripleArray& u);

BlockDesign read_design(std::istream& in);
Resolution read_resolution(std::istream& in);
// base subtracts a fixed offset from every symbol on load (fixtures
// transcribed from the paper keep its 1-based symbols in the file).
TripleArray read_ta(std::istream& in, int base = 0);
UnorderedTripleArray read_uta(std::istream& in, int base = 0);

BlockDesign read_design_file(const std::string& path);
Resolution read_resolution_file(const std::string& path);
TripleArray read_ta_file(const std::string& path, int base = 0);
UnorderedTripleArray read_uta_file(const std::string& path, int base = 0);

using AnyObject = std::variant<BlockDesign, Resolution, UnorderedTripleArray, TripleArray>;

/// Parses a file by shape: "classes:" marker means resolution, a 2-integer
/// header means design, a 3-integer header an array (r+c data lines = uta,
/// r lines = ta). Throws std::runtime_error when nothing fits.
AnyObject read_any_file(const std::string& path, int base = 0);

const char* kind_name(const AnyObject& obj);

void write_file(const std::string& path, const std::string& contents);

} // namespace ta
