#ifndef DST_IO_HPP
#define DST_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <string>

#include "dst/mass.hpp"
#include "dst/separable.hpp"

namespace dst {

// Text formats.  Both are line oriented and UTF-8:
//
//   # comment                     '#' starts a comment anywhere on a line
//   frame: a b c                  first non-comment line, element names
//   mass {a b} = 1/3              .bba entries; subsets as {name ...}
//   weight {a} = 1/2              .wgt entries; the subset may not be the
//                                 whole frame
//
// Values are exact: "p/q", an integer, or a decimal with at most nine
// fractional digits.  Unlisted subsets carry 0; listing a subset twice is an
// error; .bba masses must sum to exactly 1.
//
// Canonical emission is byte-deterministic: the frame line, then the nonzero
// entries in increasing bitmask order, values in lowest terms.

MassDistribution parse_bba(std::istream& in);
MassDistribution parse_bba_text(const std::string& text);
MassDistribution load_bba(const std::filesystem::path& path);
std::string emit_bba(const MassDistribution& m);

WeightVector parse_wgt(std::istream& in);
WeightVector parse_wgt_text(const std::string& text);
WeightVector load_wgt(const std::filesystem::path& path);
std::string emit_wgt(const WeightVector& w);

}  // namespace dst

#endif  // DST_IO_HPP
