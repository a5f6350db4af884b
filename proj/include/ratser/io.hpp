#ifndef RATSER_IO_HPP
#define RATSER_IO_HPP

#include <string>

#include "ratser/wfa.hpp"

namespace ratser {

// Line-oriented UTF-8 formats with '#' comments.
//
// wfa:                              rep:
//   wfa                              rep
//   field Q | field F<p>             field Q | field F<p>
//   alphabet a b ...                 alphabet a b ...
//   state <name> [initial <s>]       dim <n>
//         [terminal <s>]             u <n scalars>
//   edge <src> <letter> <dst> <s>    v <n scalars>
//                                    mu <letter>
//                                    <n rows of n scalars>

Wfa parse_wfa(const std::string& text);
std::string serialize(const Wfa& a);

LinearRep parse_linear_rep(const std::string& text);
std::string serialize(const LinearRep& r);

// Dispatches on the header line ("wfa" or "rep"); a WFA becomes the
// associated representation.
LinearRep parse_rep_or_wfa(const std::string& text);

std::string read_file(const std::string& path);

} // namespace ratser

#endif // RATSER_IO_HPP
