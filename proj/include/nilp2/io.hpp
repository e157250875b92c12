#ifndef NILP2_IO_HPP
#define NILP2_IO_HPP

// Text formats.
//
// Group file:
//   nilp2 v1
//   p <int>
//   n <int>
//   m <int>
//   c <j> <i> <v1> ... <vm>     (j > i >= 1, 1-based; omitted pairs are zero)
//
// Identification file, one line per basis pair:
//   id <h_1> ... <h_mA> -> <k_1> ... <k_mB>
//
// Map file, one line per domain generator:
//   gen <k> -> <v_1> ... <v_n> | <w_1> ... <w_m>
//
// '#' starts a comment in all three; blank lines are ignored.

#include <string>

#include "nilp2/group.hpp"
#include "nilp2/products.hpp"

namespace nilp2 {

Presentation parse_group(const std::string& text);
std::string write_group(const Presentation& g);

Identification parse_identification(const std::string& text, const Presentation& a,
                                    const Presentation& b);
std::string write_identification(const Identification& ident);

// The map may be inconsistent; check GeneratorMap::consistent().
GeneratorMap parse_map(const std::string& text, const Presentation& domain,
                       const Presentation& codomain);
std::string write_map(const GeneratorMap& f);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

Presentation load_group(const std::string& path);

}  // namespace nilp2

#endif  // NILP2_IO_HPP
