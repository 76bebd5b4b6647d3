#pragma once

#include <iosfwd>
#include <string>

#include "fcakit/context.hpp"

namespace fca {

// Burmeister context file format:
//
//   B          header
//   (blank)
//   |G|
//   |M|
//   (blank)
//   one object name per line, then one attribute name per line
//   |G| incidence rows of '.' and 'X'
//
// UTF-8, "\n" line endings. write_cxt emits exactly this shape;
// read_cxt additionally strips a trailing '\r' per line and tolerates
// trailing blank lines.
FormalContext read_cxt(std::istream& in);
FormalContext read_cxt(const std::string& text);
std::string write_cxt(const FormalContext&);

}  // namespace fca
