#pragma once

#include <iosfwd>
#include <string>

#include "mp/coloring.hpp"
#include "mp/multipole.hpp"

namespace mp {

struct ParseError : MultipoleError {
    int line;
    ParseError(int line_number, const std::string& message)
        : MultipoleError("line " + std::to_string(line_number) + ": " + message),
          line(line_number) {}
};

// Text format: `vertices <n>`, then any number of `edge <u> <v>`, `semi <u>`,
// `free` (two paired semiedges). Semiedge indices follow reading order; '#'
// starts a comment. Extension: `pair <tag>` declares one half of a free edge
// whose halves are not adjacent in the semiedge order; the two lines carrying
// the same tag pair up.
Multipole parse_mpole(std::istream& in);
Multipole parse_mpole_text(const std::string& text);

void write_mpole(std::ostream& out, const Multipole& m);
std::string write_mpole_text(const Multipole& m);

// One state per line, digits without separators, sorted lexicographically.
std::string stateset_text(const StateSet& set);
std::string stateset_json(const StateSet& set);

}  // namespace mp
