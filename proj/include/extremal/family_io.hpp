#pragma once

#include "extremal/core.hpp"

#include <iosfwd>
#include <string>

namespace extremal {

// Text format: a header line "n k", then one member per line as
// comma-separated ascending elements ("1,2,5"). Blank lines and '#'
// comments are ignored. The empty set member is written "{}".

SetFamily read_family(std::istream & in);
SetFamily read_family_file(const std::string & path);

void write_family(std::ostream & out, const SetFamily & family);
void write_family_file(const std::string & path, const SetFamily & family);

std::string to_text(const SetFamily & family);
SetFamily from_text(const std::string & text);

} // namespace extremal
