#ifndef CHM_IO_HPP
#define CHM_IO_HPP

#include <iosfwd>
#include <string>

#include "chm/matrix.hpp"

namespace chm {

/// Complex matrix text format: first non-comment line holds the order N,
/// followed by N lines of N entries "re+imj" (17 significant digits on
/// output). Lines starting with '#' are comments.
CMatrix read_matrix(std::istream& in);
CMatrix read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const CMatrix& m);
std::string format_matrix(const CMatrix& m);

/// One complex scalar in the same "re+imj" syntax (also accepts bare reals
/// and bare imaginaries such as "0.5" or "-2j").
cd parse_complex(const std::string& token);
std::string format_complex(cd z);

}  // namespace chm

#endif
