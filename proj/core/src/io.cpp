#include "chm/io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace chm {

namespace {

bool comment_or_blank(const std::string& line) {
    for (char ch : line) {
        if (ch == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

bool next_content_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        if (!comment_or_blank(line)) return true;
    }
    return false;
}

}  // namespace

cd parse_complex(const std::string& token) {
    if (token.empty()) fail(ErrorKind::ParseError, "empty complex token");
    std::string body = token;
    bool imag_suffix = false;
    if (body.back() == 'j' || body.back() == 'J') {
        imag_suffix = true;
        body.pop_back();
    }
    // split at the last top-level +/- that is not an exponent sign
    std::size_t split = std::string::npos;
    for (std::size_t i = 1; i < body.size(); ++i) {
        if ((body[i] == '+' || body[i] == '-') &&
            body[i - 1] != 'e' && body[i - 1] != 'E')
            split = i;
    }
    try {
        if (split == std::string::npos) {
            double v = std::stod(body);
            return imag_suffix ? cd(0.0, v) : cd(v, 0.0);
        }
        if (!imag_suffix)
            fail(ErrorKind::ParseError, "two components but no trailing j in '" + token + "'");
        double re = std::stod(body.substr(0, split));
        std::string ims = body.substr(split);
        double im = (ims == "+" || ims == "-") ? (ims == "+" ? 1.0 : -1.0) : std::stod(ims);
        return cd(re, im);
    } catch (const std::invalid_argument&) {
        fail(ErrorKind::ParseError, "malformed complex token '" + token + "'");
    } catch (const std::out_of_range&) {
        fail(ErrorKind::ParseError, "complex token out of range '" + token + "'");
    }
}

std::string format_complex(cd z) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g%+.17gj", z.real(), z.imag());
    return buf;
}

CMatrix read_matrix(std::istream& in) {
    std::string line;
    if (!next_content_line(in, line)) fail(ErrorKind::ParseError, "missing order line");
    std::size_t n = 0;
    {
        std::istringstream hs(line);
        long long v = -1;
        if (!(hs >> v) || v < 0) fail(ErrorKind::ParseError, "bad order line '" + line + "'");
        n = static_cast<std::size_t>(v);
    }
    CMatrix m(n);
    for (std::size_t r = 0; r < n; ++r) {
        if (!next_content_line(in, line))
            fail(ErrorKind::ParseError, "unexpected end of input at row " + std::to_string(r + 1));
        std::istringstream rs(line);
        std::string tok;
        for (std::size_t c = 0; c < n; ++c) {
            if (!(rs >> tok))
                fail(ErrorKind::ParseError, "row " + std::to_string(r + 1) + " has fewer than " +
                                                std::to_string(n) + " entries");
            m(r, c) = parse_complex(tok);
        }
        if (rs >> tok)
            fail(ErrorKind::ParseError, "row " + std::to_string(r + 1) + " has extra entries");
    }
    return m;
}

CMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::ParseError, "cannot open '" + path + "'");
    return read_matrix(in);
}

void write_matrix(std::ostream& out, const CMatrix& m) {
    out << m.order() << '\n';
    for (std::size_t r = 0; r < m.order(); ++r) {
        for (std::size_t c = 0; c < m.order(); ++c) {
            if (c) out << ' ';
            out << format_complex(m(r, c));
        }
        out << '\n';
    }
}

std::string format_matrix(const CMatrix& m) {
    std::ostringstream os;
    write_matrix(os, m);
    return os.str();
}

}  // namespace chm
