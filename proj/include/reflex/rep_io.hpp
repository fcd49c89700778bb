#ifndef REFLEX_REP_IO_HPP
#define REFLEX_REP_IO_HPP

// Text format for representations:
//
//   reflex-rep v1
//   field rational            (or: field quadratic D)
//   dim n
//   gen <name>
//   <n rows of n scalar tokens>
//   gen <name>
//   ...
//
// Blank lines and '#' comments are ignored. Quadratic tokens are written
// without inner spaces ("1/2+-1/2*sqrt(5)").

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "reflex/reflection.hpp"

namespace reflex {

inline constexpr const char* kRepHeader = "reflex-rep v1";

/// Parsed file content before reflection validation.
template <ExactField F>
struct RawRep {
    FieldContext field;
    std::size_t dim = 0;
    std::vector<std::string> names;
    std::vector<Matrix<F>> matrices;
};

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

/// Lines with comments stripped; empty lines dropped; each paired with its 1-based number.
inline std::vector<std::pair<std::size_t, std::string>> content_lines(const std::string& text) {
    std::vector<std::pair<std::size_t, std::string>> out;
    std::istringstream is(text);
    std::string line;
    std::size_t no = 0;
    while (std::getline(is, line)) {
        ++no;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        const auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        const auto e = line.find_last_not_of(" \t\r");
        out.emplace_back(no, line.substr(b, e - b + 1));
    }
    return out;
}

inline ParseError line_error(std::size_t no, const std::string& msg) {
    return ParseError("line " + std::to_string(no) + ": " + msg);
}

}  // namespace detail

/// Reads only the header and field line.
inline FieldContext read_field_context(const std::string& text) {
    const auto lines = detail::content_lines(text);
    if (lines.empty() || lines[0].second != kRepHeader)
        throw ParseError("missing header '" + std::string(kRepHeader) + "'");
    if (lines.size() < 2) throw ParseError("missing field line");
    const auto toks = detail::split_ws(lines[1].second);
    if (toks.size() == 2 && toks[0] == "field" && toks[1] == "rational") return FieldContext::rational();
    if (toks.size() == 3 && toks[0] == "field" && toks[1] == "quadratic") {
        long d = 0;
        try {
            std::size_t used = 0;
            d = std::stol(toks[2], &used);
            if (used != toks[2].size()) throw ParseError("");
        } catch (const std::exception&) {
            throw detail::line_error(lines[1].first, "bad quadratic parameter");
        }
        if (!is_squarefree_above_one(d))
            throw detail::line_error(lines[1].first, "quadratic parameter must be square-free and > 1");
        return FieldContext::quadratic(d);
    }
    throw detail::line_error(lines[1].first, "expected 'field rational' or 'field quadratic D'");
}

template <ExactField F>
RawRep<F> parse_raw_rep(const std::string& text) {
    RawRep<F> raw;
    raw.field = read_field_context(text);
    if (!field_traits<F>::accepts(raw.field))
        throw ParseError("field '" + raw.field.describe() + "' does not match the requested scalar type");
    const auto lines = detail::content_lines(text);
    if (lines.size() < 3) throw ParseError("missing dim line");
    {
        const auto toks = detail::split_ws(lines[2].second);
        if (toks.size() != 2 || toks[0] != "dim") throw detail::line_error(lines[2].first, "expected 'dim n'");
        try {
            std::size_t used = 0;
            const long n = std::stol(toks[1], &used);
            if (used != toks[1].size() || n < 1) throw ParseError("");
            raw.dim = static_cast<std::size_t>(n);
        } catch (const std::exception&) {
            throw detail::line_error(lines[2].first, "dimension must be a positive integer");
        }
    }
    std::size_t pos = 3;
    while (pos < lines.size()) {
        const auto& [no, line] = lines[pos];
        const auto toks = detail::split_ws(line);
        if (toks.size() != 2 || toks[0] != "gen") throw detail::line_error(no, "expected 'gen <name>'");
        raw.names.push_back(toks[1]);
        ++pos;
        Matrix<F> m(raw.dim, raw.dim);
        for (std::size_t r = 0; r < raw.dim; ++r, ++pos) {
            if (pos >= lines.size()) throw ParseError("generator '" + toks[1] + "' has too few rows");
            const auto row = detail::split_ws(lines[pos].second);
            if (row.size() != raw.dim)
                throw detail::line_error(lines[pos].first, "expected " + std::to_string(raw.dim) + " entries");
            for (std::size_t c = 0; c < raw.dim; ++c) {
                try {
                    m(r, c) = parse_scalar<F>(row[c], raw.field);
                } catch (const ParseError& e) {
                    throw detail::line_error(lines[pos].first, e.what());
                } catch (const InputError& e) {
                    throw detail::line_error(lines[pos].first, e.what());
                }
            }
        }
        raw.matrices.push_back(std::move(m));
    }
    if (raw.matrices.empty()) throw ParseError("representation has no generators");
    return raw;
}

/// Parses and validates every generator as a reflection.
template <ExactField F>
ReflectionRep<F> parse_rep(const std::string& text) {
    auto raw = parse_raw_rep<F>(text);
    return ReflectionRep<F>::from_matrices(raw.field, raw.matrices, raw.names);
}

template <ExactField F>
std::string serialize_rep(const ReflectionRep<F>& rep) {
    std::ostringstream os;
    os << kRepHeader << "\n";
    os << "field " << rep.field().describe() << "\n";
    os << "dim " << rep.dim() << "\n";
    for (const auto& g : rep.generators()) {
        os << "gen " << g.name << "\n";
        for (std::size_t i = 0; i < rep.dim(); ++i) {
            for (std::size_t j = 0; j < rep.dim(); ++j) {
                if (j) os << ' ';
                os << format_scalar(g.matrix(i, j), rep.field());
            }
            os << "\n";
        }
    }
    return os.str();
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace reflex

#endif
