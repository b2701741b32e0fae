#pragma once

/*
 * Text format for bimatrices.
 *
 *   bimatrix <ring>                  ring: rational | neutrosophic | fuzzy
 *   component 1 rows=R cols=C [field=Q(I)]
 *   <R lines of C whitespace-separated tokens>
 *   component 2 rows=R' cols=C' [field=R(I)]
 *   <R' lines of C' tokens>
 *
 * '#' starts a comment; blank lines are ignored. Output is canonical: one
 * space between tokens, scalars in minimal form.
 */

#include <bimatrix/core.hpp>
#include <bimatrix/fuzzy.hpp>
#include <bimatrix/neutro.hpp>
#include <bimatrix/neutrosophic.hpp>
#include <bimatrix/rational.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace bimatrix {

enum class Ring { Rational, Neutrosophic, Fuzzy };

inline const char* to_string(Ring r)
{
    switch (r) {
    case Ring::Rational: return "rational";
    case Ring::Neutrosophic: return "neutrosophic";
    case Ring::Fuzzy: return "fuzzy";
    }
    return "?";
}

template <typename T> struct RingOf;
template <> struct RingOf<Rational> { static constexpr Ring value = Ring::Rational; };
template <> struct RingOf<NeutrosophicScalar> { static constexpr Ring value = Ring::Neutrosophic; };
template <> struct RingOf<FuzzyNeutroValue> { static constexpr Ring value = Ring::Fuzzy; };

using AnyBiMatrix = std::variant<BiMatrix<Rational>, BiMatrix<NeutrosophicScalar>, BiMatrix<FuzzyNeutroValue>>;

struct BiMatrixFile {
    AnyBiMatrix value;
    std::optional<std::string> field1;
    std::optional<std::string> field2;

    Ring ring() const { return static_cast<Ring>(value.index()); }
    std::optional<FieldTags> field_tags() const
    {
        if (!field1 && !field2) return std::nullopt;
        return FieldTags{field1.value_or("Q(I)"), field2.value_or("Q(I)")};
    }
};

enum class Validation { Checked, Relaxed };

namespace detail {

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

struct Line {
    std::size_t number;  // 1-based
    std::vector<Token> tokens;
};

inline std::vector<Line> tokenize(std::string_view text)
{
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t pos = 0;
    std::vector<std::string_view> raw;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        raw.push_back(text.substr(pos, end - pos));
        pos = end + 1;
    }
    for (std::string_view line : raw) {
        ++number;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        Line l{number, {}};
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
            std::size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
            if (j > i) l.tokens.push_back({line.substr(i, j - i), i + 1});
            i = j;
        }
        if (!l.tokens.empty()) out.push_back(std::move(l));
    }
    return out;
}

template <typename T>
std::optional<T> parse_scalar(std::string_view s)
{
    return T::try_parse(s);
}

struct ComponentHeader {
    Index rows = 0;
    Index cols = 0;
    std::optional<std::string> field;
};

inline Index parse_dim(const Token& t, std::string_view key, std::size_t line)
{
    const std::string prefix = std::string(key) + "=";
    if (t.text.substr(0, prefix.size()) != prefix)
        throw ParseError(line, t.column, "expected " + prefix + "<n>");
    std::string_view v = t.text.substr(prefix.size());
    Index n = 0;
    if (v.empty()) throw ParseError(line, t.column, "missing value for " + std::string(key));
    for (char ch : v) {
        if (ch < '0' || ch > '9') throw ParseError(line, t.column, "bad value for " + std::string(key));
        n = n * 10 + static_cast<Index>(ch - '0');
        if (n > 100000) throw ParseError(line, t.column, std::string(key) + " too large");
    }
    if (n == 0) throw ParseError(line, t.column, std::string(key) + " must be positive");
    return n;
}

inline ComponentHeader parse_component_header(const Line& l, int which)
{
    const auto& t = l.tokens;
    if (t[0].text != "component" || t.size() < 2 || t[1].text != std::to_string(which))
        throw ParseError(l.number, t[0].column, "expected 'component " + std::to_string(which) + "'");
    if (t.size() < 4 || t.size() > 5) throw ParseError(l.number, t[0].column, "expected 'rows=R cols=C [field=F]'");
    ComponentHeader h{parse_dim(t[2], "rows", l.number), parse_dim(t[3], "cols", l.number), std::nullopt};
    if (t.size() == 5) {
        if (t[4].text.substr(0, 6) != "field=" || t[4].text.size() == 6)
            throw ParseError(l.number, t[4].column, "expected field=<name>");
        h.field = std::string(t[4].text.substr(6));
    }
    return h;
}

template <typename T>
BiMatrixFile parse_body(const std::vector<Line>& lines, std::size_t last_line, Validation v)
{
    std::size_t k = 1;
    BiMatrixFile out{BiMatrix<T>::relaxed(Matrix<T>(1, 1), Matrix<T>(1, 1)), std::nullopt, std::nullopt};
    Matrix<T> comps[2];
    for (int which = 1; which <= 2; ++which) {
        if (k >= lines.size())
            throw ParseError(last_line + 1, 1, "expected 'component " + std::to_string(which) + "'");
        ComponentHeader h = parse_component_header(lines[k++], which);
        (which == 1 ? out.field1 : out.field2) = h.field;
        Matrix<T> m(h.rows, h.cols);
        for (Index i = 0; i < h.rows; ++i) {
            if (k >= lines.size()) throw ParseError(last_line + 1, 1, "missing matrix row");
            const Line& l = lines[k++];
            if (l.tokens[0].text == "component")
                throw ParseError(l.number, 1, "expected " + std::to_string(h.rows) + " rows in component " + std::to_string(which));
            if (l.tokens.size() != h.cols)
                throw ParseError(l.number, l.tokens[0].column,
                                 "expected " + std::to_string(h.cols) + " entries, found " + std::to_string(l.tokens.size()));
            for (Index j = 0; j < h.cols; ++j) {
                auto x = parse_scalar<T>(l.tokens[j].text);
                if (!x) throw ParseError(l.number, l.tokens[j].column, "bad scalar '" + std::string(l.tokens[j].text) + "'");
                m(i, j) = std::move(*x);
            }
        }
        comps[which - 1] = std::move(m);
    }
    if (k < lines.size()) throw ParseError(lines[k].number, 1, "unexpected content after component 2");
    out.value = v == Validation::Checked ? BiMatrix<T>(std::move(comps[0]), std::move(comps[1]))
                                         : BiMatrix<T>::relaxed(std::move(comps[0]), std::move(comps[1]));
    return out;
}

} // namespace detail

inline BiMatrixFile parse_bimatrix(std::string_view text, Validation v = Validation::Checked)
{
    const auto lines = detail::tokenize(text);
    if (lines.empty()) throw ParseError(1, 1, "empty input");
    const auto& h = lines[0];
    if (h.tokens[0].text != "bimatrix" || h.tokens.size() != 2)
        throw ParseError(h.number, h.tokens[0].column, "expected 'bimatrix <ring>'");
    const std::size_t last = lines.back().number;
    const auto ring = h.tokens[1].text;
    if (ring == "rational") return detail::parse_body<Rational>(lines, last, v);
    if (ring == "neutrosophic") return detail::parse_body<NeutrosophicScalar>(lines, last, v);
    if (ring == "fuzzy") return detail::parse_body<FuzzyNeutroValue>(lines, last, v);
    throw ParseError(h.number, h.tokens[1].column, "unknown ring '" + std::string(ring) + "'");
}

inline BiMatrixFile parse_bimatrix_file(const std::string& path, Validation v = Validation::Checked)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IOError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_bimatrix(ss.str(), v);
}

template <typename T>
std::string format_matrix_rows(const Matrix<T>& m)
{
    std::string out;
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index j = 0; j < m.cols(); ++j) {
            if (j) out += ' ';
            out += m(i, j).str();
        }
        out += '\n';
    }
    return out;
}

template <typename T>
std::string format_bimatrix(const BiMatrix<T>& b, const std::optional<std::string>& field1 = std::nullopt,
                            const std::optional<std::string>& field2 = std::nullopt)
{
    std::string out = std::string("bimatrix ") + to_string(RingOf<T>::value) + "\n";
    for (int k : {1, 2}) {
        const auto& m = b.component(k);
        out += "component " + std::to_string(k) + " rows=" + std::to_string(m.rows()) + " cols=" + std::to_string(m.cols());
        const auto& f = k == 1 ? field1 : field2;
        if (f) out += " field=" + *f;
        out += '\n';
        out += format_matrix_rows(m);
    }
    return out;
}

inline std::string format_bimatrix(const BiMatrixFile& f)
{
    return std::visit([&](const auto& b) { return format_bimatrix(b, f.field1, f.field2); }, f.value);
}

} // namespace bimatrix
