#include "cyclex/algebra/parser.hpp"

#include "cyclex/algebra/presets.hpp"
#include "cyclex/core/error.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace cyclex {

namespace {

struct Token {
    std::string text;
    int column; // 1-based
};

std::vector<Token> tokenize(const std::string& line)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        const char c = line[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c == '=' || c == '+' || c == '-' || c == '*') {
            out.push_back({std::string(1, c), static_cast<int>(i + 1)});
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '=' &&
               line[i] != '+' && line[i] != '*' && !(line[i] == '-' && i > start))
            ++i;
        out.push_back({line.substr(start, i - start), static_cast<int>(start + 1)});
    }
    return out;
}

class LineParser {
public:
    LineParser(std::vector<Token> tokens, int line, int end_column)
        : tokens_(std::move(tokens)), line_(line), end_column_(end_column) {}

    bool done() const { return pos_ == tokens_.size(); }
    int column() const { return done() ? end_column_ : tokens_[pos_].column; }

    [[noreturn]] void fail(const std::string& message) const { throw ParseError(line_, column(), message); }

    const Token& next(const char* what)
    {
        if (done())
            fail(std::string("expected ") + what);
        return tokens_[pos_++];
    }

    void expect(const std::string& text)
    {
        if (done() || tokens_[pos_].text != text)
            fail("expected '" + text + "'");
        ++pos_;
    }

    bool accept(const std::string& text)
    {
        if (!done() && tokens_[pos_].text == text) {
            ++pos_;
            return true;
        }
        return false;
    }

    void end()
    {
        if (!done())
            fail("unexpected '" + tokens_[pos_].text + "'");
    }

    std::size_t index(std::size_t dim)
    {
        const int col = column();
        const Token& t = next("a basis index");
        std::size_t v = 0;
        if (t.text.empty() || t.text.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError(line_, col, "expected a basis index, got '" + t.text + "'");
        v = std::stoul(t.text);
        if (v < 1 || v > dim)
            throw ParseError(line_, col, "basis index " + t.text + " out of range 1.." + std::to_string(dim));
        return v - 1;
    }

    std::size_t count()
    {
        const int col = column();
        const Token& t = next("a dimension");
        if (t.text.empty() || t.text.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError(line_, col, "expected a non-negative integer, got '" + t.text + "'");
        return std::stoul(t.text);
    }

    // sum of [sign] [coeff '*'] index terms, or a lone 0
    SparseVector linear_combination(std::size_t dim)
    {
        std::vector<SparseEntry> entries;
        bool first = true;
        for (;;) {
            Rational sign = 1;
            if (accept("-"))
                sign = -1;
            else if (!first && !accept("+"))
                break;
            else if (first)
                accept("+");
            first = false;

            const int col = column();
            const Token& t = next("a term");
            if (!done() && tokens_[pos_].text == "*") {
                ++pos_;
                Rational c;
                try {
                    c = parse_rational(t.text);
                } catch (const std::invalid_argument&) {
                    throw ParseError(line_, col, "malformed coefficient '" + t.text + "'");
                }
                entries.push_back({index(dim), sign * c});
            } else if (t.text == "0") {
                continue;
            } else {
                --pos_;
                entries.push_back({index(dim), sign});
            }
        }
        return SparseVector::from_unsorted(std::move(entries));
    }

private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    int line_;
    int end_column_;
};

std::string preset_expression(const std::vector<Token>& rest)
{
    std::string joined;
    for (const auto& t : rest)
        joined += t.text;
    if (rest.size() <= 1 || joined.find_first_of("(:") != std::string::npos) {
        std::string spaced;
        for (const auto& t : rest)
            spaced += t.text + " ";
        return spaced;
    }
    std::string call = rest[0].text + "(";
    for (std::size_t k = 1; k < rest.size(); ++k)
        call += (k > 1 ? "," : "") + rest[k].text;
    return call + ")";
}

} // namespace

AlgebraPtr parse_algebra(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;

    std::optional<AlgebraPtr> from_preset;
    std::string name;
    std::optional<std::size_t> dim;
    std::vector<std::string> labels;
    std::vector<SparseVector> products;
    std::vector<bool> seen;
    std::optional<SparseVector> unit, augmentation;

    while (std::getline(in, raw)) {
        ++line_no;
        const auto hash = raw.find('#');
        const std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
        auto tokens = tokenize(line);
        if (tokens.empty())
            continue;
        LineParser p(tokens, line_no, static_cast<int>(line.size()) + 1);
        const std::string keyword = p.next("a statement").text;

        if (keyword == "preset") {
            if (from_preset || dim)
                throw ParseError(line_no, 1, "only one algebra per input");
            std::vector<Token> rest(tokens.begin() + 1, tokens.end());
            if (rest.empty())
                p.fail("expected a preset name");
            try {
                from_preset = preset(preset_expression(rest));
            } catch (const ConfigError& e) {
                throw ParseError(line_no, rest[0].column, e.what());
            }
            continue;
        }
        if (keyword == "algebra") {
            if (from_preset || dim)
                throw ParseError(line_no, 1, "only one algebra per input");
            name = p.next("an algebra name").text;
            p.expect("dim");
            dim = p.count();
            p.end();
            products.assign(*dim * *dim, SparseVector());
            seen.assign(*dim * *dim, false);
            continue;
        }
        if (!dim)
            throw ParseError(line_no, 1, "'" + keyword + "' before 'algebra <name> dim <d>'");

        if (keyword == "basis") {
            if (!labels.empty())
                throw ParseError(line_no, 1, "duplicate basis statement");
            while (!p.done())
                labels.push_back(p.next("a label").text);
            if (labels.size() != *dim)
                throw ParseError(line_no, 1,
                                 "basis lists " + std::to_string(labels.size()) + " labels, dim is " +
                                     std::to_string(*dim));
        } else if (keyword == "mul") {
            const int col = p.column();
            const std::size_t i = p.index(*dim);
            const std::size_t j = p.index(*dim);
            p.expect("=");
            auto v = p.linear_combination(*dim);
            p.end();
            if (seen[i * *dim + j])
                throw ParseError(line_no, col, "product of " + std::to_string(i + 1) + " and " +
                                                   std::to_string(j + 1) + " given twice");
            seen[i * *dim + j] = true;
            products[i * *dim + j] = std::move(v);
        } else if (keyword == "unit") {
            p.expect("=");
            unit = p.linear_combination(*dim);
            p.end();
        } else if (keyword == "augmentation") {
            p.expect("=");
            augmentation = SparseVector::unit(p.index(*dim));
            p.end();
        } else {
            throw ParseError(line_no, tokens[0].column, "unknown statement '" + keyword + "'");
        }
    }

    if (from_preset)
        return *from_preset;
    if (!dim)
        throw ParseError(line_no + 1, 1, "no algebra defined");
    if (labels.empty())
        for (std::size_t k = 1; k <= *dim; ++k)
            labels.push_back("e" + std::to_string(k));
    return std::make_shared<const Algebra>(name, std::move(labels), std::move(products), std::move(unit),
                                           std::move(augmentation));
}

AlgebraPtr parse_algebra_file(const std::string& path)
{
    std::ifstream f(path);
    if (!f)
        throw ConfigError("cannot open " + path);
    std::stringstream buf;
    buf << f.rdbuf();
    try {
        return parse_algebra(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(e.line(), e.column(), path + ": " + e.message());
    }
}

} // namespace cyclex
