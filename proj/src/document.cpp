#include "polyprod/document.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace polyprod {
namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())) != 0)
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())) != 0)
        s.remove_suffix(1);
    return s;
}

// Recursive-descent reader for integers and bracketed lists.
class ListReader {
public:
    ListReader(std::string_view text, int line) : text_(text), line_(line) {}

    std::vector<int> int_list() {
        expect('[');
        std::vector<int> out;
        skip_space();
        if (peek() == ']') {
            ++pos_;
            return out;
        }
        while (true) {
            out.push_back(integer());
            skip_space();
            if (peek() == ']') {
                ++pos_;
                return out;
            }
            expect(',');
        }
    }

    std::vector<std::vector<int>> nested_list() {
        expect('[');
        std::vector<std::vector<int>> out;
        skip_space();
        if (peek() == ']') {
            ++pos_;
            return out;
        }
        while (true) {
            out.push_back(int_list());
            skip_space();
            if (peek() == ']') {
                ++pos_;
                return out;
            }
            expect(',');
        }
    }

    void finish() {
        skip_space();
        if (pos_ != text_.size())
            fail("unexpected trailing text");
    }

private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0)
            ++pos_;
    }

    void expect(char c) {
        skip_space();
        if (peek() != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    int integer() {
        skip_space();
        int v = 0;
        const char* begin = text_.data() + pos_;
        const auto [ptr, ec] = std::from_chars(begin, text_.data() + text_.size(), v);
        if (ec != std::errc{} || ptr == begin)
            fail("expected an integer");
        pos_ += static_cast<std::size_t>(ptr - begin);
        return v;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw InputError("line " + std::to_string(line_) + ": " + what + " at column " + std::to_string(pos_ + 1));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_;
};

}  // namespace

std::vector<int> parse_label_list(std::string_view text) {
    text = trim(text);
    std::string bracketed = text.starts_with('[') ? std::string(text) : "[" + std::string(text) + "]";
    ListReader r(bracketed, 1);
    auto out = r.int_list();
    r.finish();
    return out;
}

ComplexDocument parse_document(std::string_view text) {
    bool have_ground = false;
    bool have_facets = false;
    bool have_blocks = false;
    std::vector<int> ground;
    std::vector<int> blocks;
    std::vector<std::vector<int>> facets;
    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto end = std::min(text.find('\n', start), text.size());
        const std::string_view line = trim(text.substr(start, end - start));
        start = end + 1;
        ++line_no;
        if (line.empty() || line.front() == '#')
            continue;
        const auto colon = line.find(':');
        if (colon == std::string_view::npos)
            throw InputError("line " + std::to_string(line_no) + ": expected 'key: value'");
        const std::string_view key = trim(line.substr(0, colon));
        ListReader r(line.substr(colon + 1), line_no);
        if (key == "ground" && !have_ground) {
            ground = r.int_list();
            have_ground = true;
        } else if (key == "blocks" && !have_blocks) {
            blocks = r.int_list();
            have_blocks = true;
        } else if (key == "facets" && !have_facets) {
            facets = r.nested_list();
            have_facets = true;
        } else {
            throw InputError("line " + std::to_string(line_no) + ": unexpected key '" + std::string(key) + "'");
        }
        r.finish();
    }
    if (!have_ground)
        throw InputError("document has no 'ground:' line");
    if (!have_facets)
        throw InputError("document has no 'facets:' line");

    VertexSet g;
    for (int v : ground) {
        const VertexSet one = VertexSet::single(v);
        if (!g.disjoint(one))
            throw InputError("ground lists vertex " + std::to_string(v) + " twice");
        g = g | one;
    }
    std::vector<VertexSet> fs;
    for (const auto& f : facets) {
        VertexSet s;
        for (int v : f) {
            if (v < 1 || v > kMaxVertexLabel || !g.contains(v))
                throw InputError("facet vertex " + std::to_string(v) + " is not in the ground set");
            s = s | VertexSet::single(v);
        }
        fs.push_back(s);
    }
    ComplexDocument doc;
    doc.complex = SimplicialComplex::make(g, fs);
    if (have_blocks) {
        GroundSet check(g, blocks);  // validates sizes
        doc.blocks = std::move(blocks);
    }
    return doc;
}

ComplexDocument read_document(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str());
}

std::vector<VertexSet> canonical_facets(const SimplicialComplex& k) {
    auto fs = k.facets();
    std::sort(fs.begin(), fs.end(), lex_less);
    return fs;
}

std::string render_labels(VertexSet s) {
    std::string out = "[";
    bool first = true;
    for (int v : s.labels()) {
        if (!first)
            out += ',';
        out += std::to_string(v);
        first = false;
    }
    return out + "]";
}

std::string render_document(const ComplexDocument& doc) {
    std::string out = "ground: " + render_labels(doc.complex.ground()) + "\n";
    if (!doc.blocks.empty()) {
        out += "blocks: [";
        for (std::size_t i = 0; i < doc.blocks.size(); ++i)
            out += (i > 0 ? "," : "") + std::to_string(doc.blocks[i]);
        out += "]\n";
    }
    out += "facets: [";
    bool first = true;
    for (VertexSet f : canonical_facets(doc.complex)) {
        if (!first)
            out += ',';
        out += render_labels(f);
        first = false;
    }
    return out + "]\n";
}

std::string render_document(const SimplicialComplex& k) { return render_document(ComplexDocument{k, {}}); }

}  // namespace polyprod
