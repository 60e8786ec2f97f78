#include "seopinion/ingestion/html.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <initializer_list>

namespace seopinion::ingest {

namespace {

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

template <std::size_t N>
bool in(const std::array<std::string_view, N>& set, std::string_view name) {
    return std::find(set.begin(), set.end(), name) != set.end();
}

constexpr std::array<std::string_view, 16> kVoid{
    "area", "base", "br", "col", "embed", "hr", "img", "input",
    "link", "meta", "param", "source", "track", "wbr", "keygen", "basefont"};

constexpr std::array<std::string_view, 4> kRawText{"script", "style", "textarea", "xmp"};

// Start tags that close an open <p>.
constexpr std::array<std::string_view, 32> kClosesParagraph{
    "address", "article", "aside", "blockquote", "details", "div", "dl", "fieldset",
    "figcaption", "figure", "footer", "form", "h1", "h2", "h3", "h4",
    "h5", "h6", "header", "hr", "main", "menu", "nav", "ol",
    "p", "pre", "section", "table", "ul", "li", "dd", "dt"};

// Elements an implicit close never crosses.
constexpr std::array<std::string_view, 9> kScopeBoundary{
    "table", "td", "th", "caption", "button", "object", "template", "html", "body"};

void append_utf8(std::string& out, std::uint32_t cp) {
    if (cp == 0 || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) cp = 0xFFFD;
    if (cp < 0x80) {
        out += static_cast<char>(cp);
    } else if (cp < 0x800) {
        out += static_cast<char>(0xC0 | (cp >> 6));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
        out += static_cast<char>(0xE0 | (cp >> 12));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
        out += static_cast<char>(0xF0 | (cp >> 18));
        out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    }
}

struct NamedEntity {
    std::string_view name;
    std::uint32_t codepoint;
};

constexpr std::array<NamedEntity, 28> kEntities{{
    {"amp", '&'},      {"lt", '<'},        {"gt", '>'},       {"quot", '"'},
    {"apos", '\''},    {"nbsp", 0xA0},     {"copy", 0xA9},    {"reg", 0xAE},
    {"trade", 0x2122}, {"hellip", 0x2026}, {"mdash", 0x2014}, {"ndash", 0x2013},
    {"lsquo", 0x2018}, {"rsquo", 0x2019},  {"ldquo", 0x201C}, {"rdquo", 0x201D},
    {"bull", 0x2022},  {"middot", 0xB7},   {"deg", 0xB0},     {"times", 0xD7},
    {"euro", 0x20AC},  {"pound", 0xA3},    {"yen", 0xA5},     {"cent", 0xA2},
    {"laquo", 0xAB},   {"raquo", 0xBB},    {"frac12", 0xBD},  {"shy", 0xAD},
}};

}  // namespace

std::string decode_entities(std::string_view in) {
    std::string out;
    out.reserve(in.size());
    std::size_t i = 0;
    while (i < in.size()) {
        if (in[i] != '&') {
            out += in[i++];
            continue;
        }
        auto semi = in.find(';', i + 1);
        if (semi == std::string_view::npos || semi - i > 12) {
            out += in[i++];
            continue;
        }
        auto body = in.substr(i + 1, semi - i - 1);
        bool decoded = false;
        if (!body.empty() && body[0] == '#') {
            std::uint32_t cp = 0;
            const char* first = body.data() + 1;
            const char* last = body.data() + body.size();
            int base = 10;
            if (first != last && (*first == 'x' || *first == 'X')) {
                ++first;
                base = 16;
            }
            if (first != last) {
                auto [ptr, ec] = std::from_chars(first, last, cp, base);
                if (ec == std::errc() && ptr == last) {
                    append_utf8(out, cp);
                    decoded = true;
                }
            }
        } else {
            for (const auto& e : kEntities) {
                if (e.name == body) {
                    append_utf8(out, e.codepoint);
                    decoded = true;
                    break;
                }
            }
        }
        if (decoded) {
            i = semi + 1;
        } else {
            out += in[i++];
        }
    }
    return out;
}

std::string normalize_whitespace(std::string_view in) {
    std::string out;
    out.reserve(in.size());
    bool pending_space = false;
    for (std::size_t i = 0; i < in.size(); ++i) {
        bool space = is_space(in[i]);
        bool nbsp = !space && static_cast<unsigned char>(in[i]) == 0xC2 && i + 1 < in.size() &&
                    static_cast<unsigned char>(in[i + 1]) == 0xA0;
        if (space || nbsp) {
            if (nbsp) ++i;
            pending_space = !out.empty();
            continue;
        }
        if (pending_space) {
            out += ' ';
            pending_space = false;
        }
        out += in[i];
    }
    return out;
}

std::optional<std::string_view> Document::attribute(NodeId id, std::string_view name) const {
    for (const auto& a : nodes_.at(id).attributes) {
        if (a.name == name) return std::string_view(a.value);
    }
    return std::nullopt;
}

std::string Document::string_value(NodeId id) const {
    const Node& n = nodes_.at(id);
    if (n.kind == NodeKind::Text) return n.text;
    std::string out;
    for (NodeId c : n.children) out += string_value(c);
    return out;
}

NodeId Document::add(Node n) {
    NodeId id = nodes_.size();
    if (n.parent) nodes_[*n.parent].children.push_back(id);
    nodes_.push_back(std::move(n));
    return id;
}

class HtmlBuilder {
public:
    explicit HtmlBuilder(std::string_view html) : src_(html) {
        Node root;
        root.kind = NodeKind::Document;
        doc_.add(std::move(root));
        open_.push_back(0);
    }

    Document run() {
        while (pos_ < src_.size()) {
            if (src_[pos_] == '<' && try_markup()) continue;
            text_until_markup();
        }
        flush_text();
        return std::move(doc_);
    }

private:
    const std::string& open_name(std::size_t k) const { return doc_.nodes_[open_[k]].name; }

    bool try_markup() {
        auto rest = src_.substr(pos_);
        if (rest.starts_with("<!--")) {
            flush_text();
            auto end = src_.find("-->", pos_ + 4);
            pos_ = end == std::string_view::npos ? src_.size() : end + 3;
            return true;
        }
        if (rest.size() < 2) return false;
        char c = rest[1];
        if (c == '!' || c == '?') {
            flush_text();
            auto end = src_.find('>', pos_ + 2);
            pos_ = end == std::string_view::npos ? src_.size() : end + 1;
            return true;
        }
        if (c == '/') {
            if (rest.size() < 3 || !std::isalpha(static_cast<unsigned char>(rest[2]))) return false;
            flush_text();
            std::size_t i = pos_ + 2;
            std::string name = read_name(i);
            auto end = src_.find('>', i);
            pos_ = end == std::string_view::npos ? src_.size() : end + 1;
            close_element(name);
            return true;
        }
        if (!std::isalpha(static_cast<unsigned char>(c))) return false;
        flush_text();
        start_tag();
        return true;
    }

    std::string read_name(std::size_t& i) {
        std::size_t start = i;
        while (i < src_.size() && !is_space(src_[i]) && src_[i] != '>' && src_[i] != '/') ++i;
        return lower(src_.substr(start, i - start));
    }

    void start_tag() {
        std::size_t i = pos_ + 1;
        Node el;
        el.kind = NodeKind::Element;
        el.name = read_name(i);
        bool self_closing = false;
        while (i < src_.size()) {
            while (i < src_.size() && is_space(src_[i])) ++i;
            if (i >= src_.size()) break;
            if (src_[i] == '>') {
                ++i;
                break;
            }
            if (src_[i] == '/') {
                self_closing = i + 1 < src_.size() && src_[i + 1] == '>';
                ++i;
                continue;
            }
            std::size_t ns = i;
            while (i < src_.size() && !is_space(src_[i]) && src_[i] != '=' && src_[i] != '>' &&
                   !(src_[i] == '/' && i + 1 < src_.size() && src_[i + 1] == '>'))
                ++i;
            Attribute attr{lower(src_.substr(ns, i - ns)), {}};
            while (i < src_.size() && is_space(src_[i])) ++i;
            if (i < src_.size() && src_[i] == '=') {
                ++i;
                while (i < src_.size() && is_space(src_[i])) ++i;
                if (i < src_.size() && (src_[i] == '"' || src_[i] == '\'')) {
                    char q = src_[i++];
                    auto end = src_.find(q, i);
                    if (end == std::string_view::npos) end = src_.size();
                    attr.value = decode_entities(src_.substr(i, end - i));
                    i = std::min(end + 1, src_.size());
                } else {
                    std::size_t vs = i;
                    while (i < src_.size() && !is_space(src_[i]) && src_[i] != '>') ++i;
                    attr.value = decode_entities(src_.substr(vs, i - vs));
                }
            }
            if (attr.name.empty()) {
                ++i;
                continue;
            }
            bool dup = std::any_of(el.attributes.begin(), el.attributes.end(),
                                   [&](const Attribute& a) { return a.name == attr.name; });
            if (!dup) el.attributes.push_back(std::move(attr));
        }
        pos_ = i;

        implicit_close(el.name);
        el.parent = open_.back();
        std::string name = el.name;
        NodeId id = doc_.add(std::move(el));

        if (in(kVoid, name) || self_closing) return;
        if (in(kRawText, name)) {
            raw_text(id, name);
            return;
        }
        open_.push_back(id);
    }

    void raw_text(NodeId parent, const std::string& name) {
        std::string close = "</" + name;
        std::size_t end = pos_;
        while (true) {
            end = src_.find("</", end);
            if (end == std::string_view::npos) {
                end = src_.size();
                break;
            }
            if (lower(src_.substr(end, close.size())) == close) break;
            end += 2;
        }
        if (end > pos_) {
            Node t;
            t.kind = NodeKind::Text;
            t.text = std::string(src_.substr(pos_, end - pos_));
            t.parent = parent;
            doc_.add(std::move(t));
        }
        pos_ = end;
        if (end < src_.size()) {
            auto gt = src_.find('>', end);
            pos_ = gt == std::string_view::npos ? src_.size() : gt + 1;
        }
    }

    // Pops the innermost open element named `target` (and everything above
    // it) unless a scope boundary comes first.
    void close_in_scope(std::string_view target, std::initializer_list<std::string_view> extra = {}) {
        for (std::size_t k = open_.size(); k-- > 1;) {
            const std::string& name = open_name(k);
            if (name == target) {
                open_.resize(k);
                return;
            }
            if (in(kScopeBoundary, name)) return;
            for (auto b : extra)
                if (name == b) return;
        }
    }

    void implicit_close(const std::string& name) {
        if (in(kClosesParagraph, name)) close_in_scope("p");
        if (name == "li") {
            close_in_scope("li", {"ul", "ol"});
        } else if (name == "dt" || name == "dd") {
            close_in_scope("dt", {"dl"});
            close_in_scope("dd", {"dl"});
        } else if (name == "option") {
            close_in_scope("option", {"select"});
        } else if (name == "tr") {
            close_cells_and_rows(true);
        } else if (name == "td" || name == "th") {
            close_cells_and_rows(false);
        } else if (name == "thead" || name == "tbody" || name == "tfoot") {
            close_cells_and_rows(true);
            for (auto sec : {"thead", "tbody", "tfoot"}) close_within_table(sec);
        }
    }

    // Closes the innermost open td/th, and its tr when `rows`, inside the current table.
    void close_cells_and_rows(bool rows) {
        for (std::size_t k = open_.size(); k-- > 1;) {
            const std::string& name = open_name(k);
            if (name == "table") return;
            if (name == "td" || name == "th") {
                open_.resize(k);
                continue;
            }
            if (name == "tr") {
                if (rows) open_.resize(k);
                return;
            }
        }
    }

    void close_within_table(std::string_view target) {
        for (std::size_t k = open_.size(); k-- > 1;) {
            const std::string& name = open_name(k);
            if (name == target) {
                open_.resize(k);
                return;
            }
            if (name == "table") return;
        }
    }

    void close_element(const std::string& name) {
        for (std::size_t k = open_.size(); k-- > 1;) {
            if (open_name(k) == name) {
                open_.resize(k);
                return;
            }
            // An end tag never closes past its own table.
            if (open_name(k) == "table") return;
        }
    }

    void text_until_markup() {
        std::size_t start = pos_;
        pos_ = src_.find('<', pos_ + 1);
        if (pos_ == std::string_view::npos) pos_ = src_.size();
        pending_.append(src_.substr(start, pos_ - start));
    }

    void flush_text() {
        if (pending_.empty()) return;
        Node t;
        t.kind = NodeKind::Text;
        t.text = decode_entities(pending_);
        t.parent = open_.back();
        doc_.add(std::move(t));
        pending_.clear();
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    Document doc_;
    std::vector<NodeId> open_;
    std::string pending_;
};

Document Document::parse(std::string_view html) { return HtmlBuilder(html).run(); }

}  // namespace seopinion::ingest
