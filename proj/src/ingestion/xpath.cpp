#include "seopinion/ingestion/xpath.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

#include "seopinion/error.hpp"

namespace seopinion::ingest {

namespace {

bool name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == ':' || c == '.';
}

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    std::vector<XPath::Path> parse() {
        std::vector<XPath::Path> branches;
        skip_space();
        if (at_end()) fail("empty expression");
        branches.push_back(path());
        skip_space();
        while (!at_end() && peek() == '|') {
            ++pos_;
            skip_space();
            branches.push_back(path());
            skip_space();
        }
        if (!at_end()) fail("unexpected character");
        return branches;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("xpath '" + std::string(src_) + "': " + what + " at offset " + std::to_string(pos_));
    }

    bool at_end() const { return pos_ >= src_.size(); }
    char peek() const { return src_[pos_]; }
    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    XPath::Path path() {
        XPath::Path steps;
        bool first = true;
        while (true) {
            XPath::Step::Axis axis = XPath::Step::Axis::Child;
            if (!at_end() && peek() == '/') {
                ++pos_;
                if (!at_end() && peek() == '/') {
                    ++pos_;
                    axis = XPath::Step::Axis::Descendant;
                }
            } else if (!first) {
                break;
            }
            if (!steps.empty() && steps.back().test != XPath::Step::Test::Element)
                fail("text() and @attribute must be the last step");
            XPath::Step step = this->step();
            step.axis = axis;
            steps.push_back(std::move(step));
            first = false;
            skip_space();
            if (at_end() || peek() != '/') break;
        }
        return steps;
    }

    XPath::Step step() {
        XPath::Step s;
        if (at_end()) fail("missing step");
        if (peek() == '@') {
            ++pos_;
            s.test = XPath::Step::Test::Attribute;
            s.name = name();
            return s;
        }
        if (peek() == '*') {
            ++pos_;
            s.name = "*";
        } else {
            s.name = name();
        }
        if (s.name == "text" && !at_end() && peek() == '(') {
            ++pos_;
            if (at_end() || peek() != ')') fail("expected ')'");
            ++pos_;
            s.test = XPath::Step::Test::Text;
            s.name.clear();
            if (!at_end() && peek() == '[') fail("predicates on text() are not supported");
            return s;
        }
        std::transform(s.name.begin(), s.name.end(), s.name.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        while (!at_end() && peek() == '[') s.predicates.push_back(predicate());
        return s;
    }

    std::string name() {
        std::size_t start = pos_;
        while (!at_end() && name_char(peek())) ++pos_;
        if (pos_ == start) fail("expected a name");
        return std::string(src_.substr(start, pos_ - start));
    }

    XPath::Predicate predicate() {
        ++pos_;  // '['
        skip_space();
        if (at_end()) fail("unterminated predicate");
        XPath::Predicate p{};
        if (peek() == '@') {
            ++pos_;
            p.attribute = name();
            std::transform(p.attribute.begin(), p.attribute.end(), p.attribute.begin(),
                           [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
            skip_space();
            if (at_end()) fail("unterminated predicate");
            if (peek() == '=') {
                ++pos_;
                skip_space();
                p.kind = XPath::Predicate::Kind::AttributeEquals;
                p.value = literal();
            } else {
                p.kind = XPath::Predicate::Kind::AttributeExists;
            }
        } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::size_t start = pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            std::size_t n = 0;
            std::from_chars(src_.data() + start, src_.data() + pos_, n);
            if (n == 0) fail("positions start at 1");
            p.kind = XPath::Predicate::Kind::Position;
            p.position = n;
        } else {
            fail("unsupported predicate");
        }
        skip_space();
        if (at_end() || peek() != ']') fail("expected ']'");
        ++pos_;
        return p;
    }

    std::string literal() {
        if (at_end() || (peek() != '\'' && peek() != '"')) fail("expected a quoted literal");
        char q = peek();
        std::size_t start = ++pos_;
        auto end = src_.find(q, start);
        if (end == std::string_view::npos) {
            pos_ = src_.size();
            fail("unterminated string literal");
        }
        pos_ = end + 1;
        return std::string(src_.substr(start, end - start));
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

bool element_matches(const Document& doc, NodeId id, const XPath::Step& step) {
    const Node& n = doc.node(id);
    if (n.kind != NodeKind::Element) return false;
    return step.name == "*" || n.name == step.name;
}

bool attribute_predicate_holds(const Document& doc, NodeId id, const XPath::Predicate& p) {
    auto value = doc.attribute(id, p.attribute);
    if (p.kind == XPath::Predicate::Kind::AttributeExists) return value.has_value();
    return value && *value == p.value;
}

// child::step applied to one parent; predicates filter in sequence, so a
// positional predicate counts among the survivors of the ones before it.
void child_step(const Document& doc, NodeId parent, const XPath::Step& step, std::vector<NodeId>& out) {
    std::vector<NodeId> matched;
    for (NodeId c : doc.node(parent).children) {
        if (element_matches(doc, c, step)) matched.push_back(c);
    }
    for (const auto& p : step.predicates) {
        std::vector<NodeId> kept;
        if (p.kind == XPath::Predicate::Kind::Position) {
            if (p.position <= matched.size()) kept.push_back(matched[p.position - 1]);
        } else {
            for (NodeId c : matched)
                if (attribute_predicate_holds(doc, c, p)) kept.push_back(c);
        }
        matched = std::move(kept);
    }
    out.insert(out.end(), matched.begin(), matched.end());
}

void descendants_or_self(const Document& doc, NodeId id, std::vector<NodeId>& out) {
    out.push_back(id);
    for (NodeId c : doc.node(id).children) {
        if (doc.node(c).kind != NodeKind::Text) descendants_or_self(doc, c, out);
    }
}

void sort_unique(std::vector<NodeId>& ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
}

// Context nodes reached before the terminal step, plus the terminal step itself.
struct Evaluated {
    std::vector<NodeId> nodes;
    const XPath::Step* terminal = nullptr;
};

Evaluated run(const Document& doc, const XPath::Path& path) {
    std::vector<NodeId> context{doc.root()};
    for (const auto& step : path) {
        std::vector<NodeId> parents;
        if (step.axis == XPath::Step::Axis::Descendant) {
            for (NodeId c : context) descendants_or_self(doc, c, parents);
            sort_unique(parents);
        } else {
            parents = context;
        }
        if (step.test != XPath::Step::Test::Element) return {parents, &step};
        std::vector<NodeId> next;
        for (NodeId p : parents) child_step(doc, p, step, next);
        sort_unique(next);
        context = std::move(next);
    }
    return {context, nullptr};
}

}  // namespace

XPath XPath::compile(std::string_view expr) {
    XPath x;
    x.source_ = std::string(expr);
    x.branches_ = Parser(expr).parse();
    return x;
}

std::vector<NodeId> XPath::select(const Document& doc) const {
    std::vector<NodeId> out;
    for (const auto& branch : branches_) {
        auto ev = run(doc, branch);
        if (ev.terminal && ev.terminal->test == Step::Test::Text) {
            for (NodeId p : ev.nodes)
                for (NodeId c : doc.node(p).children)
                    if (doc.node(c).kind == NodeKind::Text) out.push_back(c);
        } else {
            out.insert(out.end(), ev.nodes.begin(), ev.nodes.end());
        }
    }
    sort_unique(out);
    return out;
}

std::vector<std::string> XPath::evaluate(const Document& doc) const {
    // Attribute branches produce values keyed by their owning element so that
    // a union stays in document order.
    std::vector<std::pair<NodeId, std::string>> keyed;
    std::set<std::pair<NodeId, std::string>> seen_attr;
    for (const auto& branch : branches_) {
        auto ev = run(doc, branch);
        if (ev.terminal && ev.terminal->test == Step::Test::Attribute) {
            for (NodeId p : ev.nodes) {
                if (doc.node(p).kind != NodeKind::Element) continue;
                auto v = doc.attribute(p, ev.terminal->name);
                if (v && seen_attr.emplace(p, ev.terminal->name).second) keyed.emplace_back(p, std::string(*v));
            }
        } else if (ev.terminal) {
            for (NodeId p : ev.nodes)
                for (NodeId c : doc.node(p).children)
                    if (doc.node(c).kind == NodeKind::Text) keyed.emplace_back(c, doc.node(c).text);
        } else {
            for (NodeId n : ev.nodes) keyed.emplace_back(n, doc.string_value(n));
        }
    }
    std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::string> out;
    std::optional<NodeId> last;
    for (auto& [id, s] : keyed) {
        // identical node selected by two branches
        if (last && *last == id && !out.empty() && out.back() == s) continue;
        last = id;
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<std::string> XPath::element_names() const {
    std::vector<std::string> names;
    for (const auto& branch : branches_)
        for (const auto& step : branch)
            if (step.test == Step::Test::Element) names.push_back(step.name);
    return names;
}

}  // namespace seopinion::ingest
