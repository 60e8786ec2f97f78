#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace seopinion::ingest {

using NodeId = std::size_t;

enum class NodeKind { Document, Element, Text };

struct Attribute {
    std::string name;  // lowercased
    std::string value; // entity-decoded
};

struct Node {
    NodeKind kind = NodeKind::Element;
    std::string name;  // lowercased tag name; empty for text and document nodes
    std::vector<Attribute> attributes;
    std::string text;  // text nodes only
    std::optional<NodeId> parent;
    std::vector<NodeId> children;
};

/// Lenient HTML document tree.
///
/// Parsing never fails: unknown constructs become text, unmatched end tags are
/// dropped and open elements are closed implicitly the way browsers do for
/// the common cases (p, li, tr, td, option, ...). No tbody is synthesized, so
/// paths written against the served markup keep working.
///
/// Node ids are assigned in document order; comparing ids compares positions.
class Document {
public:
    static Document parse(std::string_view html);

    [[nodiscard]] NodeId root() const { return 0; }
    [[nodiscard]] const Node& node(NodeId id) const { return nodes_.at(id); }
    [[nodiscard]] std::size_t size() const { return nodes_.size(); }

    [[nodiscard]] std::optional<std::string_view> attribute(NodeId id, std::string_view name) const;

    /// Concatenated text of every descendant text node.
    [[nodiscard]] std::string string_value(NodeId id) const;

private:
    Document() = default;
    NodeId add(Node n);

    std::vector<Node> nodes_;

    friend class HtmlBuilder;
};

/// Decodes character references (&amp;, &#233;, &#x2019; ...) to UTF-8.
std::string decode_entities(std::string_view in);

/// Collapses whitespace runs (ASCII space classes and U+00A0) to one space and trims.
std::string normalize_whitespace(std::string_view in);

}  // namespace seopinion::ingest
