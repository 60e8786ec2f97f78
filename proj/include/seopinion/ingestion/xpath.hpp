#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "seopinion/ingestion/html.hpp"

namespace seopinion::ingest {

/// Compiled location path over a `Document`.
///
/// Supported subset:
///   - absolute (`/a`) and descendant (`//a`) steps, relative paths start at the root
///   - name tests and `*`
///   - predicates `[@attr='v']`, `[@attr="v"]`, `[@attr]` and positional `[n]`
///   - a terminal `text()` or `@attr` step
///   - unions of such paths with `|`
///
/// Anything else is a `ParseError`.
class XPath {
public:
    static XPath compile(std::string_view expr);

    [[nodiscard]] const std::string& source() const { return source_; }

    /// Element nodes (or text nodes, for a text() path) in document order.
    [[nodiscard]] std::vector<NodeId> select(const Document& doc) const;

    /// Raw string results in document order: text-node content, attribute
    /// values, or element string-values.
    [[nodiscard]] std::vector<std::string> evaluate(const Document& doc) const;

    /// Names of every element step, in order, across all union branches.
    [[nodiscard]] std::vector<std::string> element_names() const;

    struct Predicate {
        enum class Kind { AttributeEquals, AttributeExists, Position };
        Kind kind;
        std::string attribute;
        std::string value;
        std::size_t position = 0;
    };

    struct Step {
        enum class Axis { Child, Descendant };
        enum class Test { Element, Text, Attribute };
        Axis axis = Axis::Child;
        Test test = Test::Element;
        std::string name;  // element or attribute name; "*" matches any element
        std::vector<Predicate> predicates;
    };

    using Path = std::vector<Step>;

private:
    std::string source_;
    std::vector<Path> branches_;
};

}  // namespace seopinion::ingest
