#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace gpc {

/// Structured vertex name.
///
/// Rendering grammar (parsed back by VertexLabel::parse):
///   Atom      text, with the reserved characters ( ) , { } | < > \ escaped by '\'
///   Sub       "(" u "," v ")_" i        the subdivision vertex (uv)_i
///   SetTuple  "{1,2}|{3}|{}"            tuple of sorted integer sets
///   Pair      "<" outer "," inner ">"
class VertexLabel {
public:
    struct Atom {
        std::string text;
    };
    struct Sub {
        std::shared_ptr<const VertexLabel> from;
        std::shared_ptr<const VertexLabel> to;
        int index;
    };
    struct SetTuple {
        std::vector<std::vector<int>> sets;
    };
    struct Pair {
        std::shared_ptr<const VertexLabel> outer;
        std::shared_ptr<const VertexLabel> inner;
    };
    using Value = std::variant<Atom, Sub, SetTuple, Pair>;

    VertexLabel() : value_(Atom{}) {}

    static VertexLabel atom(std::string text);
    static VertexLabel atom(long long number) { return atom(std::to_string(number)); }
    static VertexLabel sub(const VertexLabel& from, const VertexLabel& to, int index);
    /// Each set is sorted and deduplicated.
    static VertexLabel sets(std::vector<std::vector<int>> sets);
    static VertexLabel pair(const VertexLabel& outer, const VertexLabel& inner);

    /// Inverse of render(). Text that does not match the structured grammar is an Atom.
    static VertexLabel parse(std::string_view text);

    const Value& value() const { return value_; }
    std::string render() const;

    bool is_atom() const { return std::holds_alternative<Atom>(value_); }
    bool is_sub() const { return std::holds_alternative<Sub>(value_); }
    bool is_set_tuple() const { return std::holds_alternative<SetTuple>(value_); }
    bool is_pair() const { return std::holds_alternative<Pair>(value_); }

    friend bool operator==(const VertexLabel& a, const VertexLabel& b) {
        return a.render() == b.render();
    }

private:
    explicit VertexLabel(Value v) : value_(std::move(v)) {}
    Value value_;
};

}  // namespace gpc
