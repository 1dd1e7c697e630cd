#include "gpc/label.hpp"

#include <algorithm>
#include <charconv>
#include <optional>

namespace gpc {

namespace {

constexpr std::string_view kReserved = "(),{}|<>\\";

bool is_reserved(char c) { return kReserved.find(c) != std::string_view::npos; }

void render_into(const VertexLabel& label, std::string& out);

struct Renderer {
    std::string& out;

    void operator()(const VertexLabel::Atom& a) const {
        for (char c : a.text) {
            if (is_reserved(c))
                out.push_back('\\');
            out.push_back(c);
        }
    }
    void operator()(const VertexLabel::Sub& s) const {
        out.push_back('(');
        render_into(*s.from, out);
        out.push_back(',');
        render_into(*s.to, out);
        out += ")_";
        out += std::to_string(s.index);
    }
    void operator()(const VertexLabel::SetTuple& t) const {
        for (std::size_t i = 0; i < t.sets.size(); ++i) {
            if (i > 0)
                out.push_back('|');
            out.push_back('{');
            for (std::size_t j = 0; j < t.sets[i].size(); ++j) {
                if (j > 0)
                    out.push_back(',');
                out += std::to_string(t.sets[i][j]);
            }
            out.push_back('}');
        }
    }
    void operator()(const VertexLabel::Pair& p) const {
        out.push_back('<');
        render_into(*p.outer, out);
        out.push_back(',');
        render_into(*p.inner, out);
        out.push_back('>');
    }
};

void render_into(const VertexLabel& label, std::string& out) {
    std::visit(Renderer{out}, label.value());
}

// Recursive-descent parser over the rendering grammar. Every routine returns
// nullopt on mismatch; the caller then falls back to a plain Atom.
class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    std::optional<VertexLabel> parse_all() {
        auto label = parse_label();
        if (!label || pos_ != text_.size())
            return std::nullopt;
        return label;
    }

private:
    std::optional<VertexLabel> parse_label() {
        if (pos_ >= text_.size())
            return parse_atom();
        switch (text_[pos_]) {
        case '(':
            return parse_sub();
        case '{':
            return parse_set_tuple();
        case '<':
            return parse_pair();
        default:
            return parse_atom();
        }
    }

    std::optional<VertexLabel> parse_atom() {
        std::string text;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '\\') {
                if (pos_ + 1 >= text_.size())
                    return std::nullopt;
                text.push_back(text_[pos_ + 1]);
                pos_ += 2;
                continue;
            }
            if (is_reserved(c))
                break;
            text.push_back(c);
            ++pos_;
        }
        return VertexLabel::atom(std::move(text));
    }

    bool expect(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::optional<long long> parse_int() {
        std::size_t start = pos_;
        if (pos_ < text_.size() && text_[pos_] == '-')
            ++pos_;
        while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9')
            ++pos_;
        long long value = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
        if (ec != std::errc{} || ptr != text_.data() + pos_ || pos_ == start)
            return std::nullopt;
        return value;
    }

    std::optional<VertexLabel> parse_sub() {
        if (!expect('('))
            return std::nullopt;
        auto from = parse_label();
        if (!from || !expect(','))
            return std::nullopt;
        auto to = parse_label();
        if (!to || !expect(')') || !expect('_'))
            return std::nullopt;
        auto index = parse_int();
        if (!index)
            return std::nullopt;
        return VertexLabel::sub(*from, *to, static_cast<int>(*index));
    }

    std::optional<VertexLabel> parse_set_tuple() {
        std::vector<std::vector<int>> sets;
        do {
            if (!expect('{'))
                return std::nullopt;
            std::vector<int> set;
            if (!expect('}')) {
                do {
                    auto v = parse_int();
                    if (!v)
                        return std::nullopt;
                    set.push_back(static_cast<int>(*v));
                } while (expect(','));
                if (!expect('}'))
                    return std::nullopt;
            }
            if (!std::is_sorted(set.begin(), set.end()) ||
                std::adjacent_find(set.begin(), set.end()) != set.end())
                return std::nullopt;
            sets.push_back(std::move(set));
        } while (expect('|'));
        return VertexLabel::sets(std::move(sets));
    }

    std::optional<VertexLabel> parse_pair() {
        if (!expect('<'))
            return std::nullopt;
        auto outer = parse_label();
        if (!outer || !expect(','))
            return std::nullopt;
        auto inner = parse_label();
        if (!inner || !expect('>'))
            return std::nullopt;
        return VertexLabel::pair(*outer, *inner);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

VertexLabel VertexLabel::atom(std::string text) { return VertexLabel(Atom{std::move(text)}); }

VertexLabel VertexLabel::sub(const VertexLabel& from, const VertexLabel& to, int index) {
    return VertexLabel(Sub{std::make_shared<const VertexLabel>(from),
                           std::make_shared<const VertexLabel>(to), index});
}

VertexLabel VertexLabel::sets(std::vector<std::vector<int>> sets) {
    for (auto& s : sets) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
    }
    return VertexLabel(SetTuple{std::move(sets)});
}

VertexLabel VertexLabel::pair(const VertexLabel& outer, const VertexLabel& inner) {
    return VertexLabel(Pair{std::make_shared<const VertexLabel>(outer),
                            std::make_shared<const VertexLabel>(inner)});
}

VertexLabel VertexLabel::parse(std::string_view text) {
    if (auto label = Parser(text).parse_all())
        return *label;
    return atom(std::string(text));
}

std::string VertexLabel::render() const {
    std::string out;
    render_into(*this, out);
    return out;
}

}  // namespace gpc
