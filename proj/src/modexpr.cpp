#include <algorithm>
#include <cctype>
#include <sstream>
#include <functional>
#include <memory>
#include <regex>

#include "quiverhom/error.hpp"
#include "quiverhom/shell.hpp"

namespace qh {

namespace {

std::string trim(std::string_view s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

struct Node {
    enum Kind { Sum, Scale, Atom, Rep } kind;
    std::string name;   // Atom: function name
    std::string arg;    // Atom: raw argument text; Rep: body
    std::size_t factor = 1;
    std::vector<std::unique_ptr<Node>> children;
};

class ExprParser {
public:
    explicit ExprParser(std::string_view text) : s_(text) {}

    std::unique_ptr<Node> parse() {
        auto n = sum();
        skip();
        if (i_ != s_.size()) error("unexpected '" + std::string(1, s_[i_]) + "'");
        return n;
    }

private:
    [[noreturn]] void error(const std::string& what) const {
        fail(ErrorCode::ParseError, "module expression at column " + std::to_string(i_ + 1) + ": " + what);
    }
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool eat(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }
    std::unique_ptr<Node> sum() {
        auto first = term();
        if (!eat('+')) return first;
        auto n = std::make_unique<Node>();
        n->kind = Node::Sum;
        n->children.push_back(std::move(first));
        do n->children.push_back(term());
        while (eat('+'));
        return n;
    }
    std::unique_ptr<Node> term() {
        skip();
        if (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
            std::size_t start = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            std::size_t k = std::stoul(std::string(s_.substr(start, i_ - start)));
            if (!eat('*')) error("expected '*' after multiplicity");
            auto n = std::make_unique<Node>();
            n->kind = Node::Scale;
            n->factor = k;
            n->children.push_back(factor());
            return n;
        }
        return factor();
    }
    std::unique_ptr<Node> factor() {
        if (eat('(')) {
            auto n = sum();
            if (!eat(')')) error("expected ')'");
            return n;
        }
        skip();
        std::size_t start = i_;
        while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
        if (start == i_) error("expected a module");
        auto n = std::make_unique<Node>();
        n->name = std::string(s_.substr(start, i_ - start));
        if (n->name == "rep") {
            n->kind = Node::Rep;
            if (!eat('{')) error("expected '{' after rep");
            std::size_t close = s_.find('}', i_);
            if (close == std::string_view::npos) error("unterminated rep{...}");
            n->arg = std::string(s_.substr(i_, close - i_));
            i_ = close + 1;
            return n;
        }
        n->kind = Node::Atom;
        if (!eat('(')) error("expected '(' after " + n->name);
        int depth = 1;
        std::size_t arg_start = i_;
        while (i_ < s_.size() && depth > 0) {
            if (s_[i_] == '(') ++depth;
            if (s_[i_] == ')') --depth;
            ++i_;
        }
        if (depth != 0) error("unbalanced parentheses");
        n->arg = trim(s_.substr(arg_start, i_ - 1 - arg_start));
        return n;
    }

    std::string_view s_;
    std::size_t i_ = 0;
};

VertexId vertex_of(const Quiver& q, const std::string& name) {
    auto v = q.find_vertex(name);
    require(v.has_value(), ErrorCode::ParseError, "unknown vertex '" + name + "'");
    return *v;
}

std::vector<std::string> split_args(const std::string& arg) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= arg.size(); ++i)
        if (i == arg.size() || arg[i] == ',') {
            out.push_back(trim(std::string_view(arg).substr(start, i - start)));
            start = i + 1;
        }
    return out;
}

std::size_t positive(const std::string& s, const std::string& what) {
    require(!s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }),
            ErrorCode::ParseError, what + " expects a positive integer, got '" + s + "'");
    std::size_t v = std::stoul(s);
    require(v > 0, ErrorCode::ParseError, what + " expects a positive integer");
    return v;
}

Matrix parse_matrix(const Field& F, std::string text, std::size_t rows, std::size_t cols, const std::string& arrow) {
    text.erase(std::remove_if(text.begin(), text.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }),
               text.end());
    Matrix m(rows, cols);
    if (text == "[]" || text == "[[]]") {
        require(rows == 0 || cols == 0, ErrorCode::ParseError, "matrix of " + arrow + " is empty");
        return m;
    }
    require(text.size() >= 4 && text.rfind("[[", 0) == 0 && text.substr(text.size() - 2) == "]]",
            ErrorCode::ParseError, "matrix of " + arrow + " must look like [[..],[..]]");
    std::string inner = text.substr(2, text.size() - 4);
    std::vector<std::string> row_texts;
    std::size_t start = 0;
    for (std::size_t pos; (pos = inner.find("],[", start)) != std::string::npos; start = pos + 3)
        row_texts.push_back(inner.substr(start, pos - start));
    row_texts.push_back(inner.substr(start));
    require(row_texts.size() == rows, ErrorCode::ParseError,
            "matrix of " + arrow + " needs " + std::to_string(rows) + " rows (target dimension)");
    for (std::size_t r = 0; r < rows; ++r) {
        std::vector<std::string> entries = split_args(row_texts[r]);
        require(entries.size() == cols, ErrorCode::ParseError,
                "matrix of " + arrow + " needs " + std::to_string(cols) + " columns (source dimension)");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = F.reduce(parse_scalar(entries[c]));
    }
    return m;
}

Representation parse_rep(const AlgebraPtr& A, const std::string& body) {
    const Quiver& q = A->quiver();
    std::vector<std::size_t> dims(q.num_vertices(), 0);
    std::vector<std::pair<ArrowId, std::string>> assignments;
    for (const std::string& item : [&] {
             std::vector<std::string> items;
             std::size_t start = 0;
             int depth = 0;
             for (std::size_t i = 0; i <= body.size(); ++i) {
                 if (i < body.size() && body[i] == '[') ++depth;
                 if (i < body.size() && body[i] == ']') --depth;
                 if (i == body.size() || (body[i] == ';' && depth == 0)) {
                     items.push_back(trim(std::string_view(body).substr(start, i - start)));
                     start = i + 1;
                 }
             }
             return items;
         }()) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq != std::string::npos) {
            std::string name = trim(std::string_view(item).substr(0, eq));
            auto a = q.find_arrow(name);
            require(a.has_value(), ErrorCode::ParseError, "unknown arrow '" + name + "' in rep{}");
            assignments.emplace_back(*a, item.substr(eq + 1));
            continue;
        }
        std::string spaced = item;
        std::replace(spaced.begin(), spaced.end(), ',', ' ');
        std::istringstream in(spaced);
        for (std::string w; in >> w;) {
            auto colon = w.find(':');
            require(colon != std::string::npos, ErrorCode::ParseError, "expected 'vertex:dim' in rep{}, got '" + w + "'");
            dims[vertex_of(q, w.substr(0, colon))] = std::stoul(w.substr(colon + 1));
        }
    }
    std::vector<Matrix> mats;
    for (const Arrow& a : q.arrows()) mats.emplace_back(dims[a.target], dims[a.source]);
    for (const auto& [a, text] : assignments) {
        const Arrow& arr = q.arrow(a);
        mats[a] = parse_matrix(A->field(), text, dims[arr.target], dims[arr.source], arr.name);
    }
    Representation R(A, dims, std::move(mats));
    require(check_relations(R), ErrorCode::InvalidArgument, "rep{} does not satisfy the relations");
    return R;
}

struct Arrows4 {
    ArrowId alpha, alphabar, beta, betabar;
    VertexId source, target;
};

Arrows4 example_arrows(const Quiver& q, std::size_t i) {
    std::string k = std::to_string(i);
    auto get = [&](const std::string& n) {
        auto a = q.find_arrow(n);
        require(a.has_value(), ErrorCode::InvalidArgument, "generator needs an arrow named '" + n + "'");
        return *a;
    };
    Arrows4 out{get("alpha" + k), get("alphabar" + k), get("beta" + k), get("betabar" + k), 0, 0};
    out.source = q.arrow(out.alpha).source;
    out.target = q.arrow(out.alpha).target;
    for (ArrowId a : {out.alphabar, out.beta, out.betabar})
        require(q.arrow(a).source == out.source && q.arrow(a).target == out.target, ErrorCode::InvalidArgument,
                "arrows of index " + k + " must be parallel");
    return out;
}

// i_1..i_4 : k^n -> k^{3n+1} with e_j -> f_j, f_{n+j}, f_{n+j+1}, f_{2n+j+1}.
Matrix inclusion(std::size_t m, std::size_t n) {
    static const std::size_t offset[] = {0, 0, 1, 1, 2};
    static const std::size_t shift[] = {0, 0, 0, 1, 1};
    Matrix out(3 * n + 1, n);
    for (std::size_t j = 0; j < n; ++j) out(offset[m] * n + j + shift[m], j) = 1;
    return out;
}

Representation block_module(const AlgebraPtr& A, std::size_t i, std::size_t n, const int (&which)[4]) {
    require(n >= 1, ErrorCode::InvalidArgument, "n must be positive");
    const Quiver& q = A->quiver();
    Arrows4 ar = example_arrows(q, i);
    std::vector<std::size_t> dims(q.num_vertices(), 0);
    dims[ar.source] = n;
    dims[ar.target] = 3 * n + 1;
    std::vector<Matrix> mats;
    for (const Arrow& a : q.arrows()) mats.emplace_back(dims[a.target], dims[a.source]);
    mats[ar.alphabar] = inclusion(which[0], n);
    mats[ar.alpha] = inclusion(which[1], n);
    mats[ar.beta] = inclusion(which[2], n);
    mats[ar.betabar] = inclusion(which[3], n);
    Representation R(A, dims, std::move(mats));
    require(check_relations(R), ErrorCode::InvalidArgument, "generated module violates the relations");
    return R;
}

Representation scalar_pair(const AlgebraPtr& A, const char* first, const char* second, const Scalar& a) {
    const Quiver& q = A->quiver();
    auto get = [&](const char* n) {
        auto x = q.find_arrow(n);
        require(x.has_value(), ErrorCode::InvalidArgument, std::string("generator needs an arrow named '") + n + "'");
        return *x;
    };
    ArrowId x = get(first), y = get(second);
    const Arrow& ax = q.arrow(x);
    require(q.arrow(y).source == ax.source && q.arrow(y).target == ax.target, ErrorCode::InvalidArgument,
            std::string(first) + " and " + second + " must be parallel");
    std::vector<std::size_t> dims(q.num_vertices(), 0);
    dims[ax.source] = 1;
    dims[ax.target] = 1;
    std::vector<Matrix> mats;
    for (const Arrow& arr : q.arrows()) mats.emplace_back(dims[arr.target], dims[arr.source]);
    mats[x](0, 0) = A->field().reduce(a);
    mats[y](0, 0) = 1;
    Representation R(A, dims, std::move(mats));
    require(check_relations(R), ErrorCode::InvalidArgument, "generated module violates the relations");
    return R;
}

Representation eval_linear(const AlgebraPtr& A, const Node& n) {
    const Quiver& q = A->quiver();
    switch (n.kind) {
    case Node::Sum: {
        std::vector<Representation> parts;
        for (const auto& c : n.children) parts.push_back(eval_linear(A, *c));
        std::vector<const Representation*> ptrs;
        for (const Representation& r : parts) ptrs.push_back(&r);
        return direct_sum(ptrs);
    }
    case Node::Scale:
        return power(eval_linear(A, *n.children[0]), n.factor);
    case Node::Rep:
        return parse_rep(A, n.arg);
    case Node::Atom:
        break;
    }
    std::vector<std::string> args = split_args(n.arg);
    auto arity = [&](std::size_t k) {
        require(args.size() == k, ErrorCode::ParseError, n.name + " takes " + std::to_string(k) + " argument(s)");
    };
    if (n.name == "path") return cyclic_module(A, parse_path(q, n.arg));
    if (n.name == "simple") return arity(1), simple_module(A, vertex_of(q, args[0]));
    if (n.name == "proj") return arity(1), projective_module(A, vertex_of(q, args[0]));
    if (n.name == "inj") return arity(1), injective_module(A, vertex_of(q, args[0]));
    if (n.name == "M") return arity(1), m_a(A, parse_scalar(args[0]));
    if (n.name == "N") return arity(1), n_a(A, parse_scalar(args[0]));
    if (n.name == "M_alpha") return arity(2), m_alpha(A, positive(args[0], "M_alpha"), positive(args[1], "M_alpha"));
    if (n.name == "M_beta") return arity(2), m_beta(A, positive(args[0], "M_beta"), positive(args[1], "M_beta"));
    fail(ErrorCode::ParseError, "unknown module constructor '" + n.name + "'");
}

ModuleMultiset eval_comb(const ClassTable& T, const Node& n) {
    const Quiver& q = T.algebra().quiver();
    switch (n.kind) {
    case Node::Sum: {
        ModuleMultiset out;
        for (const auto& c : n.children) add_to(out, eval_comb(T, *c));
        return out;
    }
    case Node::Scale: {
        ModuleMultiset out;
        add_to(out, eval_comb(T, *n.children[0]), n.factor);
        return out;
    }
    case Node::Rep:
        fail(ErrorCode::InvalidArgument, "rep{} is a linear module; this command works with path modules");
    case Node::Atom:
        break;
    }
    if (n.name == "path") return singleton(T.class_of(parse_path(q, n.arg)));
    if (n.name == "simple") return singleton(T.simple(vertex_of(q, trim(n.arg))));
    if (n.name == "proj") return singleton(T.projective(vertex_of(q, trim(n.arg))));
    if (n.name == "inj" || n.name == "M" || n.name == "N" || n.name == "M_alpha" || n.name == "M_beta")
        fail(ErrorCode::InvalidArgument, n.name + "(...) is a linear module; this command works with path modules");
    fail(ErrorCode::ParseError, "unknown module constructor '" + n.name + "'");
}

}  // namespace

ModuleMultiset eval_multiset(const ClassTable& T, std::string_view expr) {
    return eval_comb(T, *ExprParser(expr).parse());
}

Representation eval_representation(const AlgebraPtr& A, std::string_view expr) {
    return eval_linear(A, *ExprParser(expr).parse());
}

Representation m_a(const AlgebraPtr& A, const Scalar& a) { return scalar_pair(A, "alpha1", "alpha2", a); }
// beta1 acts as 1 and beta2 as a.
Representation n_a(const AlgebraPtr& A, const Scalar& a) { return scalar_pair(A, "beta2", "beta1", a); }

Representation m_alpha(const AlgebraPtr& A, std::size_t i, std::size_t n) {
    static const int which[4] = {2, 3, 1, 4};  // alphabar, alpha, beta, betabar
    return block_module(A, i, n, which);
}

Representation m_beta(const AlgebraPtr& A, std::size_t i, std::size_t n) {
    static const int which[4] = {4, 1, 3, 2};
    return block_module(A, i, n, which);
}

std::vector<std::string> expand_ranges(std::string_view expr) {
    static const std::regex range(R"((\d+)\.\.(\d+))");
    std::string s(expr);
    std::smatch m;
    if (!std::regex_search(s, m, range)) return {s};
    std::size_t lo = std::stoul(m[1]), hi = std::stoul(m[2]);
    require(lo <= hi, ErrorCode::ParseError, "empty range in '" + s + "'");
    std::vector<std::string> out;
    std::string prefix = m.prefix(), suffix = m.suffix();
    for (std::size_t v = lo; v <= hi; ++v)
        for (std::string& rest : expand_ranges(suffix)) out.push_back(prefix + std::to_string(v) + rest);
    return out;
}

std::vector<CatalogEntry> build_catalog(const AlgebraFile& file) {
    std::vector<CatalogEntry> out;
    for (const CatalogLine& line : file.catalog)
        for (const std::string& e : expand_ranges(line.expr))
            out.push_back({eval_representation(file.algebra, e), e, line.opaque});
    return out;
}

}  // namespace qh
