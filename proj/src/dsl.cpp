#include "resgraph/dsl.hpp"
#include "resgraph/errors.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>
#include <sstream>

namespace resgraph {

namespace {

struct Token {
    enum class Kind { Word, Integer, LBracket, RBracket, Comma, Equals, End };
    Kind kind = Kind::End;
    std::string text;
    long long value = 0;
    int line = 1;
    int column = 1;
};

const char* token_name(Token::Kind k) {
    switch (k) {
        case Token::Kind::Word: return "a word";
        case Token::Kind::Integer: return "an integer";
        case Token::Kind::LBracket: return "'['";
        case Token::Kind::RBracket: return "']'";
        case Token::Kind::Comma: return "','";
        case Token::Kind::Equals: return "'='";
        case Token::Kind::End: return "end of input";
    }
    return "?";
}

bool is_keyword(const std::string& s) {
    return s == "chain" || s == "cycle" || s == "star" || s == "fork" || s == "vertex" ||
           s == "edge";
}

std::vector<Token> tokenize(const std::string& src) {
    std::vector<Token> out;
    int line = 1, column = 1;
    size_t i = 0;
    while (i < src.size()) {
        const char c = src[i];
        if (c == '\n') {
            ++line;
            column = 1;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++column;
            ++i;
            continue;
        }
        Token t;
        t.line = line;
        t.column = column;
        if (c == '[' || c == ']' || c == ',' || c == '=') {
            t.kind = c == '[' ? Token::Kind::LBracket
                     : c == ']' ? Token::Kind::RBracket
                     : c == ',' ? Token::Kind::Comma
                                : Token::Kind::Equals;
            ++i;
            ++column;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            t.text = src.substr(i, j - i);
            if (t.text.size() > 9) throw ParseError(line, column, "integer literal too large");
            t.kind = Token::Kind::Integer;
            t.value = std::stoll(t.text);
            column += static_cast<int>(j - i);
            i = j;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i;
            while (j < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
                ++j;
            t.kind = Token::Kind::Word;
            t.text = src.substr(i, j - i);
            column += static_cast<int>(j - i);
            i = j;
        } else {
            throw ParseError(line, column, std::string("unexpected character '") + c + "'");
        }
        out.push_back(std::move(t));
    }
    Token end;
    end.line = line;
    end.column = column;
    out.push_back(std::move(end));
    return out;
}

class Parser {
public:
    explicit Parser(const std::string& src) : toks_(tokenize(src)) {}

    DualGraph run() {
        if (peek().kind == Token::Kind::End)
            throw ParseError(peek().line, peek().column, "empty graph source");
        while (peek().kind != Token::Kind::End) decl();
        return DualGraph(std::move(vs_), es_);
    }

private:
    const Token& peek(size_t ahead = 0) const {
        return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
    }
    Token take() { return toks_[pos_++]; }

    [[noreturn]] static void fail(const Token& t, const std::string& why) {
        throw ParseError(t.line, t.column, why);
    }

    Token expect(Token::Kind k, const std::string& what) {
        if (peek().kind != k)
            fail(peek(), "expected " + what + ", found " + token_name(peek().kind));
        return take();
    }

    // A weight of a genus-0 curve produced by a shorthand declaration.
    int curve_weight() {
        const Token t = expect(Token::Kind::Integer, "a weight");
        if (t.value < 2)
            fail(t, "weight " + t.text + " on a genus-0 curve; a minimal resolution needs >= 2");
        return static_cast<int>(t.value);
    }

    std::vector<int> wlist() {
        expect(Token::Kind::LBracket, "'['");
        std::vector<int> w{curve_weight()};
        while (peek().kind == Token::Kind::Comma) {
            take();
            w.push_back(curve_weight());
        }
        expect(Token::Kind::RBracket, "']'");
        return w;
    }

    void add_vertex(const std::string& id, int weight, int genus, const Token& at) {
        if (!ids_.insert(id).second) fail(at, "duplicate vertex id '" + id + "'");
        vs_.push_back({id, weight, genus});
    }

    std::string fresh(const Token& at) {
        const std::string id = "v" + std::to_string(counter_++);
        if (ids_.count(id)) fail(at, "generated id '" + id + "' collides with a declared vertex");
        return id;
    }

    void decl() {
        const Token t = expect(Token::Kind::Word, "a declaration keyword");
        if (t.text == "chain") {
            chain_like(t, /*close=*/false);
        } else if (t.text == "cycle") {
            chain_like(t, /*close=*/true);
        } else if (t.text == "star") {
            star_decl(t);
        } else if (t.text == "fork") {
            fork_decl(t);
        } else if (t.text == "vertex") {
            vertex_decl();
        } else if (t.text == "edge") {
            edge_decl();
        } else {
            fail(t, "unknown declaration '" + t.text +
                        "'; expected chain, cycle, star, fork, vertex or edge");
        }
    }

    void chain_like(const Token& at, bool close) {
        const std::vector<int> w = wlist();
        if (close && w.size() < 2)
            fail(at, "cycle needs at least two curves; write a nodal curve as a cycle of two");
        std::vector<std::string> ids;
        for (int weight : w) {
            ids.push_back(fresh(at));
            add_vertex(ids.back(), weight, 0, at);
        }
        for (size_t i = 1; i < ids.size(); ++i) es_.emplace_back(ids[i - 1], ids[i]);
        if (close) es_.emplace_back(ids.back(), ids.front());
    }

    void star_decl(const Token& at) {
        const int center = curve_weight();
        const std::string center_id = fresh(at);
        add_vertex(center_id, center, 0, at);
        expect(Token::Kind::LBracket, "'[' opening the arm list");
        for (;;) {
            std::string prev = center_id;
            for (int weight : wlist()) {
                const std::string id = fresh(at);
                add_vertex(id, weight, 0, at);
                es_.emplace_back(prev, id);
                prev = id;
            }
            if (peek().kind != Token::Kind::Comma) break;
            take();
        }
        expect(Token::Kind::RBracket, "']' closing the arm list");
    }

    void fork_decl(const Token& at) {
        const std::vector<int> spine = wlist();
        std::vector<std::string> ids;
        for (int weight : spine) {
            ids.push_back(fresh(at));
            add_vertex(ids.back(), weight, 0, at);
        }
        for (size_t i = 1; i < ids.size(); ++i) es_.emplace_back(ids[i - 1], ids[i]);
        for (int t = 0; t < 2; ++t) {
            const std::string id = fresh(at);
            add_vertex(id, 2, 0, at);
            es_.emplace_back(ids.front(), id);
        }
        for (int t = 0; t < 2; ++t) {
            const std::string id = fresh(at);
            add_vertex(id, 2, 0, at);
            es_.emplace_back(ids.back(), id);
        }
    }

    void vertex_decl() {
        const Token id = expect(Token::Kind::Word, "a vertex id");
        if (is_keyword(id.text)) fail(id, "'" + id.text + "' is a reserved word");
        const Token w = expect(Token::Kind::Word, "'w'");
        if (w.text != "w") fail(w, "expected 'w'");
        expect(Token::Kind::Equals, "'='");
        const Token wt = expect(Token::Kind::Integer, "a weight");
        int genus = 0;
        if (peek().kind == Token::Kind::Word && peek().text == "g" &&
            peek(1).kind == Token::Kind::Equals) {
            take();
            take();
            genus = static_cast<int>(expect(Token::Kind::Integer, "a genus").value);
        }
        if (wt.value < 1) fail(wt, "weight must be >= 1");
        if (genus == 0 && wt.value < 2)
            fail(wt, "weight " + wt.text + " on a genus-0 curve; a minimal resolution needs >= 2");
        add_vertex(id.text, static_cast<int>(wt.value), genus, id);
    }

    void edge_decl() {
        const Token a = expect(Token::Kind::Word, "a vertex id");
        const Token b = expect(Token::Kind::Word, "a vertex id");
        for (const Token* t : {&a, &b})
            if (!ids_.count(t->text)) fail(*t, "unknown vertex '" + t->text + "'");
        if (a.text == b.text)
            fail(b, "self-loop on '" + a.text + "'; model a nodal curve as a cycle of curves");
        es_.emplace_back(a.text, b.text);
    }

    std::vector<Token> toks_;
    size_t pos_ = 0;
    std::vector<Vertex> vs_;
    std::vector<std::pair<std::string, std::string>> es_;
    std::set<std::string> ids_;
    size_t counter_ = 0;
};

bool printable_id(const std::string& id) {
    if (id.empty() || is_keyword(id)) return false;
    if (!std::isalpha(static_cast<unsigned char>(id[0])) && id[0] != '_') return false;
    return std::all_of(id.begin(), id.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

} // namespace

DualGraph parse_graph(const std::string& text) { return Parser(text).run(); }

std::string print_graph(const DualGraph& g) {
    std::ostringstream os;
    for (Eigen::Index i = 0; i < g.size(); ++i) {
        const Vertex& v = g.vertex(i);
        if (!printable_id(v.id))
            throw DomainError("vertex id '" + v.id + "' cannot be written in the DSL");
        os << "vertex " << v.id << " w=" << v.weight;
        if (v.genus > 0) os << " g=" << v.genus;
        os << '\n';
    }
    for (const auto& [a, b] : g.edges())
        os << "edge " << g.vertex(a).id << ' ' << g.vertex(b).id << '\n';
    return os.str();
}

std::string json_rational(const Rational& v) { return to_string(v); }

Json json_int(const Int& v) {
    static const Int lo = Int(std::numeric_limits<long long>::min());
    static const Int hi = Int(std::numeric_limits<long long>::max());
    if (v >= lo && v <= hi) return static_cast<long long>(v);
    return to_string(v);
}

Json report_envelope(const std::string& command) {
    Json j;
    j["schema_version"] = "1";
    j["tool"] = "resgraph";
    j["command"] = command;
    return j;
}

namespace {

Json json_rational_or_int(const Rational& v) {
    if (is_integer(v)) return json_int(numerator(v));
    return json_rational(v);
}

Json graph_summary(const DualGraph& g) {
    Json j;
    j["vertices"] = static_cast<long long>(g.size());
    j["edges"] = static_cast<long long>(g.edges().size());
    j["shape"] = recognize_shape(g).str();
    return j;
}

} // namespace

Json invariants_report(const DualGraph& g, const std::string& source) {
    Json j = report_envelope("invariants");
    j["input"] = source;
    j["graph"] = graph_summary(g);
    j["definiteness"] = to_cstring(is_negative_definite(g));

    const Codiscrepancy d = codiscrepancy(g);
    Json delta;
    for (Eigen::Index i = 0; i < g.size(); ++i)
        delta[g.vertex(i).id] = json_rational(d.delta(i));
    j["delta"] = std::move(delta);
    j["K2"] = json_rational(d.k2);
    j["index"] = json_int(d.index);
    j["max_coeff"] = json_rational(d.max_coeff);
    j["log_canonical"] = d.log_canonical();
    j["log_terminal"] = d.log_terminal();

    const FundamentalCycle fc = fundamental_cycle(g);
    Json z;
    for (Eigen::Index i = 0; i < g.size(); ++i)
        z[g.vertex(i).id] = json_int(numerator(fc.z(i)));
    Json fj;
    fj["z"] = std::move(z);
    fj["z2"] = json_rational(fc.z2);
    fj["pa"] = json_int(fc.pa);
    fj["mult"] = json_int(fc.mult);
    fj["rational"] = fc.rational;
    j["fundamental_cycle"] = std::move(fj);

    const MilnorNumber m = milnor_number(g);
    Json mj;
    mj["value"] = json_rational(m.value);
    mj["integral"] = m.integral;
    j["milnor_number"] = std::move(mj);

    if (d.log_canonical() && fc.rational)
        j["c_anticanonical"] = json_rational(c_anticanonical(g));
    return j;
}

Json classify_report(const DualGraph& g, const std::string& source) {
    Json j = report_envelope("classify");
    j["input"] = source;
    j["graph"] = graph_summary(g);

    const Codiscrepancy d = codiscrepancy(g);
    const SingularityClass cls = classify(g);
    j["class"] = cls.str();
    j["kind"] = to_cstring(cls.kind);
    j["index"] = json_int(cls.index);
    if (cls.cyclic) {
        Json c;
        c["r"] = json_int(cls.cyclic->r);
        c["q"] = json_int(cls.cyclic->q);
        j["cyclic"] = std::move(c);
    }
    if (cls.kind == SingularityClass::Kind::IndexTwoFork) j["spine"] = cls.spine;
    if (cls.kind == SingularityClass::Kind::IndexHighStar) {
        Json st;
        st["n"] = cls.star_n;
        st["index"] = cls.star_index;
        Json arms = Json::array();
        for (const CyclicType& t : cls.arm_types) {
            Json a;
            a["r"] = json_int(t.r);
            a["q"] = json_int(t.q);
            arms.push_back(std::move(a));
        }
        st["arms"] = std::move(arms);
        j["star"] = std::move(st);
    }
    if (cls.dv != DvKind::None) j["arm_pattern"] = to_cstring(cls.dv);
    j["K2"] = json_rational(d.k2);
    j["rational_singularity"] = rationality(g);

    const Verdict v = smoothability(g, cls);
    Json sj;
    sj["status"] = to_cstring(v.status);
    sj["reason"] = v.provenance;
    if (v.mu) sj["mu"] = json_int(*v.mu);
    j["smoothability"] = std::move(sj);
    return j;
}

Json hj_report(const CyclicType& t) {
    Json j = report_envelope("hj");
    j["r"] = json_int(t.r);
    j["q"] = json_int(t.q);
    const std::vector<int> chain = to_chain(t);
    j["chain"] = chain;

    const CyclicType d = dual(t);
    Json dj;
    dj["r"] = json_int(d.r);
    dj["q"] = json_int(d.q);
    dj["chain"] = to_chain(d);
    j["dual"] = std::move(dj);

    const CyclicType rev = swap_orientation(t);
    Json rj;
    rj["r"] = json_int(rev.r);
    rj["q"] = json_int(rev.q);
    j["reversed"] = std::move(rj);

    const TClassification tc = t_singularity_params(t);
    Json tj;
    tj["kind"] = tc.kind == TClassification::Kind::DuVal ? "DuVal"
                 : tc.kind == TClassification::Kind::T   ? "T"
                                                         : "NotT";
    if (tc.params) {
        tj["d"] = json_int(tc.params->d);
        tj["n"] = json_int(tc.params->n);
        tj["a"] = json_int(tc.params->a);
    }
    j["t_classification"] = std::move(tj);

    const Codiscrepancy cod = codiscrepancy(chain_graph(chain));
    j["K2"] = json_rational(cod.k2);
    j["index"] = json_int(cod.index);
    return j;
}

Json table_report(const TableVerification& tv) {
    Json j = report_envelope("verify-table");
    j["all_ok"] = tv.all_ok;
    Json rows = Json::array();
    for (const RowVerification& r : tv.rows) {
        Json rj;
        rj["row"] = r.row;
        rj["n"] = r.n;
        rj["o"] = r.classification;
        Json extras = Json::array();
        for (int k : r.extra_duval) extras.push_back("A" + std::to_string(k));
        rj["extra_du_val"] = std::move(extras);
        rj["rho_y"] = r.rho_y;
        rj["rho_table"] = r.rho_table;
        rj["k2x_formula"] = json_rational(r.k2x_formula);
        rj["k2x_accounting"] = json_rational(r.k2x_accounting);
        if (r.mu_sum) rj["mu_sum"] = json_int(*r.mu_sum);
        if (r.noether) rj["noether_sum"] = json_rational_or_int(*r.noether);
        rj["existence"] = to_cstring(r.existence);
        rj["ok"] = r.ok;
        if (!r.note.empty()) rj["note"] = r.note;
        rows.push_back(std::move(rj));
    }
    j["rows"] = std::move(rows);
    Json bounds = Json::array();
    for (const DerivedBounds& b : tv.bounds) {
        Json bj;
        bj["row"] = b.row;
        bj["n_min"] = b.n_min;
        bj["n_max"] = b.n_max;
        bj["table_min"] = b.table_min;
        bj["table_max"] = b.table_max;
        bj["ok"] = b.ok;
        bounds.push_back(std::move(bj));
    }
    j["derived_bounds"] = std::move(bounds);
    return j;
}

Json t_sweep_report(const TSweep& s) {
    Json j = report_envelope("sweep-t-singularities");
    j["max_r"] = s.max_r;
    j["types"] = s.types;
    j["du_val"] = s.du_val;
    j["t"] = s.t;
    j["not_t"] = s.not_t;
    j["k2_integral_iff_smoothable"] = s.k2_integral_iff_t;
    Json list = Json::array();
    for (const auto& [type, params] : s.t_types) {
        Json e;
        e["r"] = json_int(type.r);
        e["q"] = json_int(type.q);
        e["d"] = json_int(params.d);
        e["n"] = json_int(params.n);
        e["a"] = json_int(params.a);
        list.push_back(std::move(e));
    }
    j["t_types"] = std::move(list);
    return j;
}

Json classification_sweep_report(const SweepSummary& s) {
    Json j = report_envelope("classify");
    Json bj;
    bj["max_vertices"] = s.max_vertices;
    bj["max_weight"] = s.max_weight;
    j["sweep"] = std::move(bj);
    j["graphs"] = s.graphs;
    j["not_contractible"] = s.not_contractible;
    Json kinds;
    for (const auto& [kind, count] : s.by_kind) kinds[kind] = count;
    j["by_kind"] = std::move(kinds);
    Json sm;
    sm["smoothable"] = s.smoothable;
    sm["not_smoothable"] = s.not_smoothable;
    sm["unknown"] = s.unknown;
    j["smoothability"] = std::move(sm);
    return j;
}

Json lefschetz_report(int order, const std::vector<TwoPointSolution>& solutions) {
    Json j = report_envelope("lefschetz");
    j["order"] = order;
    Json arr = Json::array();
    bool verified = true;
    for (const TwoPointSolution& s : solutions) {
        arr.push_back(Json::array({Json::array({s.first.first, s.first.second}),
                                   Json::array({s.second.first, s.second.second})}));
        verified = verified && lefschetz_sum(order, {{s.first.first, s.first.second},
                                                     {s.second.first, s.second.second}})
                                   .is_one();
    }
    j["solutions"] = std::move(arr);
    j["count"] = static_cast<long long>(solutions.size());
    j["verified"] = verified;
    return j;
}

namespace {

bool scalar_array(const Json& a) {
    return std::all_of(a.begin(), a.end(), [](const Json& x) { return x.is_primitive(); });
}

std::string scalar_str(const Json& v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
}

std::string inline_array(const Json& a) {
    std::string s = "[";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) s += ", ";
        s += scalar_str(a[i]);
    }
    return s + "]";
}

void render_object(const Json& obj, int indent, std::ostringstream& os);

void render_array(const Json& arr, int indent, std::ostringstream& os) {
    const std::string pad(static_cast<size_t>(indent) * 2, ' ');
    for (const Json& item : arr) {
        if (item.is_object()) {
            bool first = true;
            for (auto it = item.begin(); it != item.end(); ++it) {
                const Json& v = it.value();
                os << pad << (first ? "- " : "  ");
                first = false;
                if (v.is_object() || (v.is_array() && !scalar_array(v)))
                    os << it.key() << ": " << v.dump() << '\n';
                else if (v.is_array())
                    os << it.key() << ": " << inline_array(v) << '\n';
                else
                    os << it.key() << ": " << scalar_str(v) << '\n';
            }
        } else if (item.is_array()) {
            os << pad << "- " << item.dump() << '\n';
        } else {
            os << pad << "- " << scalar_str(item) << '\n';
        }
    }
}

void render_object(const Json& obj, int indent, std::ostringstream& os) {
    const std::string pad(static_cast<size_t>(indent) * 2, ' ');
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        const Json& v = it.value();
        if (v.is_object() && !v.empty()) {
            os << pad << it.key() << ":\n";
            render_object(v, indent + 1, os);
        } else if (v.is_array() && !v.empty() && !scalar_array(v)) {
            os << pad << it.key() << ":\n";
            render_array(v, indent + 1, os);
        } else if (v.is_array()) {
            os << pad << it.key() << ": " << inline_array(v) << '\n';
        } else if (v.is_object()) {
            os << pad << it.key() << ": {}\n";
        } else {
            os << pad << it.key() << ": " << scalar_str(v) << '\n';
        }
    }
}

} // namespace

std::string render_text(const Json& j) {
    std::ostringstream os;
    if (j.is_object())
        render_object(j, 0, os);
    else if (j.is_array())
        render_array(j, 0, os);
    else
        os << scalar_str(j) << '\n';
    return os.str();
}

} // namespace resgraph
