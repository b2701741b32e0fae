#pragma once

/*
 * bimat: command-line workbench over the bimatrix library.
 *
 *   bimat [--json] <verb> [flags] FILE...
 *
 * Exit codes
 *   0  success
 *   1  parse, I/O or usage error
 *   2  dimension, shape or index error
 *   3  degenerate collapse
 *   4  singular or not diagonalizable
 *   5  inconsistent linear system
 *   6  internal error
 */

#include "report.hpp"

#include <bimatrix.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

namespace bimat {

using namespace bimatrix;

enum ExitCode : int {
    kOk = 0,
    kParseOrIO = 1,
    kShape = 2,
    kCollapse = 3,
    kSingular = 4,
    kInconsistent = 5,
    kInternal = 6,
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string verb;
    std::vector<std::string> files;
    std::string mode = "weak";
    std::string rows;
    std::string at;
    std::string rows1, cols1, rows2, cols2;
    std::string scalar;
    bool json = false;
};

// ---------------------------------------------------------------- helpers

template <typename T>
std::string pair_text(const T& a, const T& b, bool compact = false)
{
    return "(" + a.str() + (compact ? "," : ", ") + b.str() + ")";
}

template <typename T>
json pair_json(const T& a, const T& b)
{
    return json::array({a.str(), b.str()});
}

template <typename T>
Field bidet_field(const std::string& key, const BiDeterminant<T>& d)
{
    return {key, pair_text(d.first, d.second, true), pair_json(d.first, d.second)};
}

// "1,3,5" (1-based) -> {0,2,4}
inline IndexSet parse_indices(const std::string& s, const char* flag)
{
    if (s.empty()) throw UsageError(std::string("missing ") + flag);
    IndexSet out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t end = s.find(',', pos);
        if (end == std::string::npos) end = s.size();
        const std::string item = s.substr(pos, end - pos);
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 9)
            throw UsageError(std::string("bad index list for ") + flag + ": '" + s + "'");
        const Index v = std::stoul(item);
        if (v == 0) throw IndexOutOfRange(std::string(flag) + ": indices start at 1");
        out.push_back(v - 1);
        pos = end + 1;
    }
    return out;
}

inline BiMatrixFile load(const std::string& path, Validation v = Validation::Checked)
{
    return parse_bimatrix_file(path, v);
}

template <typename T>
const BiMatrix<T>& as(const BiMatrixFile& f, const std::string& verb)
{
    if (const auto* b = std::get_if<BiMatrix<T>>(&f.value)) return *b;
    throw UsageError(verb + " needs a " + to_string(RingOf<T>::value) + " bimatrix, got " + to_string(f.ring()));
}

inline void same_ring(const BiMatrixFile& a, const BiMatrixFile& b)
{
    if (a.ring() != b.ring())
        throw UsageError(std::string("ring mismatch: ") + to_string(a.ring()) + " and " + to_string(b.ring()));
}

inline NeutroBiMatrix as_neutrosophic(const BiMatrixFile& f)
{
    return std::visit(
        [](const auto& b) -> NeutroBiMatrix {
            return map_bimatrix(b, [](const auto& x) { return to_neutrosophic(x); });
        },
        f.value);
}

template <typename T>
constexpr bool is_ring_v = !std::is_same_v<T, FuzzyNeutroValue>;

// ---------------------------------------------------------------- verbs

inline void cmd_classify(const Options& o, Report& r)
{
    const auto f = load(o.files[0]);
    std::visit(
        [&](const auto& b) {
            r.kv("ring", to_string(f.ring()));
            r.kv("shape", to_string(classify_shape(b)));
            using M = std::decay_t<decltype(b.first())>;
            r.kv("first", M::dims_str(b.first()));
            r.kv("second", M::dims_str(b.second()));
        },
        f.value);
}

template <typename Fn>
void binary_ring_op(const Options& o, Report& r, Fn&& fn)
{
    const auto a = load(o.files[0]);
    const auto b = load(o.files[1]);
    same_ring(a, b);
    std::visit(
        [&](const auto& x) {
            using B = std::decay_t<decltype(x)>;
            using T = typename B::scalar_type;
            if constexpr (is_ring_v<T>) {
                r.bimatrix("result", fn(x, std::get<B>(b.value)));
            } else {
                throw UsageError(o.verb + " is not defined over the fuzzy ring");
            }
        },
        a.value);
}

inline void cmd_add(const Options& o, Report& r)
{
    binary_ring_op(o, r, [](const auto& a, const auto& b) { return add(a, b); });
}

inline void cmd_mul(const Options& o, Report& r)
{
    binary_ring_op(o, r, [](const auto& a, const auto& b) { return mul(a, b); });
}

inline void cmd_scalarmul(const Options& o, Report& r)
{
    if (o.scalar.empty()) throw UsageError("scalarmul needs --scalar");
    const auto f = load(o.files[0]);
    std::visit(
        [&](const auto& b) {
            using T = typename std::decay_t<decltype(b)>::scalar_type;
            if constexpr (is_ring_v<T>) {
                auto s = T::try_parse(o.scalar);
                if (!s) throw UsageError("bad scalar '" + o.scalar + "' for the " + to_string(f.ring()) + " ring");
                r.bimatrix("result", scalar_mul(*s, b));
            } else {
                throw UsageError("scalarmul is not defined over the fuzzy ring");
            }
        },
        f.value);
}

inline void cmd_transpose(const Options& o, Report& r)
{
    const auto f = load(o.files[0]);
    std::visit([&](const auto& b) { r.bimatrix("result", transpose(b), f.field1, f.field2); }, f.value);
}

inline void cmd_symskew(const Options& o, Report& r)
{
    const auto f = load(o.files[0]);
    std::visit(
        [&](const auto& b) {
            using T = typename std::decay_t<decltype(b)>::scalar_type;
            if constexpr (is_ring_v<T>) {
                const auto p = sym_skew_decompose(b);
                r.begin("symmetric");
                r.bimatrix("bimatrix", p.symmetric_part);
                r.end();
                r.begin("skew");
                r.bimatrix("bimatrix", p.skew_part);
                r.end();
            } else {
                throw UsageError("symskew is not defined over the fuzzy ring");
            }
        },
        f.value);
}

inline void cmd_sub(const Options& o, Report& r)
{
    const auto f = load(o.files[0]);
    const IndexSet r1 = parse_indices(o.rows1, "--rows1");
    const IndexSet c1 = parse_indices(o.cols1, "--cols1");
    const IndexSet r2 = parse_indices(o.rows2, "--rows2");
    const IndexSet c2 = parse_indices(o.cols2, "--cols2");
    std::visit([&](const auto& b) { r.bimatrix("result", subbimatrix(b, r1, c1, r2, c2), f.field1, f.field2); },
               f.value);
}

inline void cmd_overlap(const Options& o, Report& r)
{
    const auto f = load(o.files[0]);
    std::visit(
        [&](const auto& b) {
            const auto rep = detect_overlap(b);
            r.kv("overlap", to_string(rep.kind));
            auto emit = [&](const char* group, const char* label, const auto& shared) {
                for (const auto& s : shared)
                    r.record(group, {{label, tuple_text(s.entries, true), tuple_json(s.entries)},
                                     {"first", index_set_text(s.in_first), index_set_json(s.in_first)},
                                     {"second", index_set_text(s.in_second), index_set_json(s.in_second)}});
            };
            emit("rows", "row", rep.shared_rows);
            emit("columns", "column", rep.shared_cols);
        },
        f.value);
}

inline void cmd_det(const Options& o, Report& r)
{
    const auto f = load(o.files[0]);
    const auto d = bideterminant(as<Rational>(f, o.verb));
    r.kv("bidet", pair_text(d.first, d.second), pair_json(d.first, d.second));
}

inline void cmd_cofactor(const Options& o, Report& r)
{
    const auto f = load(o.files[0]);
    const IndexSet at = parse_indices(o.at, "--at");
    if (at.size() != 2) throw UsageError("--at takes i,j");
    const auto d = bicofactor(as<Rational>(f, o.verb), at[0], at[1]);
    r.kv("bicofactor", pair_text(d.first, d.second), pair_json(d.first, d.second));
}

inline void cmd_laplace(const Options& o, Report& r)
{
    const auto f = load(o.files[0]);
    const auto e = bilaplace_expand(as<Rational>(f, o.verb), parse_indices(o.rows, "--rows"));
    for (const auto& t : e.terms)
        r.record("terms", {{"cols", index_set_text(t.cols), index_set_json(t.cols)},
                           {"sign", t.sign > 0 ? "+1" : "-1", json(t.sign)},
                           bidet_field("|N|", t.minor),
                           bidet_field("|M|", t.complement),
                           bidet_field("term", t.term)});
    r.kv("total", pair_text(e.total.first, e.total.second, true), pair_json(e.total.first, e.total.second));
}

inline void cmd_inverse(const Options& o, Report& r)
{
    const auto f = load(o.files[0]);
    r.bimatrix("result", biinverse(as<Rational>(f, o.verb)));
}

inline void cmd_singularity(const Options& o, Report& r)
{
    const auto f = load(o.files[0]);
    const auto& b = as<Rational>(f, o.verb);
    const auto d = bideterminant(b);
    r.kv("bidet", pair_text(d.first, d.second), pair_json(d.first, d.second));
    r.kv("class", singularity_class(b).str());
}

inline void cmd_rectdet(const Options& o, Report& r)
{
    const auto a = load(o.files[0]);
    const auto b = load(o.files[1]);
    const auto res = rectangular_product_bidet(as<Rational>(a, o.verb), as<Rational>(b, o.verb));
    for (const auto& t : res.terms)
        r.record("terms", {{"cols", index_set_text(t.cols), index_set_json(t.cols)},
                           bidet_field("|A|", t.a_minor),
                           bidet_field("|B|", t.b_minor),
                           bidet_field("term", t.term)});
    r.kv("total", pair_text(res.total.first, res.total.second, true), pair_json(res.total.first, res.total.second));
}

inline Field op_field(const RowOp<Rational>& op)
{
    using K = RowOp<Rational>::Kind;
    switch (op.kind) {
    case K::Swap: return {"op", "swap", "swap"};
    case K::Scale: return {"op", "scale", "scale"};
    case K::AddMultiple: return {"op", "add", "add"};
    }
    return {"op", "?", "?"};
}

inline void cmd_rref(const Options& o, Report& r)
{
    ReductionMode mode;
    if (o.mode == "weak") mode = ReductionMode::Weak;
    else if (o.mode == "strong") mode = ReductionMode::Strong;
    else throw UsageError("--mode must be weak or strong");
    const auto f = load(o.files[0]);
    const auto red = row_bireduce(as<Rational>(f, o.verb), mode);
    r.kv("mode", o.mode);
    r.bimatrix("result", red.result);
    using K = RowOp<Rational>::Kind;
    for (const auto& bo : red.ops) {
        std::vector<Field> fields{op_field(bo.op), {"scope", to_string(bo.scope), to_string(bo.scope)},
                                  {"row", std::to_string(bo.op.target + 1), json(bo.op.target + 1)}};
        if (bo.op.kind == K::Swap) fields.push_back({"with", std::to_string(bo.op.source + 1), json(bo.op.source + 1)});
        if (bo.op.kind == K::AddMultiple) fields.push_back({"source", std::to_string(bo.op.source + 1), json(bo.op.source + 1)});
        if (bo.op.kind != K::Swap) fields.push_back({"factor", bo.op.factor.str(), bo.op.factor.str()});
        r.record("ops", fields);
    }
    if (mode == ReductionMode::Strong) {
        r.kv("partial", red.partial);
        r.kv("second_reduced", red.second_reduced);
    }
}

inline void cmd_solve(const Options& o, Report& r)
{
    const auto a = load(o.files[0]);
    const auto y = load(o.files[1], Validation::Relaxed);
    const auto& yb = as<Rational>(y, o.verb);
    if (yb.first().cols() != 1 || yb.second().cols() != 1)
        throw ShapeError("right-hand side components must be column vectors");
    const auto s = solve_biequation(as<Rational>(a, o.verb), yb.first().col(0), yb.second().col(0));
    r.kv("homogeneous", s.homogeneous);
    r.kv("semi_homogeneous", s.semi_homogeneous);
    for (const auto* part : {&s.first, &s.second}) {
        r.begin(part == &s.first ? "first" : "second");
        r.kv("particular", tuple_text(part->particular), tuple_json(part->particular));
        for (const auto& v : part->nullspace_basis) r.push("basis", tuple_text(v), tuple_json(v));
        r.end();
    }
}

inline void poly_pair(Report& r, const BiPolynomial& p)
{
    r.kv("first", p.first.str());
    r.kv("second", p.second.str());
}

inline void cmd_charpoly(const Options& o, Report& r)
{
    const auto f = load(o.files[0]);
    poly_pair(r, char_bipolynomial(as<Rational>(f, o.verb)));
}

inline void cmd_minpoly(const Options& o, Report& r)
{
    const auto f = load(o.files[0]);
    poly_pair(r, biminimal_polynomial(as<Rational>(f, o.verb)));
}

inline void spectrum_section(Report& r, const char* name, const ComponentSpectrum& s)
{
    r.begin(name);
    r.kv("charpoly", s.characteristic.str());
    for (const auto& root : s.roots) {
        std::string shown = "{";
        json basis = json::array();
        for (std::size_t k = 0; k < root.basis.size(); ++k) {
            if (k) shown += ",";
            shown += tuple_text(root.basis[k], true);
            basis.push_back(tuple_json(root.basis[k]));
        }
        shown += "}";
        r.record("roots", {{"root", root.value.str(), root.value.str()},
                           {"alg", std::to_string(root.algebraic), json(root.algebraic)},
                           {"geo", std::to_string(root.geometric()), json(root.geometric())},
                           {"basis", shown, basis}});
    }
    r.kv("residual", s.residual.str());
    r.end();
}

inline void cmd_eigen(const Options& o, Report& r)
{
    const auto f = load(o.files[0]);
    const auto rep = bieigen(as<Rational>(f, o.verb));
    spectrum_section(r, "first", rep.first);
    spectrum_section(r, "second", rep.second);
    r.kv("classification", to_string(rep.classification));
}

inline void cmd_diagcheck(const Options& o, Report& r)
{
    const auto f = load(o.files[0]);
    const auto d = is_bidiagonalizable(as<Rational>(f, o.verb));
    r.kv("bidiagonalizable", d.holds());
    for (const auto* w : {&d.first, &d.second}) {
        r.begin(w == &d.first ? "first" : "second");
        r.kv("diagonalizable", w->diagonalizable);
        if (w->eigenbasis) r.kv("eigenbasis", matrix_text(*w->eigenbasis), matrix_json(*w->eigenbasis));
        else r.kv("reason", w->reason);
        r.end();
    }
}

inline void cmd_projections(const Options& o, Report& r)
{
    const auto f = load(o.files[0]);
    const auto p = biprojections(as<Rational>(f, o.verb));
    for (const auto* side : {&p.first, &p.second}) {
        r.begin(side == &p.first ? "first" : "second");
        for (const auto& e : *side)
            r.record("projections", {{"eigenvalue", e.eigenvalue.str(), e.eigenvalue.str()},
                                     {"E", matrix_text(e.matrix), matrix_json(e.matrix)}});
        r.end();
    }
}

inline void cmd_tricheck(const Options& o, Report& r)
{
    const auto f = load(o.files[0]);
    const auto t = is_bitriangularizable(as<Rational>(f, o.verb));
    r.kv("first", t.first);
    r.kv("second", t.second);
    r.kv("bitriangularizable", t.overall());
}

inline void cmd_nilcheck(const Options& o, Report& r)
{
    const auto f = load(o.files[0]);
    r.kv("binilpotent", is_binilpotent(as<Rational>(f, o.verb)));
}

inline void cmd_simcheck(const Options& o, Report& r)
{
    const auto a = load(o.files[0]);
    const auto b = load(o.files[1]);
    const auto p = load(o.files[2]);
    const auto s = check_similarity_witness(as<Rational>(a, o.verb), as<Rational>(b, o.verb), as<Rational>(p, o.verb));
    std::string kind = s.kind == Similarity::Similar       ? "Similar"
                     : s.kind == Similarity::NotSimilar    ? "NotSimilar"
                                                           : std::string("SemiSimilar:") + to_string(s.witnessed);
    r.kv("similarity", kind);
    r.kv("holds", s.holds());
}

inline void cmd_neutro_mul(const Options& o, Report& r)
{
    const auto a = load(o.files[0]);
    const auto b = load(o.files[1]);
    if (a.ring() == Ring::Fuzzy || b.ring() == Ring::Fuzzy) throw UsageError("neutro-mul needs neutrosophic or rational bimatrices");
    r.bimatrix("result", bimatrix_lift(neutro_matmul, as_neutrosophic(a), as_neutrosophic(b)));
}

inline void cmd_fuzzy_compose(const Options& o, Report& r)
{
    const auto a = load(o.files[0]);
    const auto b = load(o.files[1]);
    r.bimatrix("result", bimatrix_lift(fuzzy_maxmin_compose, as<FuzzyNeutroValue>(a, o.verb), as<FuzzyNeutroValue>(b, o.verb)));
}

inline void cmd_neutro_classify(const Options& o, Report& r)
{
    const auto f = load(o.files[0]);
    if (f.ring() == Ring::Fuzzy) throw UsageError("neutro-classify needs a neutrosophic or rational bimatrix");
    const auto c = classify_neutro(as_neutrosophic(f), f.field_tags());
    r.kv("kind", c.kind_str());
    r.kv("shape", to_string(c.shape));
    r.kv("field_scope", to_string(c.field_scope));
}

inline void cmd_fuzzy_classify(const Options& o, Report& r)
{
    const auto f = load(o.files[0]);
    const auto c = classify_fuzzy(as_neutrosophic(f));
    r.kv("fuzzy", FuzzyClass::kind_str(c.fuzzy_kind, c.fuzzy_component));
    const std::string neutro = c.neutro_kind == FuzzyKind::Fuzzy       ? "FuzzyNeutrosophic"
                             : c.neutro_kind == FuzzyKind::NotFuzzy    ? "None"
                                                                       : std::string("SemiFuzzyNeutrosophic:") + to_string(c.neutro_component);
    r.kv("fuzzy_neutrosophic", neutro);
    r.kv("shape", to_string(c.shape));
    for (const auto* m : {&c.first, &c.second}) {
        r.begin(m == &c.first ? "first" : "second");
        r.kv("fuzzy", m->fuzzy);
        r.kv("integral_neutrosophic", m->integral_neutro);
        r.kv("fuzzy_neutrosophic", m->fuzzy_neutro);
        r.end();
    }
}

// ---------------------------------------------------------------- dispatch

struct Verb {
    const char* name;
    const char* help;
    std::size_t files;
    std::function<void(const Options&, Report&)> handler;
};

inline const std::vector<Verb>& verbs()
{
    static const std::vector<Verb> table{
        {"classify", "shape class of a bimatrix", 1, cmd_classify},
        {"add", "sum of two bimatrices", 2, cmd_add},
        {"mul", "product of two bimatrices", 2, cmd_mul},
        {"scalarmul", "scalar multiple (--scalar)", 1, cmd_scalarmul},
        {"transpose", "componentwise transpose", 1, cmd_transpose},
        {"symskew", "symmetric and skew-symmetric parts", 1, cmd_symskew},
        {"sub", "subbimatrix (--rows1 --cols1 --rows2 --cols2)", 1, cmd_sub},
        {"overlap", "rows and columns shared by both components", 1, cmd_overlap},
        {"det", "bideterminant", 1, cmd_det},
        {"cofactor", "bicofactor at --at i,j", 1, cmd_cofactor},
        {"laplace", "Laplace expansion along --rows", 1, cmd_laplace},
        {"inverse", "biinverse", 1, cmd_inverse},
        {"singularity", "bisingular / semi bisingular / non bisingular", 1, cmd_singularity},
        {"rectdet", "bideterminant of a rectangular product, term by term", 2, cmd_rectdet},
        {"rref", "row bireduction (--mode weak|strong)", 1, cmd_rref},
        {"solve", "solve A X = Y; Y holds column vectors", 2, cmd_solve},
        {"charpoly", "characteristic bipolynomial", 1, cmd_charpoly},
        {"minpoly", "minimal bipolynomial", 1, cmd_minpoly},
        {"eigen", "rational eigenvalues, eigenspaces and classification", 1, cmd_eigen},
        {"diagcheck", "bidiagonalizability with witness", 1, cmd_diagcheck},
        {"projections", "spectral projections", 1, cmd_projections},
        {"tricheck", "bitriangularizability", 1, cmd_tricheck},
        {"nilcheck", "binilpotence", 1, cmd_nilcheck},
        {"simcheck", "check B = P^-1 A P for files A B P", 3, cmd_simcheck},
        {"neutro-mul", "product under I*I = I", 2, cmd_neutro_mul},
        {"fuzzy-compose", "max-min composition", 2, cmd_fuzzy_compose},
        {"neutro-classify", "neutrosophic taxonomy", 1, cmd_neutro_classify},
        {"fuzzy-classify", "fuzzy taxonomy", 1, cmd_fuzzy_classify},
    };
    return table;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact bimatrix workbench", "bimat"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_flag("--json", o.json, "emit JSON instead of text");

    std::map<CLI::App*, const Verb*> by_app;
    for (const auto& v : verbs()) {
        CLI::App* sub = app.add_subcommand(v.name, v.help);
        sub->add_option("files", o.files, "input files")->required()->expected(static_cast<int>(v.files));
        const std::string name = v.name;
        if (name == "rref") sub->add_option("--mode", o.mode, "weak or strong");
        if (name == "laplace") sub->add_option("--rows", o.rows, "row set, e.g. 1,3")->required();
        if (name == "cofactor") sub->add_option("--at", o.at, "position i,j")->required();
        if (name == "scalarmul") sub->add_option("--scalar", o.scalar, "scalar token")->required();
        if (name == "sub") {
            sub->add_option("--rows1", o.rows1, "rows of component 1, e.g. 1,3")->required();
            sub->add_option("--cols1", o.cols1, "columns of component 1")->required();
            sub->add_option("--rows2", o.rows2, "rows of component 2")->required();
            sub->add_option("--cols2", o.cols2, "columns of component 2")->required();
        }
        by_app[sub] = &v;
    }

    // Reject an unknown verb before CLI11 folds it into a generic message.
    for (int i = 1; i < argc; ++i) {
        const std::string_view a = argv[i];
        if (a.empty() || a[0] == '-') continue;
        const bool known = std::any_of(verbs().begin(), verbs().end(), [&](const Verb& v) { return a == v.name; });
        if (!known) {
            err << "error: unknown verb '" << a << "'\n";
            return kParseOrIO;
        }
        break;
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kParseOrIO;
    }

    const Verb* verb = nullptr;
    for (auto* sub : app.get_subcommands()) verb = by_app.at(sub);
    o.verb = verb->name;

    auto fail = [&](int code, const std::string& what) {
        err << "error: " << what << "\n";
        return code;
    };
    Report report;
    try {
        verb->handler(o, report);
    } catch (const ParseError& e) {
        return fail(kParseOrIO, "parse error: " + std::string(e.what()));
    } catch (const IOError& e) {
        return fail(kParseOrIO, e.what());
    } catch (const UsageError& e) {
        return fail(kParseOrIO, e.what());
    } catch (const DimMismatch& e) {
        return fail(kShape, std::string("dimension mismatch: ") + e.what());
    } catch (const ShapeError& e) {
        return fail(kShape, std::string("shape error: ") + e.what());
    } catch (const IndexOutOfRange& e) {
        return fail(kShape, std::string("index out of range: ") + e.what());
    } catch (const DegenerateCollapse& e) {
        return fail(kCollapse, e.what());
    } catch (const SingularError& e) {
        std::string msg = e.what();
        if (e.which() != Component::Both)
            msg += std::string(" (semi bisingular; ") + (e.which() == Component::First ? "second" : "first")
                 + " component is invertible)";
        return fail(kSingular, msg);
    } catch (const NotDiagonalizable& e) {
        return fail(kSingular, std::string("not diagonalizable: ") + e.what());
    } catch (const SingularWitness& e) {
        return fail(kSingular, e.what());
    } catch (const Inconsistent& e) {
        return fail(kInconsistent, e.what());
    } catch (const std::exception& e) {
        return fail(kInternal, std::string("internal error: ") + e.what());
    }
    out << (o.json ? report.json_text() : report.text());
    return kOk;
}

} // namespace bimat
