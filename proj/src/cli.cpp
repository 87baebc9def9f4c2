#include "binform/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "binform/hermforms.hpp"
#include "binform/julia.hpp"
#include "binform/quadforms.hpp"

namespace binform::cli {

using json = nlohmann::ordered_json;

namespace {

std::string trim(std::string const & s)
{
    auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos)
        return "";
    auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(std::string const & s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

char const * kind_name(form_kind k)
{
    switch (k) {
    case form_kind::quad:
        return "quad";
    case form_kind::herm:
        return "herm";
    case form_kind::binary:
        return "binary";
    }
    return "?";
}

integer parse_integer(std::string const & text)
{
    std::string t = trim(text);
    if (!t.empty() && t[0] == '+')
        t = t.substr(1);
    integer v;
    if (t.empty() || v.set_str(t, 10) != 0)
        throw parse_error("not an integer: '" + text + "'");
    return v;
}

} // namespace

form_spec parse_form_spec(form_kind kind, std::string const & text)
{
    form_spec s{kind, {}};
    if (trim(text).empty())
        throw parse_error("empty coefficient list");
    for (auto const & item : split(text, ','))
        s.coeffs.push_back(parse_gaussian_rational(trim(item)));
    if ((kind == form_kind::quad || kind == form_kind::herm) && s.coeffs.size() != 3)
        throw parse_error(std::string(kind_name(kind)) + " form needs three coefficients");
    if (kind == form_kind::binary && s.coeffs.size() < 2)
        throw parse_error("binary form needs at least two coefficients");
    return s;
}

std::string print_form_spec(form_spec const & s)
{
    std::string out;
    for (std::size_t i = 0; i < s.coeffs.size(); ++i) {
        if (i)
            out += ",";
        out += to_string(s.coeffs[i]);
    }
    return out;
}

std::vector<integer> parse_disc_list(std::string const & text)
{
    std::vector<integer> out;
    for (auto const & raw : split(text, ',')) {
        std::string item = trim(raw);
        auto dots = item.find("..");
        if (dots == std::string::npos) {
            out.push_back(parse_integer(item));
            continue;
        }
        std::string tail = item.substr(dots + 2);
        integer step = 1;
        if (auto colon = tail.find(':'); colon != std::string::npos) {
            step = abs(parse_integer(tail.substr(colon + 1)));
            tail = tail.substr(0, colon);
        }
        if (step == 0)
            throw parse_error("zero step in '" + item + "'");
        integer from = parse_integer(item.substr(0, dots));
        integer to = parse_integer(tail);
        if (abs(to - from) / step > 100000)
            throw parse_error("range too long: '" + item + "'");
        if (from <= to)
            for (integer d = from; d <= to; d += step)
                out.push_back(d);
        else
            for (integer d = from; d >= to; d -= step)
                out.push_back(d);
    }
    return out;
}

namespace {

/* ---------------------------------------------------------------- */
/* Output                                                            */

std::string fmt_double(double x, int digits)
{
    char buf[64];
    if (x == 0.0)
        x = 0.0; // drop the sign of -0
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

void dump_json(json const & j, std::string & out, int level)
{
    std::string pad(static_cast<std::size_t>(2 * (level + 1)), ' ');
    std::string close(static_cast<std::size_t>(2 * level), ' ');
    switch (j.type()) {
    case json::value_t::object: {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first)
                out += ",\n";
            first = false;
            out += pad + json(it.key()).dump() + ": ";
            dump_json(it.value(), out, level + 1);
        }
        out += "\n" + close + "}";
        return;
    }
    case json::value_t::array: {
        if (j.empty()) {
            out += "[]";
            return;
        }
        bool flat = std::none_of(j.begin(), j.end(), [](json const & x) { return x.is_structured(); });
        if (flat) {
            out += "[";
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i)
                    out += ", ";
                dump_json(j[i], out, level + 1);
            }
            out += "]";
            return;
        }
        out += "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i)
                out += ",\n";
            out += pad;
            dump_json(j[i], out, level + 1);
        }
        out += "\n" + close + "]";
        return;
    }
    case json::value_t::number_float: {
        double x = j.get<double>();
        out += std::isfinite(x) ? fmt_double(x, 17) : "null";
        return;
    }
    default:
        out += j.dump();
    }
}

std::string scalar_text(json const & j, int digits)
{
    if (j.is_string())
        return j.get<std::string>();
    if (j.is_number_float()) {
        double x = j.get<double>();
        return std::isfinite(x) ? fmt_double(x, digits) : "inf";
    }
    if (j.is_null())
        return "";
    return j.dump();
}

void flatten(json const & j, std::string const & prefix, std::vector<std::pair<std::string, std::string>> & rows,
             int digits)
{
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), rows, digits);
        return;
    }
    if (j.is_array()) {
        bool flat = std::none_of(j.begin(), j.end(), [](json const & x) { return x.is_structured(); });
        if (flat) {
            std::string v;
            for (std::size_t i = 0; i < j.size(); ++i)
                v += (i ? "; " : "") + scalar_text(j[i], digits);
            rows.push_back({prefix, v});
            return;
        }
        for (std::size_t i = 0; i < j.size(); ++i)
            flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows, digits);
        return;
    }
    rows.push_back({prefix, scalar_text(j, digits)});
}

std::string csv_cell(std::string const & s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    return out + "\"";
}

void emit_envelope(json const & env, std::string const & format, std::ostream & out)
{
    if (format == "json") {
        std::string s;
        dump_json(env, s, 0);
        out << s << "\n";
        return;
    }
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(env, "", rows, format == "md" ? 6 : 17);
    if (format == "csv") {
        out << "key,value\n";
        for (auto const & [k, v] : rows)
            out << csv_cell(k) << "," << csv_cell(v) << "\n";
        return;
    }
    out << "| key | value |\n|---|---|\n";
    for (auto const & [k, v] : rows)
        out << "| " << k << " | " << v << " |\n";
}

/* ---------------------------------------------------------------- */
/* JSON pieces                                                       */

json jform(quad_form const & q)
{
    return json::array({q.a.get_str(), q.b.get_str(), q.c.get_str()});
}

json jform(herm_form const & q)
{
    return json::array({q.a.get_str(), to_string(q.b), q.c.get_str()});
}

json jform(int_binary_form const & f)
{
    json a = json::array();
    for (auto const & c : f.coeffs)
        a.push_back(c.get_str());
    return a;
}

json jform(gauss_binary_form const & f)
{
    json a = json::array();
    for (auto const & c : f.coeffs)
        a.push_back(to_string(c));
    return a;
}

json jmat(int_mat const & m)
{
    return json::array({json::array({m.a.get_str(), m.b.get_str()}), json::array({m.c.get_str(), m.d.get_str()})});
}

json jmat(gauss_mat const & m)
{
    return json::array({json::array({to_string(m.a), to_string(m.b)}), json::array({to_string(m.c), to_string(m.d)})});
}

json jc(cplx z)
{
    return json{{"re", z.real()}, {"im", z.imag()}};
}

json jinput(form_spec const & s)
{
    json c = json::array();
    for (auto const & x : s.coeffs)
        c.push_back(to_string(x));
    return json{{"kind", kind_name(s.kind)}, {"coeffs", c}};
}

json jbounds(bounds_report const & b)
{
    return json{{"theta0", b.theta0},
                {"point_in_domain", b.point_in_domain},
                {"lead", b.lead},
                {"lead_bound", b.lead_bound},
                {"lead_margin", b.lead_bound - b.lead},
                {"lead_ok", b.lead_ok},
                {"max_root_sq", b.roots_vacuous ? json(nullptr) : json(b.max_root_sq)},
                {"root_bound", b.roots_vacuous ? json(nullptr) : json(b.root_bound)},
                {"root_margin", b.roots_vacuous ? json(nullptr) : json(b.root_bound - b.max_root_sq)},
                {"roots_ok", b.roots_ok},
                {"roots_vacuous", b.roots_vacuous},
                {"ok", b.ok()}};
}

/* ---------------------------------------------------------------- */
/* Conversions from parsed specs                                     */

rational require_rational(gaussian_rational const & x)
{
    if (!x.is_real())
        throw domain_error("expected a real coefficient, got " + to_string(x));
    return x.re;
}

integer require_integer(rational const & q, std::string const & what)
{
    if (q.get_den() != 1)
        throw domain_error(what + " needs integral coefficients, got " + q.get_str());
    return q.get_num();
}

bool all_integral(form_spec const & s)
{
    return std::all_of(s.coeffs.begin(), s.coeffs.end(), [](gaussian_rational const & x) { return x.is_integral(); });
}

bool all_real(form_spec const & s)
{
    return std::all_of(s.coeffs.begin(), s.coeffs.end(), [](gaussian_rational const & x) { return x.is_real(); });
}

binary_form to_binary(form_spec const & s)
{
    binary_form f;
    for (auto const & x : s.coeffs)
        f.coeffs.push_back(x.to_complex());
    return f;
}

int_binary_form to_int_binary(form_spec const & s)
{
    int_binary_form f;
    for (auto const & x : s.coeffs)
        f.coeffs.push_back(require_integer(require_rational(x), "this command"));
    return f;
}

gauss_binary_form to_gauss_binary(form_spec const & s)
{
    gauss_binary_form f;
    for (auto const & x : s.coeffs) {
        if (!x.is_integral())
            throw domain_error("this command needs Gaussian integer coefficients, got " + to_string(x));
        f.coeffs.push_back(x.to_gaussian_int());
    }
    return f;
}

/* y^2 = f(x): pad to the even degree 2 ceil(deg/2), so a quintic gets a
 * root at infinity. */
form_spec homogenize_curve(form_spec s)
{
    int d = s.degree();
    int target = d % 2 == 0 ? d : d + 1;
    s.coeffs.insert(s.coeffs.begin(), static_cast<std::size_t>(target - d), gaussian_rational(0));
    return s;
}

/* ---------------------------------------------------------------- */
/* Commands                                                          */

struct options {
    std::string form;
    std::string coeffs;
    std::string disc;
    std::string kind;
    std::string format = "json";
    std::string emit = "all";
    double tol = default_domain_tol;
    long seed_bound = 10;
    bool curve = false;
    bool timing = false;
    bool all_forms = false;
};

json cmd_reduce_quad(options const & o)
{
    form_spec s = parse_form_spec(form_kind::quad, o.form);
    quad_form q{require_rational(s.coeffs[0]), require_rational(s.coeffs[1]), require_rational(s.coeffs[2])};
    quad_reduction r = reduce(q);
    reduced_check chk = is_reduced(r.form);
    return json{{"command", "reduce-quad"},
                {"input", jinput(s)},
                {"output", {{"form", jform(r.form)}, {"reduced", chk.reduced}, {"boundary", chk.boundary}}},
                {"transcript", jmat(r.transform)},
                {"invariants",
                 {{"discriminant", q.discriminant().get_str()},
                  {"height_input", height(q).get_str()},
                  {"class_height", r.form.c.get_str()},
                  {"s_steps", r.steps}}},
                {"checks", {{"replay", act(r.transform, q) == r.form}}}};
}

json cmd_reduce_herm(options const & o)
{
    form_spec s = parse_form_spec(form_kind::herm, o.form);
    if (!s.coeffs[0].is_real_integer() || !s.coeffs[2].is_real_integer() || !s.coeffs[1].is_integral())
        throw domain_error("hermitian reduction needs a, c in Z and b in Z[i]");
    herm_form q{s.coeffs[0].re.get_num(), s.coeffs[1].to_gaussian_int(), s.coeffs[2].re.get_num()};
    herm_reduction r = reduce_herm(q);
    h3_point p = zero_map_herm(r.form);
    membership bk = in_B_K(p, imaginary_quadratic_field(-1), o.seed_bound, o.tol);
    return json{{"command", "reduce-herm"},
                {"input", jinput(s)},
                {"output",
                 {{"form", jform(r.form)},
                  {"reduced", is_reduced_herm(r.form).reduced},
                  {"boundary", is_reduced_herm(r.form).boundary},
                  {"point", {{"z", jc(p.z)}, {"t", p.t}}},
                  {"picard_domain", to_string(in_F_h3_Qi(p, o.tol))},
                  {"b_k_check", {{"search_bound", o.seed_bound}, {"membership", to_string(bk)}}}}},
                {"transcript", jmat(r.transform)},
                {"invariants", {{"discriminant", discriminant(q).get_str()}, {"inversions", r.steps}}},
                {"checks", {{"replay", act_herm(r.transform, q) == r.form}}}};
}

std::string md_quad_forms(reduced_class_list const & l)
{
    std::vector<quad_form> bold = l.forms.size() > 1 ? l.minimal_height_forms() : std::vector<quad_form>{};
    std::vector<bool> used(l.forms.size(), false);
    std::string out;
    for (std::size_t i = 0; i < l.forms.size(); ++i) {
        if (used[i])
            continue;
        quad_form const & f = l.forms[i];
        std::string b = f.b.get_str();
        for (std::size_t k = i + 1; k < l.forms.size(); ++k)
            if (!used[k] && l.forms[k].a == f.a && l.forms[k].c == f.c && l.forms[k].b == -f.b) {
                used[k] = true;
                b = "±" + rational(abs(f.b)).get_str();
            }
        std::string cell = "[" + f.a.get_str() + ", " + b + ", " + f.c.get_str() + "]";
        if (std::find(bold.begin(), bold.end(), f) != bold.end())
            cell = "**" + cell + "**";
        out += (out.empty() ? "" : ", ") + cell;
    }
    return out;
}

std::string md_herm_forms(herm_class_list const & l)
{
    std::vector<bool> used(l.forms.size(), false);
    std::string out;
    for (std::size_t i = 0; i < l.forms.size(); ++i) {
        if (used[i])
            continue;
        herm_form const & f = l.forms[i];
        std::string b = to_string(f.b);
        for (std::size_t k = i + 1; k < l.forms.size(); ++k) {
            herm_form const & g = l.forms[k];
            if (!used[k] && g.a == f.a && g.c == f.c && g.b.im == f.b.im && g.b.re == -f.b.re && f.b.re != 0) {
                used[k] = true;
                b = "±" + to_string(gaussian_int(abs(f.b.re), f.b.im));
            }
        }
        out += (out.empty() ? "" : ", ") + ("[" + f.a.get_str() + ", " + b + ", " + f.c.get_str() + "]");
    }
    return out;
}

void cmd_enum(options const & o, std::ostream & out)
{
    if (o.kind != "quad" && o.kind != "herm")
        throw parse_error("enum kind must be quad or herm");
    std::vector<integer> discs = parse_disc_list(o.disc);
    bool quad = o.kind == "quad";
    form_filter filter = o.all_forms ? form_filter::all : form_filter::primitive;

    std::vector<reduced_class_list> ql;
    std::vector<herm_class_list> hl;
    for (auto const & d : discs) {
        if (quad)
            ql.push_back(enumerate_reduced(d, filter));
        else
            hl.push_back(enumerate_reduced_herm(d));
    }

    if (o.format == "md") {
        out << "| Δ | forms | n |\n|---|---|---|\n";
        for (std::size_t i = 0; i < discs.size(); ++i) {
            std::string cells = quad ? md_quad_forms(ql[i]) : md_herm_forms(hl[i]);
            std::size_t n = quad ? ql[i].count : hl[i].count;
            out << "| " << discs[i].get_str() << " | " << cells << " | " << n << " |\n";
        }
        return;
    }
    if (o.format == "csv") {
        out << "disc,a,b,c,minimal_height\n";
        for (std::size_t i = 0; i < discs.size(); ++i) {
            if (quad) {
                auto mins = ql[i].minimal_height_forms();
                for (auto const & f : ql[i].forms) {
                    bool m = std::find(mins.begin(), mins.end(), f) != mins.end();
                    out << discs[i].get_str() << "," << f.a.get_str() << "," << f.b.get_str() << ","
                        << f.c.get_str() << "," << (m ? "true" : "false") << "\n";
                }
            } else {
                for (auto const & f : hl[i].forms)
                    out << discs[i].get_str() << "," << f.a.get_str() << "," << to_string(f.b) << ","
                        << f.c.get_str() << ",\n";
            }
        }
        return;
    }
    json rows = json::array();
    for (std::size_t i = 0; i < discs.size(); ++i) {
        json forms = json::array();
        json row;
        if (quad) {
            for (auto const & f : ql[i].forms)
                forms.push_back(jform(f));
            json mins = json::array();
            for (auto const & f : ql[i].minimal_height_forms())
                mins.push_back(jform(f));
            row = json{{"discriminant", discs[i].get_str()}, {"count", ql[i].count}, {"forms", forms},
                       {"minimal_height_forms", mins}};
        } else {
            for (auto const & f : hl[i].forms)
                forms.push_back(jform(f));
            json reps = json::array();
            for (auto const & f : herm_class_representatives(discs[i]))
                reps.push_back(jform(f));
            row = json{{"discriminant", discs[i].get_str()}, {"count", hl[i].count}, {"forms", forms},
                       {"class_representatives", reps}};
        }
        rows.push_back(row);
    }
    json env{{"command", "enum"},
             {"kind", o.kind},
             {"filter", quad ? (o.all_forms ? "all" : "primitive") : "all"},
             {"rows", rows}};
    std::string s;
    dump_json(env, s, 0);
    out << s << "\n";
}

julia_data julia_for_spec(form_spec const & s, double tol)
{
    if (all_integral(s)) {
        if (all_real(s))
            return julia_covariant(to_int_binary(s));
        return julia_covariant(to_gauss_binary(s));
    }
    binary_form f = to_binary(s);
    root_profile p = profile_roots(f, std::max(tol, 1e-7));
    cplx lead = 0;
    for (cplx c : f.coeffs)
        if (c != cplx(0.0)) {
            lead = c;
            break;
        }
    return julia_covariant(p, lead);
}

json jjulia(julia_data const & j, std::string const & emit)
{
    json out;
    bool all = emit == "all";
    if (all || emit == "point") {
        out["point"] = {{"t", jc(j.t)}, {"u", j.u}};
        if (j.profile.real)
            out["point"]["domain"] = to_string(in_F_h2(j.point_h2()));
        else
            out["point"]["domain"] = to_string(in_F_h3_Qi(j.point_h3()));
    }
    if (all || emit == "invariant") {
        out["invariant"] = {{"theta0", j.theta0},
                            {"theta0_unified", j.theta0_unified},
                            {"normalization_ratio", theta0_normalization_ratio(j.profile.degree)}};
    }
    if (all || emit == "quadratic") {
        complex_herm_form const & h = j.julia_herm;
        json q{{"hermitian", {{"a", h.a}, {"b", jc(h.b)}, {"c", h.c}}},
               {"hermitian_normalized", {{"a", 1.0}, {"b", jc(h.b / h.a)}, {"c", h.c / h.a}}}};
        if (j.profile.real) {
            q["real"] = json::array({j.julia_quad.a, j.julia_quad.b, j.julia_quad.c});
            q["real_normalized"] =
                json::array({1.0, j.julia_quad.b / j.julia_quad.a, j.julia_quad.c / j.julia_quad.a});
        }
        out["quadratic"] = q;
    }
    if (all) {
        out["weights"] = j.weights;
        out["roots"] = {{"real_roots", j.profile.r},
                        {"complex_pairs", j.profile.s},
                        {"infinity_multiplicity", j.profile.infinity_multiplicity},
                        {"max_multiplicity", j.profile.max_multiplicity()}};
        out["solver"] = {{"path", j.solver_path}, {"residual", j.residual}};
        out["warnings"] = j.warnings;
    }
    return out;
}

json cmd_julia(options const & o)
{
    form_spec s = parse_form_spec(form_kind::binary, o.coeffs);
    if (o.curve)
        s = homogenize_curve(s);
    if (o.emit != "all" && o.emit != "invariant" && o.emit != "quadratic" && o.emit != "point")
        throw parse_error("emit must be all, invariant, quadratic or point");
    julia_data j = julia_for_spec(s, o.tol);
    return json{{"command", "julia"}, {"input", jinput(s)}, {"output", jjulia(j, o.emit)}};
}

json cmd_reduce(options const & o)
{
    form_spec s = parse_form_spec(form_kind::binary, o.coeffs);
    if (o.curve)
        s = homogenize_curve(s);
    if (s.degree() < 3)
        throw degree_too_small("reduction needs degree >= 3");
    if (all_real(s)) {
        int_binary_form f = to_int_binary(s);
        sc_reduction r = stoll_cremona_reduce(f);
        return json{{"command", "reduce"},
                    {"input", jinput(s)},
                    {"output", {{"form", jform(r.form)}, {"point", {{"t", jc(r.julia.t)}, {"u", r.julia.u}}}}},
                    {"transcript", jmat(r.transform)},
                    {"invariants",
                     {{"height_input", naive_height(f).get_str()},
                      {"height_output", naive_height(r.form).get_str()},
                      {"theta0", r.julia.theta0},
                      {"q0_moves", r.q0_moves},
                      {"julia_moves", r.julia_moves}}},
                    {"checks", {{"replay", act_form(r.transform, f) == r.form}}}};
    }
    gauss_binary_form f = to_gauss_binary(s);
    sc_reduction_gauss r = stoll_cremona_reduce(f);
    auto height_sq = [](gauss_binary_form const & g) {
        integer h = 0;
        for (auto const & c : g.coeffs)
            h = std::max(h, norm(c));
        return h;
    };
    return json{{"command", "reduce"},
                {"input", jinput(s)},
                {"output", {{"form", jform(r.form)}, {"point", {{"t", jc(r.julia.t)}, {"u", r.julia.u}}}}},
                {"transcript", jmat(r.transform)},
                {"invariants",
                 {{"height_sq_input", height_sq(f).get_str()},
                  {"height_sq_output", height_sq(r.form).get_str()},
                  {"theta0_unified", r.julia.theta0_unified},
                  {"q0_moves", r.q0_moves},
                  {"julia_moves", r.julia_moves}}},
                {"checks", {{"replay", act_form(r.transform, f) == r.form}}}};
}

json cmd_bounds(options const & o)
{
    form_spec s = parse_form_spec(form_kind::binary, o.coeffs);
    if (o.curve)
        s = homogenize_curve(s);
    json env{{"command", "bounds"}, {"input", jinput(s)}};
    if (all_integral(s) && all_real(s) && s.degree() >= 3) {
        sc_reduction r = stoll_cremona_reduce(to_int_binary(s));
        env["reduced_first"] = !is_projective_identity(r.transform);
        env["form"] = jform(r.form);
        env["transcript"] = jmat(r.transform);
        env["report"] = jbounds(julia_bounds_check(r.julia, to_complex(r.form).coeffs));
        return env;
    }
    bounds_report b = julia_bounds_check(to_binary(s));
    env["reduced_first"] = b.reduced_first;
    env["report"] = jbounds(b);
    return env;
}

int exit_for(std::exception const & e)
{
    if (dynamic_cast<not_stable const *>(&e) || dynamic_cast<degenerate_input const *>(&e))
        return exit_unstable;
    if (dynamic_cast<domain_error const *>(&e))
        return exit_domain;
    if (dynamic_cast<numerical_error const *>(&e))
        return exit_solver;
    return exit_solver;
}

} // namespace

int run(std::vector<std::string> const & args, std::ostream & out, std::ostream & err)
{
    CLI::App app{"Reduction of binary quadratic, Hermitian and higher-degree forms"};
    app.require_subcommand(1);
    options o;

    auto add_format = [&](CLI::App * sub) {
        sub->add_option("--format", o.format, "json, csv or md")->check(CLI::IsMember({"json", "csv", "md"}));
        sub->add_flag("--timing", o.timing, "include wall time in the envelope");
    };

    auto * rq = app.add_subcommand("reduce-quad", "reduce a positive definite quadratic form");
    rq->add_option("--form", o.form, "a,b,c")->required();
    add_format(rq);

    auto * rh = app.add_subcommand("reduce-herm", "reduce a Hermitian form over Z[i]");
    rh->add_option("--form", o.form, "a,b,c with b in Z[i]")->required();
    rh->add_option("--seed-bound", o.seed_bound, "norm bound for the B_K check");
    rh->add_option("--tol", o.tol, "domain tolerance");
    add_format(rh);

    auto * en = app.add_subcommand("enum", "enumerate reduced forms");
    en->add_option("kind", o.kind, "quad or herm")->required();
    en->add_option("--disc", o.disc, "discriminant, list or range such as -3..-163:4")->required();
    en->add_flag("--all", o.all_forms, "quad: include imprimitive forms");
    add_format(en);

    auto * ju = app.add_subcommand("julia", "Julia covariant of a binary form");
    ju->add_option("--coeffs", o.coeffs, "a0,...,an")->required();
    ju->add_option("--emit", o.emit, "all, invariant, quadratic or point");
    ju->add_option("--tol", o.tol, "root clustering distance for inexact input");
    ju->add_flag("--curve", o.curve, "coefficients of f in y^2 = f(x)");
    add_format(ju);

    auto * re = app.add_subcommand("reduce", "Stoll-Cremona reduction of an integral form");
    re->add_option("--coeffs", o.coeffs, "a0,...,an")->required();
    re->add_flag("--curve", o.curve, "coefficients of f in y^2 = f(x)");
    add_format(re);

    auto * bo = app.add_subcommand("bounds", "check the Julia bounds");
    bo->add_option("--coeffs", o.coeffs, "a0,...,an")->required();
    bo->add_option("--tol", o.tol, "root clustering distance for inexact input");
    bo->add_flag("--curve", o.curve, "coefficients of f in y^2 = f(x)");
    add_format(bo);

    std::vector<std::string> argv_store = {"binform"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char *> argv;
    for (auto & a : argv_store)
        argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::CallForHelp const &) {
        out << app.help();
        return exit_ok;
    } catch (CLI::ParseError const & e) {
        err << "error: " << e.what() << "\n";
        return exit_domain;
    }

    try {
        auto t0 = std::chrono::steady_clock::now();
        if (en->parsed()) {
            cmd_enum(o, out);
            return exit_ok;
        }
        json env;
        if (rq->parsed())
            env = cmd_reduce_quad(o);
        else if (rh->parsed())
            env = cmd_reduce_herm(o);
        else if (ju->parsed())
            env = cmd_julia(o);
        else if (re->parsed())
            env = cmd_reduce(o);
        else
            env = cmd_bounds(o);
        if (o.timing)
            env["timing_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        emit_envelope(env, o.format, out);
        return exit_ok;
    } catch (std::exception const & e) {
        err << "error: " << e.what() << "\n";
        return exit_for(e);
    }
}

} // namespace binform::cli
