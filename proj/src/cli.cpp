#include "dlvar/cli.hpp"

#include "dlvar/finitegeom.hpp"
#include "dlvar/invariants.hpp"
#include "dlvar/lattice.hpp"
#include "dlvar/quasiell.hpp"
#include "dlvar/sp4suzuki.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace dlv::cli {

namespace {

std::string csv_cell(const std::string &s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string render_md(const Report &rep)
{
    std::ostringstream os;
    os << "# " << rep.command << "\n";
    for (const auto &[k, v] : rep.params) os << k << ": " << v << "\n";
    std::vector<size_t> width(rep.columns.size());
    for (size_t i = 0; i < rep.columns.size(); ++i) width[i] = rep.columns[i].size();
    for (const auto &row : rep.rows)
        for (size_t i = 0; i < row.size() && i < width.size(); ++i)
            width[i] = std::max(width[i], row[i].size());
    auto line = [&](const std::vector<std::string> &cells) {
        os << "|";
        for (size_t i = 0; i < width.size(); ++i) {
            std::string c = i < cells.size() ? cells[i] : "";
            os << " " << c << std::string(width[i] - c.size(), ' ') << " |";
        }
        os << "\n";
    };
    line(rep.columns);
    os << "|";
    for (size_t i = 0; i < width.size(); ++i) os << std::string(width[i] + 2, '-') << "|";
    os << "\n";
    for (const auto &row : rep.rows) line(row);
    return os.str();
}

std::string render_csv(const Report &rep)
{
    std::ostringstream os;
    auto line = [&](const std::vector<std::string> &cells) {
        for (size_t i = 0; i < cells.size(); ++i) {
            if (i) os << ",";
            os << csv_cell(cells[i]);
        }
        os << "\n";
    };
    line(rep.columns);
    for (const auto &row : rep.rows) line(row);
    return os.str();
}

std::string render_json(const Report &rep)
{
    nlohmann::json j; // object keys emit in alphabetical order: canonical
    j["command"] = rep.command;
    nlohmann::json params = nlohmann::json::object();
    for (const auto &[k, v] : rep.params) params[k] = v;
    j["parameters"] = params;
    j["columns"] = rep.columns;
    j["rows"] = nlohmann::json::array();
    for (const auto &row : rep.rows) j["rows"].push_back(row);
    return j.dump(2) + "\n";
}

std::vector<int> parse_word(const std::string &w)
{
    std::vector<int> out;
    for (char c : w) {
        if (c < '1' || c > '9') throw std::invalid_argument("malformed word: " + w);
        out.push_back(c - '0');
    }
    if (out.empty()) throw std::invalid_argument("empty word");
    return out;
}

std::string word_string(const std::vector<int> &w)
{
    if (w.empty()) return "e";
    std::string s;
    for (int x : w) s += std::to_string(x);
    return s;
}

// Resolves the --q list: catalog parameters (p, exponent list). For the
// Suzuki-Ree keys the values are the exponents n of q0 = p^n; otherwise they
// are actual prime powers q = p^s with a common p.
std::pair<long long, std::vector<int>> resolve_params(const std::string &key,
                                                      const std::vector<long long> &qs)
{
    long long forced = 0;
    if (dldatum::catalog_key_fixes_prime(key, forced)) {
        std::vector<int> ns;
        for (long long n : qs) {
            if (n < 0 || n > 30) throw std::invalid_argument("exponent out of range");
            ns.push_back((int)n);
        }
        return {forced, ns};
    }
    long long p = 0;
    std::vector<int> ss;
    for (long long q : qs) {
        auto [pp, s] = invariants::split_prime_power(q);
        if (p == 0) p = pp;
        if (pp != p) throw std::invalid_argument("q values mix different primes");
        ss.push_back(s);
    }
    return {p, ss};
}

std::string join_ll(const std::vector<long long> &v)
{
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

Report do_canonical(const std::string &key, const std::string &word_text,
                    const std::vector<long long> &qs)
{
    auto word = parse_word(word_text);
    auto [p, params] = resolve_params(key, qs);
    auto rows = invariants::table_sweep(key, p, word, params);
    long long forced;
    bool sr = dldatum::catalog_key_fixes_prime(key, forced);
    Report rep;
    rep.command = "tables canonical";
    rep.params = {{"case", key}, {"word", word_text}, {"q", join_ll(qs)}};
    rep.columns = {sr ? "q0" : "q", "lambda1", "lambda2", "negative"};
    for (const auto &r : rows) {
        bool neg = r.lambda1 <= Rat(0) && r.lambda2 <= Rat(0);
        rep.rows.push_back({rat_to_string(r.q), rat_to_string(r.lambda1),
                            rat_to_string(r.lambda2), neg ? "true" : "false"});
    }
    return rep;
}

Report do_zerodim(const std::string &key, const std::vector<long long> &qs)
{
    auto [p, params] = resolve_params(key, qs);
    long long forced;
    bool sr = dldatum::catalog_key_fixes_prime(key, forced);
    Report rep;
    rep.command = "tables zerodim";
    rep.params = {{"case", key}, {"q", join_ll(qs)}};
    rep.columns = {sr ? "q0" : "q", "fixed_weyl", "count"};
    for (int param : params) {
        auto d = dldatum::catalog_datum(key, p, param);
        auto z = invariants::zero_dim_count(d);
        rep.rows.push_back({int_pow(Int(p), (unsigned)param).str(),
                            std::to_string(z.summands.size()), z.total.str()});
    }
    return rep;
}

Report do_genus(const std::string &key, long long p_opt, const std::vector<long long> &qs)
{
    long long forced;
    bool sr = dldatum::catalog_key_fixes_prime(key, forced);
    std::vector<long long> use = qs;
    if (use.empty()) {
        if (sr)
            use = {0, 1, 2, 3};
        else
            for (int s = 1; s <= 3; ++s) use.push_back(int_pow(Int(p_opt), s).convert_to<long long>());
    }
    auto [p, params] = resolve_params(key, use);
    Report rep;
    rep.command = "tables genus";
    rep.params = {{"case", key}, {"q", join_ll(use)}};
    rep.columns = {sr ? "q0" : "q", "genus"};
    for (int param : params) {
        auto d = dldatum::catalog_datum(key, p, param);
        rep.rows.push_back(
            {int_pow(Int(p), (unsigned)param).str(), invariants::curve_genus(d).str()});
    }
    return rep;
}

Report do_building(int p)
{
    auto g = finitegeom::building_sp4(p);
    int lines = 0, planes = 0;
    for (int t : g.tag) (t == 0 ? lines : planes)++;
    int degree = g.adj.empty() ? 0 : (int)g.adj[0].size();
    bool regular = true;
    for (const auto &a : g.adj) regular = regular && (int)a.size() == degree;
    Report rep;
    rep.command = "geometry building";
    rep.params = {{"p", std::to_string(p)}};
    rep.columns = {"metric", "value"};
    rep.rows = {{"lines", std::to_string(lines)},
                {"planes", std::to_string(planes)},
                {"edges", std::to_string(g.edges.size())},
                {"regular_degree", regular ? std::to_string(degree) : "irregular"},
                {"connected", finitegeom::is_connected(g) ? "true" : "false"},
                {"bipartite", finitegeom::is_bipartite_by_tag(g) ? "true" : "false"},
                {"girth", std::to_string(finitegeom::girth(g))}};
    return rep;
}

Report do_strata(const std::string &key, long long q, int ext)
{
    finitegeom::Histogram h;
    if (key == "2C2")
        h = sp4suzuki::c2twist_strata(ext);
    else
        h = finitegeom::strata_histogram(key, q, ext);
    Report rep;
    rep.command = "geometry strata";
    rep.params = {{"case", key}, {"q", std::to_string(q)}, {"ext", std::to_string(ext)}};
    rep.columns = {"word", "count"};
    for (const auto &[w, c] : h) rep.rows.push_back({word_string(w), std::to_string(c)});
    return rep;
}

Report do_suzuki()
{
    const auto &g = sp4suzuki::suzuki_group();
    const auto &F = gf::FqField::get(2, 1);
    int ia = g.index_of(sp4suzuki::suzuki_A());
    int is = g.index_of(sp4suzuki::suzuki_S());
    int is_inv = 0;
    for (int j = 0; j < (int)g.elements.size(); ++j)
        if (g.table[is][j] == 0) is_inv = j;
    bool relation = g.table[g.table[is][ia]][is_inv] == g.table[ia][ia];
    bool phi_sq = true;
    for (const auto &m : g.elements) {
        auto img = sp4suzuki::minor_isogeny(F, sp4suzuki::minor_isogeny(F, m));
        auto frob = m;
        for (auto &row : frob)
            for (auto &x : row) x = F.mul(x, x);
        phi_sq = phi_sq && img == frob;
    }
    std::string normals;
    for (int n : g.normal_subgroup_orders) normals += (normals.empty() ? "" : ",") + std::to_string(n);
    Report rep;
    rep.command = "suzuki verify";
    rep.columns = {"check", "value"};
    rep.rows = {{"group_order", std::to_string(g.elements.size())},
                {"order_A", std::to_string(g.orders[ia])},
                {"order_S", std::to_string(g.orders[is])},
                {"SAS^-1=A^2", relation ? "true" : "false"},
                {"normal_subgroup_orders", normals},
                {"phi^2=Frobenius", phi_sq ? "true" : "false"},
                {"lie_kernel", std::to_string(sp4suzuki::lie_kernel_count())}};
    return rep;
}

std::string ivec_string(const std::vector<Int> &v)
{
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
    return s + ")";
}

Report do_gamma()
{
    auto L = lattice::gamma_lattice();
    auto sig = lattice::signature(L);
    auto rad = lattice::radical_basis(L);
    auto a = lattice::gamma_vector_a(), b = lattice::gamma_vector_b();
    std::vector<Int> amb(a.size());
    for (size_t i = 0; i < a.size(); ++i) amb[i] = a[i] - b[i];
    bool rad_ok = rad.size() == 1 && (rad[0] == amb || [&] {
                      std::vector<Int> neg(amb.size());
                      for (size_t i = 0; i < amb.size(); ++i) neg[i] = -amb[i];
                      return rad[0] == neg;
                  }());
    std::vector<Int> rho2a = lattice::gamma_vector_rho();
    for (size_t i = 0; i < rho2a.size(); ++i) rho2a[i] += 2 * a[i];
    Report rep;
    rep.command = "lattice gamma";
    rep.columns = {"metric", "value"};
    rep.rows = {{"rank", std::to_string(L.rank())},
                {"signature", "(" + std::to_string(sig.plus) + "," + std::to_string(sig.minus) +
                                  "," + std::to_string(sig.zero) + ")"},
                {"radical_is_a-b", rad_ok ? "true" : "false"},
                {"(rho+2a)^2", lattice::pair(L, rho2a, rho2a).str()},
                {"a^2", lattice::pair(L, a, a).str()}};
    return rep;
}

Report do_gram(int n, long long c)
{
    auto L = lattice::gram_S(n, Int(c));
    auto smith = lattice::smith_invariants(L);
    Report rep;
    rep.command = "lattice gram";
    rep.params = {{"n", std::to_string(n)}, {"c", std::to_string(c)}};
    rep.columns = {"metric", "value"};
    auto sig = lattice::signature(L);
    rep.rows = {{"det", lattice::det(L).str()},
                {"signature", "(" + std::to_string(sig.plus) + "," + std::to_string(sig.minus) +
                                  "," + std::to_string(sig.zero) + ")"},
                {"smith", ivec_string(smith)}};
    return rep;
}

Report do_k3scan()
{
    Report rep;
    rep.command = "lattice k3scan";
    rep.columns = {"sigma", "c", "det", "smith", "2-elementary"};
    for (int sigma = 3; sigma <= 10; ++sigma) {
        Int c = int_pow(Int(2), (unsigned)(2 * sigma - 3)) - 2;
        auto L = lattice::gram_S(0, c);
        rep.rows.push_back({std::to_string(sigma), c.str(), lattice::det(L).str(),
                            ivec_string(lattice::smith_invariants(L)),
                            lattice::is_p_elementary(L, Int(2)) ? "true" : "false"});
    }
    return rep;
}

Report do_classify(const std::string &a4_text, const std::string &a6_text,
                   const std::string &field)
{
    using namespace quasiell;
    CoefField k = CoefField::parse(field);
    ShortWeierstrass w{k, parse_tpoly(k, a4_text), parse_tpoly(k, a6_text), 2};
    // "0" parses to the zero polynomial only via an explicit constant term.
    w.a4 = tp_trim(std::move(w.a4));
    w.a6 = tp_trim(std::move(w.a6));

    NormalForm nf;
    if (!k.has_u) {
        auto res = normal_form_reduce(w);
        if (std::holds_alternative<std::string>(res))
            throw std::invalid_argument("not reducible to normal form: " +
                                        std::get<std::string>(res));
        nf = std::get<NormalForm>(res);
    } else {
        // Over a function field the input must already be in normal form.
        auto coeff = [&](const TPoly &f, int i) {
            return i < (int)f.size() ? f[i] : k_zero();
        };
        for (int i = 0; i <= tp_deg(w.a4); ++i)
            if (i != 2 && i != 6 && !k_is_zero(coeff(w.a4, i)))
                throw std::invalid_argument("a4 must have the shape l2*t^2 + l6*t^6");
        for (int j = 0; j <= tp_deg(w.a6); ++j)
            if (j != 5 && j != 7 && !k_is_zero(coeff(w.a6, j)))
                throw std::invalid_argument("a6 must have the shape mu*(t^5 + t^7)");
        if (!(coeff(w.a6, 5) == coeff(w.a6, 7)))
            throw std::invalid_argument("a6 must have the shape mu*(t^5 + t^7)");
        nf = NormalForm{coeff(w.a4, 2), coeff(w.a4, 6), coeff(w.a6, 5)};
    }
    Report rep;
    rep.command = "weierstrass classify";
    rep.params = {{"a4", a4_text},
                  {"a6", a6_text},
                  {"field", field},
                  {"lambda2", k_to_string(k, nf.lambda2)},
                  {"lambda6", k_to_string(k, nf.lambda6)},
                  {"mu", k_to_string(k, nf.mu)}};
    rep.columns = {"place", "type"};
    rep.rows = {{"0", rdp_name(rdp_at_zero(k, nf.lambda2, nf.lambda6, nf.mu, false))},
                {"1", rdp_name(rdp_at_one(k, nf.lambda2, nf.lambda6, nf.mu))},
                {"inf", rdp_name(rdp_at_zero(k, nf.lambda2, nf.lambda6, nf.mu, true))}};
    return rep;
}

Report do_census()
{
    Report rep;
    rep.command = "elliptic census";
    rep.columns = {"curve", "a1", "a2", "a3", "a4", "a6", "points", "aut", "orbit"};
    auto census = quasiell::elliptic_census_f2();
    for (size_t i = 0; i < census.size(); ++i) {
        const auto &c = census[i];
        rep.rows.push_back({"E" + std::to_string(c.point_count), std::to_string(c.rep[0]),
                            std::to_string(c.rep[1]), std::to_string(c.rep[2]),
                            std::to_string(c.rep[3]), std::to_string(c.rep[4]),
                            std::to_string(c.point_count), std::to_string(c.aut_order),
                            std::to_string(c.orbit_size)});
    }
    return rep;
}

} // namespace

std::string render(const Report &rep, const std::string &format)
{
    if (format == "md") return render_md(rep);
    if (format == "csv") return render_csv(rep);
    if (format == "json") return render_json(rep);
    throw std::invalid_argument("unknown format: " + format);
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Deligne-Lusztig variety tables and reports"};
    app.fallthrough();
    std::string format = "md";
    app.add_option("--format", format)->check(CLI::IsMember({"json", "csv", "md"}));

    std::string case_key, word_text, a4_text, a6_text, field_text;
    std::vector<long long> qs;
    long long p_opt = 2;
    int ext = 1, gram_n = 0;
    long long gram_c = 0;

    auto *tables = app.add_subcommand("tables");
    auto *canonical = tables->add_subcommand("canonical");
    canonical->add_option("--case", case_key)->required();
    canonical->add_option("--word", word_text)->required();
    canonical->add_option("--q", qs)->required()->delimiter(',');
    auto *zerodim = tables->add_subcommand("zerodim");
    zerodim->add_option("--case", case_key)->required();
    zerodim->add_option("--q", qs)->required()->delimiter(',');
    auto *genus = tables->add_subcommand("genus");
    genus->add_option("--case", case_key)->required();
    genus->add_option("--q", qs)->delimiter(',');
    genus->add_option("--p", p_opt);
    tables->require_subcommand(1);

    auto *geometry = app.add_subcommand("geometry");
    auto *building = geometry->add_subcommand("building");
    building->add_option("--p", p_opt)->required()->check(CLI::IsMember({2, 3}));
    auto *strata = geometry->add_subcommand("strata");
    strata->add_option("--case", case_key)->required();
    strata->add_option("--ext", ext)->required();
    strata->add_option("--q", p_opt); // base q, default 2
    geometry->require_subcommand(1);

    auto *suzuki = app.add_subcommand("suzuki");
    auto *verify = suzuki->add_subcommand("verify");
    suzuki->require_subcommand(1);

    auto *lat = app.add_subcommand("lattice");
    auto *gamma = lat->add_subcommand("gamma");
    auto *gram = lat->add_subcommand("gram");
    gram->add_option("--n", gram_n)->required()->check(CLI::Range(0, 2));
    gram->add_option("--c", gram_c)->required();
    auto *k3scan = lat->add_subcommand("k3scan");
    lat->require_subcommand(1);

    auto *weier = app.add_subcommand("weierstrass");
    auto *classify = weier->add_subcommand("classify");
    classify->add_option("--a4", a4_text)->required();
    classify->add_option("--a6", a6_text)->required();
    classify->add_option("--field", field_text)->required();
    weier->require_subcommand(1);

    auto *elliptic = app.add_subcommand("elliptic");
    auto *census = elliptic->add_subcommand("census");
    elliptic->require_subcommand(1);

    app.require_subcommand(1);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        Report rep;
        if (canonical->parsed())
            rep = do_canonical(case_key, word_text, qs);
        else if (zerodim->parsed())
            rep = do_zerodim(case_key, qs);
        else if (genus->parsed())
            rep = do_genus(case_key, p_opt, qs);
        else if (building->parsed())
            rep = do_building((int)p_opt);
        else if (strata->parsed())
            rep = do_strata(case_key, p_opt, ext);
        else if (verify->parsed())
            rep = do_suzuki();
        else if (gamma->parsed())
            rep = do_gamma();
        else if (gram->parsed())
            rep = do_gram(gram_n, gram_c);
        else if (k3scan->parsed())
            rep = do_k3scan();
        else if (classify->parsed())
            rep = do_classify(a4_text, a6_text, field_text);
        else if (census->parsed())
            rep = do_census();
        else {
            err << "usage error: no subcommand\n";
            return 2;
        }
        out << render(rep, format);
        return 0;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, out, err);
}

} // namespace dlv::cli
