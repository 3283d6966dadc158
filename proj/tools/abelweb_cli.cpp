#include "CLI11.hpp"

#include "abelweb/abel.hpp"
#include "abelweb/afe.hpp"
#include "abelweb/config.hpp"
#include "abelweb/errors.hpp"
#include "abelweb/jet.hpp"
#include "abelweb/pattern.hpp"
#include "abelweb/webio.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

using namespace abelweb;
using json = nlohmann::json;

namespace {

constexpr const char *kSchema = "abelweb-report/1";

struct Options {
    std::string input;
    std::uint64_t seed = 0;
    int precision = 50;
    double tolerance = 1e-40;
    int samples = 20;
    int max_order = 0;
    int stabilize = 3;
    int jobs = 1;
    std::string point;
    std::string json_path;
    std::vector<std::size_t> subwebs;
    bool filtration = false;
    std::string pattern;
    std::size_t target = 1;
    bool trace = false;
    bool classify = false;
    std::string emit;
    std::vector<std::string> candidates;
    std::vector<std::string> sigma_candidates;
};

struct Report {
    json doc;
    std::ostringstream text;
    int code = 0;
};

WebFile resolve_web(const std::string &in)
{
    if (std::filesystem::exists(in))
        return load_web_file(in);
    WebFile f;
    f.web = named_web(in);
    return f;
}

Configuration resolve_configuration(const std::string &in)
{
    if (std::filesystem::exists(in))
        return load_configuration(in);
    auto colon = in.find(':');
    if (colon != std::string::npos) {
        Rational a;
        if (a.set_str(in.substr(colon + 1), 10) != 0)
            throw Error(ErrorKind::Format, "bad parameter in '" + in + "'");
        a.canonicalize();
        return named_configuration(in.substr(0, colon), a);
    }
    return named_configuration(in);
}

std::optional<std::pair<Rational, Rational>> parse_point(const std::string &s)
{
    if (s.empty())
        return std::nullopt;
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw Error(ErrorKind::Format, "--point expects x,y");
    Rational x, y;
    if (x.set_str(s.substr(0, comma), 10) != 0 || y.set_str(s.substr(comma + 1), 10) != 0)
        throw Error(ErrorKind::Format, "--point expects rationals");
    x.canonicalize();
    y.canonicalize();
    return std::make_pair(x, y);
}

json indices(const std::vector<std::size_t> &v)
{
    json a = json::array();
    for (auto i : v)
        a.push_back(i + 1);
    return a;
}

// Runs f(0..n-1) on up to `jobs` threads; results are stored by index.
template <class T, class F>
std::vector<T> parallel_map(std::size_t n, int jobs, F f)
{
    std::vector<T> out(n);
    std::size_t next = 0;
    std::mutex m;
    std::exception_ptr err;
    auto worker = [&]() {
        for (;;) {
            std::size_t k;
            {
                std::lock_guard<std::mutex> lock(m);
                if (next >= n || err)
                    return;
                k = next++;
            }
            try {
                out[k] = f(k);
            } catch (...) {
                std::lock_guard<std::mutex> lock(m);
                if (!err)
                    err = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < std::max(1, jobs); ++t)
        pool.emplace_back(worker);
    worker();
    for (auto &t : pool)
        t.join();
    if (err)
        std::rethrow_exception(err);
    return out;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k)
{
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    auto rec = [&](auto &self, std::size_t start) -> void {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

BasePoint base_for(const WebFile &f, const Options &o)
{
    auto p = parse_point(o.point);
    if (!p)
        p = f.point;
    if (!p)
        p = std::make_pair(Rational(1, 3), Rational(1, 2));
    return pick_generic_point(f.web, o.seed, p);
}

void cmd_sigma(const Options &o, Report &r)
{
    WebFile f = resolve_web(o.input);
    SingularLocus s = singular_locus(f.web);
    json comps = json::array();
    r.text << "singular locus of " << f.web.name() << " (" << f.web.size() << " foliations)\n";
    for (const auto &c : s.curve_components) {
        comps.push_back(c.to_string());
        r.text << "  " << c.to_string() << "\n";
    }
    r.doc["components"] = comps;
    json tang = json::array(), poles = json::array();
    for (const auto &c : s.tangency_components)
        tang.push_back(c.to_string());
    for (const auto &c : s.pole_components)
        poles.push_back(c.to_string());
    r.doc["tangency_components"] = tang;
    r.doc["pole_components"] = poles;
    if (!o.sigma_candidates.empty()) {
        std::vector<BivarPoly> cand;
        for (const auto &c : o.sigma_candidates)
            cand.push_back(parse_ratfunc(c).num());
        SigmaFactorReport v = verify_sigma_factors(f.web, cand);
        json entries = json::array();
        for (const auto &e : v.entries)
            entries.push_back({{"factor", e.candidate.to_string()}, {"divides", e.divides}});
        json unmatched = json::array();
        for (const auto &u : v.unmatched_components)
            unmatched.push_back(u.to_string());
        r.doc["verify"] = {{"entries", entries},
                           {"all_divide", v.all_divide},
                           {"product_equal", v.product_equal},
                           {"unmatched", unmatched}};
        r.text << "candidates: all divide " << (v.all_divide ? "yes" : "no") << ", product equal "
               << (v.product_equal ? "yes" : "no") << "\n";
        for (const auto &u : v.unmatched_components)
            r.text << "  unmatched component " << u.to_string() << "\n";
        if (!v.all_divide || !v.product_equal)
            r.code = 1;
    }
}

void cmd_rank(const Options &o, Report &r)
{
    WebFile f = resolve_web(o.input);
    const Web &w = f.web;
    BasePoint base = base_for(f, o);
    TruncationPolicy pol;
    pol.k_max = o.max_order;
    pol.stabilize = o.stabilize;
    RankResult rr = abelian_rank(w, base, pol);
    std::size_t bound = bol_bound(w.size());
    r.doc["web"] = w.name();
    r.doc["size"] = w.size();
    r.doc["point"] = {base.x.get_str(), base.y.get_str()};
    r.doc["rank"] = rr.rank;
    r.doc["bol_bound"] = bound;
    r.doc["maximal"] = rr.rank == bound;
    r.doc["stabilized_order"] = rr.stabilized_order;
    json dims = json::array();
    for (const auto &[k, d] : rr.dims)
        dims.push_back({{"order", k}, {"kernel_dim", d}});
    r.doc["dims"] = dims;
    r.text << w.name() << ": rank " << rr.rank << " (Bol bound " << bound << ") at (" << base.x.get_str() << ", "
           << base.y.get_str() << "), stabilized at order " << rr.stabilized_order << "\n";
    if (o.filtration) {
        auto fd = filtration_dims(w, base, pol);
        json a = json::array();
        r.text << "filtration dims (p = 3..N):";
        for (auto d : fd) {
            a.push_back(d);
            r.text << " " << d;
        }
        r.text << "\n";
        r.doc["filtration"] = a;
    }
    if (!o.subwebs.empty()) {
        std::vector<std::vector<std::size_t>> removals;
        for (auto sz : o.subwebs) {
            if (sz < 3 || sz > w.size())
                throw Error(ErrorKind::InvalidParameter, "subweb size out of range");
            for (const auto &kept : subsets(w.size(), sz)) {
                std::vector<std::size_t> removed;
                for (std::size_t i = 0; i < w.size(); ++i)
                    if (std::find(kept.begin(), kept.end(), i) == kept.end())
                        removed.push_back(i);
                removals.push_back(removed);
            }
        }
        auto rows = parallel_map<SubwebRank>(removals.size(), o.jobs,
                                             [&](std::size_t k) { return subweb_rank(w, removals[k], o.seed); });
        json a = json::array();
        for (const auto &s : rows) {
            json e = {{"name", s.name}, {"kept", indices(s.kept)}, {"rank", s.rank}, {"maximal", s.maximal}};
            if (s.hexagonal)
                e["hexagonal"] = *s.hexagonal;
            a.push_back(e);
            r.text << "  W" << s.name << " rank " << s.rank << (s.maximal ? " (maximal)" : "") << "\n";
        }
        r.doc["subwebs"] = a;
    }
    if (!o.pattern.empty()) {
        Pattern p = parse_pattern(o.pattern, w.size());
        AnsatzOptions ao;
        ao.digits = std::max(o.precision, 40);
        ConstrainedRankResult cr = constrained_rank(w, p, base, ao);
        json basis = json::array();
        for (std::size_t k = 0; k < cr.basis.size(); ++k)
            basis.push_back(cr.describe(k, 12));
        r.doc["pattern"] = {{"pattern", p.to_string()}, {"dim", cr.dim},   {"order", cr.order},
                            {"stable", cr.stable},      {"basis", basis}, {"gap", cr.gap.to_string(5)}};
        r.text << "pattern " << p.to_string() << ": dimension " << cr.dim << " (order " << cr.order
               << (cr.stable ? ", stable" : ", NOT stable") << ")\n";
        for (std::size_t k = 0; k < cr.basis.size(); ++k)
            r.text << cr.describe(k, 12) << "\n";
        if (!cr.stable)
            r.code = 1;
    }
}

void cmd_abel_ode(const Options &o, Report &r)
{
    WebFile f = resolve_web(o.input);
    if (o.target < 1 || o.target > f.web.size())
        throw Error(ErrorKind::InvalidParameter, "--target out of range");
    r.doc["web"] = f.web.name();
    r.doc["target"] = o.target;
    try {
        LdeResult res = derive_lde(f.web, o.target - 1);
        json coeffs = json::array();
        for (const auto &c : res.ode.coeffs)
            coeffs.push_back(c.to_string("v"));
        r.doc["order"] = res.ode.order();
        r.doc["coefficients"] = coeffs;
        r.doc["ode"] = res.ode.to_string("v");
        r.text << "order " << res.ode.order() << ": " << res.ode.to_string("v") << " = 0\n";
        if (o.trace) {
            json t = json::array();
            for (const auto &s : res.trace) {
                t.push_back({{"kind", s.kind},
                             {"pivot", s.pivot + 1},
                             {"companion", s.companion + 1},
                             {"type", s.type_after},
                             {"detail", s.detail}});
                r.text << "  " << s.kind << " pivot " << s.pivot + 1 << " companion " << s.companion + 1 << " -> "
                       << s.type_after << " [" << s.detail << "]\n";
            }
            r.doc["trace"] = t;
        }
    } catch (const Error &e) {
        if (e.kind() != ErrorKind::TrivialEquation)
            throw;
        r.doc["order"] = 0;
        r.doc["verdict"] = "only constant solutions";
        r.text << "only constant solutions (" << e.what() << ")\n";
    }
}

void cmd_hexagonal(const Options &o, Report &r)
{
    WebFile f = resolve_web(o.input);
    auto triples = subsets(f.web.size(), 3);
    std::vector<std::vector<std::size_t>> removals;
    for (const auto &t : triples) {
        std::vector<std::size_t> removed;
        for (std::size_t i = 0; i < f.web.size(); ++i)
            if (std::find(t.begin(), t.end(), i) == t.end())
                removed.push_back(i);
        removals.push_back(removed);
    }
    auto rows = parallel_map<SubwebRank>(removals.size(), o.jobs,
                                         [&](std::size_t k) { return subweb_rank(f.web, removals[k], o.seed); });
    bool hex = true;
    json a = json::array();
    for (const auto &s : rows) {
        hex = hex && s.rank == 1;
        a.push_back({{"kept", indices(s.kept)}, {"rank", s.rank}});
        r.text << "  {";
        for (std::size_t k = 0; k < s.kept.size(); ++k)
            r.text << (k ? "," : "") << s.kept[k] + 1;
        r.text << "} rank " << s.rank << "\n";
    }
    r.doc["web"] = f.web.name();
    r.doc["triples"] = a;
    r.doc["hexagonal"] = hex;
    r.text << f.web.name() << (hex ? " is hexagonal" : " is not hexagonal") << "\n";
    r.code = hex ? 0 : 1;
}

void cmd_config_web(const Options &o, Report &r)
{
    Configuration c = resolve_configuration(o.input);
    ConfigurationWeb cw = web_from_configuration(c);
    json pts = json::array(), fol = json::array();
    for (const auto &p : c.points)
        pts.push_back(p.to_string());
    for (std::size_t k = 0; k < cw.web.size(); ++k)
        fol.push_back({{"integral", cw.web.integral(k).to_string()}, {"points", indices(cw.sources[k])}});
    r.doc["configuration"] = c.name;
    r.doc["points"] = pts;
    r.doc["foliations"] = fol;
    r.text << "configuration " << c.name << ": " << c.size() << " points, " << cw.web.size() << " foliations\n";
    for (std::size_t k = 0; k < cw.web.size(); ++k) {
        r.text << "  U" << k + 1 << " = " << cw.web.integral(k).to_string() << "  (points";
        for (auto i : cw.sources[k])
            r.text << " " << i + 1;
        r.text << ")\n";
    }
    if (o.classify) {
        json triples = json::array();
        for (const auto &t : collinear_triples(c))
            triples.push_back(indices({t[0], t[1], t[2]}));
        r.doc["collinear_triples"] = triples;
        if (c.size() == 5) {
            Stratum s = classify_stratum(c);
            r.doc["stratum"] = s.name();
            if (s.pivot)
                r.doc["pivot"] = *s.pivot + 1;
            r.text << "stratum " << s.name() << "\n";
        }
    }
    if (o.emit == "-") {
        r.text << format_web_file(cw.web);
    } else if (!o.emit.empty()) {
        std::ofstream out(o.emit);
        if (!out)
            throw Error(ErrorKind::Format, "cannot write " + o.emit);
        out << format_web_file(cw.web);
        r.text << "web written to " << o.emit << "\n";
    }
}

void cmd_verify_num(const Options &o, Report &r)
{
    AfeInstance a = load_afe(o.input);
    AfeReport rep = verify_afe_numeric(a, o.samples, o.precision, o.tolerance, o.seed);
    json s = json::array();
    for (const auto &e : rep.samples)
        s.push_back({{"point", e.point.to_string()},
                     {"residual", e.residual.to_string(5)},
                     {"precision_error", e.precision_error.to_string(5)}});
    r.doc["name"] = a.name;
    r.doc["digits"] = rep.digits;
    r.doc["bits"] = rep.prec;
    r.doc["tolerance"] = rep.tolerance;
    r.doc["samples"] = s;
    r.doc["max_residual"] = rep.max_residual.to_string(5);
    r.doc["pass"] = rep.pass;
    r.text << a.name << ": " << (rep.pass ? "PASS" : "FAIL") << ", max residual " << rep.max_residual.to_string(5)
           << " over " << rep.samples.size() << " samples at " << rep.digits << " digits (tolerance " << rep.tolerance
           << ")\n";
    r.code = rep.pass ? 0 : 1;
}

void cmd_constant(const Options &o, Report &r)
{
    AfeInstance a = load_afe(o.input);
    std::vector<ConstantCandidate> cands;
    std::vector<std::string> texts = o.candidates;
    if (texts.empty())
        texts = {"0", "pi^2/6", "pi^2/12", "pi^2/6 - log2^2/2", "zeta3", "log2"};
    for (const auto &t : texts)
        cands.push_back({t, parse_constant(t)});
    ConstancyReport rep = constancy_check(a, o.samples, o.precision, cands, o.seed);
    r.doc["name"] = a.name;
    r.doc["mean"] = {rep.mean.re.to_string(o.precision), rep.mean.im.to_string(o.precision)};
    r.doc["spread"] = rep.spread.to_string(5);
    r.doc["best"] = rep.best;
    r.doc["matched_digits"] = rep.matched_digits;
    r.text << a.name << ": constant " << rep.mean.re.to_string(30) << " (spread " << rep.spread.to_string(5)
           << "), closest candidate " << rep.best << " to " << rep.matched_digits << " digits\n";
    r.code = rep.matched_digits >= 30 ? 0 : 1;
}

void cmd_prop7(const Options &, Report &r)
{
    auto put = [&](const char *key, const Prop7Report &p) {
        json m = json::array();
        for (const auto &x : p.matching)
            m.push_back(x ? json(*x + 1) : json(nullptr));
        r.doc[key] = {{"match", p.match}, {"web_size", p.web_size}, {"config_size", p.config_size},
                      {"matching", m},    {"detail", p.detail}};
        r.text << key << ": " << p.detail << "\n";
    };
    Prop7Report p7 = prop7_check(), p8 = prop8_check();
    put("prop7", p7);
    put("prop8", p8);
    r.code = p7.match && p8.match ? 0 : 1;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"abelian relations of planar webs"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--seed", o.seed, "seed for point choice and sampling");
    app.add_option("--precision", o.precision, "decimal digits");
    app.add_option("--tolerance", o.tolerance, "residual tolerance");
    app.add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--json", o.json_path, "write the JSON report here ('-' for stdout)");

    auto *sigma = app.add_subcommand("sigma", "singular locus");
    sigma->add_option("web", o.input, "web file or name")->required();
    sigma->add_option("--candidate", o.sigma_candidates, "expected factor (repeatable)");

    auto *rank = app.add_subcommand("rank", "rank of the web");
    rank->add_option("web", o.input, "web file or name")->required();
    rank->add_option("--point", o.point, "base point x,y");
    rank->add_option("--max-order", o.max_order, "largest jet order");
    rank->add_option("--stabilize", o.stabilize, "equal kernel dimensions required");
    rank->add_option("--subwebs", o.subwebs, "subweb sizes")->delimiter(',');
    rank->add_flag("--filtration", o.filtration, "dimensions of the filtration");
    rank->add_option("--pattern", o.pattern, "shared-unknown pattern, e.g. '{1,2,3,4}{5} : 1,-1,-1,-1,1'");

    auto *ode = app.add_subcommand("abel-ode", "linear ODE of one component");
    ode->add_option("web", o.input, "web file or name")->required();
    ode->add_option("--target", o.target, "1-based foliation index");
    ode->add_flag("--trace", o.trace, "print reduction steps");

    auto *hex = app.add_subcommand("hexagonal", "rank of every 3-subweb");
    hex->add_option("web", o.input, "web file or name")->required();

    auto *cfg = app.add_subcommand("config-web", "web of a point configuration");
    cfg->add_option("config", o.input, "configuration file or name (b, q, c, c_a:2)")->required();
    cfg->add_flag("--classify", o.classify, "collinear triples and stratum");
    cfg->add_option("--emit", o.emit, "write the web file (- for stdout)");

    auto *num = app.add_subcommand("verify-num", "numeric check of a functional equation");
    num->add_option("afe", o.input, "AFE file")->required()->check(CLI::ExistingFile);
    num->add_option("--samples", o.samples, "sample count");

    auto *cst = app.add_subcommand("constant", "constancy and recognition of a combination");
    cst->add_option("afe", o.input, "AFE file")->required()->check(CLI::ExistingFile);
    cst->add_option("--samples", o.samples, "sample count");
    cst->add_option("--candidate", o.candidates, "candidate constant (repeatable)");

    app.add_subcommand("prop7", "Cremona image of the trilogarithm web against configuration q");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    CLI::App *sub = app.get_subcommands().front();
    Report r;
    r.doc["schema"] = kSchema;
    r.doc["command"] = sub->get_name();
    r.doc["seed"] = o.seed;
    try {
        const std::string &n = sub->get_name();
        if (n == "sigma")
            cmd_sigma(o, r);
        else if (n == "rank")
            cmd_rank(o, r);
        else if (n == "abel-ode")
            cmd_abel_ode(o, r);
        else if (n == "hexagonal")
            cmd_hexagonal(o, r);
        else if (n == "config-web")
            cmd_config_web(o, r);
        else if (n == "verify-num")
            cmd_verify_num(o, r);
        else if (n == "constant")
            cmd_constant(o, r);
        else
            cmd_prop7(o, r);
    } catch (const Error &e) {
        bool usage = e.kind() == ErrorKind::Format || e.kind() == ErrorKind::Parse ||
                     e.kind() == ErrorKind::UnknownName || e.kind() == ErrorKind::InvalidParameter;
        std::cerr << "error: " << e.what() << "\n";
        r.doc["error"] = {{"kind", error_kind_name(e.kind())}, {"message", e.what()}};
        r.code = usage ? 2 : 1;
    }
    r.doc["exit_code"] = r.code;
    if (o.json_path == "-") {
        std::cout << r.doc.dump(2) << "\n";
    } else {
        std::cout << r.text.str();
        if (!o.json_path.empty()) {
            std::ofstream out(o.json_path);
            out << r.doc.dump(2) << "\n";
        }
    }
    return r.code;
}
