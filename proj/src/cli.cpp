#include "veer/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

#include <fmt/format.h>

#include "veer/bounds.hpp"

namespace veer {

using json = nlohmann::json;

std::string CompileLine::format() const { return fmt::format("{} {} {:.4f} {}", index, sig, value, extra); }

CompileLine CompileLine::parse(std::string_view line) {
    std::istringstream in{std::string(line)};
    CompileLine c;
    std::string rest;
    if (!(in >> c.index >> c.sig >> c.value >> c.extra) || (in >> rest))
        throw std::invalid_argument(fmt::format("malformed compile line: {}", line));
    return c;
}

std::string format_compile_line(const DilatationReport& r, long index, std::string_view sig) {
    CompileLine c{index, std::string(sig), r.value, r.b1 == 1 ? static_cast<long>(r.chi) : r.gcd_norms};
    return c.format();
}

std::vector<InputItem> read_sig_list(std::istream& in) {
    std::vector<InputItem> items;
    std::string line;
    while (std::getline(in, line)) {
        if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        const long next = static_cast<long>(items.size()) + 1;
        if (tok.size() == 1) {
            items.push_back({next, tok[0]});
        } else {
            long idx = 0;
            try {
                std::size_t pos = 0;
                idx = std::stol(tok[0], &pos);
                if (pos != tok[0].size()) throw std::invalid_argument("index");
            } catch (const std::exception&) {
                throw std::invalid_argument(fmt::format("cannot read census index in line: {}", line));
            }
            items.push_back({idx, tok[1]});
        }
    }
    return items;
}

namespace {

DilatationReport run_one(const std::string& sig, const DilatationOptions& opt) {
    auto v = build_veering(sig);
    int b1 = homology(v).b1;
    if (b1 == 1) return dilatation_b1(v, opt);
    if (b1 == 2) return min_dilatation_b2(v, opt);
    throw PipelineError(fmt::format("first Betti number is {}, only 1 and 2 are supported", b1));
}

std::string error_kind(const std::exception& e) {
    if (dynamic_cast<const SigError*>(&e)) return "signature";
    if (dynamic_cast<const VeeringError*>(&e)) return "veering";
    if (dynamic_cast<const PipelineError*>(&e)) return "pipeline";
    if (dynamic_cast<const std::domain_error*>(&e)) return "domain";
    return "internal";
}

int exit_code(const std::string& kind) {
    if (kind == "signature" || kind == "veering") return 2;
    if (kind == "pipeline" || kind == "domain") return 3;
    return 4;
}

std::string one_line(std::string s) {
    std::replace(s.begin(), s.end(), '\n', ' ');
    return s;
}

// Fixed-point decimal of a rational, truncated toward zero.
std::string decimal(const mpq_class& q, int digits) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpz_class n = q.get_num() * scale;
    mpz_class v;
    mpz_tdiv_q(v.get_mpz_t(), n.get_mpz_t(), q.get_den_mpz_t());
    std::string s = mpz_class(abs(v)).get_str();
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
    if (digits > 0) s.insert(s.size() - digits, ".");
    return (q < 0 ? "-" : "") + s;
}

json report_json(const DilatationReport& r, int prec) {
    json j;
    j["b1"] = r.b1;
    j["value"] = fmt::format("{:.{}f}", r.value, prec);
    j["method"] = r.method;
    if (r.lambda) {
        j["lambda"] = decimal(r.lambda->midpoint(), prec);
        j["lambda_interval"] = {decimal(r.lambda->lo, prec + 4), decimal(r.lambda->hi, prec + 4)};
    }
    if (r.normalized) j["normalized"] = decimal(r.normalized->midpoint(), prec);
    if (r.b1 == 1) j["chi"] = r.chi;
    if (r.b1 == 2) {
        j["gcd_norms"] = r.gcd_norms;
        j["t"] = r.t;
        j["oracle"] = fmt::format("{:.{}f}", r.oracle, prec);
    }
    j["notes"] = r.notes;
    return j;
}

json dual_json(const VeeringTriangulation& v) {
    auto g = build_dual_graph(v);
    json j;
        j["tetrahedra"] = v.n;
    for (int t = 0; t < v.n; ++t)
        j["vertices"].push_back({{"id", t},
                                 {"color", to_string(g.vertex_color[t])},
                                 {"kind", to_string(v.kind[t])},
                                 {"in", g.in_edges[t]},
                                 {"out", g.out_edges[t]}});
    for (int e = 0; e < g.num_edges(); ++e)
        j["edges"].push_back({{"id", e},
                              {"tail", g.tail[e]},
                              {"head", g.head[e]},
                              {"branch_next", g.branch_next[e]},
                              {"anti_next", g.anti_next[e]}});
    for (const auto& c : branch_cycles(g)) j["branch_cycles"].push_back(c);
    for (const auto& s : build_sectors(v, g)) {
        json js{{"edge", s.edge},
                {"color", to_string(s.color)},
                {"toggle", s.toggle},
                {"bottom_vertex", s.bottom_vertex},
                {"top_vertex", s.top_vertex}};
        for (const auto& side : s.side) js["sides"].push_back({{"edges", side.edges}, {"vertices", side.vertices}});
        j["sectors"].push_back(js);
    }
    return j;
}

}  // namespace

std::vector<BatchResult> run_batch(const std::vector<InputItem>& items, int jobs, const DilatationOptions& opt) {
    std::vector<BatchResult> out(items.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < items.size();) {
            out[i].item = items[i];
            try {
                out[i].report = run_one(items[i].sig, opt);
                out[i].ok = true;
            } catch (const std::exception& e) {
                out[i].error = error_kind(e) + ": " + one_line(e.what());
            }
        }
    };
    const int n = std::max(1, std::min<int>(jobs, static_cast<int>(items.size())));
    std::vector<std::thread> pool;
    for (int i = 1; i < n; ++i) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return out;
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Veering triangulation and normalized dilatation toolkit", "veer"};
    app.require_subcommand(1);
    int prec = 12;
    double tol = 1e-9;
    bool as_json = false;
    app.add_option("--prec", prec, "Digits in detailed output")->capture_default_str()->check(CLI::Range(1, 200));
    app.add_option("--tol", tol, "Root enclosure width")->capture_default_str()->check(CLI::PositiveNumber);
    app.add_flag("--json", as_json, "JSON output");

    std::string sig, file;
    double value = 0, below = 0;
    long index = 0;
    int jobs = 1;

    auto* validate = app.add_subcommand("validate", "Check the taut and veering structure of a signature");
    validate->add_option("sig", sig)->required();
    auto* info = app.add_subcommand("info", "Basic invariants");
    info->add_option("sig", sig)->required();
    auto* dual = app.add_subcommand("dual", "Dual graph and sectors");
    dual->add_option("sig", sig)->required();
    auto* cond = app.add_subcommand("conditions", "Sector conditions and the m003 predicate");
    cond->add_option("sig", sig)->required();
    auto* dil = app.add_subcommand("dilatation", "Normalized dilatation for b1 = 1");
    dil->add_option("sig", sig)->required();
    dil->add_option("--index", index, "Census index for the compile line");
    auto* mindil = app.add_subcommand("min-dilatation", "Minimum normalized dilatation over the fibered face, b1 = 2");
    mindil->add_option("sig", sig)->required();
    mindil->add_option("--index", index, "Census index for the compile line");
    auto* bounds = app.add_subcommand("bounds", "Tetrahedron-count bounds");
    bounds->add_option("--value", value, "Normalized dilatation P")->required();
    auto* batch = app.add_subcommand("batch", "Compile lines for a list of signatures");
    batch->add_option("file", file)->required()->check(CLI::ExistingFile);
    batch->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    auto* filter = app.add_subcommand("filter", "Compile lines with value below a threshold");
    filter->add_option("file", file)->required()->check(CLI::ExistingFile);
    filter->add_option("--below", below)->required();
    filter->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    for (auto* sc : app.get_subcommands({})) sc->fallthrough();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    DilatationOptions opt;
    opt.eps = tol;
    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        if (cmd == "validate") {
            auto diag = validate_veering(sig);
            if (!diag.empty()) throw VeeringError(diag);
            auto v = build_veering(sig);
            if (as_json)
                out << json({{"sig", sig}, {"valid", true}, {"tetrahedra", v.n}}).dump() << "\n";
            else
                out << "valid " << sig << " tetrahedra " << v.n << "\n";
        } else if (cmd == "info") {
            auto v = build_veering(sig);
            auto h = homology(v);
            auto g = build_dual_graph(v);
            int toggles = static_cast<int>(std::count(v.kind.begin(), v.kind.end(), TetKind::Toggle));
            std::vector<std::string> tors;
            for (const auto& t : h.torsion) tors.push_back(t.get_str());
            const auto bc = branch_cycles(g).size();
            if (as_json) {
                out << json{{"sig", sig},        {"tetrahedra", v.n},        {"b1", h.b1},
                            {"torsion", tors},   {"branch_cycles", bc},      {"toggles", toggles},
                            {"fans", v.n - toggles}}
                           .dump()
                    << "\n";
            } else {
                out << "tetrahedra " << v.n << "\nb1 " << h.b1 << "\ntorsion "
                    << (tors.empty() ? std::string("none") : fmt::format("{}", fmt::join(tors, " ")))
                    << "\nbranch_cycles " << bc << "\ntoggles " << toggles << "\nfans " << v.n - toggles << "\n";
            }
        } else if (cmd == "dual") {
            auto v = build_veering(sig);
            auto j = dual_json(v);
            if (as_json) {
                out << j.dump(2) << "\n";
            } else {
                for (const auto& x : j["vertices"])
                    out << fmt::format("vertex {} {} {} in {} {} out {} {}\n", x["id"].get<int>(),
                                       x["color"].get<std::string>(), x["kind"].get<std::string>(),
                                       x["in"][0].get<int>(), x["in"][1].get<int>(), x["out"][0].get<int>(),
                                       x["out"][1].get<int>());
                for (const auto& x : j["edges"])
                    out << fmt::format("edge {} {} -> {} branch {} anti {}\n", x["id"].get<int>(),
                                       x["tail"].get<int>(), x["head"].get<int>(), x["branch_next"].get<int>(),
                                       x["anti_next"].get<int>());
            }
        } else if (cmd == "conditions") {
            auto v = build_veering(sig);
            auto g = build_dual_graph(v);
            auto sectors = build_sectors(v, g);
            json j;
            for (const auto& s : sectors) {
                auto c = sector_conditions(g, s);
                j["sectors"].push_back({{"edge", s.edge},
                                        {"color", to_string(s.color)},
                                        {"kind", s.toggle ? "toggle" : "fan"},
                                        {"tbt", c.tbt},
                                        {"sbf", c.sbf},
                                        {"bsbf", c.bsbf},
                                        {"frc", c.frc}});
            }
            j["m003"] = m003_predicate(g, sectors);
            if (as_json) {
                out << j.dump(2) << "\n";
            } else {
                auto yn = [](bool b) { return b ? 1 : 0; };
                for (const auto& x : j["sectors"])
                    out << fmt::format("sector {} {} {} tbt {} {} sbf {} {} bsbf {} frc {}\n", x["edge"].get<int>(),
                                       x["color"].get<std::string>(), x["kind"].get<std::string>(),
                                       yn(x["tbt"][0]), yn(x["tbt"][1]), yn(x["sbf"][0]), yn(x["sbf"][1]),
                                       yn(x["bsbf"]), yn(x["frc"]));
                out << "m003 " << (j["m003"].get<bool>() ? "yes" : "no") << "\n";
            }
        } else if (cmd == "dilatation" || cmd == "min-dilatation") {
            auto v = build_veering(sig);
            auto r = cmd == "dilatation" ? dilatation_b1(v, opt) : min_dilatation_b2(v, opt);
            if (as_json) {
                auto j = report_json(r, prec);
                j["sig"] = sig;
                out << j.dump(2) << "\n";
            } else {
                for (const auto& n : r.notes) err << "note: " << one_line(n) << "\n";
                out << format_compile_line(r, index, sig) << "\n";
            }
        } else if (cmd == "bounds") {
            std::vector<std::pair<std::string, double>> rows = {{"single_hook", bound_single_hook(value)},
                                                                {"double_hook", bound_double_hook(value)},
                                                                {"AT", bound_at(value)},
                                                                {"F1", bound_f1(value)},
                                                                {"F2", bound_f2(value)}};
            const double lo = 4 * std::sqrt(2.0);
            const bool eiirp_ok = value >= lo && value < 8;
            if (eiirp_ok) {
                auto e = bound_eiirp(value);
                const char* names[7] = {"E1", "E2", "E3", "E4", "F1", "F2", "log3"};
                for (int i = 0; i < 7; ++i)
                    if (i != 4 && i != 5) rows.push_back({names[i], e.components[i]});
                rows.push_back({"EIIRP", e.max});
            }
            if (as_json) {
                json j;
                for (const auto& [k, x] : rows) j[k] = x;
                out << j.dump(2) << "\n";
            } else {
                for (const auto& [k, x] : rows) out << fmt::format("{} {:.3f} {:.{}f}\n", k, x, x, prec);
                if (!eiirp_ok) out << "EIIRP n/a\n";
            }
        } else if (cmd == "batch" || cmd == "filter") {
            std::ifstream in(file);
            auto items = read_sig_list(in);
            auto results = run_batch(items, jobs, opt);
            int failures = 0;
            json j = json::array();
            for (const auto& r : results) {
                if (!r.ok) {
                    ++failures;
                    if (cmd == "batch") {
                        if (as_json)
                            j.push_back({{"index", r.item.index}, {"sig", r.item.sig}, {"error", r.error}});
                        else
                            out << r.item.index << " " << r.item.sig << " error " << r.error << "\n";
                    } else {
                        err << "error: " << r.item.index << " " << r.item.sig << " " << r.error << "\n";
                    }
                    continue;
                }
                if (cmd == "filter" && !(r.report.value < below)) continue;
                if (as_json) {
                    auto x = report_json(r.report, prec);
                    x["index"] = r.item.index;
                    x["sig"] = r.item.sig;
                    j.push_back(x);
                } else {
                    out << format_compile_line(r.report, r.item.index, r.item.sig) << "\n";
                }
            }
            if (as_json) out << j.dump(2) << "\n";
            return failures ? 5 : 0;
        }
    } catch (const std::exception& e) {
        std::string kind = error_kind(e);
        std::string msg = e.what();
        if (auto* ve = dynamic_cast<const VeeringError*>(&e); ve && !ve->diagnostics().empty())
            msg = fmt::format("{}", fmt::join(ve->diagnostics(), "; "));
        err << "error: " << kind << ": " << one_line(msg) << "\n";
        return exit_code(kind);
    }
    return 0;
}

}  // namespace veer
