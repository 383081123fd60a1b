#include "rhombic/cli.hpp"

#include "rhombic/error.hpp"
#include "rhombic/io.hpp"
#include "rhombic/render.hpp"
#include "rhombic/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace rhombic {

namespace {

struct UsageError : Error {
    using Error::Error;
};

struct Options {
    std::string word;
    std::optional<int> n;
    std::optional<int> r;
    std::optional<std::string> alpha;
    std::optional<std::string> beta;
    std::optional<std::string> q;
    std::string in;
    std::string out;
    std::string format;
    int max_n = 7;
    int jobs = 1;
    std::string mode;
};

Json read_json(const std::string& path) {
    if (path.empty())
        throw UsageError("--in is required");
    std::ifstream file(path);
    if (!file)
        throw UsageError("cannot open " + path);
    try {
        return Json::parse(file);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(path + ": " + e.what());
    }
}

StateWord word_option(const Options& o) {
    if (o.word.empty())
        throw UsageError("--word is required");
    return parse_word(o.word);
}

std::pair<int, int> size_options(const Options& o) {
    if (!o.n || !o.r)
        throw UsageError("--n and --r are required");
    if (*o.n < 0 || *o.r < 0 || *o.r > *o.n)
        throw UsageError("need 0 <= r <= n");
    return {*o.n, *o.r};
}

// All three of alpha, beta, q, or none of them.
std::optional<std::array<Rational, 3>> params(const Options& o, bool required) {
    const int given = o.alpha.has_value() + o.beta.has_value() + o.q.has_value();
    if (given == 0 && !required)
        return std::nullopt;
    if (given != 3)
        throw UsageError("--alpha, --beta and --q must be given together");
    return std::array<Rational, 3>{parse_rational(*o.alpha), parse_rational(*o.beta), parse_rational(*o.q)};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// Assemblées read better on one line each.
std::string dump_assemblees(const std::vector<Assemblee>& all) {
    std::string text = "[";
    for (std::size_t i = 0; i < all.size(); ++i)
        text += (i ? ",\n  " : "\n  ") + assemblee_to_json(all[i]).dump();
    return text + (all.empty() ? "]\n" : "\n]\n");
}

Json weighted(Json base, const char* key, const LaurentPolynomial& p, const Options& o) {
    base[key] = polynomial_to_json(p);
    if (auto v = params(o, false))
        base["value"] = format_rational(p.evaluate((*v)[0], (*v)[1], (*v)[2]));
    return base;
}

int enumerate_rat(const Options& o, std::string& text) {
    if (!o.word.empty()) {
        auto tiling = std::make_shared<const Tiling>(canonical_tiling(build_diagram(word_option(o))));
        Json arr = Json::array();
        for (const Tableau& t : enumerate_fillings(tiling))
            arr.push_back(tableau_to_json(t));
        text = dump(arr);
        return 0;
    }
    const auto [n, r] = size_options(o);
    Json states = Json::array();
    Integer total = 0;
    for (const StateWord& w : enumerate_states(n, r)) {
        const std::size_t c = count_fillings(canonical_tiling(build_diagram(w)));
        states.push_back({{"word", w.to_string()}, {"count", c}});
        total += c;
    }
    text = dump({{"n", n}, {"r", r}, {"states", states}, {"total", total.str()}, {"lah", lah_number(n, r).str()}});
    return 0;
}

int biject(const Options& o, std::string& text) {
    const Json input = read_json(o.in);
    if (o.mode == "t2a") {
        text = assemblee_to_json(label_passing(tableau_from_json(input))).dump() + "\n";
        return 0;
    }
    const Assemblee a = assemblee_from_json(input);
    auto tiling = std::make_shared<const Tiling>(canonical_tiling(build_diagram(word_of_assemblee(a))));
    const LabeledTableau lt = fusion_exchange(a, tiling);
    text = dump(o.mode == "a2t" ? tableau_to_json(lt.tableau) : trace_to_json(lt));
    return 0;
}

int insert_command(const Options& o, std::string& text) {
    if (!o.in.empty()) {
        const auto [f, g] = insertion_input_from_json(read_json(o.in));
        text = dump(insertion_to_json(insert(f, g)));
        return 0;
    }
    const auto [n, r] = size_options(o);
    std::vector<Assemblee> images;
    for_each_subexceedant(n - r, r, [&](const TruncatedSubexceedant& f) {
        for_each_green_choice(n - r, r, [&](const GreenPointChoice& g) { images.push_back(rho(insert(f, g).assemblee)); });
    });
    const std::size_t inputs = images.size();
    std::sort(images.begin(), images.end());
    const bool bijective = images == enumerate_assemblees(n + 1, r + 1);
    text = dump({{"n", n}, {"r", r}, {"inputs", inputs}, {"lah", lah_number(n, r).str()}, {"bijective", bijective}});
    return bijective ? 0 : 1;
}

int render_command(const Options& o, std::string& text) {
    const Json input = read_json(o.in);
    const bool ascii = o.format == "ascii";
    if (o.format == "json")
        throw UsageError("render supports --format svg or ascii");
    if (input.is_array()) {
        const Assemblee a = assemblee_from_json(input);
        text = ascii ? render_assemblee_ascii(a) : render_assemblee_svg(a);
    } else if (input.is_object() && input.contains("edges")) {
        const LabeledTableau lt = trace_from_json(input);
        text = ascii ? render_trace_ascii(lt) : render_trace_svg(lt);
    } else if (input.is_object() && input.contains("filling")) {
        const Tableau t = tableau_from_json(input);
        text = ascii ? render_tableau_ascii(t) : render_tableau_svg(t);
    } else {
        throw FormatError("render expects an assemblée, a tableau or a trace");
    }
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rhombic alternative tableaux, assemblées and the two-species ASEP", "rhombic"};
    app.require_subcommand(1);
    Options o;

    auto add_word = [&](CLI::App* s) { s->add_option("--word", o.word, "state word over D, A, E"); };
    auto add_size = [&](CLI::App* s) {
        s->add_option("--n", o.n, "number of sites");
        s->add_option("--r", o.r, "number of light particles");
    };
    auto add_params = [&](CLI::App* s) {
        s->add_option("--alpha", o.alpha, "rational p/q");
        s->add_option("--beta", o.beta, "rational p/q");
        s->add_option("--q", o.q, "rational p/q");
    };
    auto add_io = [&](CLI::App* s) {
        s->add_option("--in", o.in, "input JSON file");
        s->add_option("--out", o.out, "write output here instead of stdout");
    };
    auto add_out = [&](CLI::App* s) { s->add_option("--out", o.out, "write output here instead of stdout"); };
    auto add_jobs = [&](CLI::App* s) {
        s->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    };

    auto* enum_rat = app.add_subcommand("enumerate-rat", "tableaux of a word, or counts for (n, r)");
    add_word(enum_rat), add_size(enum_rat), add_out(enum_rat);
    auto* weight = app.add_subcommand("weight", "weight polynomial of a state");
    add_word(weight), add_params(weight), add_out(weight);
    auto* partition = app.add_subcommand("partition", "partition function Z_{n,r}");
    add_size(partition), add_params(partition), add_jobs(partition), add_out(partition);
    auto* verify_partition = app.add_subcommand("verify-partition", "check Z_{n,r} at q = 1 against the product");
    add_size(verify_partition), add_jobs(verify_partition), add_out(verify_partition);
    auto* biject_cmd = app.add_subcommand("biject", "a2t, t2a or trace");
    biject_cmd->add_option("mode", o.mode)->required()->check(CLI::IsMember({"a2t", "t2a", "trace"}));
    add_io(biject_cmd);
    auto* enum_asm = app.add_subcommand("enumerate-assemblees", "assemblées of size (n+1, r+1)");
    add_size(enum_asm), add_out(enum_asm);
    enum_asm->add_option("--format", o.format)->check(CLI::IsMember({"json", "ascii"}));
    auto* insert_cmd = app.add_subcommand("insert", "one insertion from --in, or a bijectivity summary for (n, r)");
    add_io(insert_cmd), add_size(insert_cmd);
    auto* asep = app.add_subcommand("verify-asep", "exact stationary distribution against tableau weights");
    add_size(asep), add_params(asep), add_out(asep);
    auto* verify_all = app.add_subcommand("verify-all", "run the acceptance criteria");
    verify_all->add_option("--max-n", o.max_n, "cap on every size bound")->check(CLI::NonNegativeNumber);
    add_jobs(verify_all), add_out(verify_all);
    auto* render = app.add_subcommand("render", "draw an assemblée, tableau or trace");
    add_io(render);
    render->add_option("--format", o.format)->check(CLI::IsMember({"svg", "ascii", "json"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    std::string text;
    int code = 0;
    try {
        if (app.got_subcommand(enum_rat)) {
            code = enumerate_rat(o, text);
        } else if (app.got_subcommand(weight)) {
            const StateWord w = word_option(o);
            text = dump(weighted({{"word", w.to_string()}}, "weight", state_weight(w), o));
        } else if (app.got_subcommand(partition)) {
            const auto [n, r] = size_options(o);
            text = dump(weighted({{"n", n}, {"r", r}}, "partition", partition_function(n, r, o.jobs), o));
        } else if (app.got_subcommand(verify_partition)) {
            const auto [n, r] = size_options(o);
            const LaurentPolynomial lhs = partition_function(n, r, o.jobs).at_q(1);
            const LaurentPolynomial rhs = closed_form_partition(n, r);
            const bool pass = lhs == rhs;
            text = "Z(q=1):  " + lhs.to_string() + "\nproduct: " + rhs.to_string() + "\n" + (pass ? "PASS" : "FAIL") +
                   "\n";
            code = pass ? 0 : 1;
        } else if (app.got_subcommand(biject_cmd)) {
            code = biject(o, text);
        } else if (app.got_subcommand(enum_asm)) {
            const auto [n, r] = size_options(o);
            const auto all = enumerate_assemblees(n + 1, r + 1);
            if (o.format == "ascii") {
                for (const Assemblee& a : all)
                    text += render_assemblee_ascii(a);
            } else {
                text = dump_assemblees(all);
            }
        } else if (app.got_subcommand(insert_cmd)) {
            code = insert_command(o, text);
        } else if (app.got_subcommand(asep)) {
            const auto [n, r] = size_options(o);
            const auto p = *params(o, true);
            const StationarityReport rep = verify_stationarity(n, r, p[0], p[1], p[2]);
            text = dump(report_to_json(rep));
            code = rep.pass ? 0 : 1;
        } else if (app.got_subcommand(verify_all)) {
            const auto results = run_acceptance(o.max_n, o.jobs);
            text = format_results(results);
            code = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass; }) ? 0 : 1;
        } else if (app.got_subcommand(render)) {
            code = render_command(o, text);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    if (o.out.empty()) {
        out << text;
    } else {
        std::ofstream file(o.out, std::ios::binary);
        if (!(file << text)) {
            err << "error: cannot write " << o.out << '\n';
            return 2;
        }
    }
    return code;
}

} // namespace rhombic
