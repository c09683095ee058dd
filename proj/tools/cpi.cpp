// cpi: identity tables, explicit bijections and the mod-23 counting check.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cpi/colored.hpp"
#include "cpi/gm_lift.hpp"
#include "cpi/master.hpp"
#include "cpi/text.hpp"

using json = nlohmann::ordered_json;
using namespace cpi;

namespace {

enum class Format { text, csv, json };

struct Output {
    Format format = Format::text;
    bool timing = true;
    std::string path;
};

void add_output_flags(CLI::App* cmd, Output& out)
{
    static const std::map<std::string, Format> names{{"text", Format::text}, {"csv", Format::csv}, {"json", Format::json}};
    cmd->add_option_function<std::string>(
           "--format", [&out](const std::string& name) { out.format = names.at(name); }, "csv, json or text")
        ->check(CLI::IsMember({"csv", "json", "text"}))
        ->type_name("FORMAT");
    cmd->add_flag("--no-timing", [&out](std::int64_t) { out.timing = false; }, "omit elapsed time");
    cmd->add_option("--out", out.path, "write to this file instead of stdout");
}

class Stopwatch {
public:
    double ms() const
    {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"')
            q += '"';
        q += c;
    }
    return q + '"';
}

Int pow2(int p) { return Int{1} << p; }

// count ----------------------------------------------------------------------

struct CountArgs {
    std::string preset;
    std::string system;
    std::string side = "S";
    std::optional<Int> n;
    std::optional<Int> nmin;
    std::optional<Int> nmax;
    Output out;
};

int run_count(const CountArgs& a, std::ostream& os)
{
    const Stopwatch clock;
    if (a.preset.empty() == a.system.empty())
        throw CLI::ValidationError("count", "give exactly one of --preset and --system");
    std::optional<ResidueSystem> sys;
    std::string label;
    if (!a.preset.empty()) {
        const auto& p = preset(a.preset);
        if (a.side != "S" && a.side != "T")
            throw CLI::ValidationError("--side", "must be S or T");
        sys = a.side == "S" ? p.S_system : p.T_system;
        label = p.name + ':' + a.side;
    } else {
        sys = parse_system(a.system);
        label = format_system(*sys);
    }
    if (a.n && (a.nmin || a.nmax))
        throw CLI::ValidationError("count", "--n excludes --nmin/--nmax");
    if (!a.n && !a.nmax)
        throw CLI::ValidationError("count", "give --n or --nmax");
    const Int lo = a.n ? *a.n : a.nmin.value_or(0);
    const Int hi = a.n ? *a.n : *a.nmax;
    if (lo < 0 || hi < lo)
        throw CLI::ValidationError("count", "need 0 <= nmin <= nmax");

    const auto enumerated = count_D_table(*sys, hi);
    const auto series = count_D_qseries(*sys, hi);
    bool agree = true;
    if (a.out.format == Format::csv)
        os << "system,N,count,qseries,agree\n";
    for (Int n = lo; n <= hi; ++n) {
        const Int e = enumerated[static_cast<std::size_t>(n)];
        const Int q = series[static_cast<std::size_t>(n)];
        agree = agree && e == q;
        switch (a.out.format) {
        case Format::text:
            os << n << ' ' << e << (e == q ? "" : "  DISAGREE qseries=" + std::to_string(q)) << '\n';
            break;
        case Format::csv:
            os << csv_field(label) << ',' << n << ',' << e << ',' << q << ',' << (e == q) << '\n';
            break;
        case Format::json:
            os << json{{"system", label}, {"N", n}, {"count", e}, {"qseries", q}, {"agree", e == q}}.dump() << '\n';
            break;
        }
    }
    if (a.out.timing && a.out.format == Format::text)
        os << "# " << clock.ms() << " ms\n";
    else if (a.out.timing && a.out.format == Format::json)
        os << json{{"summary", true}, {"agree", agree}, {"elapsed_ms", clock.ms()}}.dump() << '\n';
    return agree ? 0 : 1;
}

// verify ---------------------------------------------------------------------

struct VerifyArgs {
    std::string preset;
    Int nmax = 0;
    Output out;
};

int run_verify(const VerifyArgs& a, std::ostream& os)
{
    const Stopwatch clock;
    const auto& p = preset(a.preset);
    if (a.nmax < p.N0)
        throw CLI::ValidationError("--nmax", "must be at least " + std::to_string(p.N0) + " for " + p.name);
    const auto report = identity_check(p, a.nmax);
    const bool ok = report.verdict && report.oracles_agree;
    const Int factor = report.p_exponent >= 0 ? pow2(report.p_exponent) : 1;
    const Int factor_s = report.p_exponent < 0 ? pow2(-report.p_exponent) : 1;

    if (a.out.format == Format::csv)
        os << "preset,N,D_S,D_T,factor,pass,oracles_agree\n";
    if (a.out.format == Format::text)
        os << p.name << ": D_S(N) = " << (factor_s == 1 ? "" : std::to_string(factor_s) + "^-1 ")
           << factor << " * D_T(N-" << p.m << ")\n";
    for (const auto& r : report.records) {
        switch (a.out.format) {
        case Format::text:
            os << r.N << ' ' << r.d_S << ' ' << r.d_T << ' ' << (r.pass ? "ok" : "FAIL")
               << (r.oracles_agree ? "" : " oracle-mismatch") << '\n';
            break;
        case Format::csv:
            os << p.name << ',' << r.N << ',' << r.d_S << ',' << r.d_T << ',' << factor << ',' << r.pass << ','
               << r.oracles_agree << '\n';
            break;
        case Format::json:
            os << json{{"preset", p.name}, {"N", r.N},         {"D_S", r.d_S},
                       {"D_T", r.d_T},     {"factor", factor}, {"pass", r.pass},
                       {"oracles_agree", r.oracles_agree}}
                      .dump()
               << '\n';
            break;
        }
    }
    const std::string verdict = ok ? "pass" : "fail";
    if (a.out.format == Format::text) {
        os << "verdict: " << verdict << '\n';
        if (a.out.timing)
            os << "# " << clock.ms() << " ms\n";
    } else if (a.out.format == Format::json) {
        json s{{"preset", p.name},
               {"n_min", report.n_min},
               {"n_max", report.n_max},
               {"verdict", verdict},
               {"oracles_agree", report.oracles_agree}};
        if (a.out.timing)
            s["elapsed_ms"] = clock.ms();
        os << s.dump() << '\n';
    }
    return ok ? 0 : 1;
}

// biject ---------------------------------------------------------------------

struct BijectArgs {
    std::string preset;
    std::string partition;
    bool inverse = false;
    int label = 1;
    Output out;
};

int run_biject(const BijectArgs& a, std::ostream& os)
{
    const Stopwatch clock;
    const auto& p = preset(a.preset);
    const auto input = parse_colored(a.partition);
    EndToEndResult r;
    ColoredPartition image;
    int label = 0;
    if (a.inverse) {
        image = end_to_end_inverse(p, input, a.label, &r);
    } else {
        r = end_to_end(p, input);
        image = r.image;
        label = r.label;
    }

    json path = json::array();
    for (const auto& v : r.path)
        path.push_back(format_star(v));
    const std::string dir = a.inverse ? "T->S" : "S->T";
    switch (a.out.format) {
    case Format::text:
        os << dir << ' ' << format_colored(input);
        if (a.inverse)
            os << " #" << a.label;
        os << " -> " << format_colored(image);
        if (!a.inverse)
            os << " #" << label;
        os << "\nsource " << format_tuple(r.source) << "\ntarget " << format_tuple(r.target) << '\n';
        for (const auto& v : r.path)
            os << "  " << format_star(v) << '\n';
        if (a.out.timing)
            os << "# " << clock.ms() << " ms\n";
        break;
    case Format::csv:
        os << "preset,direction,input,image,label\n"
           << p.name << ',' << dir << ',' << csv_field(format_colored(input)) << ','
           << csv_field(format_colored(image)) << ',' << (a.inverse ? a.label : label) << '\n';
        break;
    case Format::json: {
        json j{{"preset", p.name},
               {"direction", dir},
               {"input", format_colored(input)},
               {"image", format_colored(image)},
               {"label", a.inverse ? a.label : label},
               {"source", format_tuple(r.source)},
               {"target", format_tuple(r.target)},
               {"path", path}};
        if (a.out.timing)
            j["elapsed_ms"] = clock.ms();
        os << j.dump() << '\n';
        break;
    }
    }
    return 0;
}

// conjecture23 ---------------------------------------------------------------

struct ConjectureArgs {
    Int nmax = 50;
    Output out;
};

int run_conjecture23(const ConjectureArgs& a, std::ostream& os)
{
    const Stopwatch clock;
    const auto& p = preset("mod23");
    if (a.nmax < p.N0)
        throw CLI::ValidationError("--nmax", "must be at least 3");
    const auto report = identity_check(p, a.nmax);
    bool all_i = true;
    bool consistent = true;
    if (a.out.format == Format::csv)
        os << "N,lhs_tuples,rhs_tuples,condition_i,condition_ii,consistent\n";
    for (const auto& rec : report.records) {
        const Int lhs = count_solutions(p.S_system, rec.N);
        const Int rhs = count_solutions(p.T_system, rec.N - p.m);
        const bool ci = lhs == rhs;
        const bool same = ci == rec.pass;
        all_i = all_i && ci;
        consistent = consistent && same;
        switch (a.out.format) {
        case Format::text:
            os << rec.N << ' ' << lhs << ' ' << rhs << ' ' << (ci ? "ok" : "FAIL") << (same ? "" : " INCONSISTENT")
               << '\n';
            break;
        case Format::csv:
            os << rec.N << ',' << lhs << ',' << rhs << ',' << ci << ',' << rec.pass << ',' << same << '\n';
            break;
        case Format::json:
            os << json{{"N", rec.N},           {"lhs_tuples", lhs},        {"rhs_tuples", rhs},
                       {"condition_i", ci},    {"condition_ii", rec.pass}, {"consistent", same}}
                      .dump()
               << '\n';
            break;
        }
    }
    const bool ok = all_i && consistent && report.verdict && report.oracles_agree;
    const std::string verdict = ok ? "pass" : "fail";
    if (a.out.format == Format::text) {
        os << "verdict: " << verdict << '\n';
        if (a.out.timing)
            os << "# " << clock.ms() << " ms\n";
    } else if (a.out.format == Format::json) {
        json s{{"n_min", report.n_min}, {"n_max", report.n_max}, {"verdict", verdict}, {"consistent", consistent}};
        if (a.out.timing)
            s["elapsed_ms"] = clock.ms();
        os << s.dump() << '\n';
    }
    return ok ? 0 : 1;
}

template <class Args, class Fn>
void bind(CLI::App* cmd, Args& args, Fn run, int& code)
{
    cmd->callback([&args, run, &code] {
        std::ostringstream buf;
        code = run(args, buf);
        if (args.out.path.empty()) {
            std::cout << buf.str();
        } else {
            std::ofstream f(args.out.path);
            if (!f)
                throw CLI::ValidationError("--out", "cannot open " + args.out.path);
            f << buf.str();
        }
    });
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Colored partition identities: counts, verification and explicit bijections"};
    app.require_subcommand(1);
    int code = 0;

    CountArgs count;
    auto* c = app.add_subcommand("count", "D(N) by enumeration and by q-series");
    c->add_option("--preset", count.preset, "mod3, mod5, mod7, mod11 or mod23");
    c->add_option("--system", count.system, "custom system, e.g. t=1;C=2;A=1");
    c->add_option("--side", count.side, "S or T (with --preset)");
    c->add_option("--n", count.n, "single N");
    c->add_option("--nmin", count.nmin, "first N of a range");
    c->add_option("--nmax", count.nmax, "last N of a range");
    add_output_flags(c, count.out);
    bind(c, count, run_count, code);

    VerifyArgs verify;
    auto* v = app.add_subcommand("verify", "check D_S(N) = 2^p D_T(N-m) up to nmax");
    v->add_option("--preset", verify.preset, "mod3, mod5, mod7, mod11 or mod23")->required();
    v->add_option("--nmax", verify.nmax, "last N")->required();
    add_output_flags(v, verify.out);
    bind(v, verify, run_verify, code);

    BijectArgs biject;
    auto* b = app.add_subcommand("biject", "map an S-partition to (T-partition, label), or back");
    b->add_option("--preset", biject.preset, "mod3, mod5, mod7 or mod11")->required();
    b->add_option("partition", biject.partition, "colored parts, e.g. 7@4+,5@3+,3@2+")->required();
    b->add_flag("--inverse", biject.inverse, "partition is a T-partition; recover the S-partition");
    b->add_option("--label", biject.label, "label of the T-side tuple (with --inverse)");
    add_output_flags(b, biject.out);
    bind(b, biject, run_biject, code);

    ConjectureArgs conj;
    auto* j = app.add_subcommand("conjecture23", "tuple counts for the mod-23 system");
    j->add_option("--nmax", conj.nmax, "last N (default 50)");
    add_output_flags(j, conj.out);
    bind(j, conj, run_conjecture23, code);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return 1;
    }
    return code;
}
