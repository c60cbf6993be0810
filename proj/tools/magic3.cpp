// magic3: command-line access to validation, reduction, decomposition,
// enumeration and counting of order-3 magic squares.
//
// Exit codes: 0 success, 1 usage or parse error, 2 input is not a magic
// square (or is otherwise rejected), 3 selftest failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "magic3/canonical.hpp"
#include "magic3/decompose.hpp"
#include "magic3/enumerate.hpp"
#include "magic3/errors.hpp"
#include "magic3/selftest.hpp"
#include "magic3/text_format.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRejected = 2;
constexpr int kExitSelftest = 3;

std::string join(const std::vector<std::string>& words)
{
    std::string out;
    for (const auto& w : words) {
        if (!out.empty()) out += ' ';
        out += w;
    }
    return out;
}

json entries_json(const magic3::Square& x)
{
    json arr = json::array();
    for (auto v : x.entries()) arr.push_back(v);
    return arr;
}

json decomposition_json(const magic3::Decomposition& d)
{
    return json{
        {"family", magic3::to_string(d.family)},
        {"i", d.i},
        {"j", d.j},
        {"k", d.k},
        {"symmetry", magic3::to_string(d.symmetry)},
    };
}

int run_verify(const std::vector<std::string>& words)
{
    const magic3::Square x = magic3::parse_square(join(words));
    try {
        const magic3::MagicSquare m = magic3::validate(x);
        std::cout << "magic m=" << m.magic_sum() << " s=" << m.s() << '\n';
        return kExitOk;
    } catch (const magic3::DomainError& e) {
        std::cout << "not magic: " << e.what() << '\n';
        return kExitRejected;
    }
}

int run_reduce(const std::vector<std::string>& words)
{
    const magic3::MagicSquare m = magic3::validate(magic3::parse_square(join(words)));
    const magic3::Reduction red = magic3::reduce(m);
    const magic3::ReducedCoordinates c = magic3::coordinates_of(red.reduced);
    const json out{
        {"reduced", entries_json(red.reduced.square())},
        {"i", red.i},
        {"symmetry", magic3::to_string(red.symmetry)},
        {"r", red.reduced.r()},
        {"s", red.reduced.s()},
        {"alpha", c.alpha},
        {"beta", c.beta},
    };
    std::cout << out.dump() << '\n';
    return kExitOk;
}

int run_decompose(const std::vector<std::string>& words)
{
    const magic3::MagicSquare m = magic3::validate(magic3::parse_square(join(words)));
    std::cout << decomposition_json(magic3::decompose(m)).dump() << '\n';
    return kExitOk;
}

int run_construct(const std::string& family, std::uint64_t i, std::uint64_t j, std::uint64_t k, const std::string& sym)
{
    magic3::Decomposition d;
    d.family = *magic3::parse_family(family);
    d.i = i;
    d.j = j;
    d.k = k;
    d.symmetry = *magic3::parse_dihedral(sym);
    std::cout << magic3::format_square(magic3::construct(d).square()) << '\n';
    return kExitOk;
}

int run_enumerate(std::uint64_t s, const std::string& source, const std::string& format)
{
    const bool as_json = format == "json";
    json arr = json::array();
    auto emit = [&](const magic3::MagicSquare& m) {
        if (as_json) arr.push_back(entries_json(m.square()));
        else std::cout << magic3::format_square(m.square()) << '\n';
    };
    if (source == "brute") {
        magic3::for_each_brute_force(s, emit);
    } else {
        magic3::for_each_family_square(s, [&](const magic3::Decomposition&, const magic3::MagicSquare& m) { emit(m); });
    }
    if (as_json) std::cout << arr.dump() << '\n';
    return kExitOk;
}

int run_count(std::uint64_t s, bool skip_brute)
{
    const magic3::CountReport r = magic3::reconcile(s, !skip_brute);
    const json out{
        {"s", r.s},
        {"closed", r.closed_form},
        {"series", r.series},
        {"families", r.families},
        {"brute", r.brute ? json(*r.brute) : json(nullptr)},
    };
    std::cout << out.dump() << '\n';
    return kExitOk;
}

int run_selftest(std::uint64_t max_s)
{
    const magic3::SelftestResult r = magic3::run_selftest(max_s);
    json out{{"max_s", max_s}, {"passed", r.passed}};
    if (!r.passed) out["failure"] = r.failure;
    std::cout << out.dump() << '\n';
    return r.passed ? kExitOk : kExitSelftest;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Validate, reduce, decompose, enumerate and count order-3 magic squares", "magic3"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    const std::string square_help = "nine nonnegative integers, row-major; commas and semicolons allowed";

    std::vector<std::string> words;
    auto* verify = app.add_subcommand("verify", "Check the magic-square conditions");
    verify->add_option("square", words, square_help)->required();

    auto* reduce = app.add_subcommand("reduce", "Print the reduced form, offset, symmetry and (alpha, beta) as JSON");
    reduce->add_option("square", words, square_help)->required();

    auto* decompose = app.add_subcommand("decompose", "Print the family decomposition as JSON");
    decompose->add_option("square", words, square_help)->required();

    std::string family;
    std::uint64_t i = 0, j = 0, k = 0;
    std::string sym = "id";
    auto* construct = app.add_subcommand("construct", "Build the square named by a decomposition");
    construct->add_option("--family", family, "F1 or F2")->required()->check(CLI::IsMember({"F1", "F2"}));
    construct->add_option("--i", i, "multiple of A")->required();
    construct->add_option("--j", j, "multiple of B")->required();
    construct->add_option("--k", k, "multiple of C (F1) or D (F2)")->required();
    construct->add_option("--sym", sym, "symmetry: id r90 r180 r270 fh fv fd fa")
        ->check(CLI::IsMember({"id", "r90", "r180", "r270", "fh", "fv", "fd", "fa"}));

    std::uint64_t s = 0;
    std::string source = "families";
    std::string format = "text";
    auto* enumerate = app.add_subcommand("enumerate", "List every magic square with magic sum 3s");
    enumerate->add_option("--s", s, "magic parameter (centre entry)")->required();
    enumerate->add_option("--source", source, "families or brute")->check(CLI::IsMember({"families", "brute"}));
    enumerate->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    bool skip_brute = false;
    auto* count = app.add_subcommand("count", "Count magic squares with magic sum 3s four ways");
    count->add_option("--s", s, "magic parameter")->required();
    count->add_flag("--no-brute", skip_brute, "skip the brute-force enumerator");

    std::uint64_t max_s = 0;
    auto* selftest = app.add_subcommand("selftest", "Run the invariant suite for every s up to --max-s");
    selftest->add_option("--max-s", max_s, "largest magic parameter to check")->required()->check(CLI::Range(4, 100000));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*verify) return run_verify(words);
        if (*reduce) return run_reduce(words);
        if (*decompose) return run_decompose(words);
        if (*construct) return run_construct(family, i, j, k, sym);
        if (*enumerate) return run_enumerate(s, source, format);
        if (*count) return run_count(s, skip_brute);
        if (*selftest) return run_selftest(max_s);
    } catch (const magic3::ParseError& e) {
        std::cerr << "magic3: " << e.what() << '\n';
        return kExitUsage;
    } catch (const magic3::DomainError& e) {
        std::cerr << "magic3: not a magic square: " << e.what() << '\n';
        return kExitRejected;
    } catch (const magic3::OverflowError& e) {
        std::cerr << "magic3: " << e.what() << '\n';
        return kExitRejected;
    } catch (const magic3::MismatchReport& e) {
        std::cerr << "magic3: " << e.what() << '\n';
        return kExitSelftest;
    }
    return kExitUsage;
}
