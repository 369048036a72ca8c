#include "pstab/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pstab/correspondence.hpp"
#include "pstab/counting.hpp"
#include "pstab/errors.hpp"
#include "pstab/io.hpp"
#include "pstab/oracle.hpp"

namespace pstab::cli {

namespace {

enum class Format { ascii, json, latex };

struct Config {
    std::string mode = "lps";
    std::string format = "ascii";
    std::string input_file;
    std::string text;
    std::string word, array, pair, p, q;
    std::string level = "auto";
    std::string method;
    std::string shape;
    unsigned n = 0, k = 0;
    VerifyOptions verify{5};
    bool json = false;
};

Format parse_format(const std::string& s)
{
    if (s == "ascii")
        return Format::ascii;
    if (s == "json")
        return Format::json;
    if (s == "latex")
        return Format::latex;
    throw invalid_input("unknown format '" + s + "'");
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw invalid_input("cannot read input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Positional text, or the contents of --input when given.
std::string source(const Config& c)
{
    return c.input_file.empty() ? c.text : read_file(c.input_file);
}

template <class SP, class SQ>
void print_pair(std::ostream& out, const TableauPair<SP, SQ>& pair, Format f)
{
    switch (f) {
    case Format::ascii:
        out << render_ascii(pair);
        break;
    case Format::json:
        out << to_json(pair).dump() << '\n';
        break;
    case Format::latex:
        out << render_latex(pair);
        break;
    }
}

void print_tableau(std::ostream& out, const PlainTableau& t, Format f)
{
    switch (f) {
    case Format::ascii:
        out << render_ascii(t);
        break;
    case Format::json:
        out << to_json(t).dump() << '\n';
        break;
    case Format::latex:
        out << render_latex(t);
        break;
    }
}

void print_word(std::ostream& out, const Word& w, Format f)
{
    if (f == Format::json)
        out << nlohmann::json{{"word", w}}.dump() << '\n';
    else
        out << format_word(w) << '\n';
}

void print_array(std::ostream& out, const Array& a, Format f)
{
    if (f == Format::json)
        out << to_json(a).dump() << '\n';
    else
        out << format_array(a) << '\n';
}

PlainPair pair_input(const Config& c)
{
    if (!c.p.empty() || !c.q.empty()) {
        if (c.p.empty() || c.q.empty())
            throw invalid_input("--p and --q go together");
        return PlainPair{parse_tableau(c.p), parse_tableau(c.q)};
    }
    const std::string text = c.pair.empty() ? source(c) : c.pair;
    return parse_pair(text);
}

int cmd_insert(const Config& c, std::ostream& out)
{
    const Word w = parse_word(source(c));
    print_pair(out, extended_insert(w, parse_mode(c.mode)), parse_format(c.format));
    return kOk;
}

int cmd_rsk(const Config& c, std::ostream& out)
{
    const Mode mode = parse_mode(c.mode);
    const Format f = parse_format(c.format);
    if (!c.word.empty() + !c.array.empty() + !c.input_file.empty() != 1)
        throw invalid_input("give exactly one of --word, --array, --input");
    if (!c.word.empty()) {
        print_pair(out, rsk(parse_word(c.word), mode), f);
        return kOk;
    }
    const std::string text = c.array.empty() ? read_file(c.input_file) : c.array;
    // A file holding no '/' and no JSON object is a word.
    if (text.find('/') == std::string::npos && text.find('{') == std::string::npos)
        print_pair(out, rsk(parse_word(text), mode), f);
    else
        print_pair(out, rsk(parse_array(text), mode), f);
    return kOk;
}

int cmd_unrsk(const Config& c, std::ostream& out)
{
    const Mode mode = parse_mode(c.mode);
    const Format f = parse_format(c.format);
    const PlainPair pair = pair_input(c);
    StablePairLevel level;
    if (c.level == "auto")
        level = classify(pair.q).is_recording ? StablePairLevel::word : StablePairLevel::array;
    else
        level = parse_level(c.level);
    if (level == StablePairLevel::word)
        print_word(out, rsk_inverse_word(pair, mode), f);
    else if (level == StablePairLevel::array)
        print_array(out, rsk_inverse_array(pair, mode), f);
    else
        throw invalid_input("unrsk works at word or array level");
    return kOk;
}

int cmd_count(const Config& c, std::ostream& out)
{
    const Mode mode = parse_mode(c.mode);
    const auto m = parse_uint_list(source(c), true);
    const std::string method = c.method.empty() ? "closed" : c.method;
    Count value;
    if (method == "closed")
        value = mode == Mode::lps ? count_lps(m) : count_rps(m);
    else if (method == "recursive")
        value = mode == Mode::lps ? count_lps_rec(m) : count_rps_rec(m);
    else if (method == "oracle")
        value = count_tableaux_bruteforce(m, mode);
    else
        throw invalid_input("count --method is closed, recursive or oracle");
    out << value.get_str() << '\n';
    return kOk;
}

int cmd_bell(const Config& c, std::ostream& out)
{
    const std::string method = c.method.empty() ? "rowsum" : c.method;
    Count value;
    if (method == "rowsum")
        value = bell_rowsum(c.n);
    else if (method == "hook")
        value = bell_hook(c.n);
    else if (method == "oracle")
        value = set_partitions(c.n);
    else
        throw invalid_input("bell --method is rowsum, hook or oracle");
    out << value.get_str() << '\n';
    return kOk;
}

int cmd_hook(const Config& c, std::ostream& out, bool fiber)
{
    const auto shape = parse_uint_list(c.shape);
    out << (fiber ? fiber_size(c.n, shape) : hook_count(c.n, shape)).get_str() << '\n';
    return kOk;
}

int cmd_stirling(const Config& c, std::ostream& out)
{
    out << stirling2(c.n, c.k).get_str() << '\n';
    return kOk;
}

int cmd_project(const Config& c, std::ostream& out)
{
    print_tableau(out, ps_project(parse_tableau(source(c))), parse_format(c.format));
    return kOk;
}

int cmd_verify(const Config& c, std::ostream& out)
{
    const VerificationReport report = verify_suite(c.verify);
    if (c.json)
        out << to_json(report).dump(2) << '\n';
    else
        out << to_text(report);
    return report.passed() ? kOk : kVerifyFailed;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Patience sorting tableaux: insertion, stable pairs, and counting", "pstab"};
    app.require_subcommand(1);
    Config c;
    const auto modes = CLI::IsMember({"lps", "rps", "l", "r"});
    const auto formats = CLI::IsMember({"ascii", "json", "latex"});

    auto* insert = app.add_subcommand("insert", "Insert a word; prints P and Q");
    insert->add_option("--mode", c.mode, "lps or rps")->required()->check(modes);
    insert->add_option("--format", c.format)->check(formats);
    insert->add_option("--input", c.input_file, "Read the word from a file");
    insert->add_option("word", c.text, "Symbols separated by spaces or commas");

    auto* rsk_cmd = app.add_subcommand("rsk", "Insert a word or a two-rowed array");
    rsk_cmd->add_option("--mode", c.mode)->required()->check(modes);
    rsk_cmd->add_option("--format", c.format)->check(formats);
    rsk_cmd->add_option("--word", c.word);
    rsk_cmd->add_option("--array", c.array, "'u1 ... uk / v1 ... vk' or JSON");
    rsk_cmd->add_option("--input", c.input_file);

    auto* unrsk = app.add_subcommand("unrsk", "Recover the word or array of a stable pair");
    unrsk->add_option("--mode", c.mode)->required()->check(modes);
    unrsk->add_option("--format", c.format)->check(formats);
    unrsk->add_option("--pair", c.pair, "JSON {\"p\": ..., \"q\": ...}");
    unrsk->add_option("--p", c.p, "JSON columns of P");
    unrsk->add_option("--q", c.q, "JSON columns of Q");
    unrsk->add_option("--level", c.level, "auto, word or array")
        ->check(CLI::IsMember({"auto", "word", "array"}));
    unrsk->add_option("--input", c.input_file, "Read the pair JSON from a file");

    auto* count = app.add_subcommand("count", "Number of PS tableaux with a given evaluation");
    count->add_option("--mode", c.mode)->required()->check(modes);
    count->add_option("--method", c.method, "closed, recursive or oracle");
    count->add_option("--input", c.input_file);
    count->add_option("evaluation", c.text, "e.g. 2,1,2");

    auto* bell = app.add_subcommand("bell", "Bell number");
    bell->add_option("n", c.n)->required()->check(CLI::Range(1u, 2000u));
    bell->add_option("--method", c.method, "rowsum, hook or oracle");

    auto* hook = app.add_subcommand("hook", "Standard PS tableaux of a shape");
    hook->add_option("--n", c.n)->required();
    hook->add_option("--shape", c.shape)->required();

    auto* fiber = app.add_subcommand("fiber", "Fiber size of the projection onto a shape");
    fiber->add_option("--n", c.n)->required();
    fiber->add_option("--shape", c.shape)->required();

    auto* stirling = app.add_subcommand("stirling", "Stirling number of the second kind");
    stirling->add_option("n", c.n)->required();
    stirling->add_option("k", c.k)->required();

    auto* project = app.add_subcommand("project", "Project a pre-tableau onto a standard PS tableau");
    project->add_option("--format", c.format)->check(formats);
    project->add_option("--input", c.input_file);
    project->add_option("tableau", c.text, "JSON columns, bottom to top");

    auto* verify = app.add_subcommand("verify", "Check every formula against brute force");
    verify->add_option("--max-n", c.verify.max_n);
    verify->add_option("--jobs", c.verify.jobs)->check(CLI::PositiveNumber);
    verify->add_flag("--json", c.json);
    verify->add_flag("--inject-failure", c.verify.inject_failure, "Add a failing case");
    Budgets& b = c.verify.budgets;
    verify->add_option("--count-total", b.count_total);
    verify->add_option("--count-symbols", b.count_symbols);
    verify->add_option("--bell-n", b.bell_n);
    verify->add_option("--pstab-n", b.pstab_n);
    verify->add_option("--fiber-n", b.fiber_n);
    verify->add_option("--bijection-n", b.bijection_n);
    verify->add_option("--image-n", b.image_n);
    verify->add_option("--word-length", b.word_length);
    verify->add_option("--array-length", b.array_length);
    verify->add_option("--law-length", b.law_length);
    verify->add_option("--formula-n", b.formula_n);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (insert->parsed())
            return cmd_insert(c, out);
        if (rsk_cmd->parsed())
            return cmd_rsk(c, out);
        if (unrsk->parsed())
            return cmd_unrsk(c, out);
        if (count->parsed())
            return cmd_count(c, out);
        if (bell->parsed())
            return cmd_bell(c, out);
        if (hook->parsed())
            return cmd_hook(c, out, false);
        if (fiber->parsed())
            return cmd_hook(c, out, true);
        if (stirling->parsed())
            return cmd_stirling(c, out);
        if (project->parsed())
            return cmd_project(c, out);
        if (verify->parsed())
            return cmd_verify(c, out);
    } catch (const not_in_stable_set& e) {
        err << "error: not in stable pairs set: " << e.what() << '\n';
        return kNotStable;
    } catch (const invalid_input& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const budget_exceeded& e) {
        err << "error: over budget: " << e.what() << '\n';
        return kUsage;
    } catch (const internal_error& e) {
        err << "internal error: " << e.what() << '\n';
        return kVerifyFailed;
    }
    return kUsage;
}

} // namespace pstab::cli
