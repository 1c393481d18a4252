#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "opetope/coding.hpp"
#include "opetope/counting.hpp"
#include "opetope/errors.hpp"
#include "opetope/named_set.hpp"
#include "opetope/textio.hpp"
#include "opetope/unnamed.hpp"

namespace {

using namespace opetope;
using nlohmann::json;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool is_script(const std::string& text) {
    std::size_t i = text.find_first_not_of(" \t\r\n");
    return i != std::string::npos && text.compare(i, 8, "#dialect") == 0;
}

bool is_ocmt_literal(const std::string& text) {
    std::size_t i = text.find_first_not_of(" \t\r\n");
    return i != std::string::npos && text.compare(i, 4, "ocmt") == 0;
}

/// Reads a preopetope from a file holding either a preopetope document or a
/// derivation script whose value codes one.
Preopetope load_preopetope(const std::string& path) {
    std::string text = slurp(path);
    if (!is_script(text)) return textio::parse_preopetope(text);
    textio::ScriptResult r = textio::run_script(text);
    if (const auto* u = std::get_if<UnnamedSequent>(&r.value)) return u->source;
    if (const auto* n = std::get_if<NamedSequent>(&r.value)) return to_preopetope(*n);
    throw ParseError("the script in " + path + " does not produce a single cell");
}

int cmd_check(const std::vector<std::string>& files, const std::string& format) {
    json report = json::array();
    bool all_ok = true;
    std::exception_ptr first_error;
    for (const std::string& path : files) {
        json entry;
        entry["file"] = path;
        try {
            std::string text = slurp(path);
            if (is_ocmt_literal(text)) {
                OpetopicSet o = textio::parse_ocmt(text);
                Complex c = os_materialize(o);
                if (!c.ok()) throw RuleError(c.violations.front());
                entry["kind"] = "ocmt";
            } else if (is_script(text)) {
                textio::ScriptResult r = textio::run_script(text);
                entry["kind"] = r.dialect;
                if (const auto* n = std::get_if<NamedSequent>(&r.value)) {
                    if (!sequent_sources_consistent(*n))
                        throw RuleError("inconsistent source assignments");
                }
            } else {
                Preopetope p = textio::parse_preopetope(text);
                std::string why;
                if (!is_opetope(p, &why)) throw RuleError(why);
                entry["kind"] = "opetope";
            }
            entry["ok"] = true;
        } catch (const std::exception& e) {
            entry["ok"] = false;
            entry["error"] = e.what();
            all_ok = false;
            if (!first_error) first_error = std::current_exception();
        }
        report.push_back(std::move(entry));
    }
    if (format == "json") {
        std::cout << report.dump(2) << "\n";
    } else {
        for (const json& entry : report) {
            std::cout << entry["file"].get<std::string>() << ": "
                      << (entry["ok"].get<bool>() ? "ok" : "FAIL " + entry["error"].get<std::string>())
                      << "\n";
        }
    }
    if (all_ok) return 0;
    try {
        std::rethrow_exception(first_error);
    } catch (const ParseError&) {
        return 2;
    } catch (...) {
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verification kernel for opetopes and opetopic sets"};
    app.require_subcommand(1);

    std::vector<std::string> check_files;
    std::string check_format = "text";
    int jobs = 1;
    auto* check = app.add_subcommand("check", "Validate files (scripts, preopetopes, OCMTs)");
    check->add_option("files", check_files, "input files")->required();
    check->add_option("--jobs", jobs, "worker count (accepted for compatibility)");
    check->add_option("--format", check_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    std::string decide_file;
    bool explain = false;
    auto* decide = app.add_subcommand("decide", "Decide whether a preopetope is an opetope");
    decide->add_option("file", decide_file)->required();
    decide->add_flag("--explain", explain, "print the failing deconstruction step");

    std::string target_file;
    auto* target = app.add_subcommand("target", "Print the target of an opetope");
    target->add_option("file", target_file)->required();

    std::string count_file;
    bool use_oracle = false;
    auto* count_cmd = app.add_subcommand("count", "Count the faces of an opetope");
    count_cmd->add_option("file", count_file)->required();
    count_cmd->add_flag("--oracle", use_oracle, "count via the opetopic-set construction");

    std::string convert_file, convert_to;
    bool verify = false;
    auto* convert = app.add_subcommand("convert", "Translate between the named and unnamed syntax");
    convert->add_option("file", convert_file)->required();
    convert->add_option("--to", convert_to, "named|unnamed")
        ->required()
        ->check(CLI::IsMember({"named", "unnamed"}));
    convert->add_flag("--verify", verify, "check that the translation round-trips");

    std::string mat_file, mat_format = "json";
    auto* mat = app.add_subcommand("materialize", "List the cells of an opetopic set");
    mat->add_option("file", mat_file)->required();
    mat->add_option("--format", mat_format, "text|json")->check(CLI::IsMember({"text", "json"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return cmd_check(check_files, check_format);

        if (decide->parsed()) {
            Preopetope p = load_preopetope(decide_file);
            std::string why;
            if (is_opetope(p, &why)) {
                std::cout << "opetope\n";
                return 0;
            }
            std::cout << "not an opetope\n";
            if (explain) std::cerr << why << "\n";
            return 1;
        }

        if (target->parsed()) {
            Preopetope p = load_preopetope(target_file);
            auto [t, ctx] = target_of(p);
            std::cout << t.str() << "\n";
            return 0;
        }

        if (count_cmd->parsed()) {
            Preopetope p = load_preopetope(count_file);
            std::cout << (use_oracle ? count_oracle(p) : count(p)) << "\n";
            return 0;
        }

        if (convert->parsed()) {
            std::string text = slurp(convert_file);
            if (convert_to == "named") {
                Preopetope p;
                if (is_script(text)) {
                    textio::ScriptResult r = textio::run_script(text);
                    const auto* u = std::get_if<UnnamedSequent>(&r.value);
                    if (!u) throw ParseError("expected an unnamed derivation or a preopetope");
                    p = u->source;
                } else {
                    p = textio::parse_preopetope(text);
                }
                NamedSequent s = to_named(p);
                if (verify && to_preopetope(s) != p)
                    throw RuleError("round-trip check failed");
                std::cout << textio::to_json(s).dump(2) << "\n";
            } else {
                if (!is_script(text)) throw ParseError("expected a named derivation script");
                textio::ScriptResult r = textio::run_script(text);
                const auto* n = std::get_if<NamedSequent>(&r.value);
                if (!n) throw ParseError("expected a named derivation script");
                Preopetope p = to_preopetope(*n);
                if (verify) {
                    std::string why;
                    if (!is_opetope(p, &why)) throw RuleError(why);
                }
                std::cout << p.str() << "\n";
            }
            return 0;
        }

        if (mat->parsed()) {
            std::string text = slurp(mat_file);
            json out;
            std::vector<std::string> violations;
            if (is_ocmt_literal(text)) {
                Complex c = os_materialize(textio::parse_ocmt(text));
                violations = c.violations;
                out = textio::to_json(c);
            } else {
                textio::ScriptResult r = textio::run_script(text);
                if (const auto* o = std::get_if<OpetopicSet>(&r.value)) {
                    Complex c = os_materialize(*o);
                    violations = c.violations;
                    out = textio::to_json(c);
                } else if (const auto* u = std::get_if<UContext>(&r.value)) {
                    violations = u_verify(*u);
                    out = textio::to_json(*u);
                    out["violations"] = violations;
                } else {
                    throw ParseError("expected an opetopic-set script or OCMT literal");
                }
            }
            if (mat_format == "json") {
                std::cout << out.dump(2) << "\n";
            } else {
                for (const json& cell : out["cells"]) {
                    std::cout << cell["dim"].get<int>() << " " << cell["shape"].get<std::string>();
                    if (cell.contains("members")) {
                        std::cout << " {";
                        bool first = true;
                        for (const json& m : cell["members"]) {
                            std::cout << (first ? "" : ", ") << m.get<std::string>();
                            first = false;
                        }
                        std::cout << "}";
                    } else {
                        std::cout << " " << cell["name"].get<std::string>();
                    }
                    std::cout << "\n";
                }
                for (const std::string& v : violations) std::cout << "violation: " << v << "\n";
            }
            return violations.empty() ? 0 : 1;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const RuleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
