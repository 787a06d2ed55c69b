#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "typea/report.hpp"

using namespace typea;

namespace {

// "-3..0", or a single integer d for the window of depth d ending at 0
ShiftWindow parse_window(const std::string& s) {
    auto pos = s.find("..");
    try {
        if (pos == std::string::npos) {
            int v = std::stoi(s);
            return ShiftWindow{-std::abs(v), 0};
        }
        int lo = std::stoi(s.substr(0, pos));
        int hi = std::stoi(s.substr(pos + 2));
        if (lo > hi) std::swap(lo, hi);
        return {lo, hi};
    } catch (const std::exception&) {
        throw CLI::ValidationError("window", "expected an integer or lo..hi: " + s);
    }
}

// literal JSON or @file
json parse_json_arg(const std::string& s) {
    if (!s.empty() && s[0] == '@') {
        std::ifstream in(s.substr(1));
        if (!in.good()) throw std::invalid_argument("cannot read " + s.substr(1));
        return json::parse(in);
    }
    return json::parse(s);
}

void emit_rows(const std::vector<json>& rows, const std::string& format,
               const std::vector<std::string>& columns) {
    if (format == "json") {
        for (const json& r : rows) std::cout << r.dump() << "\n";
        return;
    }
    if (format == "csv") {
        auto cell = [](const json& v) {
            std::string s = v.is_string() ? v.get<std::string>() : v.dump();
            if (s.find_first_of(",\"") == std::string::npos) return s;
            std::string quoted = "\"";
            for (char c : s) {
                if (c == '"') quoted += '"';
                quoted += c;
            }
            return quoted + "\"";
        };
        for (size_t i = 0; i < columns.size(); ++i)
            std::cout << columns[i] << (i + 1 < columns.size() ? "," : "\n");
        for (const json& r : rows) {
            for (size_t i = 0; i < columns.size(); ++i)
                std::cout << cell(r.at(columns[i]))
                          << (i + 1 < columns.size() ? "," : "\n");
        }
        return;
    }
    if (format == "md") {
        std::cout << "|";
        for (const std::string& c : columns) std::cout << " " << c << " |";
        std::cout << "\n|";
        for (size_t i = 0; i < columns.size(); ++i) std::cout << "---|";
        std::cout << "\n";
        for (const json& r : rows) {
            std::cout << "|";
            for (const std::string& c : columns) {
                const json& v = r.at(c);
                std::cout << " " << (v.is_string() ? v.get<std::string>() : v.dump())
                          << " |";
            }
            std::cout << "\n";
        }
        return;
    }
    throw CLI::ValidationError("format", "expected json, csv or md");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact t-structure engine for bounded derived categories of "
                 "linearly oriented type-A path algebras"};
    app.require_subcommand(1);

    std::string window_flag = "-3..0";
    std::string format = "json";
    int n = 2, r = 1, blocks = 2;
    unsigned seed = 20250809;
    int cap = 4;

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "enumerate collections, "
                                                      "t-structures or semisimple tables");
    std::string kind;
    enumerate->add_option("kind", kind, "smc | tstructures | semisimple")->required();
    enumerate->add_option("--n", n, "rank of the algebra");
    enumerate->add_option("--blocks", blocks, "semisimple block count");
    enumerate->add_option("--window", window_flag, "shift window, e.g. -3..0");
    enumerate->add_option("--format", format, "json | csv | md");
    enumerate->add_option("--cap", cap, "largest allowed rank");

    // classify-a2
    auto* classify = app.add_subcommand("classify-a2", "classify every A_2 aisle in the "
                                                       "window into the eight types");
    classify->add_option("--window", window_flag, "shift window");
    classify->add_option("--format", format, "json | csv | md");

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite = "all";
    std::string golden_dir;
    verify->add_option("--suite", suite, "one of the named suites or 'all'");
    verify->add_option("--n", n, "rank cap for the sweeps");
    verify->add_option("--window", window_flag, "shift window");
    verify->add_option("--seed", seed, "seed for the sampled sweeps");
    verify->add_option("--golden", golden_dir, "directory of golden files");
    verify->add_option("--format", format, "json | md");

    // thin wrappers
    auto* induce_cmd = app.add_subcommand("induce", "BBD induction along R_r");
    std::string corner_flag = "0", quotient_flag = "{\"tails\":[],\"extras\":[]}";
    induce_cmd->add_option("--n", n)->required();
    induce_cmd->add_option("--r", r)->required();
    induce_cmd->add_option("--corner", corner_flag, "extended integer");
    induce_cmd->add_option("--quotient", quotient_flag, "aisle JSON or @file");

    auto* restrict_cmd = app.add_subcommand("restrict", "BBD restriction along R_r");
    std::string aisle_flag;
    restrict_cmd->add_option("--n", n)->required();
    restrict_cmd->add_option("--r", r)->required();
    restrict_cmd->add_option("--aisle", aisle_flag, "aisle JSON or @file")->required();

    auto* compat_cmd = app.add_subcommand("compatible", "test compatibility with a recollement");
    std::string rec_flag = "{\"kind\":\"idempotent\",\"r\":1}";
    compat_cmd->add_option("--n", n)->required();
    compat_cmd->add_option("--rec", rec_flag, "recollement JSON or @file");
    compat_cmd->add_option("--aisle", aisle_flag, "aisle JSON or @file")->required();

    auto* find_cmd = app.add_subcommand("find-idempotent",
                                        "the constructive compatible idempotent");
    find_cmd->add_option("--n", n)->required();
    find_cmd->add_option("--aisle", aisle_flag, "aisle JSON or @file")->required();

    auto* orbit_cmd = app.add_subcommand("orbit", "autoequivalence carrying one "
                                                  "t-structure to another");
    std::string t1_flag, t2_flag;
    orbit_cmd->add_option("--n", n)->required();
    orbit_cmd->add_option("--t1", t1_flag, "aisle JSON or @file")->required();
    orbit_cmd->add_option("--t2", t2_flag, "aisle JSON or @file")->required();

    auto* golden_cmd = app.add_subcommand("golden", "rewrite the golden files");
    std::string golden_out = "tests/golden";
    golden_cmd->add_option("--dir", golden_out, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        ShiftWindow window = parse_window(window_flag);

        if (*enumerate) {
            if (n > cap) {
                std::cerr << "rank " << n << " exceeds the cap " << cap << "\n";
                return 2;
            }
            std::vector<json> rows;
            std::vector<std::string> columns;
            if (kind == "smc") {
                Algebra a = Algebra::linear(n);
                for (const Smc& s : enumerate_smc(a, window))
                    rows.push_back(json{{"objects", to_json(s)}});
                columns = {"objects"};
            } else if (kind == "tstructures") {
                Algebra a = Algebra::linear(n);
                for (const Aisle& aisle : enumerate_bounded_aisles(a, window))
                    rows.push_back(json{{"aisle", to_json(aisle)}});
                columns = {"aisle"};
            } else if (kind == "semisimple") {
                for (const Aisle& v : semisimple_tstructures(blocks, window)) {
                    json tails = json::array();
                    for (const ExtInt& t : v.tails) tails.push_back(to_json(t));
                    rows.push_back(json{{"tails", tails}});
                }
                columns = {"tails"};
            } else {
                std::cerr << "unknown kind: " << kind << "\n";
                return 2;
            }
            emit_rows(rows, format, columns);
            return 0;
        }

        if (*classify) {
            std::vector<json> rows;
            bool all_typed = true;
            for (const A2Row& row : classify_a2(window)) {
                rows.push_back(json{{"aisle", to_json(row.aisle)},
                                    {"type", row.type},
                                    {"r1", row.r1},
                                    {"r2", row.r2}});
                all_typed = all_typed && row.type != 0;
            }
            emit_rows(rows, format, {"aisle", "type", "r1", "r2"});
            return all_typed ? 0 : 1;
        }

        if (*verify) {
            SuiteParams params;
            params.n = n;
            params.window = window;
            params.seed = seed;
            params.golden_dir = golden_dir;
            Report rep = run_suite(suite, params);
            if (format == "md") std::cout << report_to_markdown(rep);
            else std::cout << report_to_json(rep).dump(2) << "\n";
            return rep.ok() ? 0 : 1;
        }

        Algebra a = Algebra::linear(n);
        if (*induce_cmd) {
            Recollement rec = make_idempotent_recollement(a, r);
            FactorTStructure f{ext_int_from_json(parse_json_arg(corner_flag)),
                               aisle_from_json(parse_json_arg(quotient_flag))};
            std::cout << to_json(induce(rec, f).aisle).dump() << "\n";
            return 0;
        }
        if (*restrict_cmd) {
            Recollement rec = make_idempotent_recollement(a, r);
            TStructure t{aisle_from_json(parse_json_arg(aisle_flag))};
            std::cout << to_json(restrict_t(rec, t)).dump() << "\n";
            return 0;
        }
        if (*compat_cmd) {
            Recollement rec = recollement_from_json(a, parse_json_arg(rec_flag));
            TStructure t{aisle_from_json(parse_json_arg(aisle_flag))};
            std::cout << json{{"compatible", is_compatible(rec, t)}}.dump() << "\n";
            return 0;
        }
        if (*find_cmd) {
            TStructure t{aisle_from_json(parse_json_arg(aisle_flag))};
            IdempotentChoice c = find_compatible_idempotent(a, t);
            std::cout << json{{"r", c.r}, {"case", c.case_tag}}.dump() << "\n";
            return 0;
        }
        if (*orbit_cmd) {
            TStructure t1{aisle_from_json(parse_json_arg(t1_flag))};
            TStructure t2{aisle_from_json(parse_json_arg(t2_flag))};
            auto phi = orbit_equivalent(a, t1, t2);
            if (phi) std::cout << to_json(*phi).dump() << "\n";
            else std::cout << json(nullptr).dump() << "\n";
            return 0;
        }
        if (*golden_cmd) {
            write_golden_files(golden_out);
            std::cout << "golden files written to " << golden_out << "\n";
            return 0;
        }
    } catch (const CLI::Error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
