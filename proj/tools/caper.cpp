// caper - persistent homology of exactly-filtered chain complexes over a
// field, equivariant persistence for cyclic group actions, and capacity
// invariants of relative persistence modules.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "caper/caper.hpp"

namespace {

using namespace caper;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;  // input fails validation or parsing
constexpr int kExitUsage = 2;    // bad flags or parameters

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << content;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

FieldSpec parse_field_flag(const std::string& flag) {
    if (flag == "rational" || flag == "q" || flag == "Q") return FieldSpec::rational();
    try {
        return FieldSpec::prime(std::stoull(flag));
    } catch (const BadParameter&) {
        throw;
    } catch (const std::exception&) {
        throw BadParameter("--field expects a prime or 'rational', got '" + flag + "'");
    }
}

/// Field named by the flag when present, else by the complex file.
FieldSpec resolve_field(const json& complex_json, const std::string& field_flag) {
    if (!field_flag.empty()) return parse_field_flag(field_flag);
    return complex_field(complex_json);
}

template <Field F>
FilteredComplex<F> load_validated_complex(const F& field, const json& j) {
    auto complex = complex_from_json(field, j);
    auto report = validate(complex);
    if (!report.ok()) throw ParseError("complex fails validation:\n" + report.str());
    return complex;
}

template <Field F>
GroupAction<F> load_validated_action(const F& field, const FilteredComplex<F>& complex, const json& j,
                                     std::uint64_t k_flag) {
    auto action = action_from_json(field, j);
    if (k_flag != 0 && k_flag != action.k) {
        throw BadParameter("--k " + std::to_string(k_flag) + " contradicts the action file (k = " +
                           std::to_string(action.k) + ")");
    }
    auto report = validate_action(complex, action);
    if (!report.ok()) throw ParseError("action fails validation:\n" + report.str());
    return action;
}

template <Field F>
SurrogateSpec<F> load_kills(const F& field, const std::vector<std::string>& kill_paths) {
    SurrogateSpec<F> spec;
    for (const auto& path : kill_paths) spec.kill.push_back(class_from_json(field, load_json_file(path)));
    return spec;
}

std::string capacity_text(const Extended& value, bool bracket) {
    if (bracket && value.finite()) return strict_bracket(value).str();
    return value.str();
}

struct Options {
    std::string complex_path, action_path, class_path, out_path, action_out_path;
    std::string field_flag, kind = "diagram", a, b;
    std::vector<std::string> kill_paths;
    std::string csv1, csv2, fixture_name, input_path;
    std::uint64_t k = 0, m = 1;
    int degree = 0, cap = 0;
    bool bracket = false;
};

int run(int argc, char** argv) {
    CLI::App app{"persistent homology over exact fields, with cyclic-group equivariance and capacities"};
    app.require_subcommand(1);
    Options opt;

    auto* validate_cmd = app.add_subcommand("validate", "check a complex (and optionally an action)");
    validate_cmd->add_option("complex", opt.complex_path, "complex JSON")->required();
    validate_cmd->add_option("--action", opt.action_path, "action JSON to validate against the complex");
    validate_cmd->add_option("--field", opt.field_flag, "field override: prime q or 'rational'");

    auto* persist_cmd = app.add_subcommand("persist", "persistence diagram as CSV");
    persist_cmd->add_option("complex", opt.complex_path)->required();
    persist_cmd->add_option("--field", opt.field_flag);
    persist_cmd->add_option("--out", opt.out_path);

    auto* window_cmd = app.add_subcommand("window", "dimension of H_p of an action window (a, b]");
    window_cmd->add_option("complex", opt.complex_path)->required();
    window_cmd->add_option("--a", opt.a, "lower endpoint (exclusive; -inf allowed)")->required();
    window_cmd->add_option("--b", opt.b, "upper endpoint (inclusive; inf allowed)")->required();
    window_cmd->add_option("--degree", opt.degree)->required();
    window_cmd->add_option("--field", opt.field_flag);

    auto* rho_cmd = app.add_subcommand("class-rho", "persistence of a homology class at its level");
    rho_cmd->add_option("complex", opt.complex_path)->required();
    rho_cmd->add_option("class", opt.class_path, "class JSON")->required();
    rho_cmd->add_option("--field", opt.field_flag);

    auto* capacity_cmd = app.add_subcommand("capacity", "persistence of a class image at threshold 0");
    capacity_cmd->add_option("complex", opt.complex_path)->required();
    capacity_cmd->add_option("class", opt.class_path)->required();
    capacity_cmd->add_option("--degree", opt.degree)->required();
    capacity_cmd->add_option("--kill", opt.kill_paths, "class JSON quotiented out at threshold 0");
    capacity_cmd->add_option("--field", opt.field_flag);
    capacity_cmd->add_flag("--bracket", opt.bracket, "print the largest integer strictly below the value");

    auto* equiv_persist_cmd = app.add_subcommand("equiv-persist", "equivariant persistence diagram as CSV");
    equiv_persist_cmd->add_option("complex", opt.complex_path)->required();
    equiv_persist_cmd->add_option("action", opt.action_path)->required();
    equiv_persist_cmd->add_option("--cap", opt.cap, "resolution cap")->required();
    equiv_persist_cmd->add_option("--k", opt.k, "cross-check against the action file");
    equiv_persist_cmd->add_option("--field", opt.field_flag);
    equiv_persist_cmd->add_option("--out", opt.out_path);

    auto* equiv_capacity_cmd = app.add_subcommand("equiv-capacity", "capacity of the surviving generator");
    equiv_capacity_cmd->add_option("complex", opt.complex_path)->required();
    equiv_capacity_cmd->add_option("action", opt.action_path)->required();
    equiv_capacity_cmd->add_option("--degree", opt.degree)->required();
    equiv_capacity_cmd->add_option("--cap", opt.cap)->required();
    equiv_capacity_cmd->add_option("--kill", opt.kill_paths, "Borel class JSON (cell ids 'i:cell')");
    equiv_capacity_cmd->add_option("--k", opt.k);
    equiv_capacity_cmd->add_option("--field", opt.field_flag);
    equiv_capacity_cmd->add_flag("--bracket", opt.bracket);

    auto* bottleneck_cmd = app.add_subcommand("bottleneck", "bottleneck distance between two diagram CSVs");
    bottleneck_cmd->add_option("csv1", opt.csv1)->required();
    bottleneck_cmd->add_option("csv2", opt.csv2)->required();
    bottleneck_cmd->add_option("--degree", opt.degree)->required();

    auto* fixture_cmd = app.add_subcommand("fixture", "emit a canonical symmetric fixture");
    fixture_cmd->add_option("name", opt.fixture_name, "point | polygon-circle | bipyramid-sphere")->required();
    fixture_cmd->add_option("--k", opt.k, "rotation order")->required();
    fixture_cmd->add_option("--m", opt.m, "polygon-circle vertices per orbit");
    fixture_cmd->add_option("--field", opt.field_flag);
    fixture_cmd->add_option("--out", opt.out_path);
    fixture_cmd->add_option("--action-out", opt.action_out_path);

    auto* sublevel_cmd = app.add_subcommand("sublevel", "build a lower-star filtration from sampled values");
    sublevel_cmd->add_option("input", opt.input_path, "grid JSON (2D array) or vertex-function JSON")->required();
    sublevel_cmd->add_option("--field", opt.field_flag);
    sublevel_cmd->add_option("--out", opt.out_path);

    auto* plot_cmd = app.add_subcommand("plot", "render a diagram CSV as SVG");
    plot_cmd->add_option("csv", opt.csv1)->required();
    plot_cmd->add_option("--kind", opt.kind, "diagram | barcode");
    plot_cmd->add_option("--out", opt.out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (validate_cmd->parsed()) {
        json cj = load_json_file(opt.complex_path);
        return with_field(resolve_field(cj, opt.field_flag), [&](auto field) {
            auto complex = complex_from_json(field, cj);
            auto report = validate(complex);
            if (!report.ok()) {
                std::cerr << report.str();
                return kExitInvalid;
            }
            if (!opt.action_path.empty()) {
                auto action = action_from_json(field, load_json_file(opt.action_path));
                auto areport = validate_action(complex, action);
                if (!areport.ok()) {
                    std::cerr << areport.str();
                    return kExitInvalid;
                }
            }
            std::cout << "OK\n";
            return kExitOk;
        });
    }

    if (persist_cmd->parsed()) {
        json cj = load_json_file(opt.complex_path);
        return with_field(resolve_field(cj, opt.field_flag), [&](auto field) {
            auto complex = load_validated_complex(field, cj);
            write_output(opt.out_path, diagram_to_csv(diagram(reduce(complex), complex)));
            return kExitOk;
        });
    }

    if (window_cmd->parsed()) {
        json cj = load_json_file(opt.complex_path);
        Extended a = Extended::parse(opt.a), b = Extended::parse(opt.b);
        if (!(a < b)) throw InvalidWindow(a.str() + " >= " + b.str());
        return with_field(resolve_field(cj, opt.field_flag), [&](auto field) {
            auto complex = load_validated_complex(field, cj);
            std::cout << windowed_homology(complex, a, b, opt.degree) << "\n";
            return kExitOk;
        });
    }

    if (rho_cmd->parsed()) {
        json cj = load_json_file(opt.complex_path);
        return with_field(resolve_field(cj, opt.field_flag), [&](auto field) {
            auto complex = load_validated_complex(field, cj);
            auto cls = class_from_json(field, load_json_file(opt.class_path));
            std::cout << class_persistence(reduce(complex), complex, cls).str() << "\n";
            return kExitOk;
        });
    }

    if (capacity_cmd->parsed()) {
        json cj = load_json_file(opt.complex_path);
        return with_field(resolve_field(cj, opt.field_flag), [&](auto field) {
            auto complex = load_validated_complex(field, cj);
            auto cls = class_from_json(field, load_json_file(opt.class_path));
            auto spec = load_kills(field, opt.kill_paths);
            try {
                std::cout << capacity_text(capacity(complex, cls, opt.degree, spec), opt.bracket) << "\n";
            } catch (const DeadAtZero&) {
                std::cout << "dead-at-zero\n";
            }
            return kExitOk;
        });
    }

    if (equiv_persist_cmd->parsed()) {
        json cj = load_json_file(opt.complex_path);
        json aj = load_json_file(opt.action_path);
        return with_field(resolve_field(cj, opt.field_flag), [&](auto field) {
            auto complex = load_validated_complex(field, cj);
            auto action = load_validated_action(field, complex, aj, opt.k);
            write_output(opt.out_path, diagram_to_csv(equivariant_persist(complex, action, opt.cap)));
            return kExitOk;
        });
    }

    if (equiv_capacity_cmd->parsed()) {
        json cj = load_json_file(opt.complex_path);
        json aj = load_json_file(opt.action_path);
        return with_field(resolve_field(cj, opt.field_flag), [&](auto field) {
            auto complex = load_validated_complex(field, cj);
            auto action = load_validated_action(field, complex, aj, opt.k);
            auto spec = load_kills(field, opt.kill_paths);
            try {
                std::cout << capacity_text(equivariant_capacity(complex, action, opt.degree, spec, opt.cap),
                                           opt.bracket)
                          << "\n";
            } catch (const DeadAtZero&) {
                std::cout << "dead-at-zero\n";
            }
            return kExitOk;
        });
    }

    if (bottleneck_cmd->parsed()) {
        auto dgm1 = diagram_from_csv(read_file(opt.csv1));
        auto dgm2 = diagram_from_csv(read_file(opt.csv2));
        std::cout << bottleneck(dgm1, dgm2, opt.degree).str() << "\n";
        return kExitOk;
    }

    if (fixture_cmd->parsed()) {
        FieldSpec spec = opt.field_flag.empty() ? FieldSpec::prime(2) : parse_field_flag(opt.field_flag);
        return with_field(spec, [&](auto field) {
            auto fixture = symmetric_fixture(field, opt.fixture_name, opt.k, opt.m);
            write_output(opt.out_path, complex_to_json(fixture.complex).dump(2) + "\n");
            if (!opt.action_out_path.empty()) {
                write_output(opt.action_out_path, action_to_json(field, fixture.action).dump(2) + "\n");
            }
            return kExitOk;
        });
    }

    if (sublevel_cmd->parsed()) {
        json input = load_json_file(opt.input_path);
        if (input.is_array()) {
            FieldSpec spec = opt.field_flag.empty() ? FieldSpec::prime(2) : parse_field_flag(opt.field_flag);
            return with_field(spec, [&](auto field) {
                write_output(opt.out_path, complex_to_json(grid_sublevel(field, grid_from_json(input))).dump(2) + "\n");
                return kExitOk;
            });
        }
        FieldSpec spec = opt.field_flag.empty() ? complex_field(detail::require(input, "complex", "vertex function"))
                                                : parse_field_flag(opt.field_flag);
        return with_field(spec, [&](auto field) {
            auto vf = vertex_function_from_json(field, input);
            write_output(opt.out_path, complex_to_json(lower_star(vf)).dump(2) + "\n");
            return kExitOk;
        });
    }

    if (plot_cmd->parsed()) {
        auto dgm = diagram_from_csv(read_file(opt.csv1));
        if (opt.kind == "diagram") {
            write_output(opt.out_path, plot_diagram_svg(dgm));
        } else if (opt.kind == "barcode") {
            write_output(opt.out_path, plot_barcode_svg(dgm));
        } else {
            throw BadParameter("--kind must be 'diagram' or 'barcode'");
        }
        return kExitOk;
    }

    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const BadParameter& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const InvalidWindow& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const CapTooSmall& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const Unbounded& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const AmbiguousGenerator& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        // parse failures, invalid complexes, classes that are not cycles
        std::cerr << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
}
