// Command-line front end: single evaluations, weight tables, generating
// function dumps, and verification suites over the exact zeta values at
// negative integers. All numeric output uses the canonical "p/q" rendering.
//
// Exit codes: 0 success, 1 usage error, 2 verification failure.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <mzv/mzv.hpp>

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailed = 2;

struct OutputRecord {
    std::vector<int> args;
    std::string method;
    std::string value;
    std::optional<std::string> poly;
};

std::string join(const std::vector<int>& values, char sep) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0)
            out += sep;
        out += std::to_string(values[i]);
    }
    return out;
}

json record_to_json(const OutputRecord& rec) {
    json j{{"args", rec.args}, {"method", rec.method}, {"value", rec.value}};
    if (rec.poly)
        j["poly"] = *rec.poly;
    return j;
}

void emit_records(const std::vector<OutputRecord>& records, const std::string& format,
                  bool with_poly, bool label_rows) {
    if (format == "json") {
        if (records.size() == 1) {
            std::cout << record_to_json(records.front()).dump() << "\n";
        } else {
            json arr = json::array();
            for (const auto& rec : records)
                arr.push_back(record_to_json(rec));
            std::cout << arr.dump() << "\n";
        }
    } else if (format == "csv") {
        std::cout << "args,method,value" << (with_poly ? ",poly" : "") << "\n";
        for (const auto& rec : records) {
            std::cout << join(rec.args, ';') << ',' << rec.method << ',' << rec.value;
            if (with_poly)
                std::cout << ',' << rec.poly.value_or("");
            std::cout << "\n";
        }
    } else {  // plain
        for (const auto& rec : records) {
            if (label_rows)
                std::cout << join(rec.args, ',') << "  ";
            std::cout << (rec.poly ? *rec.poly : rec.value) << "\n";
        }
    }
}

// All depth-r exponent tuples with weight <= max_weight, graded-lex order.
std::vector<std::vector<int>> tuples_up_to_weight(int depth, int max_weight) {
    std::vector<std::vector<int>> out;
    std::vector<int> current(static_cast<std::size_t>(depth), 0);
    std::function<void(int, int)> fill = [&](int pos, int budget) {
        if (pos == depth - 1) {
            current[static_cast<std::size_t>(pos)] = budget;
            out.push_back(current);
            return;
        }
        for (int v = 0; v <= budget; ++v) {
            current[static_cast<std::size_t>(pos)] = v;
            fill(pos + 1, budget - v);
        }
    };
    for (int w = 0; w <= max_weight; ++w)
        fill(0, w);
    return out;
}

// All depth-r tuples with every entry <= box, graded-lex order.
std::vector<std::vector<int>> tuples_in_box(int depth, int box) {
    std::vector<std::vector<int>> out = tuples_up_to_weight(depth, depth * box);
    out.erase(std::remove_if(out.begin(), out.end(),
                             [&](const std::vector<int>& t) {
                                 return std::any_of(t.begin(), t.end(),
                                                    [&](int v) { return v > box; });
                             }),
              out.end());
    return out;
}

mzv::Rational eval_by_method(const std::string& method, const mzv::ExponentTuple& n,
                             const std::optional<mzv::GenFunResult>& genfun) {
    if (method == "engine")
        return mzv::zeta_neg(n);
    if (method == "recursion")
        return mzv::zeta_depth_recursion(n);
    if (method == "general")
        return mzv::zeta_general_verbatim(n);
    if (method == "reduced")
        return mzv::zeta_general_reduced(n);
    if (method == "example1")
        return mzv::zeta_depth2_triple_sum(n.at(0), n.at(1));
    if (method == "genfun")
        return mzv::zeta_from_genfun(*genfun, n);
    throw std::invalid_argument("unknown method: " + method);
}

// Returns an error message when the method cannot evaluate this shape.
std::optional<std::string> method_shape_error(const std::string& method, int depth,
                                              bool param) {
    if (param && method != "engine" && method != "recursion")
        return "--param requires --method engine or recursion";
    if (method == "general" && depth < 2)
        return "--method general requires depth >= 2";
    if (method == "reduced" && depth < 2)
        return "--method reduced requires depth >= 2";
    if (method == "example1" && depth != 2)
        return "--method example1 requires depth 2";
    return std::nullopt;
}

int run_eval(const std::vector<int>& args, const std::string& method, bool param,
             const std::string& format) {
    if (const auto err = method_shape_error(method, static_cast<int>(args.size()), param)) {
        std::cerr << "error: " << *err << "\n";
        return kExitUsage;
    }
    const mzv::ExponentTuple n(args);
    OutputRecord rec;
    rec.args = args;
    rec.method = method;
    if (param) {
        const mzv::Polynomial p = method == "engine" ? mzv::zeta_neg_param(n)
                                                     : mzv::zeta_depth_recursion_param(n);
        rec.poly = p.to_string();
        rec.value = mzv::to_string(p.eval_at_zero());
    } else {
        std::optional<mzv::GenFunResult> genfun;
        if (method == "genfun")
            genfun = mzv::fr_series(n.depth(), n.weight() + n.depth() - 1);
        rec.value = mzv::to_string(eval_by_method(method, n, genfun));
    }
    emit_records({rec}, format, param, /*label_rows=*/false);
    return kExitOk;
}

int run_table(int depth, int max_weight, const std::string& method,
              const std::string& format) {
    if (const auto err = method_shape_error(method, depth, false)) {
        std::cerr << "error: " << *err << "\n";
        return kExitUsage;
    }
    std::optional<mzv::GenFunResult> genfun;
    if (method == "genfun")
        genfun = mzv::fr_series(depth, max_weight + depth - 1);
    std::vector<OutputRecord> records;
    for (const auto& t : tuples_up_to_weight(depth, max_weight)) {
        const mzv::ExponentTuple n(t);
        records.push_back(OutputRecord{
            t, method, mzv::to_string(eval_by_method(method, n, genfun)), std::nullopt});
    }
    emit_records(records, format, false, /*label_rows=*/true);
    return kExitOk;
}

int run_genfun(int depth, int order) {
    const mzv::GenFunResult g = mzv::fr_series(depth, order + depth - 1);
    std::cout << g.series.to_string() << "\n";
    return kExitOk;
}

int run_bernoulli(int index) {
    std::cout << mzv::to_string(mzv::bernoulli_number(static_cast<std::size_t>(index)))
              << "\n";
    return kExitOk;
}

template <typename Value>
void print_failure(const mzv::IdentityReport<Value>& report) {
    std::cout << "FAIL " << report.name << " (" << report.instance << ")\n";
    if constexpr (std::is_same_v<Value, mzv::Rational>) {
        std::cout << "  lhs = " << mzv::to_string(report.lhs) << "\n";
        std::cout << "  rhs = " << mzv::to_string(report.rhs) << "\n";
    } else {
        std::cout << "  lhs = " << report.lhs.to_string() << "\n";
        std::cout << "  rhs = " << report.rhs.to_string() << "\n";
    }
}

int finish_suite(const std::string& name, int instances, int failures) {
    if (failures == 0) {
        std::cout << name << ": " << instances << " instances, all passed\n";
        return kExitOk;
    }
    std::cout << name << ": " << failures << " of " << instances << " instances FAILED\n";
    return kExitVerifyFailed;
}

int verify_shuffle(int max) {
    int instances = 0;
    int failures = 0;
    for (int n1 = 0; n1 <= max; ++n1) {
        for (int n2 = 0; n2 <= max; ++n2) {
            const auto report = mzv::shuffle_defect(n1, n2);
            ++instances;
            bool ok = report.pass;
            if ((n1 + n2) % 2 == 1 && report.lhs != 0)
                ok = false;  // odd total weight: the combination must vanish
            if (!ok) {
                print_failure(report);
                ++failures;
            }
        }
    }
    return finish_suite("shuffle", instances, failures);
}

int verify_contiguity(std::optional<int> max) {
    const int last_box = max.value_or(4);
    const int first_box = max.value_or(6);
    int instances = 0;
    int failures = 0;
    for (int depth : {2, 3}) {
        for (const auto& t : tuples_in_box(depth, last_box)) {
            const auto report = mzv::check_contiguity_last(mzv::ExponentTuple(t));
            ++instances;
            if (!report.pass) {
                print_failure(report);
                ++failures;
            }
        }
    }
    for (int n1 = 0; n1 <= first_box; ++n1) {
        for (int n2 = 0; n2 <= first_box; ++n2) {
            const auto report = mzv::check_contiguity_first_depth2(n1, n2);
            ++instances;
            if (!report.pass) {
                print_failure(report);
                ++failures;
            }
        }
    }
    std::cout << "note: the last-variable correction term carries sign (-1)^n_r;"
                 " the (-1)^(n1+1) depth-2 normalization quoted elsewhere fails"
                 " already at (0,0) and is treated as a typo\n";
    return finish_suite("contiguity", instances, failures);
}

int verify_closed_forms(int max) {
    using mzv::ClosedFormFamily;
    int instances = 0;
    int failures = 0;
    for (const auto family :
         {ClosedFormFamily::zeta2_n0, ClosedFormFamily::zeta2_0n,
          ClosedFormFamily::zeta3_n00, ClosedFormFamily::zeta3_0n0}) {
        for (int n = 0; n <= max; ++n) {
            const mzv::Rational lhs = mzv::closed_form(family, n);
            const mzv::Rational rhs = mzv::zeta_neg(mzv::closed_form_tuple(family, n));
            ++instances;
            if (lhs != rhs) {
                print_failure(mzv::make_report<mzv::Rational>(
                    mzv::to_string(family), std::to_string(n), lhs, rhs));
                ++failures;
            }
        }
    }
    return finish_suite("closed-forms", instances, failures);
}

int verify_cross(int max) {
    int instances = 0;
    int failures = 0;
    for (int depth : {2, 3}) {
        const mzv::GenFunResult genfun = mzv::fr_series(depth, depth * max + depth - 1);
        for (const auto& t : tuples_in_box(depth, max)) {
            const mzv::ExponentTuple n(t);
            const mzv::Rational engine = mzv::zeta_neg(n);
            const mzv::Rational recursion = mzv::zeta_depth_recursion(n);
            const mzv::Rational general = mzv::zeta_general_verbatim(n);
            const mzv::Rational reduced = mzv::zeta_general_reduced(n);
            const mzv::Rational from_genfun = mzv::zeta_from_genfun(genfun, n);
            ++instances;
            if (engine != recursion || engine != general || engine != reduced ||
                engine != from_genfun) {
                std::cout << "FAIL cross (" << n.to_string() << ")\n"
                          << "  engine    = " << mzv::to_string(engine) << "\n"
                          << "  recursion = " << mzv::to_string(recursion) << "\n"
                          << "  general   = " << mzv::to_string(general) << "\n"
                          << "  reduced   = " << mzv::to_string(reduced) << "\n"
                          << "  genfun    = " << mzv::to_string(from_genfun) << "\n";
                ++failures;
            }
        }
    }
    return finish_suite("cross", instances, failures);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact multiple zeta values at negative integer arguments"};
    app.require_subcommand(1);

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate one zeta value");
    std::vector<int> eval_args;
    std::string eval_method = "engine";
    std::string eval_format = "plain";
    bool eval_param = false;
    eval_cmd->add_option("--n", eval_args, "Exponent magnitudes n1,n2,... (arguments are -n_j)")
        ->required()
        ->delimiter(',')
        ->check(CLI::NonNegativeNumber);
    eval_cmd->add_option("--method", eval_method, "Evaluation route")
        ->check(CLI::IsMember({"engine", "recursion", "general", "reduced", "example1",
                               "genfun"}));
    eval_cmd->add_flag("--param", eval_param, "Return the polynomial in z1..zr");
    eval_cmd->add_option("--format", eval_format, "Output format")
        ->check(CLI::IsMember({"plain", "json", "csv"}));

    // table
    auto* table_cmd = app.add_subcommand("table", "All values up to a weight bound");
    int table_depth = 1;
    int table_weight = 0;
    std::string table_method = "engine";
    std::string table_format = "plain";
    table_cmd->add_option("--depth", table_depth, "Depth r")
        ->required()
        ->check(CLI::PositiveNumber);
    table_cmd->add_option("--max-weight", table_weight, "Largest total weight")
        ->required()
        ->check(CLI::NonNegativeNumber);
    table_cmd->add_option("--method", table_method, "Evaluation route")
        ->check(CLI::IsMember({"engine", "recursion", "general", "reduced", "example1",
                               "genfun"}));
    table_cmd->add_option("--format", table_format, "Output format")
        ->check(CLI::IsMember({"plain", "json", "csv"}));

    // genfun
    auto* genfun_cmd = app.add_subcommand("genfun", "Dump the generating function");
    int genfun_depth = 1;
    int genfun_order = 0;
    genfun_cmd->add_option("--depth", genfun_depth, "Depth r")
        ->required()
        ->check(CLI::PositiveNumber);
    genfun_cmd->add_option("--order", genfun_order, "Certified total degree")
        ->required()
        ->check(CLI::NonNegativeNumber);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Run an identity suite");
    std::string suite;
    std::optional<int> verify_max;
    verify_cmd->add_option("suite", suite, "Suite name")
        ->required()
        ->check(CLI::IsMember({"shuffle", "contiguity", "closed-forms", "cross"}));
    verify_cmd->add_option("--max", verify_max, "Instance bound")
        ->check(CLI::NonNegativeNumber);

    // bernoulli
    auto* bern_cmd = app.add_subcommand("bernoulli", "Print the Bernoulli number B_N");
    int bern_index = 0;
    bern_cmd->add_option("N", bern_index, "Index")
        ->required()
        ->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (eval_cmd->parsed())
            return run_eval(eval_args, eval_method, eval_param, eval_format);
        if (table_cmd->parsed())
            return run_table(table_depth, table_weight, table_method, table_format);
        if (genfun_cmd->parsed())
            return run_genfun(genfun_depth, genfun_order);
        if (bern_cmd->parsed())
            return run_bernoulli(bern_index);
        if (verify_cmd->parsed()) {
            if (suite == "shuffle")
                return verify_shuffle(verify_max.value_or(10));
            if (suite == "contiguity")
                return verify_contiguity(verify_max);
            if (suite == "closed-forms")
                return verify_closed_forms(verify_max.value_or(12));
            return verify_cross(verify_max.value_or(4));
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}
