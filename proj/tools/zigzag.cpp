// Command-line front end: enumeration, exact evaluation, sampling, and
// convergence experiments, as CSV or JSON tables.
//
// Exit codes: 0 success, 2 usage error, 3 input-file error, 4 resource bound.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "zigzag/characters.hpp"
#include "zigzag/composition.hpp"
#include "zigzag/graph.hpp"
#include "zigzag/paintbox.hpp"
#include "zigzag/rational.hpp"
#include "zigzag/sampler.hpp"
#include "zigzag/series.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace zigzag;
using nlohmann::json;

struct ResourceBound : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InputFileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<json>> rows;

    void add_row(std::vector<json> cells) { rows.push_back(std::move(cells)); }
};

std::string csv_cell(const json& cell) {
    if (cell.is_string()) {
        const auto& s = cell.get_ref<const std::string&>();
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string quoted = "\"";
        for (char ch : s) {
            if (ch == '"') quoted += '"';
            quoted += ch;
        }
        quoted += '"';
        return quoted;
    }
    if (cell.is_number_float()) return format_decimal(cell.get<double>());
    return cell.dump();
}

void write_table(const Table& table, const std::string& out_path, const std::string& format) {
    std::ostringstream body;
    if (format == "json") {
        json rows = json::array();
        for (const auto& row : table.rows) {
            json obj = json::object();
            for (std::size_t i = 0; i < table.columns.size(); ++i) obj[table.columns[i]] = row[i];
            rows.push_back(std::move(obj));
        }
        body << rows.dump(2) << '\n';
    } else {
        for (std::size_t i = 0; i < table.columns.size(); ++i)
            body << (i ? "," : "") << table.columns[i];
        body << '\n';
        for (const auto& row : table.rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                body << (i ? "," : "") << csv_cell(row[i]);
            body << '\n';
        }
    }
    if (out_path.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream out(out_path);
        if (!out) throw InputFileError("cannot open output file '" + out_path + "'");
        out << body.str();
    }
}

OrientedPaintbox load_paintbox(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputFileError("cannot open paintbox file '" + path + "'");
    try {
        return parse_paintbox(in);
    } catch (const PaintboxParseError& e) {
        throw InputFileError(path + ": " + e.what());
    }
}

std::vector<int> parse_checkpoints(const std::string& text, int minimum) {
    std::vector<int> out;
    std::istringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        try {
            std::size_t used = 0;
            int value = std::stoi(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            out.push_back(value);
        } catch (const std::exception&) {
            throw CLI::ValidationError("--checkpoints", "'" + token + "' is not an integer");
        }
    }
    if (out.empty()) throw CLI::ValidationError("--checkpoints", "needs at least one value");
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (out[i] < minimum)
            throw CLI::ValidationError("--checkpoints",
                                       "values must be >= " + std::to_string(minimum));
        if (i > 0 && out[i] <= out[i - 1])
            throw CLI::ValidationError("--checkpoints", "values must be strictly increasing");
    }
    return out;
}

Rat parse_rat_flag(const std::string& text, const char* flag) {
    try {
        return parse_rat(text);
    } catch (const std::invalid_argument& e) {
        throw CLI::ValidationError(flag, e.what());
    }
}

json rat_cell(const Rat& r) { return format_rat(r); }

// --- subcommand bodies -----------------------------------------------------

Table run_enumerate(int n) {
    if (n > 16) throw ResourceBound("enumerate supports n <= 16 (2^15 rows)");
    Table t{{"composition", "word", "conjugate", "dimension"}, {}};
    for (const auto& c : compositions_of(n))
        t.add_row({c.to_string(), n > 0 ? to_word(c) : std::string{}, conjugate(c).to_string(),
                   dimension(c).str()});
    return t;
}

Table run_eval(const OrientedPaintbox& pb, int n) {
    if (n > 16) throw ResourceBound("eval supports n <= 16 (2^15 rows)");
    auto chi = paintbox_character(pb);
    Table t{{"composition", "dimension", "p", "p_decimal", "dp", "dp_decimal"}, {}};
    Rat total = 0;
    for (const auto& c : compositions_of(n)) {
        Rat p = chi(c);
        Rat dp = Rat(dimension(c)) * p;
        total += dp;
        t.add_row({c.to_string(), dimension(c).str(), rat_cell(p), to_double(p), rat_cell(dp),
                   to_double(dp)});
    }
    if (n >= 1 && total != 1)
        throw std::logic_error("pmf does not sum to 1; got " + format_rat(total));
    return t;
}

Table run_sample(const OrientedPaintbox& pb, int n, std::int64_t trials, std::uint64_t seed) {
    if (n > 16) throw ResourceBound("sample supports n <= 16 (2^15 rows)");
    auto counts = sample_shape_counts(pb, n, trials, seed);
    auto chi = paintbox_character(pb);
    Table t{{"shape", "dim", "empirical", "exact", "stderr"}, {}};
    for (const auto& c : compositions_of(n)) {
        Rat exact = Rat(dimension(c)) * chi(c);
        auto it = counts.find(c);
        double empirical =
            it == counts.end() ? 0.0
                               : static_cast<double>(it->second) / static_cast<double>(trials);
        double pe = to_double(exact);
        double se = std::sqrt(pe * (1.0 - pe) / static_cast<double>(trials));
        t.add_row({c.to_string(), dimension(c).str(), empirical, rat_cell(exact), se});
    }
    return t;
}

Table run_lln(const OrientedPaintbox& pb, const std::vector<int>& checkpoints,
              std::uint64_t seed) {
    Table t{{"n", "distance", "distance_decimal"}, {}};
    for (const auto& [k, dist] : lln_trajectory(pb, checkpoints, seed))
        t.add_row({k, rat_cell(dist), to_double(dist)});
    return t;
}

Table run_heights(const OrientedPaintbox& pb, int n, std::uint64_t seed) {
    Table t{{"j", "phi_hat"}, {}};
    auto h = heights(pb, n, seed);
    for (int j = 1; j <= n; ++j) t.add_row({j, h[j - 1]});
    return t;
}

Table run_polya(const Rat& theta1, const Rat& theta2, int n, std::int64_t trials,
                std::uint64_t seed) {
    if (theta1 <= 0 || theta2 <= 0) throw CLI::ValidationError("--theta1/--theta2", "must be > 0");
    std::map<Composition, std::int64_t> counts;
    double t1 = to_double(theta1), t2 = to_double(theta2);
    for (std::int64_t trial = 0; trial < trials; ++trial) {
        auto pre = polya_bi_interval(t1, t2, n, trial_seed(seed, trial));
        ++counts[pre.shape(n)];
    }
    // hooks (1^l, k+1): p = B(theta1+l, theta2+k) / B(theta1, theta2), so the
    // shape mass is C(l+k, l) times the rising-factorial ratio
    auto rising = [](const Rat& x, int m) {
        Rat prod = 1;
        for (int i = 0; i < m; ++i) prod *= x + i;
        return prod;
    };
    Table t{{"shape", "downs", "ups", "empirical", "exact", "stderr"}, {}};
    for (int l = n - 1; l >= 0; --l) {
        int k = n - 1 - l;
        std::vector<int> parts(l, 1);
        parts.push_back(k + 1);
        Composition shape(parts);
        Rat p = rising(theta1, l) * rising(theta2, k) / rising(theta1 + theta2, l + k);
        Rat exact = Rat(binomial(Int(l + k), l)) * p;
        auto it = counts.find(shape);
        double empirical =
            it == counts.end() ? 0.0
                               : static_cast<double>(it->second) / static_cast<double>(trials);
        double pe = to_double(exact);
        double se = std::sqrt(pe * (1.0 - pe) / static_cast<double>(trials));
        t.add_row({shape.to_string(), l, k, empirical, rat_cell(exact), se});
    }
    return t;
}

Table run_kernel(const OrientedPaintbox& pb, const Composition& mu,
                 const std::vector<int>& checkpoints, std::uint64_t seed) {
    if (checkpoints.back() > 14) throw ResourceBound("kernel supports checkpoints <= 14");
    auto chi = paintbox_character(pb);
    Rat p = chi(mu);
    auto pre = sample_arrangement(pb, checkpoints.back(), seed);
    Table t{{"n", "lambda", "K", "K_decimal", "p", "p_decimal"}, {}};
    for (int k : checkpoints) {
        auto lambda = pre.shape(k);
        Rat kernel = martin_kernel(mu, lambda);
        t.add_row({k, lambda.to_string(), rat_cell(kernel), to_double(kernel), rat_cell(p),
                   to_double(p)});
    }
    return t;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"zigzag graph explorer: exact tables and sampling experiments"};
    app.require_subcommand(1);

    std::string paintbox_path, out_path, format = "csv", checkpoints_text, mu_text = "2";
    std::string theta1_text = "1", theta2_text = "1";
    int n = 0;
    std::int64_t trials = 10000;
    std::uint64_t seed = 1;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "output file (default: stdout)");
        cmd->add_option("--format", format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
    };

    auto* enumerate = app.add_subcommand("enumerate", "list a level of the graph");
    enumerate->add_option("--n", n, "level to list")->required()->check(CLI::PositiveNumber);
    add_common(enumerate);

    auto* eval = app.add_subcommand("eval", "exact pmf table of a paintbox");
    eval->add_option("--paintbox", paintbox_path, "paintbox file")->required();
    eval->add_option("--n", n, "level")->required()->check(CLI::PositiveNumber);
    add_common(eval);

    auto* sample = app.add_subcommand("sample", "empirical vs exact shape pmf");
    sample->add_option("--paintbox", paintbox_path, "paintbox file")->required();
    sample->add_option("--n", n, "arrangement size")->required()->check(CLI::PositiveNumber);
    sample->add_option("--trials", trials, "number of trials")->check(CLI::PositiveNumber);
    sample->add_option("--seed", seed, "master seed");
    add_common(sample);

    auto* lln = app.add_subcommand("lln", "distance trajectory of the scaled shape");
    lln->add_option("--paintbox", paintbox_path, "paintbox file")->required();
    lln->add_option("--checkpoints", checkpoints_text, "comma-separated sizes, increasing")
        ->default_str("10,100,1000,10000");
    lln->add_option("--seed", seed, "seed");
    add_common(lln);

    auto* heights_cmd = app.add_subcommand("heights", "empirical sweep heights of one sample");
    heights_cmd->add_option("--paintbox", paintbox_path, "paintbox file")->required();
    heights_cmd->add_option("--n", n, "arrangement size")->required()->check(CLI::PositiveNumber);
    heights_cmd->add_option("--seed", seed, "seed");
    add_common(heights_cmd);

    auto* polya = app.add_subcommand("polya", "urn arrangement hook-shape frequencies");
    polya->add_option("--theta1", theta1_text, "bottom weight, rational p/q");
    polya->add_option("--theta2", theta2_text, "top weight, rational p/q");
    polya->add_option("--n", n, "arrangement size")->required()->check(CLI::PositiveNumber);
    polya->add_option("--trials", trials, "number of trials")->check(CLI::PositiveNumber);
    polya->add_option("--seed", seed, "master seed");
    add_common(polya);

    auto* kernel = app.add_subcommand("kernel", "kernel convergence data along a sampled path");
    kernel->add_option("--mu", mu_text, "prefix shape, e.g. 2 or 1,2");
    kernel->add_option("--paintbox", paintbox_path, "paintbox file (default: empty paintbox)");
    kernel->add_option("--checkpoints", checkpoints_text, "comma-separated sizes, increasing")
        ->default_str("2,4,6,8,10,12,14");
    kernel->add_option("--seed", seed, "seed");
    add_common(kernel);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        Table table;
        if (enumerate->parsed()) {
            table = run_enumerate(n);
        } else if (eval->parsed()) {
            table = run_eval(load_paintbox(paintbox_path), n);
        } else if (sample->parsed()) {
            table = run_sample(load_paintbox(paintbox_path), n, trials, seed);
        } else if (lln->parsed()) {
            if (checkpoints_text.empty()) checkpoints_text = "10,100,1000,10000";
            table = run_lln(load_paintbox(paintbox_path), parse_checkpoints(checkpoints_text, 2),
                            seed);
        } else if (heights_cmd->parsed()) {
            table = run_heights(load_paintbox(paintbox_path), n, seed);
        } else if (polya->parsed()) {
            table = run_polya(parse_rat_flag(theta1_text, "--theta1"),
                              parse_rat_flag(theta2_text, "--theta2"), n, trials, seed);
        } else if (kernel->parsed()) {
            if (checkpoints_text.empty()) checkpoints_text = "2,4,6,8,10,12,14";
            Composition mu;
            try {
                mu = Composition::parse(mu_text);
            } catch (const std::invalid_argument& e) {
                throw CLI::ValidationError("--mu", e.what());
            }
            OrientedPaintbox pb =
                paintbox_path.empty() ? OrientedPaintbox{} : load_paintbox(paintbox_path);
            table = run_kernel(pb, mu, parse_checkpoints(checkpoints_text, 1), seed);
        }
        write_table(table, out_path, format);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const InputFileError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const ResourceBound& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
