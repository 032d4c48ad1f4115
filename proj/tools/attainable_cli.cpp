#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "attainable/attainable.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace attainable;

// Full enumeration behind `count`/`attainable` is exponential in sqrt(n);
// past this point it stops being an interactive-scale computation.
constexpr std::uint64_t kEnumerationWarnThreshold = 60;

void emit(json const& j) { std::cout << j.dump() << "\n"; }

Partition parse_partition(std::vector<std::int64_t> const& raw) {
    if (raw.empty()) throw std::invalid_argument("partition: no parts given");
    std::vector<part_t> parts;
    parts.reserve(raw.size());
    bool sorted = true;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] <= 0)
            throw std::invalid_argument("partition: parts must be positive integers");
        if (i > 0 && raw[i] > raw[i - 1]) sorted = false;
        parts.push_back(static_cast<part_t>(raw[i]));
    }
    Partition lambda(std::move(parts));
    if (!sorted)
        std::cerr << "warning: parts were not weakly decreasing; canonicalized to ("
                  << lambda.to_string() << ")\n";
    return lambda;
}

void warn_if_large(std::uint64_t n) {
    if (n > kEnumerationWarnThreshold)
        std::cerr << "warning: enumerating all partitions of " << n
                  << " is expensive; expect a long wait\n";
}

double constant_from_env() {
    if (const char* env = std::getenv("ATTAINABLE_CONSTANT")) {
        try {
            std::size_t pos = 0;
            double v = std::stod(env, &pos);
            if (pos == std::string(env).size()) return v;
        } catch (std::exception const&) {
        }
        throw std::invalid_argument("ATTAINABLE_CONSTANT is not a number");
    }
    return default_prediction_constant;
}

struct CliState {
    // cyclicity / aut / weight / predict / map share partition positionals
    std::vector<std::int64_t> parts;
    std::vector<std::int64_t> map_values;
    std::uint64_t n = 0;
    std::uint64_t p = 0;
    std::uint64_t upto = 0;
    std::string sequence;
    bool list = false;
    double constant = default_prediction_constant;
    std::optional<double> cumulative_x;
    std::int64_t discriminant = 0;
    bool abs_flag = false;
    std::int64_t from = 0;
    std::int64_t to = 0;
    std::vector<std::uint64_t> primes;
    std::uint64_t nmax = 0;
    bool tsv = false;
};

int run_cyclicity(CliState const& st) {
    Partition lambda = parse_partition(st.parts);
    mpz_class c = cyclicity_index(lambda);
    json j;
    j["command"] = "cyclicity";
    j["partition"] = lambda.to_string();
    j["n"] = std::to_string(lambda.sum());
    j["cyclicity_index"] = c.get_str();
    j["attainable"] = (c >= 0);
    emit(j);
    return 0;
}

int run_attainable(CliState const& st) {
    warn_if_large(st.n);
    auto list = attainable_partitions(st.n);
    json j;
    j["command"] = "attainable";
    j["n"] = st.n;
    j["count"] = std::to_string(list.size());
    if (st.list) {
        auto arr = json::array();
        for (auto const& lambda : list) arr.push_back(lambda.to_string());
        j["partitions"] = std::move(arr);
    }
    emit(j);
    return 0;
}

int run_count(CliState const& st) {
    std::uint64_t value = 0;
    if (st.sequence == "a") {
        warn_if_large(st.n);
        value = count_attainable(st.n);
    } else if (st.sequence == "z0") {
        warn_if_large(st.n);
        value = count_zero_cyclicity(st.n);
    } else {  // z
        warn_if_large(2 * st.n);
        value = count_z(st.n);
    }
    json j;
    j["command"] = "count";
    j["sequence"] = st.sequence;
    j["n"] = st.n;
    j["value"] = std::to_string(value);
    emit(j);
    return 0;
}

int run_series(CliState const& st) {
    PowerSeries s = st.sequence == "a"   ? attainable_series(st.upto)
                    : st.sequence == "z" ? triangular_series(st.upto)
                                         : zero_cyclicity_series(st.upto);
    json j;
    j["command"] = "series";
    j["series"] = st.sequence;
    j["upto"] = st.upto;
    auto arr = json::array();
    for (auto const& coeff : s.coefficients()) arr.push_back(coeff.get_str());
    j["coefficients"] = std::move(arr);
    emit(j);
    return 0;
}

int run_map_to_triangular(CliState const& st) {
    Partition lambda = parse_partition(st.map_values);
    TriangularMultiset t = zero_to_triangular(lambda);
    json j;
    j["command"] = "map";
    j["direction"] = "to-triangular";
    j["partition"] = lambda.to_string();
    j["total"] = std::to_string(t.total());
    j["triangular"] = t.to_string();
    emit(j);
    return 0;
}

int run_map_to_zero(CliState const& st) {
    std::vector<std::uint64_t> values;
    for (std::int64_t v : st.map_values) {
        if (v <= 0)
            throw std::invalid_argument("map to-zero: values must be positive");
        values.push_back(static_cast<std::uint64_t>(v));
    }
    TriangularMultiset t = TriangularMultiset::from_values(values);
    Partition lambda = triangular_to_zero(t);
    json j;
    j["command"] = "map";
    j["direction"] = "to-zero";
    j["triangular"] = t.to_string();
    j["partition"] = lambda.to_string();
    emit(j);
    return 0;
}

int run_aut(CliState const& st) {
    PGroupShape shape(st.p, parse_partition(st.parts));
    json j;
    j["command"] = "aut";
    j["p"] = st.p;
    j["partition"] = shape.lambda.to_string();
    j["n"] = std::to_string(shape.lambda.sum());
    j["cyclicity_index"] = cyclicity_index(shape.lambda).get_str();
    j["aut_order"] = aut_order(shape).get_str();
    emit(j);
    return 0;
}

int run_weight(CliState const& st) {
    PGroupShape shape(st.p, parse_partition(st.parts));
    json j;
    j["command"] = "weight";
    j["p"] = st.p;
    j["partition"] = shape.lambda.to_string();
    j["weight"] = cohen_lenstra_weight(shape).get_str();
    emit(j);
    return 0;
}

int run_predict(CliState const& st) {
    PGroupShape shape(st.p, parse_partition(st.parts));
    mpz_class c = cyclicity_index(shape.lambda);
    json j;
    j["command"] = "predict";
    j["p"] = st.p;
    j["partition"] = shape.lambda.to_string();
    j["cyclicity_index"] = c.get_str();
    j["constant"] = st.constant;
    if (c > 0) {
        if (st.cumulative_x)
            throw std::invalid_argument(
                "predict: --cumulative applies only when the cyclicity index is 0");
        j["kind"] = "pointwise";
        j["predicted"] = *predicted_count(shape, st.constant);
    } else if (c == 0) {
        if (!st.cumulative_x)
            throw std::invalid_argument(
                "predict: cyclicity index 0 needs --cumulative <x>");
        j["kind"] = "cumulative";
        j["x"] = *st.cumulative_x;
        j["predicted"] = predicted_cumulative(shape.lambda, *st.cumulative_x, st.constant);
    } else {
        if (st.cumulative_x)
            throw std::invalid_argument(
                "predict: --cumulative applies only when the cyclicity index is 0");
        j["kind"] = "finitely_many";
        j["note"] = "negative cyclicity index: expected for only finitely many primes";
    }
    emit(j);
    return 0;
}

int run_classgroup(CliState const& st) {
    std::int64_t D = st.discriminant;
    if (D == 0) throw std::invalid_argument("classgroup: D must be nonzero");
    if (D > 0) {
        if (!st.abs_flag)
            throw std::invalid_argument(
                "classgroup: positive D needs --abs to mean |D|");
        D = -D;
    }
    auto structure = class_group_structure(D);
    json j;
    j["command"] = "classgroup";
    j["D"] = D;
    j["h"] = std::to_string(structure.h);
    json sylow = json::object();
    for (auto const& [q, lambda] : structure.sylow)
        sylow[std::to_string(q)] = lambda.to_string();
    j["sylow"] = std::move(sylow);
    emit(j);
    return 0;
}

int run_survey(CliState const& st) {
    SurveyReport rep = survey(st.from, st.to, st.primes, st.nmax);
    if (st.tsv) {
        std::cout << to_tsv(rep);
    } else {
        json j;
        j["command"] = "survey";
        j.update(to_json(rep));
        emit(j);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"attainable partitions, their generating functions, and "
                 "imaginary-quadratic class-group surveys"};
    app.require_subcommand(1);
    CliState st;
    int (*handler)(CliState const&) = nullptr;

    auto* cyc = app.add_subcommand("cyclicity", "cyclicity index of a partition");
    cyc->add_option("parts", st.parts, "partition parts")->required();
    cyc->callback([&] { handler = run_cyclicity; });

    auto* att = app.add_subcommand("attainable", "count / list attainable partitions of n");
    att->add_option("n", st.n, "integer to partition")->required();
    att->add_flag("--list", st.list, "also list the partitions");
    att->callback([&] { handler = run_attainable; });

    auto* cnt = app.add_subcommand("count", "a(n), z0(n) or z(m) by enumeration");
    cnt->add_option("sequence", st.sequence, "one of: a, z0, z")
        ->required()
        ->check(CLI::IsMember({"a", "z0", "z"}));
    cnt->add_option("n", st.n, "argument of the sequence")->required();
    cnt->callback([&] { handler = run_count; });

    auto* ser = app.add_subcommand("series", "exact generating-function coefficients");
    ser->add_option("series", st.sequence, "one of: a, z, z0")
        ->required()
        ->check(CLI::IsMember({"a", "z", "z0"}));
    ser->add_option("--upto", st.upto, "highest retained exponent")->required();
    ser->callback([&] { handler = run_series; });

    auto* map = app.add_subcommand("map", "bijection between cyclicity-0 partitions "
                                          "and triangular-number partitions");
    map->require_subcommand(1);
    auto* m2t = map->add_subcommand("to-triangular", "partition with c = 0 -> triangular parts");
    m2t->add_option("parts", st.map_values, "partition parts")->required();
    m2t->callback([&] { handler = run_map_to_triangular; });
    auto* m2z = map->add_subcommand("to-zero", "triangular parts -> partition with c = 0");
    m2z->add_option("values", st.map_values, "triangular numbers")->required();
    m2z->callback([&] { handler = run_map_to_zero; });

    auto* aut = app.add_subcommand("aut", "|Aut| of the abelian p-group of a partition");
    aut->add_option("p", st.p, "odd prime")->required();
    aut->add_option("parts", st.parts, "partition parts")->required();
    aut->callback([&] { handler = run_aut; });

    auto* wgt = app.add_subcommand("weight", "Cohen-Lenstra weight of the p-group");
    wgt->add_option("p", st.p, "odd prime")->required();
    wgt->add_option("parts", st.parts, "partition parts")->required();
    wgt->callback([&] { handler = run_weight; });

    st.constant = constant_from_env();
    auto* prd = app.add_subcommand("predict", "heuristic class-group counts (not exact)");
    prd->add_option("p", st.p, "odd prime")->required();
    prd->add_option("parts", st.parts, "partition parts")->required();
    prd->add_option("--constant", st.constant, "leading constant")
        ->capture_default_str();
    double cumulative_x = 0;
    auto* cum = prd->add_option("--cumulative", cumulative_x,
                                "evaluate the cumulative form at x (cyclicity index 0)");
    prd->callback([&] {
        if (*cum) st.cumulative_x = cumulative_x;
        handler = run_predict;
    });

    auto* clg = app.add_subcommand("classgroup", "class number and group structure");
    clg->add_option("D", st.discriminant, "fundamental discriminant (negative)")->required();
    clg->add_flag("--abs", st.abs_flag, "interpret a positive D as |D|");
    clg->callback([&] { handler = run_classgroup; });

    auto* srv = app.add_subcommand("survey", "scan fundamental discriminants and tally "
                                             "p-Sylow shapes");
    srv->add_option("--from", st.from, "most negative discriminant")->required();
    srv->add_option("--to", st.to, "least negative discriminant")->required();
    srv->add_option("--primes", st.primes, "comma-separated primes to tally")
        ->required()
        ->delimiter(',');
    srv->add_option("--nmax", st.nmax, "tally shapes with |lambda| <= nmax")->required();
    auto* tsv_flag = srv->add_flag("--tsv", st.tsv, "line-oriented TSV output");
    auto* json_flag = srv->add_flag("--json", "structured JSON output (default)");
    tsv_flag->excludes(json_flag);
    srv->callback([&] { handler = run_survey; });

    try {
        app.parse(argc, argv);
    } catch (CLI::CallForHelp const& e) {
        return app.exit(e);
    } catch (CLI::ParseError const& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        return handler(st);
    } catch (std::exception const& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
