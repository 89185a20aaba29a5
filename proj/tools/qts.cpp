// Command-line front end: classify tables, run censuses, enumerate members,
// render contour grids, and build single-plateaued orderings.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qts/classify.hpp"
#include "qts/enumerate.hpp"
#include "qts/group_action.hpp"
#include "qts/io.hpp"
#include "qts/op_table.hpp"
#include "qts/orders.hpp"
#include "qts/render.hpp"
#include "qts/sequences.hpp"
#include "qts/subclass.hpp"

namespace {

// Exit codes: 0 member, 1 quasitrivial non-member, 2 not quasitrivial,
// 64 usage/guard, 65 parse.
constexpr int kExitUsage = 64;
constexpr int kExitParse = 65;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

qts::OpTable read_table(const std::string& path) {
    if (path.empty() || path == "-") return qts::parse_table(std::cin);
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open input file: " + path);
    return qts::parse_table(in);
}

int guard_value(int cli_value, int fallback) {
    if (cli_value > 0) return cli_value;
    if (const char* env = std::getenv("QTS_MAX_N")) {
        try {
            const int v = std::stoi(env);
            if (v > 0) return v;
        } catch (const std::exception&) {
        }
    }
    return fallback;
}

std::string join(const std::vector<int>& xs, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(xs[i]);
    }
    return out;
}

std::string format_blocks(const qts::WeakOrdering& w) {
    std::string out;
    for (int b = 0; b < w.block_count(); ++b) {
        if (b) out += " < ";
        out += "{" + join(w.block(b), ",") + "}";
    }
    return out;
}

nlohmann::json table_json(const qts::OpTable& f) {
    nlohmann::json rows = nlohmann::json::array();
    for (int x = 1; x <= f.n(); ++x) {
        nlohmann::json row = nlohmann::json::array();
        for (int y = 1; y <= f.n(); ++y) row.push_back(f(x, y));
        rows.push_back(std::move(row));
    }
    return rows;
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

int run_classify(const std::string& input, const std::string& format) {
    const qts::OpTable f = read_table(input);
    const qts::ClassReport rep = qts::classify(f);
    const qts::PreimageSequence pre = qts::preimage_sequence(f);

    std::optional<qts::OrbitSummary> summary;
    std::optional<qts::CanonicalForm> canon;
    std::optional<qts::OrderabilityReport> orders;
    std::optional<qts::SubclassReport> sub;
    if (rep.member) {
        summary = qts::orbit_summary(f);
        canon = qts::canonicalize(f);
        orders = qts::order_preservability(f);
        sub = qts::characterize(f);
    }

    if (format == "json") {
        nlohmann::json j;
        j["n"] = f.n();
        j["quasitrivial"] = rep.quasitrivial;
        j["associative"] = rep.associative;
        j["member"] = rep.member;
        j["preimage"] = pre.counts();
        if (rep.member) {
            j["blocks"] = rep.weak_ordering->blocks();
            j["signature"] = rep.signature->parts();
            j["orbit_size"] = summary->orbit_size.str();
            j["stabilizer_size"] = summary->stabilizer_size.str();
            j["canonical_sigma"] = canon->sigma.images();
            j["canonical"] = table_json(canon->table);
            j["order_preservable"] = orders->preservable;
            if (orders->witness) j["order_witness"] = orders->witness->order();
            if (orders->violation)
                j["order_violation"] = std::vector<int>(orders->violation->begin(), orders->violation->end());
            j["commutative"] = sub->commutative;
            j["anticommutative"] = sub->anticommutative;
            j["bisymmetric"] = sub->bisymmetric;
            if (sub->commutative_witness) j["commutative_witness"] = sub->commutative_witness->order();
            if (sub->bisymmetric_ell) j["bisymmetric_ell"] = *sub->bisymmetric_ell;
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "quasitrivial: " << yesno(rep.quasitrivial) << "\n";
        std::cout << "associative: " << yesno(rep.associative) << "\n";
        std::cout << "member: " << yesno(rep.member) << "\n";
        std::cout << "preimage: (" << join(pre.counts(), ",") << ")\n";
        if (rep.member) {
            std::cout << "blocks: " << format_blocks(*rep.weak_ordering) << "\n";
            std::cout << "signature: (" << join(rep.signature->parts(), ",") << ")\n";
            std::cout << "orbit-size: " << summary->orbit_size.str() << "\n";
            std::cout << "stabilizer-size: " << summary->stabilizer_size.str() << "\n";
            std::cout << "canonical-sigma: " << join(canon->sigma.images(), " ") << "\n";
            std::cout << "canonical:\n" << qts::emit_table(canon->table);
            std::cout << "order-preservable: " << yesno(orders->preservable) << "\n";
            if (orders->witness)
                std::cout << "order-witness: " << join(orders->witness->order(), " < ") << "\n";
            if (orders->violation) {
                const auto& v = *orders->violation;
                std::cout << "order-violation: " << v[0] << " < " << v[1] << " ~ " << v[2] << " ~ " << v[3]
                          << "\n";
            }
            std::cout << "commutative: " << yesno(sub->commutative) << "\n";
            if (sub->commutative_witness)
                std::cout << "commutative-witness: " << join(sub->commutative_witness->order(), " < ") << "\n";
            std::cout << "anticommutative: " << yesno(sub->anticommutative) << "\n";
            std::cout << "bisymmetric: " << yesno(sub->bisymmetric) << "\n";
            if (sub->bisymmetric_ell) std::cout << "bisymmetric-ell: " << *sub->bisymmetric_ell << "\n";
        }
    }
    return rep.member ? 0 : (rep.quasitrivial ? 1 : 2);
}

qts::BigInt census_value(const qts::Census& c, const std::string& family) {
    if (family == "p") return c.p;
    if (family == "q") return c.q;
    if (family == "r") return c.r;
    if (family == "s") return c.s;
    if (family == "p_op") return c.p_op;
    if (family == "q_op") return c.q_op;
    if (family == "r_op") return c.r_op;
    if (family == "s_op") return c.s_op;
    if (family == "r_b") return c.r_b;
    if (family == "s_b") return c.s_b;
    throw UsageError("unknown family: " + family);
}

qts::BigInt formula_value(int n, const std::string& family) {
    if (family == "p") return qts::seq_p(n);
    if (family == "q") return qts::seq_q(n);
    if (family == "r") return qts::seq_r(n);
    if (family == "s") return qts::seq_s(n);
    if (family == "p_op") return qts::seq_p_op(n);
    if (family == "q_op") return qts::seq_q_op(n);
    if (family == "r_op") return qts::seq_r_op(n);
    if (family == "s_op") return qts::seq_s_op(n);
    if (family == "r_b") return qts::seq_r_b(n);
    if (family == "s_b") return qts::seq_s_b(n);
    throw UsageError("unknown family: " + family);
}

int run_count(int n, std::vector<std::string> families, int max_n, const std::string& format) {
    if (families.empty())
        families = {"p", "q", "r", "s", "p_op", "q_op", "r_op", "s_op", "r_b", "s_b"};
    const qts::Census c = qts::census(n, guard_value(max_n, qts::kCensusGuard));
    bool all_agree = true;
    if (format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& fam : families) {
            const auto e = census_value(c, fam), v = formula_value(n, fam);
            all_agree &= (e == v);
            rows.push_back({{"family", fam}, {"enumeration", e.str()}, {"formula", v.str()}, {"agree", e == v}});
        }
        std::cout << nlohmann::json{{"n", n}, {"rows", rows}}.dump(2) << "\n";
    } else {
        std::cout << "# family enumeration formula agree\n";
        for (const auto& fam : families) {
            const auto e = census_value(c, fam), v = formula_value(n, fam);
            all_agree &= (e == v);
            std::cout << fam << " " << e.str() << " " << v.str() << " " << yesno(e == v) << "\n";
        }
    }
    return all_agree ? 0 : 1;
}

int run_enumerate(int n, const std::string& filter, bool count_only, int max_n) {
    auto passes = [&](const qts::OpTable& f) {
        if (filter == "all") return true;
        if (filter == "canonical") return qts::is_ordinal_sum_on(f, qts::TotalOrdering::natural(f.n()));
        if (filter == "order-preservable") return qts::order_preservability(f).preservable;
        const qts::SubclassReport sub = qts::characterize(f);
        if (filter == "bisymmetric") return sub.bisymmetric;
        if (filter == "commutative") return sub.commutative;
        if (filter == "anticommutative") return sub.anticommutative;
        throw UsageError("unknown filter: " + filter);
    };
    long long count = 0;
    qts::for_each_member(
        n,
        [&](const qts::OpTable& f, const qts::WeakOrdering&, const std::vector<qts::BlockChoice>&) {
            if (!passes(f)) return;
            ++count;
            if (!count_only) std::cout << qts::emit_table(f) << "\n";
        },
        guard_value(max_n, qts::kMemberGuard));
    if (count_only) std::cout << count << "\n";
    return 0;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::string normalized = text;
    for (char& ch : normalized)
        if (ch == ',') ch = ' ';
    std::istringstream in(normalized);
    std::vector<int> out;
    int v = 0;
    while (in >> v) out.push_back(v);
    if (!in.eof()) throw UsageError("expected a list of integers, got: " + text);
    return out;
}

int run_render(const std::string& input, const std::string& order_str, bool dot) {
    const qts::OpTable f = read_table(input);
    if (dot) {
        std::cout << qts::render_dot(f);
        return 0;
    }
    if (order_str.empty()) {
        std::cout << qts::render_grid(f);
        return 0;
    }
    try {
        std::cout << qts::render_grid(f, qts::TotalOrdering(parse_int_list(order_str)));
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("bad --order: ") + e.what());
    }
    return 0;
}

int run_order(const std::string& spec) {
    // Blocks are separated by '|', listed from the least block up; the
    // written order inside each block is the working order S_i.
    std::vector<std::vector<int>> written;
    std::string part;
    std::istringstream in(spec);
    while (std::getline(in, part, '|')) {
        std::vector<int> blk;
        try {
            blk = parse_int_list(part);
        } catch (const UsageError&) {
            throw qts::ParseError("expected integers in block '" + part + "'", 1, 1);
        }
        if (blk.empty()) throw qts::ParseError("empty block in ordering spec", 1, 1);
        written.push_back(std::move(blk));
    }
    if (written.empty()) throw qts::ParseError("empty ordering spec", 1, 1);
    int n = 0;
    for (const auto& blk : written) n += static_cast<int>(blk.size());
    std::optional<qts::WeakOrdering> w;
    try {
        w.emplace(n, written);
    } catch (const std::invalid_argument& e) {
        throw qts::ParseError(e.what(), 1, 1);
    }
    if (auto viol = qts::quasilinearity2_violation(*w)) {
        const auto& v = *viol;
        std::cout << "not 2-quasilinear: " << v[0] << " < " << v[1] << " ~ " << v[2] << " ~ " << v[3] << "\n";
        return 1;
    }
    const qts::TotalOrdering l = qts::construct_order(*w, written);
    std::cout << join(l.order(), " < ") << "\n";
    std::cout << "single-plateaued: " << yesno(qts::is_single_plateaued(*w, l)) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"classify, canonicalize, and enumerate quasitrivial semigroups on {1,...,n}"};
    app.require_subcommand(1);

    std::function<int()> action;

    auto* cmd_classify = app.add_subcommand("classify", "classify an operation table");
    std::string cls_input = "-";
    std::string cls_format = "text";
    cmd_classify->add_option("input", cls_input, "table file, or - for stdin");
    cmd_classify->add_option("--format", cls_format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd_classify->callback([&]() { action = [&]() { return run_classify(cls_input, cls_format); }; });

    auto* cmd_count = app.add_subcommand("count", "census of X_n with formula cross-check");
    int count_n = 0;
    int count_max_n = 0;
    std::vector<std::string> count_families;
    std::string count_format = "text";
    cmd_count->add_option("-n,--n", count_n, "carrier size")->required();
    cmd_count->add_option("--families", count_families, "families to report")->delimiter(',');
    cmd_count->add_option("--max-n", count_max_n, "override the enumeration guard");
    cmd_count->add_option("--format", count_format, "output format")->check(CLI::IsMember({"text", "json"}));
    cmd_count->callback(
        [&]() { action = [&]() { return run_count(count_n, count_families, count_max_n, count_format); }; });

    auto* cmd_enum = app.add_subcommand("enumerate", "stream the members of F_n");
    int enum_n = 0;
    int enum_max_n = 0;
    std::string enum_filter = "all";
    bool enum_count_only = false;
    cmd_enum->add_option("-n,--n", enum_n, "carrier size")->required();
    cmd_enum->add_option("--filter", enum_filter, "subclass filter")
        ->check(CLI::IsMember(
            {"all", "canonical", "order-preservable", "bisymmetric", "commutative", "anticommutative"}));
    cmd_enum->add_flag("--count-only", enum_count_only, "print only the number of tables");
    cmd_enum->add_option("--max-n", enum_max_n, "override the enumeration guard");
    cmd_enum->callback(
        [&]() { action = [&]() { return run_enumerate(enum_n, enum_filter, enum_count_only, enum_max_n); }; });

    auto* cmd_render = app.add_subcommand("render", "draw the value grid or DOT contour plot");
    std::string render_input = "-";
    std::string render_order;
    bool render_dot_flag = false;
    cmd_render->add_option("input", render_input, "table file, or - for stdin");
    cmd_render->add_option("--order", render_order, "axis ordering, e.g. 3,4,2,1,5,6");
    cmd_render->add_flag("--dot", render_dot_flag, "emit the contour plot as DOT");
    cmd_render->callback(
        [&]() { action = [&]() { return run_render(render_input, render_order, render_dot_flag); }; });

    auto* cmd_order = app.add_subcommand("order", "total ordering making a weak ordering single-plateaued");
    std::string order_spec;
    cmd_order->add_option("blocks", order_spec, "weak ordering, e.g. \"1 2 3 | 4 5 | 6 | 7 8\"")->required();
    cmd_order->callback([&]() { action = [&]() { return run_order(order_spec); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        return action();
    } catch (const qts::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const qts::GuardError& e) {
        std::cerr << e.what() << " (raise with --max-n or QTS_MAX_N)\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 70;
    }
}
