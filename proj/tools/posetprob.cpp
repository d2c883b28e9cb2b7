// posetprob: exact poset probabilities P(P; a < b) via blocking ideals,
// with specialized engines for partition cell posets and two-row shapes.
#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "posetprob/blocking.hpp"
#include "posetprob/corpus.hpp"
#include "posetprob/ideal_lattice.hpp"
#include "posetprob/io.hpp"
#include "posetprob/tableaux.hpp"
#include "posetprob/two_rows.hpp"

namespace pp = posetprob;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

long ideal_cap_from_env() {
    if (const char* s = std::getenv("POSETPROB_MAX_IDEALS")) {
        char* end = nullptr;
        long v = std::strtol(s, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        pp::raise(pp::errc::parse_error, "POSETPROB_MAX_IDEALS must be a positive integer");
    }
    return pp::kDefaultIdealCap;
}

struct OutputOptions {
    std::string format = "text";  // text|csv|json
    bool as_float = false;
    bool timing = false;
};

std::string render(const pp::Rational& q, const OutputOptions& opt) {
    return opt.as_float ? pp::to_decimal(q) : pp::to_string(q);
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

void add_output_flags(CLI::App* cmd, OutputOptions& opt) {
    cmd->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    cmd->add_flag("--float", opt.as_float, "Print decimals (15 significant digits)");
    cmd->add_flag("--timing", opt.timing, "Print elapsed wall time to stderr");
}

// Either a partition with cell endpoints or a generic poset with element
// endpoints; all engines funnel through this.
struct Query {
    std::optional<pp::Partition> partition;
    std::optional<pp::Poset> poset;
    pp::Cell alpha_cell, beta_cell;
    int alpha_elem = -1, beta_elem = -1;

    const pp::Poset& materialized_poset() {
        if (!poset) {
            poset = pp::cell_poset(*partition);
            if (alpha_cell.row > 0) alpha_elem = pp::cell_index(*partition, alpha_cell);
            if (beta_cell.row > 0) beta_elem = pp::cell_index(*partition, beta_cell);
        }
        return *poset;
    }
};

struct InputFlags {
    std::string partition_spec;
    std::string poset_path;
    std::string alpha, beta;
    bool zero_indexed = false;

    void add_to(CLI::App* cmd, bool need_pair) {
        auto* part = cmd->add_option("--partition", partition_spec,
                                     "Partition, e.g. 4,3,3");
        auto* pose = cmd->add_option("--poset", poset_path, "Poset file (text or JSON)");
        part->excludes(pose);
        if (need_pair) {
            cmd->add_option("--alpha", alpha, "First element: cell 'r,c' or poset element")
                ->required();
            cmd->add_option("--beta", beta, "Second element")->required();
        }
        cmd->add_flag("--zero-indexed", zero_indexed,
                      "Interpret cells in the zero-indexed convention");
    }

    int poset_element(const pp::Poset& p, const std::string& spec) const {
        for (int i = 0; i < p.size(); ++i)
            if (p.label(i) == spec) return i;
        try {
            size_t pos = 0;
            int v = std::stoi(spec, &pos);
            if (pos == spec.size() && v >= 0 && v < p.size()) return v;
        } catch (const std::logic_error&) {
        }
        pp::raise(pp::errc::parse_error, "no element '" + spec + "' in the poset");
    }

    Query make_query(bool need_pair) const {
        Query q;
        if (!partition_spec.empty() || poset_path.empty()) {
            pp::require(!partition_spec.empty(), pp::errc::parse_error,
                        "need --partition or --poset");
            q.partition = pp::parse_partition(partition_spec);
            if (need_pair) {
                q.alpha_cell = pp::parse_cell(alpha);
                q.beta_cell = pp::parse_cell(beta);
                if (zero_indexed) {
                    ++q.alpha_cell.row, ++q.alpha_cell.col;
                    ++q.beta_cell.row, ++q.beta_cell.col;
                }
            }
        } else {
            q.poset = pp::load_poset(poset_path);
            if (need_pair) {
                q.alpha_elem = poset_element(*q.poset, alpha);
                q.beta_elem = poset_element(*q.poset, beta);
            }
        }
        return q;
    }
};

pp::Rational oracle_probability(const pp::Poset& p, int a, int b) {
    if (p.less(a, b)) return pp::Rational(1);
    if (p.less(b, a)) return pp::Rational(0);
    pp::BigInt ahead = pp::e_with_constraint(p, a, b);
    pp::BigInt behind = pp::e_with_constraint(p, b, a);
    return pp::make_rational(ahead, ahead + behind);
}

pp::Rational run_probability(Query& q, const std::string& engine, long cap) {
    bool have_partition = q.partition.has_value();
    if (engine == "partition" || engine == "two-row")
        pp::require(have_partition, pp::errc::engine_not_applicable,
                    "engine '" + engine + "' needs --partition input");
    if (engine == "two-row")
        pp::require(q.partition->length() <= 2, pp::errc::engine_not_applicable,
                    "two-row engine needs at most two rows");

    std::string chosen = engine;
    if (engine == "auto")
        chosen = !have_partition          ? "generic"
                 : q.partition->length() <= 2 ? "two-row"
                                              : "partition";

    if (chosen == "two-row") {
        const pp::Partition& lam = *q.partition;
        pp::require(lam.has_cell(q.alpha_cell) && lam.has_cell(q.beta_cell),
                    pp::errc::cell_outside_shape, "cell outside " + lam.to_string());
        if (q.beta_cell.dominates(q.alpha_cell)) return pp::Rational(1);
        if (q.alpha_cell.dominates(q.beta_cell)) return pp::Rational(0);
        return pp::probability_two_row(pp::TwoRowCase::make(
            lam.part(1), lam.part(2), q.alpha_cell, q.beta_cell));
    }
    if (chosen == "partition")
        return pp::probability_partition(*q.partition, q.alpha_cell, q.beta_cell);
    const pp::Poset& p = q.materialized_poset();
    if (chosen == "oracle") return oracle_probability(p, q.alpha_elem, q.beta_elem);
    return pp::probability(p, q.alpha_elem, q.beta_elem, cap);
}

void print_probability(const pp::Rational& v, const OutputOptions& opt) {
    if (opt.format == "csv") {
        std::cout << "probability\n" << csv_quote(render(v, opt)) << "\n";
    } else if (opt.format == "json") {
        nlohmann::json j{{"kind", "probability"}, {"value", render(v, opt)}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << render(v, opt) << "\n";
    }
}

std::string decorated_tableau(const pp::Partition& lam, pp::Cell alpha, pp::Cell beta) {
    pp::BlockingDecomposition d =
        pp::decompose(pp::cell_poset(lam), pp::cell_index(lam, alpha), pp::cell_index(lam, beta));
    std::vector<pp::Cell> cells = pp::cells_of(lam);
    pp::OrderIdeal fixed = d.fixed;
    pp::OrderIdeal variable{std::vector<int>(d.variable)};
    std::string art;
    for (int k = 0; k < static_cast<int>(cells.size()); ++k) {
        pp::Cell c = cells[k];
        if (c.col > 1) art += ' ';
        if (c == alpha)
            art += 'a';
        else if (c == beta)
            art += 'b';
        else if (fixed.contains(k))
            art += 'F';
        else if (variable.contains(k))
            art += 'V';
        else
            art += 'o';
        if (c.col == lam.part(c.row)) art += '\n';
    }
    return art;
}

void run_blocking(Query& q, const OutputOptions& opt) {
    std::vector<std::string> lines;
    std::string art;
    if (q.partition) {
        for (const pp::Partition& t :
             pp::blocking_partitions(*q.partition, q.alpha_cell, q.beta_cell))
            lines.push_back(t.to_string());
        art = decorated_tableau(*q.partition, q.alpha_cell, q.beta_cell);
    } else {
        const pp::Poset& p = *q.poset;
        for (const pp::OrderIdeal& t : pp::blocking_ideals(p, q.alpha_elem, q.beta_elem)) {
            std::string s = "{";
            for (size_t i = 0; i < t.members.size(); ++i) {
                if (i) s += ", ";
                s += p.label(t.members[i]);
            }
            lines.push_back(s + "}");
        }
    }
    if (opt.format == "csv") {
        std::cout << "blocking\n";
        for (const std::string& s : lines) std::cout << csv_quote(s) << "\n";
    } else if (opt.format == "json") {
        nlohmann::json j{{"kind", "blocking-list"}, {"blocking", lines}};
        if (!art.empty()) j["tableau"] = art;
        std::cout << j.dump() << "\n";
    } else {
        if (!art.empty()) std::cout << art << "\n";
        std::cout << lines.size() << " blocking ideal(s):\n";
        for (const std::string& s : lines) std::cout << s << "\n";
    }
}

void run_scan(Query& q, bool all_pairs, long cap, const OutputOptions& opt) {
    const pp::Poset& p = q.materialized_poset();
    pp::BalancedPair best = pp::balanced_pair_scan(p, cap);
    if (opt.format == "json") {
        nlohmann::json j{{"kind", "scan"},
                         {"x", p.label(best.x)},
                         {"y", p.label(best.y)},
                         {"min-max", render(best.value, opt)}};
        if (all_pairs) {
            nlohmann::json rows = nlohmann::json::array();
            for (auto& [x, y, v] : pp::probability_table(p, cap))
                rows.push_back({{"x", p.label(x)}, {"y", p.label(y)},
                                {"probability", render(v, opt)}});
            j["pairs"] = rows;
        }
        std::cout << j.dump() << "\n";
        return;
    }
    if (opt.format == "csv") {
        std::cout << "x,y,probability\n";
        if (all_pairs)
            for (auto& [x, y, v] : pp::probability_table(p, cap))
                std::cout << csv_quote(p.label(x)) << "," << csv_quote(p.label(y)) << ","
                          << csv_quote(render(v, opt)) << "\n";
        std::cout << csv_quote(p.label(best.x)) << "," << csv_quote(p.label(best.y)) << ","
                  << csv_quote(render(best.value, opt)) << "\n";
        return;
    }
    if (all_pairs) {
        for (auto& [x, y, v] : pp::probability_table(p, cap))
            std::cout << "P(" << p.label(x) << " < " << p.label(y)
                      << ") = " << render(v, opt) << "\n";
    }
    std::cout << "best pair: (" << p.label(best.x) << ", " << p.label(best.y) << ")\n";
    std::cout << "min-max = " << render(best.value, opt) << "\n";
}

void print_rows(const std::vector<std::vector<std::string>>& rows, const OutputOptions& opt,
                const std::string& kind, const std::vector<std::string>& header) {
    if (opt.format == "csv") {
        for (size_t i = 0; i < header.size(); ++i)
            std::cout << (i ? "," : "") << header[i];
        std::cout << "\n";
        for (const auto& row : rows) {
            for (size_t i = 0; i < row.size(); ++i)
                std::cout << (i ? "," : "") << csv_quote(row[i]);
            std::cout << "\n";
        }
    } else if (opt.format == "json") {
        std::cout << nlohmann::json{{"kind", kind}, {"columns", header}, {"rows", rows}}.dump()
                  << "\n";
    } else {
        std::vector<size_t> width;
        for (const auto& row : rows)
            for (size_t i = 0; i < row.size(); ++i) {
                if (width.size() <= i) width.resize(i + 1, 0);
                width[i] = std::max(width[i], row[i].size());
            }
        for (const auto& row : rows) {
            std::string line;
            for (size_t i = 0; i < row.size(); ++i) {
                if (i) line += ' ';
                line += row[i];
                if (i + 1 < row.size()) line.append(width[i] - row[i].size(), ' ');
            }
            std::cout << line << "\n";
        }
    }
}

void run_table(const std::string& kind, int amax, int a, int b, int size,
               const OutputOptions& opt) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header;
    if (kind == "limit-b1") {
        pp::require(amax >= 2, pp::errc::out_of_range, "need --amax >= 2");
        std::vector<std::string> row;
        for (int aa = 2; aa <= amax; ++aa) {
            header.push_back("a=" + std::to_string(aa));
            row.push_back(render(pp::limit_probability(aa, 1), opt));
        }
        rows.push_back(std::move(row));
    } else if (kind == "limit-matrix") {
        pp::require(amax >= 2, pp::errc::out_of_range, "need --amax >= 2");
        for (int bb = 1; bb < amax; ++bb) header.push_back("b=" + std::to_string(bb));
        for (int aa = 2; aa <= amax; ++aa) {
            std::vector<std::string> row;
            for (int bb = 1; bb < aa; ++bb)
                row.push_back(render(pp::limit_probability(aa, bb), opt));
            rows.push_back(std::move(row));
        }
    } else {  // finite-matrix
        for (int j = 0; j < size; ++j)
            header.push_back("l2=" + std::to_string(a + j));
        auto m = pp::probability_matrix(a, b, size);
        for (const auto& r : m) {
            std::vector<std::string> row;
            for (const pp::Rational& v : r) row.push_back(render(v, opt));
            rows.push_back(std::move(row));
        }
    }
    print_rows(rows, opt, "matrix", header);
}

void run_extensions(Query& q, long limit, const OutputOptions& opt) {
    const pp::Poset& p = q.materialized_poset();
    pp::LinearExtensionStream stream(p);
    std::vector<std::vector<std::string>> rows;
    long emitted = 0;
    while (auto ext = stream.next()) {
        if (limit >= 0 && emitted >= limit) break;
        std::vector<std::string> row;
        for (int x : *ext) row.push_back(p.label(x));
        rows.push_back(std::move(row));
        ++emitted;
    }
    std::vector<std::string> header;
    for (int i = 1; i <= p.size(); ++i) header.push_back("step" + std::to_string(i));
    print_rows(rows, opt, "extensions", header);
}

// Shared counter for the verify suites: every exact equality checked is one
// identity; the first mismatch aborts with a diagnostic.
struct VerifyState {
    long identities = 0;
    bool ok = true;
    std::string failure;

    void check(bool cond, const std::string& what) {
        ++identities;
        if (!cond && ok) {
            ok = false;
            failure = what;
        }
    }
};

void verify_pair(VerifyState& st, const pp::Poset& p, int x, int y) {
    pp::BigInt fast = pp::e_blocking(p, x, y);
    st.check(fast == pp::e_with_constraint(p, x, y),
             "blocking expansion disagrees with the oracle");
    st.check(pp::split_check(p, x, y), "split identity failed");
}

int run_verify(const std::string& scope, int max_size, int max_weight, int max_two_row) {
    VerifyState st;
    if (scope == "small-posets") {
        pp::require(max_size >= 1 && max_size <= 8, pp::errc::out_of_range,
                    "--max-size must be in [1,8]");
        for (int n = 2; n <= max_size; ++n)
            for (const pp::Poset& p : pp::all_posets_up_to_iso(n))
                for (int x = 0; x < n && st.ok; ++x)
                    for (int y = x + 1; y < n; ++y)
                        if (p.incomparable(x, y)) verify_pair(st, p, x, y);
    } else if (scope == "partitions") {
        for (int w = 1; w <= max_weight; ++w)
            for (const pp::Partition& lam : pp::partitions_of_weight(w)) {
                pp::Poset p = pp::cell_poset(lam);
                pp::BigInt f = pp::f_hook(lam);
                st.check(f == pp::f_skew_aitken(pp::SkewShape(lam, pp::Partition())),
                         "hook and determinant formulas disagree");
                st.check(f == pp::f_skew_naruse(pp::SkewShape(lam, pp::Partition())),
                         "hook and excited-diagram formulas disagree");
                st.check(f == pp::count_linear_extensions(p),
                         "hook formula disagrees with lattice count");
                std::vector<pp::Cell> cells = pp::cells_of(lam);
                for (size_t i = 0; i < cells.size() && st.ok; ++i)
                    for (size_t j = i + 1; j < cells.size(); ++j) {
                        pp::Cell a = cells[i], c = cells[j];
                        if (a.dominates(c) || c.dominates(a)) continue;
                        pp::BigInt lhs = pp::e_partition(lam, a, c);
                        st.check(lhs == pp::e_blocking(p, pp::cell_index(lam, a),
                                                       pp::cell_index(lam, c)),
                                 "partition engine disagrees with generic engine");
                        if (lam.weight() <= pp::kDefaultEnumerationCap)
                            st.check(lhs == pp::e_with_constraint(p, pp::cell_index(lam, a),
                                                                  pp::cell_index(lam, c)),
                                     "partition engine disagrees with the oracle");
                    }
            }
    } else {  // two-row
        for (int l1 = 1; l1 <= max_two_row - 1; ++l1)
            for (int l2 = 1; l2 <= std::min(l1, max_two_row - l1); ++l2) {
                pp::Partition lam({l1, l2});
                pp::Poset p = pp::cell_poset(lam);
                for (int a = 2; a <= l1; ++a)
                    for (int b = 1; b < a && b <= l2 && st.ok; ++b) {
                        auto c1 = pp::TwoRowCase::make(l1, l2, {1, a}, {2, b});
                        pp::BigInt e1 = pp::e_two_row(c1);
                        st.check(e1 == pp::e_partition(lam, {1, a}, {2, b}),
                                 "two-row engine disagrees with partition engine");
                        auto bt = pp::blocking_two_row(c1);
                        std::sort(bt.begin(), bt.end());
                        st.check(bt == pp::blocking_partitions(lam, {1, a}, {2, b}),
                                 "two-row blocking set disagrees");
                        if (l1 + l2 <= pp::kDefaultEnumerationCap)
                            st.check(e1 == pp::e_with_constraint(p, pp::cell_index(lam, {1, a}),
                                                                 pp::cell_index(lam, {2, b})),
                                     "two-row engine disagrees with the oracle");
                    }
                for (int a = 1; a <= l2; ++a)
                    for (int b = a + 1; b <= l1 && st.ok; ++b) {
                        auto c2 = pp::TwoRowCase::make(l1, l2, {2, a}, {1, b});
                        st.check(pp::e_two_row(c2) == pp::e_partition(lam, {2, a}, {1, b}),
                                 "two-row engine disagrees with partition engine");
                        auto bt = pp::blocking_two_row(c2);
                        std::sort(bt.begin(), bt.end());
                        st.check(bt == pp::blocking_partitions(lam, {2, a}, {1, b}),
                                 "two-row blocking set disagrees");
                    }
            }
    }
    if (!st.ok) {
        std::cout << "FAIL: " << st.failure << "\n";
        return 1;
    }
    std::cout << "OK: " << st.identities << " identities\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact poset probabilities via blocking ideals"};
    app.require_subcommand(1);

    InputFlags in_prob, in_block, in_scan, in_ext;
    OutputOptions out_prob, out_block, out_scan, out_table, out_ext;
    std::string engine = "auto";

    auto* c_prob = app.add_subcommand("probability", "P(P; alpha < beta), exact");
    in_prob.add_to(c_prob, true);
    c_prob->add_option("--engine", engine, "Backend")
        ->check(CLI::IsMember({"auto", "generic", "partition", "two-row", "oracle"}))
        ->capture_default_str();
    add_output_flags(c_prob, out_prob);

    auto* c_block = app.add_subcommand("blocking", "List the blocking ideals");
    in_block.add_to(c_block, true);
    add_output_flags(c_block, out_block);

    bool all_pairs = false;
    auto* c_scan = app.add_subcommand("scan", "Most balanced incomparable pair");
    in_scan.add_to(c_scan, false);
    c_scan->add_flag("--all-pairs", all_pairs, "Print the full probability table");
    add_output_flags(c_scan, out_scan);

    std::string table_kind;
    int amax = 10, tbl_a = 2, tbl_b = 1, tbl_n = 10;
    auto* c_table = app.add_subcommand("table", "Reproduce the probability tables");
    c_table->add_option("kind", table_kind, "limit-b1 | limit-matrix | finite-matrix")
        ->required()
        ->check(CLI::IsMember({"limit-b1", "limit-matrix", "finite-matrix"}));
    c_table->add_option("a", tbl_a, "finite-matrix: column of alpha");
    c_table->add_option("b", tbl_b, "finite-matrix: column of beta");
    c_table->add_option("n", tbl_n, "finite-matrix: matrix size");
    c_table->add_option("--amax", amax, "limit tables: largest alpha column");
    add_output_flags(c_table, out_table);

    long ext_limit = -1;
    auto* c_ext = app.add_subcommand("extensions", "Enumerate linear extensions");
    in_ext.add_to(c_ext, false);
    c_ext->add_option("--limit", ext_limit, "Stop after this many");
    add_output_flags(c_ext, out_ext);

    std::string scope;
    int max_size = 6, max_weight = 8, max_two_row = 12;
    auto* c_verify = app.add_subcommand("verify", "Cross-check engines against the oracle");
    c_verify->add_option("scope", scope, "small-posets | partitions | two-row")
        ->required()
        ->check(CLI::IsMember({"small-posets", "partitions", "two-row"}));
    c_verify->add_option("--max-size", max_size, "small-posets: largest element count");
    c_verify->add_option("--max-weight", max_weight, "partitions: largest weight");
    c_verify->add_option("--max", max_two_row, "two-row: largest total weight");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        long cap = ideal_cap_from_env();
        auto started = std::chrono::steady_clock::now();
        OutputOptions* out = nullptr;
        if (c_prob->parsed()) {
            out = &out_prob;
            Query q = in_prob.make_query(true);
            print_probability(run_probability(q, engine, cap), out_prob);
        } else if (c_block->parsed()) {
            out = &out_block;
            Query q = in_block.make_query(true);
            run_blocking(q, out_block);
        } else if (c_scan->parsed()) {
            out = &out_scan;
            Query q = in_scan.make_query(false);
            run_scan(q, all_pairs, cap, out_scan);
        } else if (c_table->parsed()) {
            out = &out_table;
            run_table(table_kind, amax, tbl_a, tbl_b, tbl_n, out_table);
        } else if (c_ext->parsed()) {
            out = &out_ext;
            Query q = in_ext.make_query(false);
            run_extensions(q, ext_limit, out_ext);
        } else if (c_verify->parsed()) {
            return run_verify(scope, max_size, max_weight, max_two_row);
        }
        if (out && out->timing) {
            std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;
            std::cerr << "elapsed: " << elapsed.count() << "s\n";
        }
    } catch (const pp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
