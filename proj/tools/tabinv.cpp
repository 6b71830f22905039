// Command-line front end: parse shapes/contents/tableaux, dispatch the
// library's computations, cross-verify independent methods, and emit text,
// JSON, or CSV.  Exit status: 0 success/agreement, 1 verification mismatch,
// 2 usage error (including parse failures and exceeded enumeration caps).

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>

#include "tabinv/dyck.hpp"
#include "tabinv/enumerate.hpp"
#include "tabinv/genfun.hpp"
#include "tabinv/serialize.hpp"
#include "tabinv/tableau.hpp"

using namespace tabinv;
using nlohmann::json;

namespace {

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct mismatch_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string shape;
    std::string content;
    std::string method = "sum";
    std::string format = "text";
    std::string out;
    std::string input;
    int cap = kDefaultCap;
    bool force = false;
};

void emit(const Options& opt, const std::string& payload) {
    if (opt.out.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream f(opt.out);
    if (!f) throw usage_error("cannot open output file \"" + opt.out + "\"");
    f << payload;
}

Shape need_shape(const Options& opt) {
    if (opt.shape.empty()) throw usage_error("--shape is required for this command");
    return parse_shape(opt.shape);
}

Content content_or_standard(const Options& opt, const Shape& shape) {
    Content c = opt.content.empty() ? Content::standard(shape.size())
                                    : parse_content(opt.content);
    if (c.size() != shape.size())
        throw usage_error("content total " + std::to_string(c.size()) +
                          " does not match shape size " + std::to_string(shape.size()));
    return c;
}

Filling read_tableau(const Options& opt) {
    std::string text;
    if (!opt.input.empty()) {
        std::ifstream f(opt.input);
        if (!f) throw usage_error("cannot open tableau file \"" + opt.input + "\"");
        std::ostringstream buf;
        buf << f.rdbuf();
        text = buf.str();
    } else {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    }
    return parse_filling_text(text);
}

std::string poly_csv(const QPolynomial& p) {
    std::ostringstream out;
    out << "k,coeff\n";
    for (int k = 0; k <= std::max(p.degree(), 0); ++k) out << k << "," << p.coeff(k) << "\n";
    return out.str();
}

std::string poly_payload(const Options& opt, const QPolynomial& p, const std::string& label) {
    if (opt.format == "json") {
        json j = qpoly_to_json(p);
        j["what"] = label;
        if (!opt.shape.empty()) j["shape"] = parse_shape(opt.shape).parts;
        return j.dump(2) + "\n";
    }
    if (opt.format == "csv") return poly_csv(p);
    return label + " = " + p.to_string() + "\n";
}

// closed-form dispatch: two-row shapes, and rectangular two-column shapes
// with standard content
QPolynomial xi_closed(const Shape& shape, const Content& content, std::string* name) {
    if (shape.num_rows() <= 2) {
        long a = shape.parts[0];
        long b = shape.num_rows() == 2 ? shape.parts[1] : 0;
        if (b == 0) {
            // one row: the empty-second-row case of the two-row form
            if (name) *name = "two_row";
            return content.is_standard() && content.size() == a ? QPolynomial::one()
                                                                : QPolynomial{};
        }
        if (name) *name = "two_row";
        return two_row_xi(a, b, content);
    }
    if (shape.num_cols() == 2 && shape.col_height(2) == shape.num_rows() &&
        content.is_standard()) {
        if (name) *name = "two_col_rect";
        return two_col_rect_xi(shape.num_rows());
    }
    throw usage_error("no closed form for this shape/content");
}

int cmd_chi(const Options& opt) {
    Filling T = read_tableau(opt);
    emit(opt, poly_payload(opt, chi(T), "chi"));
    return 0;
}

int cmd_xi(const Options& opt) {
    Shape shape = need_shape(opt);
    Content content = content_or_standard(opt, shape);
    QPolynomial xi;
    if (opt.method == "sum") {
        xi = xi_by_sum_parallel(shape, content);
    } else if (opt.method == "closed") {
        xi = xi_closed(shape, content, nullptr);
    } else if (opt.method == "dyck") {
        if (!content.is_standard())
            throw usage_error("--method dyck requires standard content");
        xi = xi_via_returns(shape, std::max(opt.cap, 14), opt.force);
    } else {
        throw usage_error("unknown method \"" + opt.method + "\" (sum | closed | dyck)");
    }
    emit(opt, poly_payload(opt, xi, "xi"));
    return 0;
}

int cmd_hist(const Options& opt) {
    Shape shape = need_shape(opt);
    Content content = content_or_standard(opt, shape);
    InversionHistogram h = histogram_parallel(shape, content, opt.cap, opt.force);
    if (opt.format == "json")
        emit(opt, histogram_to_json(h, shape, content).dump(2) + "\n");
    else if (opt.format == "csv")
        emit(opt, histogram_to_csv(h));
    else {
        std::ostringstream out;
        out << "inversions  count\n";
        for (const auto& [k, c] : h.counts) out << k << "  " << c.get_str() << "\n";
        out << "total  " << h.total().get_str() << "\n";
        emit(opt, out.str());
    }
    return 0;
}

int cmd_tables(const Options& opt) {
    if (opt.shape.empty()) {
        // the Catalan triangle of ballot numbers
        auto tri = catalan_triangle(10);
        if (opt.format == "json") {
            json rows = json::array();
            for (const auto& row : tri) {
                json r = json::array();
                for (const auto& v : row) r.push_back(to_json(v));
                rows.push_back(r);
            }
            emit(opt, json{{"catalan_triangle", rows}}.dump(2) + "\n");
        } else {
            std::ostringstream out;
            for (const auto& row : tri) {
                for (std::size_t b = 0; b < row.size(); ++b)
                    out << (b ? " " : "") << row[b].get_str();
                out << "\n";
            }
            emit(opt, out.str());
        }
        return 0;
    }
    Shape shape = parse_shape(opt.shape);
    auto table = return_table(shape, std::max(opt.cap, 14), opt.force);
    if (opt.format == "json") {
        json j = return_table_to_json(table, shape);
        json full = json::object();
        for (const auto& [k, c] : full_return_table(shape, std::max(opt.cap, 14), opt.force))
            full[std::to_string(k)] = to_json(c);
        j["full_returns"] = full;
        emit(opt, j.dump(2) + "\n");
    } else {
        std::ostringstream out;
        out << "return profile (k_1..k_{m-1})  count\n";
        for (const auto& [profile, count] : table) {
            for (std::size_t d = 0; d < profile.k.size(); ++d)
                out << (d ? "," : "") << profile.k[d];
            if (profile.k.empty()) out << "-";
            out << "  " << count.get_str() << "\n";
        }
        emit(opt, out.str());
    }
    return 0;
}

int cmd_dyck(const Options& opt) {
    Shape shape = need_shape(opt);
    if (!opt.force && shape.size() > std::max(opt.cap, 14))
        throw cap_exceeded(shape.size(), std::max(opt.cap, 14));
    if (opt.format == "json") {
        json arr = json::array();
        enumerate_paths(shape.parts, [&](const DyckPath& p) {
            arr.push_back(json{{"steps", p.steps},
                               {"profile", return_profile(p).k},
                               {"full_returns", full_returns(p)}});
        });
        emit(opt, json{{"lambda", shape.parts}, {"paths", arr}}.dump(2) + "\n");
    } else {
        std::ostringstream out;
        enumerate_paths(shape.parts, [&](const DyckPath& p) {
            out << path_to_text(p) << "  full_returns=" << full_returns(p) << "\n";
        });
        emit(opt, out.str());
    }
    return 0;
}

int cmd_verify(const Options& opt) {
    Shape shape = need_shape(opt);
    Content content = content_or_standard(opt, shape);

    std::vector<std::pair<std::string, QPolynomial>> results;
    results.emplace_back("sum", xi_by_sum(shape, content));
    results.emplace_back("parallel", xi_by_sum_parallel(shape, content));
    if (content.is_standard())
        results.emplace_back("dyck", xi_via_returns(shape, std::max(opt.cap, 14), true));
    try {
        std::string name;
        QPolynomial closed = xi_closed(shape, content, &name);
        results.emplace_back(name, closed);
    } catch (const usage_error&) {
        // no applicable closed form; fine
    }
    if (opt.force || shape.size() <= opt.cap) {
        QPolynomial brute;
        for (const auto& [k, c] : histogram(shape, content, opt.cap, true).counts) {
            std::vector<mpz_class> mono(k + 1, mpz_class(0));
            mono[k] = c;
            brute += QPolynomial(std::move(mono));
        }
        results.emplace_back("brute", brute);
    }

    std::ostringstream names;
    for (std::size_t i = 0; i < results.size(); ++i)
        names << (i ? " == " : "") << results[i].first;
    for (std::size_t i = 1; i < results.size(); ++i) {
        if (results[i].second == results[0].second) continue;
        int dmax = std::max(results[0].second.degree(), results[i].second.degree());
        for (int k = 0; k <= dmax; ++k)
            if (results[0].second.coeff(k) != results[i].second.coeff(k))
                throw mismatch_error(results[0].first + " vs " + results[i].first +
                                     " first differ at q^" + std::to_string(k) + ": " +
                                     results[0].second.coeff(k).get_str() + " vs " +
                                     results[i].second.coeff(k).get_str());
    }
    emit(opt, names.str() + ": OK\n" + "xi = " + results[0].second.to_string() + "\n");
    return 0;
}

int cmd_depths(const Options& opt) {
    Shape shape = need_shape(opt);
    int n = shape.num_rows();
    int m = shape.col_height(2);
    if (shape.num_cols() > 2)
        throw usage_error("depths requires a shape of the form 2^m 1^(n-m)");
    auto seqs = depth_sequences(n, m);
    if (opt.format == "json") {
        json arr = json::array();
        for (const auto& c : seqs)
            arr.push_back(json{{"depths", c},
                               {"tableau", filling_to_json(tableau_from_depths(c, m))}});
        emit(opt, json{{"lambda", shape.parts}, {"sequences", arr}}.dump(2) + "\n");
    } else {
        std::ostringstream out;
        for (const auto& c : seqs) {
            for (std::size_t i = 0; i < c.size(); ++i) out << (i ? "," : "") << c[i];
            out << "\n" << filling_to_text(tableau_from_depths(c, m)) << "\n";
        }
        out << seqs.size() << " sequences\n";
        emit(opt, out.str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact inversion statistics for (semi)standard Young tableaux"};
    app.require_subcommand(1);

    Options opt;
    std::map<std::string, int (*)(const Options&)> handlers;
    auto add = [&](const std::string& verb, const std::string& desc,
                   int (*fn)(const Options&)) {
        CLI::App* sub = app.add_subcommand(verb, desc);
        sub->add_option("--shape", opt.shape, "partition, e.g. 4,4,3,2 or 2^3");
        sub->add_option("--content", opt.content, "content, e.g. 1^2,2^2,3 (default standard)");
        sub->add_option("--method", opt.method, "xi method: sum | closed | dyck");
        sub->add_option("--format", opt.format, "output format: text | json | csv")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--out", opt.out, "write output to this file");
        sub->add_option("--cap", opt.cap, "enumeration cap on N = |shape|")
            ->envname("TABINV_CAP");
        sub->add_flag("--force", opt.force, "override the enumeration cap");
        sub->add_option("--input", opt.input, "tableau file (chi); stdin otherwise");
        handlers[verb] = fn;
        return sub;
    };
    add("chi", "generating function for a fixed standardization", cmd_chi);
    add("xi", "generating function for a shape and content", cmd_xi);
    add("hist", "brute-force inversion histogram", cmd_hist);
    add("tables", "Catalan triangle or return tables for a shape", cmd_tables);
    add("dyck", "enumerate lattice paths with return statistics", cmd_dyck);
    add("verify", "cross-check every applicable method", cmd_verify);
    add("depths", "valid depth sequences for two-column shapes", cmd_depths);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        return handlers.at(app.get_subcommands().front()->get_name())(opt);
    } catch (const mismatch_error& e) {
        std::cerr << "MISMATCH: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
