// Command-line surface: knot catalog queries, Levine-Tristram signatures,
// signature profiles, and the twist-spin torus invariants.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ltsig/ltsig.hpp"

namespace {

using namespace ltsig;

enum class Format { table, csv, json };

struct RunConfig {
    std::vector<CatalogEntry> catalog;
    Format output_format = Format::table;
    bool certify = true;
    int precision_bits_start = kDefaultPrecisionBits;
};

std::string rational_str(const Rational& q) {
    return q.get_den() == 1 ? q.get_num().get_str() : format_fraction(q);
}

nlohmann::ordered_json rational_json(const Rational& q) {
    if (q.get_den() == 1 && q.get_num().fits_slong_p())
        return nlohmann::ordered_json(q.get_num().get_si());
    return nlohmann::ordered_json(format_fraction(q));
}

AlphaPoint parse_alpha(const std::string& text, const RunConfig& cfg) {
    if (text.find('/') != std::string::npos) {
        auto q = parse_fraction(text);
        if (!q) raise(errc::bad_alpha, "cannot parse rotation number '" + text + "'");
        return AlphaPoint::exact(RotationNumber::from_rational(*q));
    }
    if (text.find('.') == std::string::npos && text.find('e') == std::string::npos) {
        mpz_class z;
        if (z.set_str(text, 10) == 0)
            return AlphaPoint::exact(RotationNumber::from_rational(Rational(z)));
        raise(errc::bad_alpha, "cannot parse alpha '" + text + "'");
    }
    std::size_t pos = 0;
    double v = 0;
    try {
        v = std::stod(text, &pos);
    } catch (const std::exception&) {
        raise(errc::bad_alpha, "cannot parse alpha '" + text + "'");
    }
    if (pos != text.size()) raise(errc::bad_alpha, "cannot parse alpha '" + text + "'");
    if (cfg.certify)
        raise(errc::bad_alpha,
              "decimal alpha is uncertified; pass a rotation number q/n or use --no-certify");
    v -= std::floor(v);
    return AlphaPoint::generic(v);
}

// key=value pairs on one line (table), a two-line csv, or a json object
void emit_record(const RunConfig& cfg,
                 const std::vector<std::pair<std::string, std::string>>& fields,
                 const nlohmann::ordered_json& json_obj) {
    switch (cfg.output_format) {
        case Format::table: {
            bool first = true;
            for (const auto& [k, v] : fields) {
                if (!first) std::cout << ' ';
                std::cout << k << '=' << v;
                first = false;
            }
            std::cout << '\n';
            break;
        }
        case Format::csv: {
            for (std::size_t i = 0; i < fields.size(); ++i)
                std::cout << fields[i].first << (i + 1 < fields.size() ? "," : "\n");
            for (std::size_t i = 0; i < fields.size(); ++i)
                std::cout << fields[i].second << (i + 1 < fields.size() ? "," : "\n");
            break;
        }
        case Format::json:
            std::cout << json_obj.dump() << '\n';
            break;
    }
}

int cmd_sigma(const RunConfig& cfg, const std::string& knot_name, const std::string& alpha_text) {
    KnotSpec k = find_knot(cfg.catalog, knot_name).knot();
    AlphaPoint alpha = parse_alpha(alpha_text, cfg);
    SigResult s = signature_at(k, alpha, cfg.precision_bits_start);
    Rational avg = averaged_sigma(k, alpha, cfg.precision_bits_start);
    emit_record(cfg,
                {{"sigma", std::to_string(s.signature)},
                 {"nullity", std::to_string(s.nullity)},
                 {"averaged", rational_str(avg)},
                 {"certified", s.certified ? "true" : "false"}},
                {{"sigma", s.signature},
                 {"nullity", s.nullity},
                 {"averaged", rational_json(avg)},
                 {"certified", s.certified}});
    return 0;
}

std::string jump_location(const RootArc& j) {
    if (j.is_exact()) return j.rotation.str();
    return "interval:" + format_fraction(j.lo) + ".." + format_fraction(j.hi);
}

/// The documented profile CSV: one arc row per maximal constant stretch in
/// [0,1) (the wrap-around arc is split at rotation 0) and one jump row per
/// jump, in rotation order.  LF line endings, fractions as exact "q/n".
std::string profile_csv(const SignatureProfile& prof) {
    std::ostringstream out;
    out << "kind,start,end,value,certified\n";
    std::size_t m = prof.jumps.size();
    if (m == 0) {
        out << "arc,0/1,1/1," << prof.arc_values[0] << ",true\n";
        return out.str();
    }
    for (std::size_t i = 0; i < m; ++i) {
        std::string start = (i == 0) ? "0/1" : jump_location(prof.jumps[i - 1]);
        out << "arc," << start << "," << jump_location(prof.jumps[i]) << ","
            << prof.arc_values[i] << ",true\n";
        out << "jump," << jump_location(prof.jumps[i]) << "," << jump_location(prof.jumps[i])
            << ",";
        if (prof.jump_values[i]) out << *prof.jump_values[i];
        out << ",true\n";
    }
    out << "arc," << jump_location(prof.jumps[m - 1]) << ",1/1," << prof.arc_values[0]
        << ",true\n";
    return out.str();
}

int cmd_profile(const RunConfig& cfg, const std::string& knot_name, const std::string& out_path) {
    KnotSpec k = find_knot(cfg.catalog, knot_name).knot();
    SignatureProfile prof = profile(k, cfg.precision_bits_start);
    std::string csv = profile_csv(prof);
    {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) raise(errc::io_error, "cannot open '" + out_path + "' for writing");
        out << csv;
        if (!out) raise(errc::io_error, "write failed for '" + out_path + "'");
    }
    std::size_t arc_rows = prof.jumps.empty() ? 1 : prof.jumps.size() + 1;
    emit_record(cfg,
                {{"knot", k.name},
                 {"arcs", std::to_string(arc_rows)},
                 {"jumps", std::to_string(prof.jumps.size())},
                 {"file", out_path}},
                {{"knot", k.name},
                 {"arcs", arc_rows},
                 {"jumps", prof.jumps.size()},
                 {"file", out_path}});
    return 0;
}

int cmd_twistspin(const RunConfig& cfg, const std::string& knot_name, std::int64_t n,
                  std::int64_t d, std::int64_t k, std::int64_t lambda) {
    KnotSpec knot = find_knot(cfg.catalog, knot_name).knot();
    TwistSpinInput in(knot, n, d, k);
    CassonInput casson{lambda};
    int tss = twist_spin_sigma(in, cfg.precision_bits_start);
    Rational eqc = equivariant_casson(knot, n, casson, cfg.precision_bits_start);
    Rational rhs = fo_conjecture_rhs(in, casson, cfg.precision_bits_start);

    std::vector<std::pair<std::string, std::string>> fields = {
        {"twist_spin_sigma", std::to_string(tss)},
        {"equivariant_casson", rational_str(eqc)},
        {"fo_conjecture_rhs", rational_str(rhs)},
    };
    nlohmann::ordered_json obj{{"twist_spin_sigma", tss},
                               {"equivariant_casson", rational_json(eqc)},
                               {"fo_conjecture_rhs", rational_json(rhs)}};

    std::optional<EcheverriaRecord> rec;
    if (n == 3 && d == 5 && in.exponent == 2) {
        rec = echeverria_example(knot, cfg.precision_bits_start);
        for (auto& [key, val] :
             std::initializer_list<std::pair<std::string, int>>{
                 {"sigma_torus", rec->sigma_torus},
                 {"discrepancy_printed", rec->discrepancy_printed},
                 {"discrepancy_recomputed", rec->discrepancy_recomputed},
                 {"sigma_G", rec->sigma_g}}) {
            fields.emplace_back(key, std::to_string(val));
            obj[key] = val;
        }
        bool mismatch = rec->discrepancy_printed != rec->discrepancy_recomputed;
        fields.emplace_back("discrepancy_flag", mismatch ? "printed-ne-recomputed" : "consistent");
        obj["discrepancy_flag"] = mismatch ? "printed-ne-recomputed" : "consistent";
    }

    if (cfg.output_format == Format::table) {
        // first three quantities on one line, the comparison record on the next
        std::cout << "twist_spin_sigma=" << tss << " equivariant_casson=" << rational_str(eqc)
                  << " fo_conjecture_rhs=" << rational_str(rhs) << '\n';
        if (rec) {
            std::cout << "sigma_torus=" << rec->sigma_torus
                      << " discrepancy_printed=" << rec->discrepancy_printed
                      << " discrepancy_recomputed=" << rec->discrepancy_recomputed
                      << " sigma_G=" << rec->sigma_g << " discrepancy_flag="
                      << (rec->discrepancy_printed != rec->discrepancy_recomputed
                              ? "printed-ne-recomputed"
                              : "consistent")
                      << '\n';
        }
    } else {
        emit_record(cfg, fields, obj);
    }
    return 0;
}

int cmd_compare_fo(const RunConfig& cfg, const std::string& knot_name, std::int64_t n,
                   std::int64_t d, std::int64_t k, std::int64_t lambda) {
    KnotSpec knot = find_knot(cfg.catalog, knot_name).knot();
    TwistSpinInput in(knot, n, d, k);
    CassonInput casson{lambda};
    Rational eqc = equivariant_casson(knot, n, casson, cfg.precision_bits_start);
    int tss = twist_spin_sigma(in, cfg.precision_bits_start);
    Rational rhs = fo_conjecture_rhs(in, casson, cfg.precision_bits_start);

    std::vector<std::pair<std::string, std::string>> fields = {
        {"conjecture_rhs", rational_str(rhs)},
        {"lambda_fo_x", rational_str(eqc)},
        {"sigma_torus", std::to_string(tss)},
    };
    nlohmann::ordered_json obj{{"conjecture_rhs", rational_json(rhs)},
                               {"lambda_fo_x", rational_json(eqc)},
                               {"sigma_torus", tss}};
    if (n == 3 && d == 5 && in.exponent == 2) {
        EcheverriaRecord rec = echeverria_example(knot, cfg.precision_bits_start);
        Rational lambda_fo_torus = Rational(rec.sigma_g) + Rational(8) * eqc;
        fields.emplace_back("lambda_fo_torus_gauge", rational_str(lambda_fo_torus));
        fields.emplace_back("sigma_G", std::to_string(rec.sigma_g));
        fields.emplace_back("discrepancy_printed", std::to_string(rec.discrepancy_printed));
        fields.emplace_back("discrepancy_recomputed", std::to_string(rec.discrepancy_recomputed));
        obj["lambda_fo_torus_gauge"] = rational_json(lambda_fo_torus);
        obj["sigma_G"] = rec.sigma_g;
        obj["discrepancy_printed"] = rec.discrepancy_printed;
        obj["discrepancy_recomputed"] = rec.discrepancy_recomputed;
    }
    emit_record(cfg, fields, obj);
    return 0;
}

int cmd_catalog_list(const RunConfig& cfg) {
    switch (cfg.output_format) {
        case Format::json:
            std::cout << emit_catalog_json(cfg.catalog);
            break;
        case Format::csv:
            std::cout << "name,size,genus,alexander,source\n";
            for (const auto& e : cfg.catalog) {
                KnotSpec k = e.knot();
                std::cout << e.name << ',' << k.matrix.size() << ',' << k.genus() << ','
                          << alexander_polynomial(k).polynomial.str() << ',' << e.source << '\n';
            }
            break;
        case Format::table:
            for (const auto& e : cfg.catalog) {
                KnotSpec k = e.knot();
                std::cout << e.name << "  size=" << k.matrix.size() << " genus=" << k.genus()
                          << " alexander=" << alexander_polynomial(k).polynomial.str()
                          << " source=" << e.source << '\n';
            }
            break;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Levine-Tristram signatures of knots and twist-spun tori"};
    app.require_subcommand(1);

    std::string catalog_path;
    std::string format_name = "table";
    bool no_certify = false;
    RunConfig cfg;
    app.add_option("--catalog", catalog_path, "JSON catalog file merged with the builtins");
    app.add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    app.add_flag("--no-certify", no_certify, "Allow uncertified decimal alpha values");
    app.add_option("--precision-bits", cfg.precision_bits_start,
                   "Starting precision for certified evaluation (>= 53)")
        ->check(CLI::Range(53, 1 << 20));

    std::string knot_name, alpha_text, out_path;
    std::int64_t n = 1, d = 2, k = 2, lambda = 0;

    CLI::App* sigma = app.add_subcommand("sigma", "Signature, nullity and averaged value");
    sigma->add_option("knot", knot_name, "Catalog knot name")->required();
    sigma->add_option("alpha", alpha_text, "Rotation number q/n, or decimal with --no-certify")
        ->required();

    CLI::App* prof = app.add_subcommand("profile", "Write the signature step function as CSV");
    prof->add_option("knot", knot_name, "Catalog knot name")->required();
    prof->add_option("out", out_path, "Output CSV path")->required();

    CLI::App* tws = app.add_subcommand("twistspin", "Twist-spin torus invariants");
    tws->add_option("knot", knot_name)->required();
    tws->add_option("n", n, "Twist order (>= 1)")->required()->check(CLI::Range(std::int64_t{1}, std::int64_t{1} << 20));
    tws->add_option("d", d, "Character order, a prime power")->required();
    tws->add_option("k", k, "Character exponent")->required();
    tws->add_option("lambda", lambda, "Casson invariant of the ambient homology sphere")
        ->required();

    CLI::App* cat = app.add_subcommand("catalog", "Catalog operations");
    cat->require_subcommand(1);
    cat->add_subcommand("list", "List catalog entries");

    CLI::App* cmp = app.add_subcommand("compare-fo", "Conjectured gauge-theory comparison");
    cmp->add_option("knot", knot_name)->required();
    cmp->add_option("n", n, "Twist order")->required()->check(CLI::Range(std::int64_t{1}, std::int64_t{1} << 20));
    cmp->add_option("d", d, "Character order, a prime power")->required();
    cmp->add_option("k", k, "Character exponent (the conjecture uses 2)");
    cmp->add_option("lambda", lambda, "Casson invariant of the ambient homology sphere");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        cfg.certify = !no_certify;
        cfg.output_format = format_name == "csv"    ? Format::csv
                            : format_name == "json" ? Format::json
                                                    : Format::table;
        cfg.catalog = catalog_path.empty() ? builtin_catalog() : load_catalog(catalog_path);

        if (sigma->parsed()) return cmd_sigma(cfg, knot_name, alpha_text);
        if (prof->parsed()) return cmd_profile(cfg, knot_name, out_path);
        if (tws->parsed()) return cmd_twistspin(cfg, knot_name, n, d, k, lambda);
        if (cmp->parsed()) return cmd_compare_fo(cfg, knot_name, n, d, k, lambda);
        if (cat->parsed()) return cmd_catalog_list(cfg);
    } catch (const ltsig::Error& e) {
        std::cerr << e.what() << '\n';
        return e.exit_code();
    } catch (const std::invalid_argument& e) {
        std::cerr << "InvalidArgument: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "InternalError: " << e.what() << '\n';
        return 4;
    }
    return 0;
}
