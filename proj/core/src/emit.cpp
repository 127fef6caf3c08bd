#include <residua/emit.hpp>

#include <json.hpp>

#include <sstream>

namespace residua {

namespace {

using json = nlohmann::json;

std::string rat_str(const Rat& x) { return to_string(x); }

json vec_json(const QVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(rat_str(x));
    return a;
}

json forms_json(const std::vector<LinForm>& forms, const std::vector<std::string>& names) {
    json a = json::array();
    for (const auto& f : forms) a.push_back(to_string(f, names));
    return a;
}

std::string vec_str(const QVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += rat_str(v[i]);
    }
    s += ")";
    return s;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += sep;
        s += parts[i];
    }
    return s;
}

// | a | b | c |
std::string md_row(const std::vector<std::string>& cells) {
    std::string s = "|";
    for (const auto& c : cells) {
        s += ' ';
        s += c;
        s += " |";
    }
    s += '\n';
    return s;
}

std::string md_rule(std::size_t ncols) {
    std::string s = "|";
    for (std::size_t i = 0; i < ncols; ++i) s += " --- |";
    s += '\n';
    return s;
}

std::string finish(const json& j) { return j.dump(2) + "\n"; }

std::vector<std::string> simple_headers(const RootSystem& rs) {
    std::vector<std::string> h;
    for (int i = 1; i <= rs.rank; ++i) h.push_back("alpha_" + std::to_string(i));
    return h;
}

json multiplicity_json(const std::vector<std::pair<std::string, long>>& families) {
    json a = json::array();
    for (const auto& [label, mult] : families) a.push_back({{"label", label}, {"count", mult}});
    return a;
}

std::string multiplicity_str(const std::vector<std::pair<std::string, long>>& families) {
    std::vector<std::string> parts;
    for (const auto& [label, mult] : families)
        parts.push_back(mult == 1 ? label : label + " (x" + std::to_string(mult) + ")");
    return join(parts, "; ");
}

}  // namespace

EmitFormat parse_emit_format(std::string_view text) {
    if (text == "md") return EmitFormat::md;
    if (text == "json") return EmitFormat::json;
    throw std::domain_error("unknown format '" + std::string(text) + "' (expected md or json)");
}

std::string emit_families(const RootSystem& rs, const std::vector<GenericFamily>& fams,
                          EmitFormat fmt) {
    if (fmt == EmitFormat::json) {
        json j;
        j["type"] = rs.label();
        j["params"] = rs.param_names;
        json rows = json::array();
        for (const auto& f : fams) {
            json row;
            row["label"] = f.label;
            json sv = json::array();
            for (const auto& alpha : rs.simple)
                sv.push_back(to_string(alpha_value(alpha, f.coords), rs.param_names));
            row["simple_values"] = sv;
            row["coords"] = forms_json(f.coords, rs.param_names);
            rows.push_back(std::move(row));
        }
        j["families"] = std::move(rows);
        return finish(j);
    }
    std::string out;
    std::vector<std::string> header{"family"};
    for (const auto& h : simple_headers(rs)) header.push_back(h);
    out += md_row(header);
    out += md_rule(header.size());
    for (const auto& f : fams) {
        std::vector<std::string> cells{f.label};
        for (const auto& alpha : rs.simple)
            cells.push_back(to_string(alpha_value(alpha, f.coords), rs.param_names));
        out += md_row(cells);
    }
    return out;
}

std::string emit_regularity(const RootSystem& rs, const std::vector<GenericFamily>& fams,
                            EmitFormat fmt) {
    if (fmt == EmitFormat::json) {
        json j;
        j["type"] = rs.label();
        j["params"] = rs.param_names;
        json rows = json::array();
        for (const auto& f : fams)
            rows.push_back({{"label", f.label}, {"singular", forms_json(f.singular, rs.param_names)}});
        j["families"] = std::move(rows);
        return finish(j);
    }
    std::string out;
    out += md_row({"family", "singular locus"});
    out += md_rule(2);
    for (const auto& f : fams) {
        std::vector<std::string> forms;
        for (const auto& h : f.singular) forms.push_back(to_string(h, rs.param_names));
        out += md_row({f.label, forms.empty() ? "-" : join(forms, ", ")});
    }
    return out;
}

std::string emit_confluence(const RootSystem& rs, const QVec& kval,
                            const std::vector<ConfluenceRow>& rows, EmitFormat fmt) {
    if (fmt == EmitFormat::json) {
        json j;
        j["type"] = rs.label();
        j["k"] = vec_json(kval);
        json out = json::array();
        for (const auto& r : rows)
            out.push_back({{"dominant", vec_json(r.dominant)},
                           {"simple_values", vec_json(r.simple_values)},
                           {"families", r.labels}});
        j["rows"] = std::move(out);
        return finish(j);
    }
    std::string out;
    std::vector<std::string> header = simple_headers(rs);
    header.push_back("families");
    out += md_row(header);
    out += md_rule(header.size());
    for (const auto& r : rows) {
        std::vector<std::string> cells;
        for (const auto& x : r.simple_values) cells.push_back(rat_str(x));
        cells.push_back(join(r.labels, "; "));
        out += md_row(cells);
    }
    return out;
}

std::string emit_evaluation(const RootSystem& rs, const QVec& kval,
                            const std::vector<std::pair<std::string, QVec>>& values,
                            EmitFormat fmt) {
    if (fmt == EmitFormat::json) {
        json j;
        j["type"] = rs.label();
        j["k"] = vec_json(kval);
        json rows = json::array();
        for (const auto& [label, dom] : values)
            rows.push_back({{"label", label}, {"value", vec_json(dom)}});
        j["families"] = std::move(rows);
        return finish(j);
    }
    std::string out;
    out += md_row({"family", "xi(k)"});
    out += md_rule(2);
    for (const auto& [label, dom] : values) out += md_row({label, vec_str(dom)});
    return out;
}

std::string emit_fibers(long n, const Rat& m,
                        const std::vector<std::pair<QVec, std::vector<std::string>>>& rows,
                        EmitFormat fmt) {
    if (fmt == EmitFormat::json) {
        json j;
        j["n"] = n;
        j["m"] = rat_str(m);
        json out = json::array();
        for (const auto& [coords, fiber] : rows)
            out.push_back({{"diagram", vec_json(coords)}, {"fiber", fiber}});
        j["rows"] = std::move(out);
        return finish(j);
    }
    std::string out;
    for (const auto& [coords, fiber] : rows) {
        std::string line = "(";
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (i) line += ",";
            line += rat_str(coords[i]);
        }
        line += "): ";
        std::vector<std::string> parts;
        for (const auto& lam : fiber) parts.push_back("(" + lam + ")");
        line += join(parts, ",");
        out += line + "\n";
    }
    return out;
}

std::string emit_graded_count(const RootSystem& rs, const QVec& kval, const GradedCount& count,
                              EmitFormat fmt) {
    if (fmt == EmitFormat::json) {
        json j;
        j["type"] = rs.label();
        j["k"] = vec_json(kval);
        j["families"] = multiplicity_json(count.families);
        j["total"] = count.total;
        return finish(j);
    }
    std::string out;
    out += md_row({"family", "count"});
    out += md_rule(2);
    for (const auto& [label, mult] : count.families)
        out += md_row({label, std::to_string(mult)});
    out += "\ntotal: " + std::to_string(count.total) + "\n";
    return out;
}

std::string emit_gcc(const RootSystem& rs, const QVec& kval, const std::vector<GccRow>& rows,
                     EmitFormat fmt) {
    if (fmt == EmitFormat::json) {
        json j;
        j["type"] = rs.label();
        j["k"] = vec_json(kval);
        json out = json::array();
        long total = 0;
        for (const auto& r : rows) {
            out.push_back({{"dominant", vec_json(r.dominant)},
                           {"simple_values", vec_json(r.simple_values)},
                           {"families", multiplicity_json(r.families)},
                           {"weight", r.weight}});
            total += r.weight;
        }
        j["rows"] = std::move(out);
        j["total"] = total;
        return finish(j);
    }
    std::string out;
    std::vector<std::string> header = simple_headers(rs);
    header.push_back("families");
    header.push_back("weight");
    out += md_row(header);
    out += md_rule(header.size());
    long total = 0;
    for (const auto& r : rows) {
        std::vector<std::string> cells;
        for (const auto& x : r.simple_values) cells.push_back(rat_str(x));
        cells.push_back(multiplicity_str(r.families));
        cells.push_back(std::to_string(r.weight));
        total += r.weight;
        out += md_row(cells);
    }
    out += "\ntotal: " + std::to_string(total) + "\n";
    return out;
}

std::string emit_mfunctions(const RootSystem& rs, const std::vector<MfunEntry>& entries,
                            const QVec& fval, const Rat& q, EmitFormat fmt) {
    std::vector<std::string> names = log_param_names(rs);
    bool any_eval = false;
    for (const auto& e : entries) any_eval = any_eval || e.eval.has_value();
    if (fmt == EmitFormat::json) {
        json j;
        j["type"] = rs.label();
        j["params"] = names;
        if (any_eval) {
            j["f"] = vec_json(fval);
            j["q"] = rat_str(q);
        }
        json fams = json::array();
        for (const auto& entry : entries) {
            json row;
            row["label"] = entry.label;
            json sh;
            json zero = json::array(), pm = json::array(), pp = json::array();
            for (const auto& a : entry.shape.zero) zero.push_back(vec_json(a));
            for (const auto& a : entry.shape.pole_minus) pm.push_back(vec_json(a));
            for (const auto& a : entry.shape.pole_plus) pp.push_back(vec_json(a));
            sh["zero"] = std::move(zero);
            sh["pole_minus"] = std::move(pm);
            sh["pole_plus"] = std::move(pp);
            row["shape"] = std::move(sh);
            json m;
            m["scalar"] = rat_str(entry.canon.scalar);
            m["leading"] = to_string(entry.canon.leading, names);
            auto factors = [&](const std::vector<CanonicalFactor>& fs) {
                json a = json::array();
                for (const auto& f : fs)
                    a.push_back({{"expo", to_string(f.expo, names)}, {"offset", f.offset}});
                return a;
            };
            m["numerator"] = factors(entry.canon.numerator);
            m["denominator"] = factors(entry.canon.denominator);
            m["text"] = to_string(entry.canon, names);
            row["m"] = std::move(m);
            if (entry.eval) {
                json e;
                e["num_order"] = entry.eval->num_order;
                e["den_order"] = entry.eval->den_order;
                e["sign"] = entry.eval->sign;
                e["exact"] = entry.eval->exact;
                if (entry.eval->exact) e["value"] = rat_str(entry.eval->value);
                e["approx"] = entry.eval->approx;
                row["evaluation"] = std::move(e);
            }
            fams.push_back(std::move(row));
        }
        j["families"] = std::move(fams);
        return finish(j);
    }
    std::string out;
    auto root_list = [&](const std::vector<QVec>& roots) {
        std::vector<std::string> parts;
        for (const auto& a : roots) parts.push_back(vec_str(a));
        return parts.empty() ? std::string("-") : join(parts, ", ");
    };
    bool first = true;
    for (const auto& entry : entries) {
        if (!first) out += "\n";
        first = false;
        out += "family: " + entry.label + "\n";
        out += "zero roots: " + root_list(entry.shape.zero) + "\n";
        out += "order-one poles: " + root_list(entry.shape.pole_minus) + "\n";
        if (!entry.shape.pole_plus.empty())
            out += "mirror poles: " + root_list(entry.shape.pole_plus) + "\n";
        out += "m = " + to_string(entry.canon, names) + "\n";
        if (entry.eval) {
            std::ostringstream line;
            line << "at f = " << vec_str(fval) << ", q = " << rat_str(q) << ": ";
            line << "orders (" << entry.eval->num_order << ", " << entry.eval->den_order << "), ";
            if (entry.eval->exact)
                line << "m = " << rat_str(entry.eval->value);
            else
                line << "m ~= " << entry.eval->approx;
            line << "\n";
            out += line.str();
        }
    }
    return out;
}

std::string emit_affine_count(const AffineDatum& datum, const QVec& fval,
                              const AffineCount& count, EmitFormat fmt) {
    if (fmt == EmitFormat::json) {
        json j;
        j["datum"] = datum.label();
        j["params"] = datum.params;
        j["f"] = vec_json(fval);
        json vs = json::array();
        for (const auto& v : count.vertices) {
            json ke = json::array();
            for (const auto& [factor, kv] : v.k_e)
                ke.push_back({{"factor", factor}, {"k", vec_json(kv)}});
            vs.push_back({{"vertex", v.vertex},
                          {"subsystem", v.subsystem},
                          {"k_e", std::move(ke)},
                          {"count", v.count}});
        }
        j["vertices"] = std::move(vs);
        j["total"] = count.total;
        return finish(j);
    }
    std::string out;
    out += md_row({"vertex", "subsystem", "k_e", "count"});
    out += md_rule(4);
    for (const auto& v : count.vertices) {
        std::vector<std::string> parts;
        for (const auto& [factor, kv] : v.k_e) parts.push_back(factor + ": " + vec_str(kv));
        out += md_row({v.vertex, v.subsystem, parts.empty() ? "-" : join(parts, "; "),
                       std::to_string(v.count)});
    }
    out += "\ntotal: " + std::to_string(count.total) + "\n";
    return out;
}

std::string emit_spectral_diagram(const SpectralDiagram& diagram, EmitFormat fmt) {
    const auto& names = diagram.datum.params;
    if (fmt == EmitFormat::json) {
        json j;
        j["datum"] = diagram.datum.label();
        j["params"] = names;
        json ns = json::array();
        for (const auto& n : diagram.nodes) {
            json adj = json::array();
            for (int a : n.adjacent) adj.push_back(a);
            ns.push_back({{"index", n.index},
                          {"root", vec_json(n.root)},
                          {"weight", to_string(n.weight, names)},
                          {"adjacent", std::move(adj)},
                          {"fold_image", n.fold_image}});
        }
        j["nodes"] = std::move(ns);
        return finish(j);
    }
    std::string out;
    out += md_row({"node", "root", "weight", "adjacent", "fold"});
    out += md_rule(5);
    for (const auto& n : diagram.nodes) {
        std::vector<std::string> adj;
        for (int a : n.adjacent) adj.push_back(std::to_string(a));
        out += md_row({std::to_string(n.index), vec_str(n.root), to_string(n.weight, names),
                       join(adj, ", "), std::to_string(n.fold_image)});
    }
    return out;
}

std::string emit_report(const SuiteReport& report, EmitFormat fmt) {
    if (fmt == EmitFormat::json) {
        json j;
        j["suite"] = report.suite;
        json checks = json::array();
        for (const auto& c : report.checks)
            checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        j["checks"] = std::move(checks);
        j["all_pass"] = report.all_pass;
        return finish(j);
    }
    std::string out;
    long passed = 0;
    for (const auto& c : report.checks) {
        out += (c.pass ? "[PASS] " : "[FAIL] ");
        out += c.name + ": " + c.detail + "\n";
        if (c.pass) ++passed;
    }
    out += "suite " + report.suite + ": " + (report.all_pass ? "PASS" : "FAIL") + " (" +
           std::to_string(passed) + "/" + std::to_string(report.checks.size()) + " checks)\n";
    return out;
}

}  // namespace residua
