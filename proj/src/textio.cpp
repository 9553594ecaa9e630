#include "necc/textio.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace necc {

using nlohmann::json;

namespace {

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

int parse_int(const std::string& tok, const std::string& what, int line = 0) {
    try {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        std::string where = line ? "line " + std::to_string(line) + ": " : "";
        throw ParseError(where + "expected an integer " + what + ", got '" + tok + "'");
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string drop_comment(const std::string& line) {
    size_t pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

json matrix_to_json(const ScalarMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

json generator_to_json(const PolyMatrix& g) {
    json rows = json::array();
    for (int i = 0; i < g.rows(); ++i) rows.push_back(to_string_row(g, i));
    return rows;
}

json metrics_to_json(const CodeMetrics& m) {
    json out;
    out["catastrophic"] = m.catastrophic;
    out["delta"] = m.delta;
    out["row_degrees"] = m.row_degrees;
    out["minimal_certified"] = m.minimal_certified;
    if (!m.catastrophic) {
        out["dfree"] = m.dfree;
        out["tdfree"] = m.tdfree;
    }
    return out;
}

}  // namespace

Field parse_field_token(const std::string& token) {
    std::string t = strip(token);
    size_t caret = t.find('^');
    try {
        if (caret == std::string::npos) return make_field(parse_int(t, "field size"));
        return make_field(parse_int(t.substr(0, caret), "field characteristic"),
                          parse_int(t.substr(caret + 1), "field extension degree"));
    } catch (const Error& e) {
        throw ParseError(std::string("bad field spec '") + token + "': " + e.what());
    }
}

Poly parse_poly(const std::string& text, const Field& field) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw ParseError("empty polynomial");
    std::vector<int> coeffs;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t end = s.find('+', pos);
        std::string term = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
        pos = end == std::string::npos ? s.size() + 1 : end + 1;
        if (term.empty()) throw ParseError("empty term in polynomial '" + text + "'");

        size_t i = 0;
        long coef = -1;
        if (std::isdigit(static_cast<unsigned char>(term[i]))) {
            coef = 0;
            while (i < term.size() && std::isdigit(static_cast<unsigned char>(term[i])))
                coef = coef * 10 + (term[i++] - '0');
        }
        long power = 0;
        if (i < term.size() && term[i] == 'z') {
            ++i;
            power = 1;
            if (i < term.size() && term[i] == '^') {
                ++i;
                if (i >= term.size() || !std::isdigit(static_cast<unsigned char>(term[i])))
                    throw ParseError("missing exponent in term of '" + text + "'");
                power = 0;
                while (i < term.size() && std::isdigit(static_cast<unsigned char>(term[i])))
                    power = power * 10 + (term[i++] - '0');
            }
            if (coef < 0) coef = 1;
        }
        if (coef < 0 || i != term.size())
            throw ParseError("bad term '" + term + "' in polynomial '" + text + "'");
        if (coef >= field.q())
            throw ParseError("coefficient " + std::to_string(coef) + " outside F_" +
                             std::to_string(field.q()));
        if (power > 4096) throw ParseError("polynomial degree too large");
        if (static_cast<size_t>(power) >= coeffs.size()) coeffs.resize(power + 1, 0);
        coeffs[power] = field.add(coeffs[power], static_cast<int>(coef));
    }
    return Poly(field, std::move(coeffs));
}

PolyMatrix parse_generator(const std::string& text, const Field& field) {
    std::vector<std::vector<Poly>> rows;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        line = strip(drop_comment(line));
        if (line.empty()) continue;
        if (line.front() == '[') line.erase(0, 1);
        if (!line.empty() && line.back() == ']') line.pop_back();
        std::vector<Poly> row;
        size_t pos = 0;
        while (pos <= line.size()) {
            size_t end = line.find(',', pos);
            std::string cell =
                line.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
            row.push_back(parse_poly(cell, field));
            if (end == std::string::npos) break;
            pos = end + 1;
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("generator matrix file has no rows");
    size_t cols = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != cols) throw ParseError("generator matrix rows have unequal lengths");
    std::vector<Poly> flat;
    for (auto& r : rows)
        for (auto& p : r) flat.push_back(std::move(p));
    return PolyMatrix(field, static_cast<int>(rows.size()), static_cast<int>(cols),
                      std::move(flat));
}

PolyMatrix load_generator_file(const std::string& path, const Field& field) {
    return parse_generator(read_file(path), field);
}

NetworkSpec parse_network(const std::string& text) {
    std::istringstream is(text);
    std::string raw;
    int lineno = 0;

    int p = 0, m = 0, n = -1;
    std::string source;
    std::vector<std::string> sinks;
    std::vector<std::pair<int, Edge>> edges;  // (declared index, edge)
    struct AlphaLine {
        int input, edge, val, line;
    };
    struct BetaLine {
        int ei, ej, val, line;
    };
    struct EpsLine {
        std::string sink;
        int edge, col, val, line;
    };
    std::vector<AlphaLine> alphas;
    std::vector<BetaLine> betas;
    std::vector<EpsLine> epss;

    while (std::getline(is, raw)) {
        ++lineno;
        std::string line = strip(drop_comment(raw));
        if (line.empty()) continue;
        auto tok = split_ws(line);
        const std::string& kw = tok[0];
        auto need = [&](size_t count) {
            if (tok.size() != count + 1)
                throw ParseError("line " + std::to_string(lineno) + ": '" + kw + "' takes " +
                                 std::to_string(count) + " arguments");
        };
        if (kw == "field") {
            need(2);
            p = parse_int(tok[1], "field characteristic", lineno);
            m = parse_int(tok[2], "field extension degree", lineno);
        } else if (kw == "inputs") {
            need(1);
            n = parse_int(tok[1], "input count", lineno);
        } else if (kw == "source") {
            need(1);
            source = tok[1];
        } else if (kw == "sinks") {
            if (tok.size() < 2)
                throw ParseError("line " + std::to_string(lineno) + ": sinks list is empty");
            sinks.assign(tok.begin() + 1, tok.end());
        } else if (kw == "edge") {
            need(3);
            edges.push_back({parse_int(tok[1], "edge index", lineno), Edge{tok[2], tok[3]}});
        } else if (kw == "alpha") {
            need(3);
            alphas.push_back({parse_int(tok[1], "input index", lineno),
                              parse_int(tok[2], "edge index", lineno),
                              parse_int(tok[3], "coefficient", lineno), lineno});
        } else if (kw == "beta") {
            need(3);
            betas.push_back({parse_int(tok[1], "edge index", lineno),
                             parse_int(tok[2], "edge index", lineno),
                             parse_int(tok[3], "coefficient", lineno), lineno});
        } else if (kw == "eps") {
            need(4);
            epss.push_back({tok[1], parse_int(tok[2], "edge index", lineno),
                            parse_int(tok[3], "component index", lineno),
                            parse_int(tok[4], "coefficient", lineno), lineno});
        } else {
            throw ParseError("line " + std::to_string(lineno) + ": unknown directive '" + kw +
                             "'");
        }
    }

    if (p == 0) throw ParseError("missing 'field' line");
    if (n < 0) throw ParseError("missing 'inputs' line");
    if (source.empty()) throw ParseError("missing 'source' line");
    if (sinks.empty()) throw ParseError("missing 'sinks' line");
    if (edges.empty()) throw ParseError("network file declares no edges");

    NetworkSpec spec;
    try {
        spec.field = make_field(p, m);
    } catch (const Error& e) {
        throw ParseError(std::string("bad field: ") + e.what());
    }
    spec.num_inputs = n;
    spec.source = source;
    spec.sinks = sinks;

    std::sort(edges.begin(), edges.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (size_t i = 0; i < edges.size(); ++i) {
        if (edges[i].first != static_cast<int>(i) + 1)
            throw ParseError("edge indices must be exactly 1.." + std::to_string(edges.size()) +
                             "; index " + std::to_string(edges[i].first) + " is " +
                             (edges[i].first <= static_cast<int>(i) ? "duplicated" : "missing a predecessor"));
        spec.edges.push_back(edges[i].second);
    }

    auto check_edge = [&](int e, int line) {
        if (e < 1 || e > spec.num_edges())
            throw ParseError("line " + std::to_string(line) + ": edge index " +
                             std::to_string(e) + " out of range 1.." +
                             std::to_string(spec.num_edges()));
    };
    auto check_val = [&](int v, int line) {
        if (!spec.field.is_element(v))
            throw ParseError("line " + std::to_string(line) + ": coefficient " +
                             std::to_string(v) + " outside F_" + std::to_string(spec.field.q()));
    };
    for (const auto& a : alphas) {
        check_edge(a.edge, a.line);
        check_val(a.val, a.line);
        if (a.input < 1 || a.input > n)
            throw ParseError("line " + std::to_string(a.line) + ": input index " +
                             std::to_string(a.input) + " out of range 1.." + std::to_string(n));
        spec.alpha[{a.input, a.edge}] = a.val;
    }
    for (const auto& b : betas) {
        check_edge(b.ei, b.line);
        check_edge(b.ej, b.line);
        check_val(b.val, b.line);
        spec.beta[{b.ei, b.ej}] = b.val;
    }
    for (const auto& e : epss) {
        check_edge(e.edge, e.line);
        check_val(e.val, e.line);
        if (std::find(sinks.begin(), sinks.end(), e.sink) == sinks.end())
            throw ParseError("line " + std::to_string(e.line) + ": unknown sink '" + e.sink +
                             "'");
        if (e.col < 1 || e.col > n)
            throw ParseError("line " + std::to_string(e.line) + ": component index " +
                             std::to_string(e.col) + " out of range 1.." + std::to_string(n));
        spec.eps[e.sink][{e.edge, e.col}] = e.val;
    }
    return spec;
}

NetworkSpec load_network_file(const std::string& path) { return parse_network(read_file(path)); }

std::string write_network(const NetworkSpec& spec) {
    std::ostringstream out;
    out << "field " << spec.field.p() << " " << spec.field.m() << "\n";
    out << "inputs " << spec.num_inputs << "\n";
    out << "source " << spec.source << "\n";
    out << "sinks";
    for (const auto& s : spec.sinks) out << " " << s;
    out << "\n";
    for (int i = 0; i < spec.num_edges(); ++i)
        out << "edge " << i + 1 << " " << spec.edges[i].tail << " " << spec.edges[i].head
            << "\n";
    for (const auto& [key, val] : spec.alpha)
        out << "alpha " << key.first << " " << key.second << " " << val << "\n";
    for (const auto& [key, val] : spec.beta)
        out << "beta " << key.first << " " << key.second << " " << val << "\n";
    for (const auto& [sink, coeffs] : spec.eps)
        for (const auto& [key, val] : coeffs)
            out << "eps " << sink << " " << key.first << " " << key.second << " " << val << "\n";
    return out.str();
}

ErrorPatternSet parse_patterns(const std::string& text, int num_edges) {
    std::vector<std::vector<int>> raw;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        line = strip(drop_comment(line));
        if (line.empty()) continue;
        std::vector<int> rho;
        for (const auto& tok : split_ws(line)) rho.push_back(parse_int(tok, "edge index", lineno));
        raw.push_back(std::move(rho));
    }
    if (raw.empty()) throw ParseError("pattern file declares no error patterns");
    try {
        return ErrorPatternSet::from_patterns(std::move(raw), num_edges);
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

ErrorPatternSet resolve_phi(const std::string& phi_spec, int num_edges) {
    if (phi_spec == "single-edges") return ErrorPatternSet::single_edges(num_edges);
    if (phi_spec == "upto-2-edges") return ErrorPatternSet::upto_two_edges(num_edges);
    return parse_patterns(read_file(phi_spec), num_edges);
}

// ---- Rendering ----

std::string render_matrix(const ScalarMatrix& m, const std::string& indent) {
    std::ostringstream out;
    for (int i = 0; i < m.rows(); ++i) {
        out << indent;
        for (int j = 0; j < m.cols(); ++j) {
            if (j) out << " ";
            out << m.at(i, j);
        }
        out << "\n";
    }
    return out.str();
}

std::string render_transfer(const TransferSet& ts) {
    std::ostringstream out;
    out << "field F_" << ts.field.q() << ", n = " << ts.num_inputs
        << ", |E| = " << ts.k.rows() << "\n";
    out << "A =\n" << render_matrix(ts.a);
    out << "K =\n" << render_matrix(ts.k);
    out << "F = (I-K)^-1 =\n" << render_matrix(ts.f);
    for (const auto& s : ts.sinks) {
        out << "sink " << s.sink << ":\n";
        out << "  F_T =\n" << render_matrix(s.f_t, "    ");
        out << "  M_T =\n" << render_matrix(s.m_t, "    ");
        out << "  M_T^-1 =\n" << render_matrix(s.m_t_inv, "    ");
    }
    return out.str();
}

std::string render_code_metrics(const PolyMatrix& g, const CodeMetrics& m) {
    std::ostringstream out;
    for (int i = 0; i < g.rows(); ++i) out << "generator " << to_string_row(g, i) << "\n";
    out << "rate " << g.rows() << "/" << g.cols() << "\n";
    out << "row degrees";
    for (int nu : m.row_degrees) out << " " << nu;
    out << "\ndelta " << m.delta << "\n";
    out << "catastrophic " << (m.catastrophic ? "true" : "false") << "\n";
    if (m.catastrophic) {
        out << "dfree/Tdfree suppressed (catastrophic generator)\n";
        return out.str();
    }
    if (!m.minimal_certified)
        out << "warning: minimality not certified; Tdfree computed on the given realization\n";
    out << "dfree " << m.dfree << "\n";
    out << "Tdfree " << m.tdfree << "\n";
    out << "singleton bound " << singleton_bound(g.cols(), g.rows(), m.delta) << "\n";
    return out.str();
}

std::string render_sink_table(const ConstructionReport& report) {
    const std::string h1 = "Sink", h2 = "Output convolutional code", h3 = "dfree,Tdfree",
                      h4 = "Decoding on";
    size_t w1 = h1.size(), w2 = h2.size(), w3 = h3.size();
    std::vector<std::array<std::string, 4>> rows;
    for (const auto& s : report.sinks) {
        std::string code = to_string_row(s.g_out, 0);
        std::string metrics =
            std::to_string(s.out_metrics.dfree) + "," + std::to_string(s.out_metrics.tdfree);
        std::string mode = s.mode == DecodeMode::CaseA ? "Output trellis" : "Input trellis";
        w1 = std::max(w1, s.sink.size());
        w2 = std::max(w2, code.size());
        w3 = std::max(w3, metrics.size());
        rows.push_back({s.sink, code, metrics, mode});
    }
    auto pad = [](const std::string& s, size_t w) { return s + std::string(w - s.size(), ' '); };
    std::ostringstream out;
    out << pad(h1, w1) << "  " << pad(h2, w2) << "  " << pad(h3, w3) << "  " << h4 << "\n";
    for (const auto& r : rows)
        out << pad(r[0], w1) << "  " << pad(r[1], w2) << "  " << pad(r[2], w3) << "  " << r[3]
            << "\n";
    return out.str();
}

std::string render_construction(const ConstructionReport& report) {
    std::ostringstream out;
    out << "|W_Phi| " << report.w_phi_size << "\n";
    out << "|W_s| " << report.w_s.size() << "\n";
    out << "t_s " << report.t_s << "\n";
    out << "required dfree " << report.required_dfree << "\n";
    out << "input code " << to_string_row(report.g_in, 0) << " [dfree "
        << report.in_metrics.dfree << ", Tdfree " << report.in_metrics.tdfree << "]\n";
    if (!report.in_metrics.minimal_certified)
        out << "warning: input code minimality not certified\n";
    out << "\n" << render_sink_table(report);
    return out.str();
}

std::string render_trial(const TrialReport& report) {
    std::ostringstream out;
    out << "message length " << report.message.size() << ", errors injected "
        << report.schedule.entries.size() << ", seed " << report.seed << "\n";
    for (const auto& s : report.sinks)
        out << "sink " << s.sink << ": " << (s.success ? "ok" : "FAIL") << "\n";
    return out.str();
}

std::string render_summary(const ExhaustiveSummary& summary) {
    std::ostringstream out;
    out << "trials " << summary.total_trials << " (messages " << summary.num_messages
        << ", length " << summary.message_len << ", spacing " << summary.spacing << ", "
        << (summary.paired ? "paired" : "single") << " errors, seed " << summary.seed << ")\n";
    for (const auto& s : summary.sinks)
        out << "sink " << s.sink << ": trials " << s.trials << ", failures " << s.failures
            << "\n";
    return out.str();
}

std::string json_transfer(const TransferSet& ts) {
    json out;
    out["field"] = {{"p", ts.field.p()}, {"m", ts.field.m()}, {"q", ts.field.q()}};
    out["n"] = ts.num_inputs;
    out["num_edges"] = ts.k.rows();
    out["A"] = matrix_to_json(ts.a);
    out["K"] = matrix_to_json(ts.k);
    out["F"] = matrix_to_json(ts.f);
    out["sinks"] = json::array();
    for (const auto& s : ts.sinks)
        out["sinks"].push_back({{"sink", s.sink},
                                {"F_T", matrix_to_json(s.f_t)},
                                {"M_T", matrix_to_json(s.m_t)},
                                {"M_T_inv", matrix_to_json(s.m_t_inv)}});
    return out.dump();
}

std::string json_code_metrics(const PolyMatrix& g, const CodeMetrics& m) {
    json out;
    out["generator"] = generator_to_json(g);
    out["metrics"] = metrics_to_json(m);
    if (!m.catastrophic)
        out["singleton_bound"] = singleton_bound(g.cols(), g.rows(), m.delta);
    return out.dump();
}

std::string json_construction(const ConstructionReport& report) {
    json out;
    out["w_phi_size"] = report.w_phi_size;
    out["w_s"] = report.w_s;
    out["t_s"] = report.t_s;
    out["required_dfree"] = report.required_dfree;
    out["input_code"] = generator_to_json(report.g_in);
    out["input_metrics"] = metrics_to_json(report.in_metrics);
    out["sinks"] = json::array();
    for (const auto& s : report.sinks)
        out["sinks"].push_back(
            {{"sink", s.sink},
             {"w_t", s.w_t},
             {"max_wt_weight", s.max_wt_weight},
             {"output_code", generator_to_json(s.g_out)},
             {"output_metrics", metrics_to_json(s.out_metrics)},
             {"decoding", s.mode == DecodeMode::CaseA ? "output-trellis" : "input-trellis"}});
    return out.dump();
}

std::string json_trial(const TrialReport& report) {
    json out;
    out["message"] = report.message;
    out["seed"] = report.seed;
    json entries = json::array();
    for (const auto& e : report.schedule.entries)
        entries.push_back({{"use", e.use}, {"w", e.w}});
    out["schedule"] = {{"spacing", report.schedule.spacing}, {"entries", std::move(entries)}};
    out["sinks"] = json::array();
    for (const auto& s : report.sinks)
        out["sinks"].push_back(
            {{"sink", s.sink}, {"decoded", s.decoded}, {"success", s.success}});
    return out.dump();
}

std::string json_summary(const ExhaustiveSummary& summary) {
    json out;
    out["total_trials"] = summary.total_trials;
    out["num_messages"] = summary.num_messages;
    out["message_len"] = summary.message_len;
    out["spacing"] = summary.spacing;
    out["paired"] = summary.paired;
    out["seed"] = summary.seed;
    out["sinks"] = json::array();
    for (const auto& s : summary.sinks)
        out["sinks"].push_back({{"sink", s.sink}, {"trials", s.trials}, {"failures", s.failures}});
    return out.dump();
}

}  // namespace necc
