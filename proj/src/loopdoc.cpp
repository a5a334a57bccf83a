#include "loomgen/loopdoc.hpp"

#include <sstream>

#include "json.hpp"

namespace loomgen {

namespace {

using nlohmann::json;

json rat_matrix_to_json(const RatMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

RatMatrix rat_matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty())
        throw ParseError("expected a non-empty matrix of rational strings");
    std::size_t rows = j.size(), cols = j[0].size();
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (j[i].size() != cols)
            throw ParseError("ragged matrix rows in document");
        for (std::size_t c = 0; c < cols; ++c)
            m(i, c) = rat_from_string(j[i][c].get<std::string>());
    }
    return m;
}

json int_matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix int_matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty())
        throw ParseError("expected a non-empty integer matrix");
    std::size_t rows = j.size(), cols = j[0].size();
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t c = 0; c < cols; ++c)
            m(i, c) = Int(j[i][c].get<std::string>());
    return m;
}

// "4x - 2y + 8z" from one update row; "0" for a zero row.
std::string row_expr(const RatMatrix& m, std::size_t i,
                     const std::vector<std::string>& vars) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        const Rat& c = m(i, j);
        if (c == 0) continue;
        Rat a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (a != 1) os << rat_to_string(a);
        os << vars[j];
        first = false;
    }
    if (first) return "0";
    return os.str();
}

std::string render_pseudo(const LoopDocument& doc) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < doc.vars.size(); ++i)
        os << (i ? ", " : "") << doc.vars[i];
    os << ") := (";
    for (std::size_t i = 0; i < doc.init.size(); ++i)
        os << (i ? ", " : "") << rat_to_string(doc.init[i]);
    os << ");\n";
    os << "while \u22c6 do\n";
    for (std::size_t i = 0; i < doc.vars.size(); ++i)
        os << "  " << doc.vars[i] << " := " << row_expr(doc.update, i, doc.vars) << ";\n";
    os << "end while\n";
    return os.str();
}

std::string render_c(const LoopDocument& doc) {
    const std::size_t d = doc.vars.size();
    bool integral = true;
    for (std::size_t i = 0; i < d; ++i) {
        if (doc.init[i].get_den() != 1) integral = false;
        for (std::size_t j = 0; j < d; ++j)
            if (doc.update(i, j).get_den() != 1) integral = false;
    }

    std::ostringstream os;
    os << "/* exact update:\n";
    for (std::size_t i = 0; i < d; ++i)
        os << " *   " << doc.vars[i] << " := " << row_expr(doc.update, i, doc.vars) << "\n";
    os << " * init: (";
    for (std::size_t i = 0; i < d; ++i)
        os << (i ? ", " : "") << rat_to_string(doc.init[i]);
    os << ")\n */\n";
    os << "#include <stdio.h>\n\nint main(void) {\n";
    const char* ty = integral ? "long long" : "double";
    for (std::size_t i = 0; i < d; ++i) {
        os << "    " << ty << " " << doc.vars[i] << " = ";
        if (integral)
            os << doc.init[i].get_num().get_str() << "LL";
        else
            os << "(double)" << doc.init[i].get_num().get_str() << " / "
               << doc.init[i].get_den().get_str();
        os << ";\n";
    }
    os << "    for (;;) {\n";
    for (std::size_t i = 0; i < d; ++i) {
        os << "        " << ty << " n_" << doc.vars[i] << " = ";
        bool first = true;
        for (std::size_t j = 0; j < d; ++j) {
            const Rat& c = doc.update(i, j);
            if (c == 0) continue;
            if (!first) os << " + ";
            if (integral)
                os << "(" << c.get_num().get_str() << "LL)";
            else
                os << "((double)" << c.get_num().get_str() << " / "
                   << c.get_den().get_str() << ")";
            os << " * " << doc.vars[j];
            first = false;
        }
        if (first) os << "0";
        os << ";\n";
    }
    for (std::size_t i = 0; i < d; ++i)
        os << "        " << doc.vars[i] << " = n_" << doc.vars[i] << ";\n";
    os << "        printf(\"";
    for (std::size_t i = 0; i < d; ++i) os << (i ? " " : "") << (integral ? "%lld" : "%g");
    os << "\\n\"";
    for (std::size_t i = 0; i < d; ++i) os << ", " << doc.vars[i];
    os << ");\n    }\n}\n";
    return os.str();
}

}  // namespace

LinearLoop LoopDocument::to_loop() const {
    return {vars, update, init};
}

LoopDocument document_from_report(const SynthesisReport& report) {
    LoopDocument doc;
    doc.vars = report.loop.vars;
    doc.init = report.loop.init;
    doc.update = report.loop.update;
    doc.a = report.a;
    doc.lambdas = report.lambdas;
    doc.rank = report.lattice.rank();
    doc.nontrivial = report.nontrivial;
    doc.exactness = report.exactness.level;
    if (report.transformed) doc.transform = report.transformed->first;
    return doc;
}

std::string loopdoc_to_json(const LoopDocument& doc) {
    json j;
    j["schema"] = doc.schema;
    j["vars"] = doc.vars;
    json init = json::array();
    for (const Rat& q : doc.init) init.push_back(rat_to_string(q));
    j["init"] = init;
    j["update"] = rat_matrix_to_json(doc.update);
    json meta = json::object();
    if (doc.a) meta["A"] = int_matrix_to_json(*doc.a);
    if (!doc.lambdas.empty()) {
        json ls = json::array();
        for (const Rat& q : doc.lambdas) ls.push_back(rat_to_string(q));
        meta["lambdas"] = ls;
    }
    if (doc.rank) meta["rank"] = *doc.rank;
    if (doc.nontrivial) meta["nontrivial"] = *doc.nontrivial;
    if (doc.exactness) meta["exactness"] = to_string(*doc.exactness);
    if (doc.transform) meta["transform"] = rat_matrix_to_json(*doc.transform);
    j["meta"] = meta;
    return j.dump(2) + "\n";
}

LoopDocument loopdoc_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad loop document: ") + e.what());
    }
    LoopDocument doc;
    try {
        doc.schema = j.at("schema").get<int>();
        doc.vars = j.at("vars").get<std::vector<std::string>>();
        for (const auto& s : j.at("init")) doc.init.push_back(rat_from_string(s.get<std::string>()));
        doc.update = rat_matrix_from_json(j.at("update"));
        if (j.contains("meta")) {
            const json& meta = j["meta"];
            if (meta.contains("A")) doc.a = int_matrix_from_json(meta["A"]);
            if (meta.contains("lambdas"))
                for (const auto& s : meta["lambdas"])
                    doc.lambdas.push_back(rat_from_string(s.get<std::string>()));
            if (meta.contains("rank")) doc.rank = meta["rank"].get<std::size_t>();
            if (meta.contains("nontrivial")) doc.nontrivial = meta["nontrivial"].get<bool>();
            if (meta.contains("exactness"))
                doc.exactness = exactness_from_string(meta["exactness"].get<std::string>());
            if (meta.contains("transform")) doc.transform = rat_matrix_from_json(meta["transform"]);
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad loop document: ") + e.what());
    }
    if (doc.update.rows() != doc.vars.size() || doc.update.cols() != doc.vars.size() ||
        doc.init.size() != doc.vars.size())
        throw ParseError("loop document dimensions are inconsistent");
    return doc;
}

RatMatrix transform_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad transform file: ") + e.what());
    }
    if (!j.contains("matrix"))
        throw ParseError("transform file is missing the \"matrix\" field");
    RatMatrix m = rat_matrix_from_json(j["matrix"]);
    if (m.rows() != m.cols())
        throw ParseError("transform matrix must be square");
    return m;
}

std::string render(const LoopDocument& doc, const std::string& format) {
    if (format == "pseudo") return render_pseudo(doc);
    if (format == "c") return render_c(doc);
    if (format == "json") return loopdoc_to_json(doc);
    throw UnsupportedFormat("unsupported format '" + format + "'");
}

}  // namespace loomgen
