#include "facemagic/document.hpp"

#include <fstream>
#include <sstream>

namespace facemagic {

static std::vector<int> row_sequence(int n, RowOrder order) {
    std::vector<int> rows(n);
    for (int t = 0; t < n; ++t) rows[t] = order == RowOrder::Up ? t + 1 : n - t;
    return rows;
}

std::string write_document(const LabelingDocument& doc, RowOrder order) {
    const Labeling& L = doc.labeling;
    std::ostringstream out;
    out << "m=" << L.dims.m << "\n";
    out << "n=" << L.dims.n << "\n";
    out << "surface=projective\n";
    if (doc.S) out << "S=" << *doc.S << "\n";
    if (doc.generator) out << "generator=" << *doc.generator << "\n";
    out << "\n";
    for (int j : row_sequence(L.dims.n, order)) {
        for (int i = 1; i <= L.dims.m; ++i) {
            if (i > 1) out << ' ';
            out << L.at(i, j);
        }
        out << "\n";
    }
    return out.str();
}

static int parse_int(const std::string& text, int line_no, const std::string& what) {
    try {
        std::size_t pos = 0;
        const int v = std::stoi(text, &pos);
        if (pos != text.size()) throw std::invalid_argument("trailing junk");
        return v;
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line_no) + ": bad integer for " + what + ": '" +
                         text + "'");
    }
}

LabelingDocument parse_document(const std::string& text, RowOrder order) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;

    std::optional<int> m, n, S;
    std::optional<std::string> surface, generator;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) break; // header/body separator
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("line " + std::to_string(line_no) + ": expected key=value, got '" +
                             line + "'");
        const std::string key = line.substr(0, eq), value = line.substr(eq + 1);
        auto set_once = [&](auto& slot, auto parsed) {
            if (slot) throw ParseError("line " + std::to_string(line_no) + ": duplicate key '" +
                                       key + "'");
            slot = parsed;
        };
        if (key == "m")
            set_once(m, parse_int(value, line_no, "m"));
        else if (key == "n")
            set_once(n, parse_int(value, line_no, "n"));
        else if (key == "S")
            set_once(S, parse_int(value, line_no, "S"));
        else if (key == "surface")
            set_once(surface, value);
        else if (key == "generator")
            set_once(generator, value);
        else
            throw ParseError("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
    if (!m || !n) throw ParseError("header is missing m= or n=");
    if (!surface) throw ParseError("header is missing surface=projective");
    if (*surface != "projective")
        throw ParseError("unsupported surface '" + *surface + "', expected 'projective'");
    if (*m < 2 || *n < 2) throw ParseError("dimensions must be at least 2");

    std::vector<int> labels(static_cast<std::size_t>(*m) * *n, 0);
    const std::vector<int> rows = row_sequence(*n, order);
    for (int t = 0; t < *n; ++t) {
        if (!std::getline(in, line))
            throw ParseError("expected " + std::to_string(*n) + " label rows, got " +
                             std::to_string(t));
        ++line_no;
        std::istringstream row(line);
        for (int i = 1; i <= *m; ++i) {
            std::string tok;
            if (!(row >> tok))
                throw ParseError("line " + std::to_string(line_no) + ": expected " +
                                 std::to_string(*m) + " labels in row");
            labels[(rows[t] - 1) * *m + (i - 1)] = parse_int(tok, line_no, "label");
        }
        std::string extra;
        if (row >> extra)
            throw ParseError("line " + std::to_string(line_no) + ": extra token '" + extra +
                             "' after " + std::to_string(*m) + " labels");
    }
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos)
            throw ParseError("line " + std::to_string(line_no) + ": unexpected content after "
                             "the label rows");
    }

    LabelingDocument doc;
    doc.labeling = Labeling::make(Dims::of(*m, *n), std::move(labels));
    doc.S = S;
    doc.generator = generator;
    return doc;
}

std::string write_csv(const Labeling& L, RowOrder order) {
    std::ostringstream out;
    for (int j : row_sequence(L.dims.n, order)) {
        for (int i = 1; i <= L.dims.m; ++i) {
            if (i > 1) out << ',';
            out << L.at(i, j);
        }
        out << "\n";
    }
    return out.str();
}

Labeling parse_csv(const std::string& text, RowOrder order) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::vector<int>> grid;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::vector<int> row;
        std::istringstream cells(line);
        std::string tok;
        while (std::getline(cells, tok, ',')) row.push_back(parse_int(tok, line_no, "label"));
        if (!grid.empty() && row.size() != grid.front().size())
            throw ParseError("line " + std::to_string(line_no) + ": ragged row, expected " +
                             std::to_string(grid.front().size()) + " labels");
        grid.push_back(std::move(row));
    }
    if (grid.empty()) throw ParseError("empty CSV grid");
    const int n = static_cast<int>(grid.size());
    const int m = static_cast<int>(grid.front().size());
    std::vector<int> labels(static_cast<std::size_t>(m) * n, 0);
    const std::vector<int> rows = row_sequence(n, order);
    for (int t = 0; t < n; ++t)
        for (int i = 1; i <= m; ++i) labels[(rows[t] - 1) * m + (i - 1)] = grid[t][i - 1];
    return Labeling::make(Dims::of(m, n), std::move(labels));
}

std::string render_ascii(const Labeling& L) {
    int width = 1;
    for (int v = L.dims.cells(); v >= 10; v /= 10) ++width;
    std::ostringstream out;
    for (int j = L.dims.n; j >= 1; --j) {
        for (int i = 1; i <= L.dims.m; ++i) {
            if (i > 1) out << ' ';
            const std::string s = std::to_string(L.at(i, j));
            out << std::string(width - s.size(), ' ') << s;
        }
        out << "\n";
    }
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << text;
}

} // namespace facemagic
