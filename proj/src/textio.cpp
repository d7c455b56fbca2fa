#include "fcaim/textio.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "fcaim/contingency.hpp"

namespace fcaim {

std::string csv_escape(const std::string& cell) {
    if (cell.find_first_of(",\"\r\n") == std::string::npos) return cell;
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out << ',';
        out << csv_escape(cells[i]);
    }
    out << '\n';
}

std::vector<std::vector<std::string>> read_csv_table(std::istream& in) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string cell;
    bool quoted = false, cell_started = false;
    std::size_t line = 1;
    auto end_row = [&] {
        if (cell_started || !row.empty()) {
            row.push_back(cell);
            rows.push_back(std::move(row));
        }
        row.clear();
        cell.clear();
        cell_started = false;
    };
    char c;
    while (in.get(c)) {
        if (quoted) {
            if (c == '"') {
                if (in.peek() == '"') {
                    in.get(c);
                    cell += '"';
                } else {
                    quoted = false;
                }
            } else {
                if (c == '\n') ++line;
                cell += c;
            }
            continue;
        }
        switch (c) {
        case '"':
            if (!cell.empty()) throw input_error("CSV line " + std::to_string(line) + ": stray quote inside a cell");
            quoted = cell_started = true;
            break;
        case ',':
            row.push_back(cell);
            cell.clear();
            cell_started = true;
            break;
        case '\r': break;
        case '\n':
            end_row();
            ++line;
            break;
        default:
            cell += c;
            cell_started = true;
        }
    }
    if (quoted) throw input_error("CSV: unterminated quoted cell");
    end_row();
    return rows;
}

std::string read_file(const std::string& path, const std::string& what) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error(what + " not found: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void atomic_write(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw input_error("cannot write " + tmp.string());
        out << content;
        out.flush();
        if (!out) {
            out.close();
            std::remove(tmp.c_str());
            throw input_error("write failed: " + tmp.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw input_error("cannot rename " + tmp.string() + " to " + path + ": " + ec.message());
    }
}

}  // namespace fcaim
