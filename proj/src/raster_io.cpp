#include "pathcast/raster_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "pathcast/errors.hpp"

namespace pathcast {

namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError(path.string() + ": cannot open file");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

// Reads the next whitespace-delimited header token, skipping '#' comments.
struct HeaderScanner {
    const std::string& bytes;
    std::size_t pos = 0;
    const std::string& name;

    std::string next_token() {
        while (pos < bytes.size()) {
            const char c = bytes[pos];
            if (c == '#') {
                while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos;
            } else {
                break;
            }
        }
        const std::size_t start = pos;
        while (pos < bytes.size() &&
               !std::isspace(static_cast<unsigned char>(bytes[pos])) &&
               bytes[pos] != '#') {
            ++pos;
        }
        if (start == pos) {
            throw InputError(name + ": truncated PGM header");
        }
        return bytes.substr(start, pos - start);
    }

    int next_int(const char* what) {
        const std::string tok = next_token();
        int value = 0;
        const auto [ptr, ec] =
            std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
            throw InputError(name + ": malformed PGM header (" + what + " = '" +
                             tok + "')");
        }
        return value;
    }
};

}  // namespace

ScalarField parse_pgm(const std::string& bytes, const std::string& name) {
    if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5')) {
        throw InputError(name + ": not a P2/P5 PGM file");
    }
    const bool binary = bytes[1] == '5';
    HeaderScanner scan{bytes, 2, name};
    const int width = scan.next_int("width");
    const int height = scan.next_int("height");
    const int maxval = scan.next_int("maxval");
    if (width < 1 || height < 1) {
        throw InputError(name + ": non-positive PGM dimensions");
    }
    if (maxval < 1 || maxval > 65535) {
        throw InputError(name + ": PGM maxval out of range [1, 65535]");
    }

    ScalarField field(width, height);
    const std::size_t count = field.size();
    if (binary) {
        // Exactly one whitespace byte separates the header from the payload.
        std::size_t pos = scan.pos;
        if (pos >= bytes.size() ||
            !std::isspace(static_cast<unsigned char>(bytes[pos]))) {
            throw InputError(name + ": malformed PGM header");
        }
        ++pos;
        const int bytes_per_sample = maxval < 256 ? 1 : 2;
        if (bytes.size() - pos < count * bytes_per_sample) {
            throw InputError(name + ": truncated PGM payload");
        }
        for (std::size_t i = 0; i < count; ++i) {
            unsigned v;
            if (bytes_per_sample == 1) {
                v = static_cast<unsigned char>(bytes[pos + i]);
            } else {
                v = (static_cast<unsigned char>(bytes[pos + 2 * i]) << 8) |
                    static_cast<unsigned char>(bytes[pos + 2 * i + 1]);
            }
            if (v > static_cast<unsigned>(maxval)) {
                throw InputError(name + ": PGM sample exceeds maxval");
            }
            field.values()[i] = static_cast<double>(v) / maxval;
        }
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            int v;
            try {
                v = scan.next_int("sample");
            } catch (const InputError&) {
                throw InputError(name + ": truncated PGM payload");
            }
            if (v < 0 || v > maxval) {
                throw InputError(name + ": PGM sample exceeds maxval");
            }
            field.values()[i] = static_cast<double>(v) / maxval;
        }
    }
    return field;
}

ScalarField parse_field_csv(const std::string& text, const std::string& name) {
    std::vector<std::vector<double>> rows;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        std::vector<double> row;
        std::size_t start = 0;
        while (start <= line.size()) {
            std::size_t comma = line.find(',', start);
            if (comma == std::string::npos) comma = line.size();
            std::string cell = line.substr(start, comma - start);
            const auto first = cell.find_first_not_of(" \t");
            const auto last = cell.find_last_not_of(" \t");
            if (first == std::string::npos) {
                throw InputError(name + ":" + std::to_string(line_no) +
                                 ": empty CSV cell");
            }
            cell = cell.substr(first, last - first + 1);
            double v = 0.0;
            const auto [ptr, ec] =
                std::from_chars(cell.data(), cell.data() + cell.size(), v);
            if (ec != std::errc{} || ptr != cell.data() + cell.size()) {
                throw InputError(name + ":" + std::to_string(line_no) +
                                 ": malformed CSV value '" + cell + "'");
            }
            if (!(v >= 0.0 && v <= 1.0)) {
                throw InputError(name + ":" + std::to_string(line_no) +
                                 ": value " + cell + " outside [0, 1]");
            }
            row.push_back(v);
            start = comma + 1;
        }
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw InputError(name + ":" + std::to_string(line_no) +
                             ": ragged CSV row");
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) {
        throw InputError(name + ": empty CSV raster");
    }
    ScalarField field(static_cast<int>(rows.front().size()),
                      static_cast<int>(rows.size()));
    for (int y = 0; y < field.height(); ++y) {
        for (int x = 0; x < field.width(); ++x) {
            field.at(x, y) = rows[y][x];
        }
    }
    return field;
}

ScalarField load_scalar_field(const std::filesystem::path& path) {
    const std::string bytes = read_file(path);
    if (bytes.size() >= 2 && bytes[0] == 'P' && (bytes[1] == '2' || bytes[1] == '5')) {
        return parse_pgm(bytes, path.string());
    }
    return parse_field_csv(bytes, path.string());
}

void write_pgm(const ScalarField& field, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw InputError(path.string() + ": cannot open for writing");
    }
    out << "P5\n" << field.width() << " " << field.height() << "\n255\n";
    std::string payload;
    payload.reserve(field.size());
    for (double v : field.values()) {
        const double clamped = std::clamp(v, 0.0, 1.0);
        payload.push_back(
            static_cast<char>(static_cast<std::uint8_t>(std::lround(clamped * 255.0))));
    }
    out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
    if (!out) {
        throw InputError(path.string() + ": write failed");
    }
}

void write_field_csv(const ScalarField& field, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw InputError(path.string() + ": cannot open for writing");
    }
    char buf[32];
    for (int y = 0; y < field.height(); ++y) {
        for (int x = 0; x < field.width(); ++x) {
            std::snprintf(buf, sizeof buf, "%.17g", field.at(x, y));
            out << buf << (x + 1 < field.width() ? "," : "");
        }
        out << "\n";
    }
    if (!out) {
        throw InputError(path.string() + ": write failed");
    }
}

}  // namespace pathcast
