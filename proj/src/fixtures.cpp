#include "lee/fixtures.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lee {

Matrix4 case1_fixture_S() {
    Matrix4 s;
    s << -std::sqrt(5.0 / 7.0), -std::sqrt(1.0 / 35.0), 0.0, 3.0 / std::sqrt(35.0),
         0.0, 3.0 / std::sqrt(10.0), 0.0, 1.0 / std::sqrt(10.0),
         0.0, 0.0, 1.0, 0.0,
         std::sqrt(2.0 / 7.0), -1.0 / std::sqrt(14.0), 0.0, 3.0 / std::sqrt(14.0);
    return s;
}

Vector4 case1_eigenvalues() {
    Vector4 e;
    e << 8.0 / 3.0, 1.0, 1.0, 1.0 / 3.0;
    return e;
}

Matrix4 case2_fixture_S() {
    const double s17 = std::sqrt(17.0);
    const double s2 = std::sqrt(2.0);
    const double up = std::sqrt(51.0 + 12.0 * s17);
    const double um = std::sqrt(51.0 - 12.0 * s17);
    Matrix4 s;
    s << -(3.0 + s17) / (2.0 * up), -(4.0 + s17) / up, (5.0 + s17) / (2.0 * up), 1.0 / up,
         -0.5 * std::sqrt((2.0 / 3.0) * (2.0 + s2)),
         0.5 * (s2 - 1.0) * std::sqrt((2.0 + s2) / 3.0),
         0.5 * (1.0 - s2) * std::sqrt((2.0 / 3.0) * (2.0 + s2)),
         0.5 * std::sqrt((2.0 + s2) / 3.0),
         (-3.0 + s17) / (2.0 * um), (-4.0 + s17) / um, (5.0 - s17) / (2.0 * um), 1.0 / um,
         1.0 / std::sqrt(3.0 * (2.0 + s2)),
         -(s2 + 1.0) / std::sqrt(6.0 * (2.0 + s2)),
         -(s2 + 1.0) / std::sqrt(3.0 * (2.0 + s2)),
         1.0 / std::sqrt(6.0 * (2.0 + s2));
    return s;
}

Vector4 case2_eigenvalues() {
    const double s17 = std::sqrt(17.0);
    const double s2 = std::sqrt(2.0);
    Vector4 e;
    e << 0.5 * (5.0 + s17), 1.0 + s2, 0.5 * (5.0 - s17), 1.0 - s2;
    return e;
}

Matrix4 load_matrix4(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture file: " + path);
    Matrix4 m;
    int row = 0;
    std::string line;
    while (row < 4 && std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        for (int col = 0; col < 4; ++col) {
            if (!(ls >> m(row, col))) {
                throw std::runtime_error("malformed fixture row in: " + path);
            }
        }
        ++row;
    }
    if (row < 4) throw std::runtime_error("fixture file too short: " + path);
    return m;
}

void save_matrix4(const std::string& path, const Matrix4& m, const std::string& comment) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write fixture file: " + path);
    if (!comment.empty()) out << "# " << comment << "\n";
    char buf[32];
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            std::snprintf(buf, sizeof(buf), "%.17g", m(r, c));
            out << buf << (c == 3 ? "\n" : " ");
        }
    }
}

}  // namespace lee
