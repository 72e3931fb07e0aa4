#include "kernelalg/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace kernelalg {

std::string kernel_to_text(const Kernel& f) {
    std::ostringstream os;
    os << "kernelalg-kernel-v1\n";
    os << "space_hash " << std::hex << f.space().hash() << std::dec << "\n";
    os << "n " << f.size() << "\n";
    os << std::setprecision(17);
    for (int i = 0; i < f.size(); ++i)
        for (int j = 0; j < f.size(); ++j)
            os << f(i, j).real() << " " << f(i, j).imag() << "\n";
    return os.str();
}

Kernel kernel_from_text(const std::string& text, DiscreteSpace::Ptr space) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line) || line != "kernelalg-kernel-v1")
        throw ConfigError("kernel document: bad schema line");
    std::string key;
    std::uint64_t hash = 0;
    int n = 0;
    is >> key >> std::hex >> hash >> std::dec;
    if (key != "space_hash") throw ConfigError("kernel document: missing space_hash");
    is >> key >> n;
    if (key != "n") throw ConfigError("kernel document: missing n");
    if (hash != space->hash()) throw SpaceMismatch("kernel document: space hash mismatch");
    if (n != space->size()) throw ConfigError("kernel document: size mismatch");

    Eigen::MatrixXcd v(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double re = 0.0, im = 0.0;
            if (!(is >> re >> im)) throw ConfigError("kernel document: truncated grid");
            v(i, j) = {re, im};
        }
    return Kernel(std::move(space), std::move(v));
}

void save_kernel(const std::string& path, const Kernel& f) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("save_kernel: cannot open " + path);
    out << kernel_to_text(f);
}

Kernel load_kernel(const std::string& path, DiscreteSpace::Ptr space) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("load_kernel: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return kernel_from_text(buf.str(), std::move(space));
}

void save_report(const std::string& path, const Report& report) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("save_report: cannot open " + path);
    out << report.to_json_string();
}

}  // namespace kernelalg
