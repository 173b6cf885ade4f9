#include "koszul/tensor_io.hpp"

#include <charconv>
#include <set>
#include <sstream>
#include <vector>

#include "koszul/flattening.hpp"

namespace koszul {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& message) {
    throw std::runtime_error("tensor document, line " + std::to_string(line) + ": " + message);
}

std::vector<std::string> tokenize(std::string_view line) {
    std::vector<std::string> tokens;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
        if (pos >= line.size() || line[pos] == '#') break;
        std::size_t start = pos;
        while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != '\r' &&
               line[pos] != '#') {
            ++pos;
        }
        tokens.emplace_back(line.substr(start, pos - start));
    }
    return tokens;
}

int parse_index(const std::string& token, std::size_t line) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || value < 1) {
        fail(line, "expected a positive index, got \"" + token + "\"");
    }
    return value;
}

}  // namespace

Tensor3 parse_tensor(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;

    // Header.
    std::vector<std::string> header;
    while (std::getline(in, line)) {
        ++line_no;
        header = tokenize(line);
        if (!header.empty()) break;
    }
    if (header.size() != 4 || header[0] != "tensor" || header[1] != "v1" ||
        header[2].rfind("field=", 0) != 0 || header[3].rfind("dims=", 0) != 0) {
        fail(line_no, "expected header \"tensor v1 field=<F> dims=<a>x<b>x<c>\"");
    }

    FieldSpec field = FieldSpec::rationals();
    try {
        field = FieldSpec::parse(header[2].substr(6));
    } catch (const std::invalid_argument& e) {
        fail(line_no, e.what());
    }

    std::size_t dims[3] = {0, 0, 0};
    {
        std::string spec = header[3].substr(5);
        std::size_t first = spec.find('x');
        std::size_t second = first == std::string::npos ? std::string::npos : spec.find('x', first + 1);
        if (second == std::string::npos) fail(line_no, "malformed dims \"" + spec + "\"");
        std::string parts[3] = {spec.substr(0, first), spec.substr(first + 1, second - first - 1),
                                spec.substr(second + 1)};
        for (int i = 0; i < 3; ++i) {
            std::size_t value = 0;
            auto [ptr, ec] = std::from_chars(parts[i].data(), parts[i].data() + parts[i].size(), value);
            if (ec != std::errc() || ptr != parts[i].data() + parts[i].size() || value == 0) {
                fail(line_no, "malformed dims \"" + spec + "\"");
            }
            dims[i] = value;
        }
    }

    Tensor3 tensor(field, dims[0], dims[1], dims[2]);
    std::set<std::array<int, 3>> seen;
    while (std::getline(in, line)) {
        ++line_no;
        std::vector<std::string> tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (tokens.size() != 4) fail(line_no, "expected \"i j k value\"");
        int i = parse_index(tokens[0], line_no);
        int j = parse_index(tokens[1], line_no);
        int k = parse_index(tokens[2], line_no);
        if (static_cast<std::size_t>(i) > dims[0] || static_cast<std::size_t>(j) > dims[1] ||
            static_cast<std::size_t>(k) > dims[2]) {
            fail(line_no, "index out of range");
        }
        if (!seen.insert({i, j, k}).second) {
            fail(line_no, "duplicate entry (" + tokens[0] + "," + tokens[1] + "," + tokens[2] + ")");
        }
        Scalar value = Scalar::zero(field);
        try {
            value = Scalar::parse(field, tokens[3]);
        } catch (const std::invalid_argument& e) {
            fail(line_no, e.what());
        }
        if (value.is_zero()) continue;  // explicit zeros are dropped

        tensor.set(i, j, k, value);
    }
    return tensor;
}

std::string serialize_tensor(const Tensor3& tensor) {
    std::ostringstream out;
    out << "tensor v1 field=" << tensor.field().to_string() << " dims=" << tensor.dims()[0] << "x"
        << tensor.dims()[1] << "x" << tensor.dims()[2] << "\n";
    for (const auto& [key, value] : tensor.entries()) {
        out << key[0] << " " << key[1] << " " << key[2] << " " << value.to_string() << "\n";
    }
    return out.str();
}

Tensor3 builtin_tensor(std::string_view name, const FieldSpec& field) {
    std::string base(name);
    std::string arg;
    if (std::size_t colon = base.find(':'); colon != std::string::npos) {
        arg = base.substr(colon + 1);
        base = base.substr(0, colon);
    }
    auto parse_arg = [&](const char* what) {
        std::size_t d = 0;
        auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), d);
        if (ec != std::errc() || ptr != arg.data() + arg.size() || d == 0) {
            throw std::invalid_argument(std::string("builtin_tensor: ") + what +
                                        " needs a positive size, got \"" + arg + "\"");
        }
        return d;
    };

    if (base == "det3" || base == "perm3") {
        if (!arg.empty()) throw std::invalid_argument("builtin_tensor: " + base + " takes no size");
        Tensor3 tensor(field, 3, 3, 3);
        const int perms[6][3] = {{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};
        const int signs[6] = {1, -1, -1, 1, 1, -1};
        for (int s = 0; s < 6; ++s) {
            tensor.set(perms[s][0], perms[s][1], perms[s][2], base == "det3" ? signs[s] : 1);
        }
        return tensor;
    }
    if (base == "unit") {
        std::size_t d = parse_arg("unit");
        Tensor3 tensor(field, d, d, d);
        for (std::size_t i = 1; i <= d; ++i) {
            tensor.set(static_cast<int>(i), static_cast<int>(i), static_cast<int>(i), 1);
        }
        return tensor;
    }
    if (base == "toeplitz_sum") {
        std::size_t d = parse_arg("toeplitz_sum");
        if (d % 2 != 0) {
            throw std::invalid_argument("builtin_tensor: toeplitz_sum needs an even size, got " +
                                        std::to_string(d));
        }
        int m = static_cast<int>(d) - 1;
        int p = (m - 1) / 2;
        std::vector<ExactMatrix> basis = toeplitz_basis(field, p);
        Tensor3 tensor(field, d, d, d);
        for (int i = 1; i <= m; ++i) {
            ExactMatrix doubled = direct_sum(basis[i - 1], basis[i - 1]);
            for (std::size_t r = 0; r < doubled.rows(); ++r) {
                for (std::size_t c = 0; c < doubled.cols(); ++c) {
                    Scalar value = doubled.at(r, c);
                    if (!value.is_zero()) {
                        tensor.set(i, static_cast<int>(r) + 1, static_cast<int>(c) + 1, value);
                    }
                }
            }
        }
        return tensor;
    }
    throw std::invalid_argument("builtin_tensor: unknown name \"" + std::string(name) +
                                "\" (expected det3, perm3, unit:<d>, toeplitz_sum:<d>)");
}

}  // namespace koszul
