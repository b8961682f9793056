#pragma once

#include <cstddef>
#include <vector>

namespace rumorcast {

// Row-major dense matrix view; the underlying storage must outlive it.
struct Dataset {
    const double* data = nullptr;
    std::size_t rows = 0;
    std::size_t cols = 0;

    double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
    const double* row(std::size_t r) const { return data + r * cols; }
};

// Owning row-major matrix with a cheap Dataset view.
struct Matrix {
    std::vector<double> values;
    std::size_t rows = 0;
    std::size_t cols = 0;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : values(r * c, 0.0), rows(r), cols(c) {}

    double& at(std::size_t r, std::size_t c) { return values[r * cols + c]; }
    double at(std::size_t r, std::size_t c) const { return values[r * cols + c]; }
    double* row(std::size_t r) { return values.data() + r * cols; }
    const double* row(std::size_t r) const { return values.data() + r * cols; }

    Dataset view() const { return Dataset{values.data(), rows, cols}; }
};

}  // namespace rumorcast
