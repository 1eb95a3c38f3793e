#pragma once

#include <Eigen/Dense>

#include <initializer_list>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mecg/rng.hpp"

namespace mecg {

using Index = Eigen::Index;
using Shape = std::vector<Index>;

template <typename S>
using ArrX = Eigen::Array<S, Eigen::Dynamic, 1>;
template <typename S>
using VecX = Eigen::Matrix<S, Eigen::Dynamic, 1>;
template <typename S>
using MatX = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <typename S>
using RowMajorMat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

inline Index shape_numel(const Shape& s) {
    Index n = 1;
    for (Index d : s) n *= d;
    return n;
}

inline std::string shape_str(const Shape& s) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << ")";
    return os.str();
}

// Dense n-D real array: flat Eigen storage with row-major logical indexing.
template <typename S>
struct NdArray {
    Shape shape;
    ArrX<S> data;

    NdArray() = default;
    explicit NdArray(Shape sh) : shape(std::move(sh)), data(shape_numel(shape)) {}
    NdArray(Shape sh, ArrX<S> d) : shape(std::move(sh)), data(std::move(d)) {
        if (data.size() != shape_numel(shape))
            throw std::invalid_argument("NdArray: data size does not match shape " + shape_str(shape));
    }

    static NdArray zeros(Shape sh) {
        NdArray a(std::move(sh));
        a.data.setZero();
        return a;
    }
    static NdArray full(Shape sh, S v) {
        NdArray a(std::move(sh));
        a.data.setConstant(v);
        return a;
    }
    static NdArray scalar(S v) { return full({1}, v); }
    static NdArray from(Shape sh, std::initializer_list<S> vals) {
        NdArray a(std::move(sh));
        if (static_cast<Index>(vals.size()) != a.numel())
            throw std::invalid_argument("NdArray::from: wrong number of values");
        Index i = 0;
        for (S v : vals) a.data[i++] = v;
        return a;
    }
    static NdArray random_uniform(Shape sh, Rng& rng, double lo = -1.0, double hi = 1.0) {
        NdArray a(std::move(sh));
        for (Index i = 0; i < a.data.size(); ++i) a.data[i] = static_cast<S>(rng.uniform(lo, hi));
        return a;
    }
    static NdArray random_normal(Shape sh, Rng& rng, double stddev = 1.0) {
        NdArray a(std::move(sh));
        for (Index i = 0; i < a.data.size(); ++i) a.data[i] = static_cast<S>(stddev * rng.normal());
        return a;
    }

    Index numel() const { return data.size(); }
    int rank() const { return static_cast<int>(shape.size()); }
    Index dim(int i) const { return shape[static_cast<std::size_t>(i)]; }
    bool same_shape(const NdArray& o) const { return shape == o.shape; }

    S* ptr() { return data.data(); }
    const S* ptr() const { return data.data(); }

    // Row-major strides.
    Shape strides() const {
        Shape st(shape.size(), 1);
        for (int i = rank() - 2; i >= 0; --i)
            st[static_cast<std::size_t>(i)] =
                st[static_cast<std::size_t>(i + 1)] * shape[static_cast<std::size_t>(i + 1)];
        return st;
    }

    S& at(std::initializer_list<Index> idx) {
        Index off = 0;
        const Shape st = strides();
        std::size_t k = 0;
        for (Index i : idx) off += i * st[k++];
        return data[off];
    }

    // View the flat data as a rows x cols row-major matrix.
    Eigen::Map<RowMajorMat<S>> mat(Index rows, Index cols) {
        if (rows * cols != numel()) throw std::invalid_argument("NdArray::mat: size mismatch");
        return Eigen::Map<RowMajorMat<S>>(data.data(), rows, cols);
    }
    Eigen::Map<const RowMajorMat<S>> mat(Index rows, Index cols) const {
        if (rows * cols != numel()) throw std::invalid_argument("NdArray::mat: size mismatch");
        return Eigen::Map<const RowMajorMat<S>>(data.data(), rows, cols);
    }

    template <typename T>
    NdArray<T> cast() const {
        NdArray<T> out;
        out.shape = shape;
        out.data = data.template cast<T>();
        return out;
    }
};

template <typename S>
void check_same_shape(const NdArray<S>& a, const NdArray<S>& b, const char* op) {
    if (!a.same_shape(b))
        throw std::invalid_argument(std::string(op) + ": shape mismatch " + shape_str(a.shape) +
                                    " vs " + shape_str(b.shape));
}

}  // namespace mecg
