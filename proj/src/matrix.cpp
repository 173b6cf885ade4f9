#include "koszul/matrix.hpp"

#include <sstream>
#include <utility>

namespace koszul {

namespace {

struct EliminationResult {
    std::size_t rank = 0;
    bool determinant_valid = false;  // square input only
};

// Fraction-free Bareiss elimination with column pivoting. Mutates `a`
// in place; on square full-rank input the last pivot times `sign` is the
// determinant of the integer matrix.
EliminationResult bareiss(std::vector<mpz_class>& a, std::size_t rows, std::size_t cols,
                          mpz_class& det_out) {
    auto at = [&](std::size_t r, std::size_t c) -> mpz_class& { return a[r * cols + c]; };
    mpz_class prev = 1;
    int sign = 1;
    std::size_t pr = 0;
    for (std::size_t pc = 0; pc < cols && pr < rows; ++pc) {
        std::size_t pivot = pr;
        while (pivot < rows && at(pivot, pc) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != pr) {
            for (std::size_t c = pc; c < cols; ++c) std::swap(at(pivot, c), at(pr, c));
            sign = -sign;
        }
        for (std::size_t r = pr + 1; r < rows; ++r) {
            for (std::size_t c = pc + 1; c < cols; ++c) {
                mpz_class num = at(pr, pc) * at(r, c) - at(r, pc) * at(pr, c);
                mpz_divexact(at(r, c).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            at(r, pc) = 0;
        }
        prev = at(pr, pc);
        ++pr;
    }
    EliminationResult result;
    result.rank = pr;
    if (rows == cols) {
        result.determinant_valid = true;
        det_out = (pr == rows) ? mpz_class(sign * prev) : mpz_class(0);
    }
    return result;
}

// Gaussian elimination over GF(p). Same contract as bareiss().
EliminationResult modular_eliminate(std::vector<std::uint32_t>& a, std::size_t rows,
                                    std::size_t cols, std::uint32_t p,
                                    std::uint32_t& det_out) {
    auto at = [&](std::size_t r, std::size_t c) -> std::uint32_t& { return a[r * cols + c]; };
    auto mul = [p](std::uint32_t x, std::uint32_t y) {
        return static_cast<std::uint32_t>(static_cast<std::uint64_t>(x) * y % p);
    };
    auto inv = [p, &mul](std::uint32_t x) {
        // Fermat: x^(p-2) mod p.
        std::uint32_t result = 1, base = x;
        std::uint32_t e = p - 2;
        while (e > 0) {
            if (e & 1u) result = mul(result, base);
            base = mul(base, base);
            e >>= 1;
        }
        return result;
    };

    std::uint64_t det = 1;
    bool negate = false;
    std::size_t pr = 0;
    for (std::size_t pc = 0; pc < cols && pr < rows; ++pc) {
        std::size_t pivot = pr;
        while (pivot < rows && at(pivot, pc) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != pr) {
            for (std::size_t c = pc; c < cols; ++c) std::swap(at(pivot, c), at(pr, c));
            negate = !negate;
        }
        std::uint32_t pinv = inv(at(pr, pc));
        det = det * at(pr, pc) % p;
        for (std::size_t r = pr + 1; r < rows; ++r) {
            if (at(r, pc) == 0) continue;
            std::uint32_t factor = mul(at(r, pc), pinv);
            for (std::size_t c = pc; c < cols; ++c) {
                std::uint64_t sub = static_cast<std::uint64_t>(factor) * at(pr, c) % p;
                std::uint64_t val = at(r, c) + p - sub;
                at(r, c) = static_cast<std::uint32_t>(val % p);
            }
        }
        ++pr;
    }
    EliminationResult result;
    result.rank = pr;
    if (rows == cols) {
        result.determinant_valid = true;
        if (pr < rows) {
            det_out = 0;
        } else {
            det_out = static_cast<std::uint32_t>(det);
            if (negate && det_out != 0) det_out = p - det_out;
        }
    }
    return result;
}

}  // namespace

ExactMatrix::ExactMatrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), field_(field) {
    if (field_.is_rationals()) {
        qdata_.assign(rows_ * cols_, mpq_class(0));
    } else {
        pdata_.assign(rows_ * cols_, 0);
    }
}

ExactMatrix ExactMatrix::identity(const FieldSpec& field, std::size_t n) {
    ExactMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

void ExactMatrix::check_index(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) {
        throw std::out_of_range("ExactMatrix: index (" + std::to_string(r) + "," +
                                std::to_string(c) + ") out of " + std::to_string(rows_) + "x" +
                                std::to_string(cols_));
    }
}

Scalar ExactMatrix::at(std::size_t r, std::size_t c) const {
    check_index(r, c);
    if (field_.is_rationals()) return Scalar::from_rational(qdata_[r * cols_ + c]);
    return Scalar::from_int(field_, pdata_[r * cols_ + c]);
}

void ExactMatrix::set(std::size_t r, std::size_t c, const Scalar& value) {
    check_index(r, c);
    if (value.field() != field_) throw std::invalid_argument("ExactMatrix: field mismatch in set()");
    if (field_.is_rationals()) {
        qdata_[r * cols_ + c] = value.rational();
    } else {
        pdata_[r * cols_ + c] = value.residue();
    }
}

void ExactMatrix::set(std::size_t r, std::size_t c, std::int64_t value) {
    set(r, c, Scalar::from_int(field_, value));
}

void ExactMatrix::add_at(std::size_t r, std::size_t c, const Scalar& value) {
    check_index(r, c);
    if (value.field() != field_) throw std::invalid_argument("ExactMatrix: field mismatch in add_at()");
    if (field_.is_rationals()) {
        qdata_[r * cols_ + c] += value.rational();
    } else {
        std::uint64_t sum = pdata_[r * cols_ + c] + static_cast<std::uint64_t>(value.residue());
        pdata_[r * cols_ + c] = static_cast<std::uint32_t>(sum % field_.characteristic());
    }
}

void ExactMatrix::require_same_shape(const ExactMatrix& rhs) const {
    require_same_field(rhs);
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw std::invalid_argument("ExactMatrix: shape mismatch");
    }
}

void ExactMatrix::require_same_field(const ExactMatrix& rhs) const {
    if (field_ != rhs.field_) {
        throw std::invalid_argument("ExactMatrix: field mismatch (" + field_.to_string() + " vs " +
                                    rhs.field_.to_string() + ")");
    }
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& rhs) const {
    require_same_shape(rhs);
    ExactMatrix out(field_, rows_, cols_);
    if (field_.is_rationals()) {
        for (std::size_t i = 0; i < qdata_.size(); ++i) out.qdata_[i] = qdata_[i] + rhs.qdata_[i];
    } else {
        std::uint32_t p = field_.characteristic();
        for (std::size_t i = 0; i < pdata_.size(); ++i) {
            out.pdata_[i] = static_cast<std::uint32_t>(
                (static_cast<std::uint64_t>(pdata_[i]) + rhs.pdata_[i]) % p);
        }
    }
    return out;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& rhs) const {
    require_same_shape(rhs);
    ExactMatrix out(field_, rows_, cols_);
    if (field_.is_rationals()) {
        for (std::size_t i = 0; i < qdata_.size(); ++i) out.qdata_[i] = qdata_[i] - rhs.qdata_[i];
    } else {
        std::uint32_t p = field_.characteristic();
        for (std::size_t i = 0; i < pdata_.size(); ++i) {
            out.pdata_[i] = static_cast<std::uint32_t>(
                (static_cast<std::uint64_t>(pdata_[i]) + p - rhs.pdata_[i]) % p);
        }
    }
    return out;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& rhs) const {
    require_same_field(rhs);
    if (cols_ != rhs.rows_) throw std::invalid_argument("ExactMatrix: inner dimension mismatch");
    ExactMatrix out(field_, rows_, rhs.cols_);
    if (field_.is_rationals()) {
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t k = 0; k < cols_; ++k) {
                const mpq_class& aik = qdata_[i * cols_ + k];
                if (aik == 0) continue;
                for (std::size_t j = 0; j < rhs.cols_; ++j) {
                    out.qdata_[i * rhs.cols_ + j] += aik * rhs.qdata_[k * rhs.cols_ + j];
                }
            }
        }
    } else {
        std::uint32_t p = field_.characteristic();
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t k = 0; k < cols_; ++k) {
                std::uint64_t aik = pdata_[i * cols_ + k];
                if (aik == 0) continue;
                for (std::size_t j = 0; j < rhs.cols_; ++j) {
                    std::uint64_t cur = out.pdata_[i * rhs.cols_ + j];
                    out.pdata_[i * rhs.cols_ + j] = static_cast<std::uint32_t>(
                        (cur + aik * rhs.pdata_[k * rhs.cols_ + j]) % p);
                }
            }
        }
    }
    return out;
}

ExactMatrix ExactMatrix::scaled(const Scalar& factor) const {
    if (factor.field() != field_) throw std::invalid_argument("ExactMatrix: field mismatch in scaled()");
    ExactMatrix out(field_, rows_, cols_);
    if (field_.is_rationals()) {
        for (std::size_t i = 0; i < qdata_.size(); ++i) out.qdata_[i] = qdata_[i] * factor.rational();
    } else {
        std::uint32_t p = field_.characteristic();
        std::uint64_t f = factor.residue();
        for (std::size_t i = 0; i < pdata_.size(); ++i) {
            out.pdata_[i] = static_cast<std::uint32_t>(pdata_[i] * f % p);
        }
    }
    return out;
}

bool ExactMatrix::operator==(const ExactMatrix& rhs) const {
    if (field_ != rhs.field_ || rows_ != rhs.rows_ || cols_ != rhs.cols_) return false;
    return field_.is_rationals() ? qdata_ == rhs.qdata_ : pdata_ == rhs.pdata_;
}

bool ExactMatrix::is_zero() const {
    if (field_.is_rationals()) {
        for (const auto& q : qdata_) {
            if (q != 0) return false;
        }
        return true;
    }
    for (auto v : pdata_) {
        if (v != 0) return false;
    }
    return true;
}

std::size_t ExactMatrix::rank() const {
    if (rows_ == 0 || cols_ == 0) return 0;
    if (field_.is_prime()) {
        std::vector<std::uint32_t> work = pdata_;
        std::uint32_t det = 0;
        return modular_eliminate(work, rows_, cols_, field_.characteristic(), det).rank;
    }
    // Clear denominators row by row; row scaling preserves rank.
    std::vector<mpz_class> work(rows_ * cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        mpz_class lcm = 1;
        for (std::size_t c = 0; c < cols_; ++c) {
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), qdata_[r * cols_ + c].get_den_mpz_t());
        }
        for (std::size_t c = 0; c < cols_; ++c) {
            mpq_class scaled = qdata_[r * cols_ + c] * lcm;
            work[r * cols_ + c] = scaled.get_num();
        }
    }
    mpz_class det;
    return bareiss(work, rows_, cols_, det).rank;
}

Scalar ExactMatrix::det() const {
    if (rows_ != cols_) throw std::invalid_argument("ExactMatrix: determinant of non-square matrix");
    if (rows_ == 0) return Scalar::one(field_);
    if (field_.is_prime()) {
        std::vector<std::uint32_t> work = pdata_;
        std::uint32_t det = 0;
        modular_eliminate(work, rows_, cols_, field_.characteristic(), det);
        return Scalar::from_int(field_, det);
    }
    std::vector<mpz_class> work(rows_ * cols_);
    mpz_class scale = 1;  // det(work) = det(this) * scale
    for (std::size_t r = 0; r < rows_; ++r) {
        mpz_class lcm = 1;
        for (std::size_t c = 0; c < cols_; ++c) {
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), qdata_[r * cols_ + c].get_den_mpz_t());
        }
        for (std::size_t c = 0; c < cols_; ++c) {
            mpq_class scaled = qdata_[r * cols_ + c] * lcm;
            work[r * cols_ + c] = scaled.get_num();
        }
        scale *= lcm;
    }
    mpz_class det;
    bareiss(work, rows_, cols_, det);
    return Scalar::from_rational(mpq_class(det, scale));
}

std::string ExactMatrix::to_string() const {
    std::ostringstream out;
    for (std::size_t r = 0; r < rows_; ++r) {
        out << "[";
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c > 0) out << " ";
            out << at(r, c).to_string();
        }
        out << "]\n";
    }
    return out.str();
}

ExactMatrix kronecker(const ExactMatrix& a, const ExactMatrix& b) {
    a.require_same_field(b);
    ExactMatrix out(a.field_, a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t j = 0; j < a.cols_; ++j) {
            if (a.field_.is_rationals()) {
                const mpq_class& aij = a.qdata_[i * a.cols_ + j];
                if (aij == 0) continue;
                for (std::size_t bi = 0; bi < b.rows_; ++bi) {
                    for (std::size_t bj = 0; bj < b.cols_; ++bj) {
                        out.qdata_[(i * b.rows_ + bi) * out.cols_ + (j * b.cols_ + bj)] =
                            aij * b.qdata_[bi * b.cols_ + bj];
                    }
                }
            } else {
                std::uint64_t aij = a.pdata_[i * a.cols_ + j];
                if (aij == 0) continue;
                std::uint32_t p = a.field_.characteristic();
                for (std::size_t bi = 0; bi < b.rows_; ++bi) {
                    for (std::size_t bj = 0; bj < b.cols_; ++bj) {
                        out.pdata_[(i * b.rows_ + bi) * out.cols_ + (j * b.cols_ + bj)] =
                            static_cast<std::uint32_t>(aij * b.pdata_[bi * b.cols_ + bj] % p);
                    }
                }
            }
        }
    }
    return out;
}

ExactMatrix direct_sum(const ExactMatrix& a, const ExactMatrix& b) {
    a.require_same_field(b);
    ExactMatrix out(a.field_, a.rows_ + b.rows_, a.cols_ + b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        for (std::size_t c = 0; c < a.cols_; ++c) {
            if (a.field_.is_rationals()) {
                out.qdata_[r * out.cols_ + c] = a.qdata_[r * a.cols_ + c];
            } else {
                out.pdata_[r * out.cols_ + c] = a.pdata_[r * a.cols_ + c];
            }
        }
    }
    for (std::size_t r = 0; r < b.rows_; ++r) {
        for (std::size_t c = 0; c < b.cols_; ++c) {
            if (a.field_.is_rationals()) {
                out.qdata_[(a.rows_ + r) * out.cols_ + (a.cols_ + c)] = b.qdata_[r * b.cols_ + c];
            } else {
                out.pdata_[(a.rows_ + r) * out.cols_ + (a.cols_ + c)] = b.pdata_[r * b.cols_ + c];
            }
        }
    }
    return out;
}

}  // namespace koszul
