// Exact reduced simplicial homology over Q or a prime field, computed from
// dense boundary matrices. Ranks over GF(p) use modular elimination; ranks
// over Q use fraction-free Bareiss elimination (64-bit with a big-integer
// fallback when entries outgrow it). A full-rank modular certificate fronts
// the Bareiss path: rank mod p is a lower bound for the rank over Q, so
// hitting min(rows, cols) mod p settles the rank exactly.
#pragma once

#include <cassert>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cmt/bigint.hpp"
#include "cmt/core.hpp"

namespace cmt {

// ---------------------------------------------------------------------------
// Fields

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin; bases {2,3,5,7} decide primality below 3.2e9.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

}  // namespace detail

struct FieldSpec {
    enum class Kind { rationals, prime_field };
    Kind kind = Kind::rationals;
    std::int64_t p = 0;

    static FieldSpec rationals() { return FieldSpec{}; }

    static FieldSpec gf(std::int64_t p) {
        if (p < 2 || p >= (std::int64_t{1} << 31) || !detail::is_prime_u64(static_cast<std::uint64_t>(p)))
            throw Error("field: characteristic must be a prime in [2, 2^31)");
        FieldSpec f;
        f.kind = Kind::prime_field;
        f.p = p;
        return f;
    }

    std::string str() const {
        return kind == Kind::rationals ? "q" : "gf:" + std::to_string(p);
    }

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
        return a.kind == b.kind && a.p == b.p;
    }
};

// ---------------------------------------------------------------------------
// Boundary matrices

// Matrix of the boundary map from q-chains to (q-1)-chains; entries are the
// usual alternating signs before any reduction. Row/column order follows the
// (cardinality, lex) face order.
struct BoundaryMatrix {
    int q = 0;
    std::vector<Face> rows;  // (q-1)-faces
    std::vector<Face> cols;  // q-faces
    std::vector<std::int8_t> entries;  // row-major
    FieldSpec field;

    std::size_t row_count() const { return rows.size(); }
    std::size_t col_count() const { return cols.size(); }
    std::int8_t at(std::size_t r, std::size_t c) const { return entries[r * cols.size() + c]; }
};

inline BoundaryMatrix boundary_matrix(const SimplicialComplex& dx, int q, FieldSpec field) {
    BoundaryMatrix m;
    m.q = q;
    m.field = field;
    const int d = dim(dx);
    if (q < 0 || q > d) {
        // chain groups outside 0..dim have at most the empty face; all maps
        // in or out of them are represented by empty matrices except that
        // C_{-1} is spanned by the empty face itself.
        if (q == -1) m.cols = {Face{0}};
        return m;
    }
    m.cols = faces_of_card(dx, q + 1);
    m.rows = faces_of_card(dx, q);
    m.entries.assign(m.rows.size() * m.cols.size(), 0);
    // row index lookup: rows are sorted in (card, lex) order; all the same
    // cardinality here, so lex order alone
    for (std::size_t c = 0; c < m.cols.size(); ++c) {
        Face col = m.cols[c];
        int k = 0;
        for (Face rest = col; rest; rest &= rest - 1, ++k) {
            Face row = col & ~(rest & (~rest + 1));
            auto it = std::lower_bound(m.rows.begin(), m.rows.end(), row, face_lex_less);
            assert(it != m.rows.end() && *it == row);
            std::size_t r = static_cast<std::size_t>(it - m.rows.begin());
            m.entries[r * m.cols.size() + c] = (k % 2 == 0) ? 1 : -1;
        }
    }
    return m;
}

// ---------------------------------------------------------------------------
// Exact rank kernels

namespace detail {

inline std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
    while (new_r != 0) {
        std::int64_t quot = r / new_r;
        t -= quot * new_t;
        std::swap(t, new_t);
        r -= quot * new_r;
        std::swap(r, new_r);
    }
    return ((t % p) + p) % p;
}

// In-place elimination over GF(p); `grid` is row-major rows x cols.
inline int rank_mod_p(std::vector<std::int64_t>& grid, std::size_t rows, std::size_t cols,
                      std::int64_t p) {
    for (auto& v : grid) {
        v %= p;
        if (v < 0) v += p;
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && grid[pivot * cols + c] == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank)
            for (std::size_t j = c; j < cols; ++j)
                std::swap(grid[pivot * cols + j], grid[rank * cols + j]);
        std::int64_t inv = inv_mod(grid[rank * cols + c], p);
        for (std::size_t j = c; j < cols; ++j)
            grid[rank * cols + j] = grid[rank * cols + j] * inv % p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank) continue;
            std::int64_t factor = grid[i * cols + c];
            if (factor == 0) continue;
            for (std::size_t j = c; j < cols; ++j) {
                grid[i * cols + j] =
                    (grid[i * cols + j] - factor * grid[rank * cols + j]) % p;
                if (grid[i * cols + j] < 0) grid[i * cols + j] += p;
            }
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

struct BareissOverflow {};

// Fraction-free Bareiss elimination with full pivoting; entries stay integer
// (they are minors of the input). Throws BareissOverflow when a value leaves
// the int64 range.
inline int rank_bareiss_int64(std::vector<std::int64_t>& grid, std::size_t rows, std::size_t cols) {
    constexpr std::int64_t kLimit = std::int64_t{1} << 62;
    std::int64_t prev = 1;
    std::size_t rank = 0;
    const std::size_t steps = rows < cols ? rows : cols;
    for (std::size_t k = 0; k < steps; ++k) {
        std::size_t pr = rows, pc = cols;
        for (std::size_t i = k; i < rows && pr == rows; ++i)
            for (std::size_t j = k; j < cols; ++j)
                if (grid[i * cols + j] != 0) { pr = i; pc = j; break; }
        if (pr == rows) break;
        if (pr != k)
            for (std::size_t j = 0; j < cols; ++j) std::swap(grid[pr * cols + j], grid[k * cols + j]);
        if (pc != k)
            for (std::size_t i = 0; i < rows; ++i) std::swap(grid[i * cols + pc], grid[i * cols + k]);
        const std::int64_t piv = grid[k * cols + k];
        for (std::size_t i = k + 1; i < rows; ++i) {
            const std::int64_t head = grid[i * cols + k];
            for (std::size_t j = k + 1; j < cols; ++j) {
                __int128 num = static_cast<__int128>(grid[i * cols + j]) * piv -
                               static_cast<__int128>(head) * grid[k * cols + j];
                __int128 value = num / prev;
                if (value > kLimit || value < -kLimit) throw BareissOverflow{};
                grid[i * cols + j] = static_cast<std::int64_t>(value);
            }
            grid[i * cols + k] = 0;
        }
        prev = piv;
        ++rank;
    }
    return static_cast<int>(rank);
}

inline int rank_bareiss_bigint(const std::vector<std::int64_t>& input, std::size_t rows,
                               std::size_t cols) {
    std::vector<BigInt> grid(input.begin(), input.end());
    BigInt prev = 1;
    std::size_t rank = 0;
    const std::size_t steps = rows < cols ? rows : cols;
    for (std::size_t k = 0; k < steps; ++k) {
        std::size_t pr = rows, pc = cols;
        for (std::size_t i = k; i < rows && pr == rows; ++i)
            for (std::size_t j = k; j < cols; ++j)
                if (!grid[i * cols + j].is_zero()) { pr = i; pc = j; break; }
        if (pr == rows) break;
        if (pr != k)
            for (std::size_t j = 0; j < cols; ++j) std::swap(grid[pr * cols + j], grid[k * cols + j]);
        if (pc != k)
            for (std::size_t i = 0; i < rows; ++i) std::swap(grid[i * cols + pc], grid[i * cols + k]);
        const BigInt piv = grid[k * cols + k];
        for (std::size_t i = k + 1; i < rows; ++i) {
            const BigInt head = grid[i * cols + k];
            for (std::size_t j = k + 1; j < cols; ++j) {
                grid[i * cols + j] =
                    (grid[i * cols + j] * piv - head * grid[k * cols + j]).divexact(prev);
            }
            grid[i * cols + k] = BigInt();
        }
        prev = piv;
        ++rank;
    }
    return static_cast<int>(rank);
}

// Rank over GF(2) with rows packed into 64-bit words.
inline int rank_gf2(const std::vector<Face>& rows, const std::vector<Face>& cols) {
    if (rows.empty() || cols.empty()) return 0;
    const std::size_t words = (cols.size() + 63) / 64;
    std::vector<std::uint64_t> m(rows.size() * words, 0);
    for (std::size_t c = 0; c < cols.size(); ++c) {
        Face col = cols[c];
        for (Face rest = col; rest; rest &= rest - 1) {
            Face row = col & ~(rest & (~rest + 1));
            auto it = std::lower_bound(rows.begin(), rows.end(), row, face_lex_less);
            std::size_t r = static_cast<std::size_t>(it - rows.begin());
            m[r * words + (c >> 6)] ^= std::uint64_t{1} << (c & 63);
        }
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols.size() && rank < rows.size(); ++c) {
        const std::size_t word = c >> 6;
        const std::uint64_t bit = std::uint64_t{1} << (c & 63);
        std::size_t pivot = rank;
        while (pivot < rows.size() && !(m[pivot * words + word] & bit)) ++pivot;
        if (pivot == rows.size()) continue;
        if (pivot != rank)
            for (std::size_t w = 0; w < words; ++w)
                std::swap(m[pivot * words + w], m[rank * words + w]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || !(m[r * words + word] & bit)) continue;
            for (std::size_t w = word; w < words; ++w) m[r * words + w] ^= m[rank * words + w];
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

// Certificate prime: rank mod p never exceeds the rank over Q, so a
// full-rank answer mod p is already exact.
inline constexpr std::int64_t kCertificatePrime = 2147483629;  // largest prime < 2^31

inline int rank_rational(const std::vector<std::int64_t>& input, std::size_t rows,
                         std::size_t cols) {
    if (rows == 0 || cols == 0) return 0;
    {
        std::vector<std::int64_t> grid = input;
        int modular = rank_mod_p(grid, rows, cols, kCertificatePrime);
        if (static_cast<std::size_t>(modular) == (rows < cols ? rows : cols)) return modular;
    }
    std::vector<std::int64_t> grid = input;
    try {
        return rank_bareiss_int64(grid, rows, cols);
    } catch (const BareissOverflow&) {
        return rank_bareiss_bigint(input, rows, cols);
    }
}

inline int rank_int_grid(const std::vector<std::int64_t>& grid, std::size_t rows, std::size_t cols,
                         const FieldSpec& field) {
    if (rows == 0 || cols == 0) return 0;
    if (field.kind == FieldSpec::Kind::prime_field) {
        std::vector<std::int64_t> work = grid;
        return rank_mod_p(work, rows, cols, field.p);
    }
    return rank_rational(grid, rows, cols);
}

}  // namespace detail

inline int matrix_rank(const BoundaryMatrix& m) {
    std::vector<std::int64_t> grid(m.entries.begin(), m.entries.end());
    return detail::rank_int_grid(grid, m.row_count(), m.col_count(), m.field);
}

// ---------------------------------------------------------------------------
// Reduced Betti numbers

// Reduced Betti numbers of a complex over `field`, indexed q = -1 .. dim.
struct HomologyProfile {
    std::vector<std::int64_t> betti;  // betti[q + 1]
    int top_dim = -1;
    FieldSpec field;

    std::int64_t at(int q) const {
        if (q < -1 || q > top_dim) return 0;
        return betti[static_cast<std::size_t>(q + 1)];
    }
};

namespace detail {

// Faces bucketed by cardinality: by_dim[c] = faces with c vertices, each
// bucket in lex order. Buckets inherit order from the (card, lex) face list.
struct FacesByDim {
    std::vector<std::vector<Face>> by_card;
    int top_dim = -1;

    explicit FacesByDim(const std::vector<Face>& faces) {
        for (Face f : faces) top_dim = std::max(top_dim, face_card(f) - 1);
        by_card.resize(static_cast<std::size_t>(top_dim + 2));
        for (Face f : faces) by_card[static_cast<std::size_t>(face_card(f))].push_back(f);
    }

    std::int64_t count(int card) const {
        return static_cast<std::int64_t>(by_card[static_cast<std::size_t>(card)].size());
    }
};

// Rank of the q-th boundary map given the (q-1)- and q-face lists.
inline int boundary_rank(const std::vector<Face>& rows, const std::vector<Face>& cols,
                         const FieldSpec& field) {
    if (rows.empty() || cols.empty()) return 0;
    if (field.kind == FieldSpec::Kind::prime_field && field.p == 2) return rank_gf2(rows, cols);
    std::vector<std::int64_t> grid(rows.size() * cols.size(), 0);
    for (std::size_t c = 0; c < cols.size(); ++c) {
        Face col = cols[c];
        int k = 0;
        for (Face rest = col; rest; rest &= rest - 1, ++k) {
            Face row = col & ~(rest & (~rest + 1));
            auto it = std::lower_bound(rows.begin(), rows.end(), row, face_lex_less);
            grid[static_cast<std::size_t>(it - rows.begin()) * cols.size() + c] = (k % 2 == 0) ? 1 : -1;
        }
    }
    return rank_int_grid(grid, rows.size(), cols.size(), field);
}

inline HomologyProfile reduced_betti_by_dim(const FacesByDim& faces, const FieldSpec& field) {
    const int d = faces.top_dim;
    HomologyProfile profile;
    profile.top_dim = d;
    profile.field = field;
    profile.betti.assign(static_cast<std::size_t>(d + 2), 0);

    // rank of the boundary map out of dimension q, for q = 0 .. d; the map
    // out of dimension -1 is zero and the map out of d+1 is empty
    std::vector<int> ranks(static_cast<std::size_t>(d + 2), 0);
    for (int q = 0; q <= d; ++q) {
        if (q == 0) {
            // every vertex maps to the empty face with coefficient +1
            ranks[1] = faces.count(1) == 0 ? 0 : 1;
        } else {
            ranks[static_cast<std::size_t>(q + 1)] =
                boundary_rank(faces.by_card[static_cast<std::size_t>(q)],
                              faces.by_card[static_cast<std::size_t>(q + 1)], field);
        }
    }
    for (int q = -1; q <= d; ++q) {
        std::int64_t rank_out = ranks[static_cast<std::size_t>(q + 1)];
        std::int64_t rank_in = q + 2 <= d + 1 ? ranks[static_cast<std::size_t>(q + 2)] : 0;
        profile.betti[static_cast<std::size_t>(q + 1)] = faces.count(q + 1) - rank_out - rank_in;
    }
    return profile;
}

inline HomologyProfile reduced_betti_of_faces(const std::vector<Face>& faces, const FieldSpec& field) {
    return reduced_betti_by_dim(FacesByDim(faces), field);
}

// First degree q < bound with nonzero reduced Betti number over Q, if any.
// Passing to GF(2) can only grow Betti numbers, so an all-zero GF(2) answer
// below the bound certifies the rational answer without exact ranks.
inline std::optional<int> rational_defect_below(const FacesByDim& faces, int bound) {
    HomologyProfile gf2 = reduced_betti_by_dim(faces, FieldSpec::gf(2));
    bool clean = true;
    for (int q = -1; q < bound; ++q)
        if (gf2.at(q) != 0) { clean = false; break; }
    if (clean) return std::nullopt;
    HomologyProfile exact = reduced_betti_by_dim(faces, FieldSpec::rationals());
    for (int q = -1; q < bound; ++q)
        if (exact.at(q) != 0) return q;
    return std::nullopt;
}

}  // namespace detail

inline HomologyProfile reduced_betti(const SimplicialComplex& dx, FieldSpec field) {
    return detail::reduced_betti_of_faces(dx.all_faces(), field);
}

// True iff the reduced homology vanishes in every degree below `bound`.
inline bool is_k_acyclic_below(const SimplicialComplex& dx, int bound, FieldSpec field) {
    HomologyProfile profile = reduced_betti(dx, field);
    for (int q = -1; q < bound; ++q)
        if (profile.at(q) != 0) return false;
    return true;
}

}  // namespace cmt
