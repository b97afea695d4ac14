#include "polyu/ternary_form.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace polyu {

namespace {

std::vector<i64> parse_ints(std::string_view text, char sep) {
    std::vector<i64> out;
    std::size_t i = 0;
    while (i <= text.size()) {
        std::size_t j = text.find(sep, i);
        if (j == std::string_view::npos) j = text.size();
        std::string_view tok = text.substr(i, j - i);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        if (tok.empty()) fail(errc::invalid_argument, "empty entry in form notation");
        i64 value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            fail(errc::invalid_argument, "bad integer in form notation");
        out.push_back(value);
        if (j == text.size()) break;
        i = j + 1;
    }
    return out;
}

}  // namespace

TernaryForm::TernaryForm(const Mat3& m) : m_(m) {
    if (m_[1] != m_[3] || m_[2] != m_[6] || m_[5] != m_[7])
        fail(errc::invalid_argument, "Gram matrix must be symmetric");
    // Positive definite iff all leading principal minors are positive.
    i64 m1 = m_[0];
    i64 m2 = m_[0] * m_[4] - m_[1] * m_[1];
    i64 m3 = det();
    if (m1 <= 0 || m2 <= 0 || m3 <= 0)
        fail(errc::invalid_argument, "form must be positive definite");
}

TernaryForm TernaryForm::diagonal(i64 a, i64 b, i64 c) {
    return TernaryForm(Mat3{a, 0, 0, 0, b, 0, 0, 0, c});
}

TernaryForm TernaryForm::from_gram(const Mat3& gram) { return TernaryForm(gram); }

TernaryForm TernaryForm::parse(std::string_view text) {
    if (text.starts_with("diag:")) {
        auto d = parse_ints(text.substr(5), ',');
        if (d.size() != 3) fail(errc::invalid_argument, "diag: form needs 3 entries");
        return diagonal(d[0], d[1], d[2]);
    }
    if (text.starts_with("gram:")) {
        std::string_view body = text.substr(5);
        std::vector<std::vector<i64>> rows;
        std::size_t i = 0;
        while (i <= body.size()) {
            std::size_t j = body.find(';', i);
            if (j == std::string_view::npos) j = body.size();
            rows.push_back(parse_ints(body.substr(i, j - i), ','));
            if (j == body.size()) break;
            i = j + 1;
        }
        Mat3 m{};
        if (rows.size() != 3) fail(errc::invalid_argument, "gram: form needs 3 rows");
        if (rows[0].size() == 3 && rows[1].size() == 3 && rows[2].size() == 3) {
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c) m[static_cast<std::size_t>(3 * r + c)] = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        } else if (rows[0].size() == 3 && rows[1].size() == 2 && rows[2].size() == 1) {
            m = {rows[0][0], rows[0][1], rows[0][2], rows[0][1], rows[1][0],
                 rows[1][1], rows[0][2], rows[1][1], rows[2][0]};
        } else {
            fail(errc::invalid_argument, "gram: rows must be 3;3;3 or 3;2;1");
        }
        return from_gram(m);
    }
    fail(errc::invalid_argument, "form notation must start with diag: or gram:");
}

bool TernaryForm::is_diagonal() const noexcept {
    return m_[1] == 0 && m_[2] == 0 && m_[5] == 0;
}

std::string TernaryForm::notation() const {
    std::ostringstream os;
    if (is_diagonal()) {
        os << "diag:" << m_[0] << ',' << m_[4] << ',' << m_[8];
    } else {
        os << "gram:";
        for (int r = 0; r < 3; ++r) {
            if (r) os << ';';
            os << at(r, 0) << ',' << at(r, 1) << ',' << at(r, 2);
        }
    }
    return os.str();
}

i64 TernaryForm::eval(const Vec3& v) const noexcept {
    return m_[0] * v[0] * v[0] + m_[4] * v[1] * v[1] + m_[8] * v[2] * v[2] +
           2 * (m_[1] * v[0] * v[1] + m_[2] * v[0] * v[2] + m_[5] * v[1] * v[2]);
}

i64 TernaryForm::bilinear(const Vec3& u, const Vec3& v) const noexcept {
    i64 s = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s += at(i, j) * u[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(j)];
    return s;
}

i64 TernaryForm::det() const noexcept {
    return m_[0] * (m_[4] * m_[8] - m_[5] * m_[5]) - m_[1] * (m_[1] * m_[8] - m_[5] * m_[2]) +
           m_[2] * (m_[1] * m_[5] - m_[4] * m_[2]);
}

Mat3 TernaryForm::adjugate() const noexcept {
    const Mat3& m = m_;
    auto minor2 = [&](int r0, int r1, int c0, int c1) {
        return m[static_cast<std::size_t>(3 * r0 + c0)] * m[static_cast<std::size_t>(3 * r1 + c1)] -
               m[static_cast<std::size_t>(3 * r0 + c1)] * m[static_cast<std::size_t>(3 * r1 + c0)];
    };
    // Symmetric input gives a symmetric adjugate.
    Mat3 adj{};
    adj[0] = minor2(1, 2, 1, 2);
    adj[4] = minor2(0, 2, 0, 2);
    adj[8] = minor2(0, 1, 0, 1);
    adj[1] = adj[3] = -minor2(1, 2, 0, 2);
    adj[2] = adj[6] = minor2(1, 2, 0, 1);
    adj[5] = adj[7] = -minor2(0, 2, 0, 1);
    return adj;
}

}  // namespace polyu
