#include "mikado/galois_field.hpp"

#include <algorithm>

#include "mikado/error.hpp"

namespace mikado {

namespace {

constexpr int kMaxFieldOrder = 1024;

int mod(long long a, int p) { return static_cast<int>(((a % p) + p) % p); }

int degree(const Polynomial& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
        if (f[i] != 0) return i;
    }
    return -1;
}

int inverse_mod(int a, int p) {
    for (int x = 1; x < p; ++x) {
        if (a * x % p == 1) return x;
    }
    return 0;
}

/// Remainder of f modulo g (g non-zero).
Polynomial remainder(Polynomial f, const Polynomial& g, int p) {
    const int dg = degree(g);
    const int lead_inv = inverse_mod(g[dg], p);
    for (int df = degree(f); df >= dg; df = degree(f)) {
        const int factor = f[df] * lead_inv % p;
        for (int i = 0; i <= dg; ++i) f[df - dg + i] = mod(f[df - dg + i] - factor * g[i], p);
    }
    return f;
}

/// Monic polynomial of degree d whose lower coefficients are the base-p digits of `code`.
Polynomial monic_from_code(int p, int d, long long code) {
    Polynomial f(d + 1, 0);
    f[d] = 1;
    for (int i = 0; i < d; ++i) {
        f[i] = static_cast<int>(code % p);
        code /= p;
    }
    return f;
}

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

int prime_power_base(int q) {
    if (q < 2) return 0;
    int p = 2;
    while (q % p != 0) ++p;
    while (q % p == 0) q /= p;
    return q == 1 ? p : 0;
}

bool is_irreducible(int p, const Polynomial& poly) {
    const int d = degree(poly);
    if (d < 1) return false;
    for (int k = 1; 2 * k <= d; ++k) {
        const long long count = ipow(p, k);
        for (long long c = 0; c < count; ++c) {
            if (degree(remainder(poly, monic_from_code(p, k, c), p)) < 0) return false;
        }
    }
    return true;
}

Polynomial least_irreducible(int p, int n) {
    // Counting the lower coefficients as a base-p number with x^(n-1) most
    // significant compares from the top degree down.
    const long long count = ipow(p, n);
    for (long long c = 0; c < count; ++c) {
        Polynomial f = monic_from_code(p, n, c);
        if (is_irreducible(p, f)) return f;
    }
    throw Error(Errc::Reducible, "no irreducible polynomial found");
}

GaloisField GaloisField::create(int p, int n, std::optional<Polynomial> modulus) {
    if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
    if (n < 1) throw Error(Errc::InvalidArgument, "field degree must be at least 1");
    const long long q = ipow(p, n);
    if (q > kMaxFieldOrder) throw Error(Errc::TooLarge, "field order above 1024");

    Polynomial f;
    if (modulus) {
        f = *modulus;
        for (int& c : f) c = mod(c, p);
        if (degree(f) != n) throw Error(Errc::InvalidArgument, "modulus must have degree n");
        f.resize(n + 1);
        const int lead_inv = inverse_mod(f[n], p);
        for (int& c : f) c = c * lead_inv % p;
        if (!is_irreducible(p, f)) throw Error(Errc::Reducible, "modulus is reducible over Z/" + std::to_string(p));
    } else {
        f = least_irreducible(p, n);
    }

    GaloisField field;
    field.p_ = p;
    field.n_ = n;
    field.q_ = static_cast<int>(q);
    field.modulus_ = f;
    const int size = field.q_;

    auto digits = [&](int a) {
        Polynomial d(n, 0);
        for (int i = 0; i < n; ++i) {
            d[i] = a % p;
            a /= p;
        }
        return d;
    };
    auto encode = [&](const Polynomial& d) {
        int a = 0;
        for (int i = n - 1; i >= 0; --i) a = a * p + d[i];
        return a;
    };

    field.add_.assign(static_cast<std::size_t>(size) * size, 0);
    field.mul_.assign(static_cast<std::size_t>(size) * size, 0);
    field.neg_.assign(size, 0);
    field.inv_.assign(size, 0);
    for (int a = 0; a < size; ++a) {
        const Polynomial da = digits(a);
        Polynomial na(n);
        for (int i = 0; i < n; ++i) na[i] = mod(-da[i], p);
        field.neg_[a] = encode(na);
        for (int b = 0; b < size; ++b) {
            const Polynomial db = digits(b);
            Polynomial s(n);
            for (int i = 0; i < n; ++i) s[i] = (da[i] + db[i]) % p;
            field.add_[a * size + b] = encode(s);
            Polynomial prod(2 * n, 0);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
            Polynomial r = remainder(prod, f, p);
            r.resize(n);
            field.mul_[a * size + b] = encode(r);
        }
    }
    for (int a = 1; a < size; ++a)
        for (int b = 1; b < size; ++b) {
            if (field.mul(a, b) == 1) field.inv_[a] = b;
        }
    return field;
}

int GaloisField::pow(int a, long long e) const {
    int result = 1;
    int base = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

int GaloisField::multiplicative_order(int a) const {
    if (a == 0) throw Error(Errc::InvalidArgument, "zero has no multiplicative order");
    int k = 1;
    for (int x = a; x != 1; x = mul(x, a)) ++k;
    return k;
}

std::string GaloisField::element_name(int a) const {
    if (n_ == 1) return std::to_string(a);
    std::string out;
    for (int i = n_ - 1; i >= 0; --i) {
        const int c = static_cast<int>(a / ipow(p_, i) % p_);
        if (c == 0) continue;
        if (!out.empty()) out += '+';
        if (i == 0 || c != 1) out += std::to_string(c);
        if (i >= 1) out += 'x';
        if (i >= 2) out += '^' + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

std::vector<int> primitive_elements(const GaloisField& field) {
    std::vector<int> out;
    for (int a = 1; a < field.order(); ++a) {
        if (field.multiplicative_order(a) == field.order() - 1) out.push_back(a);
    }
    return out;
}

}  // namespace mikado
