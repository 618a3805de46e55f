#pragma once

#include <optional>
#include <string>
#include <vector>

namespace mikado {

bool is_prime(int n);
/// Returns p if q is a power of the prime p, otherwise 0.
int prime_power_base(int q);

/// Polynomials over Z/p as coefficient vectors, lowest degree first.
using Polynomial = std::vector<int>;

bool is_irreducible(int p, const Polynomial& poly);

/// The finite field of order p^n as polynomial residues modulo an irreducible
/// monic polynomial. The element with code c is sum c_i x^i where c_i are the
/// base-p digits of c, so 0 and 1 are the field's zero and one.
class GaloisField {
public:
    /// Without a modulus, picks the least monic irreducible polynomial of
    /// degree n, comparing coefficients from the highest degree down.
    /// Throws NotPrime, Reducible, InvalidArgument (bad degree) or TooLarge.
    static GaloisField create(int p, int n, std::optional<Polynomial> modulus = std::nullopt);

    int p() const { return p_; }
    int n() const { return n_; }
    int order() const { return q_; }
    /// Monic, lowest degree first, length n + 1.
    const Polynomial& modulus() const { return modulus_; }

    int add(int a, int b) const { return add_[a * q_ + b]; }
    int mul(int a, int b) const { return mul_[a * q_ + b]; }
    int neg(int a) const { return neg_[a]; }
    int sub(int a, int b) const { return add(a, neg(b)); }
    /// Multiplicative inverse of a non-zero element.
    int inv(int a) const { return inv_[a]; }
    int pow(int a, long long e) const;

    /// Multiplicative order of a non-zero element.
    int multiplicative_order(int a) const;

    /// Polynomial form such as "x^2+x+1"; integers for prime fields.
    std::string element_name(int a) const;

    bool operator==(const GaloisField& o) const { return p_ == o.p_ && n_ == o.n_ && modulus_ == o.modulus_; }

private:
    GaloisField() = default;

    int p_ = 2;
    int n_ = 1;
    int q_ = 2;
    Polynomial modulus_;
    std::vector<int> add_;
    std::vector<int> mul_;
    std::vector<int> neg_;
    std::vector<int> inv_;
};

/// Generators of the multiplicative group, ascending.
std::vector<int> primitive_elements(const GaloisField& field);

/// Least monic irreducible of degree n over Z/p in the order used by
/// GaloisField::create.
Polynomial least_irreducible(int p, int n);

}  // namespace mikado
