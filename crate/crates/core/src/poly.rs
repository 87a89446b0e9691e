//! Polynomials over GF(2) of degree < 128, and small extension fields GF(2^k).

use alloc::vec::Vec;
use core::fmt;

use rand_core::RngCore;

/// Polynomial over GF(2); bit `i` is the coefficient of `x^i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Gf2Poly(pub u128);

impl Gf2Poly {
    pub const ZERO: Self = Self(0);
    pub const ONE: Self = Self(1);
    pub const X: Self = Self(2);

    pub fn degree(self) -> Option<u32> {
        (self.0 != 0).then(|| 127 - self.0.leading_zeros())
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn coeff(self, i: u32) -> bool {
        self.0 >> i & 1 == 1
    }

    /// Carry-less product. Panics if the result would not fit in 128 bits.
    pub fn clmul(self, other: Self) -> Self {
        if let (Some(a), Some(b)) = (self.degree(), other.degree()) {
            assert!(a + b < 128, "product degree overflow");
        }
        let mut acc = 0u128;
        let mut a = self.0;
        let mut shift = 0;
        while a != 0 {
            if a & 1 == 1 {
                acc ^= other.0 << shift;
            }
            a >>= 1;
            shift += 1;
        }
        Self(acc)
    }

    pub fn div_rem(self, m: Self) -> (Self, Self) {
        let dm = m.degree().expect("division by zero polynomial");
        let mut r = self.0;
        let mut q = 0u128;
        while r != 0 {
            let dr = 127 - r.leading_zeros();
            if dr < dm {
                break;
            }
            q |= 1 << (dr - dm);
            r ^= m.0 << (dr - dm);
        }
        (Self(q), Self(r))
    }

    pub fn modulo(self, m: Self) -> Self {
        self.div_rem(m).1
    }

    pub fn mul_mod(self, other: Self, m: Self) -> Self {
        // operands are reduced, so their product has degree < 2 deg(m) <= 126
        self.modulo(m).clmul(other.modulo(m)).modulo(m)
    }

    pub fn pow_mod(self, mut e: u128, m: Self) -> Self {
        let mut base = self.modulo(m);
        let mut acc = Self::ONE.modulo(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_mod(base, m);
            }
            base = base.mul_mod(base, m);
            e >>= 1;
        }
        acc
    }

    pub fn gcd(mut a: Self, mut b: Self) -> Self {
        while !b.is_zero() {
            let r = a.modulo(b);
            a = b;
            b = r;
        }
        a
    }

    /// Formal derivative.
    pub fn derivative(self) -> Self {
        // odd-degree terms x^(2i+1) differentiate to x^(2i)
        Self((self.0 >> 1) & 0x5555_5555_5555_5555_5555_5555_5555_5555)
    }

    /// `x^(2^k) mod m`.
    fn frobenius_power(k: u32, m: Self) -> Self {
        let mut t = Self::X.modulo(m);
        for _ in 0..k {
            t = t.mul_mod(t, m);
        }
        t
    }

    /// Rabin's test. Requires degree <= 64 so products stay in range.
    pub fn is_irreducible(self) -> bool {
        let Some(d) = self.degree() else { return false };
        if d == 0 {
            return false;
        }
        assert!(d <= 64);
        if Self::frobenius_power(d, self) != Self::X.modulo(self) {
            return false;
        }
        for p in prime_divisors(d) {
            let h = Self(Self::frobenius_power(d / p, self).0 ^ Self::X.modulo(self).0);
            if Self::gcd(self, h).degree() != Some(0) {
                return false;
            }
        }
        true
    }

    /// The distinct monic irreducible factors, sorted by (degree, value).
    pub fn irreducible_factors(self, rng: &mut impl RngCore) -> Vec<Self> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let squarefree = self.squarefree_kernel();
        distinct_degree(squarefree, &mut out, rng);
        out.sort_by_key(|f| (f.degree(), f.0));
        out
    }

    /// Product of the distinct irreducible factors (the radical).
    pub fn squarefree_kernel(self) -> Self {
        let mut f = self;
        let mut rad = Self::ONE;
        loop {
            if f.degree().unwrap_or(0) == 0 {
                return rad;
            }
            let g = Self::gcd(f, f.derivative());
            if g.degree() == Some(0) {
                return Self::lcm(rad, f);
            }
            let sqfree_part = f.div_rem(g).0;
            rad = Self::lcm(rad, sqfree_part);
            // remaining repeated factors; when f' = 0, f is a square
            f = if f.derivative().is_zero() {
                f.sqrt()
            } else {
                g
            };
        }
    }

    fn lcm(a: Self, b: Self) -> Self {
        let g = Self::gcd(a, b);
        a.div_rem(g).0.clmul(b)
    }

    /// Square root of a polynomial with only even-degree terms.
    fn sqrt(self) -> Self {
        let mut r = 0u128;
        let mut i = 0;
        while i < 128 {
            if self.0 >> i & 1 == 1 {
                r |= 1 << (i / 2);
            }
            i += 2;
        }
        Self(r)
    }
}

fn prime_divisors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn distinct_degree(f: Gf2Poly, out: &mut Vec<Gf2Poly>, rng: &mut impl RngCore) {
    let mut rest = f;
    let mut k = 1;
    let mut frob = Gf2Poly::X.modulo(rest.max_degree_guard());
    while let Some(d) = rest.degree() {
        if d == 0 {
            break;
        }
        if 2 * k > d {
            out.push(rest);
            break;
        }
        frob = frob.mul_mod(frob, rest);
        let g = Gf2Poly::gcd(rest, Gf2Poly(frob.0 ^ Gf2Poly::X.modulo(rest).0));
        if g.degree().unwrap_or(0) > 0 {
            equal_degree(g, k, out, rng);
            rest = rest.div_rem(g).0;
            frob = frob.modulo(rest);
        }
        k += 1;
    }
}

impl Gf2Poly {
    fn max_degree_guard(self) -> Self {
        assert!(
            self.degree().unwrap_or(0) <= 64,
            "factoring needs degree <= 64"
        );
        self
    }
}

/// Splits a squarefree product of irreducibles of degree `k` (Cantor-Zassenhaus
/// with the trace map, which is the characteristic-2 variant).
fn equal_degree(g: Gf2Poly, k: u32, out: &mut Vec<Gf2Poly>, rng: &mut impl RngCore) {
    let d = g.degree().unwrap_or(0);
    if d == k {
        out.push(g);
        return;
    }
    loop {
        let mask = (1u128 << d) - 1;
        let a = Gf2Poly(((u128::from(rng.next_u64()) << 64) | u128::from(rng.next_u64())) & mask);
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let mut t = a;
        let mut acc = a;
        for _ in 1..k {
            t = t.mul_mod(t, g);
            acc = Gf2Poly(acc.0 ^ t.0);
        }
        let h = Gf2Poly::gcd(g, acc);
        let dh = h.degree().unwrap_or(0);
        if dh > 0 && dh < d {
            equal_degree(h, k, out, rng);
            equal_degree(g.div_rem(h).0, k, out, rng);
            return;
        }
    }
}

impl fmt::Debug for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return f.write_str("0");
        }
        let mut first = true;
        for i in (0..128).rev() {
            if self.0 >> i & 1 == 1 {
                if !first {
                    f.write_str("+")?;
                }
                first = false;
                match i {
                    0 => f.write_str("1")?,
                    1 => f.write_str("x")?,
                    _ => write!(f, "x^{i}")?,
                }
            }
        }
        Ok(())
    }
}

/// The field GF(2^k) as GF(2)[t]/(m), elements packed as `u64` with bit `i`
/// the coefficient of `t^i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExtensionField {
    degree: u32,
    modulus: Gf2Poly,
}

impl ExtensionField {
    /// The fixed defining polynomials used for tensor extensions:
    /// `x^2+x+1`, `x^3+x+1`, `x^4+x+1`, `x^5+x^2+1`, `x^6+x+1`, `x^7+x+1`, `x^8+x^4+x^3+x+1`.
    pub fn standard(k: u32) -> Option<Self> {
        let m: u128 = match k {
            1 => 0b11,
            2 => 0b111,
            3 => 0b1011,
            4 => 0b1_0011,
            5 => 0b10_0101,
            6 => 0b100_0011,
            7 => 0b1000_0011,
            8 => 0b1_0001_1011,
            _ => return None,
        };
        Some(Self {
            degree: k,
            modulus: Gf2Poly(m),
        })
    }

    pub fn with_modulus(modulus: Gf2Poly) -> Option<Self> {
        let d = modulus.degree()?;
        (modulus.is_irreducible()).then_some(Self { degree: d, modulus })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn modulus(&self) -> Gf2Poly {
        self.modulus
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        Gf2Poly(u128::from(a))
            .mul_mod(Gf2Poly(u128::from(b)), self.modulus)
            .0 as u64
    }
}
