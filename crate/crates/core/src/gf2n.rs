//! Arithmetic in GF(2^n) for 2 <= n <= 16.
//!
//! Elements are bit-packed into a `u32` in the polynomial basis: bit `i` is
//! the coefficient of `x^i`. [`FieldSpec`] carries the extension degree and
//! the reduction polynomial and exposes raw arithmetic on those encodings;
//! [`FieldElement`] is the checked, field-tagged variant.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MIN_DEGREE: u32 = 2;
pub const MAX_DEGREE: u32 = 16;

/// Lowest-weight, then numerically smallest, primitive polynomial for each
/// degree 2..=16.
const DEFAULT_MODULI: [u32; 15] = [
    0x7, 0xb, 0x13, 0x25, 0x43, 0x83, 0x11d, 0x211, 0x409, 0x805, 0x1053, 0x201b, 0x402b,
    0x8003, 0x1002d,
];

/// The ambient field GF(2^n) with a fixed polynomial basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawFieldSpec")]
pub struct FieldSpec {
    n: u32,
    modulus: u32,
}

#[derive(Deserialize)]
struct RawFieldSpec {
    n: u32,
    modulus: u32,
}

impl TryFrom<RawFieldSpec> for FieldSpec {
    type Error = Error;

    fn try_from(raw: RawFieldSpec) -> Result<Self> {
        FieldSpec::new(raw.n, raw.modulus)
    }
}

impl FieldSpec {
    /// Builds a field from an explicit modulus, rejecting polynomials of the
    /// wrong degree and reducible ones.
    pub fn new(n: u32, modulus: u32) -> Result<Self> {
        let invalid = |reason| Error::InvalidField { n, modulus, reason };
        if !(MIN_DEGREE..=MAX_DEGREE).contains(&n) {
            return Err(invalid("degree must lie in 2..=16"));
        }
        if modulus >> n != 1 {
            return Err(invalid("modulus must have degree exactly n"));
        }
        let field = FieldSpec { n, modulus };
        field.primitive_element()?;
        Ok(field)
    }

    /// The field built from the shipped modulus for degree `n`.
    pub fn with_default_modulus(n: u32) -> Result<Self> {
        if !(MIN_DEGREE..=MAX_DEGREE).contains(&n) {
            return Err(Error::InvalidField {
                n,
                modulus: 0,
                reason: "degree must lie in 2..=16",
            });
        }
        Ok(FieldSpec {
            n,
            modulus: DEFAULT_MODULI[(n - MIN_DEGREE) as usize],
        })
    }

    /// The shipped modulus for degree `n`, if `n` is supported.
    pub fn default_modulus(n: u32) -> Option<u32> {
        (MIN_DEGREE..=MAX_DEGREE)
            .contains(&n)
            .then(|| DEFAULT_MODULI[(n - MIN_DEGREE) as usize])
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Number of field elements, `2^n`.
    pub fn size(&self) -> usize {
        1usize << self.n
    }

    /// Order of the multiplicative group, `2^n - 1`.
    pub fn group_order(&self) -> u32 {
        (1u32 << self.n) - 1
    }

    pub fn contains(&self, value: u32) -> bool {
        value >> self.n == 0
    }

    pub fn check(&self, value: u32) -> Result<u32> {
        if self.contains(value) {
            Ok(value)
        } else {
            Err(Error::ElementOutOfRange {
                value: value as u64,
                n: self.n,
            })
        }
    }

    /// Wraps a raw encoding as a checked element of this field.
    pub fn element(&self, value: u32) -> Result<FieldElement> {
        self.check(value)?;
        Ok(FieldElement { field: *self, value })
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        a ^ b
    }

    /// Carry-less product reduced modulo the field polynomial.
    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        debug_assert!(self.contains(a) && self.contains(b));
        let mut acc = 0u32;
        let mut a = a;
        let mut b = b;
        let top = 1u32 << self.n;
        while b != 0 {
            if b & 1 != 0 {
                acc ^= a;
            }
            b >>= 1;
            a <<= 1;
            if a & top != 0 {
                a ^= self.modulus;
            }
        }
        acc
    }

    #[inline]
    pub fn square(&self, a: u32) -> u32 {
        self.mul(a, a)
    }

    /// `a^d` by square-and-multiply, with `0^0 = 1`.
    pub fn pow(&self, a: u32, d: u64) -> u32 {
        let mut result = 1u32;
        let mut base = a;
        let mut e = d;
        while e != 0 {
            if e & 1 != 0 {
                result = self.mul(result, base);
            }
            e >>= 1;
            if e != 0 {
                base = self.square(base);
            }
        }
        result
    }

    /// Multiplicative inverse, computed as `a^(2^n - 2)`.
    pub fn inv(&self, a: u32) -> Result<u32> {
        if a == 0 {
            return Err(Error::Domain("zero has no multiplicative inverse".into()));
        }
        Ok(self.pow(a, (self.group_order() - 1) as u64))
    }

    /// `a / b`.
    pub fn div(&self, a: u32, b: u32) -> Result<u32> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// The Galois automorphism `a -> a^(2^i)` for `0 <= i < n`.
    pub fn frobenius(&self, a: u32, i: u32) -> Result<u32> {
        if i >= self.n {
            return Err(Error::Domain(format!(
                "Frobenius index {i} out of range 0..{}",
                self.n
            )));
        }
        Ok(self.frobenius_unchecked(a, i))
    }

    /// `a^(2^i)` for any `i`; exponents wrap modulo `n`.
    #[inline]
    pub fn frobenius_unchecked(&self, a: u32, i: u32) -> u32 {
        (0..i % self.n).fold(a, |acc, _| self.square(acc))
    }

    /// Multiplicative order of a nonzero element.
    pub fn order_of(&self, a: u32) -> Result<u32> {
        if a == 0 {
            return Err(Error::Domain("zero has no multiplicative order".into()));
        }
        let mut order = self.group_order();
        // If this is not a field the element may not be a unit at all.
        if self.pow(a, order as u64) != 1 {
            return Err(Error::InvalidField {
                n: self.n,
                modulus: self.modulus,
                reason: "modulus is not irreducible",
            });
        }
        for p in prime_factors(order) {
            while order.is_multiple_of(p) && self.pow(a, (order / p) as u64) == 1 {
                order /= p;
            }
        }
        Ok(order)
    }

    /// Smallest encoding of multiplicative order exactly `2^n - 1`.
    ///
    /// Failure means the modulus is not irreducible.
    pub fn primitive_element(&self) -> Result<u32> {
        let order = self.group_order();
        let primes = prime_factors(order);
        (2..(1u32 << self.n))
            .find(|&g| {
                self.pow(g, order as u64) == 1
                    && primes.iter().all(|&p| self.pow(g, (order / p) as u64) != 1)
            })
            .ok_or(Error::InvalidField {
                n: self.n,
                modulus: self.modulus,
                reason: "modulus is not irreducible",
            })
    }

    /// The primitive cube root of unity `alpha^((2^n - 1)/3)`; needs `n` even.
    pub fn cube_root_of_unity(&self) -> Result<u32> {
        if !self.n.is_multiple_of(2) {
            return Err(Error::Unsupported(format!(
                "3 does not divide 2^{} - 1 for odd n",
                self.n
            )));
        }
        let alpha = self.primitive_element()?;
        Ok(self.pow(alpha, (self.group_order() / 3) as u64))
    }

    /// The elements of the subfield GF(2^s), `s | n`, in ascending order.
    pub fn subfield(&self, s: u32) -> Result<Vec<u32>> {
        if s == 0 || !self.n.is_multiple_of(s) {
            return Err(Error::Parameter(format!(
                "GF(2^{s}) is not a subfield of GF(2^{})",
                self.n
            )));
        }
        let alpha = self.primitive_element()?;
        let sub_order = (1u32 << s) - 1;
        let generator = self.pow(alpha, (self.group_order() / sub_order) as u64);
        let mut elems = Vec::with_capacity(1 << s);
        elems.push(0);
        let mut g = 1;
        for _ in 0..sub_order {
            elems.push(g);
            g = self.mul(g, generator);
        }
        elems.sort_unstable();
        Ok(elems)
    }

    /// True if `a` lies in the subfield GF(2^s), i.e. `a^(2^s) = a`.
    pub fn in_subfield(&self, a: u32, s: u32) -> bool {
        self.frobenius_unchecked(a, s) == a
    }

    /// The absolute trace `a + a^2 + ... + a^(2^(n-1))`, always 0 or 1.
    pub fn trace(&self, a: u32) -> u32 {
        let mut acc = 0;
        let mut x = a;
        for _ in 0..self.n {
            acc ^= x;
            x = self.square(x);
        }
        acc
    }
}

/// Exponential and logarithm tables relative to the primitive element.
///
/// An optional faster path for multiplication; it agrees bit-exactly with
/// [`FieldSpec::mul`].
#[derive(Debug, Clone)]
pub struct LogTables {
    field: FieldSpec,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl LogTables {
    pub fn new(field: FieldSpec) -> Result<Self> {
        let alpha = field.primitive_element()?;
        let order = field.group_order() as usize;
        let mut exp = vec![0u32; 2 * order];
        let mut log = vec![0u32; field.size()];
        let mut g = 1u32;
        for (i, slot) in exp.iter_mut().enumerate().take(order) {
            *slot = g;
            log[g as usize] = i as u32;
            g = field.mul(g, alpha);
        }
        for i in order..2 * order {
            exp[i] = exp[i - order];
        }
        Ok(LogTables { field, exp, log })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// `alpha^i` for the primitive element `alpha`.
    pub fn exp(&self, i: u64) -> u32 {
        self.exp[(i % self.field.group_order() as u64) as usize]
    }

    /// Discrete logarithm of a nonzero element.
    pub fn log(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.log[a as usize])
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            0
        } else {
            self.exp[(self.log[a as usize] + self.log[b as usize]) as usize]
        }
    }

    pub fn pow(&self, a: u32, d: u64) -> u32 {
        if d == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let order = self.field.group_order() as u64;
        self.exp[((self.log[a as usize] as u64 * (d % order)) % order) as usize]
    }
}

/// A field element tagged with its field; arithmetic checks that both
/// operands live in the same field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    field: FieldSpec,
    value: u32,
}

impl FieldElement {
    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    fn same_field(&self, other: &FieldElement) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    fn wrap(&self, value: u32) -> FieldElement {
        FieldElement {
            field: self.field,
            value,
        }
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.wrap(self.value ^ other.value))
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.wrap(self.field.mul(self.value, other.value)))
    }

    pub fn pow(&self, d: u64) -> FieldElement {
        self.wrap(self.field.pow(self.value, d))
    }

    pub fn inv(&self) -> Result<FieldElement> {
        Ok(self.wrap(self.field.inv(self.value)?))
    }

    pub fn frobenius(&self, i: u32) -> Result<FieldElement> {
        Ok(self.wrap(self.field.frobenius(self.value, i)?))
    }
}

impl Serialize for FieldElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_u32(self.value)
    }
}

fn prime_factors(mut m: u32) -> Vec<u32> {
    let mut primes = Vec::new();
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            primes.push(p);
            while m.is_multiple_of(p) {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        primes.push(m);
    }
    primes
}

/// The Kloosterman value entering the differential spectra of `x^7` and
/// related power functions:
///
/// `K = 1 + (-1)^(n-1) / 2^(n-1) * sum_{i=0}^{floor(n/2)} (-1)^i C(n, 2i) 7^i`.
pub fn kloosterman(n: u32) -> Result<i64> {
    if n < MIN_DEGREE {
        return Err(Error::Parameter(format!("Kloosterman value needs n >= 2, got {n}")));
    }
    let mut sum = BigInt::zero();
    let mut binom = BigInt::one();
    let mut seven = BigInt::one();
    // binom tracks C(n, k) for k = 0, 1, 2, ...
    for k in 0..=n {
        if k % 2 == 0 {
            let term = &binom * &seven;
            if (k / 2) % 2 == 0 {
                sum += term;
            } else {
                sum -= term;
            }
            seven *= 7;
        }
        binom = binom * BigInt::from(n - k) / BigInt::from(k + 1);
    }
    let denom = BigInt::one() << (n - 1);
    let (quot, rem) = sum.div_rem(&denom);
    if !rem.is_zero() {
        return Err(Error::InexactDivision("kloosterman"));
    }
    let signed = if (n - 1).is_multiple_of(2) { quot } else { -quot };
    (BigInt::one() + signed)
        .to_i64().ok_or(Error::InexactDivision("kloosterman"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(n: u32) -> FieldSpec {
        FieldSpec::with_default_modulus(n).unwrap()
    }

    /// Schoolbook product of two polynomials over F_2 followed by long
    /// division; independent of the interleaved shift-and-reduce loop.
    fn naive_mul(a: u32, b: u32, modulus: u32, n: u32) -> u32 {
        let mut prod: u64 = 0;
        for i in 0..32 {
            if (b >> i) & 1 == 1 {
                prod ^= (a as u64) << i;
            }
        }
        for bit in (n as u64..64).rev() {
            if (prod >> bit) & 1 == 1 {
                prod ^= (modulus as u64) << (bit - n as u64);
            }
        }
        prod as u32
    }

    #[test]
    fn default_moduli_are_valid_and_primitive() {
        for n in MIN_DEGREE..=MAX_DEGREE {
            let m = FieldSpec::default_modulus(n).unwrap();
            let field = FieldSpec::new(n, m).unwrap();
            // Primitive polynomial: x itself generates the group.
            assert_eq!(field.order_of(2).unwrap(), field.group_order(), "n = {n}");
        }
    }

    #[test]
    fn rejects_bad_moduli() {
        assert!(matches!(
            FieldSpec::new(4, 0b10101),
            Err(Error::InvalidField { .. })
        )); // x^4+x^2+1 = (x^2+x+1)^2
        assert!(FieldSpec::new(3, 0b111).is_err()); // wrong degree
        assert!(FieldSpec::new(1, 0b11).is_err());
        assert!(FieldSpec::new(17, 0x2_0009).is_err());
        // Irreducible but not primitive is still a field.
        assert!(FieldSpec::new(4, 0b11111).is_ok());
    }

    #[test]
    fn add_examples() {
        let f = gf(3);
        assert_eq!(f.add(0b011, 0b101), 0b110);
        for a in 0..8 {
            assert_eq!(f.add(a, 0), a);
            assert_eq!(f.add(a, a), 0);
        }
    }

    #[test]
    fn mul_examples_gf8() {
        let f = FieldSpec::new(3, 0b1011).unwrap();
        assert_eq!(f.mul(0b010, 0b010), 0b100);
        assert_eq!(f.mul(0b100, 0b010), 0b011);
        for a in 0..8 {
            assert_eq!(f.mul(a, 1), a);
        }
    }

    #[test]
    fn mul_matches_schoolbook_oracle() {
        for n in 2..=8 {
            let f = gf(n);
            for a in 0..f.size() as u32 {
                for b in 0..f.size() as u32 {
                    assert_eq!(f.mul(a, b), naive_mul(a, b, f.modulus(), n));
                }
            }
        }
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for n in 2..=6 {
            let f = gf(n);
            let q = f.size() as u32;
            for a in 0..q {
                for b in 0..q {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in 0..q {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn distributivity_sampled_n8() {
        let f = gf(8);
        for a in (0..256).step_by(7) {
            for b in 0..256 {
                for c in (0..256).step_by(13) {
                    assert_eq!(f.mul(a, b ^ c), f.mul(a, b) ^ f.mul(a, c));
                }
            }
        }
    }

    #[test]
    fn pow_conventions() {
        let f = gf(5);
        for a in 0..32 {
            assert_eq!(f.pow(a, 0), 1);
            assert_eq!(f.pow(a, 1), a);
        }
        assert_eq!(f.pow(0, 3), 0);
    }

    #[test]
    fn primitive_element_has_full_order_by_exhaustive_multiplication() {
        for n in 2..=10 {
            let f = gf(n);
            let alpha = f.primitive_element().unwrap();
            let mut seen = vec![false; f.size()];
            let mut g = 1;
            for k in 1..=f.group_order() {
                assert!(!seen[g as usize], "n = {n}: revisit at step {k}");
                seen[g as usize] = true;
                g = f.mul(g, alpha);
                if k < f.group_order() {
                    assert_ne!(g, 1);
                }
            }
            assert_eq!(g, 1);
            assert!(seen.iter().skip(1).all(|&s| s));
            assert_eq!(f.pow(alpha, f.group_order() as u64), 1);
        }
    }

    #[test]
    fn primitive_element_gf4_and_determinism() {
        let f = FieldSpec::new(2, 0b111).unwrap();
        assert_eq!(f.primitive_element().unwrap(), 0b10);
        let g = gf(12);
        assert_eq!(g.primitive_element().unwrap(), g.primitive_element().unwrap());
        // x^4+x^3+x^2+x+1 is irreducible but x has order 5, so alpha != 2.
        let h = FieldSpec::new(4, 0b11111).unwrap();
        let alpha = h.primitive_element().unwrap();
        assert_eq!(h.order_of(alpha).unwrap(), 15);
        assert_eq!(h.order_of(2).unwrap(), 5);
        assert_eq!(alpha, 3);
    }

    #[test]
    fn inverse_two_ways() {
        for n in 2..=9 {
            let f = gf(n);
            assert_eq!(f.inv(1).unwrap(), 1);
            assert!(f.inv(0).is_err());
            for a in 1..f.size() as u32 {
                let i = f.inv(a).unwrap();
                assert_eq!(f.mul(a, i), 1);
                assert_eq!(i, f.pow(a, f.size() as u64 - 2));
            }
        }
    }

    #[test]
    fn frobenius_is_an_automorphism() {
        for n in 2..=7 {
            let f = gf(n);
            let q = f.size() as u32;
            assert!(f.frobenius(1, n).is_err());
            for a in 0..q {
                assert_eq!(f.frobenius(a, 0).unwrap(), a);
                let mut x = a;
                for _ in 0..n {
                    x = f.frobenius(x, 1).unwrap();
                }
                assert_eq!(x, a);
                for b in 0..q {
                    for i in 0..n {
                        let fa = f.frobenius(a, i).unwrap();
                        let fb = f.frobenius(b, i).unwrap();
                        assert_eq!(f.frobenius(a ^ b, i).unwrap(), fa ^ fb);
                        assert_eq!(f.frobenius(f.mul(a, b), i).unwrap(), f.mul(fa, fb));
                    }
                }
            }
        }
    }

    #[test]
    fn cube_root_of_unity() {
        for n in (2..=16).step_by(2) {
            let f = gf(n);
            let z = f.cube_root_of_unity().unwrap();
            assert_ne!(z, 1);
            assert_eq!(f.pow(z, 3), 1);
            assert_eq!(1 ^ z ^ f.square(z), 0);
        }
        let f4 = gf(2);
        assert_eq!(f4.cube_root_of_unity().unwrap(), f4.primitive_element().unwrap());
        assert!(matches!(gf(5).cube_root_of_unity(), Err(Error::Unsupported(_))));
    }

    #[test]
    fn log_tables_agree_with_shift_and_xor() {
        for n in 2..=8 {
            let f = gf(n);
            let t = LogTables::new(f).unwrap();
            for a in 0..f.size() as u32 {
                for b in 0..f.size() as u32 {
                    assert_eq!(t.mul(a, b), f.mul(a, b));
                }
                for d in [0u64, 1, 2, 3, 7, 100, 1 << 20] {
                    assert_eq!(t.pow(a, d), f.pow(a, d), "n={n} a={a} d={d}");
                }
            }
        }
    }

    #[test]
    fn subfields() {
        let f = gf(6);
        let f4 = f.subfield(2).unwrap();
        assert_eq!(f4.len(), 4);
        assert!(f4.iter().all(|&z| f.in_subfield(z, 2)));
        let f8 = f.subfield(3).unwrap();
        assert_eq!(f8.len(), 8);
        assert_eq!(f.subfield(1).unwrap(), vec![0, 1]);
        assert!(f.subfield(4).is_err());
        let brute: Vec<u32> = (0..64).filter(|&z| f.in_subfield(z, 3)).collect();
        assert_eq!(brute, f8);
    }

    #[test]
    fn checked_elements() {
        let f3 = gf(3);
        let f4 = gf(4);
        let a = f3.element(5).unwrap();
        let b = f4.element(5).unwrap();
        assert_eq!(a.add(&b), Err(Error::FieldMismatch));
        assert_eq!(a.mul(&b), Err(Error::FieldMismatch));
        assert!(f3.element(8).is_err());
        let c = f3.element(3).unwrap();
        assert_eq!(a.add(&c).unwrap().value(), 6);
        assert_eq!(a.mul(&a.inv().unwrap()).unwrap().value(), 1);
        assert_eq!(serde_json::to_string(&a).unwrap(), "5");
    }

    #[test]
    fn field_spec_serde() {
        let f = gf(8);
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"{"n":8,"modulus":285}"#);
        let back: FieldSpec = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
        assert!(serde_json::from_str::<FieldSpec>(r#"{"n":4,"modulus":21}"#).is_err());
    }

    #[test]
    fn kloosterman_values() {
        assert_eq!(kloosterman(6).unwrap(), -8);
        assert_eq!(kloosterman(7).unwrap(), -12);
        for n in 2..=16 {
            kloosterman(n).unwrap();
        }
        assert!(kloosterman(1).is_err());
    }

    /// Independent oracle: `K = sum_{x in GF(2^n)} (-1)^Tr(x^-1 + x)` with
    /// `0^-1 = 0`.
    #[test]
    fn kloosterman_matches_character_sum() {
        for n in 2..=12 {
            let f = gf(n);
            let brute: i64 = (0..f.size() as u32)
                .map(|x| {
                    let inv = if x == 0 { 0 } else { f.inv(x).unwrap() };
                    if f.trace(inv ^ x) == 0 {
                        1
                    } else {
                        -1
                    }
                })
                .sum();
            assert_eq!(kloosterman(n).unwrap(), brute, "n = {n}");
        }
    }
}
