//! Dembowski-Ostrom polynomials `f(x) = sum c_ij x^(2^i + 2^j)`, `i < j`.

use std::collections::BTreeMap;

use rand::seq::index;
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::boolfunc::FunctionTable;
use crate::error::{Error, Result};
use crate::gf2n::FieldSpec;
pub use crate::linalg::BinaryMatrix;

/// A DO polynomial with sparse, nonzero coefficients keyed by `(i, j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DOPolynomial {
    field: FieldSpec,
    coeffs: BTreeMap<(u32, u32), u32>,
}

#[derive(Serialize, Deserialize)]
struct Term {
    i: u32,
    j: u32,
    c: u32,
}

#[derive(Serialize, Deserialize)]
struct DoRecord {
    n: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    modulus: Option<u32>,
    terms: Vec<Term>,
}

impl DOPolynomial {
    /// Builds from `(i, j, c)` triples. Keys are normalised to `i < j`;
    /// repeated keys are summed and zero coefficients dropped.
    pub fn new(field: FieldSpec, terms: &[(u32, u32, u32)]) -> Result<Self> {
        let n = field.n();
        let mut coeffs = BTreeMap::new();
        for &(i, j, c) in terms {
            let (i, j) = (i.min(j), i.max(j));
            if i == j || j >= n {
                return Err(Error::Domain(format!(
                    "term ({i}, {j}) needs 0 <= i < j < {n}"
                )));
            }
            field.check(c)?;
            *coeffs.entry((i, j)).or_insert(0) ^= c;
        }
        coeffs.retain(|_, c| *c != 0);
        Ok(DOPolynomial { field, coeffs })
    }

    /// The Gold monomial `x^(2^t + 1)`.
    pub fn gold(field: FieldSpec, t: u32) -> Result<Self> {
        Self::new(field, &[(0, t, 1)])
    }

    /// A random polynomial with `support` distinct terms, each with a
    /// uniformly random nonzero coefficient.
    pub fn random<R: Rng + ?Sized>(field: FieldSpec, support: usize, rng: &mut R) -> Result<Self> {
        let n = field.n();
        let pairs: Vec<(u32, u32)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        if support > pairs.len() {
            return Err(Error::Parameter(format!(
                "support {support} exceeds the {} available terms",
                pairs.len()
            )));
        }
        let coeffs = index::sample(rng, pairs.len(), support)
            .into_iter()
            .map(|k| (pairs[k], rng.gen_range(1..field.size() as u32)))
            .collect();
        Ok(DOPolynomial { field, coeffs })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, u32)> + '_ {
        self.coeffs.iter().map(|(&(i, j), &c)| (i, j, c))
    }

    pub fn coefficient(&self, i: u32, j: u32) -> u32 {
        self.coeffs.get(&(i.min(j), i.max(j))).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The same polynomial as univariate `(c, 2^i + 2^j)` pairs.
    pub fn univariate_terms(&self) -> Vec<(u32, u64)> {
        self.terms().map(|(i, j, c)| (c, (1u64 << i) + (1u64 << j))).collect()
    }

    pub fn evaluate(&self, x: u32) -> Result<u32> {
        self.field.check(x)?;
        Ok(self.eval_unchecked(x))
    }

    fn eval_unchecked(&self, x: u32) -> u32 {
        let fd = &self.field;
        let frob: Vec<u32> = frobenius_powers(fd, x);
        self.terms().fold(0, |acc, (i, j, c)| {
            acc ^ fd.mul(c, fd.mul(frob[i as usize], frob[j as usize]))
        })
    }

    pub fn to_table(&self) -> FunctionTable {
        FunctionTable::from_fn(self.field, |x| self.eval_unchecked(x))
    }

    /// `L_{f,a}(x) = sum c_ij (a^(2^i) x^(2^j) + a^(2^j) x^(2^i))`.
    pub fn linearized(&self, a: u32, x: u32) -> u32 {
        let fd = &self.field;
        let fa = frobenius_powers(fd, a);
        let fx = frobenius_powers(fd, x);
        self.terms().fold(0, |acc, (i, j, c)| {
            let (i, j) = (i as usize, j as usize);
            acc ^ fd.mul(c, fd.mul(fa[i], fx[j]) ^ fd.mul(fa[j], fx[i]))
        })
    }

    /// The matrix of `x -> L_{f,a}(x)` in the polynomial basis.
    pub fn linearized_matrix(&self, a: u32) -> Result<BinaryMatrix> {
        self.field.check(a)?;
        if a == 0 {
            return Err(Error::Domain("linearized derivative needs a != 0".into()));
        }
        Ok(BinaryMatrix::from_linear_map(self.field.n(), |e| self.linearized(a, e)))
    }

    /// `rank(L_{f,a})` for `a = 1, ..., 2^n - 1`, in that order.
    pub fn rank_multiset(&self) -> Vec<u32> {
        (1..self.field.size() as u32)
            .into_par_iter()
            .map(|a| {
                BinaryMatrix::from_linear_map(self.field.n(), |e| self.linearized(a, e)).rank()
            })
            .collect()
    }

    /// Rank histogram `h -> #{a : rank(L_{f,a}) = h}`.
    pub fn rank_histogram(&self) -> BTreeMap<u32, u64> {
        let mut hist = BTreeMap::new();
        for h in self.rank_multiset() {
            *hist.entry(h).or_insert(0) += 1;
        }
        hist
    }

    /// `|VB_{n,f}| = 2^(n-2)/3 * sum_{h in R_f} (2^(n-h-1) - 1)`.
    pub fn count_vflats(&self) -> Result<u64> {
        let n = self.field.n();
        let sum: u128 = self
            .rank_histogram()
            .into_iter()
            .map(|(h, mult)| {
                // a lies in the kernel, so h <= n - 1.
                u128::from(mult) * ((1u128 << (n - h - 1)) - 1)
            })
            .sum();
        let total = sum << (n - 2);
        if !total.is_multiple_of(3) {
            return Err(Error::InexactDivision("count_vflats"));
        }
        u64::try_from(total / 3).map_err(|_| Error::Capacity("count exceeds u64".into()))
    }

    /// Whether `{0, x1, x2, x1 + x2}` is a vanishing flat, via
    /// `L_{f,x1}(x2) = 0`.
    pub fn is_vanishing_pair(&self, x1: u32, x2: u32) -> Result<bool> {
        self.field.check(x1)?;
        self.field.check(x2)?;
        if x1 == 0 || x2 == 0 || x1 == x2 {
            return Err(Error::Domain(format!(
                "{{0, {x1}, {x2}, {}}} is not a 2-flat",
                x1 ^ x2
            )));
        }
        Ok(self.linearized(x1, x2) == 0)
    }
}

fn frobenius_powers(field: &FieldSpec, x: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(field.n() as usize);
    let mut y = x;
    for _ in 0..field.n() {
        out.push(y);
        y = field.square(y);
    }
    out
}

impl Serialize for DOPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DoRecord {
            n: self.field.n(),
            modulus: Some(self.field.modulus()),
            terms: self.terms().map(|(i, j, c)| Term { i, j, c }).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for DOPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let rec = DoRecord::deserialize(d)?;
        let field = match rec.modulus {
            Some(m) => FieldSpec::new(rec.n, m),
            None => FieldSpec::with_default_modulus(rec.n),
        }
        .map_err(D::Error::custom)?;
        let terms: Vec<_> = rec.terms.iter().map(|t| (t.i, t.j, t.c)).collect();
        DOPolynomial::new(field, &terms).map_err(D::Error::custom)
    }
}
