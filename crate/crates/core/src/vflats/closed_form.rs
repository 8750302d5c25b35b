//! Closed-form vanishing-flat counts for power functions `x^d` with known
//! differential spectra. All arithmetic is exact; every division is
//! checked to land on an integer.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2n::kloosterman;

/// Exponent families with a closed-form count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum PowerFamily {
    /// `2^t + 1`, `1 <= t <= n/2`.
    Gold { t: u32 },
    /// `2^(2t) - 2^t + 1`, `2 <= t <= n/2`, `n != 3t`, `n/gcd(n,t)` odd.
    Kasami { t: u32 },
    /// `2^n - 2`, `n` even.
    Inverse,
    /// `2^(2t) + 2^t + 1` with `n = 4t`.
    Niho,
    /// `d = 7`, `n >= 6`.
    Seven,
    /// `2^(n-2) - 1` or `2^((n-1)/2) - 1`, `n` odd, `n >= 7`.
    NearInverse,
    /// `2^(n/2) - 1`, `n` even, `n >= 6`.
    HalfMersenne,
    /// `2^(n/2+1) - 1`, `n` even, `n >= 6`.
    HalfMersenneShifted,
    /// `2^((n+3)/2) - 1`, `n` odd, `n >= 7`.
    OddMersenne,
    /// `n = 2t`, `t >= 5` odd: `2^t + 2^((t+1)/2) + 1` or `2^(t+1) + 3`.
    DoubleT,
}

impl PowerFamily {
    pub const NAMES: [&'static str; 10] = [
        "gold",
        "kasami",
        "inverse",
        "niho",
        "d7",
        "near-inverse",
        "half-mersenne",
        "half-mersenne-shifted",
        "odd-mersenne",
        "double-t",
    ];

    /// Builds a family from its name; `t` is required for Gold and Kasami
    /// and ignored otherwise.
    pub fn from_name(name: &str, t: Option<u32>) -> Result<PowerFamily> {
        let need_t = || {
            t.ok_or_else(|| Error::Parameter(format!("family {name} needs parameter t")))
        };
        Ok(match name {
            "gold" => PowerFamily::Gold { t: need_t()? },
            "kasami" => PowerFamily::Kasami { t: need_t()? },
            "inverse" => PowerFamily::Inverse,
            "niho" => PowerFamily::Niho,
            "d7" | "seven" => PowerFamily::Seven,
            "near-inverse" => PowerFamily::NearInverse,
            "half-mersenne" => PowerFamily::HalfMersenne,
            "half-mersenne-shifted" => PowerFamily::HalfMersenneShifted,
            "odd-mersenne" => PowerFamily::OddMersenne,
            "double-t" => PowerFamily::DoubleT,
            other => {
                return Err(Error::Parameter(format!(
                    "unknown family {other:?}; expected one of {}",
                    Self::NAMES.join(", ")
                )))
            }
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            PowerFamily::Gold { .. } => "gold",
            PowerFamily::Kasami { .. } => "kasami",
            PowerFamily::Inverse => "inverse",
            PowerFamily::Niho => "niho",
            PowerFamily::Seven => "d7",
            PowerFamily::NearInverse => "near-inverse",
            PowerFamily::HalfMersenne => "half-mersenne",
            PowerFamily::HalfMersenneShifted => "half-mersenne-shifted",
            PowerFamily::OddMersenne => "odd-mersenne",
            PowerFamily::DoubleT => "double-t",
        }
    }

    /// Checks the side conditions at degree `n`.
    pub fn check(&self, n: u32) -> Result<()> {
        let fail = |cond: &str| Err(Error::Parameter(format!("{}: requires {cond} (n = {n})", self.name())));
        if !(2..=32).contains(&n) {
            return fail("2 <= n <= 32");
        }
        match *self {
            PowerFamily::Gold { t } => {
                if !(1 <= t && 2 * t <= n) {
                    return fail(&format!("1 <= t <= n/2, got t = {t}"));
                }
            }
            PowerFamily::Kasami { t } => {
                if !(2 <= t && 2 * t <= n) {
                    return fail(&format!("2 <= t <= n/2, got t = {t}"));
                }
                if n == 3 * t {
                    return fail("n != 3t");
                }
                if (n / gcd(n, t)).is_multiple_of(2) {
                    return fail("n/gcd(n,t) odd");
                }
            }
            PowerFamily::Inverse => {
                if !n.is_multiple_of(2) {
                    return fail("n even");
                }
            }
            PowerFamily::Niho => {
                if !n.is_multiple_of(4) {
                    return fail("n = 4t");
                }
            }
            PowerFamily::Seven => {
                if n < 6 {
                    return fail("n >= 6");
                }
            }
            PowerFamily::NearInverse | PowerFamily::OddMersenne => {
                if n.is_multiple_of(2) || n < 7 {
                    return fail("n odd and n >= 7");
                }
            }
            PowerFamily::HalfMersenne | PowerFamily::HalfMersenneShifted => {
                if !n.is_multiple_of(2) || n < 6 {
                    return fail("n even and n >= 6");
                }
            }
            PowerFamily::DoubleT => {
                let t = n / 2;
                if !n.is_multiple_of(2) || t < 5 || t.is_multiple_of(2) {
                    return fail("n = 2t with t odd and t >= 5");
                }
            }
        }
        Ok(())
    }

    /// The exponents `d` covered by this family at degree `n`.
    pub fn exponents(&self, n: u32) -> Result<Vec<u64>> {
        self.check(n)?;
        let p = |e: u32| 1u64 << e;
        Ok(match *self {
            PowerFamily::Gold { t } => vec![p(t) + 1],
            PowerFamily::Kasami { t } => vec![p(2 * t) - p(t) + 1],
            PowerFamily::Inverse => vec![p(n) - 2],
            PowerFamily::Niho => {
                let t = n / 4;
                vec![p(2 * t) + p(t) + 1]
            }
            PowerFamily::Seven => vec![7],
            PowerFamily::NearInverse => vec![p(n - 2) - 1, p((n - 1) / 2) - 1],
            PowerFamily::HalfMersenne => vec![p(n / 2) - 1],
            PowerFamily::HalfMersenneShifted => vec![p(n / 2 + 1) - 1],
            PowerFamily::OddMersenne => vec![p((n + 3) / 2) - 1],
            PowerFamily::DoubleT => {
                let t = n / 2;
                vec![p(t) + p(t.div_ceil(2)) + 1, p(t + 1) + 3]
            }
        })
    }
}

impl fmt::Display for PowerFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PowerFamily::Gold { t } | PowerFamily::Kasami { t } => write!(f, "{}(t={t})", self.name()),
            _ => f.write_str(self.name()),
        }
    }
}

impl FromStr for PowerFamily {
    type Err = Error;

    /// Accepts `name` or `name:t`.
    fn from_str(s: &str) -> Result<PowerFamily> {
        match s.split_once(':') {
            Some((name, t)) => {
                let t = t
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad t in {s:?}")))?;
                PowerFamily::from_name(name, Some(t))
            }
            None => PowerFamily::from_name(s, None),
        }
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// `2^e` for any integer `e`.
fn p2(e: i64) -> BigRational {
    let base = BigRational::from_integer(BigInt::one() << e.unsigned_abs());
    if e >= 0 {
        base
    } else {
        base.recip()
    }
}

/// `(-1)^n`.
fn sign(n: u32) -> BigRational {
    if n.is_multiple_of(2) {
        int(1)
    } else {
        int(-1)
    }
}

/// `1` if `a | b`, else `0`.
fn divides(a: u32, b: u32) -> BigRational {
    int(i64::from(b.is_multiple_of(a)))
}

/// `|VB_{n,d}|` from the closed form of `family` at degree `n`.
pub fn closed_form_count(family: PowerFamily, n: u32) -> Result<u64> {
    family.check(n)?;
    let ni = i64::from(n);
    let q1 = p2(ni) - int(1);
    let third = int(3).recip();
    let k = || -> Result<BigRational> { Ok(int(kloosterman(n)?)) };
    let value = match family {
        PowerFamily::Gold { t } | PowerFamily::Kasami { t } => {
            let s = i64::from(gcd(n, t));
            p2(ni - 2) * (p2(s - 1) - int(1)) * &q1 * third
        }
        PowerFamily::Inverse => &q1 * third,
        PowerFamily::Niho => {
            let t = ni / 4;
            (p2(ni - 3) - p2(3 * t - 3)) * &q1 * third
        }
        PowerFamily::Seven => {
            let w4 = divides(2, n);
            let a = (p2(ni - 2) + int(1) - int(3) * w4) / int(6);
            (a + sign(n) * k()? / int(8)) * &q1
        }
        PowerFamily::NearInverse => {
            let w8 = divides(3, n);
            let a = (p2(ni - 1) - int(3) - sign(n) * int(5)) / int(12);
            (a + sign(n) * k()? / int(8) + w8) * &q1
        }
        PowerFamily::HalfMersenne => {
            let h = ni / 2;
            let w4 = int(1) - divides(4, n);
            ((p2(h - 1) - int(1)) * (p2(h - 2) - int(1)) + w4) * &q1 * third
        }
        PowerFamily::HalfMersenneShifted => {
            let h = ni / 2;
            p2(h - 2) * (p2(h - 1) - int(1)) * &q1 * third
        }
        PowerFamily::OddMersenne => ((p2(ni - 2) + int(1)) / int(6) - k()? / int(8)) * &q1,
        PowerFamily::DoubleT => p2(ni - 2) * &q1 * third,
    };
    if !value.is_integer() {
        return Err(Error::InexactDivision("closed_form_count"));
    }
    if value.is_negative() && !value.is_zero() {
        return Err(Error::Domain(format!("{family} at n = {n} evaluates to {value}")));
    }
    value
        .to_integer()
        .to_u64()
        .ok_or_else(|| Error::Domain(format!("{family} at n = {n}: count exceeds u64")))
}
