//! Covers of GF(2^n): partitions into affine subspaces of one dimension,
//! built from Gold permutations `x^(2^t + 1)`.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::boolfunc::FunctionTable;
use crate::error::{Error, Result};
use crate::gf2n::FieldSpec;
use crate::linalg::{rank, reduced_basis, span};

/// `base + span(basis)`. The basis is kept in reduced row-echelon form and
/// the base is the smallest point, so equal subspaces compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawSubspace")]
pub struct AffineSubspace {
    base: u32,
    basis: Vec<u32>,
}

#[derive(Deserialize)]
struct RawSubspace {
    base: u32,
    basis: Vec<u32>,
}

impl TryFrom<RawSubspace> for AffineSubspace {
    type Error = Error;

    fn try_from(raw: RawSubspace) -> Result<Self> {
        AffineSubspace::new(raw.base, &raw.basis)
    }
}

/// Clears the pivot bits of `x` using a reduced basis.
fn reduce(x: u32, basis: &[u32]) -> u32 {
    basis.iter().fold(x, |acc, &b| {
        let lead = 31 - b.leading_zeros();
        if (acc >> lead) & 1 == 1 {
            acc ^ b
        } else {
            acc
        }
    })
}

impl AffineSubspace {
    pub fn new(base: u32, basis: &[u32]) -> Result<Self> {
        if rank(basis) as usize != basis.len() {
            return Err(Error::Domain(format!("basis {basis:?} is linearly dependent")));
        }
        let basis = reduced_basis(basis);
        Ok(AffineSubspace {
            base: reduce(base, &basis),
            basis,
        })
    }

    /// Recognises a point set as a flat, or returns `None`.
    pub fn from_points(points: &[u32]) -> Option<Self> {
        let (&first, _) = points.split_first()?;
        let diffs: Vec<u32> = points.iter().map(|&p| p ^ first).collect();
        let basis = reduced_basis(&diffs);
        if 1usize << basis.len() != points.len() {
            return None;
        }
        let mut seen: BTreeSet<u32> = BTreeSet::new();
        for &d in &diffs {
            if !seen.insert(d) {
                return None;
            }
        }
        // |points| = 2^rank and all distinct, so they fill the coset.
        Some(AffineSubspace {
            base: reduce(first, &basis),
            basis,
        })
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn basis(&self) -> &[u32] {
        &self.basis
    }

    pub fn dimension(&self) -> u32 {
        self.basis.len() as u32
    }

    /// The linear part, sorted.
    pub fn linear_part(&self) -> Vec<u32> {
        let mut v = span(&self.basis);
        v.sort_unstable();
        v
    }

    /// All points, sorted.
    pub fn points(&self) -> Vec<u32> {
        let mut v: Vec<u32> = span(&self.basis).into_iter().map(|p| p ^ self.base).collect();
        v.sort_unstable();
        v
    }

    pub fn contains(&self, x: u32) -> bool {
        reduce(x ^ self.base, &self.basis) == 0
    }

    pub fn translate(&self, c: u32) -> Self {
        AffineSubspace {
            base: reduce(self.base ^ c, &self.basis),
            basis: self.basis.clone(),
        }
    }

    pub fn is_parallel(&self, other: &Self) -> bool {
        self.basis == other.basis
    }
}

/// A family of flats of one dimension, intended to partition the field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cover {
    field: FieldSpec,
    dimension: u32,
    flats: Vec<AffineSubspace>,
}

impl Cover {
    /// Builds a cover candidate; every flat must have dimension `dimension`
    /// and lie in the field. Partition properties are not checked here.
    pub fn new(field: FieldSpec, dimension: u32, flats: Vec<AffineSubspace>) -> Result<Self> {
        for fl in &flats {
            if fl.dimension() != dimension {
                return Err(Error::Domain(format!(
                    "flat with base {} has dimension {}, expected {dimension}",
                    fl.base,
                    fl.dimension()
                )));
            }
            field.check(fl.base)?;
            for &b in &fl.basis {
                field.check(b)?;
            }
        }
        Ok(Cover {
            field,
            dimension,
            flats,
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    pub fn flats(&self) -> &[AffineSubspace] {
        &self.flats
    }

    /// One line per flat listing its points; only for dimension <= 3.
    pub fn listing(&self) -> Result<String> {
        if self.dimension > 3 {
            return Err(Error::Unsupported(format!(
                "point listing for dimension {} > 3",
                self.dimension
            )));
        }
        let mut out = String::new();
        for fl in &self.flats {
            let pts: Vec<String> = fl.points().iter().map(u32::to_string).collect();
            writeln!(out, "{}", pts.join(" ")).expect("write to String");
        }
        Ok(out)
    }
}

/// Why a family fails to be a cover, or `Ok` if it is one.
pub fn check_cover(c: &Cover) -> Result<()> {
    let n = c.field.n();
    if c.dimension > n {
        return Err(Error::NotACover(format!("dimension {} exceeds n = {n}", c.dimension)));
    }
    let expected = 1usize << (n - c.dimension);
    if c.flats.len() != expected {
        return Err(Error::NotACover(format!(
            "{} flats, a partition needs {expected}",
            c.flats.len()
        )));
    }
    let mut owner = vec![usize::MAX; c.field.size()];
    for (k, fl) in c.flats.iter().enumerate() {
        for p in fl.points() {
            let slot = &mut owner[p as usize];
            if *slot != usize::MAX {
                return Err(Error::NotACover(format!("flats {} and {k} share point {p}", *slot)));
            }
            *slot = k;
        }
    }
    if let Some(p) = owner.iter().position(|&o| o == usize::MAX) {
        return Err(Error::NotACover(format!("point {p} is not covered")));
    }
    Ok(())
}

pub fn verify_cover(c: &Cover) -> bool {
    check_cover(c).is_ok()
}

/// True iff all linear parts are distinct.
pub fn verify_nonparallel(c: &Cover) -> Result<bool> {
    check_cover(c)?;
    let mut seen = BTreeSet::new();
    Ok(c.flats.iter().all(|fl| seen.insert(fl.basis.clone())))
}

/// True iff any two linear parts meet only in 0, i.e. no nonzero vector
/// lies in two of them.
pub fn verify_totally_skew(c: &Cover) -> Result<bool> {
    check_cover(c)?;
    let mut used = vec![false; c.field.size()];
    for fl in &c.flats {
        for v in span(&fl.basis).into_iter().skip(1) {
            if std::mem::replace(&mut used[v as usize], true) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Groups flat indices by linear part, in order of first appearance.
pub fn parallel_decomposition(c: &Cover) -> Result<Vec<Vec<usize>>> {
    check_cover(c)?;
    let mut index: HashMap<&[u32], usize> = HashMap::new();
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for (k, fl) in c.flats.iter().enumerate() {
        let g = *index.entry(&fl.basis).or_insert_with(|| {
            groups.push(Vec::new());
            groups.len() - 1
        });
        groups[g].push(k);
    }
    Ok(groups)
}

/// The subspace spanned by `basis` and all its cosets, with coset
/// representatives taken as the smallest uncovered point.
pub fn trivial_cover(field: FieldSpec, basis: &[u32]) -> Result<Cover> {
    for &b in basis {
        field.check(b)?;
    }
    let v = AffineSubspace::new(0, basis)?;
    let mut covered = vec![false; field.size()];
    let mut flats = Vec::with_capacity(field.size() >> v.dimension());
    for x in 0..field.size() as u32 {
        if covered[x as usize] {
            continue;
        }
        let fl = v.translate(x);
        for p in fl.points() {
            covered[p as usize] = true;
        }
        flats.push(fl);
    }
    Cover::new(field, v.dimension(), flats)
}

/// Pointwise image of a cover under a permutation.
pub fn image_cover(f: &FunctionTable, c: &Cover) -> Result<Cover> {
    if f.field() != c.field {
        return Err(Error::FieldMismatch);
    }
    if !f.is_permutation() {
        return Err(Error::NotPermutation);
    }
    let flats = c
        .flats
        .iter()
        .map(|fl| {
            let img: Vec<u32> = fl.points().iter().map(|&p| f.eval(p)).collect();
            AffineSubspace::from_points(&img).ok_or_else(|| {
                Error::Precondition(format!(
                    "image of flat {:?} is not a flat",
                    fl.points()
                ))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Cover::new(c.field, c.dimension, flats)
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Checks that `x^(2^t+1)` is a non-APN permutation of GF(2^n) and
/// returns `s = gcd(n, t)`.
fn gold_permutation_degree(field: FieldSpec, t: u32) -> Result<u32> {
    let n = field.n();
    if !(1..n).contains(&t) {
        return Err(Error::Precondition(format!("need 1 <= t < n, got t = {t}")));
    }
    let s = gcd(n, t);
    if (n / s).is_multiple_of(2) {
        return Err(Error::Precondition(format!(
            "x^(2^{t}+1) is not a permutation of GF(2^{n}): n/gcd(n,t) = {} is even",
            n / s
        )));
    }
    if s == 1 {
        return Err(Error::Precondition(format!("gcd(n, t) = 1: x^(2^{t}+1) is APN")));
    }
    Ok(s)
}

/// The trivial cover on `{0, x, y, x + y}` and its image under
/// `x^(2^t + 1)`. Requires `x/y` in `GF(2^s) \ {0, 1}`, `s = gcd(n, t)`.
pub fn gold_cover(field: FieldSpec, t: u32, x: u32, y: u32) -> Result<(Cover, Cover)> {
    let s = gold_permutation_degree(field, t)?;
    field.check(x)?;
    field.check(y)?;
    if x == 0 || y == 0 {
        return Err(Error::Precondition("x and y must be nonzero".into()));
    }
    let ratio = field.div(x, y)?;
    if ratio == 1 || !field.in_subfield(ratio, s) {
        return Err(Error::Precondition(format!(
            "x/y = {ratio} is not in GF(2^{s}) \\ {{0, 1}}"
        )));
    }
    let trivial = trivial_cover(field, &[x, y])?;
    let f = FunctionTable::from_monomial(field, (1u64 << t) + 1)?;
    let image = image_cover(&f, &trivial)?;
    Ok((trivial, image))
}

/// `{f(c + alpha GF(2^s)) : c}` for `f = x^(2^t + 1)`, a cover of
/// dimension `s = gcd(n, t)`.
pub fn subfield_coset_cover(field: FieldSpec, t: u32, alpha: u32) -> Result<Cover> {
    let s = gold_permutation_degree(field, t)?;
    field.check(alpha)?;
    if alpha == 0 {
        return Err(Error::Precondition("alpha must be nonzero".into()));
    }
    let sub = reduced_basis(&field.subfield(s)?);
    let basis: Vec<u32> = sub.iter().map(|&b| field.mul(alpha, b)).collect();
    let trivial = trivial_cover(field, &basis)?;
    let f = FunctionTable::from_monomial(field, (1u64 << t) + 1)?;
    image_cover(&f, &trivial)
}

/// `S_c = {(c^(2^t) alpha + c alpha^(2^t)) z + alpha^(2^t+1) z^2 : z in GF(2^s)}`,
/// sorted: the linear part of `f(c + alpha GF(2^s))`.
pub fn subfield_coset_linear_part(field: FieldSpec, t: u32, alpha: u32, c: u32) -> Result<Vec<u32>> {
    let s = gold_permutation_degree(field, t)?;
    let ct = field.frobenius(c, t)?;
    let at = field.frobenius(alpha, t)?;
    let lin = field.mul(ct, alpha) ^ field.mul(c, at);
    let quad = field.mul(alpha, at);
    let mut out: Vec<u32> = field
        .subfield(s)?
        .into_iter()
        .map(|z| field.mul(lin, z) ^ field.mul(quad, field.square(z)))
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// For a permutation `f` and a vanishing 2-subspace `{0, x, y, x + y}`:
/// `delta_f` is 4 in all three directions and the derivative images
/// `E_f(x), E_f(y), E_f(x + y)` are pairwise disjoint.
pub fn skew_condition_check(f: &FunctionTable, x: u32, y: u32) -> Result<bool> {
    if !f.is_permutation() {
        return Err(Error::NotPermutation);
    }
    let field = f.field();
    field.check(x)?;
    field.check(y)?;
    if x == 0 || y == 0 || x == y {
        return Err(Error::Precondition(format!("{{0, {x}, {y}, {}}} is not a 2-flat", x ^ y)));
    }
    let flat = crate::vflats::Flat::new([0, x, y, x ^ y])?;
    if !flat.is_vanishing(f) {
        return Err(Error::Precondition(format!("{flat} is not a vanishing flat")));
    }
    let dirs = [x, y, x ^ y];
    for &a in &dirs {
        if f.direction_uniformity(a)? != 4 {
            return Ok(false);
        }
    }
    let images: Vec<BTreeSet<u32>> = dirs.iter().map(|&a| f.image_set(a)).collect::<Result<_>>()?;
    Ok(images[0].is_disjoint(&images[1])
        && images[0].is_disjoint(&images[2])
        && images[1].is_disjoint(&images[2]))
}

/// The image of `x -> x^(2^t) + x` on GF(2^n), as a membership table.
pub fn frobenius_difference_image(field: FieldSpec, t: u32) -> Result<Vec<bool>> {
    let mut hit = vec![false; field.size()];
    for x in 0..field.size() as u32 {
        hit[(field.frobenius(x, t % field.n())? ^ x) as usize] = true;
    }
    Ok(hit)
}

/// Whether `x^(2^t) + x = z` has no solution for every nonzero `z` in
/// GF(2^s), `s = gcd(n, t)`. Exhaustive.
pub fn frobenius_difference_avoids_subfield(field: FieldSpec, t: u32) -> Result<bool> {
    let s = gcd(field.n(), t);
    let hit = frobenius_difference_image(field, t)?;
    Ok(field
        .subfield(s)?
        .into_iter()
        .filter(|&z| z != 0)
        .all(|z| !hit[z as usize]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample;
    use crate::vflats;

    fn gf(n: u32) -> FieldSpec {
        FieldSpec::with_default_modulus(n).unwrap()
    }

    /// A nonzero `x` and `y = w x` with `w` a generator of GF(2^s)*.
    fn gold_pair(field: FieldSpec, s: u32, x: u32) -> (u32, u32) {
        let w = field
            .subfield(s)
            .unwrap()
            .into_iter()
            .find(|&z| z > 1)
            .unwrap();
        (x, field.mul(w, x))
    }

    #[test]
    fn subspace_basics() {
        let v = AffineSubspace::new(5, &[1, 2]).unwrap();
        assert_eq!(v.base(), 4);
        assert_eq!(v.points(), vec![4, 5, 6, 7]);
        assert_eq!(v.linear_part(), vec![0, 1, 2, 3]);
        assert_eq!(v.translate(9).linear_part(), v.linear_part());
        assert!(v.contains(6) && !v.contains(3));
        assert!(AffineSubspace::new(0, &[3, 5, 6]).is_err());
        let w = AffineSubspace::from_points(&[13, 14, 9, 10]).unwrap();
        assert_eq!(w.points(), vec![9, 10, 13, 14]);
        assert_eq!(w.linear_part(), vec![0, 3, 4, 7]);
        assert!(AffineSubspace::from_points(&[0, 1, 2, 4]).is_none());
        assert!(AffineSubspace::from_points(&[0, 1, 2]).is_none());
        assert_eq!(AffineSubspace::from_points(&[6]).unwrap().dimension(), 0);
    }

    #[test]
    fn trivial_cover_properties() {
        let f4 = gf(2);
        let whole = trivial_cover(f4, &[1, 2]).unwrap();
        assert_eq!(whole.flats().len(), 1);
        assert!(verify_cover(&whole));
        assert!(trivial_cover(gf(4), &[3, 5, 6]).is_err());

        let c = trivial_cover(gf(6), &[7, 19]).unwrap();
        assert!(verify_cover(&c));
        assert_eq!(c.flats().len(), 16);
        assert!(!verify_nonparallel(&c).unwrap());
        assert!(!verify_totally_skew(&c).unwrap());
        assert_eq!(parallel_decomposition(&c).unwrap().len(), 1);
        let bases: Vec<u32> = c.flats().iter().map(|f| f.base()).collect();
        let mut sorted = bases.clone();
        sorted.sort_unstable();
        assert_eq!(bases, sorted);
    }

    #[test]
    fn defects_are_reported() {
        let field = gf(3);
        let a = AffineSubspace::new(0, &[1, 2]).unwrap();
        let b = AffineSubspace::new(1, &[4, 2]).unwrap();
        let overlap = Cover::new(field, 2, vec![a.clone(), b]).unwrap();
        assert!(matches!(check_cover(&overlap), Err(Error::NotACover(_))));
        assert!(verify_nonparallel(&overlap).is_err());
        let short = Cover::new(field, 2, vec![a]).unwrap();
        assert!(!verify_cover(&short));
        assert!(Cover::new(field, 1, vec![AffineSubspace::new(0, &[1, 2]).unwrap()]).is_err());
    }

    #[test]
    fn image_cover_identity_and_affine() {
        let field = gf(5);
        let c = trivial_cover(field, &[3, 12]).unwrap();
        assert_eq!(image_cover(&FunctionTable::identity(field), &c).unwrap(), c);
        let mut rng = sample::rng(2);
        let a = sample::random_affine_permutation(field, &mut rng);
        let t = FunctionTable::from_fn(field, |x| a.apply(x));
        assert!(verify_cover(&image_cover(&t, &c).unwrap()));
        let sq = FunctionTable::from_monomial(field, 3).unwrap();
        assert!(matches!(image_cover(&sq, &c), Err(Error::Precondition(_))));
        let x6 = FunctionTable::from_monomial(gf(6), 3).unwrap();
        assert_eq!(
            image_cover(&x6, &trivial_cover(gf(6), &[1, 2]).unwrap()),
            Err(Error::NotPermutation)
        );
    }

    #[test]
    fn image_of_vanishing_cover_is_cover() {
        for n in [6u32, 9] {
            let field = gf(n);
            for t in 1..n {
                let Ok(s) = gold_permutation_degree(field, t) else { continue };
                for x in [1u32, 2, 77 % field.size() as u32] {
                    let (x, y) = gold_pair(field, s, x);
                    let (trivial, image) = gold_cover(field, t, x, y).unwrap();
                    assert!(verify_cover(&trivial));
                    assert!(verify_cover(&image));
                }
            }
        }
    }

    #[test]
    fn gold_cover_preconditions() {
        let f = gf(6);
        assert!(matches!(gold_cover(f, 3, 1, 2), Err(Error::Precondition(_))));
        assert!(matches!(gold_cover(f, 1, 1, 2), Err(Error::Precondition(_))));
        assert!(gold_cover(f, 2, 0, 1).is_err());
        assert!(gold_cover(f, 2, 5, 5).is_err());
        let outside = (2..64).find(|&r| !f.in_subfield(r, 2)).unwrap();
        assert!(gold_cover(f, 2, outside, 1).is_err());
        assert!(subfield_coset_cover(f, 2, 0).is_err());
    }

    #[test]
    fn skewness_dichotomy() {
        for n in 3..=10u32 {
            let field = gf(n);
            for t in 1..n {
                let Ok(s) = gold_permutation_degree(field, t) else { continue };
                let (x, y) = gold_pair(field, s, 1);
                let (_, image) = gold_cover(field, t, x, y).unwrap();
                let expected = n % 4 == 2 && s == 2;
                assert_eq!(verify_totally_skew(&image).unwrap(), expected, "n={n} t={t}");
                let groups = parallel_decomposition(&image).unwrap();
                assert_eq!(groups.len(), 1 << (n - s));
                assert!(groups.iter().all(|g| g.len() == 1 << (s - 2)));
            }
        }
    }

    #[test]
    fn parallel_law() {
        for (n, t) in [(6u32, 2u32), (9, 3)] {
            let field = gf(n);
            let s = gold_permutation_degree(field, t).unwrap();
            let alpha = field.pow(field.primitive_element().unwrap(), 5);
            let (x, y) = gold_pair(field, s, alpha);
            let (trivial, image) = gold_cover(field, t, x, y).unwrap();
            let fl = image.flats();
            for i in 0..fl.len() {
                for j in i + 1..fl.len() {
                    // Image flat k comes from trivial flat k.
                    let (c, d) = (trivial.flats()[i].base(), trivial.flats()[j].base());
                    let same = field.in_subfield(field.div(c ^ d, alpha).unwrap(), s);
                    assert_eq!(fl[i].is_parallel(&fl[j]), same);
                    if !same {
                        let a: BTreeSet<u32> = fl[i].linear_part().into_iter().collect();
                        let common = fl[j].linear_part().into_iter().filter(|v| a.contains(v)).count();
                        assert_eq!(common, 1);
                    }
                }
            }
        }
    }

    #[test]
    fn subfield_coset_covers() {
        let field = gf(9);
        let c = subfield_coset_cover(field, 3, 1).unwrap();
        assert_eq!(c.dimension(), 3);
        assert_eq!(c.flats().len(), 64);
        assert!(verify_cover(&c));
        assert!(verify_totally_skew(&c).unwrap());
        assert!(verify_nonparallel(&c).unwrap());

        for (n, t) in [(6u32, 2u32), (9, 3), (10, 4)] {
            let field = gf(n);
            let s = gcd(n, t);
            for alpha in [1u32, 3, 100 % field.size() as u32] {
                let cover = subfield_coset_cover(field, t, alpha).unwrap();
                assert!(verify_totally_skew(&cover).unwrap());
                let sub = reduced_basis(&field.subfield(s).unwrap());
                let basis: Vec<u32> = sub.iter().map(|&b| field.mul(alpha, b)).collect();
                let trivial = trivial_cover(field, &basis).unwrap();
                for (src, img) in trivial.flats().iter().zip(cover.flats()) {
                    let expected =
                        subfield_coset_linear_part(field, t, alpha, src.base()).unwrap();
                    assert_eq!(img.linear_part(), expected);
                }
            }
        }
    }

    /// For s = 2 the dimension-2 subfield-coset cover is exactly the Gold
    /// image cover built from a pair with ratio in GF(4).
    #[test]
    fn subfield_cover_matches_gold_image_for_s2() {
        let field = gf(6);
        for alpha in [1u32, 9, 40] {
            let (x, y) = gold_pair(field, 2, alpha);
            let (_, image) = gold_cover(field, 2, x, y).unwrap();
            let sub = subfield_coset_cover(field, 2, alpha).unwrap();
            let a: BTreeSet<_> = image.flats().iter().cloned().collect();
            let b: BTreeSet<_> = sub.flats().iter().cloned().collect();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn skew_condition_agrees_with_direct_predicate() {
        let mut rng = sample::rng(17);
        use rand::Rng;
        for (n, t) in [(6u32, 2u32), (9, 3), (10, 2)] {
            let field = gf(n);
            let f = FunctionTable::from_monomial(field, (1 << t) + 1).unwrap();
            let s = gcd(n, t);
            for _ in 0..30 {
                let x = rng.gen_range(1..field.size() as u32);
                let (x, y) = gold_pair(field, s, x);
                let (_, image) = gold_cover(field, t, x, y).unwrap();
                assert_eq!(
                    skew_condition_check(&f, x, y).unwrap(),
                    verify_totally_skew(&image).unwrap()
                );
            }
        }
        let x5 = FunctionTable::from_monomial(gf(6), 5).unwrap();
        let (x, y) = gold_pair(gf(6), 2, 1);
        assert!(skew_condition_check(&x5, x, y).unwrap());
        let x9 = FunctionTable::from_monomial(gf(9), 9).unwrap();
        let (x, y) = gold_pair(gf(9), 3, 1);
        assert!(!skew_condition_check(&x9, x, y).unwrap());
        assert!(skew_condition_check(&x5, 1, 2).is_err());
        let x9_6 = FunctionTable::from_monomial(gf(6), 9).unwrap();
        assert_eq!(skew_condition_check(&x9_6, x, y), Err(Error::NotPermutation));
    }

    #[test]
    fn gold_image_flats_are_vanishing_translates() {
        let field = gf(6);
        let f = FunctionTable::from_monomial(field, 5).unwrap();
        let pqs = vflats::enumerate(&f);
        let (x, y) = gold_pair(field, 2, 11);
        let (trivial, _) = gold_cover(field, 2, x, y).unwrap();
        for fl in trivial.flats() {
            let p = fl.points();
            assert!(pqs.contains(&vflats::Flat::new([p[0], p[1], p[2], p[3]]).unwrap()));
        }
    }

    #[test]
    fn frobenius_difference_misses_subfield() {
        for n in 2..=10u32 {
            for t in 1..n {
                let s = gcd(n, t);
                if (n / s) % 2 == 1 {
                    assert!(frobenius_difference_avoids_subfield(gf(n), t).unwrap(), "n={n} t={t}");
                }
            }
        }
        // With n/s even, z = 1 is reachable: n = 2, t = 1 gives x^2 + x = 1
        // solved by a primitive cube root of unity.
        assert!(!frobenius_difference_avoids_subfield(gf(2), 1).unwrap());
    }

    #[test]
    fn listing_and_json() {
        let c = subfield_coset_cover(gf(6), 2, 1).unwrap();
        assert_eq!(c.listing().unwrap().lines().count(), 16);
        let json = serde_json::to_string(&c).unwrap();
        assert_eq!(serde_json::from_str::<Cover>(&json).unwrap(), c);
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["dimension"], 2);
        assert!(v["flats"][0]["basis"].is_array());
        let big = trivial_cover(gf(6), &[1, 2, 4, 8]).unwrap();
        assert!(big.listing().is_err());
    }
}
