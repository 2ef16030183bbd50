//! The free Lie algebra inside the free associative algebra, special
//! derivations, the embedding ι into cyclic words, and the generating
//! family used by the upper-bound pipeline.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::algebra::{project_pi, AssocPoly, CyclicPoly};
use crate::arith::{binomial, divisors, gcd, moebius};
use crate::error::{Error, Result};
use crate::modmat::exact::{dense_rows, kernel, rank, same_span};
use crate::scalar::Coeff;
use crate::words::{enumerate_cyclic_words, lyndon_words, CyclicWord, Letter, LyndonWord, Word};

/// Largest weight accepted by [`oracle_sder_basis`].
pub const ORACLE_MAX_WEIGHT: usize = 10;

/// Associative expansion of the standard bracketing of a Lyndon word:
/// a letter maps to itself, otherwise `l = uv` (standard factorization)
/// maps to `[P(u), P(v)]`.
pub fn lie_bracketing<C: Coeff>(l: &LyndonWord, ctx: &C::Ctx) -> AssocPoly<C> {
    match l.standard_factorization() {
        None => AssocPoly::word(l.word(), ctx),
        Some((u, v)) => lie_bracketing(&u, ctx).commutator(&lie_bracketing(&v, ctx)),
    }
}

/// `ad_X^k p`.
pub fn ad_x_power<C: Coeff>(k: usize, p: &AssocPoly<C>) -> AssocPoly<C> {
    (0..k).fold(p.clone(), |acc, _| acc.letter_commutator(Letter::X))
}

/// A tangential derivation `X ↦ [X, g1]`, `Y ↦ [Y, g2]`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpecialPair<C: Coeff> {
    pub g1: AssocPoly<C>,
    pub g2: AssocPoly<C>,
}

impl<C: Coeff> SpecialPair<C> {
    pub fn new(g1: AssocPoly<C>, g2: AssocPoly<C>) -> Self {
        SpecialPair { g1, g2 }
    }

    /// `[X, g1] + [Y, g2] = 0`.
    pub fn is_special(&self) -> bool {
        (&self.g1.letter_commutator(Letter::X) + &self.g2.letter_commutator(Letter::Y)).is_zero()
    }

    /// `(W, D)`: the common length and the Y-count of `g2`.
    pub fn bidegree(&self) -> Option<(usize, usize)> {
        match (self.g1.bidegree(), self.g2.bidegree()) {
            (Some((w1, d1)), Some((w2, d2))) => (w1 == w2 && d1 == d2 + 1).then_some((w2, d2)),
            (None, Some(deg)) if self.g1.is_zero() => Some(deg),
            (Some((w, d1)), None) if self.g2.is_zero() && d1 > 0 => Some((w, d1 - 1)),
            _ => None,
        }
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> SpecialPair<D> {
        SpecialPair { g1: self.g1.map_coeffs(&f), g2: self.g2.map_coeffs(&f) }
    }
}

/// The depth one element σ̄ of weight `2k+1`:
/// `g2 = ad_X^{2k} Y` and `g1 = ½ Σ_j (-1)^{j+1} [ad_X^j Y, ad_X^{2k-1-j} Y]`.
///
/// Panics if `k == 0` or 2 is not invertible.
pub fn sigma_bar<C: Coeff>(k: usize, ctx: &C::Ctx) -> SpecialPair<C> {
    assert!(k >= 1, "sigma_bar needs k >= 1");
    let y = AssocPoly::letter(Letter::Y, ctx);
    let ads: Vec<AssocPoly<C>> =
        std::iter::successors(Some(y.clone()), |p| Some(p.letter_commutator(Letter::X))).take(2 * k + 1).collect();
    let mut g1 = AssocPoly::zero();
    for j in 0..2 * k {
        let term = ads[j].commutator(&ads[2 * k - 1 - j]);
        g1 += &if j % 2 == 0 { -&term } else { term };
    }
    let half = C::from_int(2, ctx).inv().expect("2 is invertible");
    SpecialPair { g1: g1.scale(&half), g2: ads[2 * k].clone() }
}

/// `ι(g1, g2) = π(Y·g2) / (D+1)`.
pub fn iota<C: Coeff>(sp: &SpecialPair<C>) -> Result<CyclicPoly<C>> {
    if sp.g2.is_zero() {
        return Ok(CyclicPoly::zero());
    }
    let (_, d) = sp.g2.bidegree().ok_or(Error::NotHomogeneous)?;
    let ctx = sp.g2.coeff_ctx().expect("nonzero polynomial");
    let inv = C::from_int(d as i64 + 1, &ctx).inv().ok_or(Error::NotInvertible(d as i64 + 1))?;
    Ok(project_pi(&sp.g2.left_mul_letter(Letter::Y))?.scale(&inv))
}

/// The default first length: `floor((W+1)/2)`.
pub fn default_w1(w: usize) -> usize {
    w.div_ceil(2)
}

/// Pairs of Lyndon words of lengths `(W1, W+1-W1)` whose Y-counts sum to
/// `D+1`, ordered by the Y-count of the first word, then lexicographically.
pub fn genset_pairs(w: usize, d: usize, w1: usize) -> Result<Vec<(LyndonWord, LyndonWord)>> {
    if w1 < 1 || w1 > w {
        return Err(Error::InvalidSplit { w, w1 });
    }
    let w2 = w + 1 - w1;
    let mut pairs = Vec::new();
    for d1 in 0..=(d + 1).min(w1) {
        let d2 = d + 1 - d1;
        if d2 > w2 {
            continue;
        }
        let right = lyndon_words(w2, Some(d2));
        for a in lyndon_words(w1, Some(d1)) {
            for b in &right {
                pairs.push((a, *b));
            }
        }
    }
    Ok(pairs)
}

/// [`genset_pairs`] without mirrored duplicates: when both lengths agree,
/// `(b, a)` gives the same cyclic row as `(a, b)` and only `a ≤ b` is kept.
pub fn distinct_genset_pairs(w: usize, d: usize, w1: usize) -> Result<Vec<(LyndonWord, LyndonWord)>> {
    let mut pairs = genset_pairs(w, d, w1)?;
    if 2 * w1 == w + 1 {
        pairs.retain(|(a, b)| a.word() <= b.word());
    }
    Ok(pairs)
}

/// `π(P(a)·P(b))` for the bracketings `P` of two Lyndon words.
pub fn genset_row<C: Coeff>(a: &LyndonWord, b: &LyndonWord, ctx: &C::Ctx) -> CyclicPoly<C> {
    let prod = lie_bracketing(a, ctx).mul(&lie_bracketing(b, ctx));
    project_pi(&prod).expect("product words are nonempty")
}

/// All rows of the generating family of `ι(sder^{(W,D)})`, in pair order.
pub fn genset_rows<C: Coeff>(w: usize, d: usize, w1: usize, ctx: &C::Ctx) -> Result<Vec<CyclicPoly<C>>> {
    Ok(genset_pairs(w, d, w1)?.iter().map(|(a, b)| genset_row(a, b, ctx)).collect())
}

fn to_u128(n: &BigInt) -> Result<u128> {
    n.to_u128().ok_or(Error::Overflow)
}

/// Dimension of the free Lie algebra on X, Y in length `w`, or in bidegree
/// `(w, d)` with `d` the number of Y letters.
pub fn dim_f2(w: usize, d: Option<usize>) -> Result<u128> {
    if w < 1 {
        return Err(Error::OutOfRange("dim_f2 needs W >= 1".into()));
    }
    let w64 = w as u64;
    let mut sum = BigInt::zero();
    match d {
        None => {
            for e in divisors(w64) {
                sum += BigInt::from(moebius(e)) * (BigInt::from(1) << (w64 / e) as usize);
            }
        }
        Some(d) => {
            if d > w {
                return Ok(0);
            }
            for e in divisors(gcd(w64, d as u64)) {
                sum += BigInt::from(moebius(e)) * BigInt::from(binomial(w64 / e, d as u64 / e));
            }
        }
    }
    to_u128(&(sum / BigInt::from(w)))
}

/// `dim sder^{(W,D)} = dim f2^{(W,D+1)} + dim f2^{(W,D)} - dim f2^{(W+1,D+1)}`;
/// weight 1 is solved directly.
pub fn dim_sder(w: usize, d: usize) -> Result<u128> {
    if w == 0 {
        return Err(Error::OutOfRange("dim_sder needs W >= 1".into()));
    }
    if w == 1 {
        return Ok(oracle_sder_basis(1, d)?.len() as u128);
    }
    let value = dim_f2(w, Some(d + 1))? as i128 + dim_f2(w, Some(d))? as i128 - dim_f2(w + 1, Some(d + 1))? as i128;
    u128::try_from(value).map_err(|_| Error::NegativeDimension { w, d, value })
}

/// Bracketed Lyndon basis of `f2` in bidegree `(w, d)`.
pub fn lyndon_basis<C: Coeff>(w: usize, d: usize, ctx: &C::Ctx) -> Vec<AssocPoly<C>> {
    lyndon_words(w, Some(d)).iter().map(|l| lie_bracketing(l, ctx)).collect()
}

fn word_index<'a, C: Coeff + 'a>(polys: impl IntoIterator<Item = &'a AssocPoly<C>>) -> BTreeMap<Word, usize> {
    let mut index = BTreeMap::new();
    for p in polys {
        for w in p.keys() {
            let next = index.len();
            index.entry(*w).or_insert(next);
        }
    }
    index
}

/// Whether a homogeneous `p` lies in the span of the bracketed Lyndon basis.
pub fn is_lie_element<C: Coeff>(p: &AssocPoly<C>, ctx: &C::Ctx) -> bool {
    let Some((w, d)) = p.bidegree() else { return p.is_zero() };
    let mut family = lyndon_basis(w, d, ctx);
    let index = word_index(family.iter().chain(std::iter::once(p)));
    let before = rank(dense_rows(&family, &index, ctx).expect("indexed"));
    family.push(p.clone());
    rank(dense_rows(&family, &index, ctx).expect("indexed")) == before
}

/// Exact basis of `sder^{(W,D)}`: the kernel of `(g1, g2) ↦ [X,g1] + [Y,g2]`
/// on `f2^{(W,D+1)} × f2^{(W,D)}`, in Lyndon coordinates.
pub fn oracle_sder_basis(w: usize, d: usize) -> Result<Vec<SpecialPair<BigRational>>> {
    if w > ORACLE_MAX_WEIGHT {
        return Err(Error::GuardExceeded { what: "sder oracle weight", size: w, limit: ORACLE_MAX_WEIGHT });
    }
    let ctx = &();
    let b1: Vec<AssocPoly<BigRational>> = lyndon_basis(w, d + 1, ctx);
    let b2: Vec<AssocPoly<BigRational>> = lyndon_basis(w, d, ctx);
    let images: Vec<AssocPoly<BigRational>> = b1
        .iter()
        .map(|g| g.letter_commutator(Letter::X))
        .chain(b2.iter().map(|g| g.letter_commutator(Letter::Y)))
        .collect();
    let index = word_index(&images);
    let columns = dense_rows(&images, &index, ctx)?;
    let unknowns = images.len();
    let matrix: Vec<Vec<BigRational>> =
        (0..index.len()).map(|r| columns.iter().map(|col| col[r].clone()).collect()).collect();
    let null = if matrix.is_empty() {
        (0..unknowns)
            .map(|i| (0..unknowns).map(|j| BigRational::from_int((i == j) as i64, ctx)).collect())
            .collect()
    } else {
        kernel(matrix, unknowns, ctx)
    };
    let combine = |basis: &[AssocPoly<BigRational>], coeffs: &[BigRational]| {
        let mut out = AssocPoly::zero();
        for (p, c) in basis.iter().zip(coeffs) {
            out += &p.scale(c);
        }
        out
    };
    Ok(null
        .iter()
        .map(|v| SpecialPair { g1: combine(&b1, &v[..b1.len()]), g2: combine(&b2, &v[b1.len()..]) })
        .collect())
}

/// Whether the generating family at split `w1` spans exactly
/// `ι(sder^{(W,D)})` over the rationals, and ι is injective on the oracle
/// basis. Subject to the oracle's weight guard.
pub fn lemma_span_check(w: usize, d: usize, w1: usize) -> Result<bool> {
    let images: Vec<CyclicPoly<BigRational>> =
        oracle_sder_basis(w, d)?.iter().map(iota).collect::<Result<_>>()?;
    let rows = genset_rows::<BigRational>(w, d, w1, &())?;
    let index: BTreeMap<CyclicWord, usize> =
        enumerate_cyclic_words(w + 1, d + 1).into_iter().enumerate().map(|(i, c)| (c, i)).collect();
    let target = dense_rows(&images, &index, &())?;
    let injective = rank(target.clone()) == images.len();
    Ok(injective && same_span(dense_rows(&rows, &index, &())?, target))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{delta_y, DeltaMode};
    use crate::scalar::{Modulus, Zp};
    use crate::words::CyclicWord;

    type Q = BigRational;

    fn lw(s: &str) -> LyndonWord {
        LyndonWord::new(s.parse().unwrap()).unwrap()
    }

    fn ap(terms: &[(i64, &str)]) -> AssocPoly<Q> {
        AssocPoly::from_ints(terms, &()).unwrap()
    }

    fn cp(terms: &[(i64, &str)]) -> CyclicPoly<Q> {
        CyclicPoly::from_ints(terms, &()).unwrap()
    }

    #[test]
    fn bracketing_examples() {
        assert_eq!(lie_bracketing::<Q>(&lw("X"), &()), ap(&[(1, "X")]));
        assert_eq!(lie_bracketing::<Q>(&lw("XY"), &()), ap(&[(1, "XY"), (-1, "YX")]));
        assert_eq!(lie_bracketing::<Q>(&lw("XXY"), &()), ap(&[(1, "XXY"), (-2, "XYX"), (1, "YXX")]));
    }

    #[test]
    fn bracketing_is_triangular_and_spans() {
        for n in 1..=9 {
            for l in lyndon_words(n, None) {
                let p = lie_bracketing::<Q>(&l, &());
                let (lead, c) = p.terms().next().unwrap();
                assert_eq!(*lead, l.word());
                assert_eq!(*c, Q::from_int(1, &()));
            }
            for d in 0..=n {
                let basis = lyndon_basis::<Q>(n, d, &());
                let index = word_index(&basis);
                assert_eq!(rank(dense_rows(&basis, &index, &()).unwrap()) as u128, dim_f2(n, Some(d)).unwrap());
            }
        }
    }

    #[test]
    fn ad_examples() {
        let y = ap(&[(1, "Y")]);
        assert_eq!(ad_x_power(0, &y), y);
        assert_eq!(ad_x_power(1, &y), ap(&[(1, "XY"), (-1, "YX")]));
        assert_eq!(ad_x_power(2, &y), ap(&[(1, "XXY"), (-2, "XYX"), (1, "YXX")]));
    }

    #[test]
    fn sigma_bar_is_special() {
        for k in 1..=6 {
            let sp = sigma_bar::<Q>(k, &());
            assert!(!sp.g1.is_zero());
            assert!(sp.is_special(), "k = {k}");
            assert_eq!(sp.bidegree(), Some((2 * k + 1, 1)));
        }
        let m = Modulus::new(3323).unwrap();
        assert!(sigma_bar::<Zp>(3, &m).is_special());
        let s1 = sigma_bar::<Q>(1, &());
        assert_eq!(s1.g2, ap(&[(1, "XXY"), (-2, "XYX"), (1, "YXX")]));
        for k in 1..=3 {
            let sp = sigma_bar::<Q>(k, &());
            assert!(is_lie_element(&sp.g1, &()) && is_lie_element(&sp.g2, &()));
        }
    }

    #[test]
    fn iota_examples() {
        assert_eq!(iota(&sigma_bar::<Q>(1, &())).unwrap(), cp(&[(1, "XXYY"), (-1, "XYXY")]));
        let zero = SpecialPair::<Q>::new(AssocPoly::zero(), AssocPoly::zero());
        assert!(iota(&zero).unwrap().is_zero());
        let s2 = sigma_bar::<Q>(2, &());
        let half = Q::from_int(2, &()).inv().unwrap();
        assert_eq!(iota(&s2).unwrap(), project_pi(&s2.g2.left_mul_letter(Letter::Y)).unwrap().scale(&half));
        let m = Modulus::new(3).unwrap();
        let sp = SpecialPair::<Zp>::new(AssocPoly::zero(), AssocPoly::from_ints(&[(1, "XYY")], &m).unwrap());
        assert!(matches!(iota(&sp), Err(Error::NotInvertible(3))));
    }

    #[test]
    fn delta_of_sigma_bar() {
        for k in 1..=4 {
            let image = delta_y(&iota(&sigma_bar::<Q>(k, &())).unwrap(), DeltaMode::Strip1).unwrap();
            let mut expected = Word::power(Letter::X, 2 * k).unwrap();
            expected = expected.push(Letter::Y).unwrap();
            assert_eq!(image, CyclicPoly::cyclic(CyclicWord::new(expected).unwrap(), &()));
        }
    }

    #[test]
    fn genset_examples() {
        assert_eq!(genset_rows::<Q>(3, 1, 2, &()).unwrap(), vec![cp(&[(2, "XYXY"), (-2, "XXYY")])]);
        let rows = genset_rows::<Q>(2, 1, 1, &()).unwrap();
        assert!(rows.iter().all(|r| r.is_zero()));
        assert!(matches!(genset_pairs(3, 1, 0), Err(Error::InvalidSplit { .. })));
        assert!(matches!(genset_pairs(3, 1, 4), Err(Error::InvalidSplit { .. })));
        assert_eq!(default_w1(29), 15);
        assert_eq!(default_w1(8), 4);
        assert_eq!(default_w1(1), 1);
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(dim_f2(3, None).unwrap(), 2);
        assert_eq!(dim_f2(5, None).unwrap(), 6);
        assert_eq!(dim_f2(4, Some(2)).unwrap(), 1);
        assert!(dim_f2(0, None).is_err());
        assert_eq!(dim_sder(3, 1).unwrap(), 1);
        assert_eq!(dim_sder(2, 1).unwrap(), 0);
        assert_eq!(dim_sder(1, 0).unwrap(), 1);
        assert_eq!(dim_sder(1, 1).unwrap(), 1);
        assert_eq!(dim_sder(29, 11).unwrap(), 99591);
    }

    #[test]
    fn oracle_matches_formula_and_sigma() {
        for w in 2..=7 {
            for d in 0..=w {
                let basis = oracle_sder_basis(w, d).unwrap();
                assert_eq!(basis.len() as u128, dim_sder(w, d).unwrap(), "({w},{d})");
                assert!(basis.iter().all(SpecialPair::is_special));
            }
        }
        let b = oracle_sder_basis(3, 1).unwrap();
        assert_eq!(b.len(), 1);
        let s = sigma_bar::<Q>(1, &());
        let ratio = b[0].g2.coeff(&"XXY".parse().unwrap()).unwrap().clone();
        assert_eq!(b[0], s.map_coeffs(|c| c.clone() * ratio.clone()));
        assert!(oracle_sder_basis(ORACLE_MAX_WEIGHT + 1, 1).is_err());
    }

    #[test]
    fn genset_spans_iota_image() {
        for w in 1..=6 {
            for d in 0..=w {
                for w1 in 1..=w {
                    assert!(lemma_span_check(w, d, w1).unwrap(), "({w},{d}) split {w1}");
                }
            }
        }
    }
}
