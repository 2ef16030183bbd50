//! Linear combinations of words and cyclic words, and the operators between
//! the free associative algebra and the space of cyclic words: the
//! projection π, the rotation sum Σ, prefix stripping ∂, the divergence-type
//! operators Δ_X, Δ_Y, Δ and the three brackets on cyclic words.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};
use std::str::FromStr;

use serde::ser::SerializeSeq;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::Coeff;
use crate::words::{CyclicWord, Letter, Word};

/// A finitely supported linear combination with no zero coefficients,
/// iterated in key order.
#[derive(Clone, PartialEq)]
pub struct LinComb<K: Ord, C> {
    terms: BTreeMap<K, C>,
}

/// Element of the free associative algebra on X, Y.
pub type AssocPoly<C> = LinComb<Word, C>;
/// Element of the space of cyclic words.
pub type CyclicPoly<C> = LinComb<CyclicWord, C>;

impl<K: Ord + Copy, C: Coeff> LinComb<K, C> {
    pub fn zero() -> Self {
        LinComb { terms: BTreeMap::new() }
    }

    pub fn monomial(key: K, c: C) -> Self {
        let mut p = Self::zero();
        p.add_term(key, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (K, C)>) -> Self {
        let mut p = Self::zero();
        for (k, c) in terms {
            p.add_term(k, c);
        }
        p
    }

    pub fn add_term(&mut self, key: K, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&K, &C)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn coeff(&self, key: &K) -> Option<&C> {
        self.terms.get(key)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Context of the coefficients, taken from any term.
    pub fn coeff_ctx(&self) -> Option<C::Ctx> {
        self.terms.values().next().map(Coeff::ctx)
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let terms = self.terms.iter().map(|(k, v)| (*k, v.clone() * c.clone())).filter(|(_, v)| !v.is_zero()).collect();
        LinComb { terms }
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> LinComb<K, D> {
        LinComb::from_terms(self.terms.iter().map(|(k, v)| (*k, f(v))))
    }

    pub fn retain(&mut self, mut keep: impl FnMut(&K) -> bool) {
        self.terms.retain(|k, _| keep(k));
    }
}

impl<K: Ord + Copy, C: Coeff> Default for LinComb<K, C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<K: Ord + Copy, C: Coeff> AddAssign<&LinComb<K, C>> for LinComb<K, C> {
    fn add_assign(&mut self, rhs: &LinComb<K, C>) {
        for (k, v) in &rhs.terms {
            self.add_term(*k, v.clone());
        }
    }
}

impl<K: Ord + Copy, C: Coeff> Add for &LinComb<K, C> {
    type Output = LinComb<K, C>;
    fn add(self, rhs: Self) -> LinComb<K, C> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<K: Ord + Copy, C: Coeff> Sub for &LinComb<K, C> {
    type Output = LinComb<K, C>;
    fn sub(self, rhs: Self) -> LinComb<K, C> {
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.add_term(*k, -v.clone());
        }
        out
    }
}

impl<K: Ord + Copy, C: Coeff> Neg for &LinComb<K, C> {
    type Output = LinComb<K, C>;
    fn neg(self) -> LinComb<K, C> {
        LinComb { terms: self.terms.iter().map(|(k, v)| (*k, -v.clone())).collect() }
    }
}

impl<K: Ord + Copy + fmt::Display, C: Coeff> fmt::Display for LinComb<K, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (k, v)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{v}·{k}")?;
        }
        Ok(())
    }
}

impl<K: Ord + Copy + fmt::Display, C: Coeff> fmt::Debug for LinComb<K, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Serializes as a list of `[coefficient, word]` string pairs.
impl<K: Ord + Copy + fmt::Display, C: Coeff> Serialize for LinComb<K, C> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (k, v) in &self.terms {
            seq.serialize_element(&(v.encode(), k.to_string()))?;
        }
        seq.end()
    }
}

impl<K, C> LinComb<K, C>
where
    K: Ord + Copy + FromStr<Err = Error>,
    C: Coeff,
{
    /// Inverse of the `Serialize` impl; coefficients are parsed in `ctx`.
    pub fn from_json(json: &str, ctx: &C::Ctx) -> Result<Self> {
        let pairs: Vec<(String, String)> = serde_json::from_str(json)
            .map_err(|e| Error::OutOfRange(format!("malformed polynomial: {e}")))?;
        Self::from_string_pairs(&pairs, ctx)
    }

    pub fn from_string_pairs(pairs: &[(String, String)], ctx: &C::Ctx) -> Result<Self> {
        let mut p = Self::zero();
        for (c, k) in pairs {
            let coeff = C::parse(c, ctx).ok_or_else(|| Error::OutOfRange(format!("bad coefficient {c:?}")))?;
            p.add_term(k.parse()?, coeff);
        }
        Ok(p)
    }
}

impl<C: Coeff> AssocPoly<C> {
    pub fn word(w: Word, ctx: &C::Ctx) -> Self {
        Self::monomial(w, C::one_in(ctx))
    }

    pub fn letter(l: Letter, ctx: &C::Ctx) -> Self {
        Self::word(Word::letter(l), ctx)
    }

    /// Builds a polynomial from integer coefficients and word strings.
    pub fn from_ints(terms: &[(i64, &str)], ctx: &C::Ctx) -> Result<Self> {
        let mut p = Self::zero();
        for &(c, w) in terms {
            p.add_term(w.parse()?, C::from_int(c, ctx));
        }
        Ok(p)
    }

    /// Concatenation product.
    ///
    /// Panics if a product word exceeds the packed word capacity.
    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (u, a) in &self.terms {
            for (v, b) in &rhs.terms {
                let w = u.concat(*v).expect("product word exceeds packed capacity");
                out.add_term(w, a.clone() * b.clone());
            }
        }
        out
    }

    /// `uv - vu`.
    pub fn commutator(&self, rhs: &Self) -> Self {
        &self.mul(rhs) - &rhs.mul(self)
    }

    /// `[l, self] = l·self - self·l`.
    pub fn letter_commutator(&self, l: Letter) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            out.add_term(w.prepend(l).expect("word capacity"), c.clone());
            out.add_term(w.push(l).expect("word capacity"), -c.clone());
        }
        out
    }

    pub fn left_mul_letter(&self, l: Letter) -> Self {
        LinComb { terms: self.terms.iter().map(|(w, c)| (w.prepend(l).expect("word capacity"), c.clone())).collect() }
    }

    /// `(length, Y-count)` if every term shares it; `None` for zero or mixed.
    pub fn bidegree(&self) -> Option<(usize, usize)> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let deg = (first.len(), first.y_count());
        it.all(|w| (w.len(), w.y_count()) == deg).then_some(deg)
    }
}

impl<C: Coeff> CyclicPoly<C> {
    pub fn cyclic(c: CyclicWord, ctx: &C::Ctx) -> Self {
        Self::monomial(c, C::one_in(ctx))
    }

    pub fn from_ints(terms: &[(i64, &str)], ctx: &C::Ctx) -> Result<Self> {
        let mut p = Self::zero();
        for &(c, w) in terms {
            p.add_term(w.parse()?, C::from_int(c, ctx));
        }
        Ok(p)
    }

    /// `(length, Y-count)` if homogeneous; `None` for zero or mixed.
    pub fn bidegree(&self) -> Option<(usize, usize)> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let deg = (first.len(), first.y_count());
        it.all(|w| (w.len(), w.y_count()) == deg).then_some(deg)
    }
}

/// Which letters Δ removes from a rotation starting with a doubled letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DeltaMode {
    /// `YYv ↦ π(Yv)`: one leading letter removed, landing in weight W-1, depth D-1.
    #[default]
    Strip1,
    /// `YYv ↦ π(v)`: the literal `π ∘ ∂_YY ∘ Σ`.
    Strip2,
}

impl fmt::Display for DeltaMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DeltaMode::Strip1 => "strip1",
            DeltaMode::Strip2 => "strip2",
        })
    }
}

impl FromStr for DeltaMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "strip1" => Ok(DeltaMode::Strip1),
            "strip2" => Ok(DeltaMode::Strip2),
            other => Err(Error::OutOfRange(format!("unknown delta mode {other:?}"))),
        }
    }
}

/// The projection to cyclic words. The empty word has no cyclic class.
pub fn project_pi<C: Coeff>(p: &AssocPoly<C>) -> Result<CyclicPoly<C>> {
    let mut out = CyclicPoly::zero();
    for (w, c) in p.terms() {
        out.add_term(CyclicWord::new(*w)?, c.clone());
    }
    Ok(out)
}

fn pi_nonempty<C: Coeff>(p: &AssocPoly<C>) -> CyclicPoly<C> {
    let mut out = CyclicPoly::zero();
    for (w, c) in p.terms() {
        out.add_term(CyclicWord::of_nonempty(*w), c.clone());
    }
    out
}

/// Sum over all `n` rotations of each cyclic word of length `n`, with
/// multiplicity for periodic words.
pub fn sigma_lift<C: Coeff>(c: &CyclicPoly<C>) -> AssocPoly<C> {
    let mut out = AssocPoly::zero();
    for (cw, coeff) in c.terms() {
        let w = cw.canonical();
        for j in 0..w.len() {
            out.add_term(w.rotate_left(j), coeff.clone());
        }
    }
    out
}

/// `∂_A`: `AB ↦ B`, other words ↦ 0.
pub fn partial<C: Coeff>(p: &AssocPoly<C>, prefix: Word) -> Result<AssocPoly<C>> {
    if prefix.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(LinComb::from_terms(p.terms().filter_map(|(w, c)| w.strip_prefix(prefix).map(|b| (b, c.clone())))))
}

fn partial_letter<C: Coeff>(p: &AssocPoly<C>, l: Letter) -> AssocPoly<C> {
    partial(p, Word::letter(l)).expect("nonempty prefix")
}

fn delta_letter<C: Coeff>(c: &CyclicPoly<C>, l: Letter, mode: DeltaMode) -> Result<CyclicPoly<C>> {
    let doubled = Word::power(l, 2)?;
    let mut out = CyclicPoly::zero();
    for (cw, coeff) in c.terms() {
        let w = cw.canonical();
        for j in 0..w.len() {
            let u = w.rotate_left(j);
            let Some(rest) = u.strip_prefix(doubled) else { continue };
            let image = match mode {
                DeltaMode::Strip1 => rest.prepend(l).expect("shorter than input"),
                DeltaMode::Strip2 => rest,
            };
            out.add_term(CyclicWord::new(image)?, coeff.clone());
        }
    }
    Ok(out)
}

/// `Δ_Y = π ∘ ∂_YY ∘ Σ` (under `Strip2`), or its one-letter variant.
///
/// Fails only in `Strip2` mode on the classes `(YY)`, whose image would be
/// the empty word.
pub fn delta_y<C: Coeff>(c: &CyclicPoly<C>, mode: DeltaMode) -> Result<CyclicPoly<C>> {
    delta_letter(c, Letter::Y, mode)
}

pub fn delta_x<C: Coeff>(c: &CyclicPoly<C>, mode: DeltaMode) -> Result<CyclicPoly<C>> {
    delta_letter(c, Letter::X, mode)
}

pub fn delta<C: Coeff>(c: &CyclicPoly<C>, mode: DeltaMode) -> Result<CyclicPoly<C>> {
    Ok(&delta_x(c, mode)? + &delta_y(c, mode)?)
}

fn bracket_letter<C: Coeff>(a: &CyclicPoly<C>, b: &CyclicPoly<C>, l: Letter) -> CyclicPoly<C> {
    let da = partial_letter(&sigma_lift(a), l);
    let db = partial_letter(&sigma_lift(b), l);
    pi_nonempty(&da.letter_commutator(l).mul(&db))
}

/// `[A,B]_Y = π([Y, ∂_Y ΣA] · ∂_Y ΣB)`. Respects weight and depth.
pub fn bracket_y<C: Coeff>(a: &CyclicPoly<C>, b: &CyclicPoly<C>) -> CyclicPoly<C> {
    bracket_letter(a, b, Letter::Y)
}

pub fn bracket_x<C: Coeff>(a: &CyclicPoly<C>, b: &CyclicPoly<C>) -> CyclicPoly<C> {
    bracket_letter(a, b, Letter::X)
}

pub fn bracket_full<C: Coeff>(a: &CyclicPoly<C>, b: &CyclicPoly<C>) -> CyclicPoly<C> {
    &bracket_x(a, b) + &bracket_y(a, b)
}

/// Keeps the terms of depth (Y-count minus one) at least `d`.
pub fn project_depth_geq<C: Coeff>(c: &CyclicPoly<C>, d: i64) -> CyclicPoly<C> {
    let mut out = c.clone();
    out.retain(|cw| cw.depth() >= d);
    out
}
