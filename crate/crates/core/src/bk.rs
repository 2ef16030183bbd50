//! Truncated bivariate power series and the Broadhurst–Kreimer numbers.
//!
//! Series are in `s` (weight) and `t` (depth), truncated at `s`-degree
//! `max_weight`. The `t`-degree is bounded by the same number, which is
//! never reached by series whose every `t` carries at least one `s`.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub use crate::arith::moebius;

/// Series with coefficients `c[w][d]` of `s^w t^d`, `w, d ≤ max_weight`.
#[derive(Clone, Debug, PartialEq)]
pub struct BiSeries<T> {
    max_weight: usize,
    c: Vec<Vec<T>>,
}

pub type QSeries = BiSeries<BigRational>;

impl<T: Num + Clone + FromPrimitive> BiSeries<T> {
    pub fn zero(max_weight: usize) -> Self {
        BiSeries { max_weight, c: vec![vec![T::zero(); max_weight + 1]; max_weight + 1] }
    }

    pub fn one(max_weight: usize) -> Self {
        Self::monomial(max_weight, 0, 0, T::one())
    }

    /// `c·s^w t^d`, or zero beyond the truncation.
    pub fn monomial(max_weight: usize, w: usize, d: usize, c: T) -> Self {
        let mut out = Self::zero(max_weight);
        out.set(w, d, c);
        out
    }

    pub fn max_weight(&self) -> usize {
        self.max_weight
    }

    pub fn coeff(&self, w: usize, d: usize) -> T {
        if w > self.max_weight || d > self.max_weight {
            T::zero()
        } else {
            self.c[w][d].clone()
        }
    }

    /// Sets a coefficient; indices beyond the truncation are ignored.
    pub fn set(&mut self, w: usize, d: usize, c: T) {
        if w <= self.max_weight && d <= self.max_weight {
            self.c[w][d] = c;
        }
    }

    /// Nonzero coefficients in `(w, d)` order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &T)> {
        self.c.iter().enumerate().flat_map(|(w, row)| {
            row.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(d, c)| (w, d, c))
        })
    }

    /// Whether every nonzero term has `d ≤ w`.
    pub fn is_triangular(&self) -> bool {
        self.terms().all(|(w, d, _)| d <= w)
    }

    pub fn scale(&self, k: &T) -> Self {
        let c = self.c.iter().map(|row| row.iter().map(|x| x.clone() * k.clone()).collect()).collect();
        BiSeries { max_weight: self.max_weight, c }
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(T, T) -> T) -> Self {
        assert_eq!(self.max_weight, rhs.max_weight, "truncation orders differ");
        let c = self
            .c
            .iter()
            .zip(&rhs.c)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| f(x.clone(), y.clone())).collect())
            .collect();
        BiSeries { max_weight: self.max_weight, c }
    }

    /// `t`-polynomial `a·b` added into `out`, truncated.
    fn mul_t_into(out: &mut [T], a: &[T], b: &[T], k: &T) {
        let n = out.len();
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let xk = x.clone() * k.clone();
            for (j, y) in b.iter().enumerate().take(n - i) {
                if !y.is_zero() {
                    out[i + j] = out[i + j].clone() + xk.clone() * y.clone();
                }
            }
        }
    }

    fn check_unit_s0(&self, want: T) -> Result<()> {
        let ok = self.c[0].iter().enumerate().all(|(d, x)| if d == 0 { *x == want } else { x.is_zero() });
        if ok {
            Ok(())
        } else {
            Err(Error::BadConstantTerm)
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.max_weight, rhs.max_weight, "truncation orders differ");
        let n = self.max_weight;
        let mut out = Self::zero(n);
        let one = T::one();
        for i in 0..=n {
            for j in 0..=n - i {
                Self::mul_t_into(&mut out.c[i + j], &self.c[i], &rhs.c[j], &one);
            }
        }
        out
    }

    /// Multiplicative inverse; the `s^0` part must be exactly 1.
    pub fn inv(&self) -> Result<Self> {
        self.check_unit_s0(T::one())?;
        let n = self.max_weight;
        let mut out = Self::one(n);
        let minus = T::zero() - T::one();
        for w in 1..=n {
            let mut acc = vec![T::zero(); n + 1];
            for j in 1..=w {
                Self::mul_t_into(&mut acc, &self.c[j], &out.c[w - j], &minus);
            }
            out.c[w] = acc;
        }
        Ok(out)
    }

    /// Logarithm, from `w·h_w = w·f_w - Σ_{j<w} j·h_j·f_{w-j}` with `f_0 = 1`.
    pub fn log(&self) -> Result<Self> {
        self.check_unit_s0(T::one())?;
        let n = self.max_weight;
        let mut h = Self::zero(n);
        for w in 1..=n {
            let wt = T::from_usize(w).expect("small integer");
            let mut acc: Vec<T> = self.c[w].iter().map(|x| x.clone() * wt.clone()).collect();
            for j in 1..w {
                let k = T::zero() - T::from_usize(j).expect("small integer");
                Self::mul_t_into(&mut acc, &h.c[j], &self.c[w - j], &k);
            }
            h.c[w] = acc.into_iter().map(|x| x / wt.clone()).collect();
        }
        Ok(h)
    }

    /// Exponential, from `w·e_w = Σ_{j≤w} j·h_j·e_{w-j}`; the `s^0` part must vanish.
    pub fn exp(&self) -> Result<Self> {
        self.check_unit_s0(T::zero())?;
        let n = self.max_weight;
        let mut e = Self::one(n);
        for w in 1..=n {
            let wt = T::from_usize(w).expect("small integer");
            let mut acc = vec![T::zero(); n + 1];
            for j in 1..=w {
                let k = T::from_usize(j).expect("small integer");
                Self::mul_t_into(&mut acc, &self.c[j], &e.c[w - j], &k);
            }
            e.c[w] = acc.into_iter().map(|x| x / wt.clone()).collect();
        }
        Ok(e)
    }

    /// `f(s^ℓ, t^ℓ)`, truncated.
    pub fn substitute_power(&self, l: usize) -> Self {
        assert!(l >= 1);
        let mut out = Self::zero(self.max_weight);
        for (w, d, c) in self.terms() {
            out.set(w * l, d * l, c.clone());
        }
        out
    }

    /// Geometric series `1/(1 - self)`; the `s^0` part must vanish.
    pub fn geometric(&self) -> Result<Self> {
        self.check_unit_s0(T::zero())?;
        (&Self::one(self.max_weight) - self).inv()
    }
}

impl<T: Num + Clone + FromPrimitive> Add for &BiSeries<T> {
    type Output = BiSeries<T>;
    fn add(self, rhs: Self) -> BiSeries<T> {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl<T: Num + Clone + FromPrimitive> Sub for &BiSeries<T> {
    type Output = BiSeries<T>;
    fn sub(self, rhs: Self) -> BiSeries<T> {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl<T: Num + Clone + FromPrimitive> Mul for &BiSeries<T> {
    type Output = BiSeries<T>;
    fn mul(self, rhs: Self) -> BiSeries<T> {
        BiSeries::mul(self, rhs)
    }
}

impl<T: Num + Clone + FromPrimitive> Neg for &BiSeries<T> {
    type Output = BiSeries<T>;
    fn neg(self) -> BiSeries<T> {
        self.scale(&(T::zero() - T::one()))
    }
}

/// `Σ_ℓ μ(ℓ)/ℓ · log f(s^ℓ, t^ℓ)`.
pub fn plethystic_log<T: Num + Clone + FromPrimitive>(f: &BiSeries<T>) -> Result<BiSeries<T>> {
    let log = f.log()?;
    let n = f.max_weight();
    let mut out = BiSeries::zero(n);
    for l in 1..=n.max(1) {
        let mu = moebius(l as u64);
        if mu == 0 {
            continue;
        }
        let k = T::from_i8(mu).expect("small integer") / T::from_usize(l).expect("small integer");
        out = &out + &log.substitute_power(l).scale(&k);
    }
    Ok(out)
}

/// `1/(1 - s³t/(1-s²) + s¹²(t²-t⁴)/((1-s⁴)(1-s⁶)))`.
///
/// The cusp term enters with a plus sign: depth 2 loses one element in
/// weight 12 and depth 4 gains one, so that `BK_{12,2} = BK_{12,4} = 1`.
pub fn bk_argument(max_weight: usize) -> Result<QSeries> {
    let n = max_weight;
    let q = |k: i64| BigRational::from_i64(k).expect("small integer");
    let m = |w, d, k| QSeries::monomial(n, w, d, q(k));
    let one = QSeries::one(n);
    let odd = &m(3, 1, 1) * &(&one - &m(2, 0, 1)).inv()?;
    let denom = &(&one - &m(4, 0, 1)) * &(&one - &m(6, 0, 1));
    let cusp = &(&m(12, 2, 1) - &m(12, 4, 1)) * &denom.inv()?;
    (&odd - &cusp).geometric()
}

/// The Broadhurst–Kreimer numbers `BK_{W,D}` for `1 ≤ D ≤ W ≤ max_weight`.
pub fn bk_table(max_weight: usize) -> Result<BTreeMap<(usize, usize), u64>> {
    if max_weight < 3 {
        return Err(Error::OutOfRange(format!("bk table needs max weight >= 3, got {max_weight}")));
    }
    let series = plethystic_log(&bk_argument(max_weight)?)?;
    if !series.is_triangular() {
        return Err(Error::InvariantViolation("BK series has a term with D > W".into()));
    }
    let mut table = BTreeMap::new();
    for w in 1..=max_weight {
        for d in 1..=w {
            let c = series.coeff(w, d);
            if !c.is_integer() {
                return Err(Error::NonIntegral { w, d, value: c.to_string() });
            }
            let value = c.to_integer().to_u64().ok_or_else(|| Error::NonIntegral { w, d, value: c.to_string() })?;
            table.insert((w, d), value);
        }
        if !series.coeff(w, 0).is_zero() {
            return Err(Error::InvariantViolation(format!("BK series has a depth-0 term in weight {w}")));
        }
    }
    Ok(table)
}

/// `Σ_D BK_{W,D}`: the dimension of the free Lie algebra on the BK generators in weight `W`.
pub fn free_lie_weight_dim(w: usize) -> Result<u64> {
    let table = bk_table(w.max(3))?;
    Ok(table.range((w, 0)..=(w, w)).map(|(_, v)| v).sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn moebius_examples() {
        assert_eq!(moebius(1), 1);
        assert_eq!(moebius(4), 0);
        assert_eq!(moebius(6), 1);
        assert_eq!(moebius(7), -1);
    }

    #[test]
    fn geometric_and_log() {
        let n = 12;
        let s = QSeries::monomial(n, 1, 0, q(1, 1));
        let inv = (&QSeries::one(n) - &s).inv().unwrap();
        for k in 0..=n {
            assert_eq!(inv.coeff(k, 0), q(1, 1));
        }
        let log = inv.log().unwrap();
        for k in 1..=n {
            assert_eq!(log.coeff(k, 0), q(1, k as i64));
        }
        assert!(s.inv().is_err());
        assert!(matches!(QSeries::monomial(n, 0, 1, q(1, 1)).log(), Err(Error::BadConstantTerm)));
    }

    #[test]
    fn plethystic_log_examples() {
        let n = 15;
        let s = QSeries::monomial(n, 1, 0, q(1, 1));
        assert_eq!(plethystic_log(&s.geometric().unwrap()).unwrap(), s);
        let st = QSeries::monomial(n, 1, 1, q(1, 1));
        assert_eq!(plethystic_log(&st.geometric().unwrap()).unwrap(), st);
        let bk = plethystic_log(&bk_argument(n).unwrap()).unwrap();
        assert_eq!(bk.coeff(3, 1), q(1, 1));
    }

    #[test]
    fn exp_inverts_log() {
        let n = 20;
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut f = QSeries::one(n);
        for _ in 0..12 {
            let w = rng.random_range(1..=n);
            let d = rng.random_range(0..=w);
            f.set(w, d, q(rng.random_range(-4..=4), rng.random_range(1..=3)));
        }
        assert_eq!(f.log().unwrap().exp().unwrap(), f);
    }

    #[test]
    fn table_examples() {
        let t = bk_table(30).unwrap();
        assert_eq!(t[&(3, 1)], 1);
        assert_eq!(t[&(8, 2)], 1);
        assert_eq!(t[&(12, 4)], 1);
        assert_eq!(t[&(29, 3)], 14);
        assert_eq!(t[&(30, 6)], 73);
        assert_eq!(t[&(6, 1)], 0);
        assert!(bk_table(2).is_err());
    }

    #[test]
    fn weight_dims() {
        assert_eq!(free_lie_weight_dim(3).unwrap(), 1);
        assert_eq!(free_lie_weight_dim(11).unwrap(), 2);
        assert_eq!(free_lie_weight_dim(12).unwrap(), 2);
    }

    #[test]
    fn odd_generators_agree_below_twelve() {
        let n = 11;
        let mut g = QSeries::zero(n);
        for k in (3..=n).step_by(2) {
            g.set(k, 1, q(1, 1));
        }
        let odd = plethystic_log(&g.geometric().unwrap()).unwrap();
        let t = bk_table(n).unwrap();
        for ((w, d), v) in t {
            assert_eq!(odd.coeff(w, d), q(v as i64, 1), "({w},{d})");
        }
    }
}
